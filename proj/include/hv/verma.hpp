#pragma once

#include "hv/algebra.hpp"
#include "hv/order.hpp"

#include <map>
#include <vector>

namespace hv {

/// Scalars by which K_1..K_4 act on the highest-weight vector.
struct CentralCharge {
    Rat c1, c2, c3, c4;

    const Rat& operator[](int i) const {
        switch (i) {
            case 1: return c1;
            case 2: return c2;
            case 3: return c3;
            default: return c4;
        }
    }
    /// a(1)c1 + a(2)c2, the scalar by which h(a) acts.
    Rat pair_h(GroupElement a) const { return rat(a.x) * c1 + rat(a.y) * c2; }
    /// a(1)c3 + a(2)c4, the scalar by which f(a) acts.
    Rat pair_f(GroupElement a) const { return rat(a.x) * c3 + rat(a.y) * c4; }

    friend bool operator==(const CentralCharge&, const CentralCharge&) = default;
};

/// Normal-form basis monomial t^{-a_1}..t^{-a_m} E(-b_1)..E(-b_n) v, with
/// 0 < a_1 <= .. <= a_m and 0 < b_1 <= .. <= b_n under the module's order.
/// Stores the positive exponents; the empty monomial is the highest-weight
/// vector itself.
struct PBWMonomial {
    std::vector<GroupElement> t; // ascending under the order
    std::vector<GroupElement> e; // ascending under the order

    bool empty() const { return t.empty() && e.empty(); }
    size_t length() const { return t.size() + e.size(); }

    GroupElement degree() const {
        GroupElement s{0, 0};
        for (auto a : t) s = s + a;
        for (auto b : e) s = s + b;
        return -s;
    }

    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
    // Structural order, independent of the module's order spec; used only
    // to key term maps and to fix a deterministic serialization order.
    friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;

    std::string str() const;
};

/// Finite rational linear combination of basis monomials of the Verma
/// module M(c, order); immutable in spirit, canonical (no zero terms).
class ModuleVector {
public:
    using Terms = std::map<PBWMonomial, Rat>;

    ModuleVector(OrderSpec order, CentralCharge charge)
        : order_(std::move(order)), charge_(std::move(charge)) {}

    /// The highest-weight vector v itself.
    static ModuleVector unit(const OrderSpec& order, const CentralCharge& charge) {
        ModuleVector v(order, charge);
        v.add(PBWMonomial{}, 1);
        return v;
    }

    const OrderSpec& order() const { return order_; }
    const CentralCharge& charge() const { return charge_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const PBWMonomial& m, const Rat& c) {
        if (sgn(c) == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    ModuleVector& operator+=(const ModuleVector& o);
    ModuleVector& operator-=(const ModuleVector& o);
    ModuleVector& operator*=(const Rat& c);
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const Rat& c, ModuleVector a) { return a *= c; }

    friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
        return a.terms_ == b.terms_;
    }

    /// Coefficient of the highest-weight vector (zero if absent).
    Rat unit_coefficient() const {
        auto it = terms_.find(PBWMonomial{});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// True when the vector is a scalar multiple of the highest-weight vector.
    bool is_multiple_of_unit() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    bool homogeneous(GroupElement* deg_out = nullptr) const;

    std::string str() const;

private:
    OrderSpec order_;
    CentralCharge charge_;
    Terms terms_;
};

/// Left action of a generator, with the result in canonical form. The
/// contract is recursive: central generators scale, negative generators
/// multiply and re-sort (PBW rewriting), positive generators commute past
/// factors via brackets and annihilate the highest-weight vector.
ModuleVector act(const Generator& g, const ModuleVector& v);

/// Linear extension of act to Lie elements.
ModuleVector act_elem(const LieElement& x, const ModuleVector& v);

/// Fold a word over the highest-weight vector, rightmost generator first;
/// word[0] is the outermost operator.
ModuleVector normal_order(const std::vector<Generator>& word, const CentralCharge& charge,
                          const OrderSpec& order);

/// Split into homogeneous components keyed by degree; components sum to v.
std::map<GroupElement, ModuleVector> grade(const ModuleVector& v);

/// All normal-form monomials of the given degree whose exponents lie in
/// positive_window(window) and whose factor count is at most maxlen,
/// in deterministic (structural) order. Degree must be <= 0.
std::vector<PBWMonomial> enumerate_basis(const OrderSpec& order, GroupElement degree,
                                         long long window, int maxlen);

} // namespace hv
