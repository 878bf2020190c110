#pragma once

#include "hv/group.hpp"
#include "hv/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hv {

/// Basis element of the rank-two Heisenberg-Virasoro algebra:
/// t^alpha and E(alpha) for nonzero alpha in Z^2, plus the four central
/// elements K_1..K_4.
struct Generator {
    enum class Kind { T, E, K };

    Kind kind = Kind::K;
    GroupElement alpha{};
    int k = 0; // central index, 1..4

    static Generator t(GroupElement a) {
        if (a.is_zero()) throw std::invalid_argument("t^alpha requires alpha != 0");
        return {Kind::T, a, 0};
    }
    static Generator e(GroupElement a) {
        if (a.is_zero()) throw std::invalid_argument("E(alpha) requires alpha != 0");
        return {Kind::E, a, 0};
    }
    static Generator central(int i) {
        if (i < 1 || i > 4) throw std::invalid_argument("central index must be 1..4");
        return {Kind::K, {0, 0}, i};
    }

    /// Z^2-degree: t^a, E(a) -> a; K_i -> 0.
    GroupElement degree() const { return alpha; }

    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;

    std::string str() const {
        switch (kind) {
            case Kind::T: return "t^" + alpha.str();
            case Kind::E: return "E" + alpha.str();
            default: return "K" + std::to_string(k);
        }
    }
};

/// Finite rational linear combination of generators, kept in canonical
/// form: no zero coefficients, terms keyed by generator.
class LieElement {
public:
    using Terms = std::map<Generator, Rat>;

    LieElement() = default;
    explicit LieElement(Generator g, Rat c = 1) { add(g, c); }

    static LieElement zero() { return {}; }

    void add(Generator g, const Rat& c) {
        if (sgn(c) == 0) return;
        auto [it, fresh] = terms_.emplace(g, c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    LieElement& operator+=(const LieElement& o) {
        for (const auto& [g, c] : o.terms_) add(g, c);
        return *this;
    }
    LieElement& operator-=(const LieElement& o) {
        for (const auto& [g, c] : o.terms_) add(g, -c);
        return *this;
    }
    LieElement& operator*=(const Rat& c) {
        if (sgn(c) == 0) { terms_.clear(); return *this; }
        for (auto& [g, v] : terms_) v *= c;
        return *this;
    }

    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Rat& c, LieElement a) { return a *= c; }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    friend bool operator==(const LieElement&, const LieElement&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [g, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += rat_to_string(c) + "*" + g.str();
        }
        return s;
    }

private:
    Terms terms_;
};

/// Bracket of two basis generators:
///   [t^a, t^b] = 0,  [K_i, -] = 0,
///   [t^a, E(b)] = det(b over a) t^{a+b} + delta_{a+b,0} h(a),
///   [E(a), E(b)] = det(b over a) E(a+b) + delta_{a+b,0} f(a),
/// with h(a) = a(1)K_1 + a(2)K_2 and f(a) = a(1)K_3 + a(2)K_4. When
/// a+b = 0 the determinant coefficient vanishes automatically, so the
/// degree-zero symbol t^0 / E(0) never arises.
LieElement bracket(const Generator& x, const Generator& y);

/// Bilinear extension of the generator bracket.
LieElement bracket(const LieElement& x, const LieElement& y);

} // namespace hv
