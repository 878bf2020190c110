#pragma once

#include "hv/group.hpp"
#include "hv/rational.hpp"

#include <array>
#include <set>
#include <vector>

namespace hv {

enum class Ordering { Less, Equal, Greater };

inline Ordering flip(Ordering o) {
    if (o == Ordering::Less) return Ordering::Greater;
    if (o == Ordering::Greater) return Ordering::Less;
    return Ordering::Equal;
}

/// A compatible total order on Z^2. Two parametric families:
///   dense    — alpha > 0 iff alpha(1) + theta*alpha(2) > 0 for the
///              irrational theta = u + v*sqrt(d), v != 0, d a positive
///              non-square integer; comparisons are exact sign
///              computations on r + s*sqrt(d).
///   discrete — alpha > 0 iff m*alpha is lexicographically positive
///              ((x,y) > 0 iff y > 0, or y = 0 and x > 0) for a fixed
///              unimodular integer matrix m; the smallest positive
///              element is eps = m^{-1}*(1,0).
class OrderSpec {
public:
    enum class Kind { Dense, Discrete };

    static OrderSpec dense(const Rat& u, const Rat& v, long long d);
    static OrderSpec discrete(const std::array<long long, 4>& m); // row-major

    static OrderSpec lex() { return discrete({1, 0, 0, 1}); }
    static OrderSpec sqrt2() { return dense(0, 1, 2); }

    Kind kind() const { return kind_; }
    bool is_dense() const { return kind_ == Kind::Dense; }

    const Rat& theta_u() const { return u_; }
    const Rat& theta_v() const { return v_; }
    long long theta_d() const { return d_; }
    const std::array<long long, 4>& matrix() const { return m_; }

    Ordering compare(GroupElement a, GroupElement b) const;
    bool less(GroupElement a, GroupElement b) const { return compare(a, b) == Ordering::Less; }
    bool leq(GroupElement a, GroupElement b) const { return compare(a, b) != Ordering::Greater; }
    bool positive(GroupElement a) const { return compare(a, {0, 0}) == Ordering::Greater; }
    bool negative(GroupElement a) const { return compare(a, {0, 0}) == Ordering::Less; }

    GroupElement min(GroupElement a, GroupElement b) const { return leq(a, b) ? a : b; }
    GroupElement max(GroupElement a, GroupElement b) const { return leq(a, b) ? b : a; }

    /// Smallest positive element; discrete orders only.
    GroupElement epsilon() const;
    /// Second basis vector eps' = m^{-1}*(0,1); discrete orders only.
    GroupElement epsilon_prime() const;
    /// Coordinates (a[1], a[2]) with a = a[1]*eps + a[2]*eps'; discrete only.
    std::array<long long, 2> coords(GroupElement a) const;
    /// Whether a lies on the Z*eps line; discrete only.
    bool collinear_eps(GroupElement a) const { return coords(a)[1] == 0; }

    friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

private:
    OrderSpec() = default;

    Kind kind_ = Kind::Discrete;
    Rat u_, v_;        // dense: theta = u + v*sqrt(d)
    long long d_ = 0;
    std::array<long long, 4> m_{1, 0, 0, 1};
};

/// Comparator adapting an OrderSpec for std::sort and ordered containers.
struct OrderLess {
    const OrderSpec* o;
    bool operator()(GroupElement a, GroupElement b) const { return o->less(a, b); }
};

/// mu(a): the order-minimal element of D(a) = {b > 0 : m*b = a}; equals
/// a / gcd(|a(1)|,|a(2)|). Requires a > 0.
GroupElement mu(const OrderSpec& o, GroupElement a);

/// All positive gamma with max(|gamma(1)|,|gamma(2)|) <= w, ascending.
std::vector<GroupElement> positive_window(const OrderSpec& o, long long w);

/// Least n >= 1 with n*a > b. Dense orders only (Z*eps lines in discrete
/// orders would never terminate); requires a > 0, b > 0.
long long archimedean_n(const OrderSpec& o, GroupElement a, GroupElement b);

/// First gamma in growing-window scan order with a < gamma < b and
/// det2(b, gamma) != 0. Dense orders; 0 <= a < b (a may be the origin).
GroupElement choose_between(const OrderSpec& o, GroupElement a, GroupElement b);

/// First gamma in scan order with 0 < gamma < bound, gamma not forbidden.
/// Dense orders; bound > 0.
GroupElement choose_small(const OrderSpec& o, GroupElement bound,
                          const std::set<GroupElement>& forbidden);

/// Sequence order: pad the shorter list on the left with (0,0), then the
/// highest index (from the right) where the entries differ decides.
Ordering compare_sequences(const OrderSpec& o, const std::vector<GroupElement>& s,
                           const std::vector<GroupElement>& t);

} // namespace hv
