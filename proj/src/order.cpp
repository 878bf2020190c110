#include "hv/order.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hv {

namespace {

bool is_square(long long d) {
    if (d < 0) return false;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(d)));
    for (long long k = std::max(0LL, r - 2); k <= r + 2; ++k)
        if (k * k == d) return true;
    return false;
}

/// Exact sign of r + s*sqrt(d), d a positive non-square integer.
int sign_r_plus_s_sqrt_d(const Rat& r, const Rat& s, long long d) {
    int sr = sgn(r), ss = sgn(s);
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    // Opposite signs: the sign is decided by r^2 vs d*s^2. Equality would
    // make sqrt(d) rational, impossible for non-square d with s != 0.
    Rat r2 = r * r;
    Rat ds2 = s * s * rat(d);
    int c = cmp(r2, ds2);
    if (c == 0) throw std::logic_error("d must be non-square");
    return sr > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
}

} // namespace

OrderSpec OrderSpec::dense(const Rat& u, const Rat& v, long long d) {
    if (sgn(v) == 0)
        throw std::invalid_argument("theta must be irrational: v must be nonzero");
    if (d <= 0 || is_square(d))
        throw std::invalid_argument("theta must be irrational: d must be a positive non-square");
    OrderSpec o;
    o.kind_ = Kind::Dense;
    o.u_ = u;
    o.v_ = v;
    o.d_ = d;
    return o;
}

OrderSpec OrderSpec::discrete(const std::array<long long, 4>& m) {
    long long det = m[0] * m[3] - m[1] * m[2];
    if (det != 1 && det != -1)
        throw std::invalid_argument("discrete order matrix must be unimodular");
    OrderSpec o;
    o.kind_ = Kind::Discrete;
    o.m_ = m;
    return o;
}

Ordering OrderSpec::compare(GroupElement a, GroupElement b) const {
    GroupElement s = a - b;
    if (s.is_zero()) return Ordering::Equal;
    if (kind_ == Kind::Dense) {
        // sign of s.x + theta*s.y with theta = u + v*sqrt(d)
        Rat r = u_ * rat(s.y) + rat(s.x);
        Rat sq = v_ * rat(s.y);
        int sg = sign_r_plus_s_sqrt_d(r, sq, d_);
        return sg > 0 ? Ordering::Greater : Ordering::Less;
    }
    long long wx = m_[0] * s.x + m_[1] * s.y;
    long long wy = m_[2] * s.x + m_[3] * s.y;
    bool pos = wy > 0 || (wy == 0 && wx > 0);
    return pos ? Ordering::Greater : Ordering::Less;
}

GroupElement OrderSpec::epsilon() const {
    if (kind_ != Kind::Discrete)
        throw std::domain_error("epsilon is defined only for discrete orders");
    long long det = m_[0] * m_[3] - m_[1] * m_[2];
    // m^{-1} = (1/det) [[m11, -m01], [-m10, m00]]
    return {m_[3] / det, -m_[2] / det};
}

GroupElement OrderSpec::epsilon_prime() const {
    if (kind_ != Kind::Discrete)
        throw std::domain_error("epsilon_prime is defined only for discrete orders");
    long long det = m_[0] * m_[3] - m_[1] * m_[2];
    return {-m_[1] / det, m_[0] / det};
}

std::array<long long, 2> OrderSpec::coords(GroupElement a) const {
    if (kind_ != Kind::Discrete)
        throw std::domain_error("eps-coordinates are defined only for discrete orders");
    return {m_[0] * a.x + m_[1] * a.y, m_[2] * a.x + m_[3] * a.y};
}

GroupElement mu(const OrderSpec& o, GroupElement a) {
    if (!o.positive(a))
        throw std::domain_error("mu requires a positive argument");
    // Scaling by 1/m scales the order functional monotonically in both
    // families, so the minimum of D(a) is the primitive vector.
    return primitive_part(a);
}

std::vector<GroupElement> positive_window(const OrderSpec& o, long long w) {
    std::vector<GroupElement> out;
    for (long long x = -w; x <= w; ++x)
        for (long long y = -w; y <= w; ++y) {
            GroupElement g{x, y};
            if (!g.is_zero() && o.positive(g)) out.push_back(g);
        }
    std::sort(out.begin(), out.end(), OrderLess{&o});
    return out;
}

long long archimedean_n(const OrderSpec& o, GroupElement a, GroupElement b) {
    if (!o.is_dense())
        throw std::domain_error("archimedean_n requires a dense order");
    if (!o.positive(a) || !o.positive(b))
        throw std::domain_error("archimedean_n requires positive arguments");
    for (long long n = 1;; ++n)
        if (o.compare(a * n, b) == Ordering::Greater) return n;
}

namespace {
constexpr long long kScanCap = 4096; // growth cap for window scans

template <typename Pred>
GroupElement window_scan(const OrderSpec& o, Pred&& ok) {
    for (long long w = 1; w <= kScanCap; w *= 2)
        for (GroupElement g : positive_window(o, w))
            if (ok(g)) return g;
    throw std::runtime_error("window scan exhausted; selection should exist for dense orders");
}
} // namespace

GroupElement choose_between(const OrderSpec& o, GroupElement a, GroupElement b) {
    if (!o.is_dense())
        throw std::domain_error("choose_between requires a dense order");
    if (!o.positive(b) || o.compare(a, b) != Ordering::Less || o.negative(a))
        throw std::domain_error("choose_between requires 0 <= a < b");
    return window_scan(o, [&](GroupElement g) {
        return o.less(a, g) && o.less(g, b) && det2(b, g) != 0;
    });
}

GroupElement choose_small(const OrderSpec& o, GroupElement bound,
                          const std::set<GroupElement>& forbidden) {
    if (!o.is_dense())
        throw std::domain_error("choose_small requires a dense order");
    if (!o.positive(bound))
        throw std::domain_error("choose_small requires a positive bound");
    return window_scan(o, [&](GroupElement g) {
        return o.less(g, bound) && !forbidden.count(g);
    });
}

Ordering compare_sequences(const OrderSpec& o, const std::vector<GroupElement>& s,
                           const std::vector<GroupElement>& t) {
    size_t n = std::max(s.size(), t.size());
    auto entry = [n](const std::vector<GroupElement>& v, size_t i) {
        // index i counts from the right; left-padding with the identity
        size_t pad = n - v.size();
        return i < pad ? GroupElement{0, 0} : v[i - pad];
    };
    for (size_t i = n; i-- > 0;) {
        Ordering c = o.compare(entry(s, i), entry(t, i));
        if (c != Ordering::Equal) return c;
    }
    return Ordering::Equal;
}

} // namespace hv
