#include "hv/algebra.hpp"

#include <cassert>

namespace hv {

namespace {

LieElement h_of(GroupElement a) {
    LieElement out;
    out.add(Generator::central(1), rat(a.x));
    out.add(Generator::central(2), rat(a.y));
    return out;
}

LieElement f_of(GroupElement a) {
    LieElement out;
    out.add(Generator::central(3), rat(a.x));
    out.add(Generator::central(4), rat(a.y));
    return out;
}

} // namespace

LieElement bracket(const Generator& x, const Generator& y) {
    using K = Generator::Kind;
    if (x.kind == K::K || y.kind == K::K) return {};
    if (x.kind == K::T && y.kind == K::T) return {};
    if (x.kind == K::E && y.kind == K::T) {
        LieElement out = bracket(y, x);
        out *= Rat(-1);
        return out;
    }

    GroupElement a = x.alpha, b = y.alpha;
    long long c = det2(b, a); // det(b over a)
    GroupElement s = a + b;
    LieElement out;
    if (s.is_zero()) {
        assert(c == 0 && "collinear arguments must carry a zero determinant");
        out += (x.kind == K::T) ? h_of(a) : f_of(a);
        return out;
    }
    if (c != 0)
        out.add(x.kind == K::T ? Generator::t(s) : Generator::e(s), rat(c));
    return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    LieElement out;
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms()) {
            LieElement b = bracket(gx, gy);
            b *= cx * cy;
            out += b;
        }
    return out;
}

} // namespace hv
