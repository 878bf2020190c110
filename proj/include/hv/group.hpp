#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

namespace hv {

/// A point of the grading lattice Z^2.
struct GroupElement {
    long long x = 0; // first coordinate
    long long y = 0; // second coordinate

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

    GroupElement operator+(GroupElement o) const { return {x + o.x, y + o.y}; }
    GroupElement operator-(GroupElement o) const { return {x - o.x, y - o.y}; }
    GroupElement operator-() const { return {-x, -y}; }
    GroupElement operator*(long long k) const { return {k * x, k * y}; }

    bool is_zero() const { return x == 0 && y == 0; }

    std::string str() const {
        return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
};

inline GroupElement operator*(long long k, GroupElement a) { return a * k; }

/// det(a over b) = a(1)b(2) - b(1)a(2), a in the upper slot.
/// Antisymmetric and bilinear; zero exactly on rationally collinear pairs.
inline long long det2(GroupElement a, GroupElement b) {
    return a.x * b.y - b.x * a.y;
}

inline bool collinear(GroupElement a, GroupElement b) {
    return det2(a, b) == 0;
}

/// a / gcd(|x|,|y|) for a != 0; the primitive lattice vector along a.
inline GroupElement primitive_part(GroupElement a) {
    long long g = std::gcd(a.x < 0 ? -a.x : a.x, a.y < 0 ? -a.y : a.y);
    return {a.x / g, a.y / g};
}

} // namespace hv

template <>
struct std::hash<hv::GroupElement> {
    size_t operator()(const hv::GroupElement& a) const {
        return std::hash<long long>()(a.x * 0x9e3779b97f4a7c15LL ^ a.y);
    }
};
