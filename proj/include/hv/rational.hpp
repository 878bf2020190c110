#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hv {

using Rat = mpq_class;

/// Exact integer-to-rational conversion (gmpxx lacks long long overloads;
/// long is 64-bit on every supported platform).
inline Rat rat(long long n) {
    return Rat(static_cast<long>(n));
}

inline Rat rat(long long num, long long den) {
    Rat q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

/// Parse "p" or "p/q" into an exact rational. Throws on malformed input
/// (empty string, zero denominator, stray characters).
inline Rat rat_from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    for (char c : s)
        if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("malformed rational literal: " + s);
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

/// Lowest terms, positive denominator; "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

inline int sgn(const Rat& q) {
    return ::sgn(q);
}

} // namespace hv
