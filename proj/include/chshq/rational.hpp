#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chshq {

/// Exact nonnegative rational. Bound values and win probabilities are kept
/// in this form; comparisons cross-multiply in 128 bits so no threshold is
/// ever rounded through a double.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

inline Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
    if (num < 0) throw std::invalid_argument("rational must be nonnegative");
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    return Rational{num / g, den / g};
}

inline Rational rational_add(Rational a, Rational b) {
    __int128 num = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
    __int128 den = static_cast<__int128>(a.den) * b.den;
    __int128 g = den;
    // gcd in 128 bits, then the reduced value must fit back into int64.
    __int128 x = num < 0 ? -num : num;
    while (x != 0) {
        __int128 t = g % x;
        g = x;
        x = t;
    }
    if (g == 0) g = 1;
    num /= g;
    den /= g;
    if (num > INT64_MAX || den > INT64_MAX)
        throw std::overflow_error("rational sum exceeds 64-bit range");
    return Rational{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

inline bool operator==(Rational a, Rational b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
}
inline bool operator!=(Rational a, Rational b) { return !(a == b); }
inline bool operator<(Rational a, Rational b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}
inline bool operator<=(Rational a, Rational b) { return a < b || a == b; }

/// count < r, exact.
inline bool int_less_than(std::uint64_t count, Rational r) {
    return static_cast<__int128>(count) * r.den < static_cast<__int128>(r.num);
}

/// count >= r, exact.
inline bool int_at_least(std::uint64_t count, Rational r) { return !int_less_than(count, r); }

inline double to_double(Rational r) {
    return static_cast<double>(r.num) / static_cast<double>(r.den);
}

inline std::string to_string(Rational r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace chshq
