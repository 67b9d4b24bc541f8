#include "chshq/prime_field.hpp"

namespace chshq {

namespace {

constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 62;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Strong-pseudoprime check for a single witness; n odd, n - 1 = d * 2^r.
bool composite_for_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Deterministic for n < 3.3 * 10^24 (Sorenson & Webster), so for the
    // whole uint64 range.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (composite_for_witness(n, a, d, r)) return false;
    }
    return true;
}

std::uint64_t icbrt(std::uint64_t n) {
    std::uint64_t lo = 0, hi = 2642245;  // icbrt(2^64 - 1)
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        unsigned __int128 cube = static_cast<unsigned __int128>(mid) * mid * mid;
        if (cube <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::uint64_t icbrt_u128(unsigned __int128 n) {
    std::uint64_t lo = 0, hi = std::uint64_t{1} << 43;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        // mid^3 <= n  <=>  mid^2 <= floor(n / mid); avoids 128-bit overflow.
        unsigned __int128 sq = static_cast<unsigned __int128>(mid) * mid;
        if (sq <= n / mid)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
    if (p >= kModulusLimit)
        throw std::invalid_argument("modulus must be below 2^62");
    if (!is_prime(p))
        throw std::invalid_argument("modulus must be prime");
}

FieldElement fadd(FieldElement a, FieldElement b, PrimeModulus p) {
    std::uint64_t s = a + b;  // < 2^63, no overflow
    return s >= p.value() ? s - p.value() : s;
}

FieldElement fsub(FieldElement a, FieldElement b, PrimeModulus p) {
    return a >= b ? a - b : a + p.value() - b;
}

FieldElement fmul(FieldElement a, FieldElement b, PrimeModulus p) {
    return mulmod(a, b, p.value());
}

FieldElement fneg(FieldElement a, PrimeModulus p) {
    return a == 0 ? 0 : p.value() - a;
}

FieldElement finv(FieldElement a, PrimeModulus p) {
    if (a == 0) throw NonInvertibleError();
    // Extended Euclid; coefficients stay below p, so int64 suffices for p < 2^62.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p.value());
    std::int64_t new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p.value());
    return static_cast<std::uint64_t>(t);
}

}  // namespace chshq
