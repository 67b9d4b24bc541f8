#pragma once

#include <cstdint>
#include <stdexcept>

namespace chshq {

/// Canonical residue in [0, p). Canonicality is a contract of every
/// operation below, not a wrapper-enforced property.
using FieldElement = std::uint64_t;

/// Thrown by finv(0, p).
class NonInvertibleError : public std::domain_error {
public:
    NonInvertibleError() : std::domain_error("0 has no multiplicative inverse") {}
};

/// Deterministic primality test, exact for all n < 2^62 (the witness set
/// {2,3,5,7,...,37} is known correct far beyond 2^64).
bool is_prime(std::uint64_t n);

/// Largest t with t^3 <= n. Pure integer binary search; floating point is
/// never consulted (it misclassifies near perfect cubes, e.g. 32771).
std::uint64_t icbrt(std::uint64_t n);

/// 128-bit variant, used for exact floors of p^{4/3}-shaped expressions.
std::uint64_t icbrt_u128(unsigned __int128 n);

/// A validated prime modulus, 2 <= p < 2^62.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);
    std::uint64_t value() const { return p_; }

    friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }
    friend bool operator!=(PrimeModulus a, PrimeModulus b) { return a.p_ != b.p_; }

private:
    std::uint64_t p_;
};

FieldElement fadd(FieldElement a, FieldElement b, PrimeModulus p);
FieldElement fsub(FieldElement a, FieldElement b, PrimeModulus p);
FieldElement fmul(FieldElement a, FieldElement b, PrimeModulus p);
FieldElement fneg(FieldElement a, PrimeModulus p);

/// Inverse by extended Euclid; throws NonInvertibleError on a == 0.
FieldElement finv(FieldElement a, PrimeModulus p);

}  // namespace chshq
