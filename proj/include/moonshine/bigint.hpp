#pragma once

#include <gmpxx.h>

#include <string>

namespace moonshine {

// Exact arbitrary-precision integer / rational. All series coefficients,
// report values and fixed-point mantissas are BigInt; nothing in the
// library ever rounds an integer.
using BigInt = mpz_class;
using BigRational = mpq_class;

// binomial(n, k) for any integer n (negative n uses the standard
// identity bin(-n,k) = (-1)^k bin(n+k-1,k), which GMP implements).
inline BigInt binomial(const BigInt& n, unsigned long k) {
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long k) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
    return r;
}

inline BigInt pow10(unsigned long k) { return pow_int(BigInt(10), k); }

// floor(sqrt(n)), n >= 0.
inline BigInt isqrt_floor(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

// Number of decimal digits of |v| (0 has one digit). May overestimate by
// one per GMP contract; callers use it only for conservative bounds.
inline long decimal_digits(const BigInt& v) {
    return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 10));
}

}  // namespace moonshine
