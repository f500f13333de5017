#pragma once

#include <string>

#include "moonshine/bigint.hpp"

namespace moonshine {

// Fixed-point decimal: value = mantissa * 10^(-scale), plus an explicit
// error bound in units of the last place (ulp at `scale`), so the
// guaranteed precision is computed, not asserted. Decimal (not binary)
// so printed-digit comparisons against reference digit strings are
// exact string comparisons.
//
// Every operation documents its error bound: the result's error_ulp is
// a proven upper bound on |stored - exact| in ulps, assuming the
// operands' bounds hold.
class BigDecimal {
public:
    BigDecimal() : mantissa_(0), scale_(0), error_ulp_(0) {}
    BigDecimal(BigInt mantissa, long scale, BigInt error_ulp = 0);

    static BigDecimal from_integer(BigInt v);

    const BigInt& mantissa() const { return mantissa_; }
    long scale() const { return scale_; }
    const BigInt& error_ulp() const { return error_ulp_; }

    int sign() const { return sgn(mantissa_); }
    bool is_exact_zero() const { return mantissa_ == 0 && error_ulp_ == 0; }

    // Guaranteed correct significant decimal digits (0 when the error
    // reaches the leading digit).
    long precision() const;

    // Exact when new_scale >= scale; otherwise truncates toward zero,
    // adding at most 1 ulp of error at the new scale.
    BigDecimal rescaled(long new_scale) const;

    BigDecimal operator-() const;

    // Decimal string with all stored fractional digits, e.g. "-3.14".
    std::string to_string() const;
    // Truncated toward zero to the given number of fractional digits.
    std::string to_string(long fractional_digits) const;
    // Truncated to `significant` digits: "3.141592653" style.
    std::string to_significant_string(long significant) const;
    // "-7.49e-13" style with the given significant digits.
    std::string to_scientific(int significant = 3) const;

private:
    BigInt mantissa_;
    long scale_;
    BigInt error_ulp_;
};

// error: sum of operand errors (after exact scale alignment).
BigDecimal add(const BigDecimal& a, const BigDecimal& b);
BigDecimal sub(const BigDecimal& a, const BigDecimal& b);
// error: e_a|b| + e_b|a| + e_a e_b, then rescaled to max(scale_a, scale_b).
BigDecimal mul(const BigDecimal& a, const BigDecimal& b);
// a/b at the given scale; b must be bounded away from zero by its own
// error bound. error: quotient truncation (1 ulp) + propagated operand
// errors, all rounded up in integer arithmetic.
BigDecimal div_to_scale(const BigDecimal& a, const BigDecimal& b, long scale);

// |a| <= threshold = t * 10^(-t_scale), accounting for a's error bound.
bool abs_at_most(const BigDecimal& a, const BigInt& t, long t_scale);

// pi to at least `significant` correct significant digits (Machin's
// arctangent formula in integer fixed point; the term-count error bound
// is carried explicitly).
BigDecimal compute_pi(long significant);

// sqrt(n) for integer n >= 0 to `significant` digits (integer Newton /
// floor square root; error < 1 ulp).
BigDecimal sqrt_int(const BigInt& n, long significant);

// e^x to `significant` digits: integer-shift range reduction
// e^x = (e^(x/2^k))^(2^k) with the Taylor series evaluated in fixed
// point and the squaring error amplification tracked exactly.
BigDecimal exp_big(const BigDecimal& x, long significant);

}  // namespace moonshine
