#pragma once

#include <map>

#include "moonshine/big_decimal.hpp"
#include "moonshine/report.hpp"

namespace moonshine {

// The integer j((1+i*sqrt(163))/2) evaluates to, with its sign.
extern const char* kCm163Integer;  // "262537412640768000"

// exp(pi*sqrt(163)) with at least `fractional_digits` correct digits
// after the decimal point.
BigDecimal exp_pi_sqrt163(long fractional_digits);

// Evaluate the truncated j expansion at q = -exp(-pi*sqrt(163)).
// `fractional_digits` is the absolute precision target 10^-digits.
// The series tail past `series_order` is bounded with the crude growth
// bound c(n) <= exp(4 pi sqrt(n)); if that bound cannot meet the target
// the call is rejected, reporting the bound achieved.
BigDecimal j_at_cm163(long fractional_digits, long series_order);

// log10 of the proven tail bound for the given truncation order.
double cm163_tail_bound_log10(long series_order);

// Multiplies 2^18 * 3^3 * 5^3 * 23^3 * 29^3 exactly and compares against
// the integer above (sign handled: the j value is its negation).
VerificationReport factorization_check();
VerificationReport factorization_check(const std::map<long, long>& prime_powers);

// Everything the cm163 CLI command reports.
struct Cm163Result {
    long fractional_digits = 0;
    long series_order = 0;
    BigDecimal exp_value;           // exp(pi*sqrt(163))
    std::string exp_string;         // with fractional_digits digits after the point
    BigDecimal j_value;             // truncated series at the CM point
    BigDecimal residual;            // j_value + 262537412640768000
    BigDecimal two_term_deviation;  // (q^-1 + 744 partial sum) + 262537412640768000
    VerificationReport factorization;
};

Cm163Result run_cm163(long fractional_digits, long series_order);

}  // namespace moonshine
