#pragma once

#include <map>

#include "moonshine/laurent_series.hpp"

namespace moonshine {

// sum of d^3 over divisors d of n; n >= 1.
BigInt sigma3(long n);

// E4 = 1 + 240 sum_{n>0} sigma3(n) q^n, window [0, order).
LaurentSeries eisenstein_e4(long order);

// Delta = q prod_{n>0} (1 - q^n)^24, window [1, order); order >= 2.
LaurentSeries delta_series(long order);

// j = E4^3 / Delta, window [-1, order).
LaurentSeries j_series(long order);

// j with the constant term zeroed: the canonical provider of the
// coefficients c(n), with c(-1) = 1 and c(0) = 0. All identity checks
// read c from here; nothing else hard-codes these values.
LaurentSeries j_minus_744(long order);

// eta(tau)^m = q^(m/24) * prod_{n>0} (1 - q^n)^m, kept as an exact
// rational prefactor exponent plus an integer-coefficient product part
// (valuation 0, leading coefficient 1).
struct EtaExpansion {
    BigRational prefactor_exponent;  // the q^(m/24) part, in q-exponent units
    LaurentSeries product_part;
};

EtaExpansion eta_power(long m, long order);

// Map from scale factor d (meaning eta(d*tau)) to integer power.
// The total prefactor exponent sum d*power(d)/24 must come out an
// integer for the quotient to be a Laurent series.
struct EtaQuotientSpec {
    std::map<long, long> powers;

    BigRational total_prefactor_exponent() const;
};

// prod_d eta(d*tau)^{power(d)} with the prefactor folded into the
// valuation; window [t, order) where t is the total prefactor exponent.
LaurentSeries eta_quotient(const EtaQuotientSpec& spec, long order);

}  // namespace moonshine
