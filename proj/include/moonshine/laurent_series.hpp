#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moonshine/bigint.hpp"

namespace moonshine {

// Truncated Laurent series with exact integer coefficients.
//
// A series tracks the window [valuation, order): `order` is an *exclusive*
// upper bound on what is known. Terms at exponent >= order are unknown
// (not zero); terms below `valuation` are exactly zero. The represented
// value is sum coeff[k] * q^(valuation+k), correct modulo q^order.
//
// Truncation is tracked pessimistically through every operation, always
// from the declared windows of the operands (never from trimmed views),
// so recomputing at a larger order and re-truncating reproduces the
// smaller result bit for bit.
class LaurentSeries {
public:
    LaurentSeries(long valuation, long order, std::vector<BigInt> coeffs);

    // All-zero window [valuation, order).
    static LaurentSeries zero(long valuation, long order);
    // c * q^0 on the window [0, order).
    static LaurentSeries constant(BigInt c, long order);
    // c * q^exponent on the window [min(exponent,0), order).
    static LaurentSeries monomial(BigInt c, long exponent, long order);

    long valuation() const { return valuation_; }
    long order() const { return order_; }
    long window_size() const { return order_ - valuation_; }

    bool known_at(long exponent) const { return exponent < order_; }

    // Exact coefficient of q^exponent. Below the valuation this is zero;
    // at or above `order` it is unknown and the call throws.
    const BigInt& coeff(long exponent) const;

    // Exponent of the first nonzero tracked coefficient, if any.
    std::optional<long> first_nonzero() const;

    // Terms in ascending exponent with an explicit truncation marker,
    // e.g. "q^-1 + 744 + 196884*q + 21493760*q^2 + O(q^3)". Golden-file
    // format: exact integers, no grouping, zero terms omitted.
    std::string to_string() const;

    const std::vector<BigInt>& coefficients() const { return coeffs_; }

private:
    long valuation_;
    long order_;
    std::vector<BigInt> coeffs_;  // coeffs_[k] is the coefficient of q^(valuation_+k)
};

// result window: [min(val), min(order)).
LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries negated(const LaurentSeries& a);
LaurentSeries scaled(const LaurentSeries& a, const BigInt& c);

// Cauchy convolution; window [a.val+b.val, min(a.order+b.val, b.order+a.val)).
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

// Multiplicative inverse r with mul(a, r) = 1 + O(q^N), N = min(target_order,
// a.order - v) where v is the exponent of a's first nonzero coefficient.
// That coefficient must be +1 or -1; anything else is rejected with a
// diagnostic naming it. r has window [-v, N - v).
LaurentSeries invert(const LaurentSeries& a, long target_order);

// a^k by repeated squaring; truncation tracked exactly as the equivalent
// fold of mul (window [k*val, k*val + a.window_size()) for k >= 1).
// k == 0 gives 1 on [0, a.window_size()). Negative k inverts first and
// requires a unit leading coefficient.
LaurentSeries int_pow(const LaurentSeries& a, long k);

// Multiply by q^shift.
LaurentSeries shifted(const LaurentSeries& a, long shift);

// Substitute q -> q^d (d >= 1). Window [d*val, d*order): the gaps between
// dilated terms are exact zeros, so knowledge extends to d*order.
LaurentSeries dilated(const LaurentSeries& a, long d);

// Narrow the window. new_order <= a.order required.
LaurentSeries truncated(const LaurentSeries& a, long new_order);
// Restrict to [new_valuation, new_order) ⊆ current knowledge. Coefficients
// dropped from the low side must be reconstructible (they are: below the
// old valuation they are zero), so this only forgets high-side knowledge.
LaurentSeries restricted(const LaurentSeries& a, long new_valuation, long new_order);

// First exponent in the window intersection where a and b differ, if any.
// Disjoint windows are an error, not "equal".
std::optional<long> first_mismatch(const LaurentSeries& a, const LaurentSeries& b);
bool equal_on_overlap(const LaurentSeries& a, const LaurentSeries& b);

// Exponent table for product expansions: finitely many nonzero integer
// exponents keyed by n. Missing keys read as zero (factor absent).
class ExponentTable {
public:
    ExponentTable() = default;

    void set(long n, BigInt e);
    const BigInt& at(long n) const;
    const std::map<long, BigInt>& entries() const { return entries_; }

    // exponent e for every n in [lo, hi).
    static ExponentTable uniform(const BigInt& e, long lo, long hi);

private:
    std::map<long, BigInt> entries_;
};

// prod_{n=1}^{order-1} (1 - q^n)^{e(n)}, truncated at q^order. Factors with
// n >= order cannot affect the window and are not consulted. Negative e(n)
// expands through the binomial series (integer coefficients throughout).
LaurentSeries product_expansion(const ExponentTable& exponents, long order);

}  // namespace moonshine
