#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "moonshine/laurent_series.hpp"

namespace moonshine {

// Truncated series in two variables: an outer variable (p or z) with
// bounded-below exponents and an inner variable q. Row k is the
// LaurentSeries coefficient of outer^(outer_valuation+k); all rows share
// one inner window [inner_valuation, inner_order).
class BiSeries {
public:
    BiSeries(long outer_valuation, long outer_order, long inner_valuation, long inner_order);

    long outer_valuation() const { return outer_valuation_; }
    long outer_order() const { return outer_order_; }
    long inner_valuation() const { return inner_valuation_; }
    long inner_order() const { return inner_order_; }

    const LaurentSeries& row(long outer_exponent) const;
    void set_row(long outer_exponent, LaurentSeries s);

    // Exact coefficient of outer^oe * q^ie; beyond a tracked bound the
    // value is unknown and the call throws, below a valuation it is zero.
    const BigInt& coeff(long outer_exponent, long inner_exponent) const;

    BiSeries restricted(long outer_valuation, long outer_order, long inner_valuation,
                        long inner_order) const;

private:
    long outer_valuation_, outer_order_;
    long inner_valuation_, inner_order_;
    std::vector<LaurentSeries> rows_;
};

// Finitely many integer exponents keyed by (m, n): the data of a product
// prod (1 - p^m q^n)^{e(m,n)}. Missing keys read as zero.
class BiExponentTable {
public:
    BiExponentTable() = default;

    void set(long m, long n, BigInt e);
    const BigInt& at(long m, long n) const;
    const std::map<std::pair<long, long>, BigInt>& entries() const { return entries_; }

private:
    std::map<std::pair<long, long>, BigInt> entries_;
};

// outer^shift * prod (1 - p^m q^n)^{e(m,n)} over the table, sound on the
// declared window: outer exponents [shift .. shift+outer_order), inner
// [0 .. inner_order), both extended downward when factors can move that
// way (see the drift-budget analysis in bi_series.cpp). Factors with
// m < 0 or n < 0 must have positive exponents; negative exponents are
// supported on the m >= 0, n >= 0 quadrant.
BiSeries bi_product_expansion(const BiExponentTable& exponents, long outer_order, long inner_order,
                              long outer_valuation_shift);

// First differing (outer, inner) position over the intersection of the
// tracked windows, scanning outer then inner ascending; plus the number
// of positions compared. Disjoint windows are an error.
struct BiMismatch {
    long outer, inner;
    BigInt lhs, rhs;
};
std::optional<BiMismatch> first_mismatch(const BiSeries& a, const BiSeries& b, long* compared);

}  // namespace moonshine
