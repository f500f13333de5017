#pragma once

#include "moonshine/bi_series.hpp"
#include "moonshine/report.hpp"

namespace moonshine {

// Truncation bounds for the two-variable product identity
// j(sigma) - j(tau) = p^-1 prod_{m>0, n} (1 - p^m q^n)^{c(mn)}.
struct KnzWindow {
    long p_order;
    long q_order;

    KnzWindow(long p, long q);
};

// Left side: sum_m c(m) p^m - sum_n c(n) q^n over the window, with c
// read from j_minus_744. Outer window [-1, p_order), inner [-1, q_order).
BiSeries knz_difference(const KnzWindow& window);
BiSeries knz_difference(const KnzWindow& window, const LaurentSeries& c);

// Right side: p^-1 prod (1 - p^m q^n)^{c(mn)} truncated to the same
// window. The product index "n in Z" collapses to n >= -1 because
// c(k) = 0 for k < -1 and c(0) = 0; factors up to m = p_order and
// n = q_order are required for window-complete truncation (the single
// (1 - p q^-1) factor can pull their contributions back inside).
BiSeries knz_product(const KnzWindow& window);
BiSeries knz_product(const KnzWindow& window, const LaurentSeries& c);

// Coefficientwise comparison of the two sides over the window.
VerificationReport verify_knz(const KnzWindow& window);
VerificationReport verify_knz(const KnzWindow& window, const LaurentSeries& c);

// Recover the unique integer exponent table e(m,n) on the window with
// F = p^-1 prod (1 - p^m q^n)^{e(m,n)} modulo the window, by peeling
// outer rows in increasing m and dividing each recovered factor out.
// Requirements: F outer valuation -1 with row -1 identically 1, inner
// valuation >= -1, and inner order >= q_order + slack(p_order) where
// slack = sum_m floor((p_order-1)/m) covers the inner drift the
// divisions can cause. Insufficient windows are rejected.
BiExponentTable extract_exponents(const BiSeries& F, const KnzWindow& window);
long extraction_inner_slack(long p_order);

// c(4) = c(3) + (c(1)^2 - c(1))/2, evaluated from j_minus_744 together
// with the three printed integers it relates.
VerificationReport verify_c4_relation();

}  // namespace moonshine
