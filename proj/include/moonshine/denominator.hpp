#pragma once

#include <vector>

#include "moonshine/bi_series.hpp"
#include "moonshine/report.hpp"

namespace moonshine {

// Window for prod_{n>0} (1-q^{2n})(1-q^{2n-1}z)(1-q^{2n-1}z^{-1})
//                          = sum_{n in Z} (-1)^n q^{n^2} z^n.
// z exponents are tracked symmetrically in [-z_range, z_range]; the
// right side is complete inside the window only when z_range^2 >= q_order.
struct TripleProductWindow {
    long q_order;
    long z_range;

    TripleProductWindow(long q_order, long z_range);
};

// Product over n with 2n-1 < q_order of the three factors; z is the
// outer variable.
BiSeries triple_product_lhs(const TripleProductWindow& w);

// sum over |n| <= z_range of (-1)^n q^{n^2} z^n, truncated at q_order.
BiSeries triple_product_rhs(const TripleProductWindow& w);

// Coefficientwise equality over the window; rejected (right side
// incomplete) when z_range^2 < q_order.
VerificationReport verify_triple_product(const TripleProductWindow& w);

// Sum of the z-rows: the specialization z = 1. Exact for the tracked
// q window when the z window spans (-q_order, q_order), since every
// z^s row has q-valuation >= |s|.
LaurentSeries specialize_z1(const BiSeries& s);

// Observational report on the eta^m product part: the identities Dyson
// listed exist for m in {3, 8, 10, 14, 15, 21, 24, 26, 28} but are not
// printed, so the artifact reports expansion shape only.
struct DysonEtaReport {
    long m = 0;
    long order = 0;
    BigRational prefactor_exponent;
    LaurentSeries product_part = LaurentSeries::zero(0, 1);
    long nonzero_count = 0;
    double density = 0.0;        // nonzero_count / order
    bool in_dyson_list = false;  // false => emitted with a warning flag
};

extern const std::vector<long> kDysonList;

DysonEtaReport dyson_eta_report(long m, long order);

}  // namespace moonshine
