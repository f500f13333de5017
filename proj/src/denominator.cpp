#include "moonshine/denominator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "moonshine/modular_forms.hpp"

namespace moonshine {

TripleProductWindow::TripleProductWindow(long q, long z) : q_order(q), z_range(z) {
    if (q < 1 || z < 1) {
        throw std::invalid_argument("TripleProductWindow: q_order and z_range must be >= 1");
    }
}

BiSeries triple_product_lhs(const TripleProductWindow& w) {
    BiExponentTable table;
    for (long n = 1; 2 * n - 1 < w.q_order; ++n) {
        table.set(0, 2 * n, 1);
        table.set(1, 2 * n - 1, 1);
        table.set(-1, 2 * n - 1, 1);
    }
    BiSeries full = bi_product_expansion(table, w.z_range + 1, w.q_order, 0);
    return full.restricted(-w.z_range, w.z_range + 1, 0, w.q_order);
}

BiSeries triple_product_rhs(const TripleProductWindow& w) {
    BiSeries out(-w.z_range, w.z_range + 1, 0, w.q_order);
    for (long n = -w.z_range; n <= w.z_range; ++n) {
        if (n * n >= w.q_order) continue;
        out.set_row(n, LaurentSeries::monomial((n % 2 == 0) ? 1 : -1, n * n, w.q_order));
    }
    return out;
}

VerificationReport verify_triple_product(const TripleProductWindow& w) {
    Stopwatch timer;
    VerificationReport report;
    report.identity = "triple-product";
    report.window =
        "q_order=" + std::to_string(w.q_order) + ", z_range=" + std::to_string(w.z_range);
    if (w.z_range * w.z_range < w.q_order) {
        report.status = Status::rejected;
        report.window += " (rejected: z_range^2 < q_order, right side incomplete)";
        report.elapsed_ms = timer.elapsed_ms();
        return report;
    }
    const BiSeries lhs = triple_product_lhs(w);
    const BiSeries rhs = triple_product_rhs(w);
    long compared = 0;
    const auto mismatch = first_mismatch(lhs, rhs, &compared);
    report.checked = compared;
    if (mismatch) {
        report.status = Status::failed;
        report.first_mismatch = Mismatch{{mismatch->outer, mismatch->inner},
                                         mismatch->lhs.get_str(), mismatch->rhs.get_str()};
    } else {
        report.status = Status::verified;
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

LaurentSeries specialize_z1(const BiSeries& s) {
    LaurentSeries sum = LaurentSeries::zero(s.inner_valuation(), s.inner_order());
    for (long row = s.outer_valuation(); row < s.outer_order(); ++row) {
        sum = add(sum, s.row(row));
    }
    return sum;
}

const std::vector<long> kDysonList = {3, 8, 10, 14, 15, 21, 24, 26, 28};

DysonEtaReport dyson_eta_report(long m, long order) {
    if (order < 1) throw std::invalid_argument("dyson_eta_report: order must be >= 1");
    DysonEtaReport rep;
    rep.m = m;
    rep.order = order;
    const EtaExpansion eta = eta_power(m, order);
    rep.prefactor_exponent = eta.prefactor_exponent;
    rep.product_part = eta.product_part;
    for (long e = 0; e < order; ++e) {
        if (eta.product_part.coeff(e) != 0) ++rep.nonzero_count;
    }
    rep.density = static_cast<double>(rep.nonzero_count) / static_cast<double>(order);
    rep.in_dyson_list = std::find(kDysonList.begin(), kDysonList.end(), m) != kDysonList.end();
    return rep;
}

}  // namespace moonshine
