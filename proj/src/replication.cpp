#include "moonshine/replication.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "moonshine/modular_forms.hpp"

namespace moonshine {

KnzWindow::KnzWindow(long p, long q) : p_order(p), q_order(q) {
    if (p < 1 || q < 1) {
        throw std::invalid_argument("KnzWindow: both orders must be >= 1");
    }
}

namespace {

// c(n) up to n = max_n inclusive.
LaurentSeries c_provider(long max_n) { return j_minus_744(max_n + 1); }

std::string window_text(const KnzWindow& w) {
    return "p_order=" + std::to_string(w.p_order) + ", q_order=" + std::to_string(w.q_order);
}

}  // namespace

BiSeries knz_difference(const KnzWindow& w, const LaurentSeries& c) {
    BiSeries out(-1, w.p_order, -1, w.q_order);
    // Row p^m carries the constant c(m); row p^0 carries -sum c(n) q^n.
    for (long m = -1; m < w.p_order; ++m) {
        if (m == 0) continue;
        out.set_row(m, LaurentSeries::monomial(c.coeff(m), 0, w.q_order));
    }
    std::vector<BigInt> row0(w.q_order + 1);
    for (long n = -1; n < w.q_order; ++n) row0[n + 1] = -c.coeff(n);
    out.set_row(0, LaurentSeries(-1, w.q_order, std::move(row0)));
    return out;
}

BiSeries knz_difference(const KnzWindow& w) {
    return knz_difference(w, c_provider(std::max(w.p_order, w.q_order)));
}

BiSeries knz_product(const KnzWindow& w, const LaurentSeries& c) {
    BiExponentTable table;
    for (long m = 1; m <= w.p_order; ++m) {
        for (long n = -1; n <= w.q_order; ++n) {
            if (n == 0) continue;
            table.set(m, n, c.coeff(m * n));
        }
    }
    // Pre-shift outer window [0, p_order+1) so rows reach p^(p_order-1)
    // after the p^-1 shift.
    BiSeries full = bi_product_expansion(table, w.p_order + 1, w.q_order, -1);
    return full.restricted(-1, w.p_order, full.inner_valuation(), w.q_order);
}

BiSeries knz_product(const KnzWindow& w) {
    return knz_product(w, c_provider(w.p_order * w.q_order));
}

VerificationReport verify_knz(const KnzWindow& w, const LaurentSeries& c) {
    Stopwatch timer;
    VerificationReport report;
    report.identity = "knz";
    report.window = window_text(w);
    const BiSeries lhs = knz_difference(w, c);
    const BiSeries rhs = knz_product(w, c);
    long compared = 0;
    const auto mismatch = first_mismatch(lhs, rhs, &compared);
    report.checked = compared;
    if (mismatch) {
        report.status = Status::failed;
        report.first_mismatch =
            Mismatch{{mismatch->outer, mismatch->inner}, mismatch->lhs.get_str(),
                     mismatch->rhs.get_str()};
    } else {
        report.status = Status::verified;
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

VerificationReport verify_knz(const KnzWindow& w) {
    return verify_knz(w, c_provider(std::max(w.p_order * w.q_order, std::max(w.p_order, w.q_order))));
}

long extraction_inner_slack(long p_order) {
    long slack = 0;
    for (long m = 1; m < p_order; ++m) slack += (p_order - 1) / m;
    return slack;
}

BiExponentTable extract_exponents(const BiSeries& F, const KnzWindow& w) {
    const long P = w.p_order, Q = w.q_order;
    const long slack = extraction_inner_slack(P);
    if (F.outer_valuation() > -1 || F.outer_order() < P) {
        throw std::invalid_argument("extract_exponents: F must track outer exponents [-1, " +
                                    std::to_string(P) + ")");
    }
    if (F.inner_valuation() < -1) {
        throw std::invalid_argument("extract_exponents: inner valuation below -1 unsupported");
    }
    if (F.inner_order() < Q + slack) {
        throw std::invalid_argument("extract_exponents: inner order " +
                                    std::to_string(F.inner_order()) + " insufficient; need >= " +
                                    std::to_string(Q + slack) + " for this window");
    }
    // Head must be exactly p^-1 * 1 for the peeling recursion to start.
    {
        const LaurentSeries& head = F.row(-1);
        for (long t = head.valuation(); t < head.order(); ++t) {
            if (head.coeff(t) != (t == 0 ? 1 : 0)) {
                throw std::invalid_argument(
                    "extract_exponents: row p^-1 is not the unit series; no product head");
            }
        }
    }

    // R = p*F as mutable rows over the working inner window. Row m' is
    // reliable on inner exponents < reliable_hi, which shrinks as
    // divisions by (1 - p^m q^-1) factors drag unknown high-order terms
    // downward; the slack budget keeps reliable_hi >= Q throughout.
    const long iv = F.inner_valuation() - slack;
    const long io = F.inner_order();
    const long cols = io - iv;
    std::vector<std::vector<BigInt>> r(P, std::vector<BigInt>(cols));
    for (long m = 0; m < P; ++m) {
        const LaurentSeries& row = F.row(m - 1);
        for (long t = row.valuation(); t < row.order(); ++t) r[m][t - iv] = row.coeff(t);
    }
    long reliable_hi = io;

    BiExponentTable result;
    for (long m = 1; m < P; ++m) {
        if (reliable_hi < Q) {
            throw std::invalid_argument("extract_exponents: internal precision exhausted");
        }
        // After all factors with outer exponent < m are divided out, row m
        // of the remaining product is exactly -sum_n e(m,n) q^n.
        std::vector<std::pair<long, BigInt>> row_exponents;
        for (long t = iv; t < reliable_hi; ++t) {
            if (r[m][t - iv] != 0) row_exponents.emplace_back(t, -r[m][t - iv]);
        }
        long drag = 0;  // worst inner drift the divisions below can cause
        for (const auto& [n, e] : row_exponents) {
            if (n < Q && n >= -1) result.set(m, n, e);
            if (n < 0) drag += -n * ((P - 1) / m);
        }
        if (row_exponents.empty()) continue;

        // Divide the recovered factors out: multiply by prod (1 - p^m q^n)^{-e}.
        const long kmax = (P - 1) / m;
        for (const auto& [n, e] : row_exponents) {
            std::vector<BigInt> coef(kmax + 1);  // binom(-e, k) * (-1)^k
            for (long k = 0; k <= kmax; ++k) {
                coef[k] = binomial(-e, static_cast<unsigned long>(k));
                if (k & 1) coef[k] = -coef[k];
            }
            std::vector<std::vector<BigInt>> out = r;
            for (long k = 1; k <= kmax; ++k) {
                if (coef[k] == 0) continue;
                const long ds = m * k, dt = n * k;
                for (long s = 0; s + ds < P; ++s) {
                    for (long t = 0; t < cols; ++t) {
                        if (r[s][t] == 0) continue;
                        const long t2 = t + dt;
                        if (t2 < 0 || t2 >= cols) continue;
                        mpz_addmul(out[s + ds][t2].get_mpz_t(), coef[k].get_mpz_t(),
                                   r[s][t].get_mpz_t());
                    }
                }
            }
            r.swap(out);
        }
        reliable_hi -= drag;
    }
    return result;
}

VerificationReport verify_c4_relation() {
    Stopwatch timer;
    VerificationReport report;
    report.identity = "c4-relation";
    report.window = "c from j - 744 to order 6";
    const LaurentSeries c = j_minus_744(6);
    const BigInt c1 = c.coeff(1), c3 = c.coeff(3), c4 = c.coeff(4);

    struct Check {
        std::string name;
        BigInt lhs, rhs;
    };
    const std::vector<Check> checks = {
        {"c(1)", c1, BigInt("196884")},
        {"c(3)", c3, BigInt("864299970")},
        {"c(4)", c4, BigInt("20245856256")},
        {"c(4) = c(3) + (c(1)^2 - c(1))/2", c4, c3 + (c1 * c1 - c1) / 2},
    };
    report.checked = static_cast<long>(checks.size());
    report.status = Status::verified;
    for (long i = 0; i < static_cast<long>(checks.size()); ++i) {
        if (checks[i].lhs != checks[i].rhs) {
            report.status = Status::failed;
            report.first_mismatch =
                Mismatch{{i}, checks[i].lhs.get_str(), checks[i].rhs.get_str()};
            break;
        }
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

}  // namespace moonshine
