#include "moonshine/selftest.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "moonshine/cm163.hpp"
#include "moonshine/denominator.hpp"
#include "moonshine/hauptmodul.hpp"
#include "moonshine/modular_forms.hpp"
#include "moonshine/numerology.hpp"
#include "moonshine/oracles.hpp"

namespace moonshine {

namespace {

// Tiny deterministic generator (xorshift64*): identical sequences on
// every platform, which keeps `all` runs byte-identical.
struct Rng {
    std::uint64_t state;

    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1DULL;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    BigInt coeff() {
        if (next() % 4 == 0) return 0;
        const std::uint64_t bits = next();
        BigInt v(static_cast<unsigned long>(bits >> 32));
        v <<= 32;
        v += static_cast<unsigned long>(bits & 0xffffffffULL);
        return (next() & 1) ? v : -v;
    }
    LaurentSeries series(long max_width = 64) {
        const long val = range(-8, 8);
        const long width = range(1, max_width);
        std::vector<BigInt> c(width);
        for (auto& x : c) x = coeff();
        return LaurentSeries(val, val + width, std::move(c));
    }
};

struct Checker {
    VerificationReport report;
    Stopwatch timer;

    explicit Checker(std::string identity, std::string window) {
        report.identity = std::move(identity);
        report.window = std::move(window);
        report.status = Status::verified;
    }

    void expect(bool ok, std::vector<long> at, const std::string& lhs, const std::string& rhs) {
        ++report.checked;
        if (!ok && report.status == Status::verified) {
            report.status = Status::failed;
            report.first_mismatch = Mismatch{std::move(at), lhs, rhs};
        }
    }
    void expect_coeff(const LaurentSeries& s, long e, const BigInt& want) {
        expect(s.coeff(e) == want, {e}, s.coeff(e).get_str(), want.get_str());
    }
    // Coefficientwise equality over the window intersection; every
    // compared coefficient counts.
    void expect_series(const LaurentSeries& a, const LaurentSeries& b, long tag) {
        const long lo = std::min(a.valuation(), b.valuation());
        const long hi = std::min(a.order(), b.order());
        const auto bad = first_mismatch(a, b);
        report.checked += hi - lo;
        if (bad && report.status == Status::verified) {
            report.status = Status::failed;
            report.first_mismatch =
                Mismatch{{tag, *bad}, a.coeff(*bad).get_str(), b.coeff(*bad).get_str()};
        }
    }
    VerificationReport done() {
        report.elapsed_ms = timer.elapsed_ms();
        return report;
    }
};

}  // namespace

VerificationReport j_head_check() {
    Checker c("j-head", "q^-1 .. q^4");
    const LaurentSeries j = j_series(5);
    c.expect_coeff(j, -1, 1);
    c.expect_coeff(j, 0, 744);
    c.expect_coeff(j, 1, 196884);
    c.expect_coeff(j, 2, 21493760);
    c.expect_coeff(j, 3, BigInt("864299970"));
    c.expect_coeff(j, 4, BigInt("20245856256"));
    return c.done();
}

VerificationReport e4_delta_head_check() {
    Checker c("e4-delta-head", "E4 to q^3, Delta to q^3");
    const LaurentSeries e4 = eisenstein_e4(4);
    c.expect_coeff(e4, 0, 1);
    c.expect_coeff(e4, 1, 240);
    c.expect_coeff(e4, 2, 2160);
    c.expect_coeff(e4, 3, 6720);
    const LaurentSeries d = delta_series(4);
    c.expect_coeff(d, 1, 1);
    c.expect_coeff(d, 2, -24);
    c.expect_coeff(d, 3, 252);
    return c.done();
}

VerificationReport delta_oracle_check(long order, bool corrupt_delta) {
    Checker c("delta-pentagonal-oracle",
              "Delta vs q * (pentagonal Euler product)^24, order " + std::to_string(order));
    LaurentSeries delta = delta_series(order);
    if (corrupt_delta) {
        delta = add(delta, LaurentSeries::monomial(1, 3, order));  // injected fault
    }
    const LaurentSeries oracle =
        shifted(oracles::pow_by_fold(oracles::euler_product_pentagonal(order - 1), 24), 1);
    c.expect_series(delta, oracle, 0);
    return c.done();
}

VerificationReport pentagonal_product_check(long order) {
    Checker c("euler-product-pentagonal",
              "product_expansion(all 1) vs pentagonal series, order " + std::to_string(order));
    c.expect_series(product_expansion(ExponentTable::uniform(1, 1, order), order),
                    oracles::euler_product_pentagonal(order), 0);
    return c.done();
}

VerificationReport j_definition_roundtrip_check(long order) {
    Checker c("j-definition-roundtrip", "j * Delta = E4^3 to order " + std::to_string(order));
    const LaurentSeries lhs = mul(j_series(order), delta_series(order + 2));
    const LaurentSeries rhs = int_pow(eisenstein_e4(order + 1), 3);
    c.expect_series(lhs, rhs, 0);
    return c.done();
}

VerificationReport hauptmodul_head_check() {
    Checker c("hauptmodul-heads", "T_1A, T_2A, T_2B to q^2");
    const McKayThompsonSeries t1a = mckay_thompson("1A", 3);
    const McKayThompsonSeries t2a = mckay_thompson("2A", 3);
    const McKayThompsonSeries t2b = mckay_thompson("2B", 3);
    c.expect_coeff(t2b.expansion, -1, 1);
    c.expect_coeff(t2b.expansion, 0, 0);
    c.expect_coeff(t2b.expansion, 1, 276);
    c.expect_coeff(t2b.expansion, 2, -2048);
    c.expect_coeff(t2a.expansion, -1, 1);
    c.expect_coeff(t2a.expansion, 0, 0);
    c.expect_coeff(t2a.expansion, 1, 4372);
    c.expect_coeff(t2a.expansion, 2, 96256);
    c.expect_coeff(t1a.expansion, 1, 196884);
    // T_2A - T_2B: 4096 q + 98304 q^2 (the q^2 value is the independent
    // confirmation of the 2A construction).
    const LaurentSeries diff = sub(t2a.expansion, t2b.expansion);
    c.expect_coeff(diff, 1, 4096);
    c.expect_coeff(diff, 2, 98304);
    // Recomputing at higher order must not move low coefficients.
    const McKayThompsonSeries wide = mckay_thompson("2A", 12);
    c.expect_series(truncated(wide.expansion, 3), t2a.expansion, 1);
    return c.done();
}

VerificationReport eta_consistency_check() {
    Checker c("eta-consistency", "eta^24 vs Delta; eta quotients");
    const long order = 40;
    // eta^24 has prefactor exponent 1 and product part equal to Delta/q.
    const EtaExpansion e24 = eta_power(24, order);
    c.expect(e24.prefactor_exponent == 1, {0}, e24.prefactor_exponent.get_str(), "1");
    c.expect_series(shifted(e24.product_part, 1), delta_series(order), 0);
    // Single-factor quotient {1 -> 24} is Delta again.
    EtaQuotientSpec spec;
    spec.powers = {{1, 24}};
    c.expect_series(eta_quotient(spec, order), delta_series(order), 1);
    // {2 -> 24} is Delta with q -> q^2: head q^2 - 24 q^4.
    EtaQuotientSpec dil;
    dil.powers = {{2, 24}};
    const LaurentSeries d2 = eta_quotient(dil, 8);
    c.expect_coeff(d2, 2, 1);
    c.expect_coeff(d2, 3, 0);
    c.expect_coeff(d2, 4, -24);
    // eta^3 product part: 1 - 3q + 5q^3 - 7q^6 (squares of odd numbers
    // pattern continues: exponents are triangular).
    const EtaExpansion e3 = eta_power(3, 8);
    c.expect_coeff(e3.product_part, 0, 1);
    c.expect_coeff(e3.product_part, 1, -3);
    c.expect_coeff(e3.product_part, 3, 5);
    c.expect_coeff(e3.product_part, 6, -7);
    return c.done();
}

VerificationReport e4_divisibility_check(long order) {
    Checker c("e4-divisibility", "coefficients past q^0 divisible by 240, order " +
                                     std::to_string(order));
    const LaurentSeries e4 = eisenstein_e4(order);
    for (long n = 1; n < order; ++n) {
        c.expect(e4.coeff(n) % 240 == 0, {n}, e4.coeff(n).get_str(), "multiple of 240");
    }
    return c.done();
}

VerificationReport dyson_density_check() {
    Checker c("dyson-eta-density", "eta^m expansion shape, m in Dyson's list");
    // m = 3: nonzero coefficients sit at triangular exponents only.
    const DysonEtaReport r3 = dyson_eta_report(3, 100);
    bool triangular_only = true;
    for (long e = 0; e < 100; ++e) {
        if (r3.product_part.coeff(e) == 0) continue;
        bool is_triangular = false;
        for (long k = 0; k * (k + 1) / 2 <= e; ++k) {
            if (k * (k + 1) / 2 == e) is_triangular = true;
        }
        triangular_only = triangular_only && is_triangular;
    }
    c.expect(triangular_only, {3}, "support", "triangular exponents");
    c.expect(r3.density < 0.15, {3}, std::to_string(r3.density), "< 0.15");
    // m = 24 is sparser than its neighbor m = 23.
    const DysonEtaReport r24 = dyson_eta_report(24, 200);
    const DysonEtaReport r23 = dyson_eta_report(23, 200);
    c.expect(r24.nonzero_count < r23.nonzero_count, {24},
             std::to_string(r24.nonzero_count), "< " + std::to_string(r23.nonzero_count));
    // m = 0 degenerates to the single constant 1.
    const DysonEtaReport r0 = dyson_eta_report(0, 50);
    c.expect(r0.nonzero_count == 1, {0}, std::to_string(r0.nonzero_count), "1");
    c.expect(!r0.in_dyson_list, {0}, "warning flag", "set for m outside the list");
    return c.done();
}

VerificationReport triple_z1_specialization_check(long q_order) {
    Checker c("triple-product-z1",
              "LHS at z=1 vs direct product, order " + std::to_string(q_order));
    const TripleProductWindow w(q_order, q_order - 1);
    const LaurentSeries at_z1 = specialize_z1(triple_product_lhs(w));
    ExponentTable t;
    for (long n = 1; n < q_order; ++n) t.set(n, n % 2 == 0 ? 1 : 2);
    c.expect_series(at_z1, product_expansion(t, q_order), 0);
    return c.done();
}

VerificationReport triple_rhs_square_support_check(long q_order, long z_range) {
    Checker c("triple-product-rhs-support", "q-support only at perfect squares");
    const BiSeries rhs = triple_product_rhs(TripleProductWindow(q_order, z_range));
    for (long s = -z_range; s <= z_range; ++s) {
        for (long t = 0; t < q_order; ++t) {
            const bool square = (s * s == t);
            c.expect(rhs.coeff(s, t) == (square ? BigInt((s % 2 == 0) ? 1 : -1) : BigInt(0)),
                     {s, t}, rhs.coeff(s, t).get_str(), square ? "(-1)^s" : "0");
        }
    }
    return c.done();
}

VerificationReport knz_extraction_check(const KnzWindow& w) {
    Checker c("knz-extraction",
              "e(m,n) = c(mn) over p_order=" + std::to_string(w.p_order) +
                  ", q_order=" + std::to_string(w.q_order));
    const long slack = extraction_inner_slack(w.p_order);
    const LaurentSeries cs = j_minus_744(w.p_order * (w.q_order + slack) + 1);
    BiExponentTable table;
    for (long m = 1; m <= w.p_order; ++m) {
        for (long n = -1; n < w.q_order + slack; ++n) {
            if (n == 0) continue;
            table.set(m, n, cs.coeff(m * n));
        }
    }
    const BiSeries F = bi_product_expansion(table, w.p_order + 1, w.q_order + slack, -1);
    const BiExponentTable extracted = extract_exponents(F, w);
    for (long m = 1; m < w.p_order; ++m) {
        for (long n = -1; n < w.q_order; ++n) {
            c.expect(extracted.at(m, n) == cs.coeff(m * n), {m, n}, extracted.at(m, n).get_str(),
                     cs.coeff(m * n).get_str());
        }
    }
    // The exponent depends only on the product mn: every relation
    // m1 n1 = m2 n2 inside the window is a genuine cross-check.
    for (long m1 = 1; m1 < w.p_order; ++m1) {
        for (long n1 = 1; n1 < w.q_order; ++n1) {
            for (long m2 = m1 + 1; m2 < w.p_order; ++m2) {
                if ((m1 * n1) % m2 != 0) continue;
                const long n2 = m1 * n1 / m2;
                if (n2 < 1 || n2 >= w.q_order) continue;
                c.expect(extracted.at(m1, n1) == extracted.at(m2, n2), {m1, n1},
                         extracted.at(m1, n1).get_str(), extracted.at(m2, n2).get_str());
            }
        }
    }
    return c.done();
}

VerificationReport cm163_check(long fractional_digits, long series_order) {
    Checker c("cm163", "digits=" + std::to_string(fractional_digits) +
                           ", series_order=" + std::to_string(series_order));
    const Cm163Result r = run_cm163(fractional_digits, series_order);
    // The reference digit string, printed to 14 places after the point.
    const std::string want = "262537412640768743.99999999999925";
    c.expect(r.exp_string.substr(0, want.size()) == want, {0},
             r.exp_string.substr(0, want.size()), want);
    c.expect(abs_at_most(r.residual, 1, 10), {1}, r.residual.to_scientific(), "<= 1e-10");
    c.expect(r.factorization.status == Status::verified, {2}, to_string(r.factorization.status),
             "verified");
    return c.done();
}

VerificationReport ring_axioms_suite(long cases, std::uint64_t seed) {
    Checker c("ring-axioms", std::to_string(cases) + " randomized cases, width <= 64");
    Rng rng{seed};
    for (long i = 0; i < cases; ++i) {
        const LaurentSeries a = rng.series(), b = rng.series(), d = rng.series();
        c.expect_series(add(a, b), add(b, a), i);
        c.expect_series(mul(a, b), mul(b, a), i);
        c.expect_series(add(add(a, b), d), add(a, add(b, d)), i);
        c.expect_series(mul(mul(a, b), d), mul(a, mul(b, d)), i);
        c.expect_series(mul(a, add(b, d)), add(mul(a, b), mul(a, d)), i);
    }
    return c.done();
}

VerificationReport invert_roundtrip_suite(long cases, std::uint64_t seed) {
    Checker c("invert-roundtrip", std::to_string(cases) + " randomized unit-lead cases");
    Rng rng{seed ^ 0x1};
    for (long i = 0; i < cases; ++i) {
        LaurentSeries a = rng.series(48);
        std::vector<BigInt> coeffs = a.coefficients();
        coeffs[0] = (rng.next() & 1) ? 1 : -1;
        a = LaurentSeries(a.valuation(), a.order(), std::move(coeffs));
        const LaurentSeries r = invert(a, a.window_size());
        c.expect_series(mul(a, r), LaurentSeries::constant(1, a.window_size()), i);
        c.expect_series(invert(r, a.window_size()), a, i);
    }
    return c.done();
}

VerificationReport intpow_fold_check() {
    Checker c("intpow-vs-fold", "k = 0..8 against plain repeated multiplication");
    Rng rng{0x2};
    for (long k = 0; k <= 8; ++k) {
        const LaurentSeries a = rng.series(24);
        c.expect_series(int_pow(a, k), oracles::pow_by_fold(a, k), k);
    }
    return c.done();
}

VerificationReport truncation_soundness_suite(long cases, std::uint64_t seed) {
    Checker c("truncation-soundness",
              std::to_string(cases) + " cases: recompute wider, re-truncate, compare");
    Rng rng{seed ^ 0x3};
    for (long i = 0; i < cases; ++i) {
        const LaurentSeries a = rng.series(48), b = rng.series(48);
        const long cut = rng.range(1, 8);

        const LaurentSeries a_narrow =
            truncated(a, std::max(a.valuation() + 1, a.order() - cut));
        c.expect_series(add(a_narrow, b), add(a, b), i);
        c.expect_series(mul(a_narrow, b), mul(a, b), i);

        LaurentSeries u = a;
        std::vector<BigInt> coeffs = u.coefficients();
        coeffs[0] = 1;
        u = LaurentSeries(u.valuation(), u.order(), std::move(coeffs));
        c.expect_series(invert(u, std::max(1L, u.window_size() - cut)),
                        invert(u, u.window_size()), i);
        c.expect_series(int_pow(truncated(u, std::max(u.valuation() + 1, u.order() - cut)), 3),
                        int_pow(u, 3), i);

        const long order = rng.range(2, 40);
        ExponentTable t;
        for (long n = 1; n < order; ++n) t.set(n, rng.range(-12, 12));
        const LaurentSeries full = product_expansion(t, order);
        const LaurentSeries part = product_expansion(t, std::max(1L, order - cut));
        c.expect_series(full, part, i);
    }
    return c.done();
}

VerificationReport extraction_random_roundtrip_suite(long cases, std::uint64_t seed) {
    Checker c("extraction-roundtrip",
              std::to_string(cases) + " random sparse tables, window (6,6)");
    Rng rng{seed ^ 0x4};
    const KnzWindow w(6, 6);
    const long slack = extraction_inner_slack(w.p_order);
    for (long i = 0; i < cases; ++i) {
        BiExponentTable table;
        const long entries = rng.range(1, 6);
        for (long k = 0; k < entries; ++k) {
            const long m = rng.range(1, 5);
            const long n = rng.range(1, 5);
            long e = rng.range(-4, 4);
            if (e == 0) e = 1;
            table.set(m, n, e);
        }
        if (rng.next() & 1) table.set(1, -1, 1);
        const BiSeries F = bi_product_expansion(table, w.p_order + 1, w.q_order + slack, -1);
        const BiExponentTable extracted = extract_exponents(F, w);
        for (long m = 1; m < w.p_order; ++m) {
            for (long n = -1; n < w.q_order; ++n) {
                c.expect(extracted.at(m, n) == table.at(m, n), {i, m, n},
                         extracted.at(m, n).get_str(), table.at(m, n).get_str());
            }
        }
    }
    return c.done();
}

VerificationReport eta_additivity_suite(long cases, std::uint64_t seed) {
    Checker c("eta-additivity", "eta^(a+b) = eta^a * eta^b (product parts)");
    Rng rng{seed ^ 0x5};
    const long order = 36;
    for (long i = 0; i < cases; ++i) {
        const long a = rng.range(-6, 6), b = rng.range(-6, 6);
        c.expect_series(eta_power(a + b, order).product_part,
                        mul(eta_power(a, order).product_part, eta_power(b, order).product_part),
                        i);
    }
    return c.done();
}

std::vector<VerificationReport> run_default_suite(const SuiteConfig& config) {
    std::vector<VerificationReport> reports;
    reports.push_back(j_head_check());
    reports.push_back(e4_delta_head_check());
    reports.push_back(delta_oracle_check(config.delta_oracle_order, config.corrupt_delta));
    reports.push_back(pentagonal_product_check(200));
    reports.push_back(j_definition_roundtrip_check(100));
    reports.push_back(hauptmodul_head_check());
    reports.push_back(eta_consistency_check());
    reports.push_back(e4_divisibility_check(200));
    reports.push_back(dyson_density_check());

    reports.push_back(verify_knz(KnzWindow(config.knz_p, config.knz_q)));
    reports.push_back(knz_extraction_check(KnzWindow(6, 6)));
    reports.push_back(verify_c4_relation());

    reports.push_back(verify_triple_product(TripleProductWindow(config.triple_q, config.triple_z)));
    reports.push_back(triple_z1_specialization_check(40));
    reports.push_back(triple_rhs_square_support_check(50, 8));

    reports.push_back(cm163_check(config.cm163_fractional_digits, config.cm163_series_order));

    reports.push_back(monster_order_check());
    reports.push_back(ogg_primes_check());
    reports.push_back(mckay_decomposition_check());
    reports.push_back(involution_product_check("monster/E8"));
    reports.push_back(involution_product_check("baby/F4"));
    reports.push_back(involution_product_check("Fi24/G2"));
    reports.push_back(binary_group_dims_check("E6"));
    reports.push_back(binary_group_dims_check("E7"));
    reports.push_back(binary_group_dims_check("E8"));
    reports.push_back(fold_check("E7->F4"));
    reports.push_back(fold_check("E6->G2"));

    reports.push_back(ring_axioms_suite(config.ring_cases, config.seed));
    reports.push_back(invert_roundtrip_suite(config.invert_cases, config.seed));
    reports.push_back(intpow_fold_check());
    reports.push_back(truncation_soundness_suite(config.truncation_cases, config.seed));
    reports.push_back(extraction_random_roundtrip_suite(config.extraction_cases, config.seed));
    reports.push_back(eta_additivity_suite(24, config.seed));
    return reports;
}

}  // namespace moonshine
