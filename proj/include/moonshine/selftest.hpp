#pragma once

#include <cstdint>
#include <vector>

#include "moonshine/replication.hpp"
#include "moonshine/report.hpp"

namespace moonshine {

// Knobs for the full verification run. The defaults are the CLI
// defaults; `corrupt_delta` is a test hook that perturbs the Delta
// series inside the oracle comparison so fault reporting can be
// exercised end to end.
struct SuiteConfig {
    long knz_p = 8;
    long knz_q = 8;
    long triple_q = 50;
    long triple_z = 8;
    long cm163_fractional_digits = 35;
    long cm163_series_order = 8;
    long delta_oracle_order = 200;
    long ring_cases = 1000;
    long invert_cases = 200;
    long truncation_cases = 200;
    long extraction_cases = 200;
    std::uint64_t seed = 0x6d6f6f6e73686eULL;
    bool corrupt_delta = false;
};

// Identity checks (paper-printed heads and cross-module consistency).
VerificationReport j_head_check();
VerificationReport e4_delta_head_check();
VerificationReport delta_oracle_check(long order, bool corrupt_delta = false);
VerificationReport pentagonal_product_check(long order);
VerificationReport j_definition_roundtrip_check(long order);
VerificationReport hauptmodul_head_check();
VerificationReport eta_consistency_check();
VerificationReport e4_divisibility_check(long order);
VerificationReport dyson_density_check();
VerificationReport triple_z1_specialization_check(long q_order);
VerificationReport triple_rhs_square_support_check(long q_order, long z_range);
VerificationReport knz_extraction_check(const KnzWindow& window);
VerificationReport cm163_check(long fractional_digits, long series_order);

// Randomized property suites (deterministic generators).
VerificationReport ring_axioms_suite(long cases, std::uint64_t seed);
VerificationReport invert_roundtrip_suite(long cases, std::uint64_t seed);
VerificationReport intpow_fold_check();
VerificationReport truncation_soundness_suite(long cases, std::uint64_t seed);
VerificationReport extraction_random_roundtrip_suite(long cases, std::uint64_t seed);
VerificationReport eta_additivity_suite(long cases, std::uint64_t seed);

// Every check above plus the KNZ / c4 / triple-product / numerology
// verifiers at the configured windows, in a fixed order.
std::vector<VerificationReport> run_default_suite(const SuiteConfig& config = {});

}  // namespace moonshine
