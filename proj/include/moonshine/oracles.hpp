#pragma once

#include <vector>

#include "moonshine/laurent_series.hpp"

namespace moonshine::oracles {

// Independent reference routes used to cross-check the main
// implementations. These deliberately avoid product_expansion and the
// repeated-squaring path: a check against an oracle that shares its
// subject's code would check nothing.

// prod_{n>0} (1 - q^n) through the pentagonal number theorem:
// sum_{k in Z} (-1)^k q^{k(3k-1)/2}. Pure closed form.
LaurentSeries euler_product_pentagonal(long order);

// Plain left fold a*a*...*a (k >= 0 factors).
LaurentSeries pow_by_fold(const LaurentSeries& a, long k);

// Nonnegative solutions of a*1 + b*d1 + c*d2 = value by direct loops
// over the three monster dimensions.
std::vector<std::vector<long>> decompose_three_loop(const BigInt& value, const BigInt& d1,
                                                    const BigInt& d2);

}  // namespace moonshine::oracles
