#include "moonshine/oracles.hpp"

namespace moonshine::oracles {

LaurentSeries euler_product_pentagonal(long order) {
    std::vector<BigInt> c(order);
    for (long k = 0;; ++k) {
        const long g1 = k * (3 * k - 1) / 2;
        const long g2 = k * (3 * k + 1) / 2;
        if (g1 >= order && g2 >= order) break;
        const BigInt sign = (k % 2 == 0) ? 1 : -1;
        if (g1 < order) c[g1] += sign;
        if (g2 < order && k > 0) c[g2] += sign;
    }
    return LaurentSeries(0, order, std::move(c));
}

LaurentSeries pow_by_fold(const LaurentSeries& a, long k) {
    LaurentSeries result = LaurentSeries::constant(1, a.window_size());
    for (long i = 0; i < k; ++i) result = mul(result, a);
    return result;
}

std::vector<std::vector<long>> decompose_three_loop(const BigInt& value, const BigInt& d1,
                                                    const BigInt& d2) {
    std::vector<std::vector<long>> out;
    for (BigInt c{0}; c * d2 <= value; ++c) {
        const BigInt rem2 = value - c * d2;
        for (BigInt b{0}; b * d1 <= rem2; ++b) {
            const BigInt a = rem2 - b * d1;
            out.push_back({static_cast<long>(a.get_si()), static_cast<long>(b.get_si()),
                           static_cast<long>(c.get_si())});
        }
    }
    return out;
}

}  // namespace moonshine::oracles
