#include "moonshine/modular_forms.hpp"

#include <stdexcept>
#include <string>

namespace moonshine {

BigInt sigma3(long n) {
    if (n <= 0) throw std::invalid_argument("sigma3: n must be >= 1");
    BigInt total{0};
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        total += BigInt(d) * d * d;
        const long e = n / d;
        if (e != d) total += BigInt(e) * e * e;
    }
    return total;
}

LaurentSeries eisenstein_e4(long order) {
    if (order < 1) throw std::invalid_argument("eisenstein_e4: order must be >= 1");
    std::vector<BigInt> c(order);
    c[0] = 1;
    for (long n = 1; n < order; ++n) c[n] = 240 * sigma3(n);
    return LaurentSeries(0, order, std::move(c));
}

LaurentSeries delta_series(long order) {
    if (order < 2) throw std::invalid_argument("delta_series: order must be >= 2");
    return shifted(product_expansion(ExponentTable::uniform(24, 1, order - 1), order - 1), 1);
}

LaurentSeries j_series(long order) {
    if (order < 0) throw std::invalid_argument("j_series: order must be >= 0");
    const LaurentSeries e4cubed = int_pow(eisenstein_e4(order + 1), 3);
    const LaurentSeries delta_inv = invert(delta_series(order + 2), order + 1);
    return mul(e4cubed, delta_inv);
}

LaurentSeries j_minus_744(long order) {
    const LaurentSeries j = j_series(order);
    return sub(j, LaurentSeries::constant(j.coeff(0), order));
}

EtaExpansion eta_power(long m, long order) {
    BigRational prefactor(m, 24);
    prefactor.canonicalize();
    return EtaExpansion{prefactor,
                        product_expansion(ExponentTable::uniform(m, 1, order), order)};
}

BigRational EtaQuotientSpec::total_prefactor_exponent() const {
    BigRational total{0};
    for (const auto& [d, power] : powers) {
        BigRational term(d * power, 24);
        term.canonicalize();
        total += term;
    }
    return total;
}

LaurentSeries eta_quotient(const EtaQuotientSpec& spec, long order) {
    bool any = false;
    for (const auto& [d, power] : spec.powers) {
        if (d < 1) throw std::invalid_argument("eta_quotient: scale factors must be >= 1");
        if (power != 0) any = true;
    }
    if (!any) throw std::invalid_argument("eta_quotient: spec has no nonzero power");

    const BigRational t = spec.total_prefactor_exponent();
    if (t.get_den() != 1) {
        throw std::invalid_argument("eta_quotient: total prefactor exponent " + t.get_str() +
                                    " is not an integer; the quotient is not a Laurent series");
    }
    const long shift = static_cast<long>(t.get_num().get_si());
    const long width = order - shift;  // relative precision of the product part
    if (width < 1) {
        throw std::invalid_argument("eta_quotient: order " + std::to_string(order) +
                                    " does not reach past the valuation " + std::to_string(shift));
    }

    LaurentSeries acc = LaurentSeries::constant(1, width);
    for (const auto& [d, power] : spec.powers) {
        if (power == 0) continue;
        // eta(d*tau) product part is the eta product with q -> q^d.
        const long part_order = (width + d - 1) / d;
        LaurentSeries part = dilated(eta_power(power, part_order).product_part, d);
        acc = mul(acc, truncated(part, width));
    }
    return shifted(acc, shift);
}

}  // namespace moonshine
