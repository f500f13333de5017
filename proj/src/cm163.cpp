#include "moonshine/cm163.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "moonshine/modular_forms.hpp"

namespace moonshine {

const char* kCm163Integer = "262537412640768000";

namespace {

// pi*sqrt(163) with absolute error well below 10^-(fd + 10): both inputs
// carry ~12 guard digits past `significant`, and the product error is
// |pi| e_sqrt + |sqrt| e_pi + cross, all within a few hundred ulps.
BigDecimal pi_sqrt163(long fd) {
    const long sig = fd + 25;
    return mul(compute_pi(sig), sqrt_int(163, sig));
}

}  // namespace

BigDecimal exp_pi_sqrt163(long fractional_digits) {
    if (fractional_digits < 1) {
        throw std::invalid_argument("exp_pi_sqrt163: need >= 1 fractional digit");
    }
    // e^(pi sqrt 163) ~ 2.6e17: 18 integer digits, so `fd` digits after
    // the point need fd + 18 significant plus guard.
    return exp_big(pi_sqrt163(fractional_digits), fractional_digits + 25);
}

double cm163_tail_bound_log10(long series_order) {
    // |sum_{n>=K} c(n) q^n| with |q| = e^(-pi sqrt 163) and the crude
    // bound c(n) <= e^(4 pi sqrt n). The term ratio is below
    // e^(2 pi - pi sqrt 163) << 1/2, so the tail is < 2 * first term.
    constexpr double pi_d = 3.14159265358979323846;
    const double ln10 = std::log(10.0);
    const double x = pi_d * std::sqrt(163.0);
    const double K = static_cast<double>(series_order);
    const double log_first = (4.0 * pi_d * std::sqrt(K) - x * K) / ln10;
    return log_first + std::log10(2.0);
}

BigDecimal j_at_cm163(long fractional_digits, long series_order) {
    if (fractional_digits < 1) {
        throw std::invalid_argument("j_at_cm163: need >= 1 fractional digit");
    }
    if (series_order < 1) {
        throw std::invalid_argument("j_at_cm163: series_order must be >= 1 (the q^-1 term of j "
                                    "is undefined at q = 0)");
    }
    const double tail = cm163_tail_bound_log10(series_order);
    if (tail >= -static_cast<double>(fractional_digits + 2)) {
        std::ostringstream msg;
        msg << "j_at_cm163: series_order " << series_order
            << " only bounds the tail by 10^" << tail << ", short of 10^-"
            << (fractional_digits + 2);
        throw std::invalid_argument(msg.str());
    }

    const long fd = fractional_digits + 20;
    const BigDecimal E = exp_pi_sqrt163(fd);
    // q = -t with t = e^(-pi sqrt 163); 1/q is exactly -E.
    const BigDecimal t = div_to_scale(BigDecimal::from_integer(1), E, fd + 40);

    const LaurentSeries c = j_minus_744(series_order);
    BigDecimal sum = add(-E, BigDecimal::from_integer(744));
    BigDecimal qpow = BigDecimal::from_integer(1);
    for (long n = 1; n < series_order; ++n) {
        qpow = mul(qpow, -t);
        sum = add(sum, mul(BigDecimal(c.coeff(n), 0, 0), qpow));
    }
    return sum.rescaled(fd);
}

VerificationReport factorization_check(const std::map<long, long>& prime_powers) {
    Stopwatch timer;
    VerificationReport report;
    report.identity = "cm163-factorization";
    std::ostringstream w;
    for (const auto& [p, e] : prime_powers) w << (w.tellp() > 0 ? "*" : "") << p << "^" << e;
    report.window = w.str();
    BigInt product{1};
    for (const auto& [p, e] : prime_powers) {
        product *= pow_int(p, static_cast<unsigned long>(e));
    }
    const BigInt expected(kCm163Integer);
    report.checked = 1;
    if (product == expected) {
        report.status = Status::verified;
    } else {
        report.status = Status::failed;
        report.first_mismatch = Mismatch{{0}, product.get_str(), expected.get_str()};
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

VerificationReport factorization_check() {
    return factorization_check({{2, 18}, {3, 3}, {5, 3}, {23, 3}, {29, 3}});
}

Cm163Result run_cm163(long fractional_digits, long series_order) {
    Cm163Result r;
    r.fractional_digits = fractional_digits;
    r.series_order = series_order;
    r.exp_value = exp_pi_sqrt163(fractional_digits);
    r.exp_string = r.exp_value.to_string(fractional_digits);
    r.j_value = j_at_cm163(fractional_digits, series_order);
    const BigDecimal target = BigDecimal::from_integer(BigInt(kCm163Integer));
    r.residual = add(r.j_value, target);
    r.two_term_deviation = add(add(-r.exp_value, BigDecimal::from_integer(744)), target);
    r.factorization = factorization_check();
    return r;
}

}  // namespace moonshine
