#include "moonshine/big_decimal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace moonshine {

namespace {

// ceil(x / y) for x >= 0, y > 0.
BigInt ceil_div(const BigInt& x, const BigInt& y) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    if (r != 0) ++q;
    return q;
}

long exact_digits(const BigInt& v) {
    return static_cast<long>(BigInt(abs(v)).get_str().size());
}

}  // namespace

BigDecimal::BigDecimal(BigInt mantissa, long scale, BigInt error_ulp)
    : mantissa_(std::move(mantissa)), scale_(scale), error_ulp_(std::move(error_ulp)) {
    if (error_ulp_ < 0) throw std::invalid_argument("BigDecimal: negative error bound");
}

BigDecimal BigDecimal::from_integer(BigInt v) { return BigDecimal(std::move(v), 0, 0); }

long BigDecimal::precision() const {
    if (mantissa_ == 0) return 0;
    const long digits = exact_digits(mantissa_);
    const long err_digits = error_ulp_ == 0 ? 0 : exact_digits(error_ulp_);
    return std::max(0L, digits - err_digits - 1);
}

BigDecimal BigDecimal::rescaled(long new_scale) const {
    if (new_scale >= scale_) {
        const BigInt f = pow10(new_scale - scale_);
        return BigDecimal(mantissa_ * f, new_scale, error_ulp_ * f);
    }
    const long k = scale_ - new_scale;
    BigInt m;
    mpz_tdiv_q(m.get_mpz_t(), mantissa_.get_mpz_t(), pow10(k).get_mpz_t());
    return BigDecimal(m, new_scale, ceil_div(error_ulp_, pow10(k)) + 1);
}

BigDecimal BigDecimal::operator-() const { return BigDecimal(-mantissa_, scale_, error_ulp_); }

std::string BigDecimal::to_string() const {
    const bool neg = mantissa_ < 0;
    std::string digits = BigInt(abs(mantissa_)).get_str();
    if (scale_ <= 0) {
        digits.append(-scale_, '0');
        return (neg ? "-" : "") + digits;
    }
    if (static_cast<long>(digits.size()) <= scale_) {
        digits.insert(0, scale_ - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - scale_, ".");
    return (neg ? "-" : "") + digits;
}

std::string BigDecimal::to_string(long fractional_digits) const {
    return rescaled(fractional_digits).to_string();
}

std::string BigDecimal::to_significant_string(long significant) const {
    if (significant < 1) throw std::invalid_argument("to_significant_string: need >= 1 digit");
    if (mantissa_ == 0) return "0";
    const long digits = exact_digits(mantissa_);
    return rescaled(scale_ - (digits - significant)).to_string();
}

std::string BigDecimal::to_scientific(int significant) const {
    if (mantissa_ == 0) return "0";
    const bool neg = mantissa_ < 0;
    std::string digits = BigInt(abs(mantissa_)).get_str();
    const long exp10 = static_cast<long>(digits.size()) - 1 - scale_;
    if (static_cast<long>(digits.size()) > significant) digits.resize(significant);
    std::string out = neg ? "-" : "";
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + (exp10 >= 0 ? std::string("+") : std::string("-")) +
           std::to_string(std::labs(exp10));
    return out;
}

BigDecimal add(const BigDecimal& a, const BigDecimal& b) {
    const long s = std::max(a.scale(), b.scale());
    const BigDecimal x = a.rescaled(s), y = b.rescaled(s);
    return BigDecimal(x.mantissa() + y.mantissa(), s, x.error_ulp() + y.error_ulp());
}

BigDecimal sub(const BigDecimal& a, const BigDecimal& b) { return add(a, -b); }

BigDecimal mul(const BigDecimal& a, const BigDecimal& b) {
    // |xy - ab| <= e_a|b| + e_b|a| + e_a e_b, in ulps at scale_a + scale_b.
    const BigInt m = a.mantissa() * b.mantissa();
    const BigInt err = a.error_ulp() * abs(b.mantissa()) + b.error_ulp() * abs(a.mantissa()) +
                       a.error_ulp() * b.error_ulp();
    return BigDecimal(m, a.scale() + b.scale(), err).rescaled(std::max(a.scale(), b.scale()));
}

BigDecimal div_to_scale(const BigDecimal& a, const BigDecimal& b, long scale) {
    if (abs(b.mantissa()) <= 2 * b.error_ulp()) {
        throw std::invalid_argument("div_to_scale: divisor not bounded away from zero");
    }
    // q = trunc(a/b * 10^scale); the exponent balance is
    // E = scale - a.scale + b.scale (applied to whichever side keeps it >= 0).
    const long E = scale - a.scale() + b.scale();
    const BigInt abs_b = abs(b.mantissa());
    BigInt q;
    if (E >= 0) {
        const BigInt num = a.mantissa() * pow10(E);
        mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa().get_mpz_t());
    } else {
        const BigInt den = b.mantissa() * pow10(-E);
        mpz_tdiv_q(q.get_mpz_t(), a.mantissa().get_mpz_t(), den.get_mpz_t());
    }
    // Error in result ulps:
    //   from a: e_a * 10^E / |b_m|
    //   from b: |a/b| * e_b / |b_value| <= (|q|+1) * e_b / |b_m| ... but
    //     1/|b_value| in b-mantissa units needs the same care, and since
    //     |b_m| > 2 e_b the first-order bound below is doubled for safety.
    BigInt err_a = (E >= 0) ? ceil_div(a.error_ulp() * pow10(E), abs_b)
                            : ceil_div(a.error_ulp(), abs_b * pow10(-E));
    BigInt err_b = ceil_div((abs(q) + 1) * 2 * b.error_ulp(), abs_b);
    return BigDecimal(q, scale, err_a + err_b + 2);
}

bool abs_at_most(const BigDecimal& a, const BigInt& t, long t_scale) {
    // |value| <= t * 10^-t_scale  <=>  (|m|+e) * 10^t_scale <= t * 10^a.scale
    // after clearing the common power (offset keeps both exponents >= 0).
    const long off = std::min(t_scale, a.scale());
    const BigInt lhs = (abs(a.mantissa()) + a.error_ulp()) * pow10(t_scale - off);
    const BigInt rhs = t * pow10(a.scale() - off);
    return lhs <= rhs;
}

namespace {

// arctan(1/x) * 10^s by the alternating series; each term is truncated
// (< 1 ulp each) and the alternating tail is below the first omitted
// term, so the total error is < (terms + 1) ulp.
BigInt arctan_inv_scaled(long x, long s, long* terms_out) {
    const BigInt x2 = BigInt(x) * x;
    BigInt u = pow10(s) / x;
    BigInt total = u;
    long terms = 1;
    for (long k = 1; u != 0; ++k) {
        u /= x2;
        if (u == 0) break;
        const BigInt term = u / (2 * k + 1);
        if (k & 1) {
            total -= term;
        } else {
            total += term;
        }
        ++terms;
    }
    if (terms_out) *terms_out = terms;
    return total;
}

}  // namespace

BigDecimal compute_pi(long significant) {
    if (significant < 1) throw std::invalid_argument("compute_pi: need >= 1 digit");
    // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239), 12 guard digits.
    const long s = significant + 12;
    long t5 = 0, t239 = 0;
    const BigInt a5 = arctan_inv_scaled(5, s, &t5);
    const BigInt a239 = arctan_inv_scaled(239, s, &t239);
    return BigDecimal(16 * a5 - 4 * a239, s, 16 * BigInt(t5 + 1) + 4 * BigInt(t239 + 1));
}

BigDecimal sqrt_int(const BigInt& n, long significant) {
    if (n < 0) throw std::invalid_argument("sqrt_int: negative argument");
    if (significant < 1) throw std::invalid_argument("sqrt_int: need >= 1 digit");
    if (n == 0) return BigDecimal(0, 0, 0);
    const long s = significant + 5;
    // floor(sqrt(n * 10^(2s))) is within 1 ulp of sqrt(n) * 10^s.
    return BigDecimal(isqrt_floor(n * pow10(2 * s)), s, 1);
}

BigDecimal exp_big(const BigDecimal& x, long significant) {
    if (significant < 1) throw std::invalid_argument("exp_big: need >= 1 digit");
    if (x.mantissa() == 0) return BigDecimal::from_integer(1);
    if (x.sign() < 0) {
        // 1/e^|x| is of magnitude 10^-D; pick the scale so `significant`
        // digits survive past the leading zeros.
        const BigDecimal pos = exp_big(-x, significant + 5);
        const long D = std::max(0L, exact_digits(pos.mantissa()) - 1 - pos.scale());
        return div_to_scale(BigDecimal::from_integer(1), pos, significant + D + 5);
    }

    const BigDecimal xi = x.rescaled(0);
    if (abs(xi.mantissa()) > 20000) {
        throw std::invalid_argument("exp_big: |x| too large for this fixed-point evaluator");
    }
    const double xd = mpz_get_d(xi.mantissa().get_mpz_t()) + 1.0;

    // Halve until y = x/2^k <= 1/2, run the Taylor series there, square
    // k times. Guard digits absorb the 2^k error amplification (each
    // squaring at most doubles the error and adds the rescale ulp).
    const long k = std::max(0L, static_cast<long>(std::ceil(std::log2(xd))) + 1);
    const long integer_digits = static_cast<long>(xd / std::log(10.0)) + 2;
    const long sw = significant + integer_digits + k + 15;  // working scale

    BigInt ym = x.mantissa() * pow10(std::max(0L, sw - x.scale()));
    if (sw < x.scale()) ym /= pow10(x.scale() - sw);
    BigInt y_err = x.error_ulp() * pow10(std::max(0L, sw - x.scale())) + 1;
    ym /= pow_int(2, static_cast<unsigned long>(k));
    y_err = y_err / pow_int(2, static_cast<unsigned long>(k)) + 1;

    // Taylor terms with two truncations each; propagated term error stays
    // below 4 ulp (geometric in y <= 1/2), so 4*(terms+2) covers the sum
    // and the dropped tail. Input error enters via |d e^y| <= 2 dy.
    const BigInt one = pow10(sw);
    BigInt sum = one;
    BigInt term = one;
    long terms = 1;
    for (long r = 1; term != 0; ++r) {
        term = term * ym / one / r;
        sum += term;
        ++terms;
    }
    BigInt err = 2 * y_err + 4 * BigInt(terms + 2);

    BigInt z = sum;
    for (long i = 0; i < k; ++i) {
        err = (err * (2 * abs(z) + err)) / one + 2;
        z = z * z / one;
    }
    return BigDecimal(z, sw, err);
}

}  // namespace moonshine
