#include "moonshine/laurent_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace moonshine {

namespace {
const BigInt kZero{0};
}

LaurentSeries::LaurentSeries(long valuation, long order, std::vector<BigInt> coeffs)
    : valuation_(valuation), order_(order), coeffs_(std::move(coeffs)) {
    if (order_ <= valuation_) {
        throw std::invalid_argument("LaurentSeries: empty window [" + std::to_string(valuation_) +
                                    ", " + std::to_string(order_) + ")");
    }
    if (static_cast<long>(coeffs_.size()) != order_ - valuation_) {
        throw std::invalid_argument("LaurentSeries: coefficient count " +
                                    std::to_string(coeffs_.size()) + " does not match window size " +
                                    std::to_string(order_ - valuation_));
    }
}

LaurentSeries LaurentSeries::zero(long valuation, long order) {
    return LaurentSeries(valuation, order, std::vector<BigInt>(order - valuation));
}

LaurentSeries LaurentSeries::constant(BigInt c, long order) {
    LaurentSeries s = zero(0, order);
    s.coeffs_[0] = std::move(c);
    return s;
}

LaurentSeries LaurentSeries::monomial(BigInt c, long exponent, long order) {
    LaurentSeries s = zero(std::min(exponent, 0L), order);
    s.coeffs_[exponent - s.valuation_] = std::move(c);
    return s;
}

const BigInt& LaurentSeries::coeff(long exponent) const {
    if (exponent >= order_) {
        throw std::invalid_argument("coefficient at q^" + std::to_string(exponent) +
                                    " is outside the tracked window (order " +
                                    std::to_string(order_) + "): unknown, not zero");
    }
    if (exponent < valuation_) return kZero;
    return coeffs_[exponent - valuation_];
}

std::optional<long> LaurentSeries::first_nonzero() const {
    for (long k = 0; k < static_cast<long>(coeffs_.size()); ++k) {
        if (coeffs_[k] != 0) return valuation_ + k;
    }
    return std::nullopt;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (long e = valuation_; e < order_; ++e) {
        const BigInt& c = coeff(e);
        if (c == 0) continue;
        const bool negative = c < 0;
        BigInt mag = abs(c);
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (e == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    if (first) out << "0";
    out << " + O(q^" << order_ << ")";
    return out.str();
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
    const long val = std::min(a.valuation(), b.valuation());
    const long ord = std::min(a.order(), b.order());
    std::vector<BigInt> c(ord - val);
    for (long e = val; e < ord; ++e) c[e - val] = a.coeff(e) + b.coeff(e);
    return LaurentSeries(val, ord, std::move(c));
}

LaurentSeries negated(const LaurentSeries& a) {
    std::vector<BigInt> c(a.coefficients());
    for (auto& x : c) x = -x;
    return LaurentSeries(a.valuation(), a.order(), std::move(c));
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) { return add(a, negated(b)); }

LaurentSeries scaled(const LaurentSeries& a, const BigInt& c) {
    std::vector<BigInt> v(a.coefficients());
    for (auto& x : v) x *= c;
    return LaurentSeries(a.valuation(), a.order(), std::move(v));
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
    const long val = a.valuation() + b.valuation();
    const long ord = std::min(a.order() + b.valuation(), b.order() + a.valuation());
    std::vector<BigInt> c(ord - val);
    // Schoolbook convolution. Any faster scheme must stay bit-identical.
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    for (long i = 0; i < static_cast<long>(ac.size()); ++i) {
        if (ac[i] == 0) continue;
        const long ea = a.valuation() + i;
        const long jmax = std::min(static_cast<long>(bc.size()), ord - ea - b.valuation());
        for (long j = 0; j < jmax; ++j) {
            if (bc[j] == 0) continue;
            mpz_addmul(c[ea + b.valuation() + j - val].get_mpz_t(), ac[i].get_mpz_t(),
                       bc[j].get_mpz_t());
        }
    }
    return LaurentSeries(val, ord, std::move(c));
}

LaurentSeries invert(const LaurentSeries& a, long target_order) {
    if (target_order < 1) {
        throw std::invalid_argument("invert: target_order must be >= 1");
    }
    const auto lead = a.first_nonzero();
    if (!lead) {
        throw std::invalid_argument("invert: series is zero on its tracked window");
    }
    const long v = *lead;
    const BigInt& lc = a.coeff(v);
    if (lc != 1 && lc != -1) {
        throw std::invalid_argument("invert: leading coefficient " + lc.get_str() + " at q^" +
                                    std::to_string(v) + " is not a unit (+1 or -1)");
    }
    const long n = std::min(target_order, a.order() - v);  // relative precision available
    // a = sum a_i q^(v+i), r = sum r_j q^(-v+j); (a*r)_k = [k == 0].
    std::vector<BigInt> r(n);
    r[0] = lc;  // 1/lc == lc for units
    for (long k = 1; k < n; ++k) {
        BigInt s{0};
        for (long i = 1; i <= k; ++i) {
            const BigInt& ai = a.coeff(v + i);
            if (ai == 0) continue;
            mpz_addmul(s.get_mpz_t(), ai.get_mpz_t(), r[k - i].get_mpz_t());
        }
        r[k] = -lc * s;
    }
    return LaurentSeries(-v, n - v, std::move(r));
}

LaurentSeries int_pow(const LaurentSeries& a, long k) {
    if (k < 0) {
        return int_pow(invert(a, a.window_size()), -k);
    }
    const LaurentSeries one = LaurentSeries::constant(1, a.window_size());
    if (k == 0) return one;
    // Repeated squaring. Window arithmetic makes this identical to the
    // k-fold product: every partial has relative precision a.window_size().
    LaurentSeries result = one;
    LaurentSeries base = a;
    long e = k;
    bool result_is_one = true;
    while (e > 0) {
        if (e & 1) {
            result = result_is_one ? base : mul(result, base);
            result_is_one = false;
        }
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

LaurentSeries shifted(const LaurentSeries& a, long shift) {
    return LaurentSeries(a.valuation() + shift, a.order() + shift, a.coefficients());
}

LaurentSeries dilated(const LaurentSeries& a, long d) {
    if (d < 1) throw std::invalid_argument("dilated: d must be >= 1");
    if (d == 1) return a;
    const long val = d * a.valuation();
    const long ord = d * a.order();
    std::vector<BigInt> c(ord - val);
    for (long k = 0; k < a.window_size(); ++k) c[d * k] = a.coefficients()[k];
    return LaurentSeries(val, ord, std::move(c));
}

LaurentSeries truncated(const LaurentSeries& a, long new_order) {
    return restricted(a, a.valuation(), new_order);
}

LaurentSeries restricted(const LaurentSeries& a, long new_valuation, long new_order) {
    if (new_order > a.order()) {
        throw std::invalid_argument("restricted: cannot extend order " + std::to_string(a.order()) +
                                    " to " + std::to_string(new_order));
    }
    if (new_order <= new_valuation) {
        throw std::invalid_argument("restricted: empty window");
    }
    std::vector<BigInt> c(new_order - new_valuation);
    for (long e = new_valuation; e < new_order; ++e) c[e - new_valuation] = a.coeff(e);
    return LaurentSeries(new_valuation, new_order, std::move(c));
}

std::optional<long> first_mismatch(const LaurentSeries& a, const LaurentSeries& b) {
    const long lo = std::max(a.valuation(), b.valuation());
    const long hi = std::min(a.order(), b.order());
    if (hi <= lo) {
        throw std::invalid_argument(
            "series comparison: tracked windows are disjoint; equality is undefined");
    }
    for (long e = lo; e < hi; ++e) {
        if (a.coeff(e) != b.coeff(e)) return e;
    }
    // Exponents below lo are zero for one side and must be zero for the other.
    const long floor_lo = std::min(a.valuation(), b.valuation());
    for (long e = floor_lo; e < lo; ++e) {
        if (a.coeff(e) != b.coeff(e)) return e;
    }
    return std::nullopt;
}

bool equal_on_overlap(const LaurentSeries& a, const LaurentSeries& b) {
    return !first_mismatch(a, b).has_value();
}

void ExponentTable::set(long n, BigInt e) {
    if (e == 0) {
        entries_.erase(n);
    } else {
        entries_[n] = std::move(e);
    }
}

const BigInt& ExponentTable::at(long n) const {
    auto it = entries_.find(n);
    return it == entries_.end() ? kZero : it->second;
}

ExponentTable ExponentTable::uniform(const BigInt& e, long lo, long hi) {
    ExponentTable t;
    for (long n = lo; n < hi; ++n) t.set(n, e);
    return t;
}

LaurentSeries product_expansion(const ExponentTable& exponents, long order) {
    if (order < 1) throw std::invalid_argument("product_expansion: order must be >= 1");
    LaurentSeries acc = LaurentSeries::constant(1, order);
    for (long n = 1; n < order; ++n) {
        const BigInt& e = exponents.at(n);
        if (e == 0) continue;
        // (1 - q^n)^e = sum_k binomial(e, k) (-1)^k q^(nk); only k with
        // nk < order can matter since the factor never lowers exponents.
        const long kmax = (order - 1) / n;
        std::vector<BigInt> fc(order);
        for (long k = 0; k <= kmax; ++k) {
            BigInt c = binomial(e, static_cast<unsigned long>(k));
            if (k & 1) c = -c;
            fc[n * k] = std::move(c);
        }
        acc = mul(acc, LaurentSeries(0, order, std::move(fc)));
    }
    return acc;
}

}  // namespace moonshine
