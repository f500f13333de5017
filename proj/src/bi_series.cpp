#include "moonshine/bi_series.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace moonshine {

namespace {
const BigInt kZero{0};
}

BiSeries::BiSeries(long outer_valuation, long outer_order, long inner_valuation, long inner_order)
    : outer_valuation_(outer_valuation),
      outer_order_(outer_order),
      inner_valuation_(inner_valuation),
      inner_order_(inner_order) {
    if (outer_order_ <= outer_valuation_ || inner_order_ <= inner_valuation_) {
        throw std::invalid_argument("BiSeries: empty window");
    }
    rows_.assign(outer_order_ - outer_valuation_,
                 LaurentSeries::zero(inner_valuation_, inner_order_));
}

const LaurentSeries& BiSeries::row(long outer_exponent) const {
    if (outer_exponent < outer_valuation_ || outer_exponent >= outer_order_) {
        throw std::invalid_argument("BiSeries: row " + std::to_string(outer_exponent) +
                                    " outside tracked window");
    }
    return rows_[outer_exponent - outer_valuation_];
}

void BiSeries::set_row(long outer_exponent, LaurentSeries s) {
    if (outer_exponent < outer_valuation_ || outer_exponent >= outer_order_) {
        throw std::invalid_argument("BiSeries: row outside tracked window");
    }
    if (s.valuation() != inner_valuation_ || s.order() != inner_order_) {
        s = moonshine::restricted(s, inner_valuation_, inner_order_);
    }
    rows_[outer_exponent - outer_valuation_] = std::move(s);
}

const BigInt& BiSeries::coeff(long outer_exponent, long inner_exponent) const {
    if (outer_exponent >= outer_order_) {
        throw std::invalid_argument("BiSeries: outer exponent " + std::to_string(outer_exponent) +
                                    " beyond tracked order " + std::to_string(outer_order_));
    }
    if (outer_exponent < outer_valuation_) return kZero;
    return rows_[outer_exponent - outer_valuation_].coeff(inner_exponent);
}

BiSeries BiSeries::restricted(long ov, long oo, long iv, long io) const {
    if (oo > outer_order_ || io > inner_order_) {
        throw std::invalid_argument("BiSeries::restricted: cannot extend knowledge");
    }
    BiSeries out(ov, oo, iv, io);
    for (long s = ov; s < oo; ++s) {
        if (s < outer_valuation_) continue;  // rows below the valuation are zero
        out.set_row(s, moonshine::restricted(row(s), iv, io));
    }
    return out;
}

void BiExponentTable::set(long m, long n, BigInt e) {
    if (e == 0) {
        entries_.erase({m, n});
    } else {
        entries_[{m, n}] = std::move(e);
    }
}

const BigInt& BiExponentTable::at(long m, long n) const {
    auto it = entries_.find({m, n});
    return it == entries_.end() ? kZero : it->second;
}

// Truncation soundness for two-variable products.
//
// Every factor term (1 - p^m q^n)^e contributes monomials x^k = p^(mk) q^(nk).
// A partial-product term discarded for lying outside the target window can
// re-enter it later only by riding a factor monomial that moves it back, so
// the working window must be widened by the total possible "downward drift":
//
//   M- = sum over factors with m < 0 of (-m) * kcap   (outer decrease budget)
//   N- = sum over factors with n < 0 of (-n) * kcap   (inner decrease budget)
//
// where kcap bounds the power of the factor that can appear. For e >= 0 the
// factor is a polynomial and kcap <= e; for e < 0 the binomial series is
// infinite, so kcap must come from the window geometry alone — that is only
// well-founded when the factor moves strictly "upward" (m >= 0, n >= 0),
// which is why negative exponents are restricted to that quadrant.
//
// With those budgets:
//   * terms with outer exponent >= outer_order + M- can never return below
//     outer_order, so the working upper bound outer_order + M- is sound;
//   * no term can ever sit below outer exponent -M- (total decrease <= M-),
//     so rows are tracked from min(0, -M-);
//   * same for the inner variable with N-.
// Everything inside the widened window is computed exactly; the final
// product is then exact on (and below) the declared window.
BiSeries bi_product_expansion(const BiExponentTable& exponents, long outer_order, long inner_order,
                              long outer_valuation_shift) {
    if (outer_order < 1 || inner_order < 1) {
        throw std::invalid_argument("bi_product_expansion: window bounds must be >= 1");
    }

    long outer_dec = 0, inner_dec = 0;  // M-, N-
    for (const auto& [key, e] : exponents.entries()) {
        const auto [m, n] = key;
        if (m == 0 && n == 0) {
            throw std::invalid_argument("bi_product_expansion: factor (1 - 1) is zero");
        }
        if ((m < 0 || n < 0) && e < 0) {
            throw std::invalid_argument(
                "bi_product_expansion: negative exponent at (m,n)=(" + std::to_string(m) + "," +
                std::to_string(n) + ") is outside the supported m>=0, n>=0 quadrant");
        }
        const long ecap = mpz_fits_slong_p(e.get_mpz_t()) ? std::labs(mpz_get_si(e.get_mpz_t()))
                                                           : 1'000'001L;
        if (m < 0) outer_dec += -m * ecap;
        if (n < 0) inner_dec += -n * ecap;
        if (outer_dec > 1'000'000 || inner_dec > 1'000'000) {
            throw std::invalid_argument("bi_product_expansion: drift budget too large");
        }
    }

    const long o_lo = std::min(0L, -outer_dec);
    const long o_hi = outer_order + outer_dec;
    const long i_lo = std::min(0L, -inner_dec);
    const long i_hi = inner_order + inner_dec;

    // Dense accumulator over the working window.
    const long rows = o_hi - o_lo, cols = i_hi - i_lo;
    std::vector<std::vector<BigInt>> acc(rows, std::vector<BigInt>(cols));
    acc[0 - o_lo][0 - i_lo] = 1;

    for (const auto& [key, e] : exponents.entries()) {
        const auto [m, n] = key;
        if (e == 0) continue;

        // Largest k whose monomial p^(mk) q^(nk) fits the working window.
        long kcap = std::numeric_limits<long>::max();
        if (e >= 0) {
            kcap = mpz_fits_slong_p(e.get_mpz_t()) ? mpz_get_si(e.get_mpz_t()) : kcap;
        }
        if (m > 0) kcap = std::min(kcap, (o_hi - 1) / m);
        if (m < 0) kcap = std::min(kcap, -o_lo / -m);
        if (n > 0) kcap = std::min(kcap, (i_hi - 1) / n);
        if (n < 0) kcap = std::min(kcap, -i_lo / -n);
        if (kcap <= 0) continue;

        std::vector<BigInt> fc(kcap + 1);  // fc[k] = binom(e,k) * (-1)^k
        for (long k = 0; k <= kcap; ++k) {
            fc[k] = binomial(e, static_cast<unsigned long>(k));
            if (k & 1) fc[k] = -fc[k];
        }

        // out = acc * factor; k = 0 term copies acc, the rest shift by (mk, nk).
        std::vector<std::vector<BigInt>> out = acc;
        for (long k = 1; k <= kcap; ++k) {
            const long ds = m * k, dt = n * k;
            for (long s = 0; s < rows; ++s) {
                const long s2 = s + ds;
                if (s2 < 0 || s2 >= rows) continue;
                const auto& src = acc[s];
                auto& dst = out[s2];
                const long t_begin = std::max(0L, -dt);
                const long t_end = std::min(cols, cols - dt);
                for (long t = t_begin; t < t_end; ++t) {
                    if (src[t] == 0) continue;
                    mpz_addmul(dst[t + dt].get_mpz_t(), fc[k].get_mpz_t(), src[t].get_mpz_t());
                }
            }
        }
        acc.swap(out);
    }

    BiSeries result(o_lo + outer_valuation_shift, outer_order + outer_valuation_shift, i_lo,
                    inner_order);
    for (long s = o_lo; s < outer_order; ++s) {
        std::vector<BigInt> row(acc[s - o_lo].begin(), acc[s - o_lo].begin() + (inner_order - i_lo));
        result.set_row(s + outer_valuation_shift, LaurentSeries(i_lo, inner_order, std::move(row)));
    }
    return result;
}

std::optional<BiMismatch> first_mismatch(const BiSeries& a, const BiSeries& b, long* compared) {
    const long o_lo = std::min(a.outer_valuation(), b.outer_valuation());
    const long o_hi = std::min(a.outer_order(), b.outer_order());
    const long i_lo = std::min(a.inner_valuation(), b.inner_valuation());
    const long i_hi = std::min(a.inner_order(), b.inner_order());
    if (o_hi <= o_lo || i_hi <= i_lo) {
        throw std::invalid_argument("BiSeries comparison: tracked windows are disjoint");
    }
    long count = 0;
    std::optional<BiMismatch> found;
    for (long s = o_lo; s < o_hi; ++s) {
        for (long t = i_lo; t < i_hi; ++t) {
            ++count;
            if (!found) {
                const BigInt& x = a.coeff(s, t);
                const BigInt& y = b.coeff(s, t);
                if (x != y) found = BiMismatch{s, t, x, y};
            }
        }
    }
    if (compared) *compared = count;
    return found;
}

}  // namespace moonshine
