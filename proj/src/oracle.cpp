#include "holorec/oracle.hpp"

#include "holorec/errors.hpp"

namespace holorec {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rat exact_power_or_throw(const Rat& base, const Rat& e, const std::string& what) {
    auto v = rat_pow_exact(base, e);
    if (!v)
        throw Error(what + ": no exact rational value for " + rat_str(base) + "^" + rat_str(e));
    return *v;
}

// sqrt(p) as a series; p(0) must be the square of a nonnegative rational.
TruncatedSeries sqrt_of_poly(const Poly& p, int order) {
    Rat p0 = p.constant_term();
    if (p0 == 0) throw Error("sqrt of a polynomial vanishing at 0");
    Rat c = exact_power_or_throw(p0, Rat(1, 2), "sqrt");
    TruncatedSeries unit = series_scale(1 / p0, series_from_poly(p, order));
    return series_scale(c, series_pow(unit, Rat(1, 2)));
}

// First-order solve of L*f' + H*f = 0 with f(0) = 1.
TruncatedSeries solve_first_order(const Poly& L, const Poly& H, int order) {
    if (L.constant_term() == 0) throw Error("first-order solve needs L(0) != 0");
    TruncatedSeries f;
    f.c.assign(static_cast<std::size_t>(order) + 1, Rat(0));
    f.c[0] = 1;
    // [x^(n-1)]: sum_i L_i*(n-i)*f_{n-i} + sum_i H_i*f_{n-1-i} = 0
    for (int n = 1; n <= order; ++n) {
        Rat acc(0);
        for (int i = 1; i <= std::min(n, L.degree()); ++i)
            acc += L[i] * Rat(n - i) * f.c[static_cast<std::size_t>(n - i)];
        for (int i = 0; i <= std::min(n - 1, H.degree()); ++i)
            acc += H[i] * f.c[static_cast<std::size_t>(n - 1 - i)];
        f.c[static_cast<std::size_t>(n)] = -acc / (L.constant_term() * Rat(n));
    }
    return f;
}

// Division tolerating a zero constant term of the divisor when the
// dividend shares the factor x^k exactly.
TruncatedSeries divide_with_valuation(const TruncatedSeries& num, const Poly& q, int order) {
    int val = 0;
    while (val <= q.degree() && q[val] == 0) ++val;
    if (val > q.degree()) throw Error("division by the zero polynomial");
    for (int i = 0; i < val; ++i)
        if (num.at(i) != 0)
            throw Error("numerator is not divisible by x^" + std::to_string(val));
    Poly qs(std::vector<Rat>(q.coeffs().begin() + val, q.coeffs().end()));
    TruncatedSeries shifted;
    shifted.c.assign(static_cast<std::size_t>(order) + 1, Rat(0));
    for (int i = 0; i + val <= num.order() && i <= order; ++i)
        shifted.c[static_cast<std::size_t>(i)] = num.at(i + val);
    return series_div(shifted, series_from_poly(qs, order));
}

TruncatedSeries hypergeometric_series(const Hypergeometric& h, int order) {
    TruncatedSeries g;
    g.c.assign(static_cast<std::size_t>(order) + 1, Rat(0));
    Rat term(1); // n = 0 value of the Pochhammer quotient
    for (long n = 0;; ++n) {
        long idx = h.t + h.r * n;
        if (idx > order) break;
        g.c[static_cast<std::size_t>(idx)] = term;
        Rat num(1), den(1);
        for (const Rat& a : h.alphas) num *= a + Rat(n);
        for (const Rat& b : h.betas) den *= b + Rat(n);
        den *= Rat(n + 1) * h.c;
        if (den == 0) throw Error("hypergeometric term ratio denominator vanished at n=" +
                                  std::to_string(n));
        term *= num / den;
    }
    return g;
}

} // namespace

TruncatedSeries series_poly_power(const Poly& p, const Rat& alpha, int order) {
    if (rat_is_integer(alpha)) {
        long a = rat_to_long(alpha);
        if (a >= 0) {
            if (a > 4096) throw Error("polynomial power exponent too large");
            return series_from_poly(p.pow(static_cast<unsigned>(a)), order);
        }
        TruncatedSeries one = series_from_poly(Poly(1), order);
        return series_div(one, series_from_poly(p.pow(static_cast<unsigned>(-a)), order));
    }
    Rat p0 = p.constant_term();
    if (p0 == 0) throw Error("fractional power of a polynomial vanishing at 0");
    Rat c = exact_power_or_throw(p0, alpha, "polynomial power");
    TruncatedSeries unit = series_scale(1 / p0, series_from_poly(p, order));
    return series_scale(c, series_pow(unit, alpha));
}

TruncatedSeries oracle_expand(const GFClass& cls, int order) {
    validate_class(cls);
    return std::visit(
        overloaded{
            [&](const InverseRoot& c) { return series_poly_power(c.p, -1 / c.r, order); },
            [&](const GeneralRoot& c) {
                TruncatedSeries root = series_poly_power(c.p, -1 / c.r, order);
                TruncatedSeries num = series_mul(series_from_poly(c.q, order), root);
                return series_div(num, series_from_poly(c.v, order));
            },
            [&](const SqrtRatio& c) {
                TruncatedSeries ratio = series_div(series_from_poly(c.q, order),
                                                   series_from_poly(c.p, order));
                Rat r0 = ratio.c[0];
                Rat s = exact_power_or_throw(r0, Rat(1, 2), "sqrt-ratio");
                return series_scale(s, series_pow(series_scale(1 / r0, ratio), Rat(1, 2)));
            },
            [&](const RootedDenominator& c) {
                TruncatedSeries den = series_add(series_from_poly(c.w, order),
                                                 series_mul(series_from_poly(c.v, order),
                                                            sqrt_of_poly(c.p, order)));
                return series_div(series_from_poly(c.q, order), den);
            },
            [&](const RootedNumerator& c) {
                TruncatedSeries root = series_poly_power(c.p, 1 / c.r, order);
                TruncatedSeries num = series_add(series_from_poly(c.w, order),
                                                 series_mul(series_from_poly(c.v, order), root));
                return divide_with_valuation(num, c.q, order);
            },
            [&](const NestedSqrt& c) {
                TruncatedSeries inner = series_add(series_from_poly(c.w, order),
                                                   sqrt_of_poly(c.p, order));
                Rat f0 = inner.c[0];
                Rat g0 = exact_power_or_throw(f0, 1 / c.r, "nested-sqrt");
                return series_scale(g0, series_pow(series_scale(1 / f0, inner), 1 / c.r));
            },
            [&](const ExpPolySqrt& c) {
                TruncatedSeries arg = series_from_poly(c.w, order);
                if (!c.p.is_zero())
                    arg = series_add(arg, series_scale(Rat(c.sign), sqrt_of_poly(c.p, order)));
                return series_exp(arg);
            },
            [&](const ExpRationalTimesRoot& c) {
                TruncatedSeries arg = series_div(series_from_poly(c.q, order),
                                                 series_from_poly(c.v, order));
                TruncatedSeries root = series_poly_power(c.p, -1 / c.r, order);
                return series_mul(series_exp(arg), root);
            },
            [&](const LogRational& c) {
                TruncatedSeries ratio = series_div(series_from_poly(c.q, order),
                                                   series_from_poly(c.v, order));
                return series_log(ratio);
            },
            [&](const Hypergeometric& c) { return hypergeometric_series(c, order); },
            [&](const PowerOfFirstOrder& c) {
                TruncatedSeries f = solve_first_order(c.L, c.H, order);
                Rat f0 = f.c[0]; // 1 by construction
                return series_scale(f0, series_pow(f, 1 / c.r));
            }},
        cls);
}

} // namespace holorec
