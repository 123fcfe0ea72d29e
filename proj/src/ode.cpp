#include "holorec/ode.hpp"

#include "holorec/errors.hpp"

namespace holorec {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Split a rational r into (a, b) with r = a/b; the class formulas are
// multiplied through by b so the ODE coefficients stay polynomial.
std::pair<Rat, Rat> split_r(const Rat& r) {
    if (r == 0) throw DerivationError("exponent r must be nonzero");
    return {Rat(r.get_num()), Rat(r.get_den())};
}

LinearODE first_order(Poly R, Poly Q, Poly H = Poly()) {
    if (R.is_zero()) throw DerivationError("leading ODE coefficient vanished");
    LinearODE ode;
    ode.coeffs = {std::move(Q), std::move(R)};
    ode.inhom = std::move(H);
    return ode;
}

LinearODE derive_raw(const GFClass& cls);

LinearODE nested_sqrt_ode(const NestedSqrt& c) {
    switch (detect_degenerate(c.w, c.p, c.r)) {
        case NestedKind::SquareCase:
            // g = (2w)^(1/r)
            return derive_raw(InverseRoot{Rat(2) * c.w, -c.r});
        case NestedKind::ProportionalCase: {
            // w^2 = C*p: sqrt(p) = s*w/sqrt(C), so g = ((1 + s/sqrt(C))*w)^(1/r).
            Poly c_poly = poly_divexact(c.w * c.w, c.p);
            if (!c_poly.is_constant())
                throw DerivationError("proportional nested sqrt with non-constant ratio");
            Rat C = c_poly.constant_term();
            auto sq = rat_nth_root(C, 2);
            if (!sq) throw DerivationError("nested sqrt ratio w^2/p is not a rational square");
            Rat s = Rat(sgn(c.w.constant_term()));
            Rat scale = 1 + s / *sq;
            if (scale == 0) throw DerivationError("nested sqrt collapses to zero");
            // Scale is a constant factor on w; the homogeneous ODE is scale-free.
            return derive_raw(InverseRoot{scale * c.w, -c.r});
        }
        case NestedKind::Regular: break;
    }
    auto trq = alpha_cross(alpha_vector_nested(c.w, c.p, c.r));
    if (trq[0].is_zero()) throw DerivationError("nested sqrt: T vanished outside a detected degeneracy");
    LinearODE ode;
    ode.coeffs = {trq[2], trq[1], trq[0]};
    ode.inhom = Poly();
    return ode;
}

LinearODE derive_raw(const GFClass& cls) {
    return std::visit(
        overloaded{
            [&](const InverseRoot& c) {
                auto [a, b] = split_r(c.r);
                return first_order(a * c.p, b * c.p.derivative());
            },
            [&](const GeneralRoot& c) {
                auto [a, b] = split_r(c.r);
                Poly R = a * (c.q * c.p * c.v);
                Poly Q = a * (c.q * c.p * c.v.derivative()) - a * (c.p * c.q.derivative() * c.v) +
                         b * (c.q * c.p.derivative() * c.v);
                return first_order(R, Q);
            },
            [&](const SqrtRatio& c) {
                Poly R = Rat(2) * (c.q * c.p);
                Poly Q = c.q * c.p.derivative() - c.q.derivative() * c.p;
                return first_order(R, Q);
            },
            [&](const RootedDenominator& c) {
                const Poly &p = c.p, &q = c.q, &v = c.v, &w = c.w;
                Poly pd = p.derivative(), qd = q.derivative(), vd = v.derivative(),
                     wd = w.derivative();
                Poly vvp = v * v * p, ww = w * w;
                Poly R = Rat(2) * (p * v * q * (vvp - ww));
                Poly Q = Rat(-4) * (p * v * q * w * wd) + Rat(2) * (p * q * (vvp + ww) * vd) +
                         v * q * (vvp + ww) * pd - Rat(2) * (p * v * (vvp - ww) * qd);
                Poly H = -(q * q) * (Rat(2) * (p * v * wd) - Rat(2) * (w * p * vd) - w * v * pd);
                return first_order(R, Q, H);
            },
            [&](const RootedNumerator& c) {
                auto [a, b] = split_r(c.r);
                const Poly &p = c.p, &q = c.q, &v = c.v, &w = c.w;
                Poly R = a * (p * q * v);
                Poly Q = a * (p * (q.derivative() * v - q * v.derivative())) -
                         b * (v * p.derivative() * q);
                Poly H = a * (p * (w.derivative() * v - w * v.derivative())) -
                         b * (v * p.derivative() * w);
                return first_order(R, Q, H);
            },
            [&](const NestedSqrt& c) { return nested_sqrt_ode(c); },
            [&](const ExpPolySqrt& c) {
                if (c.p.is_zero()) return first_order(Poly(1), -c.w.derivative());
                auto trq = alpha_cross(alpha_vector_expsqrt(c.w, c.p, c.sign));
                if (trq[0].is_zero()) throw DerivationError("exp-poly-sqrt: T vanished");
                LinearODE ode;
                ode.coeffs = {trq[2], trq[1], trq[0]};
                ode.inhom = Poly();
                return ode;
            },
            [&](const ExpRationalTimesRoot& c) {
                auto [a, b] = split_r(c.r);
                Poly R = a * (c.p * c.v * c.v);
                Poly Q = b * (c.v * c.v * c.p.derivative()) -
                         a * (c.p * (c.q.derivative() * c.v - c.q * c.v.derivative()));
                return first_order(R, Q);
            },
            [&](const LogRational& c) {
                Poly R = c.q * c.v;
                Poly H = c.v * c.q.derivative() - c.q * c.v.derivative();
                return first_order(R, Poly(), H);
            },
            [&](const Hypergeometric&) -> LinearODE {
                throw DerivationError(
                    "hypergeometric shapes have no low-order ODE here; use the closed-form "
                    "recurrence");
            },
            [&](const PowerOfFirstOrder& c) {
                auto [a, b] = split_r(c.r);
                return first_order(a * c.L, b * c.H);
            }},
        cls);
}

} // namespace

NestedKind detect_degenerate(const Poly& w, const Poly& p, const Rat&) {
    if (w * w == p) return NestedKind::SquareCase;
    if (!w.is_zero() && w * p.derivative() == Rat(2) * (w.derivative() * p))
        return NestedKind::ProportionalCase;
    return NestedKind::Regular;
}

AlphaVector alpha_vector_nested(const Poly& w, const Poly& p, const Rat& r) {
    Poly wd = w.derivative(), wdd = wd.derivative();
    Poly pd = p.derivative(), pdd = pd.derivative();
    AlphaVector av;
    // alpha_1..alpha_3 carry 1/p in the paper; everything here is
    // multiplied by p, on both triples, so the cross product gains p^2.
    av.a[0] = (1 - r) * (wd * wd * p) + (Rat(1, 4) - r / 2) * (pd * pd) + r * (wdd * w * p) +
              (r / 2) * (pdd * p);
    av.a[1] = r * (wd * w * p) + (r / 2) * (pd * p);
    av.a[2] = (r * r) * (w * w * p) + (r * r) * (p * p);
    av.a[3] = ((1 - r) * (wd * pd * p) + (r / 2) * (w * pdd * p) - (r / 4) * (w * pd * pd) +
               r * (wdd * p * p)) *
              p;
    av.a[4] = ((r / 2) * (w * pd * p) + r * (wd * p * p)) * p;
    av.a[5] = ((2 * r * r) * (w * p * p)) * p;
    av.clear = p * p;
    av.post = 8 / r;
    return av;
}

AlphaVector alpha_vector_expsqrt(const Poly& w, const Poly& p, int sign) {
    Poly wd = w.derivative(), wdd = wd.derivative();
    Poly pd = p.derivative(), pdd = pd.derivative();
    Rat s(sign >= 0 ? 1 : -1);
    AlphaVector av;
    av.a[0] = (wdd + wd * wd) * p + Rat(1, 4) * (pd * pd);
    av.a[1] = wd * p;
    av.a[2] = Poly(1) * p;
    av.a[3] = (s / 2) * (pdd * p) - (s / 4) * (pd * pd) + s * (wd * pd * p);
    av.a[4] = (s / 2) * (pd * p);
    av.a[5] = Poly();
    // Only the first triple needed the 1/p clearing here; the second is
    // already polynomial, so the cross product gains a single p.
    av.clear = p;
    av.post = Rat(8);
    return av;
}

std::array<Poly, 3> alpha_cross(const AlphaVector& av) {
    const auto& a = av.a;
    if (a[0].is_zero() && a[1].is_zero() && a[2].is_zero())
        throw DerivationError("alpha cross product: first alpha triple is zero");
    std::array<Poly, 3> trq = {a[1] * a[5] - a[2] * a[4],   // T
                               a[2] * a[3] - a[0] * a[5],   // R
                               a[0] * a[4] - a[1] * a[3]};  // Q
    if (trq[0].is_zero() && trq[1].is_zero() && trq[2].is_zero())
        throw DerivationError("alpha cross product vanished: degenerate configuration");
    for (Poly& t : trq) {
        if (!av.clear.is_constant()) t = poly_divexact(t, av.clear);
        t = av.post * t;
    }
    // Clear denominators jointly (rational r leaves fractions behind).
    Int den_lcm(1);
    for (const Poly& t : trq)
        for (const Rat& c : t.coeffs())
            if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    if (den_lcm != 1)
        for (Poly& t : trq) t = Rat(den_lcm) * t;
    return trq;
}

LinearODE reduce_common_factor(LinearODE ode) {
    std::vector<Poly*> parts;
    for (Poly& c : ode.coeffs) parts.push_back(&c);
    bool inhom = !ode.inhom.is_zero();
    if (inhom) parts.push_back(&ode.inhom);

    Poly g;
    bool have = false;
    for (Poly* p : parts) {
        if (p->is_zero()) continue;
        g = have ? poly_gcd_primitive(g, *p) : poly_gcd_primitive(*p, *p);
        have = true;
    }
    if (have && !g.is_constant())
        for (Poly* p : parts)
            if (!p->is_zero()) *p = poly_divexact(*p, g);

    make_joint_primitive(parts);
    // Sign convention: lowest nonzero coefficient of the top term positive.
    const Poly& top = ode.coeffs.back();
    for (int k = 0; k <= top.degree(); ++k) {
        if (top[k] == 0) continue;
        if (sgn(top[k]) < 0)
            for (Poly* p : parts) *p = Rat(-1) * (*p);
        break;
    }
    return ode;
}

LinearODE differentiate_ode(const LinearODE& ode) {
    if (ode.order() != 1) throw DerivationError("only first-order ODEs are differentiated");
    const Poly& R = ode.A(1);
    const Poly& Q = ode.A(0);
    LinearODE out;
    out.coeffs = {Q.derivative(), R.derivative() + Q, R};
    out.inhom = ode.inhom.derivative();
    return out;
}

LinearODE derive_ode(const GFClass& cls) {
    return reduce_common_factor(derive_raw(cls));
}

LinearODE derive_ode_raw(const GFClass& cls) {
    return derive_raw(cls);
}

TruncatedSeries ode_residual(const LinearODE& ode, const TruncatedSeries& g) {
    int order = g.order() - ode.order();
    if (order < 0) throw Error("series too short for the ODE order");
    TruncatedSeries acc = series_scale(Rat(-1), series_from_poly(ode.inhom, order));
    TruncatedSeries deriv = g;
    for (int k = 0; k <= ode.order(); ++k) {
        TruncatedSeries term = series_mul(series_from_poly(ode.A(k), order), deriv);
        // term order may exceed `order`; series_add truncates to the min.
        acc = series_add(acc, term);
        if (k < ode.order()) deriv = series_derivative(deriv);
    }
    return acc;
}

} // namespace holorec
