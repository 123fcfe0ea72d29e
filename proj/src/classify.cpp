#include "holorec/classify.hpp"

#include <optional>

#include "holorec/errors.hpp"

namespace holorec {

namespace {

// ---- rational functions -------------------------------------------------

// num/den with gcd removed and den monic.
struct RatFun {
    Poly num, den;

    static RatFun make(Poly n, Poly d) {
        if (d.is_zero()) throw UnsupportedShape("division by the zero function");
        if (n.is_zero()) return {Poly(), Poly(1)};
        Poly g = poly_gcd_primitive(n, d);
        if (!g.is_constant()) {
            n = poly_divexact(n, g);
            d = poly_divexact(d, g);
        }
        Rat lead = d.leading();
        return {(1 / lead) * n, (1 / lead) * d};
    }
    static RatFun from_poly(Poly p) { return {std::move(p), Poly(1)}; }
    static RatFun constant(const Rat& c) { return {Poly(c), Poly(1)}; }

    bool is_zero() const { return num.is_zero(); }
    bool is_poly() const { return den == Poly(1); }
    bool is_constant() const { return is_poly() && num.is_constant(); }
    Rat constant_value() const { return num.constant_term(); }

    friend RatFun operator+(const RatFun& x, const RatFun& y) {
        return make(x.num * y.den + y.num * x.den, x.den * y.den);
    }
    friend RatFun operator-(const RatFun& x, const RatFun& y) {
        return make(x.num * y.den - y.num * x.den, x.den * y.den);
    }
    friend RatFun operator*(const RatFun& x, const RatFun& y) {
        return make(x.num * y.num, x.den * y.den);
    }
    friend RatFun operator/(const RatFun& x, const RatFun& y) {
        return make(x.num * y.den, x.den * y.num);
    }
    RatFun operator-() const { return {-num, den}; }
    friend bool operator==(const RatFun& x, const RatFun& y) {
        return x.num == y.num && x.den == y.den;
    }

    RatFun powi(long e) const {
        if (e == 0) return constant(Rat(1));
        if (std::abs(e) > 512) throw UnsupportedShape("integer exponent too large");
        unsigned mag = static_cast<unsigned>(e < 0 ? -e : e);
        Poly pn = num.pow(mag), pd = den.pow(mag);
        return e > 0 ? make(pn, pd) : make(pd, pn);
    }
};

// ---- symbolic values ----------------------------------------------------

// One radical atom X = base^frac with 0 < frac < 1 and base nonconstant.
struct Radical {
    Poly base;
    Rat frac;
    friend bool operator==(const Radical& x, const Radical& y) {
        return x.frac == y.frac && x.base == y.base;
    }
    bool sqrt_like() const { return frac == Rat(1, 2); }
};

struct LinPair {
    RatFun a = RatFun::constant(Rat(0)); // X-free part
    RatFun b = RatFun::constant(Rat(0)); // coefficient of X
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

// (num.a + num.b*X) / (den.a + den.b*X), optionally times exp(exp_arg).
struct SymValue {
    LinPair num;
    LinPair den{RatFun::constant(Rat(1)), RatFun::constant(Rat(0))};
    std::optional<Radical> rad;
    std::optional<RatFun> exp_arg;
};

SymValue make_ratfun_value(RatFun f) {
    SymValue v;
    v.num.a = std::move(f);
    return v;
}

// Positive rational scale that makes the coefficients integer-primitive,
// preserving signs.
Rat positive_content_scale(const Poly& p) {
    Poly copy = p;
    Rat s = make_joint_primitive({&copy});
    return abs(s);
}

SymValue normalize(SymValue v);

// coeff * base^e as a symbolic value. Folds perfect rational powers of the
// content, absorbs integer parts of the exponent, and keeps 0 < frac < 1.
SymValue make_radical_monomial(RatFun coeff, Poly base, Rat e,
                               std::optional<RatFun> exp_arg = std::nullopt) {
    SymValue v;
    v.exp_arg = std::move(exp_arg);
    if (base.is_zero()) {
        if (sgn(e) <= 0) throw UnsupportedShape("zero base with nonpositive exponent");
        return v; // zero value
    }
    if (base.is_constant()) {
        auto k = rat_pow_exact(base.constant_term(), e);
        if (!k) throw UnsupportedShape("irrational constant power");
        v.num.a = coeff * RatFun::constant(*k);
        return normalize(std::move(v));
    }
    // Fold the content when its power is rational: c^e * (base/c)^e.
    Rat scale = positive_content_scale(base);
    if (scale != 1) {
        if (auto k = rat_pow_exact(1 / scale, e)) {
            coeff = coeff * RatFun::constant(*k);
            base = scale * base;
        }
    }
    if (rat_is_integer(e)) {
        v.num.a = coeff * RatFun::from_poly(base).powi(rat_to_long(e));
        return normalize(std::move(v));
    }
    // e = floor + frac with frac in (0,1).
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), e.get_num().get_mpz_t(), e.get_den().get_mpz_t());
    if (!fl.fits_slong_p()) throw UnsupportedShape("exponent out of range");
    long floor_part = fl.get_si();
    Rat frac = e - Rat(floor_part);
    if (floor_part != 0) coeff = coeff * RatFun::from_poly(base).powi(floor_part);
    v.num.b = std::move(coeff);
    v.rad = Radical{std::move(base), frac};
    return normalize(std::move(v));
}

// Drops unused radical/exponential markers and clears radical-only
// denominators back into monomial form.
SymValue normalize(SymValue v) {
    if (v.den.is_zero()) throw UnsupportedShape("division by the zero function");
    if (v.exp_arg && v.exp_arg->is_zero()) v.exp_arg.reset();
    if (v.rad && v.num.b.is_zero() && v.den.b.is_zero()) v.rad.reset();
    if (!v.rad) {
        v.num.b = RatFun::constant(Rat(0));
        v.den.b = RatFun::constant(Rat(0));
    }
    if (v.rad && v.den.a.is_zero()) {
        // (A + B*X)/(D*X) = B/D + (A/D) * X^(-frac)
        RatFun a = v.num.a / v.den.b;
        RatFun b = v.num.b / v.den.b;
        SymValue rest = make_radical_monomial(a, v.rad->base, -v.rad->frac, v.exp_arg);
        rest.num.a = rest.num.a + b * rest.den.a; // denominators of monomials are scalar 1
        return normalize(std::move(rest));
    }
    return v;
}

bool is_monomial(const SymValue& v) {
    return v.rad && v.num.a.is_zero() && v.den.b.is_zero();
}

bool value_is_zero(const SymValue& v) {
    return v.num.is_zero();
}

// X-free multiply: scale both linear parts.
SymValue scale_value(SymValue v, const RatFun& num_s, const RatFun& den_s) {
    v.num.a = v.num.a * num_s;
    v.num.b = v.num.b * num_s;
    v.den.a = v.den.a * den_s;
    v.den.b = v.den.b * den_s;
    return normalize(std::move(v));
}

LinPair lin_mul(const LinPair& x, const LinPair& y, const std::optional<Radical>& rad) {
    LinPair r;
    r.a = x.a * y.a;
    r.b = x.a * y.b + x.b * y.a;
    if (!x.b.is_zero() && !y.b.is_zero()) {
        if (!rad || !rad->sqrt_like())
            throw UnsupportedShape("product would need powers of a non-square radical");
        r.a = r.a + x.b * y.b * RatFun::from_poly(rad->base); // X^2 = base
    }
    return r;
}

std::optional<Radical> merge_radicals(const SymValue& u, const SymValue& v) {
    if (u.rad && v.rad) {
        if (!(*u.rad == *v.rad)) throw UnsupportedShape("mixing two different radicals");
        return u.rad;
    }
    return u.rad ? u.rad : v.rad;
}

std::optional<RatFun> merge_exp_add(const SymValue& u, const SymValue& v) {
    if (value_is_zero(u)) return v.exp_arg;
    if (value_is_zero(v)) return u.exp_arg;
    bool ue = u.exp_arg.has_value(), ve = v.exp_arg.has_value();
    if (ue != ve) throw UnsupportedShape("sum of exponential and non-exponential parts");
    if (ue && !(*u.exp_arg == *v.exp_arg))
        throw UnsupportedShape("sum of two different exponentials");
    return u.exp_arg;
}

SymValue val_add(const SymValue& u, const SymValue& v) {
    if (value_is_zero(u)) return v;
    if (value_is_zero(v)) return u;
    SymValue r;
    r.exp_arg = merge_exp_add(u, v);
    r.rad = merge_radicals(u, v);
    if (u.den.b.is_zero() && v.den.b.is_zero()) {
        r.num.a = u.num.a * v.den.a + v.num.a * u.den.a;
        r.num.b = u.num.b * v.den.a + v.num.b * u.den.a;
        r.den.a = u.den.a * v.den.a;
    } else {
        r.num.a = lin_mul(u.num, v.den, r.rad).a + lin_mul(v.num, u.den, r.rad).a;
        r.num.b = lin_mul(u.num, v.den, r.rad).b + lin_mul(v.num, u.den, r.rad).b;
        r.den = lin_mul(u.den, v.den, r.rad);
    }
    return normalize(std::move(r));
}

SymValue val_neg(SymValue v) {
    v.num.a = -v.num.a;
    v.num.b = -v.num.b;
    return v;
}

SymValue val_mul(const SymValue& u, const SymValue& v) {
    if (value_is_zero(u) || value_is_zero(v)) return SymValue{};
    std::optional<RatFun> exp_arg;
    if (u.exp_arg && v.exp_arg) {
        RatFun sum = *u.exp_arg + *v.exp_arg;
        if (!sum.is_zero()) exp_arg = sum;
    } else if (u.exp_arg || v.exp_arg) {
        exp_arg = u.exp_arg ? u.exp_arg : v.exp_arg;
    }
    if (!u.rad || !v.rad) {
        // At least one side is a plain rational function.
        const SymValue& scalar = u.rad ? v : u;
        const SymValue& other = u.rad ? u : v;
        SymValue r = scale_value(other, scalar.num.a, scalar.den.a);
        r.exp_arg = exp_arg;
        return normalize(std::move(r));
    }
    if (!(*u.rad == *v.rad)) {
        if (is_monomial(u) && is_monomial(v) && u.rad->base == v.rad->base) {
            // exponents live on the same base; recombine
        } else {
            throw UnsupportedShape("mixing two different radicals");
        }
    }
    if (is_monomial(u) && is_monomial(v) && u.rad->base == v.rad->base) {
        RatFun coeff = (u.num.b / u.den.a) * (v.num.b / v.den.a);
        return make_radical_monomial(coeff, u.rad->base, u.rad->frac + v.rad->frac, exp_arg);
    }
    SymValue r;
    r.exp_arg = exp_arg;
    r.rad = u.rad;
    r.num = lin_mul(u.num, v.num, r.rad);
    r.den = lin_mul(u.den, v.den, r.rad);
    return normalize(std::move(r));
}

SymValue val_invert(const SymValue& v) {
    if (value_is_zero(v)) throw UnsupportedShape("division by the zero function");
    SymValue r = v;
    std::swap(r.num, r.den);
    if (r.exp_arg) r.exp_arg = -*r.exp_arg;
    return normalize(std::move(r));
}

SymValue val_div(const SymValue& u, const SymValue& v) {
    return val_mul(u, val_invert(v));
}

SymValue val_pow(const SymValue& u, const Rat& e) {
    if (rat_is_integer(e)) {
        long k = rat_to_long(e);
        if (k == 0) return make_ratfun_value(RatFun::constant(Rat(1)));
        bool inv = k < 0;
        unsigned long mag = static_cast<unsigned long>(inv ? -k : k);
        if (mag > 512) throw UnsupportedShape("integer exponent too large");
        SymValue acc = make_ratfun_value(RatFun::constant(Rat(1)));
        SymValue base = u;
        while (mag) {
            if (mag & 1) acc = val_mul(acc, base);
            base = val_mul(base, base);
            mag >>= 1;
        }
        return inv ? val_invert(acc) : acc;
    }
    // Fractional exponent.
    std::optional<RatFun> exp_arg;
    SymValue body = u;
    if (u.exp_arg) {
        exp_arg = *u.exp_arg * RatFun::constant(e);
        body.exp_arg.reset();
    }
    if (!body.rad) {
        RatFun f = body.num.a / body.den.a;
        if (f.is_zero()) {
            if (sgn(e) <= 0) throw UnsupportedShape("zero base with nonpositive exponent");
            return SymValue{};
        }
        // (q/v)^(a/b) = v^(-a) * (q * v^(b-1))^(a/b)
        long a = rat_to_long(Rat(e.get_num()));
        long b = rat_to_long(Rat(e.get_den()));
        RatFun coeff = RatFun::from_poly(f.den).powi(-a);
        Poly base = f.num * f.den.pow(static_cast<unsigned>(b - 1));
        return make_radical_monomial(coeff, base, e, exp_arg);
    }
    if (is_monomial(body)) {
        RatFun coeff = body.num.b / body.den.a;
        if (!coeff.is_constant())
            throw UnsupportedShape("fractional power of a radical with non-constant coefficient");
        auto k = rat_pow_exact(coeff.constant_value(), e);
        if (!k) throw UnsupportedShape("irrational constant under fractional power");
        return make_radical_monomial(RatFun::constant(*k), body.rad->base, body.rad->frac * e,
                                     exp_arg);
    }
    throw UnsupportedShape("fractional power of a sum of radicals");
}

SymValue eval(const Expr& e);

SymValue eval_exp_atom(const Expr& arg) {
    SymValue a = eval(arg);
    if (a.rad || a.exp_arg)
        throw UnsupportedShape("exponential of a root is only supported as the whole expression");
    RatFun f = a.num.a / a.den.a;
    SymValue v = make_ratfun_value(RatFun::constant(Rat(1)));
    if (!f.is_zero()) v.exp_arg = f;
    return v;
}

SymValue eval(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number: return make_ratfun_value(RatFun::constant(e.value));
        case Expr::Kind::Var: return make_ratfun_value(RatFun::from_poly(Poly::variable()));
        case Expr::Kind::Neg: return val_neg(eval(*e.a));
        case Expr::Kind::Add: return val_add(eval(*e.a), eval(*e.b));
        case Expr::Kind::Sub: return val_add(eval(*e.a), val_neg(eval(*e.b)));
        case Expr::Kind::Mul: return val_mul(eval(*e.a), eval(*e.b));
        case Expr::Kind::Div: return val_div(eval(*e.a), eval(*e.b));
        case Expr::Kind::Pow: return val_pow(eval(*e.a), e.value);
        case Expr::Kind::Sqrt: return val_pow(eval(*e.a), Rat(1, 2));
        case Expr::Kind::Root: {
            if (e.value == 0) throw UnsupportedShape("root index must be nonzero");
            return val_pow(eval(*e.a), 1 / e.value);
        }
        case Expr::Kind::Exp: return eval_exp_atom(*e.a);
        case Expr::Kind::Log:
            throw UnsupportedShape("logarithm is only supported as the whole expression");
    }
    throw Error("unreachable expression kind");
}

// ---- extraction ----------------------------------------------------------

// Scale a list of rational-coefficient polynomials jointly to integers
// (value-preserving for ratios), then fix the sign so the anchor's lowest
// nonzero coefficient is positive.
void clear_to_integers(std::vector<Poly*> ps, const Poly* sign_anchor = nullptr) {
    make_joint_primitive(ps);
    if (!sign_anchor) return;
    for (int k = 0; k <= sign_anchor->degree(); ++k) {
        const Rat& c = (*sign_anchor)[k];
        if (c == 0) continue;
        if (sgn(c) < 0)
            for (Poly* p : ps) *p = Rat(-1) * (*p);
        break;
    }
}

// Effective exponent of a monomial coeff * base^frac after pulling powers
// of base out of the coefficient.
void pull_base_powers(RatFun& coeff, const Poly& base, Rat& e) {
    auto divisible = [&](const Poly& p) {
        if (p.is_zero() || p.degree() < base.degree()) return false;
        return poly_divmod(p, base).second.is_zero();
    };
    Poly num = coeff.num, den = coeff.den;
    while (divisible(num)) {
        num = poly_divexact(num, base);
        e += 1;
    }
    while (divisible(den)) {
        den = poly_divexact(den, base);
        e -= 1;
    }
    coeff = RatFun::make(num, den);
}

// Among coeff*S^e, (coeff*S)*S^(e-1) and (coeff/S)*S^(e+1), pick the
// smallest coefficient: partial factors of S prefer sitting on the side the
// shapes write them on (1/sqrt(1-4x^2) times (1+2x) rather than a quotient).
void choose_monomial_form(RatFun& coeff, const Poly& base, Rat& e) {
    pull_base_powers(coeff, base, e);
    struct Cand {
        RatFun c;
        Rat e;
    };
    std::vector<Cand> cands{{coeff, e},
                            {coeff * RatFun::from_poly(base), e - 1},
                            {RatFun::make(coeff.num, coeff.den * base), e + 1}};
    std::size_t best = 0;
    auto total = [](const RatFun& f) { return f.num.degree() + f.den.degree(); };
    for (std::size_t i = 1; i < cands.size(); ++i) {
        int ti = total(cands[i].c), tb = total(cands[best].c);
        if (ti < tb || (ti == tb && cands[i].c.den.degree() < cands[best].c.den.degree()))
            best = i;
    }
    coeff = cands[best].c;
    e = cands[best].e;
}

GFClass extract_ratfun(const RatFun& f) {
    if (f.is_zero()) throw UnsupportedShape("the zero function has no classified shape");
    if (f.num.is_constant()) {
        Poly p = (1 / f.num.constant_term()) * f.den;
        return InverseRoot{p, Rat(1)};
    }
    Poly q = f.num, v = f.den;
    clear_to_integers({&q, &v}, &v);
    return GeneralRoot{q, v, Poly(1), Rat(1)};
}

GFClass extract_exp_value(const SymValue& v) {
    const RatFun& f = *v.exp_arg;
    Poly q = f.num, vv = f.den;
    clear_to_integers({&q, &vv}, &vv);
    if (!v.rad) {
        RatFun coef = v.num.a / v.den.a;
        if (coef.is_zero()) throw UnsupportedShape("zero function");
        if (coef.is_constant()) {
            Rat k = coef.constant_value();
            return ExpRationalTimesRoot{q, vv, Poly(1 / k), Rat(1)};
        }
        if (coef.num.is_constant())
            return ExpRationalTimesRoot{q, vv, (1 / coef.num.constant_term()) * coef.den, Rat(1)};
        if (coef.den.is_constant())
            return ExpRationalTimesRoot{q, vv, (1 / coef.den.constant_term()) * coef.num, Rat(-1)};
        throw UnsupportedShape("exponential times a general rational function is not a shape");
    }
    if (!is_monomial(v))
        throw UnsupportedShape("exponential times a radical sum is not a shape");
    RatFun coeff = v.num.b / v.den.a;
    Rat e = v.rad->frac;
    choose_monomial_form(coeff, v.rad->base, e);
    if (!coeff.is_constant())
        throw UnsupportedShape("exponential times a radical with polynomial cofactor");
    Rat r = -1 / e;
    Poly p = v.rad->base;
    Rat k = coeff.constant_value();
    if (k != 1) {
        auto fold = rat_pow_exact(k, 1 / e);
        if (!fold) throw UnsupportedShape("irrational scale on the radical");
        p = *fold * p;
    }
    return ExpRationalTimesRoot{q, vv, p, r};
}

GFClass extract(const SymValue& v) {
    if (value_is_zero(v)) throw UnsupportedShape("the zero function has no classified shape");
    if (v.exp_arg) return extract_exp_value(v);
    if (!v.rad) return extract_ratfun(v.num.a / v.den.a);

    const Poly& S = v.rad->base;
    if (v.den.b.is_zero()) {
        if (v.num.b.is_zero()) return extract_ratfun(v.num.a / v.den.a);
        if (v.num.a.is_zero()) {
            // monomial: coeff * S^e
            RatFun coeff = v.num.b / v.den.a;
            Rat e = v.rad->frac;
            choose_monomial_form(coeff, S, e);
            Rat r = -1 / e;
            if (coeff.is_constant()) {
                Rat k = coeff.constant_value();
                if (k == 1) return InverseRoot{S, r};
                if (auto fold = rat_pow_exact(k, 1 / e)) return InverseRoot{*fold * S, r};
                Rat num = Rat(k.get_num()), den = Rat(k.get_den());
                return GeneralRoot{Poly(num), Poly(den), S, r};
            }
            Poly q = coeff.num, vv = coeff.den;
            clear_to_integers({&q, &vv}, &vv);
            return GeneralRoot{q, vv, S, r};
        }
        // (A + B*X)/C with X = S^frac
        Poly lcm = v.num.a.den * v.num.b.den * v.den.a.den; // coarse but exact
        Poly w = v.num.a.num * poly_divexact(lcm, v.num.a.den);
        Poly b = v.num.b.num * poly_divexact(lcm, v.num.b.den);
        Poly q = v.den.a.num * poly_divexact(lcm, v.den.a.den);
        return make_rooted_numerator(w, b, S, q, 1 / v.rad->frac);
    }
    // Radical in the denominator: square roots only.
    if (!v.rad->sqrt_like())
        throw UnsupportedShape("non-square radical in a denominator");
    Poly lcm = v.num.a.den * v.num.b.den * v.den.a.den * v.den.b.den;
    Poly A = v.num.a.num * poly_divexact(lcm, v.num.a.den);
    Poly B = v.num.b.num * poly_divexact(lcm, v.num.b.den);
    Poly C = v.den.a.num * poly_divexact(lcm, v.den.a.den);
    Poly D = v.den.b.num * poly_divexact(lcm, v.den.b.den);
    if (B.is_zero()) {
        // q / (w + v*sqrt(p))
        Poly g = poly_gcd_primitive(poly_gcd_primitive(A, C), D);
        if (!g.is_constant()) {
            A = poly_divexact(A, g);
            C = poly_divexact(C, g);
            D = poly_divexact(D, g);
        }
        clear_to_integers({&A, &C, &D});
        return RootedDenominator{A, C, D, S};
    }
    return rewrite_moebius_sqrt(B, A, D, C, S);
}

RatFun eval_plain_ratfun(const Expr& e, const char* what) {
    SymValue v = eval(e);
    if (v.rad || v.exp_arg) throw UnsupportedShape(std::string(what) + " must be a rational function");
    return v.num.a / v.den.a;
}

GFClass classify_exp(const Expr& arg) {
    SymValue a = eval(arg);
    if (a.exp_arg) throw UnsupportedShape("nested exponentials are not supported");
    if (!a.rad) {
        RatFun f = a.num.a / a.den.a;
        if (f.is_poly()) return ExpPolySqrt{f.num, Poly(), +1};
        Poly q = f.num, v = f.den;
        clear_to_integers({&q, &v}, &v);
        return ExpRationalTimesRoot{q, v, Poly(1), Rat(1)};
    }
    if (!a.rad->sqrt_like()) throw UnsupportedShape("exp of a non-square radical");
    if (!a.den.b.is_zero()) throw UnsupportedShape("exp of a radical quotient");
    RatFun wf = a.num.a / a.den.a;
    RatFun cf = a.num.b / a.den.a;
    if (!wf.is_poly() || !cf.is_poly())
        throw UnsupportedShape("exp argument must be polynomial plus a square root");
    Poly p = cf.num * cf.num * a.rad->base;
    int sign = sgn(cf.num.constant_term()) < 0 ? -1 : +1;
    return ExpPolySqrt{wf.num, p, sign};
}

GFClass classify_log(const Expr& arg) {
    RatFun f = eval_plain_ratfun(arg, "log argument");
    Poly q = f.num, v = f.den;
    clear_to_integers({&q, &v}, &v);
    return LogRational{q, v};
}

// (w + sqrt(p))^(1/r) written as sqrt/root/pow of a radical-bearing sum.
std::optional<GFClass> try_nested_root(const Expr& e) {
    Rat inv_r;
    const Expr* inner = nullptr;
    if (e.kind == Expr::Kind::Sqrt) {
        inner = e.a.get();
        inv_r = Rat(1, 2);
    } else if (e.kind == Expr::Kind::Root) {
        if (e.value == 0) throw UnsupportedShape("root index must be nonzero");
        inner = e.a.get();
        inv_r = 1 / e.value;
    } else if (e.kind == Expr::Kind::Pow) {
        inner = e.a.get();
        inv_r = e.value;
    } else {
        return std::nullopt;
    }
    if (inv_r == 0 || rat_is_integer(inv_r)) return std::nullopt;
    SymValue v = eval(*inner);
    if (!v.rad || v.exp_arg) return std::nullopt;
    if (v.num.b.is_zero() || v.num.a.is_zero() || !v.den.b.is_zero()) return std::nullopt;
    if (!v.rad->sqrt_like())
        throw UnsupportedShape("nested radical must be a square root");
    RatFun wf = v.num.a / v.den.a;
    RatFun cf = v.num.b / v.den.a;
    if (!wf.is_poly() || !cf.is_poly())
        throw UnsupportedShape("nested root needs polynomial parts under the outer root");
    if (sgn(cf.num.constant_term()) < 0)
        throw UnsupportedShape("nested root over the negative square-root branch");
    Poly p = cf.num * cf.num * v.rad->base;
    return NestedSqrt{wf.num, p, 1 / inv_r};
}

std::optional<GFClass> try_sqrt_ratio(const Expr& e) {
    const Expr* inner = nullptr;
    bool flip = false;
    if (e.kind == Expr::Kind::Sqrt) {
        inner = e.a.get();
    } else if (e.kind == Expr::Kind::Pow && abs(e.value) == Rat(1, 2)) {
        inner = e.a.get();
        flip = sgn(e.value) < 0;
    } else {
        return std::nullopt;
    }
    SymValue v = eval(*inner);
    if (v.rad || v.exp_arg) return std::nullopt;
    RatFun f = v.num.a / v.den.a;
    if (f.is_zero() || f.den.is_constant()) return std::nullopt; // plain root of a polynomial
    Poly q = f.num, p = f.den;
    if (flip) std::swap(q, p);
    clear_to_integers({&q, &p}, &p);
    return SqrtRatio{q, p};
}

} // namespace

GFClass classify(const Expr& expr) {
    GFClass cls = [&]() -> GFClass {
        if (expr.kind == Expr::Kind::Exp) return classify_exp(*expr.a);
        if (expr.kind == Expr::Kind::Log) return classify_log(*expr.a);
        if (auto sr = try_sqrt_ratio(expr)) return *sr;
        if (auto ns = try_nested_root(expr)) return *ns;
        return extract(eval(expr));
    }();
    validate_class(cls);
    return cls;
}

GFClass classify(const std::string& text) {
    return classify(*parse_expression(text));
}

Poly parse_poly(const std::string& text) {
    RatFun f = eval_plain_ratfun(*parse_expression(text), "polynomial flag");
    if (!f.is_poly()) throw UnsupportedShape("expected a polynomial, got a rational function");
    return f.num;
}

} // namespace holorec
