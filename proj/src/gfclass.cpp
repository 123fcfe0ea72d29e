#include "holorec/gfclass.hpp"

#include <sstream>

#include "holorec/errors.hpp"

namespace holorec {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& msg) {
    if (!ok) throw UnsupportedShape(msg);
}

// p(0)^e must be an exact rational (e.g. the square root of the constant
// term of a polynomial under a radical).
Rat require_rational_power(const Rat& base, const Rat& e, const std::string& what) {
    auto v = rat_pow_exact(base, e);
    require(v.has_value(),
            what + ": constant term " + rat_str(base) + " has no exact rational power " + rat_str(e));
    return *v;
}

// A polynomial raised to a non-polynomial exponent needs a nonzero constant
// term with an exact rational power.
void require_root_base(const Poly& p, const Rat& e, const std::string& what) {
    if (rat_is_integer(e) && e >= 0) return;
    require(p.constant_term() != 0, what + ": constant term vanishes under exponent " + rat_str(e));
    require_rational_power(p.constant_term(), e, what);
}

void reduce_common(std::vector<Poly*> ps) {
    Poly g;
    bool have = false;
    for (Poly* p : ps) {
        if (p->is_zero()) continue;
        g = have ? poly_gcd_primitive(g, *p) : poly_gcd_primitive(*p, *p);
        have = true;
    }
    if (!have) return;
    if (!g.is_constant())
        for (Poly* p : ps)
            if (!p->is_zero()) *p = poly_divexact(*p, g);
    make_joint_primitive(ps); // positive scale, value-preserving
}

} // namespace

std::string class_name(const GFClass& cls) {
    return std::visit(
        overloaded{[](const InverseRoot&) { return "inverse-root"; },
                   [](const GeneralRoot&) { return "general-root"; },
                   [](const SqrtRatio&) { return "sqrt-ratio"; },
                   [](const RootedDenominator&) { return "rooted-denominator"; },
                   [](const RootedNumerator&) { return "rooted-numerator"; },
                   [](const NestedSqrt&) { return "nested-sqrt"; },
                   [](const ExpPolySqrt&) { return "exp-poly-sqrt"; },
                   [](const ExpRationalTimesRoot&) { return "exp-rational-root"; },
                   [](const LogRational&) { return "log-rational"; },
                   [](const Hypergeometric&) { return "hypergeometric"; },
                   [](const PowerOfFirstOrder&) { return "power-first-order"; }},
        cls);
}

std::string class_brief(const GFClass& cls) {
    std::ostringstream out;
    out << class_name(cls) << "{";
    std::visit(overloaded{
                   [&](const InverseRoot& c) { out << "p=" << c.p.str() << ", r=" << rat_str(c.r); },
                   [&](const GeneralRoot& c) {
                       out << "q=" << c.q.str() << ", v=" << c.v.str() << ", p=" << c.p.str()
                           << ", r=" << rat_str(c.r);
                   },
                   [&](const SqrtRatio& c) { out << "q=" << c.q.str() << ", p=" << c.p.str(); },
                   [&](const RootedDenominator& c) {
                       out << "q=" << c.q.str() << ", w=" << c.w.str() << ", v=" << c.v.str()
                           << ", p=" << c.p.str();
                   },
                   [&](const RootedNumerator& c) {
                       out << "w=" << c.w.str() << ", v=" << c.v.str() << ", p=" << c.p.str()
                           << ", q=" << c.q.str() << ", r=" << rat_str(c.r);
                   },
                   [&](const NestedSqrt& c) {
                       out << "w=" << c.w.str() << ", p=" << c.p.str() << ", r=" << rat_str(c.r);
                   },
                   [&](const ExpPolySqrt& c) {
                       out << "w=" << c.w.str() << ", p=" << c.p.str()
                           << ", sign=" << (c.sign >= 0 ? "+" : "-");
                   },
                   [&](const ExpRationalTimesRoot& c) {
                       out << "q=" << c.q.str() << ", v=" << c.v.str() << ", p=" << c.p.str()
                           << ", r=" << rat_str(c.r);
                   },
                   [&](const LogRational& c) { out << "q=" << c.q.str() << ", v=" << c.v.str(); },
                   [&](const Hypergeometric& c) {
                       out << "alphas=[";
                       for (std::size_t i = 0; i < c.alphas.size(); ++i)
                           out << (i ? "," : "") << rat_str(c.alphas[i]);
                       out << "], betas=[";
                       for (std::size_t i = 0; i < c.betas.size(); ++i)
                           out << (i ? "," : "") << rat_str(c.betas[i]);
                       out << "], t=" << c.t << ", r=" << c.r << ", c=" << rat_str(c.c);
                   },
                   [&](const PowerOfFirstOrder& c) {
                       out << "L=" << c.L.str() << ", H=" << c.H.str() << ", r=" << rat_str(c.r);
                   }},
               cls);
    out << "}";
    return out.str();
}

void validate_class(const GFClass& cls) {
    std::visit(
        overloaded{
            [](const InverseRoot& c) {
                require(c.r != 0, "inverse-root: r must be nonzero");
                require(!c.p.is_zero(), "inverse-root: p must be nonzero");
                require_root_base(c.p, -1 / c.r, "inverse-root p");
            },
            [](const GeneralRoot& c) {
                require(c.r != 0, "general-root: r must be nonzero");
                require(!c.p.is_zero() && !c.v.is_zero() && !c.q.is_zero(),
                        "general-root: q, v, p must be nonzero");
                require(c.v.constant_term() != 0, "general-root: v(0) must be nonzero");
                require_root_base(c.p, -1 / c.r, "general-root p");
            },
            [](const SqrtRatio& c) {
                require(!c.q.is_zero() && !c.p.is_zero(), "sqrt-ratio: q and p must be nonzero");
                require(c.p.constant_term() != 0, "sqrt-ratio: p(0) must be nonzero");
                require(c.q.constant_term() != 0, "sqrt-ratio: q(0) must be nonzero");
                require_rational_power(c.q.constant_term() / c.p.constant_term(), Rat(1, 2),
                                       "sqrt-ratio q/p");
            },
            [](const RootedDenominator& c) {
                require(!c.p.is_zero() && !c.v.is_zero() && !c.q.is_zero(),
                        "rooted-denominator: q, v, p must be nonzero");
                require(c.p.constant_term() != 0, "rooted-denominator: p(0) must be nonzero");
                Rat root = require_rational_power(c.p.constant_term(), Rat(1, 2),
                                                  "rooted-denominator p");
                require(c.w.constant_term() + c.v.constant_term() * root != 0,
                        "rooted-denominator: denominator vanishes at x=0");
            },
            [](const RootedNumerator& c) {
                require(c.r != 0, "rooted-numerator: r must be nonzero");
                require(!c.p.is_zero() && !c.q.is_zero(), "rooted-numerator: p, q must be nonzero");
                require(!(c.w.is_zero() && c.v.is_zero()), "rooted-numerator: numerator is zero");
                if (!c.v.is_zero()) require_root_base(c.p, 1 / c.r, "rooted-numerator p");
            },
            [](const NestedSqrt& c) {
                require(c.r != 0, "nested-sqrt: r must be nonzero");
                require(!c.p.is_zero(), "nested-sqrt: p must be nonzero");
                require(c.p.constant_term() != 0, "nested-sqrt: p(0) must be nonzero");
                Rat root = require_rational_power(c.p.constant_term(), Rat(1, 2), "nested-sqrt p");
                Rat f0 = c.w.constant_term() + root;
                require(f0 != 0, "nested-sqrt: w(0) + sqrt(p(0)) vanishes");
                require_rational_power(f0, 1 / c.r, "nested-sqrt w(0)+sqrt(p(0))");
            },
            [](const ExpPolySqrt& c) {
                if (c.p.is_zero()) {
                    require(c.w.constant_term() == 0,
                            "exp-poly-sqrt: w(0) must vanish when p = 0");
                    return;
                }
                require(c.p.constant_term() != 0, "exp-poly-sqrt: p(0) must be nonzero");
                Rat root = require_rational_power(c.p.constant_term(), Rat(1, 2), "exp-poly-sqrt p");
                Rat arg0 = c.w.constant_term() + Rat(c.sign) * root;
                require(arg0 == 0, "exp-poly-sqrt: w(0) +/- sqrt(p(0)) must vanish, got " +
                                       rat_str(arg0));
            },
            [](const ExpRationalTimesRoot& c) {
                require(c.r != 0, "exp-rational-root: r must be nonzero");
                require(!c.v.is_zero() && !c.p.is_zero(), "exp-rational-root: v, p must be nonzero");
                require(c.v.constant_term() != 0, "exp-rational-root: v(0) must be nonzero");
                require(c.q.constant_term() == 0, "exp-rational-root: (q/v)(0) must vanish");
                require_root_base(c.p, -1 / c.r, "exp-rational-root p");
            },
            [](const LogRational& c) {
                require(!c.q.is_zero() && !c.v.is_zero(), "log-rational: q, v must be nonzero");
                require(c.q.constant_term() == c.v.constant_term() && c.q.constant_term() != 0,
                        "log-rational: q(0) = v(0) != 0 required");
            },
            [](const Hypergeometric& c) {
                require(c.c != 0, "hypergeometric: c must be nonzero");
                require(c.r >= 1, "hypergeometric: stride r must be a positive integer");
                require(c.t >= 0, "hypergeometric: offset t must be nonnegative");
                for (const Rat& b : c.betas)
                    require(!(rat_is_integer(b) && b <= 0),
                            "hypergeometric: beta " + rat_str(b) + " is a nonpositive integer");
            },
            [](const PowerOfFirstOrder& c) {
                require(c.r != 0, "power-first-order: r must be nonzero");
                require(!c.L.is_zero(), "power-first-order: L must be nonzero");
                require(c.L.constant_term() != 0, "power-first-order: L(0) must be nonzero");
            }},
        cls);
}

GFClass make_rooted_numerator(Poly w, Poly v, Poly p, Poly q, const Rat& r) {
    if (q.is_zero()) throw UnsupportedShape("rooted numerator: zero denominator");
    if (w.is_zero() && v.is_zero()) throw UnsupportedShape("rooted numerator: zero numerator");
    reduce_common({&w, &v, &q});
    if (v.is_zero()) {
        // No radical left: plain rational function.
        Poly g = poly_gcd_primitive(w, q);
        w = poly_divexact(w, g);
        q = poly_divexact(q, g);
        return GeneralRoot{w, q, Poly(1), Rat(1)};
    }
    if (w.is_zero()) {
        // v*p^(1/r)/q is a generalized inverse root with the exponent flipped.
        Poly g = poly_gcd_primitive(v, q);
        v = poly_divexact(v, g);
        q = poly_divexact(q, g);
        if (v == q) return InverseRoot{p, -r};
        return GeneralRoot{v, q, p, -r};
    }
    return RootedNumerator{w, v, p, q, r};
}

GFClass rewrite_sum(const Poly& u, const Poly& w, const Poly& q, const Poly& v, const Poly& p) {
    if (w.is_zero() || v.is_zero() || p.is_zero())
        throw UnsupportedShape("rewrite_sum: w, v, p must be nonzero");
    if (u.is_zero()) return GeneralRoot{q, v, p, Rat(2)};
    if (q.is_zero()) {
        Poly g = poly_gcd_primitive(u, w);
        return GeneralRoot{poly_divexact(u, g), poly_divexact(w, g), Poly(1), Rat(1)};
    }
    return make_rooted_numerator(u * v * p, w * q, p, w * v * p, Rat(2));
}

GFClass rewrite_moebius_sqrt(const Poly& u, const Poly& w, const Poly& v, const Poly& q,
                             const Poly& p) {
    if (u.is_zero() && v.is_zero())
        throw UnsupportedShape("rewrite_moebius_sqrt: no square root present");
    Poly denom = v * v * p - q * q;
    if (denom.is_zero())
        throw UnsupportedShape("rewrite_moebius_sqrt: degenerate denominator v^2*p = q^2");
    return make_rooted_numerator(u * v * p - q * w, w * v - q * u, p, denom, Rat(2));
}

} // namespace holorec
