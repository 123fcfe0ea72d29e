#include "holorec/recurrence.hpp"

#include <algorithm>
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

// Nonnegative integer roots of a polynomial in n (rational root theorem on
// the primitive integer form).
std::vector<long> nonneg_integer_roots(const Poly& c0) {
    std::vector<long> roots;
    if (c0.is_zero() || c0.is_constant()) return roots;
    Poly p = c0;
    make_joint_primitive({&p});
    int val = 0;
    while (p[val] == 0) ++val;
    if (val > 0) roots.push_back(0);
    Int cst = p[val].get_num();
    // Integer roots divide the (shifted) constant term.
    Int bound = abs(cst);
    for (Int d(1); d * d <= bound && d < 2000000; ++d) {
        if (!mpz_divisible_p(bound.get_mpz_t(), d.get_mpz_t())) continue;
        const Int pair[] = {d, Int(bound / d)};
        for (const Int& cand : pair) {
            if (!cand.fits_slong_p()) continue;
            long n = cand.get_si();
            if (p.eval(Rat(n)) == 0) roots.push_back(n);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

PRecurrence from_coeff_table(std::vector<Poly> coeffs, long theoretical_n_min) {
    PRecurrence rec;
    rec.coeffs = std::move(coeffs);
    rec.n_min = theoretical_n_min;
    normalize_recurrence(rec);
    return rec;
}

std::vector<Poly> p1st_coeffs(const Poly& R, const Poly& Q) {
    int span = std::max(R.degree(), Q.degree() + 1);
    std::vector<Poly> c(static_cast<std::size_t>(span) + 1);
    Poly n = Poly::variable();
    for (int j = 0; j <= span; ++j)
        c[static_cast<std::size_t>(j)] = R[j] * (n - Poly(Rat(j))) + Poly(Q[j - 1]);
    return c;
}

PRecurrence hypergeometric_recurrence(const Hypergeometric& h) {
    // c*n*prod(beta_j + n - 1) * h_n = prod(alpha_i + n - 1) * h_{n-1}
    Poly n = Poly::variable();
    Poly c0 = h.c * n;
    for (const Rat& b : h.betas) c0 = c0 * (n + Poly(b - 1));
    Poly c1(Rat(-1));
    for (const Rat& a : h.alphas) c1 = c1 * (n + Poly(a - 1));
    PRecurrence rec;
    rec.coeffs = {c0, c1};
    rec.n_min = 1;
    rec.stride = h.r;
    rec.offset = h.t;
    normalize_recurrence(rec);
    return rec;
}

} // namespace

void normalize_recurrence(PRecurrence& rec) {
    auto& c = rec.coeffs;
    while (!c.empty() && c.front().is_zero()) {
        c.erase(c.begin());
        for (Poly& p : c) p = p.shifted_arg(1);
        rec.n_min -= 1;
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) throw DerivationError("recurrence collapsed to zero");
    if (rec.n_min < 0) rec.n_min = 0;

    std::vector<Poly*> parts;
    for (Poly& p : c) parts.push_back(&p);
    make_joint_primitive(parts);
    if (sgn(c.front().leading()) < 0)
        for (Poly* p : parts) *p = Rat(-1) * (*p);
}

PRecurrence ode_to_recurrence(const LinearODE& ode) {
    int K = ode.order();
    if (K < 1 || K > 2) throw DerivationError("only order 1 and 2 ODEs convert to recurrences");
    int span = 0;
    for (int k = 0; k <= K; ++k)
        if (!ode.A(k).is_zero()) span = std::max(span, ode.A(k).degree() + K - k);
    std::vector<Poly> coeffs(static_cast<std::size_t>(span) + 1);
    for (int j = 0; j <= span; ++j) {
        Poly cj;
        for (int k = 0; k <= K; ++k) {
            const Rat& a = ode.A(k)[j - K + k];
            if (a == 0) continue;
            cj += a * falling_factorial_poly(j, static_cast<unsigned>(k));
        }
        coeffs[static_cast<std::size_t>(j)] = cj;
    }
    long theoretical = span;
    if (!ode.inhom.is_zero())
        theoretical = std::max<long>(theoretical, ode.inhom.degree() + K + 1);
    return from_coeff_table(std::move(coeffs), theoretical);
}

PRecurrence closed_form_recurrence(const GFClass& cls) {
    return std::visit(
        overloaded{
            [&](const InverseRoot& c) {
                // sum_t (r*n - r*t + t) p_t g_{n-t} = 0, n > deg p; scaled by
                // the denominator of r. For r = 1 the common factor n drops
                // and the recurrence is C-finite with coefficients p_t.
                std::vector<Poly> coeffs(static_cast<std::size_t>(c.p.degree()) + 1);
                Poly n = Poly::variable();
                Rat a(c.r.get_num()), b(c.r.get_den());
                for (int t = 0; t <= c.p.degree(); ++t) {
                    if (c.r == 1)
                        coeffs[static_cast<std::size_t>(t)] = Poly(c.p[t]);
                    else
                        coeffs[static_cast<std::size_t>(t)] =
                            c.p[t] * (a * n - Poly((a - b) * Rat(t)));
                }
                return from_coeff_table(std::move(coeffs), c.p.degree() + 1);
            },
            [&](const GeneralRoot& c) {
                Rat a(c.r.get_num()), b(c.r.get_den());
                Poly R = a * (c.q * c.p * c.v);
                Poly Q = a * (c.q * c.p * c.v.derivative()) - a * (c.p * c.q.derivative() * c.v) +
                         b * (c.q * c.p.derivative() * c.v);
                return from_coeff_table(p1st_coeffs(R, Q), R.degree() + 1);
            },
            [&](const SqrtRatio& c) {
                Poly R = Rat(2) * (c.q * c.p);
                Poly Q = c.q * c.p.derivative() - c.q.derivative() * c.p;
                return from_coeff_table(p1st_coeffs(R, Q), R.degree() + 1);
            },
            [&](const RootedDenominator&) {
                // P2nd on the raw class polynomials, no gcd reduction.
                return ode_to_recurrence(derive_ode_raw(cls));
            },
            [&](const RootedNumerator&) { return ode_to_recurrence(derive_ode_raw(cls)); },
            [&](const NestedSqrt&) { return ode_to_recurrence(derive_ode_raw(cls)); },
            [&](const ExpPolySqrt& c) {
                if (c.p.is_zero())
                    return from_coeff_table(p1st_coeffs(Poly(1), -c.w.derivative()),
                                            std::max(1, c.w.degree()));
                return ode_to_recurrence(derive_ode_raw(cls));
            },
            [&](const ExpRationalTimesRoot& c) {
                Rat a(c.r.get_num()), b(c.r.get_den());
                Poly R = a * (c.p * c.v * c.v);
                Poly Q = b * (c.v * c.v * c.p.derivative()) -
                         a * (c.p * (c.q.derivative() * c.v - c.q * c.v.derivative()));
                return from_coeff_table(p1st_coeffs(R, Q), R.degree() + 1);
            },
            [&](const LogRational& c) {
                Poly R = c.q * c.v;
                Poly H = c.v * c.q.derivative() - c.q * c.v.derivative();
                long bound = R.degree() + std::max(0, H.degree()) + 1;
                return from_coeff_table(p1st_coeffs(R, Poly()), bound);
            },
            [&](const Hypergeometric& c) { return hypergeometric_recurrence(c); },
            [&](const PowerOfFirstOrder& c) {
                Rat a(c.r.get_num()), b(c.r.get_den());
                Poly R = a * c.L;
                Poly Q = b * c.H;
                return from_coeff_table(p1st_coeffs(R, Q), R.degree() + 1);
            }},
        cls);
}

Rat recurrence_residual_at(const PRecurrence& rec, const std::vector<Rat>& terms, long n) {
    if (n >= static_cast<long>(terms.size()))
        throw Error("residual check beyond the supplied terms");
    Rat acc(0);
    for (int j = 0; j <= rec.span(); ++j) {
        long idx = n - j;
        if (idx < 0) continue;
        const Rat& t = terms[static_cast<std::size_t>(idx)];
        if (t == 0) continue;
        acc += rec.C(j).eval(Rat(n)) * t;
    }
    return acc;
}

long certify_terms_needed(const PRecurrence& rec, int guard) {
    long hi = rec.n_min + guard;
    auto roots = nonneg_integer_roots(rec.coeffs.front());
    for (long r : roots) hi = std::max(hi, r + 1 + guard);
    return hi + 1;
}

PRecurrence certify_against(PRecurrence rec, const std::vector<Rat>& terms, int guard) {
    long hi = rec.n_min + guard;
    if (static_cast<long>(terms.size()) <= hi)
        throw Error("not enough reference terms to certify the recurrence");
    for (long n = rec.n_min; n <= hi; ++n)
        if (recurrence_residual_at(rec, terms, n) != 0)
            throw DerivationError("recurrence fails at n=" + std::to_string(n) +
                                  " inside its theoretical validity range");
    long s = rec.n_min;
    while (s > 0 && recurrence_residual_at(rec, terms, s - 1) == 0) --s;
    rec.n_min = s;

    long start = s;
    for (long r : nonneg_integer_roots(rec.coeffs.front()))
        if (r >= s) start = std::max(start, r + 1);
    if (static_cast<long>(terms.size()) < start)
        throw Error("not enough reference terms to cover leading-coefficient roots");
    // Certified indices past a root must also hold.
    for (long n = hi + 1; n < std::min<long>(terms.size(), start + guard); ++n)
        if (recurrence_residual_at(rec, terms, n) != 0)
            throw DerivationError("recurrence fails at n=" + std::to_string(n));
    rec.initial.assign(terms.begin(), terms.begin() + start);
    return rec;
}

void generate_terms(const PRecurrence& rec, long n_max,
                    const std::function<void(long, const Rat&)>& sink) {
    const long J = rec.span();
    std::vector<Rat> window(static_cast<std::size_t>(J) + 1);
    const Rat zero(0);
    auto emit_lattice = [&](long m, const Rat& value) {
        window[static_cast<std::size_t>(m % (J + 1))] = value;
    };
    auto lattice_term = [&](long m) -> const Rat& {
        return window[static_cast<std::size_t>(m % (J + 1))];
    };

    for (long n = 0; n <= n_max; ++n) {
        if (rec.stride > 1 || rec.offset > 0) {
            if (n < rec.offset || (n - rec.offset) % rec.stride != 0) {
                sink(n, zero);
                continue;
            }
        }
        long m = rec.stride > 1 || rec.offset > 0 ? (n - rec.offset) / rec.stride : n;
        Rat value;
        if (m < static_cast<long>(rec.initial.size())) {
            value = rec.initial[static_cast<std::size_t>(m)];
        } else {
            if (m < rec.n_min)
                throw GenerationError("initial terms do not cover index " + std::to_string(m));
            Rat c0 = rec.coeffs.front().eval(Rat(m));
            if (c0 == 0)
                throw GenerationError("leading coefficient vanishes at n=" + std::to_string(m) +
                                      " outside the initial segment");
            Rat acc(0);
            for (long j = 1; j <= J; ++j) {
                long idx = m - j;
                if (idx < 0) break;
                const Rat& t = lattice_term(idx);
                if (t == 0) continue;
                acc += rec.C(static_cast<int>(j)).eval(Rat(m)) * t;
            }
            value = -acc / c0;
        }
        emit_lattice(m, value);
        sink(n, value);
    }
}

std::vector<Rat> generate_terms(const PRecurrence& rec, long n_max) {
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    generate_terms(rec, n_max, [&](long, const Rat& v) { out.push_back(v); });
    return out;
}

PRecurrence homogenize(const InhomPRecurrence& rec) {
    if (rec.inhom.is_zero()) throw DerivationError("recurrence is already homogeneous");
    const long J = static_cast<long>(rec.coeffs.size()) - 1;
    Poly i_n = rec.inhom;
    Poly i_prev = rec.inhom.shifted_arg(-1);
    std::vector<Poly> out(static_cast<std::size_t>(J) + 2);
    for (long j = 0; j <= J + 1; ++j) {
        Poly cj;
        if (j <= J) cj += i_prev * rec.coeffs[static_cast<std::size_t>(j)];
        if (j >= 1) cj -= i_n * rec.coeffs[static_cast<std::size_t>(j - 1)].shifted_arg(-1);
        out[static_cast<std::size_t>(j)] = cj;
    }
    PRecurrence result;
    result.coeffs = std::move(out);
    result.n_min = rec.n_min + 1;
    normalize_recurrence(result);
    return result;
}

PRecurrence to_egf(const PRecurrence& rec) {
    if (rec.stride != 1 || rec.offset != 0)
        throw DerivationError("EGF conversion needs stride 1");
    PRecurrence out = rec;
    for (int j = 0; j <= rec.span(); ++j)
        out.coeffs[static_cast<std::size_t>(j)] =
            falling_factorial_poly(0, static_cast<unsigned>(j)) * rec.C(j);
    Rat fact(1);
    for (std::size_t k = 0; k < out.initial.size(); ++k) {
        if (k > 0) fact *= Rat(static_cast<long>(k));
        out.initial[k] = rec.initial[k] * fact;
    }
    normalize_recurrence(out);
    return out;
}

PRecurrence to_lgf(const PRecurrence& rec) {
    if (rec.stride != 1 || rec.offset != 0)
        throw DerivationError("LGF conversion needs stride 1");
    if (rec.coeffs.empty() || std::all_of(rec.coeffs.begin(), rec.coeffs.end(),
                                          [](const Poly& p) { return p.is_zero(); }))
        throw DerivationError("LGF conversion of the zero recurrence");
    const int J = rec.span();
    Poly n = Poly::variable();
    PRecurrence out = rec;
    // Substituting g_m = c_m/m: try the exact division C_j/(n-j); fall back
    // to clearing with the complementary product.
    bool exact = true;
    std::vector<Poly> divided(rec.coeffs.size());
    for (int j = 0; j <= J && exact; ++j) {
        Poly d = n - Poly(Rat(j));
        auto [q, r] = poly_divmod(rec.C(j), d);
        if (r.is_zero())
            divided[static_cast<std::size_t>(j)] = q;
        else
            exact = false;
    }
    if (exact) {
        out.coeffs = std::move(divided);
        out.n_min = std::max<long>(rec.n_min, 1);
    } else {
        for (int j = 0; j <= J; ++j) {
            Poly prod(1);
            for (int k = 0; k <= J; ++k)
                if (k != j) prod = prod * (n - Poly(Rat(k)));
            out.coeffs[static_cast<std::size_t>(j)] = prod * rec.C(j);
        }
        out.n_min = std::max<long>(rec.n_min, J + 1);
    }
    // c_k = k * g_k; needs the initial segment to reach the new start.
    long start = out.n_min;
    for (long r : nonneg_integer_roots(out.coeffs.front()))
        if (r >= out.n_min) start = std::max(start, r + 1);
    std::vector<Rat> g_prefix = rec.initial;
    if (static_cast<long>(g_prefix.size()) < start) {
        g_prefix = generate_terms(rec, start - 1);
    }
    out.initial.clear();
    for (long k = 0; k < static_cast<long>(g_prefix.size()); ++k)
        out.initial.push_back(Rat(k) * g_prefix[static_cast<std::size_t>(k)]);
    normalize_recurrence(out);
    return out;
}

namespace {

// Anti-difference of a coefficient table: B_0 = -D_0,
// B_j(n) = B_{j-1}(n-1) - D_j(n), closing with B_{J-1}(n-1) = D_J(n).
std::optional<std::vector<Poly>> telescope(const std::vector<Poly>& d) {
    const long J = static_cast<long>(d.size()) - 1;
    if (J < 1) return std::nullopt;
    std::vector<Poly> b(static_cast<std::size_t>(J));
    b[0] = -d[0];
    for (long j = 1; j < J; ++j)
        b[static_cast<std::size_t>(j)] =
            b[static_cast<std::size_t>(j - 1)].shifted_arg(-1) - d[static_cast<std::size_t>(j)];
    if (!(b[static_cast<std::size_t>(J - 1)].shifted_arg(-1) == d[static_cast<std::size_t>(J)]))
        return std::nullopt;
    return b;
}

// sum_j D_j(m + j): identically zero exactly when the telescoping ansatz
// closes.
Poly telescope_obstruction(const std::vector<Poly>& d) {
    Poly s;
    for (long j = 0; j < static_cast<long>(d.size()); ++j)
        s += d[static_cast<std::size_t>(j)].shifted_arg(j);
    return s;
}

} // namespace

PRecurrence shorten(const PRecurrence& rec1, const PRecurrence& rec2, int guard) {
    if (rec1.stride != 1 || rec2.stride != 1)
        throw DerivationError("shortening needs stride-1 recurrences");
    if (rec1.span() != rec2.span())
        throw DerivationError("shortening needs recurrences of equal span");

    Poly s1 = telescope_obstruction(rec1.coeffs);
    Poly s2 = telescope_obstruction(rec2.coeffs);
    std::vector<Poly> combo(rec2.coeffs.size());
    if (s2.is_zero()) {
        combo = rec2.coeffs;
    } else if (s1.is_zero()) {
        combo = rec1.coeffs;
    } else {
        // mu * s1 = s2 for a constant mu makes rec2 - mu*rec1 telescope.
        if (s1.degree() != s2.degree())
            throw DerivationError("no shortening possible: leading parts cannot cancel");
        Rat mu = s2.leading() / s1.leading();
        if (!(Rat(mu) * s1 == s2))
            throw DerivationError("no shortening possible: obstructions are not proportional");
        for (std::size_t j = 0; j < combo.size(); ++j)
            combo[j] = rec2.coeffs[j] - mu * rec1.coeffs[j];
    }
    bool all_zero = std::all_of(combo.begin(), combo.end(),
                                [](const Poly& p) { return p.is_zero(); });
    if (all_zero) throw DerivationError("shortening collapsed to the zero recurrence");

    auto b = telescope(combo);
    if (!b) throw DerivationError("no shortening possible: telescoping ansatz does not close");

    PRecurrence out;
    out.coeffs = std::move(*b);
    out.n_min = std::max(rec1.n_min, rec2.n_min);
    normalize_recurrence(out);

    // The telescoped sum is constant on the certified range; it must be 0
    // for a homogeneous recurrence.
    long needed = certify_terms_needed(out, guard);
    std::vector<Rat> terms = generate_terms(rec1, needed - 1);
    Rat residual = recurrence_residual_at(out, terms, out.n_min);
    if (residual != 0)
        throw DerivationError("shortening leaves the constant remainder " + rat_str(residual));
    return certify_against(std::move(out), terms, guard);
}

std::optional<InhomPRecurrence> inhomogeneous_form(const LinearODE& ode,
                                                   const std::vector<Rat>& terms) {
    if (ode.order() != 1 || ode.inhom.is_zero()) return std::nullopt;
    // Raw homogeneous-part coefficients, unstripped: relation at n is
    // sum_j C_j(n) g_{n-j} = H_{n-1}.
    const Poly& R = ode.A(1);
    const Poly& Q = ode.A(0);
    std::vector<Poly> c = p1st_coeffs(R, Q);
    auto b = telescope(c);
    if (!b) return std::nullopt;
    // T(n) = sum_j B_j(n) g_{n-j} satisfies T(n) - T(n-1) = -H_{n-1}, so T
    // is constant once H is exhausted.
    long stable = ode.inhom.degree() + 2;
    InhomPRecurrence out;
    out.coeffs = std::move(*b);
    out.n_min = std::max<long>(stable, 0);
    if (static_cast<long>(terms.size()) <= out.n_min + static_cast<long>(out.coeffs.size()))
        throw Error("not enough terms to evaluate the telescoped constant");
    PRecurrence probe;
    probe.coeffs = out.coeffs;
    Rat tau = recurrence_residual_at(probe, terms, out.n_min);
    Rat tau2 = recurrence_residual_at(probe, terms, out.n_min + 1);
    if (tau != tau2) throw DerivationError("telescoped value is not constant");
    while (out.n_min > 0 && recurrence_residual_at(probe, terms, out.n_min - 1) == tau)
        --out.n_min;
    out.inhom = Poly(-tau);
    // Normalize: primitive coefficients, leading coefficient of P_0 positive.
    std::vector<Poly*> parts;
    for (Poly& p : out.coeffs) parts.push_back(&p);
    if (!out.inhom.is_zero()) parts.push_back(&out.inhom);
    make_joint_primitive(parts);
    if (sgn(out.coeffs.front().leading()) < 0)
        for (Poly* p : parts) *p = Rat(-1) * (*p);
    return out;
}

std::string recurrence_str(const PRecurrence& rec, const std::string& term) {
    std::ostringstream out;
    for (int j = 0; j <= rec.span(); ++j) {
        const Poly& c = rec.C(j);
        if (c.is_zero()) continue;
        if (out.tellp() > 0) out << " + ";
        out << "(" << c.str("n") << ")*" << term << "(n";
        if (j > 0) out << "-" << j;
        out << ")";
    }
    out << " = 0  for n >= " << rec.n_min;
    if (rec.stride != 1 || rec.offset != 0)
        out << "  [lattice n: sequence index " << rec.offset << "+" << rec.stride << "*n]";
    return out.str();
}

} // namespace holorec
