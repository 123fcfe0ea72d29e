// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "holorec/classify.hpp"
#include "holorec/fixtures.hpp"
#include "holorec/io.hpp"
#include "reference_sequences.hpp"

using namespace holorec;
using namespace holorec::testref;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Poly P(const std::string& s) {
    return parse_poly(s);
}

std::vector<Poly> coeffs_n(std::initializer_list<const char*> polys) {
    std::vector<Poly> out;
    for (const char* s : polys) out.push_back(parse_poly(s));
    return out;
}

// ---- criterion 1: the appendix worked example, end to end ----------------

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    try {
        GFClass cls = classify("(1-2*x-3*x^2-(1-x)*sqrt(1-2*x-7*x^2))/(8*x^3)");
        Derivation d = derive_pipeline(cls);
        if (!d.ode) throw Error("no ODE");
        bool ode_ok = d.ode->A(1) == P("x*(1-x)*(1-2*x-7*x^2)") &&
                      d.ode->A(0) == P("3-7*x-11*x^2+7*x^3") && d.ode->inhom == P("4*x");
        bool rec_ok = d.rec.coeffs == coeffs_n({"x+3", "0-(3*x+4)", "0-(5*x+1)", "7*(x-2)"});
        PRecurrence s = shortened_recurrence(d);
        bool short_ok = s.coeffs == coeffs_n({"(x+3)*(x-1)", "0-x*(2*x+1)", "0-7*x*(x-1)"});
        double t = seconds_since(start);
        std::ostringstream detail;
        detail << "ode " << (ode_ok ? "ok" : "WRONG") << ", 4-term " << (rec_ok ? "ok" : "WRONG")
               << ", 3-term " << (short_ok ? "ok" : "WRONG") << ", " << t << " s";
        report(1, ode_ok && rec_ok && short_ok && t < 1.0,
               "appendix worked example end-to-end (< 1 s)", detail.str());
    } catch (const std::exception& ex) {
        report(1, false, "appendix worked example end-to-end (< 1 s)", ex.what());
    }
}

// ---- criteria 2 and 3: fixture sweep --------------------------------------

void criteria2and3() {
    auto start = std::chrono::steady_clock::now();
    FixtureSummary summary = run_fixture_suite(100, 10);
    double t = seconds_since(start);
    std::ostringstream detail;
    for (const FixtureResult& r : summary.results)
        if (!r.pass) detail << r.id << ": " << r.message << "; ";
    std::ostringstream what2;
    what2 << "oracle certification sweep, " << summary.passed << "/"
          << summary.results.size() << " fixtures, 100 exact terms (" << t << " s < 60 s)";
    bool pass2 = summary.failed == 0 && summary.results.size() >= 25 && t < 60.0;
    report(2, pass2, what2.str(), detail.str());
    // the suite asserts closed-form/generic stream equality per fixture
    report(3, summary.failed == 0,
           "closed-form vs generic converter agree on every fixture (100 terms)", detail.str());
}

// ---- criterion 4: spot checks against independent counts ------------------

void criterion4() {
    try {
        bool ok = true;
        std::ostringstream detail;
        auto spot = [&](const GFClass& cls, bool egf_interp,
                        const std::vector<Int>& reference, const std::string& name) {
            Derivation d = derive_pipeline(cls);
            PRecurrence rec = egf_interp ? to_egf(d.rec) : d.rec;
            long upto = static_cast<long>(reference.size()) + 50;
            std::vector<Rat> got = generate_terms(rec, upto);
            for (std::size_t i = 0; i < reference.size(); ++i)
                if (got[i] != Rat(reference[i])) {
                    ok = false;
                    detail << name << " prefix mismatch at " << i << "; ";
                    return;
                }
            TruncatedSeries oracle = oracle_expand(cls, static_cast<int>(upto));
            Rat fact(1);
            for (long n = 0; n <= upto; ++n) {
                if (n > 0 && egf_interp) fact *= Rat(n);
                if (got[static_cast<std::size_t>(n)] != oracle.at(static_cast<int>(n)) * fact) {
                    ok = false;
                    detail << name << " oracle mismatch at " << n << "; ";
                    return;
                }
            }
        };

        std::vector<Int> binom_ref, trinom_ref, delannoy_ref, lists_ref, invol_ref;
        for (int n = 0; n <= 5; ++n) binom_ref.push_back(central_binomial(n));
        for (int n = 0; n <= 5; ++n) trinom_ref.push_back(central_trinomial(n));
        for (int n = 0; n <= 4; ++n) delannoy_ref.push_back(central_delannoy(n));
        for (int n = 0; n <= 5; ++n) lists_ref.push_back(ordered_set_partitions(n));
        for (int n = 0; n <= 7; ++n) invol_ref.push_back(involutions_bruteforce(n));

        spot(GFClass{InverseRoot{P("1-4*x"), Rat(2)}}, false, binom_ref, "central binomial");
        spot(GFClass{InverseRoot{P("1-2*x-3*x^2"), Rat(2)}}, false, trinom_ref,
             "central trinomial");
        spot(GFClass{InverseRoot{P("1-6*x+x^2"), Rat(2)}}, false, delannoy_ref,
             "central Delannoy");
        spot(GFClass{ExpRationalTimesRoot{P("x"), P("1-x"), Poly(1), Rat(1)}}, true, lists_ref,
             "ordered set partitions");
        spot(GFClass{ExpPolySqrt{P("x+x^2/2"), Poly(), +1}}, true, invol_ref, "involutions");

        report(4, ok, "known-sequence spot checks against independent counts", detail.str());
    } catch (const std::exception& ex) {
        report(4, false, "known-sequence spot checks against independent counts", ex.what());
    }
}

// ---- criterion 5: randomized property suite --------------------------------

struct PropertyStats {
    int instances = 0;
    int shorten_successes = 0;
    std::ostringstream detail;
    bool ok = true;

    void fail(const std::string& msg) {
        ok = false;
        detail << msg << "; ";
    }
};

Poly random_poly(std::mt19937& rng, int max_deg, bool unit_constant, bool nonzero) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-9, 9);
    for (;;) {
        std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = Rat(coeff(rng));
        if (unit_constant) c[0] = 1;
        Poly p{std::move(c)};
        if (!nonzero || !p.is_zero()) return p;
    }
}

void check_instance(PropertyStats& st, const GFClass& cls) {
    ++st.instances;
    LinearODE ode = derive_ode(cls);
    TruncatedSeries g = oracle_expand(cls, 60 + ode.order());
    TruncatedSeries res = ode_residual(ode, g);
    if (!res.is_zero()) st.fail("residual nonzero for " + class_brief(cls));
}

void criterion5() {
    try {
        std::mt19937 rng(20260809);
        std::uniform_int_distribution<int> rpick(0, 3);
        const Rat rpool[] = {Rat(2), Rat(3), Rat(-2), Rat(1, 2)};
        PropertyStats st;

        for (int i = 0; i < 25; ++i) { // inverse roots
            Poly p = random_poly(rng, 4, true, true);
            check_instance(st, InverseRoot{p, rpool[rpick(rng)]});
        }
        for (int i = 0; i < 25; ++i) { // generalized roots
            Poly q = random_poly(rng, 4, false, true);
            Poly v = random_poly(rng, 4, true, true);
            Poly p = random_poly(rng, 4, true, true);
            check_instance(st, GeneralRoot{q, v, p, rpool[rpick(rng)]});
        }
        for (int i = 0; i < 25; ++i) { // sqrt ratios
            Poly q = random_poly(rng, 4, true, true);
            Poly p = random_poly(rng, 4, true, true);
            check_instance(st, SqrtRatio{q, p});
        }
        for (int i = 0; i < 25; ++i) { // rooted denominators
            for (;;) {
                Poly q = random_poly(rng, 3, false, true);
                Poly v = random_poly(rng, 3, true, true);
                Poly w = random_poly(rng, 3, false, false) * Poly::variable(); // w(0) = 0
                Poly p = random_poly(rng, 3, true, true);
                if (v * v * p == w * w) continue;
                check_instance(st, RootedDenominator{q, w, v, p});
                break;
            }
        }
        for (int i = 0; i < 25; ++i) { // rooted numerators
            Poly w = random_poly(rng, 4, false, true);
            Poly v = random_poly(rng, 4, false, true);
            Poly p = random_poly(rng, 4, true, true);
            Poly q = random_poly(rng, 4, true, true);
            check_instance(st, RootedNumerator{w, v, p, q, rpool[rpick(rng)]});
        }
        for (int i = 0; i < 25; ++i) { // nested square roots
            std::uniform_int_distribution<int> cpick(1, 3);
            long c = cpick(rng);
            Poly p = random_poly(rng, 4, true, true);
            std::vector<Rat> pc = p.coeffs();
            pc[0] = Rat(c * c);
            p = Poly(pc);
            Poly w = random_poly(rng, 4, false, false);
            std::vector<Rat> wc = w.is_zero() ? std::vector<Rat>{Rat(0)} : w.coeffs();
            wc[0] = Rat(4 - c); // w(0) + c = 4, a perfect square
            w = Poly(wc);
            check_instance(st, NestedSqrt{w, p, Rat(2)});
        }
        for (int i = 0; i < 25; ++i) { // exponentials of polynomial +- sqrt
            if (i % 2 == 0) {
                Poly w = random_poly(rng, 4, false, false) * Poly::variable();
                check_instance(st, ExpPolySqrt{w, Poly(), +1});
            } else {
                std::uniform_int_distribution<int> cpick(1, 3);
                long c = cpick(rng);
                int sign = (i % 4 == 1) ? +1 : -1;
                Poly p = random_poly(rng, 4, true, true);
                std::vector<Rat> pc = p.coeffs();
                pc[0] = Rat(c * c);
                p = Poly(pc);
                Poly w = random_poly(rng, 4, false, false);
                std::vector<Rat> wc = w.is_zero() ? std::vector<Rat>{Rat(0)} : w.coeffs();
                wc[0] = Rat(-sign * c);
                w = Poly(wc);
                check_instance(st, ExpPolySqrt{w, p, sign});
            }
        }
        for (int i = 0; i < 25; ++i) { // exp(q/v) / p^(1/r)
            Poly q = random_poly(rng, 4, false, false) * Poly::variable();
            Poly v = random_poly(rng, 4, true, true);
            Poly p = random_poly(rng, 4, true, true);
            check_instance(st, ExpRationalTimesRoot{q, v, p, rpool[rpick(rng)]});
        }

        // cross-product orthogonality as polynomial identities
        for (int i = 0; i < 20; ++i) {
            Poly p = random_poly(rng, 3, true, true);
            Poly w = random_poly(rng, 3, false, true);
            AlphaVector av = alpha_vector_nested(w, p, rpool[rpick(rng)]);
            std::array<Poly, 3> trq;
            try {
                trq = alpha_cross(av);
            } catch (const DerivationError&) {
                continue; // degenerate configuration
            }
            Poly d1 = trq[0] * av.a[0] + trq[1] * av.a[1] + trq[2] * av.a[2];
            Poly d2 = trq[0] * av.a[3] + trq[1] * av.a[4] + trq[2] * av.a[5];
            if (!d1.is_zero() || !d2.is_zero()) st.fail("cross product not orthogonal");
        }

        // exp/log and pow/pow^-1 compose to the identity at order 50
        for (int i = 0; i < 10; ++i) {
            Poly base = random_poly(rng, 4, true, true);
            TruncatedSeries a = series_from_poly(base, 50);
            Rat alpha = rpool[rpick(rng)];
            TruncatedSeries prod = series_mul(series_pow(a, alpha), series_pow(a, -alpha));
            TruncatedSeries back = series_exp(series_log(a));
            if (prod.at(0) != 1) st.fail("pow inverse broke");
            for (int n = 1; n <= 50; ++n)
                if (prod.at(n) != 0) st.fail("pow inverse broke");
            for (int n = 0; n <= 50; ++n)
                if (back.at(n) != a.at(n)) st.fail("exp/log inverse broke");
        }

        // homogenize: constant-I forms annihilate the same sequence
        for (int i = 0; i < 10; ++i) {
            Poly q = random_poly(rng, 3, true, true);
            GFClass cls = LogRational{q, P("1-x")};
            TruncatedSeries terms = oracle_expand(cls, 40);
            auto inh = inhomogeneous_form(derive_ode(cls), terms.c);
            if (!inh) continue;
            if (inh->inhom.is_zero()) continue;
            PRecurrence rec = homogenize(*inh);
            rec = certify_against(rec, terms.c, 10);
            std::vector<Rat> got = generate_terms(rec, 40);
            for (int n = 0; n <= 40; ++n)
                if (got[static_cast<std::size_t>(n)] != terms.at(n))
                    st.fail("homogenized recurrence disagrees for " + class_brief(cls));
        }

        // shorten: wherever it applies it annihilates the same sequence
        for (int i = 0; i < 10; ++i) {
            Poly w = random_poly(rng, 3, false, true);
            Poly p = random_poly(rng, 3, true, true);
            Poly q = random_poly(rng, 2, true, true);
            GFClass cls = RootedNumerator{w, Rat(-1) * P("1-x"), p, q, Rat(2)};
            try {
                Derivation d = derive_pipeline(cls);
                PRecurrence s = shortened_recurrence(d);
                ++st.shorten_successes;
                std::vector<Rat> a = generate_terms(s, 60);
                std::vector<Rat> b = generate_terms(d.rec, 60);
                if (a != b) st.fail("shortened recurrence disagrees for " + class_brief(cls));
            } catch (const DerivationError&) {
                // no shortening for this instance; fine
            } catch (const UnsupportedShape&) {
            }
        }
        {
            GFClass cls = RootedNumerator{P("1-2*x-3*x^2"), P("0-(1-x)"), P("1-2*x-7*x^2"),
                                          P("8*x^3"), Rat(2)};
            Derivation d = derive_pipeline(cls);
            PRecurrence s = shortened_recurrence(d);
            ++st.shorten_successes;
            if (generate_terms(s, 60) != generate_terms(d.rec, 60))
                st.fail("appendix shortened recurrence disagrees");
        }

        // to_egf: n! scaling preserved (spot across classes)
        for (int i = 0; i < 10; ++i) {
            Poly p = random_poly(rng, 4, true, true);
            Derivation d = derive_pipeline(GFClass{InverseRoot{p, Rat(2)}});
            PRecurrence egf = to_egf(d.rec);
            std::vector<Rat> gg = generate_terms(d.rec, 50);
            std::vector<Rat> bb = generate_terms(egf, 50);
            Rat fact(1);
            for (int n = 0; n <= 50; ++n) {
                if (n > 0) fact *= Rat(n);
                if (bb[static_cast<std::size_t>(n)] != gg[static_cast<std::size_t>(n)] * fact)
                    st.fail("to_egf broke the n! scaling");
            }
        }

        std::ostringstream what;
        what << "property suite: " << st.instances
             << " randomized instances, residuals + identities (shorten applied "
             << st.shorten_successes << " times)";
        bool pass = st.ok && st.instances >= 200 && st.shorten_successes >= 1;
        report(5, pass, what.str(), st.detail.str());
    } catch (const std::exception& ex) {
        report(5, false, "property suite", ex.what());
    }
}

// ---- criterion 6: constant-memory deep generation --------------------------

void criterion6() {
    try {
        auto start = std::chrono::steady_clock::now();
        Derivation d = derive_pipeline(GFClass{InverseRoot{P("1-2*x-3*x^2"), Rat(2)}});
        TruncatedSeries head = oracle_expand(d.cls, 100);
        const long N = 100000;
        long count = 0;
        bool prefix_ok = true;
        std::size_t digits_last = 0;
        // sink keeps nothing beyond the sliding window
        generate_terms(d.rec, N, [&](long n, const Rat& v) {
            ++count;
            if (n <= 100 && v != head.at(static_cast<int>(n))) prefix_ok = false;
            if (n == N) digits_last = v.get_num().get_str().size();
        });
        double t = seconds_since(start);
        std::ostringstream what;
        what << "100000 central-trinomial terms in " << t << " s (< 10 s), last term has "
             << digits_last << " digits";
        report(6, prefix_ok && count == N + 1 && t < 10.0, what.str(),
               prefix_ok ? "" : "prefix mismatch against the oracle");
    } catch (const std::exception& ex) {
        report(6, false, "deep generation benchmark", ex.what());
    }
}

// ---- criterion 7: degenerate nested roots are rerouted ---------------------

void criterion7() {
    try {
        bool ok = true;
        std::ostringstream detail;
        auto check = [&](const GFClass& cls, NestedKind expect, const std::string& name) {
            const auto& ns = std::get<NestedSqrt>(cls);
            if (detect_degenerate(ns.w, ns.p, ns.r) != expect) {
                ok = false;
                detail << name << " not detected; ";
                return;
            }
            Derivation d = derive_pipeline(cls);
            if (d.ode && d.ode->order() != 1) {
                ok = false;
                detail << name << " not rerouted to first order; ";
                return;
            }
            std::vector<Rat> got = generate_terms(d.rec, 50);
            TruncatedSeries oracle = oracle_expand(cls, 50);
            for (int n = 0; n <= 50; ++n)
                if (got[static_cast<std::size_t>(n)] != oracle.at(n)) {
                    ok = false;
                    detail << name << " disagrees with the oracle at " << n << "; ";
                    return;
                }
        };
        check(GFClass{NestedSqrt{P("2+x"), P("(2+x)^2"), Rat(2)}}, NestedKind::SquareCase,
              "square case");
        check(GFClass{NestedSqrt{P("3+x"), P("4*(3+x)^2"), Rat(2)}},
              NestedKind::ProportionalCase, "proportional case");
        report(7, ok, "degenerate nested roots detected and rerouted (50 terms)", detail.str());
    } catch (const std::exception& ex) {
        report(7, false, "degenerate nested roots detected and rerouted", ex.what());
    }
}

} // namespace

int main() {
    criterion1();
    criteria2and3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
    return 1;
}
