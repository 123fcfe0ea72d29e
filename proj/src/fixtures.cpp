#include "holorec/fixtures.hpp"

#include <sstream>

#include "holorec/classify.hpp"
#include "holorec/errors.hpp"

namespace holorec {

namespace {

Poly P(const std::string& s) {
    return parse_poly(s);
}

Fixture ogf(std::string id, GFClass cls, std::vector<std::string> prefix = {}) {
    return Fixture{std::move(id), std::move(cls), Fixture::Interp::OGF, std::move(prefix)};
}

Fixture egf(std::string id, GFClass cls, std::vector<std::string> prefix = {}) {
    return Fixture{std::move(id), std::move(cls), Fixture::Interp::EGF, std::move(prefix)};
}

std::vector<Fixture> build_table() {
    std::vector<Fixture> t;
    const Rat r2(2);

    // Inverse square roots, quadratic p.
    t.push_back(ogf("A002426", InverseRoot{P("1-2*x-3*x^2"), r2}));
    t.push_back(ogf("A122868", InverseRoot{P("1-6*x-3*x^2"), r2}));
    t.push_back(ogf("A001850", InverseRoot{P("1-6*x+x^2"), r2}));
    t.push_back(ogf("A026375", InverseRoot{P("1-6*x+5*x^2"), r2}));
    t.push_back(ogf("A006139", InverseRoot{P("1-4*x-4*x^2"), r2}));
    t.push_back(ogf("A000984", InverseRoot{P("1-4*x"), r2}));
    t.push_back(ogf("A098331", InverseRoot{P("1-2*x+5*x^2"), r2}));
    t.push_back(ogf("A126869", InverseRoot{P("1-4*x^2"), r2}));

    // Inverse square roots, cubic p.
    t.push_back(ogf("A115962", InverseRoot{P("1-4*x^2-4*x^3"), r2}));
    t.push_back(ogf("A098477", InverseRoot{P("1-2*x-7*x^2+8*x^3"), r2}));
    t.push_back(ogf("A026569", InverseRoot{P("1-2*x-3*x^2+4*x^3"), r2}));
    t.push_back(ogf("A191354", InverseRoot{P("1-2*x-3*x^2-4*x^3"), r2}));
    t.push_back(ogf("A098479", InverseRoot{P("1-2*x+x^2-4*x^3"), r2}));
    t.push_back(ogf("A098480", InverseRoot{P("1-2*x+x^2-8*x^3"), r2}));
    t.push_back(ogf("A137635", InverseRoot{P("1-4*x-8*x^2-4*x^3"), r2}));
    t.push_back(ogf("A165431", InverseRoot{P("1-4*x+8*x^3"), r2}));
    t.push_back(ogf("A157004", InverseRoot{P("1-4*x+4*x^3"), r2}));

    // Inverse roots, r != 2.
    t.push_back(ogf("A002457", InverseRoot{P("1-4*x"), Rat(2, 3)}));
    t.push_back(ogf("A115902", InverseRoot{P("1-8*x"), Rat(2, 3)}));
    t.push_back(ogf("A004998", InverseRoot{P("1-36*x"), Rat(6, 11)}));
    t.push_back(ogf("A298308", InverseRoot{P("1+9*x+9*x^3"), Rat(-3)}));
    t.push_back(ogf("A095776", InverseRoot{P("1-9*x-27*x^3"), Rat(3)}));

    // Generalized inverse square roots q/(v*sqrt(p)).
    t.push_back(ogf("A110170", GeneralRoot{P("1-x"), Poly(1), P("1-6*x+x^2"), r2}));
    t.push_back(ogf("A241023", GeneralRoot{P("1+x"), Poly(1), P("1-6*x+x^2"), r2}));
    t.push_back(ogf("A085362", GeneralRoot{P("1-x"), Poly(1), P("1-6*x+5*x^2"), r2}));
    t.push_back(ogf("A025178", GeneralRoot{P("1-x"), Poly(1), P("1-2*x-3*x^2"), r2}));
    t.push_back(ogf("A025565", GeneralRoot{P("x*(1+x)"), Poly(1), P("1-2*x-3*x^2"), r2}));
    t.push_back(ogf("A063886", GeneralRoot{P("1+2*x"), Poly(1), P("1-4*x^2"), r2}));
    t.push_back(ogf("A128057", GeneralRoot{P("1+x"), Poly(1), P("1+4*x^2"), r2}));
    t.push_back(ogf("A106188", GeneralRoot{Poly(1), P("1-x^2"), P("1-4*x"), r2}));
    t.push_back(ogf("A091520", GeneralRoot{Poly(1), P("1-4*x"), P("1+4*x"), r2}));

    // Rooted denominator.
    t.push_back(ogf("A116394",
                    RootedDenominator{Poly(1), P("0-x"), P("1+x"), P("1-2*x-3*x^2")}));

    // Inverse roots read as exponential generating functions.
    t.push_back(egf("A285199", InverseRoot{P("1-4*x+x^2"), r2}));
    t.push_back(egf("A006438", InverseRoot{P("1-8*x+x^2"), r2}));
    t.push_back(egf("A182827", InverseRoot{P("1+2*x+4*x^2"), r2}));
    t.push_back(egf("A098460", InverseRoot{P("1-2*x-2*x^2"), r2}));
    t.push_back(egf("A098461", InverseRoot{P("1-2*x-3*x^2"), r2}));
    t.push_back(egf("A144773", InverseRoot{P("1-10*x"), Rat(10)}));

    // exp(q/v)/p^(1/r) read as exponential generating functions.
    t.push_back(egf("A000262", ExpRationalTimesRoot{P("x"), P("1-x"), Poly(1), Rat(1)}));
    t.push_back(egf("A055142", ExpRationalTimesRoot{P("x"), Poly(1), P("1-2*x"), Rat(-2)}));
    t.push_back(egf("A052143", ExpRationalTimesRoot{P("x"), Poly(1), P("1-4*x"), r2}));
    t.push_back(egf("A094935", ExpRationalTimesRoot{P("8*x"), Poly(1), P("1-8*x"), Rat(8)}));
    t.push_back(egf("A094911", ExpRationalTimesRoot{P("7*x"), Poly(1), P("1-7*x"), Rat(7)}));
    t.push_back(egf("A345075",
                    ExpRationalTimesRoot{P("x*(1+x)"), P("1-x-x^2"), Poly(1), Rat(1)}));
    t.push_back(egf("A335819",
                    ExpRationalTimesRoot{P("3*x*(2+x)/2"), Poly(1), Poly(1), Rat(1)}));
    t.push_back(egf("A335595",
                    ExpRationalTimesRoot{P("0-x*(2+x)"), Poly(1), P("1-x"), Rat(1, 2)}));
    t.push_back(egf("A331725", ExpRationalTimesRoot{P("x"), P("1-x"), P("1+x"), Rat(1)}));
    t.push_back(egf("A318215", ExpRationalTimesRoot{P("x"), P("(1+x)^2"), Poly(1), Rat(1)}));
    t.push_back(egf("A302908",
                    ExpRationalTimesRoot{P("0-x"), Poly(1), P("6+x*(3+x)*(6+x)"), Rat(1)}));
    t.push_back(egf("A296660", ExpRationalTimesRoot{P("0-2*x"), Poly(1), P("1-4*x"), Rat(1)}));
    t.push_back(egf("A200380",
                    ExpRationalTimesRoot{P("x+x^2-x^3/6"), Poly(1), Poly(1), Rat(1)}));

    // Rooted numerator (the term-count reduction example).
    t.push_back(ogf("A122877", RootedNumerator{P("1-2*x-3*x^2"), P("0-(1-x)"),
                                               P("1-2*x-7*x^2"), P("8*x^3"), r2}));
    return t;
}

} // namespace

const std::vector<Fixture>& fixture_table() {
    static const std::vector<Fixture> table = build_table();
    return table;
}

FixtureSummary run_fixture_suite(long terms, int guard) {
    FixtureSummary summary;
    for (const Fixture& f : fixture_table()) {
        FixtureResult result;
        result.id = f.id;
        try {
            Derivation d = derive_pipeline(f.cls, guard);
            std::vector<Rat> gen = generate_terms(d.rec, terms);
            std::vector<Rat> closed = generate_terms(d.closed, terms);
            TruncatedSeries oracle = oracle_expand(f.cls, static_cast<int>(terms));
            for (long n = 0; n <= terms; ++n) {
                if (gen[static_cast<std::size_t>(n)] != oracle.at(static_cast<int>(n)))
                    throw Error("recurrence disagrees with the oracle at n=" + std::to_string(n));
                if (closed[static_cast<std::size_t>(n)] != gen[static_cast<std::size_t>(n)])
                    throw Error("closed form disagrees with the generic route at n=" +
                                std::to_string(n));
            }
            if (!f.known_prefix.empty()) {
                Rat fact(1);
                for (std::size_t k = 0; k < f.known_prefix.size(); ++k) {
                    if (k > 0 && f.interp == Fixture::Interp::EGF)
                        fact *= Rat(static_cast<long>(k));
                    Rat value = gen[k] * fact;
                    if (!rat_is_integer(value))
                        throw Error("term " + std::to_string(k) + " is not an integer: " +
                                    rat_str(value));
                    if (value != rat_parse(f.known_prefix[k]))
                        throw Error("prefix mismatch at n=" + std::to_string(k) + ": got " +
                                    rat_str(value) + ", recorded " + f.known_prefix[k]);
                }
            }
            result.pass = true;
        } catch (const std::exception& ex) {
            result.pass = false;
            result.message = ex.what();
        }
        if (result.pass)
            ++summary.passed;
        else
            ++summary.failed;
        summary.results.push_back(std::move(result));
    }
    return summary;
}

} // namespace holorec
