#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "holorec/fixtures.hpp"
#include "holorec/io.hpp"

using namespace holorec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitDerivation = 3;

struct ClassFlags {
    std::string expr;
    std::string class_name;
    std::string p = "1", q = "1", v = "1", w = "0", L, H;
    std::string r = "2";
    std::string alphas, betas, c = "1";
    long t = 0;
    int sign = +1;
};

void add_class_flags(CLI::App* cmd, ClassFlags& f) {
    cmd->add_option("--expr", f.expr, "generating-function expression");
    cmd->add_option("--class", f.class_name,
                    "shape name (inverse-root, general-root, sqrt-ratio, rooted-denominator, "
                    "rooted-numerator, nested-sqrt, exp-poly-sqrt, exp-rational-root, "
                    "log-rational, hypergeometric, power-first-order)");
    cmd->add_option("--p", f.p, "polynomial p(x)");
    cmd->add_option("--q", f.q, "polynomial q(x)");
    cmd->add_option("--v", f.v, "polynomial v(x)");
    cmd->add_option("--w", f.w, "polynomial w(x)");
    cmd->add_option("--L", f.L, "polynomial L(x) (power-first-order)");
    cmd->add_option("--H", f.H, "polynomial H(x) (power-first-order)");
    cmd->add_option("--r", f.r, "root index r (rational; stride for hypergeometric)");
    cmd->add_option("--alphas", f.alphas, "comma-separated rational list");
    cmd->add_option("--betas", f.betas, "comma-separated rational list");
    cmd->add_option("--t", f.t, "offset t (hypergeometric)");
    cmd->add_option("--c", f.c, "constant c (hypergeometric)");
    cmd->add_option("--sign", f.sign, "sign of the sqrt term, +1 or -1 (exp-poly-sqrt)");
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) out.push_back(rat_parse(cur));
    return out;
}

GFClass class_from_flags(const ClassFlags& f) {
    if (!f.expr.empty()) {
        if (!f.class_name.empty())
            throw UnsupportedShape("--expr and --class are mutually exclusive");
        return classify(f.expr);
    }
    if (f.class_name.empty()) throw UnsupportedShape("one of --expr or --class is required");
    const std::string& name = f.class_name;
    Rat r = rat_parse(f.r);
    if (name == "inverse-root") return InverseRoot{parse_poly(f.p), r};
    if (name == "general-root")
        return GeneralRoot{parse_poly(f.q), parse_poly(f.v), parse_poly(f.p), r};
    if (name == "sqrt-ratio") return SqrtRatio{parse_poly(f.q), parse_poly(f.p)};
    if (name == "rooted-denominator")
        return RootedDenominator{parse_poly(f.q), parse_poly(f.w), parse_poly(f.v),
                                 parse_poly(f.p)};
    if (name == "rooted-numerator")
        return RootedNumerator{parse_poly(f.w), parse_poly(f.v), parse_poly(f.p), parse_poly(f.q),
                               r};
    if (name == "nested-sqrt") return NestedSqrt{parse_poly(f.w), parse_poly(f.p), r};
    if (name == "exp-poly-sqrt") {
        Poly p = f.p == "1" ? Poly() : parse_poly(f.p); // default: no sqrt part
        return ExpPolySqrt{parse_poly(f.w), p, f.sign >= 0 ? +1 : -1};
    }
    if (name == "exp-rational-root")
        return ExpRationalTimesRoot{parse_poly(f.q), parse_poly(f.v), parse_poly(f.p), r};
    if (name == "log-rational") return LogRational{parse_poly(f.q), parse_poly(f.v)};
    if (name == "hypergeometric") {
        Hypergeometric h;
        h.alphas = parse_rat_list(f.alphas);
        h.betas = parse_rat_list(f.betas);
        h.t = f.t;
        h.r = rat_to_long(rat_parse(f.r));
        h.c = rat_parse(f.c);
        return h;
    }
    if (name == "power-first-order") {
        if (f.L.empty() || f.H.empty())
            throw UnsupportedShape("power-first-order needs --L and --H");
        return PowerOfFirstOrder{parse_poly(f.L), parse_poly(f.H), r};
    }
    throw UnsupportedShape("unknown class name '" + name + "'");
}

void print_ode(std::ostream& out, const LinearODE& ode) {
    out << "ode: order " << ode.order() << "\n";
    for (int k = ode.order(); k >= 0; --k)
        out << "  A" << k << " = " << ode.A(k).str() << "\n";
    out << "  H  = " << ode.inhom.str() << "\n";
}

void print_recurrence(std::ostream& out, const std::string& label, const PRecurrence& rec) {
    out << label << ": " << recurrence_str(rec) << "\n";
    out << "  span " << rec.span() << ", n_min " << rec.n_min << ", initial [";
    for (std::size_t i = 0; i < rec.initial.size(); ++i)
        out << (i ? ", " : "") << rat_str(rec.initial[i]);
    out << "]\n";
}

int cmd_derive(const ClassFlags& flags, int guard, bool as_json, bool do_shorten, bool do_egf,
               bool do_lgf) {
    GFClass cls = class_from_flags(flags);
    Derivation d = derive_pipeline(cls, guard);
    std::optional<PRecurrence> shortened, egf_rec, lgf_rec;
    if (do_shorten) shortened = shortened_recurrence(d, guard);
    if (do_egf) egf_rec = to_egf(d.rec);
    if (do_lgf) lgf_rec = to_lgf(d.rec);

    if (as_json) {
        nlohmann::json j = derivation_to_json(d);
        if (shortened) j["shortened"] = recurrence_to_json(*shortened);
        if (egf_rec) j["egf_recurrence"] = recurrence_to_json(*egf_rec);
        if (lgf_rec) j["lgf_recurrence"] = recurrence_to_json(*lgf_rec);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "class: " << class_brief(d.cls) << "\n";
    if (d.ode) print_ode(std::cout, *d.ode);
    print_recurrence(std::cout, "recurrence", d.rec);
    if (shortened) print_recurrence(std::cout, "shortened", *shortened);
    if (egf_rec) print_recurrence(std::cout, "egf recurrence (b_n = n! g_n)", *egf_rec);
    if (lgf_rec) print_recurrence(std::cout, "lgf recurrence (c_n = n g_n)", *lgf_rec);
    return kExitOk;
}

// Terms of the requested interpretation: plain, b_n = n!*g_n, or c_n = n*g_n.
std::vector<Rat> pipeline_terms(const GFClass& cls, int guard, long n, bool egf, bool lgf) {
    Derivation d = derive_pipeline(cls, guard);
    if (egf) return generate_terms(to_egf(d.rec), n);
    if (lgf) return generate_terms(to_lgf(d.rec), n);
    return generate_terms(d.rec, n);
}

int cmd_gen(const ClassFlags& flags, int guard, long n, const std::string& format, bool egf,
            bool lgf, bool allow_rational) {
    if (egf && lgf) throw UnsupportedShape("--egf and --lgf are mutually exclusive");
    GFClass cls = class_from_flags(flags);
    std::vector<Rat> terms = pipeline_terms(cls, guard, n, egf, lgf);
    long first = lgf ? 1 : 0;

    if (egf && !allow_rational)
        for (long k = first; k <= n; ++k)
            if (!rat_is_integer(terms[static_cast<std::size_t>(k)]))
                throw GenerationError("EGF term " + std::to_string(k) + " = " +
                                      rat_str(terms[static_cast<std::size_t>(k)]) +
                                      " is not an integer (use --allow-rational)");

    if (format == "lines") {
        for (long k = first; k <= n; ++k)
            std::cout << rat_str(terms[static_cast<std::size_t>(k)]) << "\n";
    } else if (format == "csv") {
        for (long k = first; k <= n; ++k)
            std::cout << (k > first ? "," : "") << rat_str(terms[static_cast<std::size_t>(k)]);
        std::cout << "\n";
    } else if (format == "bfile") {
        std::vector<BFileEntry> entries;
        for (long k = first; k <= n; ++k) {
            const Rat& t = terms[static_cast<std::size_t>(k)];
            if (!rat_is_integer(t))
                throw GenerationError("term " + std::to_string(k) + " = " + rat_str(t) +
                                      " is not an integer; b-files hold integers only");
            entries.push_back({k, t.get_num()});
        }
        write_bfile(std::cout, entries);
    } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (long k = first; k <= n; ++k)
            arr.push_back(rat_str(terms[static_cast<std::size_t>(k)]));
        std::cout << arr.dump() << "\n";
    } else {
        throw UnsupportedShape("unknown format '" + format + "'");
    }
    return kExitOk;
}

int cmd_check(const ClassFlags& flags, int guard, const std::string& bfile_path, long offset,
              long limit, bool egf, bool lgf) {
    GFClass cls = class_from_flags(flags);
    std::ifstream in(bfile_path);
    if (!in) throw Error("cannot open b-file '" + bfile_path + "'");
    std::vector<BFileEntry> entries = read_bfile(in);

    long max_n = -1;
    for (const BFileEntry& e : entries) {
        long n = e.index - offset;
        if (n >= 0 && n <= limit) max_n = std::max(max_n, n);
    }
    if (max_n < 0) {
        std::cout << "OK 0 terms\n";
        return kExitOk;
    }
    std::vector<Rat> terms = pipeline_terms(cls, guard, max_n, egf, lgf);
    long checked = 0;
    for (const BFileEntry& e : entries) {
        long n = e.index - offset;
        if (n < 0 || n > max_n) continue;
        if (lgf && n == 0) continue;
        const Rat& ours = terms[static_cast<std::size_t>(n)];
        if (!rat_is_integer(ours) || ours.get_num() != e.value) {
            std::cout << "MISMATCH at b-file index " << e.index << ": sequence has "
                      << rat_str(ours) << ", b-file has " << e.value.get_str() << "\n";
            return kExitMismatch;
        }
        ++checked;
    }
    std::cout << "OK " << checked << " terms\n";
    return kExitOk;
}

int cmd_fixtures(long terms, int guard) {
    FixtureSummary summary = run_fixture_suite(terms, guard);
    for (const FixtureResult& r : summary.results) {
        std::cout << (r.pass ? "pass" : "FAIL") << " " << r.id;
        if (!r.pass) std::cout << ": " << r.message;
        std::cout << "\n";
    }
    std::cout << summary.passed << " passed, " << summary.failed << " failed\n";
    return summary.failed == 0 ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"P-finite recurrences from generating functions with roots"};
    app.require_subcommand(1);

    ClassFlags flags;
    int guard = 10;
    app.add_option("--guard", guard, "certification guard window (default 10)");

    auto* derive = app.add_subcommand("derive", "derive the ODE and recurrence");
    add_class_flags(derive, flags);
    bool as_json = false, do_shorten = false, do_egf = false, do_lgf = false;
    derive->add_flag("--json", as_json, "emit JSON");
    derive->add_flag("--shorten", do_shorten, "also derive the shortened recurrence");
    derive->add_flag("--egf", do_egf, "also derive the recurrence for b_n = n! g_n");
    derive->add_flag("--lgf", do_lgf, "also derive the recurrence for c_n = n g_n");

    auto* gen = app.add_subcommand("gen", "generate sequence terms");
    add_class_flags(gen, flags);
    long n_terms = 10;
    std::string format = "lines";
    bool gen_egf = false, gen_lgf = false, allow_rational = false;
    gen->add_option("-n,--terms", n_terms, "last index to generate")->required();
    gen->add_option("--format", format, "lines|csv|bfile|json");
    gen->add_flag("--egf", gen_egf, "emit b_n = n! g_n");
    gen->add_flag("--lgf", gen_lgf, "emit c_n = n g_n (starts at n=1)");
    gen->add_flag("--allow-rational", allow_rational, "permit non-integer EGF terms");

    auto* check = app.add_subcommand("check", "verify terms against an OEIS b-file");
    add_class_flags(check, flags);
    std::string bfile_path;
    long offset = 0, limit = 10000;
    bool check_egf = false, check_lgf = false;
    check->add_option("--bfile", bfile_path, "b-file path")->required();
    check->add_option("--offset", offset, "b-file index of sequence term 0");
    check->add_option("--limit", limit, "largest sequence index to verify");
    check->add_flag("--egf", check_egf, "compare b_n = n! g_n");
    check->add_flag("--lgf", check_lgf, "compare c_n = n g_n");

    auto* fixtures = app.add_subcommand("fixtures", "run the catalogued sequence suite");
    long fixture_terms = 100;
    fixtures->add_option("-n,--terms", fixture_terms, "terms certified per sequence");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(derive))
            return cmd_derive(flags, guard, as_json, do_shorten, do_egf, do_lgf);
        if (app.got_subcommand(gen))
            return cmd_gen(flags, guard, n_terms, format, gen_egf, gen_lgf, allow_rational);
        if (app.got_subcommand(check))
            return cmd_check(flags, guard, bfile_path, offset, limit, check_egf, check_lgf);
        if (app.got_subcommand(fixtures)) return cmd_fixtures(fixture_terms, guard);
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const UnsupportedShape& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const DerivationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitDerivation;
    } catch (const GenerationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitDerivation;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitDerivation;
    }
    return kExitInput;
}
