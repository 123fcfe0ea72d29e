#include "holorec/io.hpp"

#include <cctype>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>

#include "holorec/errors.hpp"

namespace holorec {

using nlohmann::json;

json rat_to_json(const Rat& q) {
    return rat_str(q);
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(rat_str(p[k]));
    return arr;
}

Poly poly_from_json(const json& j) {
    std::vector<Rat> coeffs;
    for (const auto& item : j) coeffs.push_back(rat_parse(item.get<std::string>()));
    return Poly(std::move(coeffs));
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json rat_list_to_json(const std::vector<Rat>& xs) {
    json arr = json::array();
    for (const Rat& x : xs) arr.push_back(rat_str(x));
    return arr;
}

} // namespace

json class_to_json(const GFClass& cls) {
    json j;
    j["type"] = class_name(cls);
    std::visit(overloaded{[&](const InverseRoot& c) {
                              j["p"] = poly_to_json(c.p);
                              j["r"] = rat_str(c.r);
                          },
                          [&](const GeneralRoot& c) {
                              j["q"] = poly_to_json(c.q);
                              j["v"] = poly_to_json(c.v);
                              j["p"] = poly_to_json(c.p);
                              j["r"] = rat_str(c.r);
                          },
                          [&](const SqrtRatio& c) {
                              j["q"] = poly_to_json(c.q);
                              j["p"] = poly_to_json(c.p);
                          },
                          [&](const RootedDenominator& c) {
                              j["q"] = poly_to_json(c.q);
                              j["w"] = poly_to_json(c.w);
                              j["v"] = poly_to_json(c.v);
                              j["p"] = poly_to_json(c.p);
                          },
                          [&](const RootedNumerator& c) {
                              j["w"] = poly_to_json(c.w);
                              j["v"] = poly_to_json(c.v);
                              j["p"] = poly_to_json(c.p);
                              j["q"] = poly_to_json(c.q);
                              j["r"] = rat_str(c.r);
                          },
                          [&](const NestedSqrt& c) {
                              j["w"] = poly_to_json(c.w);
                              j["p"] = poly_to_json(c.p);
                              j["r"] = rat_str(c.r);
                          },
                          [&](const ExpPolySqrt& c) {
                              j["w"] = poly_to_json(c.w);
                              j["p"] = poly_to_json(c.p);
                              j["sign"] = c.sign >= 0 ? 1 : -1;
                          },
                          [&](const ExpRationalTimesRoot& c) {
                              j["q"] = poly_to_json(c.q);
                              j["v"] = poly_to_json(c.v);
                              j["p"] = poly_to_json(c.p);
                              j["r"] = rat_str(c.r);
                          },
                          [&](const LogRational& c) {
                              j["q"] = poly_to_json(c.q);
                              j["v"] = poly_to_json(c.v);
                          },
                          [&](const Hypergeometric& c) {
                              j["alphas"] = rat_list_to_json(c.alphas);
                              j["betas"] = rat_list_to_json(c.betas);
                              j["t"] = c.t;
                              j["r"] = c.r;
                              j["c"] = rat_str(c.c);
                          },
                          [&](const PowerOfFirstOrder& c) {
                              j["L"] = poly_to_json(c.L);
                              j["H"] = poly_to_json(c.H);
                              j["r"] = rat_str(c.r);
                          }},
               cls);
    return j;
}

json ode_to_json(const LinearODE& ode) {
    json coeffs = json::array();
    for (const Poly& a : ode.coeffs) coeffs.push_back(poly_to_json(a));
    return json{{"order", ode.order()}, {"coeffs", coeffs}, {"inhom", poly_to_json(ode.inhom)}};
}

json recurrence_to_json(const PRecurrence& rec) {
    json coeffs = json::array();
    for (const Poly& c : rec.coeffs) coeffs.push_back(poly_to_json(c));
    return json{{"span", rec.span()},       {"coeffs_in_n", coeffs},
                {"n_min", rec.n_min},       {"initial", rat_list_to_json(rec.initial)},
                {"stride", rec.stride},     {"offset", rec.offset}};
}

PRecurrence recurrence_from_json(const json& j) {
    PRecurrence rec;
    for (const auto& c : j.at("coeffs_in_n")) rec.coeffs.push_back(poly_from_json(c));
    rec.n_min = j.at("n_min").get<long>();
    for (const auto& t : j.at("initial")) rec.initial.push_back(rat_parse(t.get<std::string>()));
    rec.stride = j.at("stride").get<long>();
    rec.offset = j.at("offset").get<long>();
    if (j.contains("span") && j.at("span").get<int>() != rec.span())
        throw Error("recurrence JSON span disagrees with its coefficient list");
    return rec;
}

json derivation_to_json(const Derivation& d) {
    json j;
    j["class"] = class_to_json(d.cls);
    j["ode"] = d.ode ? ode_to_json(*d.ode) : json(nullptr);
    j["recurrence"] = recurrence_to_json(d.rec);
    return j;
}

std::vector<BFileEntry> read_bfile(std::istream& in) {
    std::vector<BFileEntry> entries;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') continue;
        std::size_t sp = line.find(' ', i);
        if (sp == std::string::npos)
            throw Error("b-file line " + std::to_string(lineno) + ": expected 'index value'");
        std::string idx_s = line.substr(i, sp - i);
        std::size_t vs = sp;
        while (vs < line.size() && std::isspace(static_cast<unsigned char>(line[vs]))) ++vs;
        std::size_t ve = vs;
        while (ve < line.size() && !std::isspace(static_cast<unsigned char>(line[ve]))) ++ve;
        std::string val_s = line.substr(vs, ve - vs);
        while (ve < line.size() && std::isspace(static_cast<unsigned char>(line[ve]))) ++ve;
        if (ve != line.size())
            throw Error("b-file line " + std::to_string(lineno) + ": trailing content");
        BFileEntry e;
        try {
            std::size_t pos = 0;
            e.index = std::stol(idx_s, &pos);
            if (pos != idx_s.size() || e.index < 0) throw std::invalid_argument("index");
        } catch (const std::exception&) {
            throw Error("b-file line " + std::to_string(lineno) + ": malformed index '" + idx_s +
                        "'");
        }
        if (val_s.empty() || mpz_set_str(e.value.get_mpz_t(), val_s.c_str(), 10) != 0)
            throw Error("b-file line " + std::to_string(lineno) + ": malformed value '" + val_s +
                        "'");
        if (!entries.empty() && entries.back().index >= e.index)
            throw Error("b-file line " + std::to_string(lineno) + ": indices must increase");
        entries.push_back(std::move(e));
    }
    return entries;
}

void write_bfile(std::ostream& out, const std::vector<BFileEntry>& entries) {
    for (const BFileEntry& e : entries) out << e.index << " " << e.value.get_str() << "\n";
}

} // namespace holorec
