#ifndef HOLOREC_IO_HPP
#define HOLOREC_IO_HPP

#include <iosfwd>
#include <nlohmann/json_fwd.hpp>

#include "holorec/pipeline.hpp"

namespace holorec {

// Rationals serialize as "num" or "num/den" strings; polynomials as arrays
// of those, ascending powers.
nlohmann::json rat_to_json(const Rat& q);
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json class_to_json(const GFClass& cls);
nlohmann::json ode_to_json(const LinearODE& ode);

// {"span": J, "coeffs_in_n": [[...]], "n_min": int, "initial": [...],
//  "stride": int, "offset": int}
nlohmann::json recurrence_to_json(const PRecurrence& rec);
PRecurrence recurrence_from_json(const nlohmann::json& j);

// {"class": ..., "ode": ...|null, "recurrence": ...}
nlohmann::json derivation_to_json(const Derivation& d);

// OEIS b-file: one "index value" pair per line, '#' comments, strictly
// increasing indices.
struct BFileEntry {
    long index;
    Int value;
};
std::vector<BFileEntry> read_bfile(std::istream& in);
void write_bfile(std::ostream& out, const std::vector<BFileEntry>& entries);

} // namespace holorec

#endif
