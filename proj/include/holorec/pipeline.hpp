#ifndef HOLOREC_PIPELINE_HPP
#define HOLOREC_PIPELINE_HPP

#include <optional>

#include "holorec/classify.hpp"
#include "holorec/oracle.hpp"
#include "holorec/recurrence.hpp"

namespace holorec {

// Everything a derivation produces: the classified shape, the reduced ODE
// (absent for hypergeometric shapes), and both certified recurrences
// (generic converter route and the closed-form theorem route).
struct Derivation {
    GFClass cls;
    std::optional<LinearODE> ode;
    PRecurrence rec;
    PRecurrence closed;
};

Derivation derive_pipeline(const GFClass& cls, int guard = 10);

// Appendix-style term-count reduction: recurrence from the differentiated
// ODE paired with the first-order one. Requires sum_n R_n = 0 (a 1-x
// factor in R).
PRecurrence shortened_recurrence(const Derivation& d, int guard = 10);

// Reference terms for certification, in the recurrence's own coordinates
// (lattice terms when stride > 1).
std::vector<Rat> oracle_lattice_prefix(const GFClass& cls, const PRecurrence& rec, long count);

} // namespace holorec

#endif
