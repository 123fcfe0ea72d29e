#ifndef HOLOREC_RECURRENCE_HPP
#define HOLOREC_RECURRENCE_HPP

#include <functional>
#include <optional>

#include "holorec/gfclass.hpp"
#include "holorec/ode.hpp"

namespace holorec {

// P-finite recurrence sum_j C_j(n) * g_{n-j} = 0 for n >= n_min, with
// polynomial-in-n coefficients C_0..C_J. `initial` holds the terms below
// the index where forward substitution starts (it covers n_min and every
// integer root of C_0 at or beyond it).
//
// stride/offset describe lattice-supported sequences (hypergeometric
// x^(t+rn) expansions): the recurrence and its initial terms then live on
// the lattice index m with g_{t+rm} = h_m, and all off-lattice sequence
// entries are exact zeros.
struct PRecurrence {
    std::vector<Poly> coeffs;
    long n_min = 0;
    std::vector<Rat> initial;
    long stride = 1;
    long offset = 0;

    int span() const { return static_cast<int>(coeffs.size()) - 1; }
    const Poly& C(int j) const { return coeffs[static_cast<std::size_t>(j)]; }
};

// sum_j P_j(n) * g_{n-j} + I(n) = 0 on n >= n_min.
struct InhomPRecurrence {
    std::vector<Poly> coeffs;
    Poly inhom;
    long n_min = 0;
};

// Strip identically-zero leading/trailing coefficients (with the index
// shift a leading strip implies), scale to primitive integer coefficients,
// and make the leading coefficient of C_0 positive.
void normalize_recurrence(PRecurrence& rec);

// Generic ODE -> recurrence conversion. C_j(n) = sum_k A_{k,j-K+k} *
// (n-j)(n-j-1)...(k factors); theoretical n_min, no initial terms.
PRecurrence ode_to_recurrence(const LinearODE& ode);

// Recurrence straight from the class-specific theorem, bypassing the ODE.
PRecurrence closed_form_recurrence(const GFClass& cls);

// sum_j C_j(n) * terms[n-j] with zero padding below index 0.
Rat recurrence_residual_at(const PRecurrence& rec, const std::vector<Rat>& terms, long n);

// Number of leading reference terms certify_against wants for this
// recurrence and guard window.
long certify_terms_needed(const PRecurrence& rec, int guard);

// Probes the relation downward from the theoretical n_min against a
// reference prefix (guard indices past the bound must also hold), absorbs
// integer roots of C_0 into the initial segment, and attaches it.
PRecurrence certify_against(PRecurrence rec, const std::vector<Rat>& terms, int guard);

// Terms g_0..g_N in sequence coordinates (zeros off the lattice when
// stride > 1). The sink form keeps only a sliding window internally.
void generate_terms(const PRecurrence& rec, long n_max,
                    const std::function<void(long, const Rat&)>& sink);
std::vector<Rat> generate_terms(const PRecurrence& rec, long n_max);

// Appendix-style transformations.
PRecurrence homogenize(const InhomPRecurrence& rec);
PRecurrence to_egf(const PRecurrence& rec);
PRecurrence to_lgf(const PRecurrence& rec);

// Eliminates one term from the pair (rec from a first-order ODE, rec from
// its differentiated ODE) by solving the telescoping ansatz
// T(n) - T(n-1) = -(combined relation); the combination of the two inputs
// is fixed by requiring the ansatz to close. Fails when no polynomial
// solution exists or the telescoped constant is nonzero.
PRecurrence shorten(const PRecurrence& rec1, const PRecurrence& rec2, int guard = 10);

// Constant-I inhomogeneous form of a first-order ODE's recurrence,
// obtained by telescoping the delta contributions of H; nullopt when the
// telescoping ansatz does not close. `terms` supply the accumulated value.
std::optional<InhomPRecurrence> inhomogeneous_form(const LinearODE& ode,
                                                   const std::vector<Rat>& terms);

std::string recurrence_str(const PRecurrence& rec, const std::string& term = "g");

} // namespace holorec

#endif
