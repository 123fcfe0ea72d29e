#ifndef HOLOREC_ODE_HPP
#define HOLOREC_ODE_HPP

#include <array>

#include "holorec/gfclass.hpp"
#include "holorec/series.hpp"

namespace holorec {

// Linear ODE sum_k A_k(x) * g^(k)(x) = H(x) with polynomial coefficients.
// coeffs holds A_0..A_K; the top coefficient is nonzero.
struct LinearODE {
    std::vector<Poly> coeffs;
    Poly inhom;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const Poly& A(int k) const { return coeffs[static_cast<std::size_t>(k)]; }
};

// The six alpha polynomials of the order-2 ansatz, stored with the 1/p
// factor cleared: both triples carry a common factor p, which the cross
// product turns into p^2. `clear` records that factor and `post` the
// scalar the construction multiplies through at the end (8/r or 8).
struct AlphaVector {
    std::array<Poly, 6> a;
    Poly clear;
    Rat post;
};

enum class NestedKind { Regular, SquareCase, ProportionalCase };

// w^2 = p exactly, or w*p' = 2*w'*p (w^2 = C*p); either collapses the
// order-2 ansatz and reroutes through the plain inverse-root shape.
NestedKind detect_degenerate(const Poly& w, const Poly& p, const Rat& r);

AlphaVector alpha_vector_nested(const Poly& w, const Poly& p, const Rat& r);
AlphaVector alpha_vector_expsqrt(const Poly& w, const Poly& p, int sign);

// Cross product of the two alpha triples: T = a2*a6 - a3*a5,
// R = a3*a4 - a1*a6, Q = a1*a5 - a2*a4, with the recorded common factor
// divided back out and coefficients cleared to integers.
std::array<Poly, 3> alpha_cross(const AlphaVector& av);

// Class-specific first or second order ODE, reduced by the common
// polynomial factor and scaled to primitive integer coefficients with a
// positive leading coefficient on the top term.
LinearODE derive_ode(const GFClass& cls);

// Same, straight from the class formulas with no reduction. Kept separate
// so the closed-form recurrence route stays independent of the gcd step.
LinearODE derive_ode_raw(const GFClass& cls);

// Divide all coefficients (and H when present) by their polynomial gcd and
// rescale to primitive integers.
LinearODE reduce_common_factor(LinearODE ode);

// d/dx of a first-order ODE: R g'' + (R'+Q) g' + Q' g = H'.
LinearODE differentiate_ode(const LinearODE& ode);

// sum_k A_k * g^(k) - H on a truncated series; the certification residual.
TruncatedSeries ode_residual(const LinearODE& ode, const TruncatedSeries& g);

} // namespace holorec

#endif
