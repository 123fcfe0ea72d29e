#ifndef HOLOREC_GFCLASS_HPP
#define HOLOREC_GFCLASS_HPP

#include <string>
#include <variant>
#include <vector>

#include "holorec/exact.hpp"

namespace holorec {

// Supported generating-function shapes. Polynomial members are in x.

// g = p^(-1/r)
struct InverseRoot {
    Poly p;
    Rat r;
};

// g = q / (v * p^(1/r))
struct GeneralRoot {
    Poly q, v, p;
    Rat r;
};

// g = sqrt(q/p)
struct SqrtRatio {
    Poly q, p;
};

// g = q / (w + v*sqrt(p)); square roots only
struct RootedDenominator {
    Poly q, w, v, p;
};

// g = (w + v * p^(1/r)) / q
struct RootedNumerator {
    Poly w, v, p, q;
    Rat r;
};

// g = (w + sqrt(p))^(1/r)
struct NestedSqrt {
    Poly w, p;
    Rat r;
};

// g = exp(w + sign*sqrt(p)); p identically zero means plain exp(w)
struct ExpPolySqrt {
    Poly w, p;
    int sign = +1;
};

// g = exp(q/v) * p^(-1/r)
struct ExpRationalTimesRoot {
    Poly q, v, p;
    Rat r;
};

// g = log(q/v)
struct LogRational {
    Poly q, v;
};

// g = x^t * pFq({alphas}; {betas}; x^r / c)
struct Hypergeometric {
    std::vector<Rat> alphas, betas;
    long t = 0;
    long r = 1;
    Rat c;
};

// g = f^(1/r) where f solves L*f' + H*f = 0, f(0) = 1
struct PowerOfFirstOrder {
    Poly L, H;
    Rat r;
};

using GFClass = std::variant<InverseRoot, GeneralRoot, SqrtRatio, RootedDenominator,
                             RootedNumerator, NestedSqrt, ExpPolySqrt, ExpRationalTimesRoot,
                             LogRational, Hypergeometric, PowerOfFirstOrder>;

// Stable lowercase identifier, e.g. "inverse-root".
std::string class_name(const GFClass& cls);
// Human-readable summary with the polynomial parameters.
std::string class_brief(const GFClass& cls);

// Checks shape invariants and the rationality preconditions the exact
// expansion needs (unit-normalizable constant terms, nonzero divisors).
// Throws UnsupportedShape on violation.
void validate_class(const GFClass& cls);

// u/w + q/(v*sqrt(p)) combined over a common denominator into a rooted
// numerator shape (square roots only).
GFClass rewrite_sum(const Poly& u, const Poly& w, const Poly& q, const Poly& v, const Poly& p);

// (u*sqrt(p) + w) / (v*sqrt(p) + q) with the root cleared from the
// denominator by the conjugate.
GFClass rewrite_moebius_sqrt(const Poly& u, const Poly& w, const Poly& v, const Poly& q,
                             const Poly& p);

// Rooted-numerator constructor that simplifies away degenerate parts
// (no radical left, or no polynomial part left) and removes common factors.
GFClass make_rooted_numerator(Poly w, Poly v, Poly p, Poly q, const Rat& r);

} // namespace holorec

#endif
