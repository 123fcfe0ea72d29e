#ifndef HOLOREC_ORACLE_HPP
#define HOLOREC_ORACLE_HPP

#include "holorec/gfclass.hpp"
#include "holorec/series.hpp"

namespace holorec {

// Ground-truth expansion of a classified shape to order terms, by direct
// truncated power-series arithmetic. Independent of the recurrence path;
// used to seed initial terms and certify every derivation.
TruncatedSeries oracle_expand(const GFClass& cls, int order);

// p(x)^alpha as a series; normalizes a nonunit constant term through its
// exact rational power and handles integer exponents directly.
TruncatedSeries series_poly_power(const Poly& p, const Rat& alpha, int order);

} // namespace holorec

#endif
