#ifndef HOLOREC_SERIES_HPP
#define HOLOREC_SERIES_HPP

#include <vector>

#include "holorec/exact.hpp"

namespace holorec {

// First order+1 exact coefficients of a power series; index n holds [x^n].
struct TruncatedSeries {
    std::vector<Rat> c;

    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<Rat> coeffs) : c(std::move(coeffs)) {}

    int order() const { return static_cast<int>(c.size()) - 1; }
    const Rat& at(int n) const;
    bool is_zero() const;
};

TruncatedSeries series_from_poly(const Poly& p, int order);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const Rat& s, const TruncatedSeries& a);
// a/b with b(0) != 0.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_derivative(const TruncatedSeries& a);
// Multiply by x^k (shifts coefficients up, keeps the order).
TruncatedSeries series_shift_up(const TruncatedSeries& a, int k);

// a(x)^alpha for a0 = 1, via the convolution recurrence that follows from
// a*(a^alpha)' = alpha*a'*a^alpha.
TruncatedSeries series_pow(const TruncatedSeries& a, const Rat& alpha);
// exp(a) for a0 = 0.
TruncatedSeries series_exp(const TruncatedSeries& a);
// log(a) for a0 = 1.
TruncatedSeries series_log(const TruncatedSeries& a);

} // namespace holorec

#endif
