#ifndef HOLOREC_EXACT_HPP
#define HOLOREC_EXACT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "holorec/errors.hpp"

namespace holorec {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator, zero as 0/1.
using Rat = mpq_class;
using Int = mpz_class;

Rat rat_parse(const std::string& text);
std::string rat_str(const Rat& q);
bool rat_is_integer(const Rat& q);
long rat_to_long(const Rat& q);

// Exact n-th root of a rational, or nullopt if irrational.
std::optional<Rat> rat_nth_root(const Rat& q, unsigned long n);
// base^e as an exact rational, or nullopt (0^nonpositive and irrational
// results are both nullopt).
std::optional<Rat> rat_pow_exact(const Rat& base, const Rat& e);

// Dense univariate polynomial over the rationals. Used both for
// polynomials in x (generating-function data) and polynomials in n
// (recurrence coefficients); the role is positional, not typed.
//
// Invariants: coefficient list has no trailing zeros; the zero polynomial
// has an empty list and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(int c) : Poly(Rat(c)) {}
    explicit Poly(const Rat& c);
    explicit Poly(std::vector<Rat> coeffs);

    static Poly variable();                       // x
    static Poly monomial(int k, const Rat& c = Rat(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    // Coefficient of x^k; zero outside the stored range.
    const Rat& operator[](int k) const;
    Rat leading() const;
    Rat constant_term() const;

    Rat eval(const Rat& v) const;
    Poly derivative() const;
    // P(x + d), used to shift recurrence indices.
    Poly shifted_arg(long d) const;
    Poly pow(unsigned e) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, Poly a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }
inline Poly poly_derivative(const Poly& a) { return a.derivative(); }

// Monic gcd over the rationals; rejects the both-zero input.
Poly poly_gcd_primitive(const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
// Quotient a/b; throws Error when the division leaves a remainder.
Poly poly_divexact(const Poly& a, const Poly& b);

// Stirling numbers of the second kind, memoized.
const Int& stirling2(unsigned n, unsigned k);

// Coefficients s_m with poly(n) = sum_m s_m * n(n-1)...(n-m+1).
std::vector<Rat> power_to_falling(const Poly& poly_in_n);
// Inverse expansion, for checking the conversion round-trips.
Poly falling_to_power(const std::vector<Rat>& s);

// Falling factorial m(m-1)...(m-k+1) as a polynomial in n evaluated
// symbolically: ff_poly(j, k) = (n-j)(n-j-1)...(n-j-k+1).
Poly falling_factorial_poly(long shift, unsigned k);

// Scale a set of polynomials jointly so all coefficients become integers
// with overall content 1. Returns the multiplier applied.
Rat make_joint_primitive(std::vector<Poly*> polys);

} // namespace holorec

#endif
