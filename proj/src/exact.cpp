#include "holorec/exact.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace holorec {

Rat rat_parse(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == ' '; }), s.end());
    if (s.empty()) throw Error("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw Error("malformed rational literal: '" + text + "'");
    if (s.find('/') != std::string::npos && q.get_den() == 0)
        throw Error("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

bool rat_is_integer(const Rat& q) {
    return q.get_den() == 1;
}

long rat_to_long(const Rat& q) {
    if (!rat_is_integer(q) || !q.get_num().fits_slong_p())
        throw Error("expected a small integer, got " + rat_str(q));
    return q.get_num().get_si();
}

std::optional<Rat> rat_nth_root(const Rat& q, unsigned long n) {
    if (n == 0) return std::nullopt;
    if (n == 1) return q;
    if (sgn(q) < 0 && n % 2 == 0) return std::nullopt;
    Int num = q.get_num(), den = q.get_den();
    Int rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n);
    int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n);
    if (!exact_n || !exact_d) return std::nullopt;
    return Rat(rn, rd);
}

std::optional<Rat> rat_pow_exact(const Rat& base, const Rat& e) {
    if (e == 0) {
        if (base == 0) return std::nullopt;
        return Rat(1);
    }
    if (base == 0) return sgn(e) > 0 ? std::optional<Rat>(Rat(0)) : std::nullopt;
    Int a = e.get_num(), b = e.get_den();
    if (!b.fits_ulong_p() || !a.fits_slong_p()) return std::nullopt;
    auto root = rat_nth_root(base, b.get_ui());
    if (!root) return std::nullopt;
    long ai = a.get_si();
    bool invert = ai < 0;
    unsigned long mag = invert ? static_cast<unsigned long>(-ai) : static_cast<unsigned long>(ai);
    if (mag > 4096) return std::nullopt; // no sane input needs this
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), root->get_num().get_mpz_t(), mag);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), root->get_den().get_mpz_t(), mag);
    r.canonicalize();
    if (invert) {
        if (r == 0) return std::nullopt;
        r = 1 / r;
    }
    return r;
}

Poly::Poly(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Poly Poly::variable() {
    return monomial(1);
}

Poly Poly::monomial(int k, const Rat& c) {
    if (c == 0) return Poly();
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
    v.back() = c;
    return Poly(std::move(v));
}

const Rat& Poly::operator[](int k) const {
    static const Rat zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(k)];
}

Rat Poly::leading() const {
    return c_.empty() ? Rat(0) : c_.back();
}

Rat Poly::constant_term() const {
    return c_.empty() ? Rat(0) : c_.front();
}

Rat Poly::eval(const Rat& v) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rat(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::shifted_arg(long d) const {
    if (d == 0 || is_zero()) return *this;
    // Horner in (x + d).
    Poly shift = Poly::variable() + Poly(Rat(d));
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * shift + Poly(*it);
    return acc;
}

Poly Poly::pow(unsigned e) const {
    Poly acc(1);
    Poly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly operator*(const Rat& s, Poly a) {
    if (s == 0) return Poly();
    for (auto& c : a.c_) c *= s;
    return a;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const Rat& c = (*this)[k];
        if (c == 0) continue;
        Rat mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << rat_str(mag);
        } else {
            if (mag != 1) out << rat_str(mag) << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly(), rem};
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int k = rem.degree() - b.degree();
        Rat c = rem.leading() / b.leading();
        q[static_cast<std::size_t>(k)] = c;
        rem -= Poly::monomial(k, c) * b;
    }
    return {Poly(std::move(q)), rem};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw Error("polynomial division left a remainder");
    return q;
}

Poly poly_gcd_primitive(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw Error("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    return (1 / x.leading()) * x; // monic
}

const Int& stirling2(unsigned n, unsigned k) {
    static std::map<std::pair<unsigned, unsigned>, Int> table;
    static const Int zero(0), one(1);
    if (k > n) return zero;
    if (n == 0) return one; // S2(0,0) = 1
    if (k == 0) return zero;
    auto it = table.find({n, k});
    if (it != table.end()) return it->second;
    Int value = stirling2(n - 1, k - 1) + Int(k) * stirling2(n - 1, k);
    return table.emplace(std::pair<unsigned, unsigned>{n, k}, value).first->second;
}

std::vector<Rat> power_to_falling(const Poly& poly_in_n) {
    if (poly_in_n.is_zero()) return {};
    std::vector<Rat> s(static_cast<std::size_t>(poly_in_n.degree()) + 1, Rat(0));
    for (int t = 0; t <= poly_in_n.degree(); ++t) {
        const Rat& c = poly_in_n[t];
        if (c == 0) continue;
        if (t == 0) {
            s[0] += c;
            continue;
        }
        for (unsigned m = 1; m <= static_cast<unsigned>(t); ++m)
            s[m] += c * Rat(stirling2(static_cast<unsigned>(t), m));
    }
    while (!s.empty() && s.back() == 0) s.pop_back();
    return s;
}

Poly falling_to_power(const std::vector<Rat>& s) {
    Poly result;
    Poly ff(1);
    Poly n = Poly::variable();
    for (std::size_t m = 0; m < s.size(); ++m) {
        if (m > 0) ff = ff * (n - Poly(Rat(static_cast<long>(m) - 1)));
        result += s[m] * ff;
    }
    return result;
}

Poly falling_factorial_poly(long shift, unsigned k) {
    Poly base = Poly::variable() - Poly(Rat(shift));
    Poly acc(1);
    for (unsigned i = 0; i < k; ++i) acc = acc * (base - Poly(Rat(static_cast<long>(i))));
    return acc;
}

Rat make_joint_primitive(std::vector<Poly*> polys) {
    Int den_lcm(1), num_gcd(0);
    for (const Poly* p : polys)
        for (const Rat& c : p->coeffs())
            if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const Poly* p : polys)
        for (const Rat& c : p->coeffs()) {
            if (c == 0) continue;
            Int n = c.get_num() * (den_lcm / c.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
    if (num_gcd == 0) return Rat(1); // all zero
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (Poly* p : polys) *p = scale * (*p);
    return scale;
}

} // namespace holorec
