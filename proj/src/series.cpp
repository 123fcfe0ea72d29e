#include "holorec/series.hpp"

#include <algorithm>

namespace holorec {

namespace {
int common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}
} // namespace

const Rat& TruncatedSeries::at(int n) const {
    static const Rat zero(0);
    if (n < 0 || n >= static_cast<int>(c.size())) return zero;
    return c[static_cast<std::size_t>(n)];
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

TruncatedSeries series_from_poly(const Poly& p, int order) {
    TruncatedSeries s;
    s.c.assign(static_cast<std::size_t>(order) + 1, Rat(0));
    for (int k = 0; k <= std::min(order, p.degree()); ++k) s.c[static_cast<std::size_t>(k)] = p[k];
    return s;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = common_order(a, b);
    TruncatedSeries r;
    r.c.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) r.c[static_cast<std::size_t>(k)] = a.at(k) + b.at(k);
    return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = common_order(a, b);
    TruncatedSeries r;
    r.c.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) r.c[static_cast<std::size_t>(k)] = a.at(k) - b.at(k);
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = common_order(a, b);
    TruncatedSeries r;
    r.c.assign(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        if (a.at(i) == 0) continue;
        for (int j = 0; i + j <= n; ++j) r.c[static_cast<std::size_t>(i + j)] += a.at(i) * b.at(j);
    }
    return r;
}

TruncatedSeries series_scale(const Rat& s, const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.c.empty() || b.c[0] == 0) throw Error("series division by a series with zero constant term");
    int n = common_order(a, b);
    TruncatedSeries r;
    r.c.assign(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int k = 0; k <= n; ++k) {
        Rat acc = a.at(k);
        for (int j = 1; j <= k; ++j) acc -= b.at(j) * r.c[static_cast<std::size_t>(k - j)];
        r.c[static_cast<std::size_t>(k)] = acc / b.c[0];
    }
    return r;
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
    TruncatedSeries r;
    if (a.c.size() <= 1) {
        r.c.assign(1, Rat(0));
        return r;
    }
    r.c.resize(a.c.size() - 1);
    for (std::size_t k = 1; k < a.c.size(); ++k)
        r.c[k - 1] = Rat(static_cast<long>(k)) * a.c[k];
    return r;
}

TruncatedSeries series_shift_up(const TruncatedSeries& a, int k) {
    TruncatedSeries r;
    r.c.assign(a.c.size(), Rat(0));
    for (int i = 0; i + k <= a.order(); ++i) r.c[static_cast<std::size_t>(i + k)] = a.at(i);
    return r;
}

TruncatedSeries series_pow(const TruncatedSeries& a, const Rat& alpha) {
    if (a.c.empty() || a.c[0] != 1) throw Error("series_pow requires unit constant term");
    int n = a.order();
    TruncatedSeries g;
    g.c.assign(static_cast<std::size_t>(n) + 1, Rat(0));
    g.c[0] = 1;
    if (alpha == 0) return g;
    for (int k = 1; k <= n; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j) {
            Rat w = (alpha + 1) * Rat(j) - Rat(k);
            if (w != 0 && a.at(j) != 0) acc += w * a.at(j) * g.c[static_cast<std::size_t>(k - j)];
        }
        g.c[static_cast<std::size_t>(k)] = acc / Rat(k);
    }
    return g;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (!a.c.empty() && a.c[0] != 0) throw Error("series_exp requires zero constant term");
    int n = a.order();
    TruncatedSeries g;
    g.c.assign(static_cast<std::size_t>(std::max(n, 0)) + 1, Rat(0));
    g.c[0] = 1;
    // g' = a'*g  =>  n*g_n = sum_{k=1..n} k*a_k*g_{n-k}
    for (int k = 1; k <= n; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j)
            if (a.at(j) != 0) acc += Rat(j) * a.at(j) * g.c[static_cast<std::size_t>(k - j)];
        g.c[static_cast<std::size_t>(k)] = acc / Rat(k);
    }
    return g;
}

TruncatedSeries series_log(const TruncatedSeries& a) {
    if (a.c.empty() || a.c[0] != 1) throw Error("series_log requires unit constant term");
    int n = a.order();
    TruncatedSeries b;
    b.c.assign(static_cast<std::size_t>(n) + 1, Rat(0));
    // a' = a*b'  =>  n*a_n = sum_{k=1..n} k*b_k*a_{n-k}
    for (int k = 1; k <= n; ++k) {
        Rat acc = Rat(k) * a.at(k);
        for (int j = 1; j < k; ++j)
            if (b.c[static_cast<std::size_t>(j)] != 0)
                acc -= Rat(j) * b.c[static_cast<std::size_t>(j)] * a.at(k - j);
        b.c[static_cast<std::size_t>(k)] = acc / Rat(k);
    }
    return b;
}

} // namespace holorec
