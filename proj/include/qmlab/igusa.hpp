#pragma once

#include "qmlab/quotient_ext.hpp"
#include "qmlab/ratfunc.hpp"
#include "qmlab/rational.hpp"

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace qm {

// Binary form sum c[k] x^(n-k) y^k, dense, n = size - 1.
template <class K>
using BinForm = std::vector<K>;

template <class K>
using Sextic = std::array<K, 7>;

template <class K>
struct IgusaSet {
    K A, B, C, D;
};

template <class K>
struct AbsInv {
    K j1, j2, j3;
};

struct degenerate_sextic : std::domain_error {
    using std::domain_error::domain_error;
};

inline bool is_zero(const std::complex<double>& z) { return z == 0.0; }
inline std::complex<double> inverse(const std::complex<double>& z) { return 1.0 / z; }

template <class K>
K qconst(const Rational& q)
{
    if constexpr (std::is_same_v<K, std::complex<double>>) return q.get_d();
    else return K(q);
}

namespace detail {

inline long falling(long n, long k)
{
    long r = 1;
    for (long t = 0; t < k; ++t) r *= (n - t);
    return r;
}

inline long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline long binom(long n, long k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// d^h / dx^(h-j) dy^j
template <class K>
BinForm<K> partial(const BinForm<K>& f, int hx, int hy)
{
    int n = int(f.size()) - 1;
    BinForm<K> out(std::max(0, n - hx - hy) + 1, K(0));
    if (n - hx - hy < 0) return out;
    for (int k = 0; k <= n; ++k) {
        int ex = n - k, ey = k;
        if (ex < hx || ey < hy || is_zero(f[k])) continue;
        out[k - hy] += f[k] * K(falling(ex, hx) * falling(ey, hy));
    }
    return out;
}

template <class K>
BinForm<K> mul(const BinForm<K>& a, const BinForm<K>& b)
{
    BinForm<K> r(a.size() + b.size() - 1, K(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!is_zero(b[j])) r[i + j] += a[i] * b[j];
    }
    return r;
}

} // namespace detail

// (f, g)_h with the normalization (m-h)!(n-h)!/(m! n!).
template <class K>
BinForm<K> transvectant(const BinForm<K>& f, const BinForm<K>& g, int h)
{
    int m = int(f.size()) - 1, n = int(g.size()) - 1;
    if (h > m || h > n) throw std::invalid_argument("transvectant order exceeds a degree");
    BinForm<K> acc(m + n - 2 * h + 1, K(0));
    for (int j = 0; j <= h; ++j) {
        auto t = detail::mul(detail::partial(f, h - j, j), detail::partial(g, j, h - j));
        long c = detail::binom(h, j) * (j % 2 ? -1 : 1);
        for (size_t k = 0; k < t.size(); ++k)
            if (!is_zero(t[k])) acc[k] += t[k] * K(c);
    }
    Rational norm(detail::factorial(m - h) * detail::factorial(n - h), detail::factorial(m) * detail::factorial(n));
    norm.canonicalize();
    K kn = qconst<K>(norm);
    for (auto& v : acc) v *= kn;
    return acc;
}

// Clebsch invariants (A, B, C, D) of weights 2, 4, 6, 10.
template <class K>
IgusaSet<K> clebsch_invariants(const Sextic<K>& a)
{
    BinForm<K> f(a.begin(), a.end());
    auto i = transvectant(f, f, 4);
    auto delta = transvectant(i, i, 2);
    auto y1 = transvectant(f, i, 4);
    auto y2 = transvectant(i, y1, 2);
    auto y3 = transvectant(i, y2, 2);
    return {transvectant(f, f, 6)[0], transvectant(i, i, 4)[0], transvectant(i, delta, 4)[0],
            transvectant(y3, y1, 2)[0]};
}

// Igusa-Clebsch invariants I2, I4, I6, I10, used as (A, B, C, D).
template <class K>
IgusaSet<K> igusa_ABCD(const Sextic<K>& a)
{
    bool all_zero = true;
    for (auto& v : a) all_zero = all_zero && is_zero(v);
    if (all_zero) throw std::invalid_argument("igusa_ABCD: zero sextic");
    auto c = clebsch_invariants(a);
    const K &A = c.A, &B = c.B, &C = c.C, &D = c.D;
    K A2 = A * A, A3 = A2 * A, A5 = A3 * A2;
    IgusaSet<K> r;
    r.A = A * K(-120);
    r.B = A2 * K(-720) + B * K(6750);
    r.C = A3 * K(8640) - A * B * K(108000) + C * K(202500);
    r.D = A5 * K(-62208) + A3 * B * K(972000) + A2 * C * K(1620000) - A * B * B * K(3037500) -
          B * C * K(6075000) - D * K(4556250);
    return r;
}

template <class K>
AbsInv<K> j_set(const IgusaSet<K>& s)
{
    if (is_zero(s.D)) throw degenerate_sextic("degenerate sextic (repeated root)");
    K Di = inverse(s.D);
    K A2 = s.A * s.A, A3 = A2 * s.A;
    return {A3 * A2 * Di, A3 * s.B * Di, A2 * s.C * Di};
}

template <class K>
bool operator==(const AbsInv<K>& x, const AbsInv<K>& y)
{
    return x.j1 == y.j1 && x.j2 == y.j2 && x.j3 == y.j3;
}

struct outside_chart : std::domain_error {
    using std::domain_error::domain_error;
};

template <class K>
bool iso_test(const Sextic<K>& f, const Sextic<K>& g)
{
    auto a = igusa_ABCD(f), b = igusa_ABCD(g);
    if (is_zero(a.A) || is_zero(b.A)) throw outside_chart("outside the A != 0 chart; inconclusive");
    return j_set(a) == j_set(b);
}

// f(p x + q y, r x + s y) for an integral substitution.
template <class K>
Sextic<K> substitute_sextic(const Sextic<K>& a, const std::array<long, 4>& m)
{
    BinForm<K> lx{K(m[0]), K(m[1])}, ly{K(m[2]), K(m[3])};
    BinForm<K> acc(7, K(0));
    for (int k = 0; k <= 6; ++k) {
        BinForm<K> t{a[k]};
        for (int e = 0; e < 6 - k; ++e) t = detail::mul(t, lx);
        for (int e = 0; e < k; ++e) t = detail::mul(t, ly);
        for (int i = 0; i < 7; ++i) acc[i] += t[i];
    }
    Sextic<K> out;
    for (int i = 0; i < 7; ++i) out[i] = acc[i];
    return out;
}

template <class K>
AbsInv<K> jx_formulas(const K& G)
{
    if (is_zero(G)) throw std::domain_error("product of elliptic curves; invariants infinite");
    K u = K(1) - G * K(64);
    K u2 = u * u, u3 = u2 * u, u5 = u3 * u2;
    K Gi = inverse(G), Gi2 = Gi * Gi, Gi3 = Gi2 * Gi;
    return {u5 * Gi3 * qconst<K>(Rational(-243, 32)), u3 * Gi2 * qconst<K>(Rational(243, 8)),
            u2 * (K(1) - G * K(80)) * Gi2 * qconst<K>(Rational(81, 8))};
}

template <class K>
K g_recovery(const K& j2, const K& j3)
{
    if (is_zero(j3)) throw std::domain_error("g_recovery: j3 = 0");
    K q = j2 * inverse(j3);
    K den = q * K(80) - K(192);
    if (is_zero(den)) throw std::domain_error("g_recovery: 80 j2/j3 = 192");
    K G = (q - K(3)) * inverse(den);
    if (is_zero(G)) throw std::domain_error("g_recovery: G = 0 (product of elliptic curves)");
    return G;
}

template <class K>
K H_of_t(const K& t)
{
    K a = K(1) - t * K(2), b = K(1) + t * K(2);
    K ab = a * b;
    if (is_zero(ab)) throw std::domain_error("H(t) has a pole at t = +-1/2");
    K tm = t - K(1), tp = t + K(1), h = t * t + qconst<K>(Rational(1, 2));
    K h2 = h * h;
    return K(4) * tm * tm * tp * tp * h2 * h2 * inverse(K(27) * ab * ab * ab);
}

// Coefficients P, Q, R of x(x^4 - P x^3 + Q x^2 - R x + 1).
template <class K>
struct HMCoeffs {
    K P, Q, R;
};

template <class K>
HMCoeffs<K> hm_coefficients(const K& t, const K& s)
{
    K t2 = t * t;
    K rel = K(4) * s * s * t2 - s * s + t2 + K(2);
    if (!is_zero(rel)) throw std::domain_error("hm_curve: (t, s) is not on 4s^2t^2 - s^2 + t^2 + 2 = 0");
    K den = K(3) * (K(1) - t2) * (K(1) - K(4) * t2);
    if (is_zero(den)) throw std::domain_error("hm_curve: t in {+-1, +-1/2}");
    HMCoeffs<K> c;
    c.P = K(-2) * (s + t);
    c.R = K(-2) * (s - t);
    c.Q = (K(1) + K(2) * t2) * (K(11) - K(28) * t2 + K(8) * t2 * t2) * inverse(den);
    return c;
}

// x y (x^4 - P x^3 y + Q x^2 y^2 - R x y^3 + y^4)
template <class K>
Sextic<K> hm_curve(const K& t, const K& s)
{
    auto c = hm_coefficients(t, s);
    return {K(0), K(1), -c.P, c.Q, -c.R, K(1), K(0)};
}

using QtExt = QuotientExt<RatFunc>;
using QrExt = QuotientExt<Rational>;

// (t^2 + 2)/(1 - 4 t^2)
RatFunc hm_relation();
// HM point over Q(t)[s] / (s^2 - hm_relation()).
std::pair<QtExt, QtExt> generic_hm_point();
// HM point at a rational t with s = sqrt((t^2+2)/(1-4t^2)) adjoined.
std::pair<QrExt, QrExt> hm_point_at(const Rational& t);

struct IsocReport {
    bool s_free = true;
    bool matches = true;
    bool anchor = true;
    int classifying_degree = 0;
    std::string detail;
    AbsInv<RatFunc> j;
};
IsocReport verify_isoc();

// g_recovery(jx_formulas(G)) = G in Q(G).
bool verify_g_recovery();

// E.E'' from E.E = 2 and E.eta*E = E.eta^2*E = 5.
long polarization_intersection();

} // namespace qm
