#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmlab/igusa.hpp"
#include "qmlab/oracle.hpp"

#include <functional>
#include <random>

using namespace qm;

namespace {

using C = std::complex<double>;

bool rel_close(C a, C b, double tol)
{
    return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// coefficients of prod (x - r_i y), highest power of x first
Sextic<Rational> from_roots(const std::array<long, 6>& r)
{
    std::vector<Rational> c{Rational(1)};
    for (long root : r) {
        std::vector<Rational> n(c.size() + 1, Rational(0));
        for (size_t k = 0; k < c.size(); ++k) {
            n[k] += c[k];
            n[k + 1] -= c[k] * Rational(root);
        }
        c = n;
    }
    Sextic<Rational> s;
    for (int k = 0; k < 7; ++k) s[k] = c[k];
    return s;
}

// sum over the 15 perfect matchings of prod (r_i - r_j)^2
Rational matching_sum(const std::array<long, 6>& r)
{
    std::function<Rational(std::vector<int>)> go = [&](std::vector<int> left) -> Rational {
        if (left.empty()) return Rational(1);
        Rational s = 0;
        int a = left[0];
        for (size_t k = 1; k < left.size(); ++k) {
            std::vector<int> rest;
            for (size_t m = 1; m < left.size(); ++m)
                if (m != k) rest.push_back(left[m]);
            long d = r[a] - r[left[k]];
            s += Rational(d * d) * go(rest);
        }
        return s;
    };
    return go({0, 1, 2, 3, 4, 5});
}

Sextic<Rational> random_sextic(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> u(-6, 6);
    Sextic<Rational> s;
    for (auto& v : s) v = u(rng);
    if (is_zero(s[0])) s[0] = 1;
    return s;
}

std::array<C, 7> to_c(const Sextic<Rational>& s)
{
    std::array<C, 7> c;
    for (int k = 0; k < 7; ++k) c[k] = s[k].get_d();
    return c;
}

} // namespace

TEST_CASE("invariants agree exactly with root formulas for split sextics")
{
    for (auto r : {std::array<long, 6>{-2, -1, 0, 1, 2, 3}, std::array<long, 6>{-5, -3, 1, 4, 6, 9}}) {
        auto s = igusa_ABCD(from_roots(r));
        CHECK(s.A == matching_sum(r));
        Rational disc = 1;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) disc *= Rational((r[i] - r[j]) * (r[i] - r[j]));
        CHECK(s.D == disc);
    }
}

TEST_CASE("invariants agree with the root oracle on random sextics")
{
    std::mt19937_64 rng(20);
    int compared = 0;
    for (int k = 0; k < 100; ++k) {
        auto f = random_sextic(rng);
        auto exact = igusa_ABCD(f);
        if (is_zero(exact.D)) continue;
        auto o = root_oracle(to_c(f));
        CHECK(rel_close(exact.A.get_d(), o.A, 1e-8));
        CHECK(rel_close(exact.B.get_d(), o.B, 1e-8));
        CHECK(rel_close(exact.C.get_d(), o.C, 1e-8));
        CHECK(rel_close(exact.D.get_d(), o.D, 1e-8));
        ++compared;
    }
    CHECK(compared > 90);
    std::array<C, 7> z{};
    CHECK_THROWS(root_oracle(z));
}

TEST_CASE("special sextics")
{
    Sextic<Rational> f{0, 1, 0, 0, 0, -1, 0}; // x^5 y - x y^5
    CHECK_FALSE(is_zero(igusa_ABCD(f).D));
    Sextic<Rational> rep = from_roots({0, 0, 1, 2, 3, 4});
    CHECK(is_zero(igusa_ABCD(rep).D));
    CHECK_THROWS_AS(j_set(igusa_ABCD(rep)), degenerate_sextic);
    CHECK_THROWS(igusa_ABCD(Sextic<Rational>{}));
    auto j = j_set(IgusaSet<Rational>{1, 1, 1, 1});
    CHECK(j.j1 == 1);
    CHECK(j.j2 == 1);
    CHECK(j.j3 == 1);
}

TEST_CASE("absolute invariants are GL2 invariant")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> u(-3, 3);
    int tested = 0;
    for (int k = 0; k < 60 && tested < 30; ++k) {
        auto f = random_sextic(rng);
        auto s = igusa_ABCD(f);
        if (is_zero(s.D) || is_zero(s.A)) continue;
        std::array<long, 4> m{u(rng), u(rng), u(rng), u(rng)};
        if (m[0] * m[3] - m[1] * m[2] == 0) continue;
        auto g = substitute_sextic(f, m);
        CHECK(j_set(igusa_ABCD(g)) == j_set(s));
        CHECK(iso_test(f, g));
        ++tested;
    }
    CHECK(tested == 30);
    Sextic<Rational> f{1, 2, 0, -1, 3, 0, 1};
    CHECK(iso_test(f, substitute_sextic(f, {1, 1, 0, 1})));
    CHECK(iso_test(f, substitute_sextic(f, {2, 0, 0, 1})));
    CHECK_FALSE(iso_test(f, Sextic<Rational>{0, 1, 0, 0, 0, -1, 0}));
}

TEST_CASE("weights of the invariants")
{
    Sextic<Rational> f{1, 2, 0, -1, 3, 0, 1};
    auto a = igusa_ABCD(f);
    auto b = igusa_ABCD(substitute_sextic(f, {2, 0, 0, 1}));
    // x -> 2x scales by 2^(3 w) for weight w = 2, 4, 6, 10
    CHECK(b.A == a.A * Rational(1 << 6));
    CHECK(b.B == a.B * Rational(1 << 12));
    CHECK(b.C == a.C * Rational(1 << 18));
    CHECK(b.D == a.D * Rational(1L << 30));
}

TEST_CASE("iso test outside its chart")
{
    Sextic<Rational> f{0, 1, 0, 0, 0, -1, 0};
    if (is_zero(igusa_ABCD(f).A)) CHECK_THROWS_AS(iso_test(f, f), outside_chart);
    else CHECK(iso_test(f, f));
}

TEST_CASE("Hashimoto-Murabayashi family")
{
    auto c = hm_coefficients(QrExt(0), hm_point_at(Rational(0)).second);
    auto [t0, s0] = hm_point_at(Rational(0));
    CHECK(s0 * s0 == QrExt(2));
    CHECK(c.P == s0 * QrExt(-2));
    // R = -2(s - t), so at t = 0 it equals P
    CHECK(c.R == s0 * QrExt(-2));
    CHECK(c.Q == QrExt(Rational(11, 3)));
    CHECK(c.P + c.R == s0 * QrExt(-4));
    CHECK_THROWS(hm_coefficients(Rational(0), Rational(1)));
    CHECK_THROWS(hm_point_at(Rational(1, 2)));
    auto f = hm_curve(t0, s0);
    CHECK(is_zero(f[0]));
    CHECK(f[1] == QrExt(1));
}

TEST_CASE("H(t)")
{
    CHECK(H_of_t(Rational(0)) == Rational(1, 108));
    CHECK(H_of_t(Rational(1)) == 0);
    CHECK(H_of_t(Rational(-1)) == 0);
    for (long n = 1; n < 20; ++n) CHECK(H_of_t(Rational(n, 7)) == H_of_t(Rational(-n, 7)));
    CHECK_THROWS(H_of_t(Rational(1, 2)));
    CHECK_THROWS(H_of_t(Rational(-1, 2)));
}

TEST_CASE("jx formulas and G recovery")
{
    auto j = jx_formulas(Rational(1, 64));
    CHECK(j.j1 == 0);
    CHECK(j.j2 == 0);
    CHECK(j.j3 == 0);
    auto a = jx_formulas(Rational(1, 108));
    CHECK(a.j2 / a.j3 == Rational(33, 7));
    CHECK(g_recovery(a.j2, a.j3) == Rational(1, 108));
    CHECK_THROWS(jx_formulas(Rational(0)));
    CHECK_THROWS(g_recovery(Rational(3), Rational(1)));
    CHECK_THROWS(g_recovery(Rational(1), Rational(0)));
    for (long n = 1; n < 30; ++n) {
        Rational G(n, 1000);
        G.canonicalize();
        auto jj = jx_formulas(G);
        if (is_zero(jj.j3)) continue;
        CHECK(g_recovery(jj.j2, jj.j3) == G);
    }
    CHECK(verify_g_recovery());
}

TEST_CASE("the HM family lies on the Shimura curve")
{
    auto rep = verify_isoc();
    CHECK(rep.s_free);
    CHECK(rep.matches);
    CHECK(rep.anchor);
    CHECK(rep.classifying_degree == 12);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> u(-40, 40);
    int n = 0;
    for (int k = 0; k < 40 && n < 20; ++k) {
        Rational t(u(rng), 13);
        t.canonicalize();
        Rational den = Rational(1) - Rational(4) * t * t;
        if (is_zero(den) || is_zero(Rational(1) - t * t)) continue;
        auto [tt, s] = hm_point_at(t);
        auto f = hm_curve(tt, s);
        auto inv = igusa_ABCD(f);
        if (is_zero(inv.D) || is_zero(inv.A)) continue;
        auto jh = jx_formulas(QrExt(H_of_t(t)));
        CHECK(j_set(inv) == jh);
        ++n;
    }
    CHECK(n == 20);
}

TEST_CASE("polarization intersection")
{
    CHECK(polarization_intersection() == 4);
}
