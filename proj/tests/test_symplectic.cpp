#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmlab/symplectic.hpp"

#include <random>
#include <set>

using namespace qm;

namespace {

QMatrix qdiag(std::initializer_list<long> v)
{
    std::vector<Rational> d;
    for (long x : v) d.push_back(x);
    return QMatrix::diag(d);
}

SiegelPoint sample_tau(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1, 1);
    SiegelPoint t;
    t << Cplx(u(rng), 1.5 + u(rng) * 0.3), Cplx(u(rng) * 0.3, u(rng) * 0.2), 0, Cplx(u(rng), 1.8 + u(rng) * 0.3);
    t(1, 0) = t(0, 1);
    return t;
}

} // namespace

TEST_CASE("standard matrices")
{
    auto s3 = build_standard(3, 5);
    CHECK(s3.M(0, 0) == -1);
    CHECK(s3.M(0, 1) == 0);
    CHECK(s3.M(0, 2) == -1);
    CHECK(s3.M(0, 3) == 0);
    auto s4 = build_standard(4, 2);
    CHECK(s4.psi(0, 0) == 0);
    CHECK(s4.psi(0, 3) == -2);
    auto e1 = build_standard(3, 1).E;
    CHECK(e1 == QMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
    CHECK_THROWS(build_standard(5, 2));
    for (long d : {1, 2, 7}) {
        auto st = build_standard(3, d);
        CHECK(st.R * polarization_form(1) * st.R.transpose() == st.E);
        CHECK(is_alternating(st.E));
    }
}

TEST_CASE("form preservation")
{
    for (long d = 1; d <= 20; ++d) {
        CHECK(is_form_preserving(automorphism_matrix(3), polarization_form(d)));
        CHECK(is_form_preserving(automorphism_matrix(4), polarization_form(d)));
    }
    CHECK(is_form_preserving(QMatrix::identity(4), polarization_form(3)));
    CHECK_FALSE(is_form_preserving(qdiag({2, 1, 1, 1}), polarization_form(1)));
    QMatrix M4 = automorphism_matrix(4);
    CHECK(M4.pow(4) == QMatrix::identity(4));
}

TEST_CASE("quaternion relations for random d up to 100")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> u(1, 100);
    QMatrix id = QMatrix::identity(4);
    for (int k = 0; k < 25; ++k) {
        long d = u(rng);
        auto s3 = build_standard(3, d), s4 = build_standard(4, d);
        QMatrix w = id + s3.M * Rational(2);
        CHECK(w * w == id * Rational(-3));
        CHECK(w * s3.psi == -(s3.psi * w));
        CHECK(s4.M * s4.psi == -(s4.psi * s4.M));
        CHECK(s3.psi * s3.psi == id * Rational(d));
        CHECK(s4.psi * s4.psi == id * Rational(d));
    }
}

TEST_CASE("star action")
{
    std::mt19937_64 rng(9);
    SiegelPoint tau = sample_tau(rng);
    CHECK((star_action(QMatrix::identity(4), tau, 2) - tau).norm() < 1e-12);
    auto M = automorphism_matrix(3);
    CHECK((star_action(M, tau, 2) - tau).norm() > 1e-3);
    // group action: (M N) * tau = M * (N * tau)
    auto N = automorphism_matrix(3).pow(2);
    for (int k = 0; k < 10; ++k) {
        tau = sample_tau(rng);
        auto lhs = star_action(M * N, tau, 2);
        auto rhs = star_action(N, star_action(M, tau, 2), 2);
        auto rhs2 = star_action(M, star_action(N, tau, 2), 2);
        // row-vector convention: one of the two orders must agree; M and N commute here
        CHECK((lhs - rhs).norm() < 1e-8);
        CHECK((lhs - rhs2).norm() < 1e-8);
    }
    SiegelPoint bad;
    bad << Cplx(0, 1), 0.5, 0.0, Cplx(0, 1);
    CHECK_THROWS(validate_siegel(bad));
}

TEST_CASE("star action composes for non-commuting elements")
{
    std::mt19937_64 rng(21);
    auto A = automorphism_matrix(4);
    auto B = build_standard(4, 1).psi; // psi_4 for d = 1 is an automorphism of E_1
    REQUIRE(is_form_preserving(B, polarization_form(1)));
    REQUIRE(A * B != B * A);
    for (int k = 0; k < 10; ++k) {
        SiegelPoint tau = sample_tau(rng);
        auto lhs = star_action(A * B, tau, 1);
        auto seq = star_action(B, star_action(A, tau, 1), 1);
        auto seq2 = star_action(A, star_action(B, tau, 1), 1);
        CHECK(std::min((lhs - seq).norm(), (lhs - seq2).norm()) < 1e-8);
    }
}

TEST_CASE("normal forms")
{
    QMatrix m3p{{0, 1, 0, 0}, {-1, -1, 0, 0}, {0, 0, -1, 1}, {0, 0, -1, 0}};
    CHECK(normal_form(3) == m3p);
    for (int j : {3, 4})
        for (long d = 1; d <= 20; ++d) {
            RMatrix c = conjugated_normal_form(j, d);
            QMatrix n = normal_form(j);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) CHECK(c(a, b) == QuadExt(n(a, b)));
            RMatrix S = s_matrix(j, d);
            RMatrix E1 = polarization_form(1).map([](const Rational& v) { return QuadExt(v); });
            CHECK(S * E1 * S.transpose() == E1);
        }
}

TEST_CASE("fixed loci")
{
    CHECK(fixed_residual(3, 2, fixed_locus_point(3, 2, Cplx(0, 1))) < 1e-9);
    CHECK(fixed_residual(4, 2, fixed_locus_point(4, 2, Cplx(0, 2))) < 1e-9);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> re(-3, 3), im(0.1, 4);
    for (int k = 0; k < 100; ++k) {
        Cplx z(re(rng), im(rng));
        for (int j : {3, 4})
            for (long d : {2L, 3L, 7L}) {
                auto tau = fixed_locus_point(j, d, z);
                CHECK(std::abs(tau(0, 1) - tau(1, 0)) < 1e-12 * tau.norm());
                CHECK(fixed_residual(j, d, tau) < 1e-9);
            }
    }
    CHECK_THROWS(fixed_locus_point(3, 2, Cplx(0, -1)));
}

TEST_CASE("NS-perp lattices and psi")
{
    QMatrix id = QMatrix::identity(6);
    for (int j : {3, 4}) {
        auto basis = ns_perp_basis(j);
        REQUIRE(basis.size() == 2);
        QMatrix T = pullback_on_forms(automorphism_matrix(j));
        QMatrix poly = j == 3 ? T * T + T + id : T + id;
        for (auto& F : basis) {
            CHECK(is_alternating(F));
            auto v = alternating_coords(F);
            for (auto& x : poly.apply(v)) CHECK(is_zero(x));
            CHECK(alternating_from_coords(v) == F);
        }
        for (long d = 1; d <= 20; ++d) {
            auto p = lattice_psi(j, d);
            REQUIRE(p.has_value());
            CHECK(*p == psi_matrix(j, d));
        }
    }
    auto E = polarization_form(2);
    CHECK(derive_endomorphism(E, E) == QMatrix::identity(4));
}

TEST_CASE("integer kernel is saturated")
{
    QMatrix a{{2, 4, 0}, {0, 0, 0}};
    auto k = integer_kernel(a);
    REQUIRE(k.size() == 2);
    // (2, -1, 0) and (0, 0, 1) up to unimodular change: gcd of entries of each row is 1
    for (auto& v : k) {
        Integer g = 0;
        for (auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        CHECK(g == 1);
    }
}

TEST_CASE("level membership")
{
    auto r = level_membership(QMatrix::identity(4));
    CHECK(r.level == Level::gamma_d_D_0);
    CHECK(r.phi == std::array<int, 4>{0, 0, 0, 0});
    // beta block D = diag(2, 4)
    QMatrix m = QMatrix::identity(4);
    m(0, 2) = 2;
    m(1, 3) = 4;
    auto r2 = level_membership(m);
    CHECK(r2.level == Level::gamma_d_D);
    CHECK(r2.phi == std::array<int, 4>{1, 1, 0, 0});
    for (auto& g : t24_generators()) {
        CHECK(level_membership(g).level == Level::gamma_d_only);
        CHECK(preserves_pairing(t24_permutation(g)));
    }
    CHECK(level_membership(qdiag({2, 1, 1, 1})).level == Level::not_in_gamma_d);
}

TEST_CASE("T(2,4) and group order")
{
    std::set<int> seen;
    for (int k = 0; k < 64; ++k) {
        T24 g = T24::from_index(k);
        CHECK(g.index() == k);
        seen.insert(g.index());
        CHECK(t24_pairing(g, g) == 0);
        for (int l = 0; l < 64; l += 7) {
            T24 h = T24::from_index(l);
            CHECK((t24_pairing(g, h) + t24_pairing(h, g)) % 4 == 0);
        }
    }
    CHECK(seen.size() == 64);
    CHECK(sp_t24_order() == 4608);
    Perm64 id;
    for (int k = 0; k < 64; ++k) id[k] = uint8_t(k);
    CHECK(permutation_group_order({id}) == 1);
}
