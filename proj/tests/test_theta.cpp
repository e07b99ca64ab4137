#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qmlab/theta.hpp"

#include <random>

using namespace qm;

namespace {

SiegelPoint diag_tau(Cplx a, Cplx b)
{
    SiegelPoint t;
    t << a, 0.0, 0.0, b;
    return t;
}

double rel(Cplx a, Cplx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

} // namespace

TEST_CASE("box sums converge")
{
    SiegelPoint tau = diag_tau({0, 3}, {0, 3});
    Cplx small = theta_box_sum_serial({0, 0}, tau, 2);
    Cplx big = theta_box_sum_serial({0, 0}, tau, 6);
    CHECK(rel(small, big) < 1e-14);
    auto v = theta_null(std::array<double, 2>{0, 0}, tau);
    CHECK(rel(v.value, big) < 1e-14);
    CHECK(v.radius <= theta_max_radius);
}

TEST_CASE("diagonal period matrices factor into one-variable thetas")
{
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.6, 2.0);
    for (int k = 0; k < 20; ++k) {
        Cplx t1(re(rng), im(rng)), t2(re(rng), im(rng));
        SiegelPoint tau = diag_tau(t1, t2);
        for (int c = 0; c < 8; ++c) {
            ThetaChar ch = theta_char(c);
            auto l = ch.value();
            Cplx expected = oracle::theta1(l[0], t1) * oracle::theta1(l[1], t2);
            CHECK(rel(theta_null(ch, tau).value, expected) < 1e-11);
        }
    }
}

TEST_CASE("theta-nulls are even in the characteristic")
{
    std::mt19937_64 rng(7);
    for (int k = 0; k < 10; ++k) {
        SiegelPoint tau = random_siegel_point(rng);
        for (int c = 0; c < 8; ++c) {
            auto l = theta_char(c).value();
            Cplx plus = theta_null(l, tau).value;
            Cplx minus = theta_null(std::array<double, 2>{-l[0], -l[1]}, tau).value;
            CHECK(rel(minus, plus) < 1e-12);
        }
    }
}

TEST_CASE("doubling the radius does not change converged values")
{
    std::mt19937_64 rng(8);
    SiegelPoint tau = random_siegel_point(rng);
    for (int c = 0; c < 8; ++c) {
        auto l = theta_char(c).value();
        auto v = theta_null(l, tau);
        Cplx twice = theta_box_sum_serial(l, tau, 2 * v.radius);
        CHECK(rel(v.value, twice) < 1e-12);
    }
}

TEST_CASE("Barth coordinates satisfy the Kummer quadrics")
{
    std::mt19937_64 rng(9);
    for (int k = 0; k < 50; ++k) {
        SiegelPoint tau = random_siegel_point(rng);
        auto x = psi_D(tau);
        // odd coordinates vanish
        CHECK(std::abs(x[6]) < 1e-12 * norm_of(even_part(x)));
        CHECK(std::abs(x[7]) < 1e-12 * norm_of(even_part(x)));
        auto e = even_part(x);
        CHECK(relative_residual(barth_f1(), e) < 1e-10);
        CHECK(relative_residual(barth_f2(), e) < 1e-10);
    }
}

TEST_CASE("relative residual is scale invariant")
{
    std::mt19937_64 rng(10);
    auto e = even_part(psi_D(random_siegel_point(rng)));
    e[0] += 0.25;
    double r = relative_residual(barth_f1(), e);
    CHECK(r > 1e-6);
    CPoint scaled = e;
    for (auto& v : scaled) v *= Cplx(3.0, -2.0);
    CHECK(std::abs(relative_residual(barth_f1(), scaled) - r) < 1e-10 * r);
}

TEST_CASE("fixed-locus points land on a translate of the Shimura line")
{
    auto a = qm_locate({0, 1});
    auto b = qm_locate({0.5, 1});
    CHECK(a.residual < 1e-10);
    CHECK(b.residual < 1e-10);
    CHECK(a.best == b.best);
    // a generic period matrix is not on any translate
    std::mt19937_64 rng(11);
    auto r = locate_on_line(even_part(psi_D(random_siegel_point(rng))));
    CHECK(r.residual > 1e-3);
    CHECK_THROWS_AS(qm_locate({0, 1}, 1e-30), qm_locate_failure);
}

TEST_CASE("translations act through Heisenberg lifts")
{
    std::mt19937_64 rng(12);
    SiegelPoint tau = random_siegel_point(rng);
    auto a = shift_lift(tau, Eigen::Matrix2d{{4, 0}, {0, 0}});
    CHECK(a.residual < 1e-10);
    CHECK(a.best == T24{0, 0, 1, 0});
    auto b = shift_lift(tau, Eigen::Matrix2d{{0, 0}, {0, 16}});
    CHECK(b.residual < 1e-10);
    CHECK(b.best == T24{0, 0, 0, 2});
    auto c = shift_lift(tau, Eigen::Matrix2d{{8, 0}, {0, 0}});
    CHECK(c.residual < 1e-10);
    CHECK(c.best == T24{});
}

TEST_CASE("OpenMP kernels match the serial reference")
{
    std::mt19937_64 rng(13);
    for (int k = 0; k < 5; ++k) {
        SiegelPoint tau = random_siegel_point(rng);
        for (int c = 0; c < 8; ++c) {
            auto l = theta_char(c).value();
            CHECK(rel(theta_box_sum_omp(l, tau, 12), theta_box_sum_serial(l, tau, 12)) < 1e-13);
        }
    }
    std::vector<SiegelPoint> taus;
    for (int k = 0; k < 16; ++k) taus.push_back(random_siegel_point(rng));
    auto p = psi_D_batch(taus), s = psi_D_batch_serial(taus);
    REQUIRE(p.size() == s.size());
    for (size_t k = 0; k < p.size(); ++k)
        for (int i = 0; i < 8; ++i) CHECK(p[k][i] == s[k][i]);
    SiegelPoint bad = diag_tau({0, -1}, {0, 1});
    CHECK_THROWS(psi_D_batch({taus[0], bad}));
}
