#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmlab/kummer.hpp"

#include <random>

using namespace qm;

namespace {

const Zeta8 one(1);

ZPoint all_ones() { return ZPoint(6, one); }

ZPoint random_point(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> u(-5, 5);
    ZPoint p(6);
    for (auto& c : p) c = Zeta8(u(rng), u(rng), u(rng), u(rng));
    return p;
}

CPoint to_c(const ZPoint& p)
{
    CPoint c;
    for (auto& v : p) c.push_back(v.to_complex());
    return c;
}

} // namespace

TEST_CASE("barth quadrics")
{
    auto q = barth_quadrics(all_ones());
    // q2 vanishes identically at the all-ones moduli point
    CHECK(q[1].zero());
    CHECK_FALSE(q[0].zero());
    CHECK_FALSE(q[2].zero());
    for (auto& f : q) CHECK(f.degree() == 2);
}

TEST_CASE("node lifts")
{
    ZPoint x{Zeta8(1), Zeta8(2), Zeta8(3), Zeta8(4), Zeta8(5), Zeta8(6)};
    // sigma1 swaps the coordinate pairs
    auto p1000 = node_lift(1).apply(x);
    CHECK(p1000 == ZPoint{x[1], x[0], x[3], x[2], x[5], x[4]});
    CHECK(node_lift(0) == ZMatrix::identity(6));
    CHECK(node_lift(1, 0, 0, 0) == node_lift(1));
    auto ns = nodes(x);
    CHECK(ns.size() == 16);
    CHECK(six_node_indices() == std::array<int, 6>{0, 15, 7, 6, 2, 12});
}

TEST_CASE("nodes lie on the Kummer surface of the QM line")
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> u(-4, 4);
    for (int k = 0; k < 10; ++k) {
        Zeta8 a(u(rng), u(rng), 0, 0), b(u(rng), 0, u(rng), 0);
        if (is_zero(a) && is_zero(b)) continue;
        ZPoint x = qm_point(a, b);
        for (auto& n : nodes(x)) {
            CHECK(is_zero(barth_f1().eval(n)));
            CHECK(is_zero(barth_f2().eval(n)));
        }
    }
}

TEST_CASE("Humbert determinant")
{
    ZPoly F = humbert_F_poly();
    CHECK(F.terms().size() == 8);
    CHECK(F.degree() == 6);
    CHECK(is_zero(humbert_F(ZPoint{one, 0, 0, 0, 0, 0})));
    std::mt19937_64 rng(8);
    for (int k = 0; k < 20; ++k) {
        ZPoint x = random_point(rng);
        CHECK(humbert_F(x) == F.eval(x));
    }
    // degenerate point: all six nodes collapse
    CHECK(span_rank(six_nodes(ZPoint{one, 0, 0, 0, 0, 0})) <= 2);
}

TEST_CASE("six nodes on the QM line")
{
    auto r = six_node_rank_on_line();
    CHECK(r.det_zero);
    CHECK(r.rank == 5);
    CHECK(r.minor_row >= 0);
    // numerically the rank is still 6 at points off the line
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        ZPoint x = random_point(rng);
        CHECK(span_rank_numeric(nodes(to_c(x))) >= 5);
    }
}

TEST_CASE("six-node rank is invariant under rescaling")
{
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> u(1, 5);
    for (int k = 0; k < 20; ++k) {
        ZPoint x = random_point(rng);
        int base = span_rank(six_nodes(x));
        Zeta8 c(u(rng), u(rng), 0, 0);
        ZPoint y = x;
        for (auto& v : y) v *= c;
        CHECK(span_rank(six_nodes(y)) == base);
    }
}

TEST_CASE("S2 quadrics")
{
    auto r = s2_residuals(ZPoint{one, one, one, one, 0, 0});
    for (auto& v : r) CHECK(is_zero(v));
    auto r2 = s2_residuals(ZPoint{one, 0, 0, 0, 0, 0});
    CHECK(r2 == std::array<Zeta8, 3>{one, 0, 0});
    for (int b = 0; b < 4; ++b) {
        auto p = s2_point({0.3, 0.1}, {-0.7, 0.4}, {1.2, -0.5}, b);
        if (!p) continue;
        for (auto& q : s2_quadrics()) CHECK(std::abs(eval_numeric(q, *p)) < 1e-9);
    }
}

TEST_CASE("Segre embedding and the degeneration form")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> u(-3, 3);
    for (int k = 0; k < 20; ++k) {
        std::array<Zeta8, 2> a{Zeta8(u(rng), u(rng), 0, 0), Zeta8(u(rng), 0, 0, u(rng))};
        std::array<Zeta8, 3> w{Zeta8(u(rng)), Zeta8(u(rng), 1, 0, 0), Zeta8(u(rng))};
        auto s = segre_minors(segre_map(a, w));
        for (auto& m : s) CHECK(is_zero(m));
    }
    ZPoly g = segre_gcd_on_line();
    CHECK(g.degree() == 2);
    CHECK(poly_divide(g8(), g).has_value());
    // r12 pulled back to the line is 64 g8
    auto c = proportional_forms(r12_poly().substitute(qm_line_images()), g8());
    REQUIRE(c.has_value());
    CHECK(*c == Zeta8(64));
    ZPoint x{Zeta8(1), Zeta8(2), Zeta8(3), Zeta8(-1), Zeta8(5), Zeta8(7)};
    CHECK_FALSE(is_zero(degeneration_r(x)));
}

TEST_CASE("recombination of f1 and f2 under the lifts")
{
    for (int k = 0; k < 16; ++k) {
        auto m = recombination_matrix(node_lift(k));
        REQUIRE(m.has_value());
        Zeta8 det = (*m)[0][0] * (*m)[1][1] - (*m)[0][1] * (*m)[1][0];
        CHECK_FALSE(is_zero(det));
    }
    CHECK(recombination_matrix(ZMatrix::identity(6)) ==
          std::array<std::array<Zeta8, 2>, 2>{std::array<Zeta8, 2>{one, 0}, std::array<Zeta8, 2>{0, one}});
}
