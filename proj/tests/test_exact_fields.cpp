#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmlab/homog_poly.hpp"
#include "qmlab/matrix.hpp"
#include "qmlab/quadext.hpp"
#include "qmlab/quotient_ext.hpp"
#include "qmlab/ratfunc.hpp"
#include "qmlab/zeta8.hpp"

#include <Eigen/Dense>

#include <random>

using namespace qm;

namespace {

Zeta8 random_zeta8(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> u(-7, 7), v(1, 5);
    return Zeta8(Rational(u(rng), v(rng)), Rational(u(rng), v(rng)), Rational(u(rng), v(rng)),
                 Rational(u(rng), v(rng)));
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-12)
{
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

} // namespace

TEST_CASE("zeta8 basics")
{
    Zeta8 z = Zeta8::zeta();
    CHECK(z * z == Zeta8::i());
    CHECK(Zeta8::zeta_pow(8) == Zeta8(1));
    CHECK(Zeta8::zeta_pow(4) == Zeta8(-1));
    CHECK(Zeta8::sqrt2() * Zeta8::sqrt2() == Zeta8(2));
    CHECK(Zeta8::i() * Zeta8::i() == Zeta8(-1));
    CHECK(z.conj() * z == Zeta8(1));
    CHECK_THROWS(inverse(Zeta8(0)));
}

TEST_CASE("zeta8 agrees with complex arithmetic")
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        Zeta8 a = random_zeta8(rng), b = random_zeta8(rng);
        auto ca = a.to_complex(), cb = b.to_complex();
        CHECK(close((a + b).to_complex(), ca + cb));
        CHECK(close((a * b).to_complex(), ca * cb));
        if (!is_zero(b)) CHECK(close((a / b).to_complex(), ca / cb, 1e-10));
        // norm down to Q is the product of the four conjugates
        std::complex<double> n = 1;
        for (int g : {1, 3, 5, 7}) n *= a.galois(g).to_complex();
        CHECK(close(n, a.norm().get_d(), 1e-9));
    }
}

TEST_CASE("quadratic extension")
{
    QuadExt s = QuadExt::sqrt_of(5);
    CHECK(s * s == QuadExt(5));
    QuadExt x(5, Rational(1, 2), Rational(3));
    CHECK(x * inverse(x) == QuadExt(1));
    CHECK(std::abs(x.to_double() - (0.5 + 3 * std::sqrt(5.0))) < 1e-12);
    CHECK(x.norm() == Rational(1, 4) - 45);
    CHECK(QuadExt(3) + s == QuadExt(5, 3, 1));
}

TEST_CASE("rational functions")
{
    RatFunc t = RatFunc::var();
    RatFunc f = (t * t - RatFunc(1)) / (t - RatFunc(1));
    CHECK(f == t + RatFunc(1));
    CHECK(f.den() == QPoly(Rational(1)));
    CHECK(f.eval(Rational(3)) == 4);
    RatFunc g = RatFunc(1) / (t - RatFunc(2));
    CHECK_THROWS(g.eval(Rational(2)));
    CHECK(g * (t - RatFunc(2)) == RatFunc(1));
    CHECK_THROWS(inverse(RatFunc(0)));
}

TEST_CASE("quotient extension over Q(t)")
{
    auto r = std::make_shared<const RatFunc>(RatFunc::var());
    QuotientExt<RatFunc> s = QuotientExt<RatFunc>::gen(r);
    CHECK(s * s == QuotientExt<RatFunc>(RatFunc::var()));
    auto x = s + QuotientExt<RatFunc>(RatFunc(3));
    CHECK(x * inverse(x) == QuotientExt<RatFunc>(1));
    // s^2 = 4 over Q has zero divisors
    auto four = std::make_shared<const Rational>(4);
    auto u = QuotientExt<Rational>::gen(four) - QuotientExt<Rational>(2);
    CHECK_THROWS_AS(inverse(u), zero_divisor);
}

TEST_CASE("binary forms: gcd, division, substitution")
{
    using P = HomogPoly<Rational>;
    P x = P::var(2, 0), y = P::var(2, 1);
    P f = (x - y) * (x + y * Rational(2)) * y;
    P g = (x - y) * (x * Rational(3) - y);
    P h = poly_gcd(f, g);
    CHECK(h.degree() == 1);
    CHECK(poly_divide(f, h).has_value());
    CHECK_FALSE(poly_divide(g, y).has_value());
    P s = f.substitute({x + y, y});
    std::vector<Rational> pt{Rational(2), Rational(5)};
    CHECK(s.eval(pt) == f.eval(std::vector<Rational>{Rational(7), Rational(5)}));
    CHECK(f.diff(0).degree() == 2);
    CHECK_THROWS(f + g);
}

TEST_CASE("exact matrices agree with floating-point linear algebra")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> u(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix<Rational> m(4, 4);
        Eigen::Matrix4d e;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                int v = u(rng);
                m(i, j) = v;
                e(i, j) = v;
            }
        CHECK(std::abs(m.det().get_d() - e.determinant()) < 1e-8);
        Eigen::FullPivLU<Eigen::Matrix4d> lu(e);
        CHECK(m.rank() == lu.rank());
        CHECK(int(m.kernel().size()) == 4 - m.rank());
        for (auto& k : m.kernel()) CHECK(std::all_of(m.apply(k).begin(), m.apply(k).end(), [](const Rational& r) { return is_zero(r); }));
        if (auto inv = m.try_inverse()) CHECK(m * *inv == Matrix<Rational>::identity(4));
        else CHECK(is_zero(m.det()));
    }
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}
