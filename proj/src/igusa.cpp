#include "qmlab/igusa.hpp"

#include <algorithm>
#include <memory>

namespace qm {

RatFunc hm_relation()
{
    QPoly t = QPoly::x();
    QPoly num = t * t + QPoly(Rational(2));
    QPoly den = QPoly(Rational(1)) - t * t * QPoly(Rational(4));
    return RatFunc(num, den);
}

std::pair<QtExt, QtExt> generic_hm_point()
{
    auto r = std::make_shared<const RatFunc>(hm_relation());
    return {QtExt(RatFunc::var(), RatFunc(0), r), QtExt::gen(r)};
}

std::pair<QrExt, QrExt> hm_point_at(const Rational& t)
{
    Rational den = 1 - 4 * t * t;
    if (is_zero(den)) throw std::domain_error("hm_point_at: t = +-1/2");
    Rational r = (t * t + 2) / den;
    r.canonicalize();
    Rational root;
    if (rational_sqrt(r, root)) return {QrExt(t), QrExt(root)};
    auto rel = std::make_shared<const Rational>(r);
    return {QrExt(t, Rational(0), rel), QrExt::gen(rel)};
}

IsocReport verify_isoc()
{
    IsocReport rep;
    auto [t, s] = generic_hm_point();
    auto j = j_set(igusa_ABCD(hm_curve(t, s)));
    rep.s_free = is_zero(j.j1.b()) && is_zero(j.j2.b()) && is_zero(j.j3.b());
    rep.j = {j.j1.a(), j.j2.a(), j.j3.a()};
    auto expect = jx_formulas(H_of_t(RatFunc::var()));
    rep.matches = rep.s_free && rep.j == expect;
    if (!rep.s_free) rep.detail = "absolute invariants depend on s";
    else if (!rep.matches) rep.detail = "j(hm(t, s)) differs from jx(H(t))";

    auto [t0, s0] = hm_point_at(Rational(0));
    auto j0 = j_set(igusa_ABCD(hm_curve(t0, s0)));
    auto e0 = jx_formulas(Rational(1, 108));
    rep.anchor = is_zero(j0.j1.b()) && j0.j1.a() == e0.j1 && j0.j2.a() == e0.j2 && j0.j3.a() == e0.j3;
    if (!rep.anchor && rep.detail.empty()) rep.detail = "anchor t = 0 does not give G = 1/108";

    // Degree of t -> H(t): numerator degree of H - c for a generic c.
    RatFunc h = H_of_t(RatFunc::var()) - RatFunc(Rational(1, 7));
    rep.classifying_degree = std::max(h.num().degree(), h.den().degree());
    return rep;
}

bool verify_g_recovery()
{
    RatFunc G = RatFunc::var();
    auto j = jx_formulas(G);
    return g_recovery(j.j2, j.j3) == G;
}

long polarization_intersection()
{
    const long ee = 2, e_eta = 5, e_eta2 = 5;
    long s = ee + e_eta + e_eta2;
    if (s % 3) throw std::logic_error("polarization intersection not integral");
    return s / 3;
}

} // namespace qm
