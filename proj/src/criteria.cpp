#include "qmlab/criteria.hpp"

#include "qmlab/heisenberg.hpp"
#include "qmlab/igusa.hpp"
#include "qmlab/kummer.hpp"
#include "qmlab/oracle.hpp"
#include "qmlab/quaternion.hpp"
#include "qmlab/symplectic.hpp"
#include "qmlab/theta.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace qm {

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skip";
    }
}

Check timed_check(const std::string& id, const std::function<Outcome()>& fn, double budget_ms)
{
    Check c;
    c.id = id;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    c.status = o.ok ? Status::pass : Status::fail;
    c.detail = o.detail;
    if (o.ok && budget_ms > 0 && c.ms > budget_ms) {
        c.status = Status::fail;
        c.detail += (c.detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    return c;
}

Check run_criterion(const Criterion& c, std::uint64_t seed)
{
    return timed_check("criterion " + std::to_string(c.number), [&] { return c.run(seed); }, c.budget_ms);
}

namespace {

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(2);
    os << std::scientific << v;
    return os.str();
}

Outcome c1_tables(std::uint64_t)
{
    std::set<std::tuple<int, long, long>> computed, printed;
    for (auto& r : discriminant_table(20))
        if (r.division) computed.insert({r.j, r.d, r.disc});
    for (auto& r : reference_division_rows()) printed.insert({r.j, r.d, r.disc});
    std::string detail;
    for (auto& [j, d, disc] : computed)
        if (!printed.count({j, d, disc}))
            detail += "(" + std::to_string(-(j == 3 ? 3 : 1)) + "," + std::to_string(d) + ") computed disc " +
                      std::to_string(disc) + " missing from printed table; ";
    for (auto& [j, d, disc] : printed)
        if (!computed.count({j, d, disc}))
            detail += "printed row (" + std::to_string(-(j == 3 ? 3 : 1)) + "," + std::to_string(d) + ") disc " +
                      std::to_string(disc) + " not reproduced; ";
    return {computed == printed, detail.empty() ? std::to_string(computed.size()) + " skew-field rows agree" : detail};
}

Outcome c2_maximal(std::uint64_t)
{
    std::vector<long> m3, m4;
    for (auto& r : discriminant_table(20))
        if (r.maximal) (r.j == 3 ? m3 : m4).push_back(r.d);
    bool ok = m3 == reference_maximal_d() && m4.empty();
    std::string s = "maximal for j=3 at d in {";
    for (long d : m3) s += " " + std::to_string(d);
    s += " }, j=4 count " + std::to_string(m4.size());
    return {ok, s};
}

Outcome c3_symplectic(std::uint64_t)
{
    QMatrix id = QMatrix::identity(4);
    for (long d = 1; d <= 100; ++d)
        for (int j : {3, 4}) {
            auto st = build_standard(j, d);
            std::string tag = " (j=" + std::to_string(j) + ", d=" + std::to_string(d) + ")";
            if (st.M * st.E * st.M.transpose() != st.E) return {false, "M E M^T != E" + tag};
            if (st.psi * st.psi != id * Rational(d)) return {false, "psi^2 != d" + tag};
            if (j == 3) {
                QMatrix u = id + st.M * Rational(2);
                if (st.M.pow(3) != id) return {false, "M3^3 != I" + tag};
                if (u * u != id * Rational(-3)) return {false, "(1+2M3)^2 != -3" + tag};
                if (u * st.psi != -(st.psi * u)) return {false, "1+2M3 and psi do not anticommute" + tag};
            } else {
                if (st.M * st.M != -id) return {false, "M4^2 != -I" + tag};
                if (st.M * st.psi != -(st.psi * st.M)) return {false, "M4 and psi do not anticommute" + tag};
            }
        }
    return {true, "d = 1..100, j = 3, 4"};
}

Outcome c4_normal_forms(std::uint64_t)
{
    for (int j : {3, 4})
        for (long d = 1; d <= 20; ++d) {
            std::string tag = " (j=" + std::to_string(j) + ", d=" + std::to_string(d) + ")";
            RMatrix S = s_matrix(j, d);
            RMatrix E1 = polarization_form(1).map([](const Rational& v) { return QuadExt(v); });
            if (S * E1 * S.transpose() != E1) return {false, "S not symplectic" + tag};
            RMatrix c = conjugated_normal_form(j, d);
            QMatrix n = normal_form(j);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    if (c(a, b) != QuadExt(n(a, b))) return {false, "normal form mismatch" + tag};
        }
    return {true, "d = 1..20"};
}

Outcome c5_fixed_locus(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(-2, 2), im(0.2, 3);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        Cplx z(re(rng), im(rng));
        worst = std::max(worst, fixed_residual(3, 2, fixed_locus_point(3, 2, z)));
    }
    return {worst < 1e-9, "max |M3 *2 tau - tau| = " + fmt(worst)};
}

Outcome c6_order(std::uint64_t)
{
    size_t n = sp_t24_order();
    return {n == 4608, "order " + std::to_string(n)};
}

Outcome c7_relations(std::uint64_t)
{
    std::string detail;
    bool ok = true;
    std::pair<const char*, std::pair<ZMatrix, std::vector<Relation>>> ops[] = {
        {"mu3", {mu3(), mu3_relations()}}, {"nu1", {nu1(), nu1_relations()}}, {"nu2", {nu2(), nu2_relations()}}};
    ZMatrix io = iota();
    for (auto& [name, v] : ops) {
        auto r = verify_normalizer(v.first, v.second);
        if (!r.ok) {
            ok = false;
            detail += std::string(name) + ": " + r.first_failure + "; ";
        }
        if (v.first * io != io * v.first) {
            ok = false;
            detail += std::string(name) + " does not commute with iota; ";
        }
    }
    return {ok, ok ? "all printed relations hold" : detail};
}

Outcome c8_shimura_line(std::uint64_t)
{
    auto im = qm_line_images();
    bool f_ok = barth_f1().substitute(im).zero() && barth_f2().substitute(im).zero();
    auto line = sqrt2_eigenline();
    auto pts = line;
    pts.push_back(qm_point(Zeta8(1), Zeta8(0)));
    pts.push_back(qm_point(Zeta8(0), Zeta8(1)));
    bool e_ok = line.size() == 2 && rank_of(pts) == 2;
    return {f_ok && e_ok, std::string("f1,f2 o p ") + (f_ok ? "= 0" : "!= 0") + ", eigenspace dim " +
                              std::to_string(line.size()) + ", span rank with p(1:0), p(0:1) " +
                              std::to_string(rank_of(pts))};
}

Outcome c9_s4(std::uint64_t)
{
    auto s = s4_on_line();
    std::multiset<int> sizes, expect{1, 6, 8, 6, 3};
    for (auto& c : s.classes) sizes.insert(c.size);
    bool g_inv = true;
    ZPoly G6 = g6().pow(4), G8 = g8().pow(3);
    for (auto& m : s.elements)
        if (act_on_form(g6(), m).pow(4) * G8 != G6 * act_on_form(g8(), m).pow(3)) g_inv = false;
    bool stab = proportional_forms(stabilizer_certificate(g6(), s.elements), g6().pow(3)).has_value() &&
                proportional_forms(stabilizer_certificate(g8(), s.elements), g8().pow(2)).has_value() &&
                proportional_forms(stabilizer_certificate(g12(), s.elements), g12()).has_value();
    bool ok = s.elements.size() == 24 && sizes == expect && g_inv && stab;
    return {ok, "order " + std::to_string(s.elements.size()) + ", classes " + (sizes == expect ? "ok" : "mismatch") +
                    ", G invariant " + (g_inv ? "yes" : "no") + ", stabilizers 4/3/2 " + (stab ? "yes" : "no")};
}

Outcome c10_kummer(std::uint64_t)
{
    auto im = qm_line_images();
    bool F = humbert_F_poly().substitute(im).zero();
    bool S2 = true;
    for (auto& q : s2_quadrics()) S2 = S2 && q.substitute(im).zero();
    auto c = proportional_forms(r12_poly().substitute(im), g8());
    ZPoly expect(2, 2);
    expect.add_term(Exps{2, 0}, Zeta8(1));
    expect.add_term(Exps{1, 1}, Zeta8::i() - Zeta8(1));
    expect.add_term(Exps{0, 2}, Zeta8::i());
    ZPoly g = segre_gcd_on_line();
    bool gcd_ok = proportional_forms(g, expect).has_value() && poly_divide(g8(), g).has_value();
    bool ok = F && S2 && c && !is_zero(*c) && gcd_ok;
    return {ok, std::string("F o p ") + (F ? "= 0" : "!= 0") + ", S2 o p " + (S2 ? "= 0" : "!= 0") +
                    ", r12 o p = c' g8 with c' = " + (c ? c->str() : "none") + ", Segre gcd " +
                    (gcd_ok ? "ok" : to_string(g))};
}

Outcome c11_six_nodes(std::uint64_t seed)
{
    auto sym = six_node_rank_on_line();
    std::mt19937_64 rng(seed);
    int full = 0;
    for (int k = 0; k < 20; ++k) {
        auto x = even_part(psi_D(random_siegel_point(rng)));
        auto all = nodes(x);
        std::vector<CPoint> six;
        for (int i : six_node_indices()) six.push_back(all[i]);
        if (span_rank_numeric(six, 1e-8) == 6) ++full;
    }
    bool ok = sym.rank == 5 && sym.det_zero && full == 20;
    return {ok, "symbolic rank " + std::to_string(sym.rank) + ", numeric rank 6 at " + std::to_string(full) + "/20"};
}

Outcome c12_igusa_oracle(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-9, 9);
    double worst = 0;
    int n = 0;
    while (n < 100) {
        Sextic<Rational> f;
        std::array<Cplx, 7> fc;
        for (int k = 0; k < 7; ++k) {
            f[k] = coef(rng);
            fc[k] = f[k].get_d();
        }
        if (is_zero(f[0])) continue;
        auto I = igusa_ABCD(f);
        if (is_zero(I.D)) continue;
        auto O = root_oracle(fc);
        for (auto [a, b] : {std::pair{I.A, O.A}, {I.B, O.B}, {I.C, O.C}, {I.D, O.D}}) {
            double ad = a.get_d();
            double scale = std::max(std::abs(ad), std::abs(b));
            if (scale > 0) worst = std::max(worst, std::abs(ad - b) / scale);
        }
        ++n;
    }
    return {worst < 1e-8, "max relative error " + fmt(worst) + " over 100 sextics"};
}

Outcome c13_isoc(std::uint64_t)
{
    auto r = verify_isoc();
    bool ok = r.s_free && r.matches && r.anchor;
    return {ok, std::string("s-free ") + (r.s_free ? "yes" : "no") + ", j = jx(H(t)) " + (r.matches ? "yes" : "no") +
                    ", G(zeta:1) = H(0) = 1/108 " + (r.anchor ? "yes" : "no") +
                    (r.detail.empty() ? "" : "; " + r.detail)};
}

Outcome c14_g_recovery(std::uint64_t)
{
    bool ok = verify_g_recovery();
    return {ok, ok ? "g_recovery o jx = id in Q(G)" : "identity fails"};
}

Outcome c15_theta(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    double w78 = 0, wf = 0, wseg = 0, wloc = 0, wneg = 1;
    std::vector<SiegelPoint> taus;
    for (int k = 0; k < 50; ++k) taus.push_back(random_siegel_point(rng));
    auto xs = psi_D_batch(taus);
    for (auto& x : xs) {
        CPoint all(x.begin(), x.end());
        double n = norm_of(all);
        w78 = std::max({w78, std::abs(x[6]) / n, std::abs(x[7]) / n});
        auto e = even_part(x);
        wf = std::max({wf, relative_residual(barth_f1(), e), relative_residual(barth_f2(), e)});
    }
    std::uniform_real_distribution<double> re(-1, 1), im(0.5, 2);
    for (int k = 0; k < 10; ++k) {
        SiegelPoint d = SiegelPoint::Zero();
        d(0, 0) = Cplx(re(rng), im(rng));
        d(1, 1) = Cplx(re(rng), im(rng));
        auto x = even_part(psi_D(d));
        double n2 = std::pow(norm_of(x), 2);
        for (auto& p : segre_minor_polys()) wseg = std::max(wseg, std::abs(p.eval_c(x)) / n2);
    }
    for (int k = 0; k < 10; ++k) {
        auto r = qm_locate(Cplx(re(rng), im(rng)), 1.0);
        wloc = std::max(wloc, r.residual);
    }
    for (int k = 0; k < 10; ++k)
        wneg = std::min(wneg, locate_on_line(even_part(psi_D(random_siegel_point(rng)))).residual);
    bool ok = w78 < 1e-11 && wf < 1e-9 && wseg < 1e-11 && wloc < 1e-7 && wneg > 1e-3;
    return {ok, "x7,x8 " + fmt(w78) + ", f1/f2 " + fmt(wf) + ", Segre " + fmt(wseg) + ", qm_locate " + fmt(wloc) +
                    ", negative min " + fmt(wneg)};
}

} // namespace

const std::vector<Criterion>& acceptance_criteria()
{
    static const std::vector<Criterion> list = {
        {1, "discriminant tables for d <= 20", "exact", 1000, c1_tables},
        {2, "maximality of Z[phi_j, psi_j]", "exact", 1000, c2_maximal},
        {3, "symplectic identities, d <= 100", "exact", 1000, c3_symplectic},
        {4, "normal forms, d <= 20", "exact", 1000, c4_normal_forms},
        {5, "fixed locus of M3 on H2 (d = 2)", "1e-9", 1000, c5_fixed_locus},
        {6, "order of Sp(T(2,4)) image", "exact", 30000, c6_order},
        {7, "Heisenberg normalizer relations", "exact", 1000, c7_relations},
        {8, "Shimura line in M24", "exact", 1000, c8_shimura_line},
        {9, "S4 action on the line", "exact", 5000, c9_s4},
        {10, "Kummer containments", "exact", 5000, c10_kummer},
        {11, "six-node hyperplane", "rank threshold 1e-8", 10000, c11_six_nodes},
        {12, "Igusa invariants vs root oracle", "1e-8 relative", 10000, c12_igusa_oracle},
        {13, "HM family invariants equal jx(H(t))", "exact", 60000, c13_isoc},
        {14, "G recovery", "exact", 1000, c14_g_recovery},
        {15, "theta-null pipeline", "1e-11 / 1e-9 / 1e-7 / 1e-3", 60000, c15_theta},
    };
    return list;
}

} // namespace qm
