#include "qmlab/kummer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qm {

namespace {

const Zeta8 one(1);

ZPoly var6(int k) { return ZPoly::var(6, k); }

ZPoly sq(const ZPoly& p) { return p * p; }

void require6(const ZPoint& x)
{
    if (x.size() != 6) throw std::invalid_argument("expected a point with 6 coordinates");
}

} // namespace

std::array<ZPoly, 3> barth_quadrics(const ZPoint& x)
{
    require6(x);
    auto X = [](int k) { return var6(k); };
    Zeta8 s12 = x[0] * x[0] + x[1] * x[1], s34 = x[2] * x[2] + x[3] * x[3], s56 = x[4] * x[4] + x[5] * x[5];
    Zeta8 d12 = x[0] * x[0] - x[1] * x[1], d34 = x[2] * x[2] - x[3] * x[3], d56 = x[4] * x[4] - x[5] * x[5];
    ZPoly q1 = (sq(X(0)) + sq(X(1))) * s12 - (sq(X(2)) + sq(X(3))) * s34 - (sq(X(4)) + sq(X(5))) * s56;
    ZPoly q2 = (sq(X(0)) - sq(X(1))) * d12 - (sq(X(2)) - sq(X(3))) * d34 - (sq(X(4)) - sq(X(5))) * d56;
    ZPoly q3 = X(0) * X(1) * (x[0] * x[1]) - X(2) * X(3) * (x[2] * x[3]) - X(4) * X(5) * (x[4] * x[5]);
    return {q1, q2, q3};
}

ZMatrix node_lift(int a, int b, int c, int d)
{
    return even_block(lift(T24{a, 2 * b, c, 2 * d}));
}

ZMatrix node_lift(int index)
{
    if (index < 0 || index > 15) throw std::out_of_range("node index must be in 0..15");
    return node_lift(index & 1, (index >> 1) & 1, (index >> 2) & 1, (index >> 3) & 1);
}

std::vector<ZPoint> nodes(const ZPoint& x)
{
    require6(x);
    std::vector<ZPoint> out;
    for (int k = 0; k < 16; ++k) out.push_back(node_lift(k).apply(x));
    return out;
}

std::vector<CPoint> nodes(const CPoint& x)
{
    if (x.size() != 6) throw std::invalid_argument("expected a point with 6 coordinates");
    std::vector<CPoint> out;
    for (int k = 0; k < 16; ++k) {
        ZMatrix m = node_lift(k);
        CPoint p(6, 0.0);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (!is_zero(m(i, j))) p[i] += m(i, j).to_complex() * x[j];
        out.push_back(p);
    }
    return out;
}

std::array<int, 6> six_node_indices()
{
    // index = a + 2b + 4c + 8d for p_{abcd}
    return {0, 1 + 2 + 4 + 8, 1 + 2 + 4, 2 + 4, 2, 4 + 8};
}

std::vector<ZPoint> six_nodes(const ZPoint& x)
{
    auto all = nodes(x);
    std::vector<ZPoint> out;
    for (int k : six_node_indices()) out.push_back(all[k]);
    return out;
}

int span_rank(const std::vector<ZPoint>& pts) { return rank_of(pts); }

int span_rank_numeric(const std::vector<CPoint>& pts, double threshold)
{
    if (pts.empty()) return 0;
    Eigen::MatrixXcd m(pts.size(), pts[0].size());
    for (size_t i = 0; i < pts.size(); ++i) {
        double n = 0;
        for (auto& v : pts[i]) n = std::max(n, std::abs(v));
        for (size_t j = 0; j < pts[i].size(); ++j) m(i, j) = n > 0 ? pts[i][j] / n : 0.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    auto s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0) return 0;
    int r = 0;
    for (int k = 0; k < s.size(); ++k)
        if (s(k) > threshold * s(0)) ++r;
    return r;
}

std::vector<std::vector<ZPoly>> six_node_matrix(const std::vector<ZPoly>& coords)
{
    if (coords.size() != 6) throw std::invalid_argument("six_node_matrix needs 6 coordinate polynomials");
    std::vector<std::vector<ZPoly>> m;
    for (int k : six_node_indices()) {
        ZMatrix l = node_lift(k);
        std::vector<ZPoly> row;
        for (int i = 0; i < 6; ++i) {
            ZPoly e(coords[0].nvars(), coords[0].degree());
            for (int j = 0; j < 6; ++j)
                if (!is_zero(l(i, j))) e += coords[j] * l(i, j);
            row.push_back(e);
        }
        m.push_back(row);
    }
    return m;
}

ZPoly poly_det(const std::vector<std::vector<ZPoly>>& m)
{
    int n = int(m.size());
    if (n == 0) throw std::invalid_argument("poly_det of empty matrix");
    int nv = m[0][0].nvars(), deg = 0;
    for (int i = 0; i < n; ++i) deg += m[i][0].degree();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    ZPoly det(nv, deg);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        ZPoly t = ZPoly::constant(nv, inv % 2 ? -one : one);
        bool z = false;
        for (int i = 0; i < n && !z; ++i) {
            const ZPoly& e = m[i][perm[i]];
            if (e.zero()) z = true;
            else t *= e;
        }
        if (!z) det += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

ZPoly humbert_F_poly()
{
    std::vector<ZPoly> v;
    for (int k = 0; k < 6; ++k) v.push_back(var6(k));
    return poly_det(six_node_matrix(v));
}

Zeta8 humbert_F(const ZPoint& x)
{
    require6(x);
    ZMatrix m(6, 6);
    auto six = six_nodes(x);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(i, j) = six[i][j];
    return m.det();
}

SymbolicRank six_node_rank_on_line()
{
    auto m = six_node_matrix(qm_line_images());
    SymbolicRank r;
    r.det_zero = poly_det(m).zero();
    if (!r.det_zero) {
        r.rank = 6;
        return r;
    }
    for (int dr = 0; dr < 6; ++dr)
        for (int dc = 0; dc < 6; ++dc) {
            std::vector<std::vector<ZPoly>> minor;
            for (int i = 0; i < 6; ++i) {
                if (i == dr) continue;
                std::vector<ZPoly> row;
                for (int j = 0; j < 6; ++j)
                    if (j != dc) row.push_back(m[i][j]);
                minor.push_back(row);
            }
            if (!poly_det(minor).zero()) {
                r.rank = 5;
                r.minor_row = dr;
                r.minor_col = dc;
                return r;
            }
        }
    r.rank = -1; // below 5; not needed for the line
    return r;
}

std::array<ZPoly, 3> s2_quadrics()
{
    auto X = [](int k) { return var6(k); };
    return {sq(X(0)) - sq(X(1)) - sq(X(4)) - sq(X(5)), X(0) * X(1) - sq(X(3)) - X(4) * X(5),
            sq(X(2)) - sq(X(3)) - X(4) * X(5) * Zeta8(2)};
}

std::array<Zeta8, 3> s2_residuals(const ZPoint& x)
{
    require6(x);
    auto q = s2_quadrics();
    return {q[0].eval(x), q[1].eval(x), q[2].eval(x)};
}

ZPoint segre_map(const std::array<Zeta8, 2>& u, const std::array<Zeta8, 3>& w)
{
    if ((is_zero(u[0]) && is_zero(u[1])) || (is_zero(w[0]) && is_zero(w[1]) && is_zero(w[2])))
        throw std::invalid_argument("segre_map: zero input");
    return {u[0] * w[0], u[1] * w[0], u[0] * w[1], u[1] * w[1], u[0] * w[2], u[1] * w[2]};
}

std::array<ZPoly, 3> segre_minor_polys()
{
    auto X = [](int k) { return var6(k); };
    return {X(0) * X(3) - X(1) * X(2), X(0) * X(5) - X(1) * X(4), X(2) * X(5) - X(3) * X(4)};
}

std::array<Zeta8, 3> segre_minors(const ZPoint& x)
{
    require6(x);
    auto m = segre_minor_polys();
    return {m[0].eval(x), m[1].eval(x), m[2].eval(x)};
}

ZPoly segre_gcd_on_line()
{
    auto im = qm_line_images();
    auto m = segre_minor_polys();
    ZPoly g = poly_gcd(m[0].substitute(im), m[1].substitute(im));
    return poly_gcd(g, m[2].substitute(im));
}

ZPoly r12_poly()
{
    auto X = [](int k) { return var6(k); };
    return (X(0) * X(5) - X(1) * X(4)) * (X(0) * X(5) + X(1) * X(4)) * (X(0) * X(4) - X(1) * X(5)) *
           (X(0) * X(4) + X(1) * X(5)) * Zeta8(16);
}

Zeta8 degeneration_r(const ZPoint& x)
{
    require6(x);
    Zeta8 v = r12_poly().eval(x);
    return Zeta8(16) * v * v * v;
}

std::optional<std::array<std::array<Zeta8, 2>, 2>> recombination_matrix(const ZMatrix& m)
{
    if (m.rows() != 6) throw std::invalid_argument("recombination_matrix expects a 6x6 operator");
    std::vector<ZPoly> img;
    for (int i = 0; i < 6; ++i) {
        ZPoly e(6, 1);
        for (int j = 0; j < 6; ++j)
            if (!is_zero(m(i, j))) e += var6(j) * m(i, j);
        img.push_back(e);
    }
    ZPoly f1 = barth_f1(), f2 = barth_f2();
    // Collect all monomials and solve f o m = a f1 + b f2 by least coordinates.
    std::array<std::array<Zeta8, 2>, 2> out;
    int row = 0;
    for (const ZPoly& f : {f1, f2}) {
        ZPoly g = f.substitute(img);
        std::vector<Exps> mons;
        for (auto& [e, c] : g.terms()) mons.push_back(e);
        for (auto& [e, c] : f1.terms()) mons.push_back(e);
        for (auto& [e, c] : f2.terms()) mons.push_back(e);
        std::sort(mons.begin(), mons.end());
        mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
        ZMatrix sys(int(mons.size()), 3);
        for (size_t k = 0; k < mons.size(); ++k) {
            sys(int(k), 0) = f1.coeff(mons[k]);
            sys(int(k), 1) = f2.coeff(mons[k]);
            sys(int(k), 2) = -g.coeff(mons[k]);
        }
        auto ker = sys.kernel();
        if (ker.size() != 1 || is_zero(ker[0][2])) return std::nullopt;
        Zeta8 s = inverse(ker[0][2]);
        out[row] = {ker[0][0] * s, ker[0][1] * s};
        ++row;
    }
    return out;
}

std::optional<CPoint> s2_point(std::complex<double> x4, std::complex<double> x5, std::complex<double> x6, int branch)
{
    using C = std::complex<double>;
    C x3 = std::sqrt(x4 * x4 + 2.0 * x5 * x6);
    if (branch & 1) x3 = -x3;
    C p = x4 * x4 + x5 * x6; // x1 x2
    C q = x5 * x5 + x6 * x6; // x1^2 - x2^2
    C disc = std::sqrt(q * q + 4.0 * p * p);
    C x1sq = (q + ((branch & 2) ? -disc : disc)) / 2.0;
    if (std::abs(x1sq) < 1e-12) return std::nullopt;
    C x1 = std::sqrt(x1sq);
    C x2 = p / x1;
    return CPoint{x1, x2, x3, x4, x5, x6};
}

std::complex<double> eval_numeric(const ZPoly& p, const CPoint& x)
{
    return p.eval_c(x);
}

} // namespace qm
