#pragma once

#include "qmlab/heisenberg.hpp"

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace qm {

using CPoint = std::vector<std::complex<double>>;

// Kummer quadrics q1, q2, q3 in X1..X6 for the moduli point x.
std::array<ZPoly, 3> barth_quadrics(const ZPoint& x);

// The 16 two-torsion lifts restricted to the even coordinates, indexed by
// a + 2b + 4c + 8d for sigma1^a sigma2^(2b) tau1^c tau2^(2d).
ZMatrix node_lift(int a, int b, int c, int d);
ZMatrix node_lift(int index);
std::vector<ZPoint> nodes(const ZPoint& x);
std::vector<CPoint> nodes(const CPoint& x);

// p0000, p1111, p1110, p0110, p0100, p0011 (row order of the determinant F).
std::array<int, 6> six_node_indices();
std::vector<ZPoint> six_nodes(const ZPoint& x);
int span_rank(const std::vector<ZPoint>& pts);
int span_rank_numeric(const std::vector<CPoint>& pts, double threshold = 1e-8);

// Symbolic six-node matrix for generic x, entries are signed variables.
std::vector<std::vector<ZPoly>> six_node_matrix(const std::vector<ZPoly>& coords);
ZPoly poly_det(const std::vector<std::vector<ZPoly>>& m);
ZPoly humbert_F_poly();
Zeta8 humbert_F(const ZPoint& x);

// Rank of the six-node matrix over the function field of P^1_QM, certified
// by det = 0 and a nonzero 5x5 minor.
struct SymbolicRank {
    int rank = 0;
    bool det_zero = false;
    int minor_row = -1, minor_col = -1; // deleted row/column of the nonzero minor
};
SymbolicRank six_node_rank_on_line();

std::array<ZPoly, 3> s2_quadrics();
std::array<Zeta8, 3> s2_residuals(const ZPoint& x);

ZPoint segre_map(const std::array<Zeta8, 2>& u, const std::array<Zeta8, 3>& w);
std::array<ZPoly, 3> segre_minor_polys();
std::array<Zeta8, 3> segre_minors(const ZPoint& x);
// gcd of the three minors restricted to P^1_QM.
ZPoly segre_gcd_on_line();

ZPoly r12_poly();
Zeta8 degeneration_r(const ZPoint& x);

// Express f o m as a combination of f1, f2 for each of the 16 lifts.
std::optional<std::array<std::array<Zeta8, 2>, 2>> recombination_matrix(const ZMatrix& m);

// Numeric sample of the surface S2 (pure, deterministic given the inputs).
std::optional<CPoint> s2_point(std::complex<double> x4, std::complex<double> x5, std::complex<double> x6, int branch);

std::complex<double> eval_numeric(const ZPoly& p, const CPoint& x);

} // namespace qm
