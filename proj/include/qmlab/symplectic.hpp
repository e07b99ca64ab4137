#pragma once

#include "qmlab/matrix.hpp"
#include "qmlab/quadext.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qm {

// Integer matrices live in QMatrix with integral entries; row-vector
// convention throughout (x -> x M).
using QMatrix = Matrix<Rational>;
using RMatrix = Matrix<QuadExt>;
using Cplx = std::complex<double>;
using SiegelPoint = Eigen::Matrix2cd;

struct StandardData {
    int j = 3;
    long d = 1;
    QMatrix M;     // rho_r(phi_j)
    QMatrix E;     // E_d
    QMatrix Delta; // diag(1, d)
    QMatrix R;     // diag(I, Delta)
    QMatrix psi;   // rho_r(psi_j)
};

QMatrix polarization_form(long d);
QMatrix automorphism_matrix(int j);
QMatrix psi_matrix(int j, long d);
StandardData build_standard(int j, long d);

bool is_integral(const QMatrix& m);
bool is_alternating(const QMatrix& m);
bool is_form_preserving(const QMatrix& M, const QMatrix& E);

// Throws std::invalid_argument unless tau is symmetric and Im tau > 0 to tol.
void validate_siegel(const SiegelPoint& tau, double tol = 1e-12);
SiegelPoint symmetrize(const SiegelPoint& tau);

// (A tau + B Delta)(C tau + D Delta)^-1 Delta
SiegelPoint star_action(const QMatrix& M, const SiegelPoint& tau, long d);
// Standard action of a real symplectic matrix.
SiegelPoint star1(const Eigen::Matrix4d& S, const SiegelPoint& tau);

RMatrix s_matrix(int j, long d);
RMatrix conjugated_normal_form(int j, long d);
QMatrix normal_form(int j);
Eigen::Matrix4d to_eigen(const RMatrix& m);
Eigen::Matrix4d to_eigen(const QMatrix& m);

SiegelPoint fixed_locus_point(int j, long d, Cplx z);
double fixed_residual(int j, long d, const SiegelPoint& tau);

// Pair order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
QMatrix alternating_from_coords(const std::vector<Rational>& v);
std::vector<Rational> alternating_coords(const QMatrix& F);
// Matrix of F -> M F M^T on the six alternating coordinates.
QMatrix pullback_on_forms(const QMatrix& M);
// Integer kernel of an integral matrix, as a saturated Z-basis in row HNF.
std::vector<std::vector<Integer>> integer_kernel(const QMatrix& A);
std::vector<QMatrix> ns_perp_basis(int j);

QMatrix derive_endomorphism(const QMatrix& E, const QMatrix& F);
// psi in the Z-span of d * E_d^-1 F_k with psi^2 = d, smallest coefficients first.
std::optional<QMatrix> lattice_psi(int j, long d);

enum class Level { not_in_gamma_d, gamma_d_only, gamma_d_D, gamma_d_D_0 };
std::string to_string(Level l);
struct LevelResult {
    Level level = Level::not_in_gamma_d;
    std::array<int, 4> phi{}; // (b11, b22, g11, g22) mod 2
};
LevelResult level_membership(const QMatrix& M);
std::vector<QMatrix> t24_generators();

// T(2,4) = (Z/2 x Z/4)^2 as (a/2, b/4, c/2, d/4).
struct T24 {
    int a = 0, b = 0, c = 0, d = 0;
    T24 normalized() const { return {((a % 2) + 2) % 2, ((b % 4) + 4) % 4, ((c % 2) + 2) % 2, ((d % 4) + 4) % 4}; }
    int index() const
    {
        T24 n = normalized();
        return n.a + 2 * (n.b + 4 * (n.c + 2 * n.d));
    }
    static T24 from_index(int k) { return {k % 2, (k / 2) % 4, (k / 8) % 2, k / 16}; }
    friend T24 operator+(const T24& x, const T24& y) { return T24{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}.normalized(); }
    friend T24 operator-(const T24& x) { return T24{-x.a, -x.b, -x.c, -x.d}.normalized(); }
    friend bool operator==(const T24& x, const T24& y) { return x.index() == y.index(); }
};
std::string to_string(const T24& g);

// Exponent e with <g,h> = i^e.
int t24_pairing(const T24& g, const T24& h);
T24 t24_act(const QMatrix& M, const T24& g);
using Perm64 = std::array<uint8_t, 64>;
Perm64 t24_permutation(const QMatrix& M);
bool preserves_pairing(const Perm64& p);
// Order of the group generated by the permutations; throws past the bound.
size_t permutation_group_order(const std::vector<Perm64>& gens, size_t bound = 10000);
size_t sp_t24_order();

} // namespace qm
