#pragma once

#include "qmlab/heisenberg.hpp"
#include "qmlab/kummer.hpp"
#include "qmlab/symplectic.hpp"

#include <array>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace qm {

// Characteristic (a/2, b/4), a in {0,1}, b in {0,..,3}. Index a*4 + b.
struct ThetaChar {
    int a = 0, b = 0;
    int index() const { return a * 4 + b; }
    std::array<double, 2> value() const { return {a / 2.0, b / 4.0}; }
};
ThetaChar theta_char(int index);

struct theta_nonconvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int theta_max_radius = 64;
constexpr double theta_rel_stop = 1e-13;

// Sum over the box |n|_inf <= radius of exp(pi i (n+l) tau (n+l)^T).
Cplx theta_box_sum_serial(const std::array<double, 2>& l, const SiegelPoint& tau, int radius);
Cplx theta_box_sum_omp(const std::array<double, 2>& l, const SiegelPoint& tau, int radius);

struct ThetaValue {
    Cplx value;
    int radius = 0;
};
// Grows the box shell by shell until a shell changes the sum by less than
// theta_rel_stop relative to the sum of absolute values.
ThetaValue theta_null(const std::array<double, 2>& l, const SiegelPoint& tau, int start_radius = 1);
ThetaValue theta_null(const ThetaChar& c, const SiegelPoint& tau);

// y_l for the 8 characteristics, index a*4 + b.
std::array<Cplx, 8> theta_nulls(const SiegelPoint& tau);
// Barth coordinates x1..x8.
std::array<Cplx, 8> barth_coordinates(const std::array<Cplx, 8>& y);
std::array<Cplx, 8> psi_D(const SiegelPoint& tau);
std::vector<std::array<Cplx, 8>> psi_D_batch(const std::vector<SiegelPoint>& taus);
std::vector<std::array<Cplx, 8>> psi_D_batch_serial(const std::vector<SiegelPoint>& taus);
CPoint even_part(const std::array<Cplx, 8>& x);

// |f(x)| / |x|^deg
double relative_residual(const ZPoly& f, const CPoint& x);
double norm_of(const CPoint& x);

// Random period matrix with Im tau >= 0.5 I.
SiegelPoint random_siegel_point(std::mt19937_64& rng);

struct LocateResult {
    int best = -1;
    double residual = 1.0;
    std::array<double, 16> residuals{};
};
// Residual of node_lift(k)^-1 x against span{p(1:0), p(0:1)}.
LocateResult locate_on_line(const CPoint& x);
// The fixed-locus point for z is sent to conj(psi_D(2 tau)).
CPoint fixed_locus_image(Cplx z);
LocateResult qm_locate(Cplx z, double tol = 1e-7);

struct qm_locate_failure : std::runtime_error {
    LocateResult result;
    qm_locate_failure(const std::string& m, LocateResult r) : std::runtime_error(m), result(r) {}
};

struct ShiftResult {
    T24 best;
    double residual = 1.0;
};
// Finds the Heisenberg lift L (over all 64 elements of T(2,4)) minimizing the
// projective distance from psi_D(tau + shift) to L psi_D(tau).
ShiftResult shift_lift(const SiegelPoint& tau, const Eigen::Matrix2d& shift);

} // namespace qm
