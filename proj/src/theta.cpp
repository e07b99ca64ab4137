#include "qmlab/theta.hpp"

#include <cmath>
#include <numbers>

namespace qm {

namespace {

Cplx term(const std::array<double, 2>& l, const SiegelPoint& tau, int n1, int n2)
{
    double v1 = n1 + l[0], v2 = n2 + l[1];
    Cplx q = tau(0, 0) * v1 * v1 + 2.0 * tau(0, 1) * v1 * v2 + tau(1, 1) * v2 * v2;
    return std::exp(Cplx(0, std::numbers::pi) * q);
}

// Sum over the shell |n|_inf == r; also returns the sum of absolute values.
std::pair<Cplx, double> shell(const std::array<double, 2>& l, const SiegelPoint& tau, int r)
{
    Cplx s = 0;
    double a = 0;
    auto add = [&](int i, int j) {
        Cplx t = term(l, tau, i, j);
        s += t;
        a += std::abs(t);
    };
    if (r == 0) {
        add(0, 0);
        return {s, a};
    }
    for (int i = -r; i <= r; ++i) {
        add(i, -r);
        add(i, r);
    }
    for (int j = -r + 1; j <= r - 1; ++j) {
        add(-r, j);
        add(r, j);
    }
    return {s, a};
}

CPoint to_cpoint(const ZPoint& p)
{
    CPoint out;
    for (auto& v : p) out.push_back(v.to_complex());
    return out;
}

Eigen::MatrixXcd to_eigen_c(const ZMatrix& m)
{
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
    return out;
}

double projective_distance(const Eigen::VectorXcd& target, const Eigen::VectorXcd& v)
{
    Cplx c = v.dot(target) / v.squaredNorm();
    return (target - c * v).norm() / target.norm();
}

} // namespace

ThetaChar theta_char(int index)
{
    if (index < 0 || index > 7) throw std::out_of_range("theta characteristic index must be in 0..7");
    return {index / 4, index % 4};
}

Cplx theta_box_sum_serial(const std::array<double, 2>& l, const SiegelPoint& tau, int radius)
{
    Cplx s = 0;
    for (int i = -radius; i <= radius; ++i)
        for (int j = -radius; j <= radius; ++j) s += term(l, tau, i, j);
    return s;
}

Cplx theta_box_sum_omp(const std::array<double, 2>& l, const SiegelPoint& tau, int radius)
{
    double re = 0, im = 0;
#pragma omp parallel for reduction(+ : re, im) schedule(static)
    for (int i = -radius; i <= radius; ++i) {
        Cplx row = 0;
        for (int j = -radius; j <= radius; ++j) row += term(l, tau, i, j);
        re += row.real();
        im += row.imag();
    }
    return {re, im};
}

ThetaValue theta_null(const std::array<double, 2>& l, const SiegelPoint& tau, int start_radius)
{
    if (start_radius < 1) throw std::invalid_argument("theta_null: radius must be >= 1");
    SiegelPoint t = symmetrize(tau);
    validate_siegel(t);
    Cplx sum = 0;
    double abs_sum = 0;
    for (int r = 0; r <= start_radius; ++r) {
        auto [s, a] = shell(l, t, r);
        sum += s;
        abs_sum += a;
    }
    for (int r = start_radius + 1; r <= theta_max_radius; ++r) {
        auto [s, a] = shell(l, t, r);
        sum += s;
        abs_sum += a;
        if (a <= theta_rel_stop * abs_sum) return {sum, r};
    }
    throw theta_nonconvergence("theta_null: no convergence within radius " + std::to_string(theta_max_radius) +
                               " (Im tau nearly singular)");
}

ThetaValue theta_null(const ThetaChar& c, const SiegelPoint& tau) { return theta_null(c.value(), tau); }

std::array<Cplx, 8> theta_nulls(const SiegelPoint& tau)
{
    std::array<Cplx, 8> y;
    for (int k = 0; k < 8; ++k) y[k] = theta_null(theta_char(k), tau).value;
    return y;
}

std::array<Cplx, 8> barth_coordinates(const std::array<Cplx, 8>& y)
{
    auto Y = [&](int n, int m) { return y[n * 4 + m]; };
    return {Y(0, 0) + Y(0, 2), Y(1, 0) + Y(1, 2), Y(0, 1) + Y(0, 3), Y(1, 1) + Y(1, 3),
            Y(0, 0) - Y(0, 2), Y(1, 0) - Y(1, 2), Y(0, 1) - Y(0, 3), Y(1, 1) - Y(1, 3)};
}

std::array<Cplx, 8> psi_D(const SiegelPoint& tau) { return barth_coordinates(theta_nulls(tau)); }

std::vector<std::array<Cplx, 8>> psi_D_batch(const std::vector<SiegelPoint>& taus)
{
    std::vector<std::array<Cplx, 8>> out(taus.size());
    // exceptions cannot cross the parallel region; collect the first one
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < long(taus.size()); ++k) {
        try {
            out[k] = psi_D(taus[k]);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

std::vector<std::array<Cplx, 8>> psi_D_batch_serial(const std::vector<SiegelPoint>& taus)
{
    std::vector<std::array<Cplx, 8>> out;
    out.reserve(taus.size());
    for (auto& t : taus) out.push_back(psi_D(t));
    return out;
}

CPoint even_part(const std::array<Cplx, 8>& x) { return CPoint(x.begin(), x.begin() + 6); }

double norm_of(const CPoint& x)
{
    double s = 0;
    for (auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

double relative_residual(const ZPoly& f, const CPoint& x)
{
    return std::abs(f.eval_c(x)) / std::pow(norm_of(x), f.degree());
}

SiegelPoint random_siegel_point(std::mt19937_64& rng)
{
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::Matrix2d X, A;
    X << g(rng), g(rng), 0, g(rng);
    X(1, 0) = X(0, 1);
    A << g(rng), g(rng), g(rng), g(rng);
    Eigen::Matrix2d Y = A * A.transpose() * 0.5 + 0.5 * Eigen::Matrix2d::Identity();
    SiegelPoint tau;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) tau(i, j) = Cplx(X(i, j), Y(i, j));
    return tau;
}

LocateResult locate_on_line(const CPoint& x)
{
    if (x.size() != 6) throw std::invalid_argument("locate_on_line expects 6 coordinates");
    Eigen::MatrixXcd P(6, 2);
    auto p10 = to_cpoint(qm_point(Zeta8(1), Zeta8(0))), p01 = to_cpoint(qm_point(Zeta8(0), Zeta8(1)));
    for (int i = 0; i < 6; ++i) {
        P(i, 0) = p10[i];
        P(i, 1) = p01[i];
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(P);
    Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(6, 2);
    Eigen::VectorXcd xv(6);
    for (int i = 0; i < 6; ++i) xv(i) = x[i];
    LocateResult res;
    for (int k = 0; k < 16; ++k) {
        Eigen::VectorXcd v = to_eigen_c(node_lift(k)).inverse() * xv;
        Eigen::VectorXcd r = v - Q * (Q.adjoint() * v);
        res.residuals[k] = r.norm() / v.norm();
        if (res.residuals[k] < res.residual) {
            res.residual = res.residuals[k];
            res.best = k;
        }
    }
    return res;
}

CPoint fixed_locus_image(Cplx z)
{
    if (z.imag() <= 0) throw std::invalid_argument("qm_locate: Im z must be positive");
    SiegelPoint tau = fixed_locus_point(3, 2, z);
    auto x = psi_D(symmetrize(2.0 * tau));
    CPoint out;
    for (int i = 0; i < 6; ++i) out.push_back(std::conj(x[i]));
    return out;
}

LocateResult qm_locate(Cplx z, double tol)
{
    LocateResult r = locate_on_line(fixed_locus_image(z));
    if (!(r.residual < tol)) {
        std::string m = "qm_locate: no lift within tolerance; residuals:";
        for (double v : r.residuals) m += " " + std::to_string(v);
        throw qm_locate_failure(m, r);
    }
    return r;
}

ShiftResult shift_lift(const SiegelPoint& tau, const Eigen::Matrix2d& shift)
{
    auto x = psi_D(tau), x2 = psi_D(tau + shift.cast<Cplx>());
    Eigen::VectorXcd a(8), b(8);
    for (int i = 0; i < 8; ++i) {
        a(i) = x[i];
        b(i) = x2[i];
    }
    ShiftResult best;
    for (int k = 0; k < 64; ++k) {
        T24 g = T24::from_index(k);
        double r = projective_distance(b, to_eigen_c(lift(g)) * a);
        if (r < best.residual) {
            best.residual = r;
            best.best = g;
        }
    }
    return best;
}

} // namespace qm
