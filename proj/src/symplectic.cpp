#include "qmlab/symplectic.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace qm {

namespace {

QMatrix qm4(std::initializer_list<std::initializer_list<long>> rows)
{
    QMatrix m(4, 4);
    int i = 0;
    for (auto& r : rows) {
        int j = 0;
        for (long v : r) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

void check_j(int j)
{
    if (j != 3 && j != 4) throw std::invalid_argument("j must be 3 or 4, got " + std::to_string(j));
}

void check_d(long d)
{
    if (d < 1) throw std::invalid_argument("d must be positive, got " + std::to_string(d));
}

Eigen::Matrix2cd diag_delta(long d)
{
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = double(d);
    return m;
}

} // namespace

QMatrix polarization_form(long d)
{
    check_d(d);
    return qm4({{0, 0, 1, 0}, {0, 0, 0, d}, {-1, 0, 0, 0}, {0, -d, 0, 0}});
}

QMatrix automorphism_matrix(int j)
{
    check_j(j);
    if (j == 3) return qm4({{-1, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, -1}});
    return qm4({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
}

QMatrix psi_matrix(int j, long d)
{
    check_j(j);
    check_d(d);
    if (j == 3) return qm4({{0, d, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, d}, {0, 0, 1, 0}});
    return qm4({{0, 0, 0, -d}, {0, 0, 1, 0}, {0, d, 0, 0}, {-1, 0, 0, 0}});
}

StandardData build_standard(int j, long d)
{
    StandardData s;
    s.j = j;
    s.d = d;
    s.M = automorphism_matrix(j);
    s.E = polarization_form(d);
    s.Delta = QMatrix::diag({Rational(1), Rational(d)});
    s.R = QMatrix::diag({Rational(1), Rational(1), Rational(1), Rational(d)});
    s.psi = psi_matrix(j, d);
    return s;
}

bool is_integral(const QMatrix& m)
{
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1) return false;
    return true;
}

bool is_alternating(const QMatrix& m)
{
    return m.rows() == m.cols() && (m + m.transpose()).is_zero_matrix();
}

bool is_form_preserving(const QMatrix& M, const QMatrix& E)
{
    return M * E * M.transpose() == E;
}

SiegelPoint symmetrize(const SiegelPoint& tau)
{
    return (tau + tau.transpose()) / 2.0;
}

void validate_siegel(const SiegelPoint& tau, double tol)
{
    double scale = 1.0 + tau.cwiseAbs().maxCoeff();
    if (std::abs(tau(0, 1) - tau(1, 0)) > tol * scale)
        throw std::invalid_argument("Siegel point is not symmetric");
    Eigen::Matrix2d y = symmetrize(tau).imag();
    if (!(y(0, 0) > tol * scale) || !(y.determinant() > tol * scale * scale))
        throw std::invalid_argument("Siegel point has non-positive-definite imaginary part");
}

SiegelPoint star_action(const QMatrix& M, const SiegelPoint& tau, long d)
{
    validate_siegel(tau);
    Eigen::Matrix4d m = to_eigen(M);
    Eigen::Matrix2cd A = m.block<2, 2>(0, 0).cast<Cplx>(), B = m.block<2, 2>(0, 2).cast<Cplx>();
    Eigen::Matrix2cd C = m.block<2, 2>(2, 0).cast<Cplx>(), D = m.block<2, 2>(2, 2).cast<Cplx>();
    Eigen::Matrix2cd dl = diag_delta(d);
    Eigen::Matrix2cd num = A * tau + B * dl;
    Eigen::Matrix2cd den = C * tau + D * dl;
    double scale = 1.0 + den.cwiseAbs().maxCoeff();
    if (std::abs(den.determinant()) < 1e-12 * scale * scale)
        throw std::domain_error("star_action: C tau + D Delta is singular");
    SiegelPoint out = num * den.inverse() * dl;
    double asym = std::abs(out(0, 1) - out(1, 0)) / (1.0 + out.cwiseAbs().maxCoeff());
    if (asym > 1e-9) throw std::domain_error("star_action: result not symmetric (M does not preserve E_d?)");
    return symmetrize(out);
}

SiegelPoint star1(const Eigen::Matrix4d& S, const SiegelPoint& tau)
{
    Eigen::Matrix2cd A = S.block<2, 2>(0, 0).cast<Cplx>(), B = S.block<2, 2>(0, 2).cast<Cplx>();
    Eigen::Matrix2cd C = S.block<2, 2>(2, 0).cast<Cplx>(), D = S.block<2, 2>(2, 2).cast<Cplx>();
    Eigen::Matrix2cd den = C * tau + D;
    if (std::abs(den.determinant()) < 1e-14) throw std::domain_error("star1: singular denominator");
    return symmetrize((A * tau + B) * den.inverse());
}

Eigen::Matrix4d to_eigen(const RMatrix& m)
{
    Eigen::Matrix4d r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = m(i, j).to_double();
    return r;
}

Eigen::Matrix4d to_eigen(const QMatrix& m)
{
    Eigen::Matrix4d r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = m(i, j).get_d();
    return r;
}

RMatrix s_matrix(int j, long d)
{
    check_j(j);
    check_d(d);
    QuadExt sd = QuadExt::sqrt_of(d), half(Rational(1, 2)), one(1), zero(0);
    QuadExt isd = inverse(sd), dd(d);
    RMatrix s(4, 4);
    if (j == 3) {
        s = RMatrix{{(sd + one) * half, sd, zero, one},
                    {(sd - dd) * half, -dd, zero, -sd},
                    {(sd - one) * half, -(sd + one) * half, one, -one},
                    {one, (isd + one) * half, isd, zero}};
    } else {
        s = RMatrix{{half, zero, zero, one},
                    {sd * half, zero, zero, -sd},
                    {zero, -half, one, zero},
                    {zero, isd * half, isd, zero}};
    }
    return s;
}

RMatrix conjugated_normal_form(int j, long d)
{
    auto lift = [](const QMatrix& m) { return m.map([](const Rational& v) { return QuadExt(v); }); };
    StandardData st = build_standard(j, d);
    RMatrix S = s_matrix(j, d);
    auto Si = S.try_inverse();
    if (!Si) throw std::domain_error("S_j is singular");
    RMatrix R = lift(st.R);
    return *Si * R.inverse_matrix() * lift(st.M) * R * S;
}

QMatrix normal_form(int j)
{
    check_j(j);
    if (j == 3) return qm4({{0, 1, 0, 0}, {-1, -1, 0, 0}, {0, 0, -1, 1}, {0, 0, -1, 0}});
    return qm4({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
}

SiegelPoint fixed_locus_point(int j, long d, Cplx z)
{
    check_j(j);
    if (!(z.imag() > 0)) throw std::invalid_argument("fixed_locus_point: Im z must be positive");
    SiegelPoint base;
    if (j == 3) base << 2.0 * z, -z, -z, 2.0 * z;
    else base << z, 0.0, 0.0, z;
    SiegelPoint tau = star1(to_eigen(s_matrix(j, d)), base);
    validate_siegel(tau);
    return tau;
}

double fixed_residual(int j, long d, const SiegelPoint& tau)
{
    SiegelPoint img = star_action(automorphism_matrix(j), tau, d);
    return (img - tau).cwiseAbs().maxCoeff();
}

namespace {
const int pair_i[6] = {0, 0, 0, 1, 1, 2};
const int pair_j[6] = {1, 2, 3, 2, 3, 3};
} // namespace

QMatrix alternating_from_coords(const std::vector<Rational>& v)
{
    if (v.size() != 6) throw std::invalid_argument("alternating form needs 6 coordinates");
    QMatrix f(4, 4);
    for (int k = 0; k < 6; ++k) {
        f(pair_i[k], pair_j[k]) = v[k];
        f(pair_j[k], pair_i[k]) = -v[k];
    }
    return f;
}

std::vector<Rational> alternating_coords(const QMatrix& F)
{
    std::vector<Rational> v(6);
    for (int k = 0; k < 6; ++k) v[k] = F(pair_i[k], pair_j[k]);
    return v;
}

QMatrix pullback_on_forms(const QMatrix& M)
{
    QMatrix t(6, 6);
    for (int k = 0; k < 6; ++k) {
        std::vector<Rational> e(6, Rational(0));
        e[k] = 1;
        auto img = alternating_coords(M * alternating_from_coords(e) * M.transpose());
        for (int l = 0; l < 6; ++l) t(l, k) = img[l];
    }
    return t;
}

std::vector<std::vector<Integer>> integer_kernel(const QMatrix& A)
{
    if (!is_integral(A)) throw std::invalid_argument("integer_kernel: matrix is not integral");
    int m = A.rows(), n = A.cols();
    std::vector<std::vector<Integer>> a(m, std::vector<Integer>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = A(i, j).get_num();
    // Column operations, tracked in U, bring A to column echelon form.
    std::vector<std::vector<Integer>> u(n, std::vector<Integer>(n, 0));
    for (int k = 0; k < n; ++k) u[k][k] = 1;
    auto col_addmul = [&](int dst, int src, const Integer& f) {
        for (int i = 0; i < m; ++i) a[i][dst] -= f * a[i][src];
        for (int i = 0; i < n; ++i) u[i][dst] -= f * u[i][src];
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < m; ++i) std::swap(a[i][x], a[i][y]);
        for (int i = 0; i < n; ++i) std::swap(u[i][x], u[i][y]);
    };
    int c0 = 0;
    for (int r = 0; r < m && c0 < n; ++r) {
        while (true) {
            int best = -1;
            for (int c = c0; c < n; ++c)
                if (sgn(a[r][c]) != 0 && (best < 0 || abs(a[r][c]) < abs(a[r][best]))) best = c;
            if (best < 0) break;
            col_swap(c0, best);
            bool done = true;
            for (int c = c0 + 1; c < n; ++c) {
                if (sgn(a[r][c]) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[r][c0].get_mpz_t());
                col_addmul(c, c0, q);
                if (sgn(a[r][c]) != 0) done = false;
            }
            if (done) {
                ++c0;
                break;
            }
        }
    }
    std::vector<std::vector<Integer>> basis;
    for (int c = c0; c < n; ++c) {
        std::vector<Integer> v(n);
        for (int i = 0; i < n; ++i) v[i] = u[i][c];
        basis.push_back(std::move(v));
    }
    // Row Hermite normal form of the basis for a canonical answer.
    int k = int(basis.size()), row = 0;
    for (int col = 0; col < n && row < k; ++col) {
        while (true) {
            int best = -1;
            for (int i = row; i < k; ++i)
                if (sgn(basis[i][col]) != 0 && (best < 0 || abs(basis[i][col]) < abs(basis[best][col]))) best = i;
            if (best < 0) break;
            std::swap(basis[row], basis[best]);
            bool done = true;
            for (int i = row + 1; i < k; ++i) {
                if (sgn(basis[i][col]) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), basis[i][col].get_mpz_t(), basis[row][col].get_mpz_t());
                for (int j = 0; j < n; ++j) basis[i][j] -= q * basis[row][j];
                if (sgn(basis[i][col]) != 0) done = false;
            }
            if (done) break;
        }
        if (row < k && sgn(basis[row][col]) != 0) {
            if (sgn(basis[row][col]) < 0)
                for (auto& v : basis[row]) v = -v;
            for (int i = 0; i < row; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), basis[i][col].get_mpz_t(), basis[row][col].get_mpz_t());
                for (int j = 0; j < n; ++j) basis[i][j] -= q * basis[row][j];
            }
            ++row;
        }
    }
    return basis;
}

std::vector<QMatrix> ns_perp_basis(int j)
{
    QMatrix t = pullback_on_forms(automorphism_matrix(j));
    QMatrix id = QMatrix::identity(6);
    // phi_4 acts on H^2 with eigenvalues zeta_4^2 = -1, so the relevant factor is T + 1.
    QMatrix poly = j == 3 ? t * t + t + id : t + id;
    std::vector<QMatrix> out;
    for (auto& v : integer_kernel(poly)) {
        std::vector<Rational> q(v.begin(), v.end());
        out.push_back(alternating_from_coords(q));
    }
    return out;
}

QMatrix derive_endomorphism(const QMatrix& E, const QMatrix& F)
{
    return E.inverse_matrix() * F;
}

std::optional<QMatrix> lattice_psi(int j, long d)
{
    auto basis = ns_perp_basis(j);
    QMatrix E = polarization_form(d);
    std::vector<QMatrix> x;
    for (auto& F : basis) x.push_back(derive_endomorphism(E, F) * Rational(d));
    QMatrix id = QMatrix::identity(4);
    QMatrix u = j == 3 ? id + automorphism_matrix(3) * Rational(2) : automorphism_matrix(4);
    QMatrix target = id * Rational(d);
    // psi^2 = d and psi anticommutes with the imaginary unit u; first hit in
    // order of size, non-negative coefficients preferred.
    for (int r = 1; r <= 3; ++r)
        for (int a = r; a >= -r; --a)
            for (int b = r; b >= -r; --b) {
                if (std::max(std::abs(a), std::abs(b)) != r) continue;
                QMatrix p = x[0] * Rational(a) + x[1] * Rational(b);
                if (p * p == target && (u * p + p * u).is_zero_matrix()) return p;
            }
    return std::nullopt;
}

std::string to_string(Level l)
{
    switch (l) {
    case Level::not_in_gamma_d: return "not_in_Gamma_D";
    case Level::gamma_d_only: return "Gamma_D_only";
    case Level::gamma_d_D: return "Gamma_D(D)";
    case Level::gamma_d_D_0: return "Gamma_D(D)_0";
    }
    return "?";
}

LevelResult level_membership(const QMatrix& M)
{
    LevelResult res;
    if (M.rows() != 4 || M.cols() != 4 || !is_integral(M) || !is_form_preserving(M, polarization_form(2)))
        return res;
    res.level = Level::gamma_d_only;
    const long dt[4] = {2, 4, 2, 4};
    QMatrix diff = M - QMatrix::identity(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!mpz_divisible_ui_p(diff(i, j).get_num_mpz_t(), dt[i])) return res;
    auto bit = [](const Rational& v, long div) {
        Integer q = v.get_num() / div;
        return int(mpz_odd_p(q.get_mpz_t()) ? 1 : 0);
    };
    res.phi = {bit(M(0, 2), 2), bit(M(1, 3), 4), bit(M(2, 0), 2), bit(M(3, 1), 4)};
    bool trivial = res.phi == std::array<int, 4>{0, 0, 0, 0};
    res.level = trivial ? Level::gamma_d_D_0 : Level::gamma_d_D;
    return res;
}

std::vector<QMatrix> t24_generators()
{
    return {qm4({{1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}}),
            qm4({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}}),
            qm4({{0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}}),
            qm4({{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}}),
            qm4({{1, 0, 0, 0}, {-2, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}})};
}

std::string to_string(const T24& g)
{
    T24 n = g.normalized();
    return "(" + std::to_string(n.a) + "," + std::to_string(n.b) + "," + std::to_string(n.c) + "," +
           std::to_string(n.d) + ")";
}

int t24_pairing(const T24& g, const T24& h)
{
    // Sign chosen so that <g,h> is the commutator of the lifts.
    int e = 2 * (g.c * h.a - g.a * h.c) + (g.d * h.b - g.b * h.d);
    return ((e % 4) + 4) % 4;
}

T24 t24_act(const QMatrix& M, const T24& g)
{
    static const long den[4] = {2, 4, 2, 4};
    T24 n = g.normalized();
    Rational x[4] = {Rational(n.a, 2), Rational(n.b, 4), Rational(n.c, 2), Rational(n.d, 4)};
    int out[4];
    for (int k = 0; k < 4; ++k) {
        Rational y = 0;
        for (int i = 0; i < 4; ++i) y += x[i] * M(i, k);
        y *= den[k];
        y.canonicalize();
        if (y.get_den() != 1) throw std::domain_error("matrix does not preserve Z^4 D^-1");
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), y.get_num_mpz_t(), den[k]);
        out[k] = int(r.get_si());
    }
    return T24{out[0], out[1], out[2], out[3]};
}

Perm64 t24_permutation(const QMatrix& M)
{
    Perm64 p{};
    for (int k = 0; k < 64; ++k) p[k] = uint8_t(t24_act(M, T24::from_index(k)).index());
    return p;
}

bool preserves_pairing(const Perm64& p)
{
    for (int x = 0; x < 64; ++x)
        for (int y = 0; y < 64; ++y)
            if (t24_pairing(T24::from_index(x), T24::from_index(y)) !=
                t24_pairing(T24::from_index(p[x]), T24::from_index(p[y])))
                return false;
    return true;
}

size_t permutation_group_order(const std::vector<Perm64>& gens, size_t bound)
{
    Perm64 id{};
    for (int k = 0; k < 64; ++k) id[k] = uint8_t(k);
    std::set<Perm64> seen{id};
    std::deque<Perm64> work{id};
    while (!work.empty()) {
        Perm64 s = work.front();
        work.pop_front();
        for (auto& g : gens) {
            Perm64 t;
            for (int k = 0; k < 64; ++k) t[k] = g[s[k]];
            if (seen.insert(t).second) {
                if (seen.size() > bound)
                    throw std::runtime_error("group closure exceeded " + std::to_string(bound) + " elements");
                work.push_back(t);
            }
        }
    }
    return seen.size();
}

size_t sp_t24_order()
{
    std::vector<Perm64> gens;
    for (auto& m : t24_generators()) gens.push_back(t24_permutation(m));
    return permutation_group_order(gens);
}

} // namespace qm
