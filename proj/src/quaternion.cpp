#include "qmlab/quaternion.hpp"
#include "qmlab/symplectic.hpp"

#include <set>
#include <stdexcept>

namespace qm {

namespace {

// a and b scaled to integers in the same square class.
Integer integral_rep(const Rational& a)
{
    return a.get_num() * a.get_den();
}

int valuation(Integer& u, long p)
{
    int v = 0;
    while (mpz_divisible_ui_p(u.get_mpz_t(), p)) {
        u /= p;
        ++v;
    }
    return v;
}

int mod8(const Integer& u)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
    return int(r.get_si());
}

int eps(const Integer& u) { return ((mod8(u) - 1) / 2) % 2; }
int omega(const Integer& u)
{
    int r = mod8(u);
    return (r == 3 || r == 5) ? 1 : 0;
}

} // namespace

int hilbert_symbol(const Rational& a, const Rational& b, long p)
{
    if (is_zero(a) || is_zero(b)) throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    if (p == infinite_place) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
    if (p < 2 || !mpz_probab_prime_p(Integer(p).get_mpz_t(), 30))
        throw std::invalid_argument("hilbert_symbol: " + std::to_string(p) + " is not prime");
    Integer u = integral_rep(a), v = integral_rep(b);
    int al = valuation(u, p), be = valuation(v, p);
    if (p == 2) {
        int e = eps(u) * eps(v) + al * omega(v) + be * omega(u);
        return (e % 2) ? -1 : 1;
    }
    int s = ((al * be) % 2 && (p % 4 == 3)) ? -1 : 1;
    Integer pp(p);
    if (be % 2) s *= mpz_legendre(u.get_mpz_t(), pp.get_mpz_t());
    if (al % 2) s *= mpz_legendre(v.get_mpz_t(), pp.get_mpz_t());
    return s;
}

QuatAlg::QuatAlg(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_))
{
    if (is_zero(a) || is_zero(b)) throw std::invalid_argument("quaternion algebra needs a*b != 0");
}

QuatElt quat_mul(const QuatAlg& A, const QuatElt& e, const QuatElt& f)
{
    const Rational &a = A.a, &b = A.b;
    QuatElt r;
    r.w = e.w * f.w + a * e.x * f.x + b * e.y * f.y - a * b * e.z * f.z;
    r.x = e.w * f.x + e.x * f.w - b * e.y * f.z + b * e.z * f.y;
    r.y = e.w * f.y + e.y * f.w + a * e.x * f.z - a * e.z * f.x;
    r.z = e.w * f.z + e.z * f.w + e.x * f.y - e.y * f.x;
    return r;
}

QuatElt quat_conj(const QuatElt& e) { return {e.w, -e.x, -e.y, -e.z}; }
Rational quat_trd(const QuatElt& e) { return 2 * e.w; }
Rational quat_nrd(const QuatAlg& A, const QuatElt& e)
{
    return e.w * e.w - A.a * e.x * e.x - A.b * e.y * e.y + A.a * A.b * e.z * e.z;
}
bool operator==(const QuatElt& e, const QuatElt& f) { return e.coords() == f.coords(); }

std::vector<long> ramified_primes(const QuatAlg& A)
{
    std::set<long> cand{2};
    for (Integer n : {integral_rep(A.a), integral_rep(A.b)}) {
        n = abs(n);
        for (long p = 3; Integer(p) * p <= n; p += 2)
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                cand.insert(p);
                n /= p;
            }
        while (mpz_divisible_ui_p(n.get_mpz_t(), 2)) n /= 2;
        if (n > 1) {
            if (!n.fits_slong_p()) throw std::overflow_error("ramified_primes: factor too large");
            cand.insert(n.get_si());
        }
    }
    std::vector<long> out;
    for (long p : cand)
        if (hilbert_symbol(A.a, A.b, p) == -1) out.push_back(p);
    return out;
}

bool ramified_at_infinity(const QuatAlg& A) { return hilbert_symbol(A.a, A.b, infinite_place) == -1; }

long discriminant(const QuatAlg& A)
{
    long d = 1;
    for (long p : ramified_primes(A)) d *= p;
    return d;
}

bool is_division(const QuatAlg& A) { return !ramified_primes(A).empty() || ramified_at_infinity(A); }

Matrix<Rational> trace_gram(const QuatOrder& O)
{
    Matrix<Rational> g(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = quat_trd(quat_mul(O.alg, O.basis[i], O.basis[j]));
    return g;
}

std::vector<std::vector<std::array<Rational, 4>>> structure_constants(const QuatOrder& O)
{
    Matrix<Rational> b(4, 4);
    for (int i = 0; i < 4; ++i) {
        auto c = O.basis[i].coords();
        for (int k = 0; k < 4; ++k) b(i, k) = c[k];
    }
    auto binv = b.try_inverse();
    if (!binv) throw std::invalid_argument("order basis is not linearly independent");
    std::vector<std::vector<std::array<Rational, 4>>> out(4, std::vector<std::array<Rational, 4>>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto c = quat_mul(O.alg, O.basis[i], O.basis[j]).coords();
            for (int k = 0; k < 4; ++k) {
                Rational s = 0;
                for (int l = 0; l < 4; ++l) s += c[l] * (*binv)(l, k);
                if (s.get_den() != 1)
                    throw std::domain_error("basis is not closed under multiplication (b" + std::to_string(i) +
                                            "*b" + std::to_string(j) + ")");
                out[i][j][k] = s;
            }
        }
    return out;
}

Integer reduced_discriminant(const QuatOrder& O)
{
    structure_constants(O);
    Rational det = abs(trace_gram(O).det());
    Rational r;
    if (!rational_sqrt(det, r) || r.get_den() != 1)
        throw std::domain_error("trace Gram determinant " + to_string(det) + " is not a square");
    return r.get_num();
}

bool is_maximal(const QuatOrder& O)
{
    return reduced_discriminant(O) == discriminant(O.alg);
}

Rational algebra_a(int j)
{
    if (j != 3 && j != 4) throw std::invalid_argument("j must be 3 or 4");
    return j == 3 ? Rational(-3) : Rational(-1);
}

std::array<Matrix<Rational>, 4> matrix_model_basis(int j, long d)
{
    StandardData st = build_standard(j, d);
    return {QMatrix::identity(4), st.M, st.psi, st.M * st.psi};
}

QuatOrder order_from_matrix_model(int j, long d)
{
    StandardData st = build_standard(j, d);
    QMatrix id = QMatrix::identity(4);
    QMatrix ui = j == 3 ? id + st.M * Rational(2) : st.M;
    QMatrix uj = st.psi;
    if (ui * ui != id * algebra_a(j) || uj * uj != id * Rational(d) || !(ui * uj + uj * ui).is_zero_matrix())
        throw std::domain_error("matrix model does not satisfy the quaternion relations");
    // Solve X = w + x ui + y uj + z ui uj on the 16 entries.
    std::array<QMatrix, 4> gen{id, ui, uj, ui * uj};
    QMatrix sys(16, 5);
    auto basis = matrix_model_basis(j, d);
    QuatOrder O{QuatAlg(algebra_a(j), Rational(d)), {}};
    for (int b = 0; b < 4; ++b) {
        for (int e = 0; e < 16; ++e) {
            for (int g = 0; g < 4; ++g) sys(e, g) = gen[g](e / 4, e % 4);
            sys(e, 4) = -basis[b](e / 4, e % 4);
        }
        auto ker = sys.kernel();
        if (ker.size() != 1 || is_zero(ker[0][4])) throw std::domain_error("matrix model basis not in the algebra");
        Rational s = inverse(ker[0][4]);
        O.basis[b] = {ker[0][0] * s, ker[0][1] * s, ker[0][2] * s, ker[0][3] * s};
    }
    return O;
}

std::vector<TableRow> discriminant_table(long d_max)
{
    if (d_max < 2) throw std::invalid_argument("d_max must be at least 2");
    std::vector<TableRow> rows;
    for (int j : {4, 3})
        for (long d = 2; d <= d_max; ++d) {
            TableRow r;
            r.j = j;
            r.d = d;
            QuatAlg A(algebra_a(j), Rational(d));
            r.disc = discriminant(A);
            r.division = is_division(A);
            r.maximal = is_maximal(order_from_matrix_model(j, d));
            rows.push_back(r);
        }
    return rows;
}

std::vector<TableRow> reference_division_rows()
{
    std::vector<TableRow> rows;
    auto add = [&](int j, std::initializer_list<long> ds, long disc) {
        for (long d : ds) rows.push_back(TableRow{j, d, disc, true, false});
    };
    add(4, {3, 6, 15}, 6);
    add(4, {7, 14}, 14);
    add(4, {11}, 22);
    add(4, {19}, 38);
    add(3, {2, 6, 8, 14, 18}, 6);
    add(3, {5, 15, 20}, 15);
    add(3, {10}, 10);
    add(3, {11}, 33);
    add(3, {17}, 51);
    return rows;
}

std::vector<long> reference_maximal_d() { return {2, 5, 11, 17}; }

} // namespace qm
