#pragma once

#include "qmlab/matrix.hpp"
#include "qmlab/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace qm {

// Place of Q: a prime, or 0 for the real place.
constexpr long infinite_place = 0;

int hilbert_symbol(const Rational& a, const Rational& b, long p);

struct QuatAlg {
    Rational a, b;
    QuatAlg(Rational a_, Rational b_);
};

// w + x i + y j + z ij
struct QuatElt {
    Rational w, x, y, z;
    std::array<Rational, 4> coords() const { return {w, x, y, z}; }
};

QuatElt quat_mul(const QuatAlg& A, const QuatElt& e, const QuatElt& f);
QuatElt quat_conj(const QuatElt& e);
Rational quat_trd(const QuatElt& e);
Rational quat_nrd(const QuatAlg& A, const QuatElt& e);
bool operator==(const QuatElt& e, const QuatElt& f);

// Finite ramified primes in increasing order, and whether infinity ramifies.
std::vector<long> ramified_primes(const QuatAlg& A);
bool ramified_at_infinity(const QuatAlg& A);
long discriminant(const QuatAlg& A);
bool is_division(const QuatAlg& A);

struct QuatOrder {
    QuatAlg alg;
    std::array<QuatElt, 4> basis;
};

Matrix<Rational> trace_gram(const QuatOrder& O);
// Coordinates of b_i b_j in the order basis; throws if not integral.
std::vector<std::vector<std::array<Rational, 4>>> structure_constants(const QuatOrder& O);
Integer reduced_discriminant(const QuatOrder& O);
bool is_maximal(const QuatOrder& O);

// -3 for j = 3, -1 for j = 4.
Rational algebra_a(int j);

// Z[phi_j, psi_j] with basis 1, phi, psi, phi psi, written in (algebra_a(j), d)_Q with
// i = 1 + 2 phi_3 (j = 3) or i = phi_4 (j = 4) and j = psi.
QuatOrder order_from_matrix_model(int j, long d);
// The four basis elements as 4x4 rational matrices.
std::array<Matrix<Rational>, 4> matrix_model_basis(int j, long d);

struct TableRow {
    int j = 3;
    long d = 2;
    long disc = 1;
    bool division = false;
    bool maximal = false;
};
std::vector<TableRow> discriminant_table(long d_max);
// Published skew-field rows for d <= 20: (j, d, disc).
std::vector<TableRow> reference_division_rows();
std::vector<long> reference_maximal_d();

} // namespace qm
