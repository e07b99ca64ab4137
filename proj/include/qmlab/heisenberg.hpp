#pragma once

#include "qmlab/homog_poly.hpp"
#include "qmlab/matrix.hpp"
#include "qmlab/symplectic.hpp"
#include "qmlab/zeta8.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qm {

// 8x8 operators on V(2,4): row k gives output coordinate k, points are
// column vectors.
using ZMatrix = Matrix<Zeta8>;
using ZPoly = HomogPoly<Zeta8>;
using ZPoint = std::vector<Zeta8>;

ZMatrix sigma1();
ZMatrix sigma2();
ZMatrix tau1();
ZMatrix tau2();
// sigma1^a sigma2^b tau1^c tau2^d
ZMatrix lift(const T24& g);
ZMatrix iota();
ZMatrix mu3();
ZMatrix nu1();
ZMatrix nu2();

// Scalar s with [lift(g), lift(h)] = s*I; throws if the commutator is not scalar.
Zeta8 commutator_scalar(const T24& g, const T24& h);
Zeta8 pairing_value(const T24& g, const T24& h);

// op * lift(generator) * op^-1 == scalar * lift(word)
struct Relation {
    std::string name;
    int generator = 0; // 0..3 for sigma1, sigma2, tau1, tau2
    Zeta8 scalar;
    T24 word;
};
struct RelationCheck {
    bool ok = true;
    std::string first_failure;
    std::vector<bool> each;
};
std::vector<Relation> mu3_relations();
std::vector<Relation> nu1_relations();
std::vector<Relation> nu2_relations();
RelationCheck verify_normalizer(const ZMatrix& op, const std::vector<Relation>& rels);
// m as scalar * lift(word), if it is one.
std::optional<std::pair<Zeta8, T24>> as_heisenberg_element(const ZMatrix& target);
std::string describe_relation(const Relation& r);

// Images of the four generators in T(2,4); throws "not in normalizer".
std::array<T24, 4> induced_t24_map(const ZMatrix& op);
T24 apply_t24_map(const std::array<T24, 4>& images, const T24& g);
bool is_symplectic_map(const std::array<T24, 4>& images);

// Even part (first six coordinates).
ZMatrix even_block(const ZMatrix& op);
// Kernel of (mu3 - sqrt2) on the even subspace.
std::vector<ZPoint> sqrt2_eigenline();
ZPoint qm_point(const Zeta8& x, const Zeta8& y);
// p_(x:y) as six linear forms in (x, y).
std::vector<ZPoly> qm_line_images();
int rank_of(const std::vector<ZPoint>& pts);

ZPoly barth_f1();
ZPoly barth_f2();

// 2x2 matrices acting on (x:y) as column vectors.
using Z2 = Matrix<Zeta8>;
Z2 nu1_on_line();
Z2 nu2_on_line();
Z2 projective_normalize(const Z2& m);
struct ClassInfo {
    int order = 1;
    int size = 1;
};
struct S4Report {
    std::vector<Z2> elements;
    std::vector<ClassInfo> classes; // sorted by (order, size)
    int order_nu1 = 0, order_nu2 = 0;
    bool abelian = false;
};
S4Report s4_on_line(size_t bound = 1000);
int projective_order(const Z2& m, int bound = 64);

ZPoly g6();
ZPoly g8();
ZPoly g12();
// g(a x + b y, c x + d y)
ZPoly act_on_form(const ZPoly& g, const Z2& m);
std::optional<Zeta8> proportional_forms(const ZPoly& p, const ZPoly& q);
// nullopt for G = infinity
std::optional<Zeta8> quotient_G(const Zeta8& x, const Zeta8& y);
// Product over non-identity m of gcd(fixed-point form of m, g).
ZPoly stabilizer_certificate(const ZPoly& g, const std::vector<Z2>& group);

} // namespace qm
