#include "qmlab/heisenberg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace qm {

namespace {

using Row = std::vector<std::pair<Zeta8, int>>;

ZMatrix from_rows(const std::vector<Row>& rows)
{
    ZMatrix m(int(rows.size()), int(rows.size()));
    for (size_t k = 0; k < rows.size(); ++k)
        for (auto& [c, col] : rows[k]) m(int(k), col) += c;
    return m;
}

const Zeta8 one(1), I_ = Zeta8::i(), Z1 = Zeta8::zeta(), Z3 = Zeta8::zeta_pow(3);

ZMatrix power(const ZMatrix& m, int e) { return m.pow(e); }

std::string key(const Z2& m)
{
    std::string s;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += m(i, j).str() + ";";
    return s;
}

ZPoly linear_form(const Zeta8& a, const Zeta8& b)
{
    return ZPoly::monomial(2, Exps{1, 0}, a) + ZPoly::monomial(2, Exps{0, 1}, b);
}

} // namespace

ZMatrix sigma1()
{
    return from_rows({{{one, 1}}, {{one, 0}}, {{one, 3}}, {{one, 2}}, {{one, 5}}, {{one, 4}}, {{one, 7}}, {{one, 6}}});
}

// Transpose of the tabulated point map; with this choice the tabulated
// conjugation relations hold.
ZMatrix sigma2()
{
    return from_rows({{{one, 2}}, {{one, 3}}, {{one, 0}}, {{one, 1}}, {{-one, 6}}, {{-one, 7}}, {{one, 4}}, {{one, 5}}});
}

ZMatrix tau1()
{
    return ZMatrix::diag({one, -one, one, -one, one, -one, one, -one});
}

ZMatrix tau2()
{
    return from_rows({{{one, 4}}, {{one, 5}}, {{I_, 6}}, {{I_, 7}}, {{one, 0}}, {{one, 1}}, {{I_, 2}}, {{I_, 3}}});
}

ZMatrix lift(const T24& g)
{
    T24 n = g.normalized();
    return power(sigma1(), n.a) * power(sigma2(), n.b) * power(tau1(), n.c) * power(tau2(), n.d);
}

ZMatrix iota()
{
    return ZMatrix::diag({one, one, one, one, one, one, -one, -one});
}

ZMatrix mu3()
{
    return from_rows({{{one, 2}, {-I_, 3}},
                      {{one, 2}, {I_, 3}},
                      {{Z1, 4}, {-Z3, 5}},
                      {{Z1, 4}, {Z3, 5}},
                      {{one, 0}, {-I_, 1}},
                      {{one, 0}, {I_, 1}},
                      {{Z3, 6}, {Z1, 7}},
                      {{Z3, 6}, {-Z1, 7}}});
}

ZMatrix nu1()
{
    return from_rows({{{one, 4}, {one, 5}},
                      {{-one, 4}, {one, 5}},
                      {{Z1, 2}, {-Z1, 3}},
                      {{Z1, 2}, {Z1, 3}},
                      {{one, 0}, {one, 1}},
                      {{one, 0}, {-one, 1}},
                      {{-Z1, 6}, {Z1, 7}},
                      {{Z1, 6}, {Z1, 7}}});
}

ZMatrix nu2()
{
    return from_rows({{{one, 3}},
                      {{-one, 2}},
                      {{Z3, 5}},
                      {{Z3, 4}},
                      {{I_, 0}},
                      {{-I_, 1}},
                      {{Z3, 6}},
                      {{Z3, 7}}});
}

Zeta8 commutator_scalar(const T24& g, const T24& h)
{
    ZMatrix a = lift(g), b = lift(h);
    ZMatrix c = a * b * a.inverse_matrix() * b.inverse_matrix();
    Zeta8 s = c(0, 0);
    if (c != ZMatrix::identity(8) * s) throw std::logic_error("commutator of lifts is not scalar");
    return s;
}

Zeta8 pairing_value(const T24& g, const T24& h)
{
    return Zeta8::zeta_pow(2 * t24_pairing(g, h));
}

namespace {

const T24 gens[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
const char* gen_names[4] = {"sigma1", "sigma2", "tau1", "tau2"};

} // namespace

std::vector<Relation> mu3_relations()
{
    return {{"mu3 sigma1", 0, I_, {-1, 0, -1, 0}},
            {"mu3 sigma2", 1, one, {0, 0, 0, 1}},
            {"mu3 tau1", 2, one, {1, 0, 0, 0}},
            {"mu3 tau2", 3, Z1, {0, -1, 0, -1}}};
}

std::vector<Relation> nu1_relations()
{
    return {{"nu1 sigma1", 0, -one, {1, 0, 0, 2}},
            {"nu1 sigma2", 1, I_, {1, 2, 0, 1}},
            {"nu1 tau1", 2, -one, {0, 2, 1, 0}},
            {"nu1 tau2", 3, Z1, {1, 3, 1, 1}}};
}

std::vector<Relation> nu2_relations()
{
    return {{"nu2 sigma1", 0, -one, {0, 0, 1, 2}},
            {"nu2 sigma2", 1, Z1, {1, 1, 0, 1}},
            {"nu2 tau1", 2, -one, {1, 2, 0, 2}},
            {"nu2 tau2", 3, one, {0, 0, 1, 3}}};
}

std::string describe_relation(const Relation& r)
{
    return std::string("op ") + gen_names[r.generator] + " op^-1 = (" + r.scalar.str() + ") * lift" +
           to_string(r.word);
}

RelationCheck verify_normalizer(const ZMatrix& op, const std::vector<Relation>& rels)
{
    RelationCheck out;
    ZMatrix inv = op.inverse_matrix();
    for (auto& r : rels) {
        ZMatrix lhs = op * lift(gens[r.generator]) * inv;
        bool ok = lhs == lift(r.word) * r.scalar;
        out.each.push_back(ok);
        if (!ok && out.ok) {
            out.ok = false;
            out.first_failure = r.name + ": expected " + describe_relation(r);
            auto actual = as_heisenberg_element(lhs);
            if (actual)
                out.first_failure += ", actual (" + actual->first.str() + ") * lift" + to_string(actual->second);
        }
    }
    return out;
}

std::optional<std::pair<Zeta8, T24>> as_heisenberg_element(const ZMatrix& target)
{
    for (int k = 0; k < 64; ++k) {
        T24 g = T24::from_index(k);
        if (auto s = proportionality(target, lift(g))) return std::make_pair(*s, g);
    }
    return std::nullopt;
}

std::array<T24, 4> induced_t24_map(const ZMatrix& op)
{
    ZMatrix inv = op.inverse_matrix();
    std::array<T24, 4> out;
    for (int k = 0; k < 4; ++k) {
        auto hit = as_heisenberg_element(op * lift(gens[k]) * inv);
        if (!hit) throw std::domain_error("not in normalizer");
        out[k] = hit->second;
    }
    return out;
}

T24 apply_t24_map(const std::array<T24, 4>& images, const T24& g)
{
    T24 n = g.normalized();
    int coef[4] = {n.a, n.b, n.c, n.d};
    T24 r{};
    for (int k = 0; k < 4; ++k)
        for (int t = 0; t < coef[k]; ++t) r = r + images[k];
    return r;
}

bool is_symplectic_map(const std::array<T24, 4>& images)
{
    std::vector<T24> img(64);
    for (int k = 0; k < 64; ++k) img[k] = apply_t24_map(images, T24::from_index(k));
    for (int x = 0; x < 64; ++x)
        for (int y = 0; y < 64; ++y)
            if (t24_pairing(T24::from_index(x), T24::from_index(y)) != t24_pairing(img[x], img[y])) return false;
    return true;
}

ZMatrix even_block(const ZMatrix& op)
{
    return op.block(0, 0, 6, 6);
}

std::vector<ZPoint> sqrt2_eigenline()
{
    ZMatrix a = even_block(mu3()) - ZMatrix::identity(6) * Zeta8::sqrt2();
    auto ker = a.kernel();
    if (ker.size() != 2)
        throw std::domain_error("sqrt2-eigenspace has dimension " + std::to_string(ker.size()) + ", expected 2");
    return ker;
}

ZPoint qm_point(const Zeta8& x, const Zeta8& y)
{
    if (is_zero(x) && is_zero(y)) throw std::invalid_argument("qm_point: (0,0) is not a point of P^1");
    Zeta8 r2 = Zeta8::sqrt2();
    return {r2 * x, r2 * y, x + y, I_ * (x - y), x - I_ * y, x + I_ * y};
}

std::vector<ZPoly> qm_line_images()
{
    Zeta8 r2 = Zeta8::sqrt2();
    return {linear_form(r2, 0),   linear_form(0, r2),     linear_form(one, one),
            linear_form(I_, -I_), linear_form(one, -I_), linear_form(one, I_)};
}

int rank_of(const std::vector<ZPoint>& pts)
{
    if (pts.empty()) return 0;
    ZMatrix m(int(pts.size()), int(pts[0].size()));
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts[i].size(); ++j) m(int(i), int(j)) = pts[i][j];
    return m.rank();
}

ZPoly barth_f1()
{
    ZPoly f(6, 4);
    f.add_term(Exps{2, 2, 0, 0, 0, 0}, -one);
    f.add_term(Exps{0, 0, 2, 2, 0, 0}, one);
    f.add_term(Exps{0, 0, 0, 0, 2, 2}, one);
    return f;
}

ZPoly barth_f2()
{
    ZPoly f(6, 4);
    for (int k = 0; k < 6; ++k) {
        Exps e{};
        e[k] = 4;
        f.add_term(e, k < 2 ? -one : one);
    }
    return f;
}

Z2 nu1_on_line()
{
    return Z2{{one, 0}, {0, I_}};
}

Z2 nu2_on_line()
{
    return Z2{{I_, -I_}, {-one, -one}};
}

Z2 projective_normalize(const Z2& m)
{
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) return m * inverse(m(i, j));
    throw std::invalid_argument("zero matrix has no projective class");
}

int projective_order(const Z2& m, int bound)
{
    Z2 id = Z2::identity(m.rows());
    Z2 p = m;
    for (int k = 1; k <= bound; ++k) {
        if (proportionality(p, id)) return k;
        p = projective_normalize(p * m);
    }
    throw std::runtime_error("projective order exceeds bound");
}

S4Report s4_on_line(size_t bound)
{
    S4Report rep;
    std::vector<Z2> gens{projective_normalize(nu1_on_line()), projective_normalize(nu2_on_line())};
    std::map<std::string, Z2> seen;
    Z2 id = Z2::identity(2);
    seen.emplace(key(id), id);
    std::deque<Z2> work{id};
    while (!work.empty()) {
        Z2 s = work.front();
        work.pop_front();
        for (auto& g : gens) {
            Z2 t = projective_normalize(g * s);
            if (seen.emplace(key(t), t).second) {
                if (seen.size() > bound) throw std::runtime_error("S4 closure exceeded bound");
                work.push_back(t);
            }
        }
    }
    for (auto& [k, m] : seen) rep.elements.push_back(m);
    rep.order_nu1 = projective_order(gens[0]);
    rep.order_nu2 = projective_order(gens[1]);
    rep.abelian = key(projective_normalize(gens[0] * gens[1])) == key(projective_normalize(gens[1] * gens[0]));
    std::map<std::string, bool> done;
    for (auto& g : rep.elements) {
        if (done.count(key(g))) continue;
        std::map<std::string, bool> cls;
        for (auto& h : rep.elements) cls[key(projective_normalize(h * g * h.inverse_matrix()))] = true;
        for (auto& [k, v] : cls) done[k] = true;
        rep.classes.push_back({projective_order(g), int(cls.size())});
    }
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const ClassInfo& a, const ClassInfo& b) { return std::tie(a.order, a.size) < std::tie(b.order, b.size); });
    return rep;
}

ZPoly g6()
{
    ZPoly g(2, 6);
    g.add_term(Exps{5, 1}, one);
    g.add_term(Exps{1, 5}, -one);
    return g;
}

ZPoly g8()
{
    ZPoly g(2, 8);
    g.add_term(Exps{8, 0}, one);
    g.add_term(Exps{4, 4}, Zeta8(14));
    g.add_term(Exps{0, 8}, one);
    return g;
}

ZPoly g12()
{
    ZPoly g(2, 12);
    g.add_term(Exps{12, 0}, one);
    g.add_term(Exps{8, 4}, Zeta8(-33));
    g.add_term(Exps{4, 8}, Zeta8(-33));
    g.add_term(Exps{0, 12}, one);
    return g;
}

ZPoly act_on_form(const ZPoly& g, const Z2& m)
{
    return g.substitute({linear_form(m(0, 0), m(0, 1)), linear_form(m(1, 0), m(1, 1))});
}

std::optional<Zeta8> proportional_forms(const ZPoly& p, const ZPoly& q)
{
    if (p.zero() || q.zero() || p.term_count() != q.term_count()) return std::nullopt;
    std::optional<Zeta8> l;
    for (auto& [e, c] : q.terms()) {
        Zeta8 pc = p.coeff(e);
        if (is_zero(pc)) return std::nullopt;
        if (!l) l = pc / c;
        else if (pc != *l * c) return std::nullopt;
    }
    return l;
}

std::optional<Zeta8> quotient_G(const Zeta8& x, const Zeta8& y)
{
    Zeta8 a = g6().eval<Zeta8>({x, y}), b = g8().eval<Zeta8>({x, y});
    if (is_zero(b)) {
        if (is_zero(a)) throw std::domain_error("quotient_G: g6 and g8 vanish simultaneously");
        return std::nullopt;
    }
    Zeta8 a2 = a * a, b3 = b * b * b;
    return a2 * a2 / b3;
}

ZPoly stabilizer_certificate(const ZPoly& g, const std::vector<Z2>& group)
{
    ZPoly prod = ZPoly::constant(2, one);
    Z2 id = Z2::identity(2);
    ZPoly x = linear_form(one, 0), y = linear_form(0, one);
    for (auto& m : group) {
        if (proportionality(m, id)) continue;
        ZPoly fix = y * linear_form(m(0, 0), m(0, 1)) - x * linear_form(m(1, 0), m(1, 1));
        if (fix.zero()) continue;
        prod *= poly_gcd(fix, g);
    }
    return prod;
}

} // namespace qm
