#include "qmlab/suites.hpp"

#include "qmlab/heisenberg.hpp"
#include "qmlab/igusa.hpp"
#include "qmlab/kummer.hpp"
#include "qmlab/quaternion.hpp"
#include "qmlab/symplectic.hpp"
#include "qmlab/theta.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>

namespace qm {

bool SuiteReport::passed() const
{
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"symplectic", "quaternion", "heisenberg", "shimura-line",
                                                   "kummer",     "igusa",      "theta"};
    return names;
}

bool is_suite_name(const std::string& name)
{
    return name == "all" || std::count(suite_names().begin(), suite_names().end(), name) > 0;
}

namespace {

const Criterion& criterion(int k) { return acceptance_criteria().at(k - 1); }

Check from_criterion(int k, const std::string& id, std::uint64_t seed)
{
    Check c = run_criterion(criterion(k), seed);
    c.id = id;
    return c;
}

std::vector<Check> symplectic_suite(std::uint64_t seed)
{
    std::vector<Check> out;
    out.push_back(from_criterion(3, "symplectic identities for d <= 100", seed));
    out.push_back(from_criterion(4, "normal forms S^-1 R^-1 M R S for d <= 20", seed));
    out.push_back(from_criterion(5, "fixed locus residual < 1e-9", seed));
    out.push_back(timed_check("psi recovered from the NS-perp lattice for d <= 20", [] {
        for (int j : {3, 4})
            for (long d = 1; d <= 20; ++d) {
                auto p = lattice_psi(j, d);
                if (!p || *p != psi_matrix(j, d))
                    return Outcome{false, "mismatch at j=" + std::to_string(j) + ", d=" + std::to_string(d)};
            }
        return Outcome{true, ""};
    }));
    out.push_back(timed_check("generators lie in Gamma_D and preserve the pairing", [] {
        for (auto& g : t24_generators())
            if (level_membership(g).level == Level::not_in_gamma_d || !preserves_pairing(t24_permutation(g)))
                return Outcome{false, "generator outside Gamma_D or not symplectic"};
        return Outcome{true, ""};
    }));
    out.push_back(from_criterion(6, "group order 4608", seed));
    return out;
}

std::vector<Check> quaternion_suite(std::uint64_t seed)
{
    std::vector<Check> out;
    out.push_back(from_criterion(1, "table matches reference rows for d <= 20", seed));
    out.push_back(from_criterion(2, "maximal exactly for d in {2,5,11,17}", seed));
    out.push_back(timed_check("Hilbert product formula on 200 random pairs", [seed] {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> u(-500, 500);
        for (int k = 0; k < 200; ++k) {
            long a = u(rng), b = u(rng);
            if (a == 0 || b == 0) continue;
            QuatAlg A{Rational(a), Rational(b)};
            if ((ramified_primes(A).size() + (ramified_at_infinity(A) ? 1 : 0)) % 2)
                return Outcome{false, "odd number of ramified places for (" + std::to_string(a) + "," +
                                          std::to_string(b) + ")"};
        }
        return Outcome{true, ""};
    }));
    out.push_back(timed_check("reduced discriminants (3,2) -> 6, (4,3) -> 12", [] {
        Integer a = reduced_discriminant(order_from_matrix_model(3, 2));
        Integer b = reduced_discriminant(order_from_matrix_model(4, 3));
        return Outcome{a == 6 && b == 12, a.get_str() + ", " + b.get_str()};
    }));
    return out;
}

std::vector<Check> heisenberg_suite(std::uint64_t seed)
{
    std::vector<Check> out;
    out.push_back(timed_check("commutators equal the T(2,4) pairing", [] {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                T24 g{i == 0, i == 1, i == 2, i == 3}, h{j == 0, j == 1, j == 2, j == 3};
                if (commutator_scalar(g, h) != pairing_value(g, h)) return Outcome{false, "generator pair mismatch"};
            }
        return Outcome{true, ""};
    }));
    out.push_back(timed_check("mu3 induces the printed symplectic automorphism", [] {
        auto m = induced_t24_map(mu3());
        std::array<T24, 4> expect{T24{1, 0, 1, 0}, T24{0, 0, 0, 1}, T24{1, 0, 0, 0}, T24{0, 3, 0, 3}};
        return Outcome{m == expect && is_symplectic_map(m), ""};
    }));
    out.push_back(timed_check("iota induces negation", [] {
        auto m = induced_t24_map(iota());
        std::array<T24, 4> expect{T24{1, 0, 0, 0}, T24{0, 3, 0, 0}, T24{0, 0, 1, 0}, T24{0, 0, 0, 3}};
        return Outcome{m == expect, ""};
    }));
    out.push_back(from_criterion(7, "printed normalizer relations for mu3, nu1, nu2", seed));
    return out;
}

std::vector<Check> shimura_suite(std::uint64_t seed)
{
    std::vector<Check> out;
    out.push_back(from_criterion(8, "f1 o p = 0, f2 o p = 0 and the sqrt2-eigenline", seed));
    out.push_back(from_criterion(9, "S4 action, G invariance, stabilizers", seed));
    out.push_back(timed_check("G(zeta, 1) = 1/108", [] {
        auto g = quotient_G(Zeta8::zeta(), Zeta8(1));
        return Outcome{g && *g == Zeta8(Rational(1, 108)), g ? g->str() : "infinite"};
    }));
    return out;
}

std::vector<Check> kummer_suite(std::uint64_t seed)
{
    std::vector<Check> out;
    out.push_back(from_criterion(10, "F, S2, r12 and Segre containments on the line", seed));
    out.push_back(from_criterion(11, "six nodes span a hyperplane on the line only", seed));
    out.push_back(timed_check("recombination matrices for all 16 lifts", [] {
        for (int k = 0; k < 16; ++k)
            if (!recombination_matrix(node_lift(k))) return Outcome{false, "lift " + std::to_string(k)};
        return Outcome{true, ""};
    }));
    out.push_back(timed_check("F vanishes on 50 sampled points of S2", [seed] {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g(0, 1);
        ZPoly F = humbert_F_poly();
        double worst = 0;
        int n = 0;
        while (n < 50) {
            auto p = s2_point({g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}, n % 4);
            if (!p) continue;
            worst = std::max(worst, relative_residual(F, *p));
            ++n;
        }
        return Outcome{worst < 1e-7, "max |F|/|x|^6 = " + std::to_string(worst)};
    }));
    return out;
}

std::vector<Check> igusa_suite(std::uint64_t seed)
{
    std::vector<Check> out;
    out.push_back(from_criterion(12, "root-difference oracle on 100 sextics", seed));
    out.push_back(timed_check("absolute invariants under 50 unimodular substitutions", [seed] {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> c(-6, 6), e(-2, 2);
        int n = 0;
        while (n < 50) {
            Sextic<Rational> f;
            for (auto& v : f) v = c(rng);
            auto I = igusa_ABCD(f);
            if (is_zero(I.A) || is_zero(I.D)) continue;
            // (x, y) -> (x + k y, y) then (x, y) -> (x, y + l x), then x -> 2x
            long k = e(rng), l = e(rng);
            auto g = substitute_sextic(substitute_sextic(f, {1, k, 0, 1}), {1, 0, l, 1});
            g = substitute_sextic(g, {2, 0, 0, 1});
            if (!iso_test(f, g)) return Outcome{false, "invariants changed"};
            ++n;
        }
        return Outcome{true, ""};
    }));
    out.push_back(from_criterion(13, "j(C_{s,t}) = jx(H(t)) symbolically", seed));
    out.push_back(from_criterion(14, "g_recovery o jx = id", seed));
    out.push_back(timed_check("HM curves at s and -s are isomorphic", [] {
        auto [t, s] = hm_point_at(Rational(1, 3));
        return Outcome{iso_test(hm_curve(t, s), hm_curve(t, -s)), ""};
    }));
    out.push_back(timed_check("classifying map has degree 12", [] {
        auto r = verify_isoc();
        return Outcome{r.classifying_degree == 12, std::to_string(r.classifying_degree)};
    }));
    out.push_back(timed_check("polarization arithmetic (2+5+5)/3 = 4",
                              [] { return Outcome{polarization_intersection() == 4, ""}; }));
    return out;
}

std::vector<Check> theta_suite(std::uint64_t seed)
{
    std::vector<Check> out;
    out.push_back(from_criterion(15, "theta-null pipeline", seed));
    out.push_back(timed_check("period shifts act by Heisenberg lifts", [seed] {
        std::mt19937_64 rng(seed);
        auto tau = random_siegel_point(rng);
        struct Case {
            Eigen::Matrix2d shift;
            T24 lift;
        };
        std::vector<Case> cases = {{Eigen::Matrix2d{{4, 0}, {0, 0}}, T24{0, 0, 1, 0}},
                                   {Eigen::Matrix2d{{0, 0}, {0, 16}}, T24{0, 0, 0, 2}},
                                   {Eigen::Matrix2d{{8, 0}, {0, 0}}, T24{0, 0, 0, 0}}};
        for (auto& c : cases) {
            auto r = shift_lift(tau, c.shift);
            if (!(r.best == c.lift) || r.residual > 1e-10)
                return Outcome{false, "shift gave " + to_string(r.best) + " residual " + std::to_string(r.residual)};
        }
        return Outcome{true, ""};
    }));
    out.push_back(timed_check("OpenMP box sum agrees with the serial sum", [seed] {
        std::mt19937_64 rng(seed + 1);
        auto tau = random_siegel_point(rng);
        for (int k = 0; k < 8; ++k) {
            auto l = theta_char(k).value();
            Cplx a = theta_box_sum_serial(l, tau, 12), b = theta_box_sum_omp(l, tau, 12);
            if (std::abs(a - b) > 1e-13 * std::max(1.0, std::abs(a))) return Outcome{false, "characteristic " + std::to_string(k)};
        }
        return Outcome{true, ""};
    }));
    return out;
}

} // namespace

SuiteReport run_suite(const std::string& name, std::uint64_t seed)
{
    static const std::map<std::string, std::vector<Check> (*)(std::uint64_t)> table = {
        {"symplectic", symplectic_suite}, {"quaternion", quaternion_suite}, {"heisenberg", heisenberg_suite},
        {"shimura-line", shimura_suite},  {"kummer", kummer_suite},         {"igusa", igusa_suite},
        {"theta", theta_suite}};
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
    return {name, it->second(seed)};
}

std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed, bool serial)
{
    if (!is_suite_name(name)) throw std::invalid_argument("unknown suite: " + name);
    std::vector<std::string> names = name == "all" ? suite_names() : std::vector<std::string>{name};
    std::vector<SuiteReport> out;
    if (serial) {
        for (auto& n : names) out.push_back(run_suite(n, seed));
        return out;
    }
    std::vector<std::future<SuiteReport>> jobs;
    for (auto& n : names) jobs.push_back(std::async(std::launch::async, run_suite, n, seed));
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

} // namespace qm
