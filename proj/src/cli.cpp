#include "qmlab/cli.hpp"

#include "qmlab/serialize.hpp"
#include "qmlab/suites.hpp"
#include "qmlab/theta.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>

namespace qm {

namespace {

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t flag_value)
{
    if (opt && opt->count()) return flag_value;
    if (const char* env = std::getenv("QMLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw usage_error(std::string("QMLAB_SEED is not an integer: ") + env);
        }
    }
    return default_seed;
}

json report_json(const std::vector<SuiteReport>& reports)
{
    json suites = json::array();
    bool all = true;
    for (auto& r : reports) {
        json checks = json::array();
        for (auto& c : r.checks)
            checks.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}, {"ms", c.ms}});
        suites.push_back({{"suite", r.name}, {"status", r.passed() ? "pass" : "fail"}, {"checks", checks}});
        all = all && r.passed();
    }
    return {{"status", all ? "pass" : "fail"}, {"suites", suites}};
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool serial, bool as_json, std::ostream& out)
{
    if (!is_suite_name(suite)) throw usage_error("unknown suite: " + suite);
    auto reports = run_suites(suite, seed, serial);
    bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
    if (as_json) {
        json j = report_json(reports);
        j["seed"] = seed;
        out << j.dump(2) << "\n";
    } else {
        for (auto& r : reports) {
            out << "[" << r.name << "] " << (r.passed() ? "pass" : "FAIL") << "\n";
            for (auto& c : r.checks)
                out << "  " << std::left << std::setw(5) << to_string(c.status) << c.id << " (" << std::fixed
                    << std::setprecision(1) << c.ms << " ms)" << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_table(long d_max, bool as_json, std::ostream& out)
{
    if (d_max < 2) throw usage_error("--d-max must be at least 2");
    auto rows = discriminant_table(d_max);
    if (as_json) {
        json j = json::array();
        for (auto& r : rows) j.push_back(to_json(r));
        out << json{{"d_max", d_max}, {"rows", j}}.dump(2) << "\n";
        return 0;
    }
    out << "algebra     disc  division  maximal\n";
    for (auto& r : rows) {
        std::string alg = "(" + std::to_string(r.j == 3 ? -3 : -1) + "," + std::to_string(r.d) + ")";
        out << std::left << std::setw(12) << alg << std::setw(6) << r.disc << std::setw(10)
            << (r.division ? "yes" : "no") << (r.maximal ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_qm_point(const std::string& xs, const std::string& ys, bool as_json, std::ostream& out)
{
    Zeta8 x = parse_zeta8(xs), y = parse_zeta8(ys);
    if (is_zero(x) && is_zero(y)) throw usage_error("(x, y) must not be (0, 0)");
    ZPoint p = qm_point(x, y);
    auto G = quotient_G(x, y);
    json j = {{"point", to_json(p)},
              {"f1", barth_f1().eval(p).str()},
              {"f2", barth_f2().eval(p).str()},
              {"G", G ? json(G->str()) : json("infinity")}};
    if (as_json) out << j.dump(2) << "\n";
    else {
        out << "p = (";
        for (size_t k = 0; k < p.size(); ++k) out << (k ? " : " : "") << p[k];
        out << ")\nf1 = " << j["f1"].get<std::string>() << ", f2 = " << j["f2"].get<std::string>()
            << "\nG = " << j["G"].get<std::string>() << "\n";
    }
    return 0;
}

Cplx parse_complex(const std::string& s)
{
    auto v = parse_doubles(s);
    if (v.size() != 2) throw usage_error("expected re,im");
    return {v[0], v[1]};
}

int cmd_qm_locate(const std::string& zs, bool as_json, std::ostream& out)
{
    Cplx z = parse_complex(zs);
    if (z.imag() <= 0) throw usage_error("Im z must be positive");
    LocateResult r = locate_on_line(fixed_locus_image(z));
    bool ok = r.residual < 1e-7;
    if (as_json) {
        out << json{{"z", to_json(z)}, {"best", r.best}, {"residual", r.residual}, {"residuals", r.residuals},
                    {"status", ok ? "pass" : "fail"}}
                   .dump(2)
            << "\n";
    } else {
        out << "best lift " << r.best << " residual " << std::scientific << r.residual << "\n";
        for (int k = 0; k < 16; ++k) out << "  lift " << std::setw(2) << k << "  " << r.residuals[k] << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_kummer(const std::string& point, const std::string& line, bool as_json, std::ostream& out)
{
    if (point.empty() == line.empty()) throw usage_error("give exactly one of --point or --line");
    ZPoint x;
    if (!point.empty()) {
        x = parse_zeta8_point(point);
        if (x.size() != 6) throw usage_error("--point needs 6 coordinates separated by ';'");
    } else {
        ZPoint xy = parse_zeta8_point(line);
        if (xy.size() != 2) throw usage_error("--line needs x;y");
        if (is_zero(xy[0]) && is_zero(xy[1])) throw usage_error("(x, y) must not be (0, 0)");
        x = qm_point(xy[0], xy[1]);
    }
    if (std::all_of(x.begin(), x.end(), [](const Zeta8& v) { return is_zero(v); }))
        throw usage_error("the zero vector is not a point");
    auto q = barth_quadrics(x);
    auto ns = nodes(x);
    json nodes_j = json::array();
    for (int k = 0; k < 16; ++k)
        nodes_j.push_back({{"index", {k & 1, (k >> 1) & 1, (k >> 2) & 1, (k >> 3) & 1}}, {"point", to_json(ns[k])}});
    auto s2 = s2_residuals(x);
    json j = {{"point", to_json(x)},
              {"quadrics", {to_string(q[0]), to_string(q[1]), to_string(q[2])}},
              {"nodes", nodes_j},
              {"six_node_rank", span_rank(six_nodes(x))},
              {"F", humbert_F(x).str()},
              {"s2_residuals", {s2[0].str(), s2[1].str(), s2[2].str()}},
              {"r", degeneration_r(x).str()}};
    if (as_json) out << j.dump(2) << "\n";
    else {
        out << "q1 = " << to_string(q[0]) << "\nq2 = " << to_string(q[1]) << "\nq3 = " << to_string(q[2]) << "\n";
        for (int k = 0; k < 16; ++k) {
            out << "p" << (k & 1) << ((k >> 1) & 1) << ((k >> 2) & 1) << ((k >> 3) & 1) << " = (";
            for (size_t i = 0; i < 6; ++i) out << (i ? " : " : "") << ns[k][i];
            out << ")\n";
        }
        out << "six-node rank " << j["six_node_rank"] << "\nF = " << j["F"].get<std::string>() << "\nS2 = ("
            << s2[0] << ", " << s2[1] << ", " << s2[2] << ")\n";
    }
    return 0;
}

int cmd_invariants(const std::string& s, bool as_json, std::ostream& out)
{
    auto c = parse_rationals(s);
    if (c.size() != 7) throw usage_error("--sextic needs 7 coefficients a0..a6");
    Sextic<Rational> f;
    std::copy(c.begin(), c.end(), f.begin());
    auto I = igusa_ABCD(f);
    json j = {{"A", to_json(I.A)}, {"B", to_json(I.B)}, {"C", to_json(I.C)}, {"D", to_json(I.D)}};
    if (is_zero(I.D)) j["error"] = "degenerate sextic (repeated root)";
    else {
        auto js = j_set(I);
        j["j1"] = to_json(js.j1);
        j["j2"] = to_json(js.j2);
        j["j3"] = to_json(js.j3);
        if (is_zero(I.A)) j["note"] = "A = 0: outside the A != 0 chart";
    }
    if (as_json) out << j.dump(2) << "\n";
    else
        for (auto& [k, v] : j.items()) out << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return is_zero(I.D) ? 1 : 0;
}

int cmd_hm(const std::string& ts, bool as_json, std::ostream& out)
{
    Rational t = parse_rational(ts);
    auto [tt, s] = hm_point_at(t);
    auto f = hm_curve(tt, s);
    json coeffs = json::array();
    for (auto& a : f) coeffs.push_back(a.str());
    Rational H = H_of_t(t);
    json j = {{"t", to_json(t)}, {"s_squared", s.relation() ? to_json(*s.relation()) : json(to_json(s.a() * s.a()))},
              {"sextic", coeffs}, {"H", to_json(H)}};
    auto I = igusa_ABCD(f);
    if (is_zero(I.D)) j["error"] = "degenerate sextic";
    else {
        auto js = j_set(I);
        j["j1"] = js.j1.str();
        j["j2"] = js.j2.str();
        j["j3"] = js.j3.str();
        if (!is_zero(H)) {
            auto e = jx_formulas(H);
            j["matches_jx_of_H"] = js.j1 == QrExt(e.j1) && js.j2 == QrExt(e.j2) && js.j3 == QrExt(e.j3);
        }
    }
    if (as_json) out << j.dump(2) << "\n";
    else
        for (auto& [k, v] : j.items()) out << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return 0;
}

int cmd_theta(const std::string& taus, bool as_json, std::ostream& out)
{
    auto v = parse_doubles(taus);
    if (v.size() != 6) throw usage_error("--tau needs re11,im11,re12,im12,re22,im22");
    SiegelPoint tau;
    tau << Cplx(v[0], v[1]), Cplx(v[2], v[3]), Cplx(v[2], v[3]), Cplx(v[4], v[5]);
    try {
        validate_siegel(tau);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    auto y = theta_nulls(tau);
    auto x = barth_coordinates(y);
    auto e = even_part(x);
    json yj = json::array(), xj = json::array();
    for (auto& c : y) yj.push_back(to_json(c));
    for (auto& c : x) xj.push_back(to_json(c));
    json j = {{"theta", yj},
              {"barth", xj},
              {"f1_residual", relative_residual(barth_f1(), e)},
              {"f2_residual", relative_residual(barth_f2(), e)}};
    if (as_json) out << j.dump(2) << "\n";
    else {
        out << std::scientific << std::setprecision(12);
        for (int k = 0; k < 8; ++k)
            out << "theta[" << theta_char(k).a << "/2," << theta_char(k).b << "/4] = " << y[k] << "\n";
        for (int k = 0; k < 8; ++k) out << "x" << k + 1 << " = " << x[k] << "\n";
        out << "f1 residual " << j["f1_residual"].get<double>() << ", f2 residual " << j["f2_residual"].get<double>()
            << "\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact and numeric checks for abelian surfaces with quaternionic multiplication", "qmlab"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output")->configurable(false);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    std::uint64_t seed_value = default_seed;
    bool serial = false;
    verify->add_option("--suite", suite, "symplectic|quaternion|heisenberg|shimura-line|kummer|igusa|theta|all");
    auto* seed_opt = verify->add_option("--seed", seed_value, "seed for randomized checks (QMLAB_SEED overrides the default)");
    verify->add_flag("--serial", serial, "run suites sequentially");

    auto* table = app.add_subcommand("table-discriminants", "quaternion discriminant table");
    long d_max = 20;
    table->add_option("--d-max", d_max, "largest d");

    auto* qpoint = app.add_subcommand("qm-point", "point p(x:y) of the Shimura line");
    std::string xs, ys;
    qpoint->add_option("--x", xs, "x as p/q or c0,c1,c2,c3 in powers of zeta8")->required();
    qpoint->add_option("--y", ys, "y as p/q or c0,c1,c2,c3")->required();

    auto* locate = app.add_subcommand("qm-locate", "locate psi_D of a fixed point on a translate of the line");
    std::string zs;
    locate->add_option("--z", zs, "re,im")->required();

    auto* kummer = app.add_subcommand("kummer", "Kummer quadrics, nodes and determinants at a point");
    std::string point, line;
    kummer->add_option("--point", point, "six exact coordinates separated by ';'");
    kummer->add_option("--line", line, "x;y on the Shimura line");

    auto* inv = app.add_subcommand("invariants", "Igusa-Clebsch invariants of a sextic");
    std::string sextic;
    inv->add_option("--sextic", sextic, "a0,...,a6 of sum a_k x^(6-k) y^k")->required();

    auto* hm = app.add_subcommand("hm", "curve of the Hashimoto-Murabayashi family at t");
    std::string ts;
    hm->add_option("--t", ts, "rational t")->required();

    auto* theta = app.add_subcommand("theta-null", "theta-null values and Barth coordinates");
    std::string taus;
    theta->add_option("--tau", taus, "re11,im11,re12,im12,re22,im22")->required();

    for (auto* sub : {verify, table, qpoint, locate, kummer, inv, hm, theta}) sub->add_flag("--json", as_json, "machine-readable output");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    try {
        if (*verify) return cmd_verify(suite, resolve_seed(seed_opt, seed_value), serial, as_json, out);
        if (*table) return cmd_table(d_max, as_json, out);
        if (*qpoint) return cmd_qm_point(xs, ys, as_json, out);
        if (*locate) return cmd_qm_locate(zs, as_json, out);
        if (*kummer) return cmd_kummer(point, line, as_json, out);
        if (*inv) return cmd_invariants(sextic, as_json, out);
        if (*hm) return cmd_hm(ts, as_json, out);
        if (*theta) return cmd_theta(taus, as_json, out);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace qm
