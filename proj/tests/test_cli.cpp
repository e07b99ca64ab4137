#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmlab/cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>

using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream o, e;
    int c = qm::run_cli(args, o, e);
    return {c, o.str(), e.str()};
}

} // namespace

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"table-discriminants", "--d-max", "1"}).code == 2);
    CHECK(run({"qm-point", "--x", "0", "--y", "0"}).code == 2);
    CHECK(run({"qm-locate", "--z", "0,-1"}).code == 2);
    CHECK(run({"kummer"}).code == 2);
    CHECK(run({"invariants", "--sextic", "1,2,3"}).code == 2);
    CHECK(run({"hm", "--t", "1/2"}).code == 2);
    CHECK(run({"theta-null", "--tau", "0,1,0,1.5,0,1"}).code == 2);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
    auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("verify") != std::string::npos);
}

TEST_CASE("discriminant table")
{
    auto r = run({"table-discriminants", "--d-max", "2", "--json"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["rows"].size() == 2);
    auto t = run({"table-discriminants"});
    CHECK(t.out.find("(-3,2)") != std::string::npos);
}

TEST_CASE("points and invariants")
{
    auto p = run({"qm-point", "--x", "1", "--y", "0", "--json"});
    REQUIRE(p.code == 0);
    auto j = json::parse(p.out);
    CHECK(j["f1"] == "0");
    CHECK(j["f2"] == "0");
    CHECK(j["point"].size() == 6);

    auto z = run({"qm-point", "--x", "0,1,0,0", "--y", "1", "--json"});
    REQUIRE(z.code == 0);
    CHECK(json::parse(z.out)["G"] == "1/108");

    auto i = run({"invariants", "--sextic", "0,1,0,0,0,-1,0", "--json"});
    CHECK(i.code == 0);
    CHECK(json::parse(i.out).contains("j1"));
    auto d = run({"invariants", "--sextic", "1,-2,1,0,0,0,0"});
    CHECK(d.code == 1);

    auto h = run({"hm", "--t", "1/3", "--json"});
    REQUIRE(h.code == 0);
    CHECK(json::parse(h.out)["matches_jx_of_H"] == true);

    auto k = run({"kummer", "--line", "1;0", "--json"});
    REQUIRE(k.code == 0);
    auto kj = json::parse(k.out);
    CHECK(kj["nodes"].size() == 16);
    CHECK(kj["six_node_rank"] == 5);
}

TEST_CASE("numeric commands")
{
    auto t = run({"theta-null", "--tau", "0.1,1.2,0.2,0.1,-0.3,1.5", "--json"});
    REQUIRE(t.code == 0);
    auto j = json::parse(t.out);
    CHECK(j["theta"].size() == 8);
    CHECK(j["f1_residual"].get<double>() < 1e-10);
    auto l = run({"qm-locate", "--z", "0.3,1.1", "--json"});
    CHECK(l.code == 0);
    CHECK(json::parse(l.out)["status"] == "pass");
}

TEST_CASE("verify and seeds")
{
    auto a = run({"verify", "--suite", "symplectic", "--seed", "7", "--json"});
    CHECK(a.code == 0);
    auto j = json::parse(a.out);
    CHECK(j["seed"] == 7);
    CHECK(j["status"] == "pass");
    setenv("QMLAB_SEED", "99", 1);
    auto b = run({"verify", "--suite", "symplectic", "--json"});
    CHECK(json::parse(b.out)["seed"] == 99);
    auto c = run({"verify", "--suite", "symplectic", "--seed", "5", "--json"});
    CHECK(json::parse(c.out)["seed"] == 5);
    unsetenv("QMLAB_SEED");
    CHECK(run({"verify", "--suite", "symplectic", "--seed", "abc"}).code == 2);
}
