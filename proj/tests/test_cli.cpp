#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "framedef/checks.hpp"
#include "framedef/errors.hpp"

using framedef::json;

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
    std::string cmd = std::string(VERIFY_BINARY) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "framedef_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json run_json(const std::string& args, int* code = nullptr) {
    fs::path out = scratch("out.json");
    fs::remove(out);
    int c = run(args + " --out " + out.string());
    if (code) *code = c;
    return json::parse(slurp(out));
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run("") == 2);
    CHECK(run("nonsense") == 2);
    CHECK(run("relation --cap abc") == 2);
    CHECK(run("relation --cap 0") == 2);
    CHECK(run("points --bogus 1") == 2);
    CHECK(run("points --family punkte9") == 2);
    CHECK(run("relation --lambda 2") == 2);
    CHECK(run("all --lambda 3") == 2);
    CHECK(run("--help") == 0);
}

TEST_CASE("full suite passes") {
    int code = -1;
    json doc = run_json("all --cap 6", &code);
    CHECK(code == 0);
    CHECK(doc["summary"]["failed"] == 0);
    CHECK(doc["summary"]["total"].get<std::size_t>() == doc["checks"].size());
    CHECK(doc.contains("timing"));
    std::set<std::string> keys;
    std::set<std::string> ids;
    for (const auto& c : doc["checks"]) {
        CHECK(c["status"] == "pass");
        CHECK(!c["location"].get<std::string>().empty());
        keys.insert(c["id"].get<std::string>() + c["params"].dump());
        ids.insert(c["id"].get<std::string>());
    }
    CHECK(keys.size() == doc["checks"].size());
    for (const char* id : {"relation.origin", "relation.shift", "delta.square", "delta.idempotent", "triangular.locus",
                           "triangular.f_element", "triangular.substitutions", "points.verify", "points.sign_pairs",
                           "schnitt.case", "arcs.verify", "arcs.polynomial_identity", "groebner.determinantal",
                           "groebner.two_minors", "bijektion.coefficient", "bijektion.idempotent", "finite.fiber",
                           "finite.commute"}) {
        CHECK(ids.count(id) == 1);
    }
}

TEST_CASE("report is deterministic and independent of --jobs") {
    fs::path a = scratch("a.json"), b = scratch("b.json");
    REQUIRE(run("points --no-timing --out " + a.string()) == 0);
    REQUIRE(run("points --no-timing --jobs 3 --out " + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));
    REQUIRE(run("triangular --no-timing --out " + a.string()) == 0);
    REQUIRE(run("triangular --no-timing --out " + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));

    json x = run_json("finite"), y = run_json("finite --jobs 2");
    CHECK(x["checks"] == y["checks"]);
}

TEST_CASE("points suite for one family") {
    json doc = run_json("points --family punkte1 --lambda 1 --kappa 0");
    const int eps1[] = {1, 1, -1, -1}, eps2[] = {1, -1, -1, 1}, delta[] = {1, -1, 1, -1};
    auto as_int = [](const json& q) { return q[0] == "1/1" ? 1 : q[0] == "-1/1" ? -1 : 0; };
    int seen = 0;
    for (const auto& c : doc["checks"]) {
        if (c["id"] != "points.verify") continue;
        ++seen;
        CHECK(c["params"]["family"] == "punkte1");
        CHECK(c["params"]["lambda"] == 1);
        CHECK(c["params"]["kappa"] == 0);
        int n = c["params"]["n"];
        CHECK(as_int(c["witness"]["eps1"]) == eps1[n - 1]);
        CHECK(as_int(c["witness"]["eps2"]) == eps2[n - 1]);
        CHECK(as_int(c["witness"]["delta"]) == delta[n - 1]);
        CHECK(c["witness"]["eps1"][1] == "0/1");
    }
    CHECK(seen == 4);
    // an explicit unit mu selects punkte2 only
    json two = run_json("points --mu 3");
    for (const auto& c : two["checks"]) CHECK(c["params"]["family"] == "punkte2");
}

TEST_CASE("groebner and bijektion records") {
    json g = run_json("groebner");
    bool found = false;
    for (const auto& c : g["checks"]) {
        if (c["id"] != "groebner.determinantal") continue;
        found = true;
        CHECK(c["witness"]["dimension_f2"] == 4);
        CHECK(c["witness"]["dimension_f3"] == 4);
    }
    CHECK(found);

    json b = run_json("bijektion --lambda 0 --mu 0 --kappa 0");
    for (const auto& c : b["checks"]) {
        if (c["id"] != "bijektion.coefficient") continue;
        CHECK(c["witness"]["sign"] == -1);
    }
}

TEST_CASE("stdout output and exit code contract") {
    std::string cmd = std::string(VERIFY_BINARY) + " finite --no-timing 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    json doc = json::parse(text);
    CHECK(doc["subcommand"] == "finite");
    CHECK_FALSE(doc.contains("timing"));

    // a failing record flips the report status
    framedef::VerificationReport rep;
    rep.records.push_back({"x.ok", "loc", json::object(), true, json::object(), 0.0});
    CHECK(rep.all_passed());
    rep.records.push_back({"x.bad", "loc", json::object(), false, json::object(), 0.0});
    CHECK_FALSE(rep.all_passed());
    rep.sort();
    CHECK(rep.records.front().id == "x.bad");
    CHECK(rep.to_json()["summary"]["failed"] == 1);
}

TEST_CASE("library entry point validates options") {
    framedef::RunOptions o;
    CHECK_THROWS_AS(framedef::run_suite("bogus", o), framedef::PreconditionViolation);
    o.family = "bogen3";
    CHECK_THROWS_AS(framedef::run_suite("arcs", o), framedef::PreconditionViolation);
    o.family = "bogen2";
    auto rep = framedef::run_suite("arcs", o);
    CHECK(rep.all_passed());
    for (const auto& r : rep.records)
        if (r.id == "arcs.verify") CHECK(r.params["family"] == "bogen2");
}
