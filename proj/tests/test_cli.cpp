#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "saf/cli.hpp"
#include "support.hpp"

using saf::test::fixture_path;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "saf");
    std::ostringstream out, err;
    const int code = saf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kMotivating = fixture_path("motivating.saf");

}  // namespace

TEST_CASE("validate") {
    const auto r = run({"validate", kMotivating});
    CHECK(r.code == 0);
    CHECK(r.out == "valid: 6 arguments, 2 attacks, 4 subargument edges\n");
    CHECK(r.err.empty());
}

TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"solve", kMotivating}).code == 1);
    CHECK(run({"solve", kMotivating, "--semantics", "ideal"}).code == 1);
    CHECK(run({"witness", "--kind", "collision", "--max-args", "9"}).code == 1);
    CHECK(run({"check", kMotivating}).code == 1);
}

TEST_CASE("input errors exit 2 and write to the error stream") {
    const auto missing = run({"validate", "/nonexistent/file.saf"});
    CHECK(missing.code == 2);
    CHECK(missing.out.empty());
    CHECK_FALSE(missing.err.empty());

    CHECK(run({"reach", kMotivating, "--arg", "zz"}).code == 2);
    CHECK(run({"explain", kMotivating, "--semantics", "complete", "--extension", "b5", "--arg", "b5"}).code == 2);
}

TEST_CASE("solve --json") {
    const auto r = run({"--json", "solve", kMotivating, "--semantics", "complete"});
    REQUIRE(r.code == 0);
    const json body = json::parse(r.out);
    CHECK(body["command"] == "solve");
    CHECK(body["semantics"] == "complete");
    CHECK(body["input_digest"] == "4d6497e57c927d33");
    CHECK(body["extensions"] == json::parse(R"([[], ["a"], ["b1", "b2", "b3", "b4", "b5"]])"));
    CHECK(body.contains("version"));

    // The flag may also follow the subcommand.
    CHECK(run({"solve", kMotivating, "--semantics", "complete", "--json"}).out == r.out);
}

TEST_CASE("JSON output is byte-identical across runs") {
    const std::vector<std::string> args = {"--json", "explain", kMotivating, "--semantics", "complete",
                                           "--extension", "b1,b2,b3,b4,b5", "--arg", "b3"};
    const auto first = run(args);
    REQUIRE(first.code == 0);
    CHECK(run(args).out == first.out);
    CHECK(json::parse(first.out)["report"]["witness"] == json::parse(R"(["b1","b2","b3","b4","b5"])"));
}

TEST_CASE("solve text output") {
    const auto r = run({"solve", kMotivating, "--semantics", "grounded"});
    CHECK(r.code == 0);
    CHECK(r.out == "grounded extensions (1):\n  {}\n");
}

TEST_CASE("--mode both agrees on every fixture") {
    for (const auto& name : saf::test::fixture_names())
        for (const char* s : {"admissible", "complete", "grounded", "preferred", "stable"})
            CHECK(run({"solve", fixture_path(name), "--semantics", s, "--mode", "both"}).code == 0);
}

TEST_CASE("project") {
    const auto r = run({"project", fixture_path("core_example.saf")});
    CHECK(r.code == 0);
    CHECK(r.out.find("att(a,c).") != std::string::npos);
    CHECK(r.out.find("sub(") == std::string::npos);
}

TEST_CASE("core") {
    const auto r = run({"--json", "core", kMotivating, "--semantics", "complete"});
    REQUIRE(r.code == 0);
    const json report = json::parse(r.out)["report"];
    CHECK(report["ch"] == json::parse(R"(["a","b1","b5"])"));
    CHECK(report["sd"] == json::parse(R"(["b2","b3","b4"])"));
    CHECK(report["extensions"] == json::parse(R"([[], ["a"], ["b1", "b2", "b3", "b4", "b5"]])"));
}

TEST_CASE("reach") {
    const auto r = run({"reach", kMotivating, "--arg", "b3"});
    CHECK(r.code == 0);
    CHECK(r.out == "structural reach of b3: {b3,b4,b5}\nattack reach of b3:     {b3}\n");
    const json report = json::parse(run({"--json", "reach", kMotivating, "--arg", "b3"}).out)["report"];
    CHECK(report["diverges"] == true);
}

TEST_CASE("witness") {
    const auto none = run({"witness", "--kind", "collision", "--max-args", "1"});
    CHECK(none.code == 3);
    CHECK_FALSE(none.err.empty());

    const auto collision = run({"--json", "witness", "--kind", "collision"});
    REQUIRE(collision.code == 0);
    const json w = json::parse(collision.out);
    CHECK(w["input_digest"].is_null());
    CHECK(w["witness"]["projection"]["attacks"] == json::parse(R"([["a1","a1"],["a1","a2"]])"));

    CHECK(run({"witness", "--kind", "reach"}).code == 0);
    const json e = json::parse(run({"--json", "witness", "--kind", "explanation"}).out);
    CHECK(e["witness"]["first_explanation"] != e["witness"]["second_explanation"]);
}

TEST_CASE("check --principles") {
    const auto r = run({"check", kMotivating, "--principles", "--random", "20", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    const json body = json::parse(run({"--json", "check", kMotivating, "--principles"}).out);
    CHECK(body["report"]["principles"].size() == 5);
}

TEST_CASE("SAF_ENUM_BOUND") {
    ::setenv("SAF_ENUM_BOUND", "3", 1);
    const auto small = run({"solve", kMotivating, "--semantics", "complete"});
    ::setenv("SAF_ENUM_BOUND", "abc", 1);
    const auto bad = run({"solve", kMotivating, "--semantics", "complete"});
    ::unsetenv("SAF_ENUM_BOUND");
    CHECK(small.code == 2);
    CHECK(small.err.find("error") != std::string::npos);
    CHECK(bad.code == 1);
    CHECK(run({"solve", kMotivating, "--semantics", "complete"}).code == 0);
}
