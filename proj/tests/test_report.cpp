#include "hcc/jobs.hpp"
#include "hcc/report.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace hcc;

namespace {

Report sample() {
    Report r;
    r.command = "hc";
    r.file = "x.hcs";
    r.job = {{"bundle", "B"}};
    r.flags = {{"seed", "1"}};
    r.add("gate", true, "-");
    r.add("other", false, "witness (1, g)");
    r.dims["HC"] = {1, 0, 1};
    r.cochains.push_back({"rep", 0, "kind A", Vec{Rational(1, 2), 0}});
    r.notes.push_back("a note");
    r.exit_code = 1;
    return r;
}

}  // namespace

TEST_CASE("JSON report has the fixed key order and exact rationals") {
    const auto j = nlohmann::ordered_json::parse(to_json(sample()));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"engine", "command", "file", "job", "flags", "verdicts", "dims", "cochains",
                                           "conventions", "notes", "error", "exit_code"});
    CHECK(j["engine"] == kEngineVersion);
    CHECK(j["cochains"][0]["coords"][0] == "1/2");
    CHECK(j["verdicts"][1]["pass"] == false);
    CHECK(j["error"].is_null());
    CHECK(j["dims"]["HC"] == nlohmann::json::array({1, 0, 1}));
}

TEST_CASE("text report lists every verdict and the exit code") {
    const std::string t = to_text(sample());
    CHECK(t.find("PASS gate: -\n") != std::string::npos);
    CHECK(t.find("FAIL other: witness (1, g)\n") != std::string::npos);
    CHECK(t.rfind("exit: 1\n") == t.size() - 8);
}

TEST_CASE("reports are reproducible") {
    CHECK(to_json(sample()) == to_json(sample()));
    CHECK(to_text(sample()) == to_text(sample()));
}

TEST_CASE("run_job maps exceptions to exit codes") {
    auto code = [](auto thrower) { return run_job("hc", "f", thrower).exit_code; };
    CHECK(code([]() -> Report { throw BudgetExceeded("big"); }) == 3);
    CHECK(code([]() -> Report { throw SpecParseError("line 1, column 1", "bad"); }) == 2);
    CHECK(code([]() -> Report { throw SpecResolutionError("/x", "bad"); }) == 2);
    CHECK(code([]() -> Report { throw PreconditionError("bad"); }) == 2);
    CHECK(code([]() -> Report { throw ConstructionError("bad"); }) == 1);
    CHECK(code([]() -> Report { return Report{}; }) == 0);
    CHECK(code([]() -> Report {
              Report r;
              r.add("c", false);
              return r;
          }) == 1);
    const Report r = run_job("hc", "f", []() -> Report { throw SpecParseError("line 2, column 5", "bad"); });
    REQUIRE(r.error.has_value());
    CHECK(r.error->find("line 2, column 5") != std::string::npos);
}

TEST_CASE("library jobs on a resolved fixture") {
    const ResolvedSpec spec(parse_spec_file(hcc::test::fixture_path("C_H-kZ2.hcs")));
    RunOptions opts;
    opts.max_degree = 2;
    const Report r = run_hc(spec, "C=H-kZ2", opts);
    CHECK(r.all_pass());
    CHECK(r.dims.at("HC") == std::vector<std::size_t>{1, 0, 1});
    CHECK(run_verify(spec, opts).all_pass());
}
