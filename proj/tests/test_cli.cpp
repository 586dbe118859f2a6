// Runs the hcs binary and checks the exit-code contract and report output.
#include "hcc/specfile.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using hcc::test::fixture_path;
using hcc::test::hcs;
using hcc::test::run;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("exit 0: every check passes") {
    CHECK(run(hcs("verify " + fixture_path("kZ2.hcs"))).exit_code == 0);
    const auto r = run(hcs("hc " + fixture_path("C_H-kZ2.hcs") + " --bundle C=H-kZ2 --max-degree 2"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("dims.HC: 1 0 1\n") != std::string::npos);
    CHECK(run(hcs("cup1 " + fixture_path("cup1-kZ2-signA.hcs"))).exit_code == 0);
    CHECK(run(hcs("homotopy " + fixture_path("homotopy-M2.hcs"))).exit_code == 0);
}

TEST_CASE("cup2 on the degree (1, 1) job reports the closed-formula match") {
    const auto r = run(hcs("cup2 " + fixture_path("cup2-kZ2-signA.hcs")));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS closed-formula check: exact match\n") != std::string::npos);
    const auto g = run(hcs("cup2 " + fixture_path("cup2-kZ2-signA-Msigma.hcs")));
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("PASS closed-formula check: exact match\n") != std::string::npos);
}

TEST_CASE("exit 1: a mathematical check fails") {
    const auto r = run(hcs("verify " + fixture_path("Mtriv-badAYD.hcs")));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL sayd Mtriv-badAYD: stability: witness") != std::string::npos);
    CHECK(run(hcs("verify " + fixture_path("kZ2-badcoassoc.hcs"))).exit_code == 1);
}

TEST_CASE("exit 2: input errors") {
    CHECK(run(hcs("verify /nonexistent/file.hcs")).exit_code == 2);
    CHECK(run(hcs("hc " + fixture_path("signA.hcs") + " --bundle nope")).exit_code == 2);
    CHECK(run(hcs("verify " + fixture_path("kZ2.hcs") + " --no-such-flag 2>/dev/null")).exit_code == 2);
    CHECK(run(hcs("--out xml verify " + fixture_path("kZ2.hcs") + " 2>/dev/null")).exit_code == 2);
    // cup1 needs cocycles: B=H-kZ2 has no nonzero cyclic 1-cocycles.
    hcc::SpecBuilder b;
    b.add_bundle("signA", hcc::test::bundle("signA"));
    b.add_bundle("B=H-kZ2", hcc::test::bundle("B=H-kZ2"));
    b.add_cochain("phi", "B=H-kZ2", 1, hcc::Vec{0, 1, 0, 0});
    b.add_cochain("tau", "signA", 0, hcc::Vec{1, 0});
    const auto bad = temp_file("hcc-cli-nococycle.hcs", hcc::serialize_spec(b.document()));
    const auto nc = run(hcs("cup1 " + bad.string() + " --phi phi --psi tau"));
    CHECK(nc.exit_code == 2);
    CHECK(nc.out.find("cocycle") != std::string::npos);
    // A kind-A cochain in the kind-B slot.
    CHECK(run(hcs("cup1 " + bad.string() + " --phi tau --psi tau")).exit_code == 2);

    const auto syntax = temp_file("hcc-cli-syntax.hcs", "{\n  \"field\": \"Q\",\n  \"spaces\": {\"a\": [1,}\n}\n");
    const auto r = run(hcs("verify " + syntax.string()));
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("line 3, column 22") != std::string::npos);
    fs::remove(bad);
    fs::remove(syntax);
}

TEST_CASE("exit 3: resource budget exceeded") {
    const auto r = run(hcs("--budget 2000 hc " + fixture_path("B_M2.hcs")));
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("budget") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
    for (const std::string args : {"hc " + fixture_path("signA.hcs"), "cup1 " + fixture_path("cup1-kZ2-signA.hcs"),
                                   "--out json cup2 " + fixture_path("cup2-characteristic-map.hcs"),
                                   "--seed 9 --out json homotopy " + fixture_path("homotopy-M2.hcs")}) {
        INFO(args);
        const auto a = run(hcs(args)), b = run(hcs(args));
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("JSON output contains every verdict of the text output") {
    for (const std::string args : {"verify " + fixture_path("Mtriv-badAYD.hcs"), "hc " + fixture_path("C_H-kZ2.hcs"),
                                   "cup2 " + fixture_path("cup2-kZ2-signA.hcs")}) {
        INFO(args);
        const auto text = run(hcs(args)), json = run(hcs("--out json " + args));
        CHECK(text.exit_code == json.exit_code);
        std::set<std::string> from_text, from_json;
        std::istringstream lines(text.out);
        for (std::string line; std::getline(lines, line);)
            if (line.rfind("PASS ", 0) == 0 || line.rfind("FAIL ", 0) == 0) from_text.insert(line);
        const auto parsed = nlohmann::json::parse(json.out);
        for (const auto& v : parsed["verdicts"]) {
            std::string detail = v["detail"];
            from_json.insert(std::string(v["pass"].get<bool>() ? "PASS " : "FAIL ") + v["check"].get<std::string>() +
                             ": " + (detail.empty() ? std::string("-") : detail));
        }
        CHECK_FALSE(from_text.empty());
        CHECK(from_text == from_json);
    }
}

TEST_CASE("fixture subcommands") {
    const auto list = run(hcs("fixture list"));
    CHECK(list.exit_code == 0);
    CHECK(list.out.find("Mtriv-badAYD (mutant)\n") != std::string::npos);
    const auto dump = run(hcs("fixture dump kZ2"));
    CHECK(dump.exit_code == 0);
    CHECK(dump.out == slurp(fixture_path("kZ2.hcs")));
    CHECK(run(hcs("fixture dump nope 2>/dev/null")).exit_code == 2);
}
