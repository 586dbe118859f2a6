#include "hcc/specfile.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace hcc;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<fs::path> shipped_files() {
    std::vector<fs::path> v;
    for (const auto& e : fs::directory_iterator(FIXTURE_DIR))
        if (e.path().extension() == ".hcs") v.push_back(e.path());
    std::sort(v.begin(), v.end());
    return v;
}

std::string kz2_text() { return slurp(hcc::test::fixture_path("kZ2.hcs")); }

std::string replace_first(std::string s, const std::string& from, const std::string& to) {
    const auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("shipped files are canonical: parse then serialize is byte-identical") {
    const auto files = shipped_files();
    CHECK(files.size() >= 20);
    for (const auto& f : files) {
        INFO(f.filename().string());
        const std::string text = slurp(f);
        const SpecDocument doc = parse_spec(text);
        CHECK(serialize_spec(doc) == text);
        CHECK(parse_spec(serialize_spec(doc)) == doc);
        CHECK_NOTHROW(ResolvedSpec{doc});
    }
}

TEST_CASE("shipped files equal freshly generated ones") {
    const fs::path dir = fs::temp_directory_path() / "hcc-fixture-regen";
    fs::remove_all(dir);
    REQUIRE(hcc::test::run(std::string(HCS_FIXTURES_BIN) + " " + dir.string()).exit_code == 0);
    std::set<std::string> fresh, shipped;
    for (const auto& e : fs::directory_iterator(dir)) fresh.insert(e.path().filename().string());
    for (const auto& p : shipped_files()) shipped.insert(p.filename().string());
    CHECK(fresh == shipped);
    for (const auto& name : fresh) {
        INFO(name);
        CHECK(slurp(dir / name) == slurp(fs::path(FIXTURE_DIR) / name));
    }
    fs::remove_all(dir);
}

TEST_CASE("catalog entries survive export and re-import") {
    for (const auto& name : fixture_names()) {
        INFO(name);
        const FixtureBundle f = fixture(name);
        const SpecDocument doc = fixture_document(f);
        CHECK(parse_spec(serialize_spec(doc)) == doc);
        const ResolvedSpec r(doc);
        if (f.bundle) {
            const SymmetryBundle& b = r.bundle(name);
            CHECK(b.kind == f.bundle->kind);
            CHECK(b.hopf->algebra.mult == f.bundle->hopf->algebra.mult);
            CHECK(b.hopf->coalgebra.comult == f.bundle->hopf->coalgebra.comult);
            CHECK(b.hopf->antipode == f.bundle->hopf->antipode);
            if (b.algebra) CHECK(b.algebra->mult == f.bundle->algebra->mult);
            if (b.coalgebra) CHECK(b.coalgebra->comult == f.bundle->coalgebra->comult);
            if (b.action) CHECK(b.action->act == f.bundle->action->act);
            if (b.coaction) CHECK(b.coaction->coact == f.bundle->coaction->coact);
            CHECK(b.coeffs.action.act == f.bundle->coeffs.action.act);
            CHECK(b.coeffs.coaction.coact == f.bundle->coeffs.coaction.coact);
        } else if (f.type == FixtureType::Hopf) {
            const HopfPtr h = r.hopf(name);
            CHECK(h->algebra.mult == f.hopf->algebra.mult);
            CHECK(h->algebra.unit == f.hopf->algebra.unit);
            CHECK(h->coalgebra.comult == f.hopf->coalgebra.comult);
            CHECK(h->coalgebra.counit == f.hopf->coalgebra.counit);
            CHECK(h->antipode == f.hopf->antipode);
        }
    }
}

TEST_CASE("cochains and jobs resolve") {
    const ResolvedSpec r(parse_spec_file(hcc::test::fixture_path("cup2-kZ2-signA.hcs")));
    const auto& x = r.cochain("x");
    CHECK(x.bundle == "C=H-kZ2");
    CHECK(x.degree == 1);
    CHECK(x.coords == Vec{1, 2, 0, -1});
    CHECK(r.cochain("psi").coords == Vec{0, 1, 3, Rational(1, 2)});
    REQUIRE(r.document().jobs.size() == 1);
    CHECK(r.document().jobs[0].command == "cup2");
    CHECK(r.document().jobs[0].args.at("action") == "pairing");
}

TEST_CASE("canonicalization sorts entries and drops zeros") {
    std::string text = kz2_text();
    // Swap two mult entries and add a zero entry; the canonical text is unchanged.
    text = replace_first(text, R"({"inputs":["1","1"],"output":["1"],"value":"1"},
        {"inputs":["1","g"],"output":["g"],"value":"1"},)",
                         R"({"inputs":["1","g"],"output":["g"],"value":"2/2"},
        {"inputs":["1","1"],"output":["1"],"value":"1"},
        {"inputs":["1","1"],"output":["g"],"value":"0"},)");
    CHECK(serialize_spec(parse_spec(text)) == kz2_text());
}

TEST_CASE("malformed input: errors carry positions") {
    SUBCASE("zero denominator") {
        const std::string text = replace_first(kz2_text(), R"("value":"1")", R"("value":"1/0")");
        try {
            parse_spec(text);
            FAIL("no error");
        } catch (const SpecParseError& e) {
            CHECK(std::string(e.what()).find("zero denominator") != std::string::npos);
            CHECK(e.where().find("line 9, column") != std::string::npos);
            CHECK(e.where().find("/structures/kZ2/antipode/0/value") != std::string::npos);
        }
    }
    SUBCASE("undefined label") {
        const std::string text = replace_first(kz2_text(), R"({"inputs":["g","g"])", R"({"inputs":["g","h"])");
        try {
            parse_spec(text);
            FAIL("no error");
        } catch (const SpecResolutionError& e) {
            CHECK(std::string(e.what()).find("'h'") != std::string::npos);
            CHECK(e.where().find("line ") != std::string::npos);
        }
    }
    SUBCASE("undefined space") {
        const std::string text = replace_first(kz2_text(), R"("space": "kZ2")", R"("space": "kZ9")");
        try {
            parse_spec(text);
            FAIL("no error");
        } catch (const SpecResolutionError& e) {
            CHECK(std::string(e.what()).find("kZ9") != std::string::npos);
        }
    }
    SUBCASE("syntax error") {
        try {
            parse_spec("{\n  \"field\": \"Q\",\n  \"spaces\": {\"a\": [1,}\n}\n");
            FAIL("no error");
        } catch (const SpecParseError& e) {
            CHECK(e.where() == "line 3, column 22");
        }
    }
    SUBCASE("unknown key") {
        CHECK_THROWS_AS(parse_spec(replace_first(kz2_text(), R"("field": "Q")", R"("field": "Q", "extra": 1)")),
                        SpecParseError);
    }
    SUBCASE("duplicate key") {
        CHECK_THROWS_AS(parse_spec(replace_first(kz2_text(), R"("field": "Q")", R"("field": "Q", "field": "Q")")),
                        SpecParseError);
    }
    SUBCASE("duplicate entry") {
        CHECK_THROWS_AS(parse_spec(replace_first(kz2_text(), R"({"inputs":["1","1"],"output":["1"],"value":"1"},)",
                                                 R"({"inputs":["1","1"],"output":["1"],"value":"1"},
        {"inputs":["1","1"],"output":["1"],"value":"1"},)")),
                        SpecParseError);
    }
    SUBCASE("float value") {
        CHECK_THROWS_AS(parse_spec(replace_first(kz2_text(), R"("value":"1")", R"("value":1.0)")), SpecParseError);
    }
    SUBCASE("unknown structure type") {
        CHECK_THROWS_AS(parse_spec(replace_first(kz2_text(), R"("type": "hopf")", R"("type": "bialgebra")")),
                        SpecParseError);
    }
}
