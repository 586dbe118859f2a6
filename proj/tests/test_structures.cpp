#include "hcc/fixtures.hpp"
#include "hcc/structures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hcc;

TEST_CASE("every non-mutant fixture passes its validator") {
    for (const auto& name : fixture_names()) {
        const FixtureBundle f = fixture(name);
        if (f.mutant) continue;
        INFO(name);
        const ValidationReport r = f.validate();
        for (const auto& c : r.checks) {
            INFO(c.axiom << " " << c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("each mutant fails exactly the recorded axioms, with a witness") {
    const auto mutants = mutant_names();
    CHECK(mutants.size() >= 20);
    for (const auto& name : mutants) {
        const FixtureBundle f = fixture(name);
        INFO(name);
        REQUIRE(f.mutant);
        const ValidationReport r = f.validate();
        auto failed = r.failed_axioms();
        std::sort(failed.begin(), failed.end());
        CHECK(failed == f.expected_failures);
        const AxiomCheck* primary = r.find(f.primary_axiom);
        REQUIRE(primary != nullptr);
        CHECK_FALSE(primary->pass);
        CHECK_FALSE(primary->witness.empty());
    }
}

TEST_CASE("catalog lookup errors list the names") {
    CHECK_THROWS_AS(fixture("no-such-thing"), CatalogError);
    try {
        fixture("no-such-thing");
    } catch (const CatalogError& e) {
        CHECK(std::string(e.what()).find("kZ2") != std::string::npos);
    }
}

TEST_CASE("Sweedler antipode has order four") {
    HopfPtr h = sweedler_hopf();
    REQUIRE(h->dim() == 4);
    const Matrix s2 = h->antipode * h->antipode;
    CHECK_FALSE(s2 == Matrix::identity(4));
    CHECK(s2 * s2 == Matrix::identity(4));
    CHECK(h->antipode_invertible());
    CHECK(h->antipode * h->antipode_inv() == Matrix::identity(4));
}

TEST_CASE("group-likes and characters of kZ2") {
    HopfPtr h = fixture("kZ2").hopf;
    CHECK(is_group_like(*h, Vec{0, 1}));
    CHECK_FALSE(is_group_like(*h, Vec{1, 1}));
    CHECK(is_character(*h, Vec{1, -1}));
    CHECK(is_character(*h, Vec{1, 1}));
    CHECK_FALSE(is_character(*h, Vec{1, 2}));
}

TEST_CASE("iterated coproduct of a group-like is its tensor power") {
    HopfPtr h = fixture("kZ3").hopf;
    const TensorElement t = iterated_coproduct(*h, Vec{0, 1, 0}, 2);
    const TensorElement expected = TensorElement::basis({h->space(), h->space(), h->space()}, {1, 1, 1});
    CHECK(t.coords == expected.coords);
}

TEST_CASE("convolution inverse on kZ2") {
    const HopfPtr h = fixture("kZ2").hopf;
    const Coalgebra& c = h->coalgebra;
    // On group-likes convolution is pointwise.
    const Vec chi{2, Rational(-1, 3)};
    const Vec inv = convolution_inverse(c, chi);
    CHECK(inv == Vec{Rational(1, 2), -3});
    CHECK(convolve(c, chi, inv) == c.counit);
    CHECK_THROWS_AS(convolution_inverse(c, Vec{0, 1}), ConvolutionNonInvertible);
}

TEST_CASE("modular pair module is SAYD exactly when the pair is admissible") {
    HopfPtr h = fixture("kZ2").hopf;
    CHECK(validate(h, ModularPair{Vec{1, 1}, Vec{0, 1}}).ok());
    CHECK(validate(modular_pair_module(h, ModularPair{Vec{1, 1}, Vec{0, 1}})).ok());
    // δ = sign character with σ = g fails stability: g·1 = -1 but 1^(-1)·1^(0) must equal 1.
    CHECK_FALSE(validate(modular_pair_module(h, ModularPair{Vec{1, -1}, Vec{0, 1}})).ok());
}
