#include "hcc/cyclic.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hcc;
using hcc::test::bundle;

namespace {

const std::vector<std::string> kBundles = {"A=k",     "signA",          "signA-Msigma", "B=H-kZ2", "B=H-kZ2-Msigma",
                                           "B=M2",    "C=H-kZ2",        "C=H-kZ2-Msigma", "C=H-kZ3"};

Matrix power(const Matrix& m, std::size_t k) {
    Matrix r = Matrix::identity(m.rows());
    for (std::size_t i = 0; i < k; ++i) r = m * r;
    return r;
}

// Identities checked directly from the operator matrices, on a spanning set
// of cochains, modulo the null subspace for kind C.
void check_identities(const CyclicComplex& cx, std::size_t n_max) {
    for (std::size_t n = 0; n <= n_max; ++n) {
        INFO("degree " << n);
        const CochainSpace& sp = cx.space(n);
        const Matrix lam = power(cx.lambda(n), n + 1);
        const Subspace cyc = cx.cyclic_cochains(n);
        for (const Vec& v : sp.equivariant.basis_vectors()) {
            CHECK(cx.equivalent(n, lam * v, v));
            if (n + 1 <= cx.max_degree()) CHECK(cx.space(n + 2).null.contains(cx.b(n + 1) * (cx.b(n) * v)));
        }
        if (n <= cx.max_degree())
            for (const Vec& v : cyc.basis_vectors()) {
                const Vec w = cx.b(n) * v;
                CHECK(cx.equivalent(n + 1, cx.lambda(n + 1) * w, w));
            }
    }
}

}  // namespace

TEST_CASE("cocyclic identities hold for all bundles up to degree 3") {
    // B=M2 at degree 4 needs a 1024^2 projection.
    set_entry_budget(1u << 22);
    for (const auto& name : kBundles) {
        INFO(name);
        CyclicComplex cx(bundle(name), 3);
        CHECK(cx.gates().ok());
        check_identities(cx, 3);
    }
}

TEST_CASE("Sweedler bundle identities up to degree 2") {
    CyclicComplex cx(bundle("C=H-sweedler4"), 2);
    CHECK(cx.gates().ok());
    check_identities(cx, 2);
}

TEST_CASE("non-SAYD coefficients break a cocyclic identity") {
    const SAYD bad = *fixture("Mtriv-badAYD").sayd;
    for (const std::string name : {"signA", "B=H-kZ2", "C=H-kZ2"}) {
        INFO(name);
        SymmetryBundle b = bundle(name);
        b.coeffs = bad;
        CyclicComplex cx(b, 3);
        const ValidationReport gates = cx.gates();
        CHECK_FALSE(gates.ok());
        CHECK_FALSE(gates.failed_axioms().empty());
        CHECK_THROWS_AS(compute_cohomology(cx, 2), ConstructionError);
    }
}

TEST_CASE("Sweedler twists: defaults fail the gates, the antipode twist passes") {
    HopfPtr h = sweedler_hopf();
    const SAYD m = regular_sayd(h);
    SymmetryBundle a;
    a.name = "A-sweedler-adjoint";
    a.kind = Kind::A;
    a.hopf = h;
    a.algebra = h->algebra;
    a.action = adjoint_action(h);
    a.coeffs = m;
    REQUIRE(validate(a).ok());
    const SymmetryBundle b = regular_comodule_bundle("B-sweedler", h, m);
    REQUIRE(validate(b).ok());

    ComplexOptions def, alt;
    alt.kind_a = alt.kind_b = Twist::Antipode;
    CHECK_FALSE(CyclicComplex(a, 1, def).gates().ok());
    CHECK_FALSE(CyclicComplex(b, 1, def).gates().ok());
    CHECK(CyclicComplex(a, 1, alt).gates().ok());
    CHECK(CyclicComplex(b, 1, alt).gates().ok());
}

TEST_CASE("hand-computed operators in degree 1") {
    SUBCASE("kind A, trivial coefficients: (λφ)(a0, a1) = -φ(a1, a0)") {
        CyclicComplex cx(bundle("signA"), 1);
        const Matrix& lam = cx.lambda(1);
        for (std::size_t a0 = 0; a0 < 2; ++a0)
            for (std::size_t a1 = 0; a1 < 2; ++a1)
                for (std::size_t j = 0; j < 4; ++j) CHECK(lam(a0 * 2 + a1, j) == (j == a1 * 2 + a0 ? -1 : 0));
    }
    SUBCASE("kind C, trivial coefficients: λ(c0 ⊗ c1) = -(c1 ⊗ c0)") {
        CyclicComplex cx(bundle("C=H-kZ2"), 1);
        const Matrix& lam = cx.lambda(1);
        for (std::size_t c0 = 0; c0 < 2; ++c0)
            for (std::size_t c1 = 0; c1 < 2; ++c1) {
                Vec v(4);
                v[c0 * 2 + c1] = 1;
                Vec w(4);
                w[c1 * 2 + c0] = -1;
                CHECK(lam * v == w);
            }
    }
    SUBCASE("kind A degree 0 coboundary is the commutator") {
        // bφ(a0, a1) = φ(a0 a1) - φ(a1 a0) with trivial coefficients.
        CyclicComplex cx(bundle("signA"), 1);
        CHECK(cx.b(0).is_zero());
    }
}

TEST_CASE("desk-scale cohomology") {
    SUBCASE("ground field: HC = (1, 0, 1)") {
        CyclicComplex cx(bundle("A=k"), 2);
        const auto r = compute_cohomology(cx, 2);
        CHECK(r[0].hc_dim == 1);
        CHECK(r[1].hc_dim == 0);
        CHECK(r[2].hc_dim == 1);
    }
    SUBCASE("C = H = kZ2 with trivial coefficients: HC = (1, 0, 1)") {
        CyclicComplex cx(bundle("C=H-kZ2"), 2);
        const auto r = compute_cohomology(cx, 2);
        CHECK(r[0].hc_dim == 1);
        CHECK(r[1].hc_dim == 0);
        CHECK(r[2].hc_dim == 1);
    }
    SUBCASE("signA: HC^0 is spanned by τ(1) = 1, τ(x) = 0") {
        // τ must be invariant: τ(g·x) = τ(-x) = τ(x) forces τ(x) = 0.
        CyclicComplex cx(bundle("signA"), 1);
        const auto r = compute_cohomology(cx, 0);
        REQUIRE(r[0].hc_dim == 1);
        const Vec& tau = r[0].representatives.at(0);
        REQUIRE(tau.size() == 2);
        CHECK(tau[0] != 0);
        CHECK(tau[1] == 0);
        CHECK(cx.is_cyclic_cocycle(0, Vec{1, 0}));
        CHECK_FALSE(cx.is_cyclic_cocycle(0, Vec{0, 1}));
    }
}

TEST_CASE("catalog HC dimensions agree with the recorded hand values") {
    for (const auto& name : kBundles) {
        const FixtureBundle f = fixture(name);
        if (f.expected_hc.empty()) continue;
        INFO(name);
        const std::size_t n = f.expected_hc.size() - 1;
        CyclicComplex cx(*f.bundle, n);
        const auto r = compute_cohomology(cx, n);
        for (std::size_t d = 0; d <= n; ++d) CHECK(r[d].hc_dim == f.expected_hc[d]);
    }
}

TEST_CASE("coboundary tests") {
    CyclicComplex cx(bundle("signA"), 2);
    const auto r = compute_cohomology(cx, 2);
    for (const Vec& rep : r[2].representatives) CHECK_FALSE(cx.coboundary_test(2, rep).has_value());
    // b of a cyclic 1-cochain is a coboundary.
    for (const Vec& eta : cx.cyclic_cochains(1).basis_vectors()) {
        const Vec phi = cx.b(1) * eta;
        auto w = cx.coboundary_test(2, phi);
        REQUIRE(w.has_value());
        CHECK(cx.equivalent(2, cx.b(1) * *w, phi));
    }
}
