#include "hcc/products.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace hcc;
using hcc::test::bundle;
using hcc::test::sign_act;
using hcc::test::sign_mul;
using hcc::test::SignMonomial;

namespace {

// Checks bv = 0 and λv = v directly from the operator matrices.
bool in_ker_b_and_cyclic(const CyclicComplex& cx, std::size_t n, const Vec& v) {
    return is_zero(cx.b(n) * v) && cx.lambda(n) * v == v;
}

// x ∪ φ at p = q = 1 for C = kZ2 acting on signA, computed by hand:
//   φ(c0(a0), c0(a1) c1(a2)) - φ(c0(a0) c1(a1), c1(a2))   (group-likes: Δc = c ⊗ c)
// for x = m ⊗ c0 ⊗ c1 and φ the indicator of (j0, j1).
Rational golden(int c0, int c1, int j0, int j1, int a0, int a1, int a2) {
    auto phi = [&](SignMonomial u, SignMonomial v) { return (u.power == j0 && v.power == j1) ? u.coeff * v.coeff : 0; };
    const SignMonomial x0{1, a0}, x1{1, a1}, x2{1, a2};
    const int first = phi(sign_act(c0, x0), sign_mul(sign_act(c0, x1), sign_act(c1, x2)));
    const int second = phi(sign_mul(sign_act(c0, x0), sign_act(c1, x1)), sign_act(c1, x2));
    return Rational(first - second);
}

}  // namespace

TEST_CASE("smash algebra signA # kZ2") {
    const SymmetryBundle a = bundle("signA"), b = bundle("B=H-kZ2");
    CHECK(validate_smash(a, b).ok());
    const Algebra s = smash_algebra(a, b);
    REQUIRE(s.dim() == 4);
    // (x ⊗ g)(x ⊗ 1) = x (g·x) ⊗ g = -1 ⊗ g; basis index a*2 + b.
    CHECK(s.mul(s.basis(3), s.basis(2)) == Vec{0, -1, 0, 0});
    // (1 ⊗ g)(x ⊗ 1) = g·x ⊗ g = -x ⊗ g.
    CHECK(s.mul(s.basis(1), s.basis(2)) == Vec{0, 0, 0, -1});
}

TEST_CASE("first cup product: cocycle, degree (0, 0) formula, bilinearity, invariance") {
    for (const std::string coeffs : {"", "-Msigma"}) {
        INFO("coefficients" << coeffs);
        const SymmetryBundle a = bundle("signA" + coeffs), b = bundle("B=H-kZ2" + coeffs);
        FirstCup fc(a, b, 2);
        const CyclicComplex& target = fc.target_complex();
        std::mt19937_64 rng(42);
        for (std::size_t p = 0; p <= 2; ++p)
            for (std::size_t q = 0; p + q <= 2; ++q) {
                INFO("p=" << p << " q=" << q);
                const Subspace zb = fc.complex_b().cocycles(p), za = fc.complex_a().cocycles(q);
                if (zb.dim() == 0 || za.dim() == 0) continue;
                for (const Vec& phi : zb.basis_vectors())
                    for (const Vec& psi : za.basis_vectors()) {
                        const Vec out = fc.cup(phi, p, psi, q);
                        CHECK(in_ker_b_and_cyclic(target, p + q, out));
                        if (p == 0 && q == 0)
                            for (std::size_t i = 0; i < 2; ++i)
                                for (std::size_t j = 0; j < 2; ++j) CHECK(out[i * 2 + j] == phi[j] * psi[i]);
                        if (p >= 1) {
                            const auto trials = class_invariance_first(fc, phi, p, psi, q, 1000 + p * 10 + q, 5);
                            CHECK(trials.size() == 5);
                            for (const auto& t : trials) CHECK(t.coboundary);
                        }
                    }
                const Vec phi1 = random_element(zb, rng), phi2 = random_element(zb, rng);
                const Vec psi1 = random_element(za, rng), psi2 = random_element(za, rng);
                const Rational s(3, 2), t(-2);
                CHECK(fc.cup(add(scale(s, phi1), scale(t, phi2)), p, psi1, q) ==
                      add(scale(s, fc.cup(phi1, p, psi1, q)), scale(t, fc.cup(phi2, p, psi1, q))));
                CHECK(fc.cup(phi1, p, add(scale(s, psi1), scale(t, psi2)), q) ==
                      add(scale(s, fc.cup(phi1, p, psi1, q)), scale(t, fc.cup(phi1, p, psi2, q))));
            }
    }
}

TEST_CASE("first cup product rejects non-cocycles") {
    FirstCup fc(bundle("signA"), bundle("B=H-kZ2"), 2);
    CHECK_THROWS_AS(fc.cup(Vec{0, 1}, 0, Vec{1, 0}, 0), PreconditionError);
}

TEST_CASE("H = k: twisted product equals the plain tensor product") {
    const SymmetryBundle a = bundle("A=k"), b = bundle("B=M2");
    FirstCup fc(a, b, 2);
    const auto ha = compute_cohomology(fc.complex_a(), 2), hb = compute_cohomology(fc.complex_b(), 2);
    std::size_t nonzero = 0;
    for (const auto& ra : ha)
        for (const auto& rb : hb) {
            const std::size_t p = rb.degree, q = ra.degree;
            if (p + q > 2) continue;
            TraceCorrespondence tb(fc.complex_b(), p), ta(fc.complex_a(), q);
            for (const Vec& phi : rb.representatives)
                for (const Vec& psi : ra.representatives) {
                    const Vec pt = tb.to_trace(phi), qt = ta.to_trace(psi);
                    const Vec e1 = fc.evaluate(pt, p, qt, q), e2 = fc.evaluate_untwisted(pt, p, qt, q);
                    CHECK(e1 == e2);
                    if (!is_zero(e1)) ++nonzero;
                    CHECK(in_ker_b_and_cyclic(fc.target_complex(), p + q, fc.cup(phi, p, psi, q)));
                }
        }
    CHECK(nonzero > 0);
}

TEST_CASE("Hom_H(C, A) and the evaluation map") {
    const SymmetryBundle c = bundle("C=H-kZ2"), a = bundle("signA");
    HomAlgebra hom(c, a);
    CHECK(hom.dim() == 2);
    CHECK(validate(hom.algebra()).ok());
    const CoalgebraAction act = hopf_action_pairing(c, a);
    CHECK(validate(act, c, a).ok());
    CHECK(hom.check_evaluation(act).ok());
    const Matrix ex = hom.evaluation_map(act, Vec{0, 1}), e1 = hom.evaluation_map(act, Vec{1, 0});
    // e(x)(g) = g·x = -x, e(x)(1) = x.
    CHECK(ex(1, 0) == 1);
    CHECK(ex(1, 1) == -1);
    CHECK(hom.convolve(ex, ex) == e1);
    CHECK_THROWS_AS(hom.coordinates(Matrix::from_rows({{0, 1}, {0, 0}}, 2)), PreconditionError);
}

TEST_CASE("second cup product: outputs are cyclic cocycles, invariant under coboundaries") {
    for (const std::string coeffs : {"", "-Msigma"}) {
        INFO("coefficients" << coeffs);
        const SymmetryBundle c = bundle("C=H-kZ2" + coeffs), a = bundle("signA" + coeffs);
        SecondCup sc(c, a, 2, hopf_action_pairing(c, a));
        for (std::size_t p = 0; p <= 2; ++p)
            for (std::size_t q = 0; p + q <= 2; ++q) {
                INFO("p=" << p << " q=" << q);
                for (const Vec& x : sc.complex_c().cocycles(p).basis_vectors())
                    for (const Vec& psi : sc.complex_a().cocycles(q).basis_vectors()) {
                        CHECK(in_ker_b_and_cyclic(sc.hom_complex(), p + q, sc.cup(x, p, psi, q)));
                        CHECK(in_ker_b_and_cyclic(sc.pullback_complex(), p + q, sc.pullback(x, p, psi, q)));
                        if (p >= 1)
                            for (const auto& t : class_invariance_second(sc, x, p, psi, q, 77, 5)) CHECK(t.coboundary);
                    }
            }
    }
}

TEST_CASE("second cup product, p = q = 1: closed formula on all 8 basis triples") {
    for (const std::string coeffs : {"", "-Msigma"}) {
        INFO("coefficients" << coeffs);
        const SymmetryBundle c = bundle("C=H-kZ2" + coeffs), a = bundle("signA" + coeffs);
        const CoalgebraAction act = hopf_action_pairing(c, a);
        SecondCup sc(c, a, 2, act);
        for (int c0 = 0; c0 < 2; ++c0)
            for (int c1 = 0; c1 < 2; ++c1)
                for (int j0 = 0; j0 < 2; ++j0)
                    for (int j1 = 0; j1 < 2; ++j1) {
                        Vec x(4), phi(4);
                        x[c0 * 2 + c1] = 1;
                        phi[j0 * 2 + j1] = 1;
                        const Vec engine = sc.evaluate_pullback(sc.lift_x(x, 1), 1, sc.lift_psi(phi, 1), 1);
                        const Vec formula = closed_formula_degree_one(c, a, act, x, phi);
                        REQUIRE(engine.size() == 8);
                        for (int a0 = 0; a0 < 2; ++a0)
                            for (int a1 = 0; a1 < 2; ++a1)
                                for (int a2 = 0; a2 < 2; ++a2) {
                                    const Rational expected = golden(c0, c1, j0, j1, a0, a1, a2);
                                    CHECK(engine[a0 * 4 + a1 * 2 + a2] == expected);
                                    CHECK(formula[a0 * 4 + a1 * 2 + a2] == expected);
                                }
                    }
        // Genuine cocycles: the cup product itself matches the formula.
        for (const Vec& x : sc.complex_c().cocycles(1).basis_vectors())
            for (const Vec& psi : sc.complex_a().cocycles(1).basis_vectors())
                CHECK(sc.pullback(x, 1, psi, 1) == closed_formula_degree_one(c, a, act, x, psi));
    }
}
