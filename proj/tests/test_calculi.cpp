#include "hcc/calculi.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hcc;
using hcc::test::bundle;

namespace {
Vec basis_vec(std::size_t n, std::size_t i) { return unit_vector(n, i); }
}  // namespace

TEST_CASE("universal calculus dimensions and differential") {
    const Algebra a = *bundle("signA").algebra;  // basis 1, x
    UniversalCalculus calc(a, 3);
    CHECK(calc.dim(0) == 3);
    CHECK(calc.dim(1) == 6);
    CHECK(calc.dim(2) == 12);
    const std::size_t one = 0, x = 1, t = calc.tilde_one();
    // d(x dx) = 1̃ dx dx, d(1̃ dx) = 0.
    CHECK(calc.apply_d(1, basis_vec(6, calc.index({x, x}))) == basis_vec(12, calc.index({t, x, x})));
    CHECK(is_zero(calc.apply_d(1, basis_vec(6, calc.index({t, x})))));
    // d(1) is not zero: 1 and 1̃ are different elements.
    CHECK(calc.apply_d(0, basis_vec(3, one)) == basis_vec(6, calc.index({t, one})));
    CHECK(calc.check_dg().ok());
}

TEST_CASE("product normal form uses (da)b = d(ab) - a db") {
    const Algebra a = *bundle("signA").algebra;
    UniversalCalculus calc(a, 2);
    const std::size_t one = 0, x = 1, t = calc.tilde_one();
    // (1̃ dx) · x = 1̃ d(x x) - x dx = 1̃ d1 - x dx.
    const Vec lhs = calc.mul(1, basis_vec(6, calc.index({t, x})), 0, basis_vec(3, x));
    const Vec rhs = sub(basis_vec(6, calc.index({t, one})), basis_vec(6, calc.index({x, x})));
    CHECK(lhs == rhs);
    // x · (x dx) = (x x) dx = 1 dx; 1̃ is the unit.
    CHECK(calc.mul(0, basis_vec(3, x), 1, basis_vec(6, calc.index({x, x}))) == basis_vec(6, calc.index({one, x})));
    CHECK(calc.mul(0, basis_vec(3, t), 1, basis_vec(6, calc.index({x, x}))) == basis_vec(6, calc.index({x, x})));
}

TEST_CASE("H-equivariance of Ω A and Ω B") {
    OmegaA oa(bundle("signA"), 2);
    CHECK(oa.check_equivariance().ok());
    OmegaB ob(bundle("B=H-kZ2"), 2);
    CHECK(ob.check_equivariance().ok());
    OmegaA os(bundle("signA-Msigma"), 1);
    CHECK(os.check_equivariance().ok());
}

TEST_CASE("dual algebra of kZ2 is k x k") {
    const Algebra d = dual_algebra(fixture("kZ2").hopf->coalgebra);
    CHECK(d.mul(basis_vec(2, 0), basis_vec(2, 0)) == basis_vec(2, 0));
    CHECK(d.mul(basis_vec(2, 1), basis_vec(2, 1)) == basis_vec(2, 1));
    CHECK(is_zero(d.mul(basis_vec(2, 0), basis_vec(2, 1))));
    CHECK(d.unit == Vec{1, 1});
}

TEST_CASE("universal DG coalgebra axioms") {
    OmegaCC theta(bundle("C=H-kZ2"), 2);
    CHECK(theta.dim(0) == 3);
    CHECK(theta.dim(1) == 6);
    CHECK(theta.check_dg().ok());
    OmegaCC theta3(bundle("C=H-kZ3"), 2);
    CHECK(theta3.check_dg().ok());
}

TEST_CASE("smash DG algebra axioms") {
    OmegaA oa(bundle("signA"), 2);
    OmegaB ob(bundle("B=H-kZ2"), 2);
    SmashDG s(oa, ob, 2);
    CHECK(s.check_dg().ok());
    // Unit times anything is that thing.
    const BigradedVec e = s.basis(1, 0, 3);
    CHECK(s.mul(s.unit(), e) == e);
    CHECK(s.mul(e, s.unit()) == e);
}

TEST_CASE("convolution DG algebra axioms on sample maps") {
    OmegaCC theta(bundle("C=H-kZ2"), 2);
    OmegaA omega(bundle("signA"), 2);
    ConvolutionDG conv(theta, omega, 2, 2);
    std::vector<BigradedMap> samples;
    for (std::size_t i = 0; i <= 1; ++i)
        for (std::size_t j = 0; j <= 1; ++j) {
            BigradedMap f = conv.zero_map(i, j);
            Matrix& m = f.at({i, j});
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Rational(static_cast<long>((r * 7 + c * 3) % 5) - 2);
            samples.push_back(f);
        }
    samples.push_back(conv.unit());
    CHECK(conv.check_dg(samples).ok());
    CHECK(conv.mul(conv.unit(), samples[1]) == samples[1]);
    CHECK(homogeneous_degree(samples[3]) == std::optional<std::size_t>(2));
}
