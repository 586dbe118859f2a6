#include "hcc/exactla.hpp"

#include <doctest.h>

using namespace hcc;

namespace {
Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}
}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational("-4") == q(-4));
    CHECK(to_string(q(-2, 4)) == "-1/2");
    CHECK(to_string(q(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("+1"), ParseError);
}

TEST_CASE("rref, rank and kernel of a small matrix") {
    // Rows (1 2 3), (2 4 6), (1 0 1): rank 2, kernel spanned by (-1, -1, 1).
    Matrix m = Matrix::from_rows({{q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(1), q(0), q(1)}}, 3);
    CHECK(rank(m) == 2);
    Subspace k = kernel_basis(m);
    REQUIRE(k.dim() == 1);
    CHECK(k.contains(Vec{q(-1), q(-1), q(1)}));
    CHECK(is_zero(m * k.basis().row(0)));
    CHECK(image(m).dim() == 2);
}

TEST_CASE("solve_linear finds a solution or reports inconsistency") {
    Matrix m = Matrix::from_rows({{q(1), q(1)}, {q(2), q(2)}}, 2);
    auto s = solve_linear(m, Vec{q(3), q(6)});
    REQUIRE(s.has_value());
    CHECK(m * *s == Vec{q(3), q(6)});
    CHECK_FALSE(solve_linear(m, Vec{q(3), q(5)}).has_value());
}

TEST_CASE("subspace operations") {
    Subspace a = Subspace::span({Vec{q(1), q(0), q(0)}, Vec{q(0), q(1), q(0)}}, 3);
    Subspace b = Subspace::span({Vec{q(0), q(1), q(0)}, Vec{q(0), q(0), q(1)}}, 3);
    CHECK(intersection(a, b).dim() == 1);
    CHECK(intersection(a, b).contains(Vec{q(0), q(7), q(0)}));
    CHECK(subspace_sum(a, b) == Subspace::full(3));
    CHECK(quotient_dim(a, intersection(a, b)) == 1);
    CHECK_THROWS_AS(quotient_dim(a, b), ContainmentViolation);
    CHECK(a.reduce(Vec{q(1), q(2), q(3)}) == Vec{q(0), q(0), q(3)});
    CHECK(complement_basis(a, intersection(a, b)).size() == 1);
    auto c = coordinates_in(a, Vec{q(2), q(-1), q(0)});
    REQUIRE(c.has_value());
    CHECK(*c == Vec{q(2), q(-1)});
    Matrix ann = a.annihilator();
    REQUIRE(ann.rows() == 1);
    CHECK(ann.row(0) == Vec{q(0), q(0), q(1)});
}

TEST_CASE("preimage") {
    Matrix m = Matrix::from_rows({{q(1), q(0)}, {q(0), q(0)}}, 2);
    Subspace target = Subspace::zero(2);
    CHECK(preimage(m, target) == Subspace::span({Vec{q(0), q(1)}}, 2));
}

TEST_CASE("entry budget") {
    const std::size_t saved = entry_budget();
    set_entry_budget(100);
    CHECK_THROWS_AS(Matrix(20, 20), BudgetExceeded);
    CHECK_NOTHROW(Matrix(10, 10));
    set_entry_budget(saved);
}
