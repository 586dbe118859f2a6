#include "hcc/multilin.hpp"

#include <doctest.h>

using namespace hcc;

TEST_CASE("mixed-radix indices are leftmost-slowest") {
    const std::vector<std::size_t> dims{2, 3, 4};
    CHECK(flat_index({1, 2, 3}, dims) == 1 * 12 + 2 * 4 + 3);
    CHECK(multi_index(23, dims) == std::vector<std::size_t>{1, 2, 3});
    CHECK(product(dims) == 24);
    CHECK(power_dims(3, 2) == std::vector<std::size_t>{3, 3});
}

TEST_CASE("kron matches the index convention") {
    Matrix a = Matrix::from_rows({{1, 2}, {3, 4}}, 2);
    Matrix b = Matrix::from_rows({{0, 1}, {1, 0}}, 2);
    Matrix k = kron(a, b);
    // (a ⊗ b)(i*2+k, j*2+l) = a(i,j) b(k,l)
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) CHECK(k(i * 2 + r, j * 2 + c) == a(i, j) * b(r, c));
}

TEST_CASE("leg permutation and Koszul signs") {
    Space odd("V", {"v0", "v1"}, 1);
    TensorElement t = TensorElement::basis({odd, odd}, {0, 1});
    TensorElement swapped = permute_legs(t, {1, 0}, true);
    TensorElement expected = TensorElement::basis({odd, odd}, {1, 0});
    CHECK(swapped.coords == scale(Rational(-1), expected.coords));
    CHECK(permute_legs(t, {1, 0}, false).coords == expected.coords);
    CHECK(koszul_sign({1, 1, 1}, {2, 0, 1}) == 1);
    CHECK(koszul_sign({1, 1, 0}, {1, 0, 2}) == -1);
    CHECK(koszul_sign({2, 1}, {1, 0}) == 1);
}

TEST_CASE("curry and uncurry are inverse") {
    Vec f{1, 2, 3, 4, 5, 6};
    Matrix m = curry(f, 2, 3);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 2);
    CHECK(m(2, 1) == 6);
    CHECK(uncurry(m) == f);
}

TEST_CASE("tensor of spaces joins labels and adds grades") {
    Space a("A", {"1", "x"}, 1), b("B", {"u"}, 2);
    Space t = tensor({a, b});
    CHECK(t.dim() == 2);
    CHECK(t.basis_labels[1] == "x⊗u");
    CHECK(t.grade == 3);
    CHECK(t.index_of("x⊗u") == 1);
    CHECK_THROWS(t.index_of("nope"));
}
