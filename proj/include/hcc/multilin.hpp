// Labeled finite-dimensional spaces, tensor products and multilinear data.
//
// Multi-index convention (used by every module): a basis tuple (i_0, ..., i_k)
// of V_0 (x) ... (x) V_k has flat index
//     ((i_0 * dim V_1 + i_1) * dim V_2 + i_2) ...
// i.e. row-major with the leftmost factor varying slowest.
#pragma once

#include "hcc/exactla.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hcc {

struct Space {
    std::string name;
    std::vector<std::string> basis_labels;
    std::optional<int> grade;

    Space() = default;
    Space(std::string n, std::vector<std::string> labels, std::optional<int> g = std::nullopt);

    std::size_t dim() const { return basis_labels.size(); }
    /// Index of a basis label; throws std::out_of_range naming the label.
    std::size_t index_of(const std::string& label) const;

    friend bool operator==(const Space&, const Space&) = default;
};

/// Tensor product of spaces; labels are joined with "⊗". Grades add when all
/// factors are graded.
Space tensor(const std::vector<Space>& factors);

/// A linear map stored as a target_dim x source_dim matrix.
struct LinMap {
    Space source;
    Space target;
    Matrix matrix;

    LinMap() = default;
    LinMap(Space s, Space t, Matrix m);

    Vec operator()(const Vec& v) const { return matrix * v; }
};

LinMap identity_map(const Space& s);
LinMap compose(const LinMap& f, const LinMap& g);  // f after g
/// Kronecker product, consistent with the leftmost-slowest convention.
Matrix kron(const Matrix& a, const Matrix& b);
LinMap tensor(const LinMap& f, const LinMap& g);

// Mixed-radix index helpers.
std::size_t flat_index(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims);
std::vector<std::size_t> multi_index(std::size_t flat, const std::vector<std::size_t>& dims);
std::size_t product(const std::vector<std::size_t>& dims);
/// dims = (d, d, ..., d) with `count` entries.
std::vector<std::size_t> power_dims(std::size_t d, std::size_t count);

struct TensorElement {
    std::vector<Space> factors;
    Vec coords;

    TensorElement() = default;
    TensorElement(std::vector<Space> f, Vec c);

    std::vector<std::size_t> dims() const;
    /// Pure tensor of basis vectors.
    static TensorElement basis(const std::vector<Space>& factors, const std::vector<std::size_t>& digits);

    friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

/// Leg i of the result is leg perm[i] of the input.  When graded, each
/// transposition of legs of grades p and q contributes (-1)^{pq}.
TensorElement permute_legs(const TensorElement& t, const std::vector<std::size_t>& perm, bool graded);

/// Sign of reordering homogeneous items of the given grades by `perm`
/// (result position i holds input item perm[i]).
int koszul_sign(const std::vector<int>& grades, const std::vector<std::size_t>& perm);

/// Functional on V (x) W (a row of length dim V * dim W) viewed as a map
/// V -> W*: the returned matrix is dim W x dim V.
Matrix curry(const Vec& functional, std::size_t dim_v, std::size_t dim_w);
Vec uncurry(const Matrix& m);

}  // namespace hcc
