#include "hcc/multilin.hpp"

#include <set>
#include <stdexcept>

namespace hcc {

Space::Space(std::string n, std::vector<std::string> labels, std::optional<int> g)
    : name(std::move(n)), basis_labels(std::move(labels)), grade(g) {
    std::set<std::string> seen(basis_labels.begin(), basis_labels.end());
    if (seen.size() != basis_labels.size()) throw std::invalid_argument("space '" + name + "' has duplicate basis labels");
}

std::size_t Space::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < basis_labels.size(); ++i)
        if (basis_labels[i] == label) return i;
    throw std::out_of_range("label '" + label + "' not in space '" + name + "'");
}

std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t p = 1;
    for (auto d : dims) p *= d;
    return p;
}

std::vector<std::size_t> power_dims(std::size_t d, std::size_t count) { return std::vector<std::size_t>(count, d); }

std::size_t flat_index(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + digits[i];
    return idx;
}

std::vector<std::size_t> multi_index(std::size_t flat, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> digits(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
        digits[i] = flat % dims[i];
        flat /= dims[i];
    }
    return digits;
}

Space tensor(const std::vector<Space>& factors) {
    std::vector<std::size_t> dims;
    std::string name;
    bool graded = !factors.empty();
    int grade = 0;
    for (const auto& f : factors) {
        dims.push_back(f.dim());
        name += (name.empty() ? "" : "⊗") + f.name;
        if (f.grade) grade += *f.grade; else graded = false;
    }
    std::vector<std::string> labels;
    const std::size_t total = product(dims);
    labels.reserve(total);
    for (std::size_t flat = 0; flat < total; ++flat) {
        auto digits = multi_index(flat, dims);
        std::string l;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (i) l += "⊗";
            l += factors[i].basis_labels[digits[i]];
        }
        labels.push_back(std::move(l));
    }
    return Space(name, std::move(labels), graded ? std::optional<int>(grade) : std::nullopt);
}

LinMap::LinMap(Space s, Space t, Matrix m) : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
        throw std::invalid_argument("LinMap: matrix shape does not match source/target");
}

LinMap identity_map(const Space& s) { return LinMap(s, s, Matrix::identity(s.dim())); }

LinMap compose(const LinMap& f, const LinMap& g) {
    if (f.source.dim() != g.target.dim()) throw std::invalid_argument("compose: dimension mismatch");
    return LinMap(g.source, f.target, f.matrix * g.matrix);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (b(k, l) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

LinMap tensor(const LinMap& f, const LinMap& g) {
    return LinMap(tensor({f.source, g.source}), tensor({f.target, g.target}), kron(f.matrix, g.matrix));
}

TensorElement::TensorElement(std::vector<Space> f, Vec c) : factors(std::move(f)), coords(std::move(c)) {
    if (coords.size() != product(dims())) throw std::invalid_argument("TensorElement: coordinate length mismatch");
}

std::vector<std::size_t> TensorElement::dims() const {
    std::vector<std::size_t> d;
    for (const auto& f : factors) d.push_back(f.dim());
    return d;
}

TensorElement TensorElement::basis(const std::vector<Space>& factors, const std::vector<std::size_t>& digits) {
    std::vector<std::size_t> d;
    for (const auto& f : factors) d.push_back(f.dim());
    Vec c(product(d));
    c[flat_index(digits, d)] = 1;
    return TensorElement(factors, std::move(c));
}

int koszul_sign(const std::vector<int>& grades, const std::vector<std::size_t>& perm) {
    // Count inversions weighted by grade parity.
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j] && (grades[perm[i]] * grades[perm[j]]) % 2 != 0) sign = -sign;
    return sign;
}

TensorElement permute_legs(const TensorElement& t, const std::vector<std::size_t>& perm, bool graded) {
    const std::size_t k = t.factors.size();
    if (perm.size() != k) throw std::invalid_argument("permute_legs: permutation length mismatch");
    std::vector<Space> out_factors;
    std::vector<int> grades;
    for (std::size_t i = 0; i < k; ++i) {
        out_factors.push_back(t.factors[perm[i]]);
        if (graded) {
            if (!t.factors[i].grade) throw std::invalid_argument("permute_legs: graded permutation of ungraded leg");
            grades.push_back(*t.factors[i].grade);
        }
    }
    const int sign = graded ? koszul_sign(grades, perm) : 1;
    const auto in_dims = t.dims();
    std::vector<std::size_t> out_dims;
    for (auto p : perm) out_dims.push_back(in_dims[p]);
    Vec out(t.coords.size());
    for (std::size_t flat = 0; flat < t.coords.size(); ++flat) {
        if (t.coords[flat] == 0) continue;
        auto digits = multi_index(flat, in_dims);
        std::vector<std::size_t> od(k);
        for (std::size_t i = 0; i < k; ++i) od[i] = digits[perm[i]];
        out[flat_index(od, out_dims)] = sign * t.coords[flat];
    }
    return TensorElement(std::move(out_factors), std::move(out));
}

Matrix curry(const Vec& functional, std::size_t dim_v, std::size_t dim_w) {
    if (functional.size() != dim_v * dim_w) throw std::invalid_argument("curry: functional length mismatch");
    Matrix m(dim_w, dim_v);
    for (std::size_t i = 0; i < dim_v; ++i)
        for (std::size_t j = 0; j < dim_w; ++j) m(j, i) = functional[i * dim_w + j];
    return m;
}

Vec uncurry(const Matrix& m) {
    Vec f(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) f[i * m.rows() + j] = m(j, i);
    return f;
}

}  // namespace hcc
