#include "hcc/exactla.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

namespace hcc {

namespace {

std::atomic<std::size_t> g_entry_budget{1'000'000};

void check_budget(std::size_t rows, std::size_t cols) {
    if (rows != 0 && cols > entry_budget() / rows) {
        throw BudgetExceeded("matrix of " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " entries exceeds budget of " + std::to_string(entry_budget()));
    }
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

void set_entry_budget(std::size_t entries) { g_entry_budget = entries; }
std::size_t entry_budget() { return g_entry_budget; }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'");
    Rational q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_budget(rows, cols);
    data_.resize(rows * cols);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Matrix Matrix::column(const Vec& v) {
    Matrix m(v.size(), 1);
    m.set_col(0, v);
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

void Matrix::set_col(std::size_t c, const Vec& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_col: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (bkj != 0) out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x *= s;
    return out;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vec out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        Rational acc = 0;
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (v[k] != 0 && a(i, k) != 0) acc += a(i, k) * v[k];
        }
        out[i] = acc;
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    std::size_t cols = a.rows_ ? a.cols_ : b.cols_;
    if (a.rows_ && b.rows_ && a.cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
    Matrix out(a.rows_ + b.rows_, cols);
    std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
    return out;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

Vec add(const Vec& a, const Vec& b) {
    Vec out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

Vec scale(const Rational& s, const Vec& v) {
    Vec out = v;
    for (auto& x : out) x *= s;
    return out;
}

// ---------------------------------------------------------------- RREF

RrefResult rref(const Matrix& m) {
    RrefResult res{m, {}};
    Matrix& a = res.reduced;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (a(r, j) != 0) a(r, j) *= inv;
        // Nonzero columns of the pivot row, to skip zeros in the update.
        std::vector<std::size_t> support;
        for (std::size_t j = c; j < cols; ++j)
            if (a(r, j) != 0) support.push_back(j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j : support) a(i, j) -= f * a(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span(const Matrix& rows) {
    Subspace s(rows.cols());
    if (rows.rows() == 0) return s;
    RrefResult rr = rref(rows);
    Matrix b(rr.rank(), rows.cols());
    for (std::size_t i = 0; i < rr.rank(); ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) b(i, j) = rr.reduced(i, j);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(rr.pivots);
    return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
    return span(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

std::vector<Vec> Subspace::basis_vectors() const {
    std::vector<Vec> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
}

Vec Subspace::reduce(const Vec& v) const {
    Vec out = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Rational f = out[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (basis_(i, j) != 0) out[j] -= f * basis_(i, j);
    }
    return out;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Matrix Subspace::annihilator() const {
    // Free columns of the RREF basis parametrize the annihilator.
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<Vec> rows;
    for (std::size_t f = 0; f < ambient_; ++f) {
        if (is_pivot[f]) continue;
        Vec w(ambient_);
        w[f] = 1;
        for (std::size_t i = 0; i < pivots_.size(); ++i) w[pivots_[i]] = -basis_(i, f);
        rows.push_back(std::move(w));
    }
    return Matrix::from_rows(rows, ambient_);
}

Subspace kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> vecs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(vecs, m.cols());
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace image(const Matrix& m, const Subspace& s) {
    if (s.dim() == 0) return Subspace(m.rows());
    return Subspace::span((m * s.basis().transpose()).transpose());
}

Subspace preimage(const Matrix& m, const Subspace& target) {
    Matrix ann = target.annihilator();
    if (ann.rows() == 0) return Subspace::full(m.cols());
    return kernel_basis(ann * m);
}

std::optional<Vec> solve_linear(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.reduced(i, m.cols());
    return x;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace_sum: ambient mismatch");
    return Subspace::span(Matrix::vstack(a.basis(), b.basis()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersection: ambient mismatch");
    Matrix ann = Matrix::vstack(a.annihilator(), b.annihilator());
    if (ann.rows() == 0) return Subspace::full(a.ambient_dim());
    return kernel_basis(ann);
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || !a.contains(b)) {
        throw ContainmentViolation("quotient_dim: denominator is not contained in numerator");
    }
    return a.dim() - b.dim();
}

std::vector<Vec> complement_basis(const Subspace& top, const Subspace& bottom) {
    std::vector<Vec> out;
    Subspace acc = bottom;
    for (const Vec& v : top.basis_vectors()) {
        if (acc.contains(v)) continue;
        out.push_back(bottom.reduce(v));
        acc = subspace_sum(acc, Subspace::span({v}, top.ambient_dim()));
    }
    return out;
}

std::optional<Vec> coordinates_in(const Subspace& s, const Vec& v) {
    if (!s.contains(v)) return std::nullopt;
    // Basis is RREF: the coordinate on basis row i is v at pivot i.
    Vec c(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) c[i] = v[s.pivots()[i]];
    return c;
}

}  // namespace hcc
