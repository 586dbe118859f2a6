// Exact rational scalars and dense linear algebra over Q.
//
// Every matrix operation in the engine is exact; there are no tolerances
// anywhere.  Subspaces are stored by their reduced row-echelon basis so that
// two subspaces are equal iff their basis matrices are equal.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hcc {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

/// Raised when a matrix would exceed the configured entry budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by quotient_dim when the denominator is not a subspace of the numerator.
class ContainmentViolation : public std::runtime_error {
public:
    explicit ContainmentViolation(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Process-wide cap on dense matrix entries (default 10^6).
void set_entry_budget(std::size_t entries);
std::size_t entry_budget();

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
/// Accepts an optional leading minus, decimal digits and an optional "/denominator".
/// Rejects zero denominators and any other syntax.
Rational parse_rational(std::string_view text);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Matrix column(const Vec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    void set_row(std::size_t r, const Vec& v);
    void set_col(std::size_t c, const Vec& v);

    Matrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend Vec operator*(const Matrix& a, const Vec& v);

    /// Rows of `a` followed by rows of `b`.
    static Matrix vstack(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& v);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A subspace of Q^ambient, stored as an RREF basis (rows).
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient);

    /// Row span of `rows` (any spanning set, zero rows allowed).
    static Subspace span(const Matrix& rows);
    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Vec> basis_vectors() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Canonical coset representative of v modulo this subspace: pivot
    /// coordinates are eliminated.
    Vec reduce(const Vec& v) const;

    /// Rows spanning the annihilator {w : w . v = 0 for all v in this}.
    Matrix annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel_basis(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);
/// Image of a subspace under m.
Subspace image(const Matrix& m, const Subspace& s);
/// {v : m v in target}.
Subspace preimage(const Matrix& m, const Subspace& target);

/// A particular solution with free variables zero, or nullopt if inconsistent.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& rhs);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// dim a - dim b; throws ContainmentViolation unless b is inside a.
std::size_t quotient_dim(const Subspace& a, const Subspace& b);

/// Basis vectors of `top` (taken in RREF order) completing `bottom` to a
/// basis of `top`; these are canonical representatives of top/bottom.
std::vector<Vec> complement_basis(const Subspace& top, const Subspace& bottom);

/// Coordinates of v in the basis of s (v must lie in s).
std::optional<Vec> coordinates_in(const Subspace& s, const Vec& v);

}  // namespace hcc
