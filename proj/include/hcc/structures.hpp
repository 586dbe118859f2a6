// Structure-constant descriptions of algebras, coalgebras, Hopf algebras,
// (co)actions and SAYD modules, and an exhaustive axiom verifier.
//
// Storage conventions (see multilin.hpp for the multi-index convention):
//   Algebra::mult       d x d^2      column i*d+j holds e_i e_j
//   Coalgebra::comult   d^2 x d      column i holds Δ(e_i)
//   Action::act         dV x dH*dV   column h*dV+v holds h·v
//   Coaction::coact     dH*dV x dV   column v holds v^(-1) ⊗ v^(0)  (left coaction)
#pragma once

#include "hcc/exactla.hpp"
#include "hcc/multilin.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcc {

class SpecFormatError : public std::runtime_error {
public:
    explicit SpecFormatError(const std::string& what) : std::runtime_error(what) {}
};

class NonInvertibleAntipode : public std::runtime_error {
public:
    explicit NonInvertibleAntipode(const std::string& what) : std::runtime_error(what) {}
};

class ConvolutionNonInvertible : public std::runtime_error {
public:
    explicit ConvolutionNonInvertible(const std::string& what) : std::runtime_error(what) {}
};

/// Sparse linear combination of flat basis indices.
using Sparse = std::vector<std::pair<std::size_t, Rational>>;
Sparse sparse(const Vec& v);

struct Algebra {
    Space space;
    Matrix mult;
    Vec unit;

    Algebra() = default;
    Algebra(Space s, Matrix m, Vec u);

    std::size_t dim() const { return space.dim(); }
    Vec mul(const Vec& a, const Vec& b) const;
    /// e_i e_j as a sparse vector.
    const Sparse& mul_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    Vec basis(std::size_t i) const;

private:
    std::vector<Sparse> table_;
};

struct Coalgebra {
    Space space;
    Matrix comult;
    Vec counit;

    Coalgebra() = default;
    Coalgebra(Space s, Matrix c, Vec e);

    std::size_t dim() const { return space.dim(); }
    /// Δ(e_i) as a sparse vector over pairs (flat index j*d+k).
    const Sparse& comult_basis(std::size_t i) const { return table_[i]; }
    Vec coproduct(const Vec& c) const { return comult * c; }
    Rational eps(const Vec& c) const;

private:
    std::vector<Sparse> table_;
};

struct Hopf {
    Algebra algebra;
    Coalgebra coalgebra;
    Matrix antipode;

    Hopf() = default;
    Hopf(Algebra a, Coalgebra c, Matrix s);

    std::size_t dim() const { return algebra.dim(); }
    const Space& space() const { return algebra.space; }
    bool antipode_invertible() const { return antipode_inv_.has_value(); }
    const Matrix& antipode_inv() const;

private:
    std::optional<Matrix> antipode_inv_;
};

using HopfPtr = std::shared_ptr<const Hopf>;

/// Left H-module structure on a carrier space.
struct Action {
    HopfPtr hopf;
    Space carrier;
    Matrix act;

    Action() = default;
    Action(HopfPtr h, Space c, Matrix a);

    std::size_t dim() const { return carrier.dim(); }
    /// Matrix of the basis element h acting on the carrier.
    const Matrix& op(std::size_t h) const { return ops_[h]; }
    /// Matrix of an arbitrary element of H.
    Matrix op(const Vec& h) const;
    Vec apply(const Vec& h, const Vec& v) const { return op(h) * v; }

private:
    std::vector<Matrix> ops_;
};

/// Trivial action h·v = ε(h)v.
Action trivial_action(HopfPtr h, Space carrier);

/// Left H-comodule structure v -> v^(-1) ⊗ v^(0).
struct Coaction {
    HopfPtr hopf;
    Space carrier;
    Matrix coact;

    Coaction() = default;
    Coaction(HopfPtr h, Space c, Matrix m);

    std::size_t dim() const { return carrier.dim(); }
    struct Term {
        std::size_t h;
        std::size_t v;
        Rational coeff;
    };
    const std::vector<Term>& terms(std::size_t v) const { return terms_[v]; }

private:
    std::vector<std::vector<Term>> terms_;
};

/// Trivial coaction v -> 1 ⊗ v.
Coaction trivial_coaction(HopfPtr h, Space carrier);

struct SAYD {
    Action action;
    Coaction coaction;
    std::size_t dim() const { return action.dim(); }
};

/// (δ, σ): δ a character H -> k (row functional), σ a group-like element.
struct ModularPair {
    Vec delta;
    Vec sigma;
};

/// The one-dimensional module ^σk_δ.
SAYD modular_pair_module(const HopfPtr& h, const ModularPair& pair);

enum class Kind { A, B, C };
const char* kind_name(Kind k);

struct SymmetryBundle {
    std::string name;
    Kind kind = Kind::A;
    HopfPtr hopf;
    std::optional<Algebra> algebra;      // kinds A, B
    std::optional<Coalgebra> coalgebra;  // kind C
    std::optional<Action> action;        // kinds A, C
    std::optional<Coaction> coaction;    // kind B
    SAYD coeffs;

    std::size_t carrier_dim() const;
    const Space& carrier_space() const;
};

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::string witness;  // basis tuple of the first failure
};

struct ValidationReport {
    std::string subject;
    std::vector<AxiomCheck> checks;

    bool ok() const;
    std::vector<std::string> failed_axioms() const;
    const AxiomCheck* find(const std::string& axiom) const;
    void append(const ValidationReport& other);
};

ValidationReport validate(const Algebra& a);
ValidationReport validate(const Coalgebra& c);
ValidationReport validate(const Hopf& h);
ValidationReport validate(const Action& a);
ValidationReport validate(const Coaction& c);
ValidationReport validate(const SAYD& m);
ValidationReport validate(const HopfPtr& h, const ModularPair& pair);
ValidationReport validate(const SymmetryBundle& b);

/// Δ^n(h) in H^{⊗(n+1)}; Δ^0 = id.
TensorElement iterated_coproduct(const Hopf& h, const Vec& element, std::size_t n);
/// Same for a coalgebra, as sparse (digits, coefficient) terms.
struct TupleTerm {
    std::vector<std::size_t> digits;
    Rational coeff;
};
std::vector<TupleTerm> iterated_coproduct_terms(const Coalgebra& c, std::size_t basis, std::size_t n);

LinMap antipode_inverse(const Hopf& h);

/// Convolution inverse of a functional on a coalgebra (functional given as a
/// row of length dim C).  Throws ConvolutionNonInvertible.
Vec convolution_inverse(const Coalgebra& c, const Vec& chi);
/// (f * g)(c) = f(c^(1)) g(c^(2)).
Vec convolve(const Coalgebra& c, const Vec& f, const Vec& g);

/// Group-like check: Δ(g) = g ⊗ g and ε(g) = 1.
bool is_group_like(const Hopf& h, const Vec& g);
/// Character check: δ(ab) = δ(a)δ(b), δ(1) = 1.
bool is_character(const Hopf& h, const Vec& delta);

/// Unit vector e_i of length n.
Vec unit_vector(std::size_t n, std::size_t i);

}  // namespace hcc
