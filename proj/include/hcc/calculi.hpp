// Degree-truncated universal differential calculi and the two derived DG
// constructions used by the cup products.
//
// Universal calculus of an algebra A, adjoined-unit convention:
//   Ω^n = Ã ⊗ A^{⊗n},  Ã = A ⊕ k·1̃  (basis of A first, 1̃ last)
// The basis tuple (ã_0, a_1, ..., a_n) stands for ã_0 da_1 ... da_n.
//   d(a_0 da_1...da_n) = 1̃ da_0 da_1 ... da_n,   d(1̃ ...) = 0.
// Products are reduced to this normal form with (da)b = d(ab) - a db.
//
// The universal DG coalgebra of a coalgebra C is realized as the graded dual
// of the universal calculus of the dual algebra C*:
//   Θ_n = C̃ ⊗ C^{⊗n},  C̃ = C ⊕ k·1̃*,
// with comultiplication the transpose of the product and d the (signed)
// transpose of the differential.  C^{⊗(n+1)} sits inside Θ_n as the tuples
// whose first slot is not 1̃*.
#pragma once

#include "hcc/structures.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hcc {

class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// Truncated universal calculus of a unital algebra.
class UniversalCalculus {
public:
    UniversalCalculus(Algebra algebra, std::size_t max_degree);

    const Algebra& algebra() const { return algebra_; }
    std::size_t max_degree() const { return max_degree_; }
    std::size_t base_dim() const { return algebra_.dim(); }
    /// Index of 1̃ in the first slot.
    std::size_t tilde_one() const { return algebra_.dim(); }
    std::size_t dim(std::size_t n) const;
    std::vector<std::size_t> dims(std::size_t n) const;

    /// Flat index of ã_0 da_1 ... da_n.
    std::size_t index(const std::vector<std::size_t>& tuple) const;
    std::vector<std::size_t> tuple(std::size_t n, std::size_t flat) const;

    /// d: Ω^n -> Ω^{n+1} as a matrix.
    const Matrix& d(std::size_t n) const { return d_.at(n); }
    Vec apply_d(std::size_t n, const Vec& w) const { return d_.at(n) * w; }

    /// Product Ω^i x Ω^j -> Ω^{i+j} (requires i + j <= max degree).
    Vec mul(std::size_t i, const Vec& x, std::size_t j, const Vec& y) const;
    /// Product of basis elements.
    const Sparse& mul_basis(std::size_t i, std::size_t bx, std::size_t j, std::size_t by) const;
    /// Matrix of the product Ω^i ⊗ Ω^j -> Ω^{i+j}.
    Matrix mult_matrix(std::size_t i, std::size_t j) const;

    /// The element a (a in A) of Ω^0.
    Vec from_algebra(const Vec& a) const;

    /// Checks d∘d = 0 and the graded Leibniz rule on basis pairs.
    ValidationReport check_dg() const;

private:
    const Sparse& right_mul(std::size_t n, std::size_t basis, std::size_t b) const;

    Algebra algebra_;
    std::size_t max_degree_;
    std::vector<Matrix> d_;
    mutable std::unordered_map<std::size_t, Sparse> right_cache_;
    mutable std::unordered_map<std::size_t, Sparse> mul_cache_;
};

/// H-action on Ω A: h·(a_0 da_1...da_n) = h^(1)a_0 d h^(2)a_1 ... (h·1̃ = ε(h)1̃).
class OmegaA {
public:
    OmegaA(const SymmetryBundle& bundle, std::size_t max_degree);

    const UniversalCalculus& calculus() const { return calc_; }
    const SymmetryBundle& bundle() const { return bundle_; }
    /// Matrix of the basis element h acting on Ω^n.
    const Matrix& action(std::size_t h, std::size_t n) const { return actions_.at(n).at(h); }
    Matrix action(const Vec& h, std::size_t n) const;

    /// Module-algebra law for the action, H-linearity of d.
    ValidationReport check_equivariance() const;

private:
    SymmetryBundle bundle_;
    UniversalCalculus calc_;
    std::vector<std::vector<Matrix>> actions_;  // [degree][h]
};

/// H-coaction on Ω B: b_0 db_1...db_n -> b_0^(-1)...b_n^(-1) ⊗ b_0^(0) db_1^(0)...
class OmegaB {
public:
    OmegaB(const SymmetryBundle& bundle, std::size_t max_degree);

    const UniversalCalculus& calculus() const { return calc_; }
    const SymmetryBundle& bundle() const { return bundle_; }
    /// Coaction Ω^n -> H ⊗ Ω^n (dim H * dim Ω^n rows).
    const Matrix& coaction(std::size_t n) const { return coactions_.at(n); }

    /// Colinearity of d and of the product.
    ValidationReport check_equivariance() const;

private:
    SymmetryBundle bundle_;
    UniversalCalculus calc_;
    std::vector<Matrix> coactions_;
};

/// Algebra structure on C* dual to the coalgebra C (dual basis).
Algebra dual_algebra(const Coalgebra& c);

/// Universal DG H-module coalgebra of a kind-C bundle.
class OmegaCC {
public:
    OmegaCC(const SymmetryBundle& bundle, std::size_t max_degree);

    const SymmetryBundle& bundle() const { return bundle_; }
    std::size_t max_degree() const { return dual_.max_degree(); }
    std::size_t dim(std::size_t n) const { return dual_.dim(n); }
    std::size_t base_dim() const { return dual_.base_dim(); }
    std::size_t tilde_counit() const { return dual_.tilde_one(); }
    std::size_t index(const std::vector<std::size_t>& tuple) const { return dual_.index(tuple); }
    std::vector<std::size_t> tuple(std::size_t n, std::size_t flat) const { return dual_.tuple(n, flat); }

    /// d: Θ_n -> Θ_{n-1} (n >= 1).
    const Matrix& d(std::size_t n) const { return d_.at(n); }
    /// Component Θ_{i+j} -> Θ_i ⊗ Θ_j of the comultiplication.
    const Matrix& comult(std::size_t i, std::size_t j) const { return comult_.at({i, j}); }
    /// Diagonal H-action on Θ_n (basis h).
    const Matrix& action(std::size_t h, std::size_t n) const { return actions_.at(n).at(h); }
    /// Counit Θ_0 -> k.
    const Vec& counit() const { return counit_; }

    /// Embedding C^{⊗(n+1)} -> Θ_n.
    std::size_t embed(std::size_t n, std::size_t flat_c_tuple) const;

    /// d∘d = 0, coassociativity, counit, coderivation law, H-linearity.
    ValidationReport check_dg() const;

private:
    SymmetryBundle bundle_;
    UniversalCalculus dual_;
    std::vector<Matrix> d_;
    std::map<std::pair<std::size_t, std::size_t>, Matrix> comult_;
    std::vector<std::vector<Matrix>> actions_;
    Vec counit_;
};

/// Bigraded element: (i, j) -> coordinates in a component.
using BigradedVec = std::map<std::pair<std::size_t, std::size_t>, Vec>;

/// Ω ⋊_H Γ for Ω = Ω A (kind A) and Γ = Ω B (kind B) over the same Hopf
/// algebra, truncated at total degree N.  Component (i, j) = Ω^i ⊗ Γ^j.
class SmashDG {
public:
    SmashDG(const OmegaA& omega, const OmegaB& gamma, std::size_t max_degree);

    std::size_t max_degree() const { return max_degree_; }
    std::size_t dim(std::size_t i, std::size_t j) const;
    const OmegaA& omega() const { return omega_; }
    const OmegaB& gamma() const { return gamma_; }

    BigradedVec mul(const BigradedVec& x, const BigradedVec& y) const;
    BigradedVec d(const BigradedVec& x) const;
    BigradedVec unit() const;
    /// Basis element of component (i, j).
    BigradedVec basis(std::size_t i, std::size_t j, std::size_t flat) const;

    /// d² = 0, Leibniz and associativity on all basis tuples within the truncation.
    ValidationReport check_dg() const;

private:
    Vec mul_component(std::size_t i1, std::size_t j1, const Vec& x, std::size_t i2, std::size_t j2, const Vec& y) const;

    const OmegaA& omega_;
    const OmegaB& gamma_;
    std::size_t max_degree_;
};

/// Bigraded map: (i, j) -> matrix Θ_i -> Ω^j.
using BigradedMap = std::map<std::pair<std::size_t, std::size_t>, Matrix>;

/// Convolution DG algebra Hom(Θ, Ω) truncated at Θ-degree <= p and
/// Ω-degree <= q.  Degree of a map Θ_i -> Ω^j is i + j.
///   (f * g)(θ) = (-1)^{deg g · deg θ^(1)} f(θ^(1)) g(θ^(2)),   df = [d, f].
class ConvolutionDG {
public:
    ConvolutionDG(const OmegaCC& theta, const OmegaA& omega, std::size_t max_theta, std::size_t max_omega);

    const OmegaCC& theta() const { return theta_; }
    const OmegaA& omega() const { return omega_; }
    std::size_t max_theta() const { return max_theta_; }
    std::size_t max_omega() const { return max_omega_; }

    BigradedMap mul(const BigradedMap& f, const BigradedMap& g) const;
    BigradedMap d(const BigradedMap& f) const;
    BigradedMap unit() const;
    BigradedMap zero_map(std::size_t i, std::size_t j) const;

    /// Hom_H(Θ_i, Ω^j) as a subspace of flattened matrices (row-major).
    Subspace equivariant_component(std::size_t i, std::size_t j) const;

    /// Associativity, d² = 0 and Leibniz on the given homogeneous elements.
    ValidationReport check_dg(const std::vector<BigradedMap>& samples) const;

private:
    const OmegaCC& theta_;
    const OmegaA& omega_;
    std::size_t max_theta_;
    std::size_t max_omega_;
};

/// Total degree of a homogeneous bigraded map (throws if inhomogeneous).
std::optional<std::size_t> homogeneous_degree(const BigradedMap& f);
bool is_zero(const BigradedMap& f);
BigradedMap add(const BigradedMap& a, const BigradedMap& b);
BigradedMap scale(const Rational& s, const BigradedMap& f);
bool is_zero(const BigradedVec& v);
BigradedVec add(const BigradedVec& a, const BigradedVec& b);
BigradedVec scale(const Rational& s, const BigradedVec& v);

}  // namespace hcc
