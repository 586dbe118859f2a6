// Hopf-cyclic cochain complexes of kinds A, B, C, their cohomology, and the
// trace / cotrace correspondences on the universal calculi.
//
// Cochains are stored in ambient coordinates, with index (m, x_0, ..., x_n),
// m slowest:
//   kind A  functionals φ on M ⊗ A^{⊗(n+1)}; coordinate = φ(m ⊗ a_0 ⊗ ... ⊗ a_n)
//   kind B  maps φ: B^{⊗(n+1)} -> M; coordinate = coefficient of m in φ(b_0, ..., b_n)
//   kind C  elements of M ⊗ C^{⊗(n+1)}, read modulo the relations
//           S(h) m ⊗ x - m ⊗ h·x  (the quotient M ⊗_H C^{⊗(n+1)})
// Kinds A and B carry an equivariant subspace (H-invariance, H-colinearity);
// kind C carries the relation ("null") subspace instead.
//
// Operators:
//   A  bφ(m, a_0..a_{n+1}) = Σ_{i=0}^{n} (-1)^i φ(.., a_i a_{i+1}, ..)
//                            + (-1)^{n+1} φ(m^(0), (S^{-1}(m^(-1)) a_{n+1}) a_0, a_1, .., a_n)
//      λφ(m, a_0..a_n)      = (-1)^n φ(m^(0), S^{-1}(m^(-1)) a_n, a_0, .., a_{n-1})
//   B  bφ(b_0..b_{n+1})     = Σ_{i=0}^{n} (-1)^i φ(.., b_i b_{i+1}, ..)
//                            + (-1)^{n+1} b_{n+1}^(-1)·φ(b_{n+1}^(0) b_0, b_1, .., b_n)
//      λφ(b_0..b_n)         = (-1)^n b_n^(-1)·φ(b_n^(0), b_0, .., b_{n-1})
//   C  b = Σ_{i=0}^{n+1} (-1)^i δ_i, δ_i = Δ on slot i (i <= n),
//      δ_{n+1}(m ⊗ c_0..c_n) = m^(0) ⊗ c_0^(2) ⊗ c_1..c_n ⊗ m^(-1) c_0^(1)
//      λ(m ⊗ c_0..c_n)      = (-1)^n m^(0) ⊗ c_1..c_n ⊗ m^(-1) c_0
#pragma once

#include "hcc/calculi.hpp"
#include "hcc/structures.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace hcc {

class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Which power of the antipode twists a coefficient-dependent operator.
enum class Twist { Identity, Antipode, AntipodeInverse };
const char* twist_name(Twist t);

/// Defaults are the conventions in the operator table above.  For H with
/// S² ≠ id the kind A and kind B defaults fail the gates on some SAYD
/// modules; kind_a = kind_b = Antipode passes them.
struct ComplexOptions {
    /// Kind A: λ and the last face use T(m^(-1)) a_n.
    Twist kind_a = Twist::AntipodeInverse;
    /// Kind B: λ and the last face act on M by T(b_n^(-1)).
    Twist kind_b = Twist::Identity;
    /// Kind C: right action m·h = T(h)m defining the quotient.
    Twist kind_c = Twist::Antipode;
};

/// {dm, dx, ..., dx} with n + 1 copies of dx.
std::vector<std::size_t> cochain_dims(std::size_t dm, std::size_t dx, std::size_t n);

/// Ambient layout and cochain subspace in one degree.
struct CochainSpace {
    Kind kind = Kind::A;
    std::size_t degree = 0;
    std::vector<std::size_t> dims;  // {dim M, dim X, ..., dim X}
    Subspace equivariant;           // kinds A/B: the cochains; kind C: everything
    Subspace null;                  // kind C: relation subspace; else zero

    std::size_t ambient_dim() const { return product(dims); }
};

class CyclicComplex {
public:
    /// Builds cochain spaces for degrees 0..max_degree+1, b for degrees
    /// 0..max_degree and λ for degrees 0..max_degree+1.
    CyclicComplex(SymmetryBundle bundle, std::size_t max_degree, ComplexOptions opts = {});

    const SymmetryBundle& bundle() const { return bundle_; }
    const ComplexOptions& options() const { return opts_; }
    Kind kind() const { return bundle_.kind; }
    /// T(h) for the twist of this complex's kind.
    Vec twisted(std::size_t h) const;
    std::size_t max_degree() const { return max_degree_; }

    const CochainSpace& space(std::size_t n) const { return spaces_.at(n); }
    const Matrix& b(std::size_t n) const { return b_.at(n); }
    const Matrix& lambda(std::size_t n) const { return lambda_.at(n); }

    /// Cλ_n: cochains with λv ≡ v.
    Subspace cyclic_cochains(std::size_t n) const;
    /// Cyclic cocycles (containing the null subspace).
    Subspace cocycles(std::size_t n) const;
    /// b(Cλ_{n-1}) + null.
    Subspace coboundaries(std::size_t n) const;
    Subspace hochschild_cocycles(std::size_t n) const;
    Subspace hochschild_coboundaries(std::size_t n) const;

    /// v ≡ w modulo the null subspace.
    bool equivalent(std::size_t n, const Vec& v, const Vec& w) const;
    bool is_cyclic_cocycle(std::size_t n, const Vec& v) const;

    /// Cocyclic-module identities and well-definedness, per degree.
    ValidationReport gates() const;

    /// η cyclic with bη ≡ φ, if one exists.  Degree 0: only φ ≡ 0 (η = empty).
    std::optional<Vec> coboundary_test(std::size_t n, const Vec& phi) const;
    /// Same in the Hochschild complex.
    std::optional<Vec> hochschild_coboundary_test(std::size_t n, const Vec& phi) const;

private:
    CochainSpace build_space(std::size_t n) const;
    Matrix build_b(std::size_t n) const;
    Matrix build_lambda(std::size_t n) const;
    /// Diagonal action of basis h on X^{⊗(n+1)} (kinds A, C).
    Matrix diagonal_action(std::size_t h, std::size_t n) const;
    /// Diagonal coaction X^{⊗(n+1)} -> H ⊗ X^{⊗(n+1)} (kind B).
    Matrix diagonal_coaction(std::size_t n) const;
    /// Operator of T(h) on the carrier (kind A) or on M (kinds B, C).
    Matrix twist_op(std::size_t h) const;

    SymmetryBundle bundle_;
    std::size_t max_degree_;
    ComplexOptions opts_;
    std::vector<CochainSpace> spaces_;
    std::vector<Matrix> b_;
    std::vector<Matrix> lambda_;
};

struct CohomologyResult {
    std::size_t degree = 0;
    std::size_t hc_dim = 0;
    std::size_t hh_dim = 0;
    std::vector<Vec> representatives;     // cyclic classes, ambient coordinates
    std::vector<Vec> hh_representatives;  // Hochschild classes
};

/// HC^n and HH^n for n <= n_max.  Throws ConstructionError naming the failed
/// identity when the complex fails its gates.
std::vector<CohomologyResult> compute_cohomology(const CyclicComplex& cx, std::size_t n_max);

/// Closed graded traces (kinds A, B) and cotraces (kind C) of degree n.
///   kind A  functional on M ⊗ Ω^n, index (m, ω)
///   kind B  map Γ^n -> M, index (m, γ): coefficient of m in ∫γ
///   kind C  element of M ⊗ Θ_n, index (m, θ), modulo relations
class TraceCorrespondence {
public:
    TraceCorrespondence(const CyclicComplex& cx, std::size_t n);

    std::size_t degree() const { return n_; }
    std::size_t trace_ambient_dim() const;

    Vec to_trace(const Vec& cocycle) const;
    Vec to_cocycle(const Vec& trace) const;
    /// The invariant checks of the trace / cotrace definitions.
    ValidationReport check_trace(const Vec& trace) const;
    /// All closed graded traces (kind C: cotraces, including relations).
    Subspace trace_space() const;
    /// Kind C: relation subspace of M ⊗ Θ_n; otherwise zero.
    Subspace trace_null() const;

private:
    /// Linear constraints whose kernel is the trace space (kinds A, B);
    /// kind C returns the closedness and symmetry maps pre-composed with
    /// annihilators of the relevant relation spaces.
    std::vector<std::pair<std::string, Matrix>> constraints() const;
    Subspace theta_relations(std::size_t deg) const;
    Subspace theta_pair_relations(std::size_t i, std::size_t j) const;

    const CyclicComplex& cx_;
    std::size_t n_;
    std::unique_ptr<OmegaA> omega_a_;
    std::unique_ptr<OmegaB> omega_b_;
    std::unique_ptr<OmegaCC> omega_c_;
};

}  // namespace hcc
