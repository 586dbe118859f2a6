// Cup products.
//
// First kind: a kind-B cocycle φ of degree p and a kind-A cocycle ψ of degree
// q over the same H and M give an ordinary cyclic cocycle of degree p+q on
// the smash algebra A ⋊_H B:
//   (φ#ψ)(ξ_0, .., ξ_n) = ∫''(ξ_0 dξ_1 ⋯ dξ_n),   ∫''(ω ⊗ γ) = ∫'((∫γ) ⊗ ω),
// evaluated in Ω A ⋊ Ω B on the bidegree (q, p) component.
//
// Second kind: a kind-C cocycle x of degree p and a kind-A cocycle ψ of
// degree q give a cyclic cocycle on Hom_H(C, A):
//   (x ∪ ψ)(f_0, .., f_n) = ∫'(f_0 * df_1 * ⋯ * df_n),   ∫'F = ∫ (id_M ⊗ F)(x),
// evaluated in the convolution algebra Hom(Θ, Ω A) on the (p, q) component.
// With a coalgebra action C ⊗ A -> A the result is pulled back along
// e: A -> Hom_H(C, A), e(a)(c) = c(a).
//
// Outputs are cochains of the ordinary cyclic complex (H = k, M = k) of the
// target algebra, in ambient coordinates (1, ξ_0, .., ξ_n).
#pragma once

#include "hcc/calculi.hpp"
#include "hcc/cyclic.hpp"
#include "hcc/structures.hpp"

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hcc {

/// (a_1 ⊗ b_1)(a_2 ⊗ b_2) = a_1 (b_1^(-1) a_2) ⊗ b_1^(0) b_2; basis index a·dim B + b.
Algebra smash_algebra(const SymmetryBundle& a, const SymmetryBundle& b);
/// Associativity and unit laws of the smash algebra.
ValidationReport validate_smash(const SymmetryBundle& a, const SymmetryBundle& b);

/// Kind-A bundle with H = k, M = k and the given algebra: its complex is the
/// ordinary cyclic complex.
SymmetryBundle ordinary_bundle(const Algebra& alg, const std::string& name);

/// Graded tensor product Ω A ⊗ Ω B with no twist (H = k), used as an
/// independent route for the first cup product.
/// Same conventions as SmashDG: component (i, j) = Ω^i A ⊗ Ω^j B.
BigradedVec plain_tensor_mul(const UniversalCalculus& a, const UniversalCalculus& b, const BigradedVec& x,
                             const BigradedVec& y, std::size_t max_degree);

class FirstCup {
public:
    /// Bundles must share the Hopf algebra and coefficients.  max_degree bounds p + q.
    FirstCup(const SymmetryBundle& bundle_a, const SymmetryBundle& bundle_b, std::size_t max_degree);

    const Algebra& target() const { return target_; }
    const CyclicComplex& complex_a() const { return *cx_a_; }
    const CyclicComplex& complex_b() const { return *cx_b_; }
    const CyclicComplex& target_complex() const { return *cx_t_; }
    std::size_t max_degree() const { return n_max_; }

    /// φ#ψ for cyclic cocycles; throws PreconditionError otherwise.
    Vec cup(const Vec& phi, std::size_t p, const Vec& psi, std::size_t q) const;
    /// The character of ∫'' for trace data (kind-B trace of degree p, kind-A
    /// trace of degree q), without cocycle checks.
    Vec evaluate(const Vec& phi_trace, std::size_t p, const Vec& psi_trace, std::size_t q) const;
    /// Same product computed in the untwisted tensor product (H = k only).
    Vec evaluate_untwisted(const Vec& phi_trace, std::size_t p, const Vec& psi_trace, std::size_t q) const;

private:
    SymmetryBundle a_, b_;
    std::size_t n_max_;
    Algebra target_;
    std::unique_ptr<CyclicComplex> cx_a_, cx_b_, cx_t_;
    std::unique_ptr<OmegaA> omega_;
    std::unique_ptr<OmegaB> gamma_;
    std::unique_ptr<SmashDG> smash_;
};

/// Pairing C ⊗ A -> A, stored as dim A × (dim C · dim A), column c·dim A + a.
struct CoalgebraAction {
    Matrix pairing;
    Vec apply(std::size_t c, const Vec& a) const;
};
/// c(ab) = c^(1)(a) c^(2)(b), c(1) = ε(c)1, (hc)(a) = h(c(a)).
ValidationReport validate(const CoalgebraAction& act, const SymmetryBundle& c, const SymmetryBundle& a);
/// c(a) = c·a for C = H with the regular module structure acting on a kind-A carrier.
CoalgebraAction hopf_action_pairing(const SymmetryBundle& c, const SymmetryBundle& a);

/// Hom_H(C, A) with the convolution product.  Elements are stored as
/// coordinates in a canonical basis of H-linear maps; each basis map is a
/// dim A × dim C matrix.
class HomAlgebra {
public:
    HomAlgebra(const SymmetryBundle& c, const SymmetryBundle& a);

    const Algebra& algebra() const { return algebra_; }
    std::size_t dim() const { return maps_.size(); }
    const Matrix& basis_map(std::size_t i) const { return maps_.at(i); }
    /// Coordinates of an H-linear map; throws PreconditionError otherwise.
    Vec coordinates(const Matrix& f) const;
    Matrix to_map(const Vec& coords) const;
    /// Convolution of maps C -> A.
    Matrix convolve(const Matrix& f, const Matrix& g) const;

    /// e(a)(c) = c(a) as a map C -> A.
    Matrix evaluation_map(const CoalgebraAction& act, const Vec& a) const;
    /// e: A -> Hom_H(C, A) in coordinates (dim × dim A); throws if some e(a) is not H-linear.
    Matrix evaluation(const CoalgebraAction& act) const;
    /// e is multiplicative and unital.
    ValidationReport check_evaluation(const CoalgebraAction& act) const;

private:
    SymmetryBundle c_, a_;
    std::vector<Matrix> maps_;
    Subspace space_;  // flattened row-major dim A × dim C
    Algebra algebra_;
};

class SecondCup {
public:
    /// max_degree bounds p + q.
    SecondCup(const SymmetryBundle& bundle_c, const SymmetryBundle& bundle_a, std::size_t max_degree,
              std::optional<CoalgebraAction> action = std::nullopt);

    const HomAlgebra& hom() const { return hom_; }
    const CyclicComplex& complex_c() const { return *cx_c_; }
    const CyclicComplex& complex_a() const { return *cx_a_; }
    /// Ordinary complex of Hom_H(C, A).
    const CyclicComplex& hom_complex() const { return *cx_hom_; }
    /// Ordinary complex of A (requires an action).
    const CyclicComplex& pullback_complex() const;
    bool has_action() const { return action_.has_value(); }
    std::size_t max_degree() const { return n_max_; }

    /// x ∪ ψ on Hom_H(C, A); throws PreconditionError unless x, ψ are cyclic cocycles.
    Vec cup(const Vec& x, std::size_t p, const Vec& psi, std::size_t q) const;
    /// x # ψ = e^*(x ∪ ψ) on A (requires an action).
    Vec pullback(const Vec& x, std::size_t p, const Vec& psi, std::size_t q) const;

    /// Character on arbitrary tuples of maps C -> A, for a cotrace element of
    /// degree p (M ⊗ Θ_p coordinates) and a kind-A trace of degree q.
    Rational evaluate(const Vec& x_trace, std::size_t p, const Vec& psi_trace, std::size_t q,
                      const std::vector<Matrix>& maps) const;
    /// Same over all basis tuples of A via e, without cocycle checks.
    Vec evaluate_pullback(const Vec& x_trace, std::size_t p, const Vec& psi_trace, std::size_t q) const;
    /// Same over all basis tuples of Hom_H(C, A).
    Vec evaluate_hom(const Vec& x_trace, std::size_t p, const Vec& psi_trace, std::size_t q) const;

    /// Raw trace data from ambient cochains, extending by zero on 1̃ / 1̃*
    /// components (no cocycle checks).
    Vec lift_x(const Vec& x, std::size_t p) const;
    Vec lift_psi(const Vec& psi, std::size_t q) const;

private:
    BigradedMap embed(const Matrix& f) const;
    const ConvolutionDG& convolution(std::size_t p, std::size_t q) const;
    Vec evaluate_tuples(const Vec& x_trace, std::size_t p, const Vec& psi_trace, std::size_t q,
                        const std::vector<Matrix>& generators) const;

    SymmetryBundle c_, a_;
    std::size_t n_max_;
    std::optional<CoalgebraAction> action_;
    HomAlgebra hom_;
    std::unique_ptr<CyclicComplex> cx_c_, cx_a_, cx_hom_, cx_pull_;
    std::unique_ptr<OmegaA> omega_;
    std::unique_ptr<OmegaCC> theta_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<ConvolutionDG>> conv_;
};

/// p = q = 1 closed formula, for x = m ⊗ c_0 ⊗ c_1 and φ of degree 1:
///   φ(m, c_0^(1)(a_0), c_0^(2)(a_1) c_1(a_2)) - φ(m, c_0(a_0) c_1^(1)(a_1), c_1^(2)(a_2)).
/// Inputs in ambient coordinates; output on A^{⊗3} with the leading k slot.
Vec closed_formula_degree_one(const SymmetryBundle& c, const SymmetryBundle& a, const CoalgebraAction& act,
                              const Vec& x, const Vec& phi);

/// Outcome of shifting the first argument of a cup product by b(η).
struct InvarianceTrial {
    Vec perturbation;  // η, cyclic, degree p - 1
    bool coboundary = false;
};

/// Seeds a generator, draws `trials` random cyclic cochains η of degree p-1
/// (entries in [-3, 3]) and checks cup(φ + bη, ψ) - cup(φ, ψ) is a coboundary.
std::vector<InvarianceTrial> class_invariance_first(const FirstCup& cup, const Vec& phi, std::size_t p, const Vec& psi,
                                                    std::size_t q, std::uint64_t seed, std::size_t trials);
std::vector<InvarianceTrial> class_invariance_second(const SecondCup& cup, const Vec& x, std::size_t p, const Vec& psi,
                                                     std::size_t q, std::uint64_t seed, std::size_t trials);

/// Random element of a subspace: integer combination of its basis, coefficients in [-3, 3].
Vec random_element(const Subspace& s, std::mt19937_64& rng);

}  // namespace hcc
