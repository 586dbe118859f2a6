// Cochain maps between Hopf-cyclic complexes: pullback along inner
// automorphisms by coinvariant units (kind B), the homotopy κ, pullback along
// co-inner automorphisms by convolution units (kind C), and the maps i*, Tr
// between a kind-B algebra B and M_k(B).
//
// All maps act on ambient cochain coordinates as laid out in cyclic.hpp.
#pragma once

#include "hcc/cyclic.hpp"
#include "hcc/fixtures.hpp"
#include "hcc/structures.hpp"

namespace hcc {

/// Invertible u in a kind-B carrier with ρ(u) = 1 ⊗ u.
struct CoinvariantUnit {
    Vec u;
    Vec u_inv;
};

/// Coinvariant subspace {b : ρ(b) = 1 ⊗ b}.
Subspace coinvariants(const SymmetryBundle& b);
/// Checks coinvariance and invertibility; throws PreconditionError.
CoinvariantUnit coinvariant_unit(const SymmetryBundle& b, const Vec& u);

/// Matrix of b ↦ u b u^{-1}.
Matrix conjugation_matrix(const Algebra& a, const CoinvariantUnit& u);

/// (Ad_u^* φ)(b_0, .., b_n) = φ(u b_0 u^{-1}, .., u b_n u^{-1}) on degree n.
Matrix ad_u_pullback(const CyclicComplex& cx, const CoinvariantUnit& u, std::size_t n);

/// κ on degree n >= 1, into degree n - 1:
///   Σ_{i=0}^{n-1} (-1)^i f(b_0 u^{-1}, u b_1 u^{-1}, .., u b_i u^{-1}, u, b_{i+1}, .., b_{n-1})
/// multiplied by `sign`.  The sum has n - 1 + 2 = n + 1 arguments for every
/// i, which fixes the upper limit at n - 1.
Matrix kappa(const CyclicComplex& cx, const CoinvariantUnit& u, std::size_t n, int sign = -1);

/// Which reading of κ satisfies bκ + κb = Ad_u^* - id on the Hochschild
/// complex in degrees 0..n_max.
struct HomotopyReport {
    int sign = 0;          // +1 literal sum, -1 negated, 0 neither
    bool literal_holds = false;
    bool negated_holds = false;
    std::string reading;   // human-readable convention
};
HomotopyReport check_homotopy(const CyclicComplex& cx, const CoinvariantUnit& u, std::size_t n_max);

/// H-linear, convolution-invertible functional on a kind-C carrier.
struct ConvolutionUnit {
    Vec chi;
    Vec chi_inv;
};
/// Checks H-linearity χ(h·c) = ε(h)χ(c) and invertibility; throws PreconditionError.
ConvolutionUnit convolution_unit(const SymmetryBundle& c, const Vec& chi);

/// Matrix of c ↦ χ(c^(1)) c^(2) χ^{-1}(c^(3)).
Matrix coinner_matrix(const Coalgebra& c, const ConvolutionUnit& chi);

/// Ad_χ applied in every tensor slot of M ⊗ C^{⊗(n+1)}.
Matrix ad_chi_pullback(const CyclicComplex& cx, const ConvolutionUnit& chi, std::size_t n);

/// i*: cochains on M_k(B) -> cochains on B, and Tr in the other direction,
/// for a kind-B bundle B and its matrix bundle built by matrix_bundle().
///   (i* φ)(b_0..b_n)               = φ(b_0 ⊗ E11, .., b_n ⊗ E11)
///   (Tr φ)(b_0 ⊗ m_0, .., b_n ⊗ m_n) = tr(m_0 ⋯ m_n) φ(b_0, .., b_n)
class MatrixMaps {
public:
    MatrixMaps(const SymmetryBundle& b, std::size_t k);

    std::size_t size() const { return k_; }
    const SymmetryBundle& base() const { return base_; }
    const SymmetryBundle& matrix() const { return matrix_; }

    Matrix i_star(std::size_t n) const;
    Matrix trace_map(std::size_t n) const;

private:
    SymmetryBundle base_;
    SymmetryBundle matrix_;
    std::size_t k_;
};

}  // namespace hcc
