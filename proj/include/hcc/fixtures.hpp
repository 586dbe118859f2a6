// Catalog of small validated example structures and single-entry mutants.
#pragma once

#include "hcc/structures.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcc {

class CatalogError : public std::runtime_error {
public:
    explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

/// Which validator a fixture is checked with.
enum class FixtureType { Hopf, Algebra, Coalgebra, Action, Coaction, SAYD, Bundle };
const char* fixture_type_name(FixtureType t);

struct FixtureBundle {
    std::string name;
    std::string description;
    FixtureType type = FixtureType::Hopf;

    HopfPtr hopf;
    std::optional<Algebra> algebra;
    std::optional<Coalgebra> coalgebra;
    std::optional<Action> action;
    std::optional<Coaction> coaction;
    std::optional<SAYD> sayd;
    std::optional<SymmetryBundle> bundle;

    bool mutant = false;
    /// Mutants: the axiom the mutation targets, and the full set of axioms
    /// that fail (sorted).
    std::string primary_axiom;
    std::vector<std::string> expected_failures;
    /// Hand-derived HC^0.. dimensions, where recorded.
    std::vector<std::size_t> expected_hc;

    ValidationReport validate() const;
};

/// Catalog lookup; throws CatalogError listing the available names.
FixtureBundle fixture(const std::string& name);
std::vector<std::string> fixture_names();
std::vector<std::string> mutant_names();

// Building blocks, exposed for tests and for the matrix-algebra constructions.
HopfPtr trivial_hopf();
/// Group algebra from a multiplication table on labels (label 0 is the identity).
HopfPtr group_algebra(const std::string& name, const std::vector<std::string>& labels,
                      const std::function<std::size_t(std::size_t, std::size_t)>& mul);
HopfPtr sweedler_hopf();
/// H as a kind-B bundle over itself (coaction Δ).
SymmetryBundle regular_comodule_bundle(const std::string& name, const HopfPtr& h, const SAYD& coeffs);
/// H as a kind-C bundle over itself (action by left multiplication).
SymmetryBundle regular_module_bundle(const std::string& name, const HopfPtr& h, const SAYD& coeffs);
/// k with trivial action and coaction.
SAYD trivial_sayd(const HopfPtr& h);
/// H over itself with h·m = h^(1) m S^{-1}(h^(2)) and coaction Δ.
SAYD regular_sayd(const HopfPtr& h);
/// Adjoint action h·a = h^(1) a S(h^(2)) on H.
Action adjoint_action(const HopfPtr& h);
/// M_k(B) with entrywise coaction, for a kind-B bundle.
SymmetryBundle matrix_bundle(const SymmetryBundle& b, std::size_t k);

}  // namespace hcc
