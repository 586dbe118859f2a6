// The jobs behind the hcs subcommands, as library calls returning reports.
//
// Exceptions are not caught here: SpecParseError / SpecResolutionError /
// PreconditionError / CatalogError mean input errors, BudgetExceeded means
// the resource budget was hit.  run_job() maps them to exit codes.
#pragma once

#include "hcc/cyclic.hpp"
#include "hcc/report.hpp"
#include "hcc/specfile.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace hcc {

struct RunOptions {
    std::size_t max_degree = 4;
    std::size_t budget = 1000000;
    std::uint64_t seed = 1;
    std::size_t trials = 5;
    ComplexOptions twists;
};

/// Axioms of every structure, bundle, coalgebra action, coinvariant unit and
/// convolution unit in the document.
Report run_verify(const ResolvedSpec& spec, const RunOptions& opts);
/// HC^n and HH^n for n <= max_degree, cocyclic gates, trace correspondences (n <= 2).
Report run_hc(const ResolvedSpec& spec, const std::string& bundle, const RunOptions& opts);
/// First cup product of a kind-B cocycle φ and a kind-A cocycle ψ.
Report run_cup1(const ResolvedSpec& spec, const std::string& phi, const std::string& psi, const RunOptions& opts);
/// Second cup product of a kind-C cochain x and a kind-A cochain ψ, with the
/// degree (1, 1) closed-formula comparison when an action is given.
Report run_cup2(const ResolvedSpec& spec, const std::string& x, const std::string& psi,
                const std::optional<std::string>& action, const RunOptions& opts);
/// bκ + κb = Ad_u^* - id on degrees <= max_degree, and Ad_u^* on HC classes.
Report run_homotopy(const ResolvedSpec& spec, const std::string& u, const RunOptions& opts);

/// Runs `body`, mapping exceptions to exit codes 1/2/3 and setting
/// report.exit_code (0 when every verdict passes, 1 otherwise).
Report run_job(const std::string& command, const std::string& file, const std::function<Report()>& body);

}  // namespace hcc
