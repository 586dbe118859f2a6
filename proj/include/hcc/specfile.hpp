// The .hcs structure-file format: a strict JSON document describing spaces,
// structure-constant tables, symmetry bundles, auxiliary data and jobs.
//
//   {
//     "field": "Q",
//     "spaces":     { NAME: [label, ..] },
//     "structures": { NAME: { "type": T, <references>, <tables> } },
//     "bundles":    { NAME: { "kind": "A"|"B"|"C", <references> } },
//     "jobs":       [ { "command": C, <arguments> } ]
//   }
//
// A table is a list of sparse entries {"inputs": [..], "output": [..],
// "value": "p/q"}; the label lists are resolved against the spaces fixed by
// the table's signature (see structure_schema()).  Canonical form: keys
// sorted, entries sorted by their resolved indices, zero entries dropped,
// rationals in lowest terms, two-space indentation, trailing newline.
#pragma once

#include "hcc/products.hpp"
#include "hcc/structures.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcc {

/// Malformed input.  `where` is "line L, column C" and/or a JSON pointer.
class SpecParseError : public std::runtime_error {
public:
    SpecParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// Well-formed input with a dangling or inconsistent reference.
class SpecResolutionError : public std::runtime_error {
public:
    SpecResolutionError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

struct SpecEntry {
    std::vector<std::string> inputs;
    std::vector<std::string> output;
    Rational value;
    bool operator==(const SpecEntry&) const = default;
};
using SpecTable = std::vector<SpecEntry>;

struct StructureDef {
    std::string type;
    std::map<std::string, std::string> refs;  // e.g. "space", "hopf", "bundle"
    std::map<std::string, SpecTable> tables;
    std::optional<std::size_t> degree;        // cochains only
    bool operator==(const StructureDef&) const = default;
};

struct BundleDef {
    std::string kind;                         // "A", "B" or "C"
    std::map<std::string, std::string> refs;  // hopf, algebra/coalgebra, action/coaction, coeffs
    bool operator==(const BundleDef&) const = default;
};

struct JobDef {
    std::string command;
    std::map<std::string, std::string> args;
    bool operator==(const JobDef&) const = default;
};

struct SpecDocument {
    std::string field = "Q";
    std::map<std::string, std::vector<std::string>> spaces;
    std::map<std::string, StructureDef> structures;
    std::map<std::string, BundleDef> bundles;
    std::vector<JobDef> jobs;
    bool operator==(const SpecDocument&) const = default;
};

/// One table of a structure type: the spaces its input and output labels
/// live in, named by the structure reference that supplies them
/// ("self" = the structure's own space).
struct TableSignature {
    std::string name;
    std::vector<std::string> inputs;
    std::vector<std::string> output;
};
struct StructureSchema {
    std::string type;
    std::vector<std::string> refs;
    std::vector<TableSignature> tables;
};
/// Known structure types; throws SpecParseError for an unknown type.
const StructureSchema& structure_schema(const std::string& type);
std::vector<std::string> structure_types();

/// Strict parse.  Throws SpecParseError (syntax, unknown keys, bad rationals,
/// duplicate entries) or SpecResolutionError (undefined labels or names).
SpecDocument parse_spec(const std::string& text);
SpecDocument parse_spec_file(const std::string& path);
/// Canonical text.
std::string serialize_spec(const SpecDocument& doc);

/// A document resolved into engine objects.  Construction does not validate
/// axioms; use validate() on the pieces or run_verify().
class ResolvedSpec {
public:
    explicit ResolvedSpec(const SpecDocument& doc);

    const SpecDocument& document() const { return doc_; }
    const Space& space(const std::string& name) const;

    HopfPtr hopf(const std::string& name) const;
    const Algebra& algebra(const std::string& name) const;
    const Coalgebra& coalgebra(const std::string& name) const;
    const Action& action(const std::string& name) const;
    const Coaction& coaction(const std::string& name) const;
    const SAYD& sayd(const std::string& name) const;
    const ModularPair& modular_pair(const std::string& name) const;
    const SymmetryBundle& bundle(const std::string& name) const;
    const CoalgebraAction& coalgebra_action(const std::string& name) const;
    /// Carrier element (coinvariant units).
    const Vec& element(const std::string& name) const;
    /// Functional on a bundle carrier (convolution units).
    const Vec& functional(const std::string& name) const;
    /// Cochain in ambient coordinates (m, x_0, .., x_n), with its bundle and degree.
    struct Cochain {
        std::string bundle;
        std::size_t degree = 0;
        Vec coords;
    };
    const Cochain& cochain(const std::string& name) const;

    /// Names of structures of a type, sorted.
    std::vector<std::string> names_of(const std::string& type) const;
    std::vector<std::string> bundle_names() const;

private:
    template <class T>
    const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* what) const;

    SpecDocument doc_;
    std::map<std::string, Space> spaces_;
    std::map<std::string, HopfPtr> hopfs_;
    std::map<std::string, Algebra> algebras_;
    std::map<std::string, Coalgebra> coalgebras_;
    std::map<std::string, Action> actions_;
    std::map<std::string, Coaction> coactions_;
    std::map<std::string, SAYD> sayds_;
    std::map<std::string, ModularPair> pairs_;
    std::map<std::string, SymmetryBundle> bundles_;
    std::map<std::string, CoalgebraAction> coalgebra_actions_;
    std::map<std::string, Vec> elements_;
    std::map<std::string, Vec> functionals_;
    std::map<std::string, Cochain> cochains_;
};

/// Builders used to export catalog data (and to ship fixture files).
class SpecBuilder {
public:
    /// Registers a space under `name` (or reuses an identical one) and returns the name used.
    std::string add_space(const Space& s, const std::string& name);
    std::string add_hopf(const std::string& name, const Hopf& h);
    std::string add_algebra(const std::string& name, const Algebra& a);
    std::string add_coalgebra(const std::string& name, const Coalgebra& c);
    std::string add_action(const std::string& name, const std::string& hopf, const Action& a);
    std::string add_coaction(const std::string& name, const std::string& hopf, const Coaction& c);
    std::string add_sayd(const std::string& name, const std::string& hopf, const SAYD& m);
    /// Adds the bundle and everything it references; returns the bundle name.
    std::string add_bundle(const std::string& name, const SymmetryBundle& b);
    std::string add_coalgebra_action(const std::string& name, const std::string& coalgebra_bundle,
                                     const std::string& algebra_bundle, const CoalgebraAction& act);
    std::string add_element(const std::string& name, const std::string& bundle, const Vec& v);
    std::string add_functional(const std::string& name, const std::string& bundle, const Vec& v);
    std::string add_cochain(const std::string& name, const std::string& bundle, std::size_t degree, const Vec& v);
    void add_job(const JobDef& job) { doc_.jobs.push_back(job); }

    /// Canonicalized document.
    SpecDocument document() const;

private:
    const std::vector<std::string>& labels(const std::string& space) const;
    SpecTable table(const Matrix& m, const std::vector<std::string>& in_spaces,
                    const std::vector<std::string>& out_spaces) const;
    std::string space_of_bundle_carrier(const std::string& bundle) const;

    SpecDocument doc_;
    std::map<std::string, std::string> hopf_by_ptr_;  // keyed by the address of the Hopf object
    std::map<std::string, SymmetryBundle> bundles_;
};

struct FixtureBundle;
/// Canonical document for a catalog entry (mutants included).
SpecDocument fixture_document(const FixtureBundle& f);

}  // namespace hcc
