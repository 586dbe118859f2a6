#include "hcc/jobs.hpp"

#include "hcc/fixtures.hpp"
#include "hcc/morphisms.hpp"
#include "hcc/products.hpp"

#include <random>

namespace hcc {

namespace {

Report start(const std::string& command, const RunOptions& opts) {
    set_entry_budget(opts.budget);
    Report r;
    r.command = command;
    r.flags = {{"budget", std::to_string(opts.budget)},
               {"max_degree", std::to_string(opts.max_degree)},
               {"seed", std::to_string(opts.seed)},
               {"trials", std::to_string(opts.trials)}};
    r.conventions = standard_conventions();
    r.conventions["twists"] = std::string("kind A: ") + twist_name(opts.twists.kind_a) +
                              ", kind B: " + twist_name(opts.twists.kind_b) +
                              ", kind C: " + twist_name(opts.twists.kind_c);
    return r;
}

void add_checks(Report& r, const std::string& subject, const ValidationReport& v) {
    for (const auto& c : v.checks) r.add(subject + ": " + c.axiom, c.pass, c.pass ? "" : "witness " + c.witness);
}

const SymmetryBundle& bundle_of_kind(const ResolvedSpec& spec, const std::string& name, Kind k, const char* what) {
    const SymmetryBundle& b = spec.bundle(name);
    if (b.kind != k)
        throw PreconditionError(std::string(what) + ": bundle '" + name + "' has kind " + kind_name(b.kind) +
                                ", expected " + kind_name(k));
    return b;
}

std::string degree_list(std::size_t p, std::size_t q) { return "(" + std::to_string(p) + ", " + std::to_string(q) + ")"; }

void add_cocycle_checks(Report& r, const CyclicComplex& target, std::size_t n, const Vec& out, const std::string& what) {
    r.add(what + " in ker b", is_zero(target.b(n) * out));
    r.add(what + " in ker(1 - λ)", target.lambda(n) * out == out);
}

std::string tuple_labels(const Space& s, std::size_t idx, std::size_t len) {
    std::vector<std::string> parts(len);
    for (std::size_t k = len; k-- > 0;) {
        parts[k] = s.basis_labels[idx % s.dim()];
        idx /= s.dim();
    }
    std::string out = "(";
    for (std::size_t k = 0; k < len; ++k) out += (k ? ", " : "") + parts[k];
    return out + ")";
}

}  // namespace

Report run_verify(const ResolvedSpec& spec, const RunOptions& opts) {
    Report r = start("verify", opts);
    for (const auto& n : spec.names_of("hopf")) add_checks(r, "hopf " + n, validate(*spec.hopf(n)));
    for (const auto& n : spec.names_of("algebra")) add_checks(r, "algebra " + n, validate(spec.algebra(n)));
    for (const auto& n : spec.names_of("coalgebra")) add_checks(r, "coalgebra " + n, validate(spec.coalgebra(n)));
    for (const auto& n : spec.names_of("action")) add_checks(r, "action " + n, validate(spec.action(n)));
    for (const auto& n : spec.names_of("coaction")) add_checks(r, "coaction " + n, validate(spec.coaction(n)));
    for (const auto& n : spec.names_of("sayd")) add_checks(r, "sayd " + n, validate(spec.sayd(n)));
    for (const auto& n : spec.names_of("modular_pair")) {
        const std::string hopf = spec.document().structures.at(n).refs.at("hopf");
        add_checks(r, "modular pair " + n, validate(spec.hopf(hopf), spec.modular_pair(n)));
    }
    for (const auto& n : spec.bundle_names()) add_checks(r, "bundle " + n, validate(spec.bundle(n)));
    for (const auto& n : spec.names_of("coalgebra_action")) {
        const auto& refs = spec.document().structures.at(n).refs;
        add_checks(r, "coalgebra action " + n,
                   validate(spec.coalgebra_action(n), spec.bundle(refs.at("coalgebra_bundle")),
                            spec.bundle(refs.at("algebra_bundle"))));
    }
    for (const auto& n : spec.names_of("coinvariant_unit")) {
        const std::string b = spec.document().structures.at(n).refs.at("bundle");
        try {
            coinvariant_unit(spec.bundle(b), spec.element(n));
            r.add("coinvariant unit " + n, true);
        } catch (const PreconditionError& e) {
            r.add("coinvariant unit " + n, false, e.what());
        }
    }
    for (const auto& n : spec.names_of("functional")) {
        const std::string b = spec.document().structures.at(n).refs.at("bundle");
        if (spec.bundle(b).kind != Kind::C) continue;
        try {
            convolution_unit(spec.bundle(b), spec.functional(n));
            r.add("convolution unit " + n, true);
        } catch (const PreconditionError& e) {
            r.add("convolution unit " + n, false, e.what());
        }
    }
    if (r.verdicts.empty()) r.notes.push_back("document contains nothing to verify");
    return r;
}

Report run_hc(const ResolvedSpec& spec, const std::string& name, const RunOptions& opts) {
    Report r = start("hc", opts);
    r.job = {{"bundle", name}};
    const SymmetryBundle& b = spec.bundle(name);
    const std::size_t N = opts.max_degree;
    CyclicComplex cx(b, N, opts.twists);
    const ValidationReport gates = cx.gates();
    add_checks(r, "complex", gates);
    if (!gates.ok()) return r;
    const auto res = compute_cohomology(cx, N);
    for (const auto& c : res) {
        r.dims["HC"].push_back(c.hc_dim);
        r.dims["HH"].push_back(c.hh_dim);
        for (std::size_t k = 0; k < c.representatives.size(); ++k)
            r.cochains.push_back({"HC^" + std::to_string(c.degree) + "[" + std::to_string(k) + "]", c.degree,
                                  std::string("kind-") + kind_name(b.kind) + " complex of " + name,
                                  c.representatives[k]});
    }
    const std::size_t trace_max = std::min<std::size_t>(N, 2);
    for (std::size_t n = 0; n <= trace_max; ++n) {
        TraceCorrespondence tc(cx, n);
        const Subspace null = tc.trace_null();
        bool round_trip = true, invariants = true;
        for (const Vec& rep : res[n].representatives) {
            const Vec t = tc.to_trace(rep);
            round_trip = round_trip && cx.equivalent(n, tc.to_cocycle(t), rep) &&
                         null.contains(sub(tc.to_trace(tc.to_cocycle(t)), t));
            invariants = invariants && tc.check_trace(t).ok();
        }
        const std::string count = std::to_string(res[n].representatives.size()) + " representatives";
        r.add("trace correspondence round trip, degree " + std::to_string(n), round_trip, count);
        r.add("trace invariants, degree " + std::to_string(n), invariants, count);
    }
    if (N > trace_max) r.notes.push_back("trace correspondences are checked in degrees <= 2");
    return r;
}

Report run_cup1(const ResolvedSpec& spec, const std::string& phi_name, const std::string& psi_name,
                const RunOptions& opts) {
    Report r = start("cup1", opts);
    r.job = {{"phi", phi_name}, {"psi", psi_name}};
    const auto& phi = spec.cochain(phi_name);
    const auto& psi = spec.cochain(psi_name);
    const SymmetryBundle& B = bundle_of_kind(spec, phi.bundle, Kind::B, "cup1 φ");
    const SymmetryBundle& A = bundle_of_kind(spec, psi.bundle, Kind::A, "cup1 ψ");
    const std::size_t p = phi.degree, q = psi.degree, n = p + q;
    FirstCup fc(A, B, n);
    if (!fc.complex_b().is_cyclic_cocycle(p, phi.coords))
        throw PreconditionError("cup1: φ '" + phi_name + "' is not a cyclic cocycle of kind B");
    if (!fc.complex_a().is_cyclic_cocycle(q, psi.coords))
        throw PreconditionError("cup1: ψ '" + psi_name + "' is not a cyclic cocycle of kind A");
    r.notes.push_back("degrees as constructed (p from B, q from A): " + degree_list(p, q) +
                      "; as in the product statement (p from A, q from B): " + degree_list(q, p) +
                      "; output degree " + std::to_string(n));

    Vec out;
    try {
        out = fc.cup(phi.coords, p, psi.coords, q);
    } catch (const ConstructionError& e) {
        r.add("φ#ψ is a cyclic cocycle of the smash algebra", false, e.what());
        return r;
    }
    const std::string target = "ordinary cyclic complex of " + fc.target().space.name;
    add_cocycle_checks(r, fc.target_complex(), n, out, "φ#ψ");
    r.cochains.push_back({"phi#psi", n, target, out});

    std::mt19937_64 rng(opts.seed);
    const Vec phi2 = random_element(fc.complex_b().cocycles(p), rng);
    const Vec psi2 = random_element(fc.complex_a().cocycles(q), rng);
    const Rational two(2), three(3);
    const bool left = fc.cup(add(phi.coords, scale(two, phi2)), p, psi.coords, q) ==
                      add(out, scale(two, fc.cup(phi2, p, psi.coords, q)));
    const bool right = fc.cup(phi.coords, p, add(psi.coords, scale(three, psi2)), q) ==
                       add(out, scale(three, fc.cup(phi.coords, p, psi2, q)));
    r.add("bilinear in φ", left, "random cocycle, seed " + std::to_string(opts.seed));
    r.add("bilinear in ψ", right, "random cocycle, seed " + std::to_string(opts.seed));

    if (p >= 1) {
        const auto trials = class_invariance_first(fc, phi.coords, p, psi.coords, q, opts.seed, opts.trials);
        bool all = true;
        for (const auto& t : trials) all = all && t.coboundary;
        r.add("class invariance under φ -> φ + bη", all,
              std::to_string(trials.size()) + " trials, seed " + std::to_string(opts.seed));
    } else {
        r.notes.push_back("class invariance needs p >= 1; skipped");
    }
    if (A.hopf->dim() == 1) {
        TraceCorrespondence tb(fc.complex_b(), p), ta(fc.complex_a(), q);
        const Vec tphi = tb.to_trace(phi.coords), tpsi = ta.to_trace(psi.coords);
        r.add("H = k: equals the untwisted tensor-product computation",
              fc.evaluate(tphi, p, tpsi, q) == fc.evaluate_untwisted(tphi, p, tpsi, q));
    }
    return r;
}

Report run_cup2(const ResolvedSpec& spec, const std::string& x_name, const std::string& psi_name,
                const std::optional<std::string>& action_name, const RunOptions& opts) {
    Report r = start("cup2", opts);
    r.job = {{"x", x_name}, {"psi", psi_name}};
    if (action_name) r.job["action"] = *action_name;
    const auto& x = spec.cochain(x_name);
    const auto& psi = spec.cochain(psi_name);
    const SymmetryBundle& C = bundle_of_kind(spec, x.bundle, Kind::C, "cup2 x");
    const SymmetryBundle& A = bundle_of_kind(spec, psi.bundle, Kind::A, "cup2 ψ");
    std::optional<CoalgebraAction> act;
    if (action_name) {
        const auto& refs = spec.document().structures.at(*action_name).refs;
        if (refs.at("coalgebra_bundle") != x.bundle || refs.at("algebra_bundle") != psi.bundle)
            throw PreconditionError("cup2: action '" + *action_name + "' acts from '" + refs.at("coalgebra_bundle") +
                                    "' on '" + refs.at("algebra_bundle") + "', not from '" + x.bundle + "' on '" +
                                    psi.bundle + "'");
        act = spec.coalgebra_action(*action_name);
    }
    const std::size_t p = x.degree, q = psi.degree, n = p + q;
    SecondCup sc(C, A, n, act);
    const bool x_cocycle = sc.complex_c().is_cyclic_cocycle(p, x.coords);
    const bool psi_cocycle = sc.complex_a().is_cyclic_cocycle(q, psi.coords);
    const bool closed_formula = act && p == 1 && q == 1;
    r.notes.push_back(std::string("x is ") + (x_cocycle ? "" : "not ") + "a cyclic cocycle of kind C");
    r.notes.push_back(std::string("ψ is ") + (psi_cocycle ? "" : "not ") + "a cyclic cocycle of kind A");
    if (q == 0) r.notes.push_back("q = 0: the characteristic-map specialization");

    if (x_cocycle && psi_cocycle) {
        const std::string hom_target = "ordinary cyclic complex of " + sc.hom().algebra().space.name;
        try {
            const Vec out = sc.cup(x.coords, p, psi.coords, q);
            add_cocycle_checks(r, sc.hom_complex(), n, out, "x ∪ ψ");
            r.cochains.push_back({"x_cup_psi", n, hom_target, out});
            if (act) {
                const Vec pull = sc.pullback(x.coords, p, psi.coords, q);
                add_cocycle_checks(r, sc.pullback_complex(), n, pull, "x # ψ");
                r.cochains.push_back({"x#psi", n, "ordinary cyclic complex of " + A.algebra->space.name, pull});
            }
        } catch (const ConstructionError& e) {
            r.add("cup product output is a cyclic cocycle", false, e.what());
            return r;
        }
        if (p >= 1) {
            const auto trials = class_invariance_second(sc, x.coords, p, psi.coords, q, opts.seed, opts.trials);
            bool all = true;
            for (const auto& t : trials) all = all && t.coboundary;
            r.add("class invariance under x -> x + bη", all,
                  std::to_string(trials.size()) + " trials, seed " + std::to_string(opts.seed));
        } else {
            r.notes.push_back("class invariance needs p >= 1; skipped");
        }
    } else if (!closed_formula) {
        throw PreconditionError("cup2: inputs must be cyclic cocycles (x: " + std::string(x_cocycle ? "yes" : "no") +
                                ", ψ: " + (psi_cocycle ? "yes" : "no") + ")");
    } else {
        r.notes.push_back("cup product skipped: inputs are not both cyclic cocycles");
    }

    if (closed_formula) {
        const Vec lhs = sc.evaluate_pullback(sc.lift_x(x.coords, 1), 1, sc.lift_psi(psi.coords, 1), 1);
        const Vec rhs = closed_formula_degree_one(C, A, *act, x.coords, psi.coords);
        std::string detail = "exact match";
        for (std::size_t i = 0; i < lhs.size(); ++i)
            if (lhs[i] != rhs[i]) {
                detail = "mismatch at " + tuple_labels(A.algebra->space, i, 3) + ": character " + to_string(lhs[i]) +
                         ", formula " + to_string(rhs[i]);
                break;
            }
        r.add("closed-formula check", lhs == rhs, detail);
        r.cochains.push_back({"character", 2, "ordinary cyclic complex of " + A.algebra->space.name, lhs});
    }
    return r;
}

Report run_homotopy(const ResolvedSpec& spec, const std::string& u_name, const RunOptions& opts) {
    Report r = start("homotopy", opts);
    r.job = {{"u", u_name}};
    const Vec& u_vec = spec.element(u_name);
    const std::string bname = spec.document().structures.at(u_name).refs.at("bundle");
    const SymmetryBundle& b = bundle_of_kind(spec, bname, Kind::B, "homotopy");
    const CoinvariantUnit u = coinvariant_unit(b, u_vec);
    const std::size_t N = opts.max_degree;
    CyclicComplex cx(b, N, opts.twists);
    const ValidationReport gates = cx.gates();
    add_checks(r, "complex", gates);
    if (!gates.ok()) return r;

    const HomotopyReport h = check_homotopy(cx, u, N);
    r.add("bκ + κb = Ad_u^* - id on Hochschild cochains, degrees <= " + std::to_string(N), h.sign != 0, h.reading);
    r.conventions["kappa"] = h.reading;
    if (h.literal_holds) r.notes.push_back("the unsigned sum satisfies the identity");
    if (h.negated_holds && !h.literal_holds) r.notes.push_back("the unsigned sum gives bκ + κb = id - Ad_u^*");

    for (const auto& c : compute_cohomology(cx, N)) {
        bool fixed = true;
        for (const Vec& rep : c.representatives) {
            const Vec diff = sub(ad_u_pullback(cx, u, c.degree) * rep, rep);
            fixed = fixed && (c.degree == 0 ? cx.equivalent(0, diff, Vec(diff.size()))
                                            : cx.coboundary_test(c.degree, diff).has_value());
        }
        r.add("Ad_u^* fixes HC^" + std::to_string(c.degree) + " classes", fixed,
              std::to_string(c.representatives.size()) + " representatives");
        r.dims["HC"].push_back(c.hc_dim);
    }
    return r;
}

Report run_job(const std::string& command, const std::string& file, const std::function<Report()>& body) {
    auto failed = [&](int code, const std::string& msg) {
        Report r;
        r.command = command;
        r.file = file;
        r.error = msg;
        r.exit_code = code;
        return r;
    };
    try {
        Report r = body();
        r.file = file;
        r.exit_code = r.all_pass() ? 0 : 1;
        return r;
    } catch (const BudgetExceeded& e) {
        return failed(3, std::string("resource budget exceeded: ") + e.what());
    } catch (const ConstructionError& e) {
        return failed(1, std::string("construction failed: ") + e.what());
    } catch (const SpecParseError& e) {
        return failed(2, std::string("parse error: ") + e.what());
    } catch (const SpecResolutionError& e) {
        return failed(2, std::string("resolution error: ") + e.what());
    } catch (const PreconditionError& e) {
        return failed(2, std::string("precondition failed: ") + e.what());
    } catch (const CatalogError& e) {
        return failed(2, std::string("catalog error: ") + e.what());
    } catch (const std::exception& e) {
        return failed(2, std::string("input error: ") + e.what());
    }
}

}  // namespace hcc
