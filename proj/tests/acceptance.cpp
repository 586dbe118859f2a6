// Acceptance run: one PASS/FAIL line per criterion.  Exit status is the
// number of failed criteria (0 when all pass).
#include "hcc/morphisms.hpp"
#include "hcc/products.hpp"
#include "hcc/specfile.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hcc;
using hcc::test::bundle;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (problems.size() < 5) problems.push_back(what);
        }
    }
};

const std::vector<std::string> kBundles = {"A=k",  "signA",   "signA-Msigma",   "B=H-kZ2", "B=H-kZ2-Msigma",
                                           "B=M2", "C=H-kZ2", "C=H-kZ2-Msigma", "C=H-kZ3"};

Matrix power(const Matrix& m, std::size_t k) {
    Matrix r = Matrix::identity(m.rows());
    for (std::size_t i = 0; i < k; ++i) r = m * r;
    return r;
}

bool in_ker_b_and_cyclic(const CyclicComplex& cx, std::size_t n, const Vec& v) {
    return is_zero(cx.b(n) * v) && cx.lambda(n) * v == v;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 1. Axioms of fixtures and mutants.
Outcome axioms() {
    Outcome o;
    std::size_t fixtures = 0, mutants = 0;
    for (const auto& name : fixture_names()) {
        const FixtureBundle f = fixture(name);
        const ValidationReport r = f.validate();
        if (!f.mutant) {
            ++fixtures;
            o.require(r.ok(), name + " fails " + (r.ok() ? "" : r.failed_axioms().front()));
            continue;
        }
        ++mutants;
        auto failed = r.failed_axioms();
        std::sort(failed.begin(), failed.end());
        const AxiomCheck* primary = r.find(f.primary_axiom);
        o.require(failed == f.expected_failures, name + ": unexpected failure set");
        o.require(primary && !primary->pass && !primary->witness.empty(), name + ": no witness for " + f.primary_axiom);
    }
    o.require(mutants >= 20, "fewer than 20 mutants");
    o.detail = std::to_string(fixtures) + " fixtures valid, " + std::to_string(mutants) +
               " mutants fail their recorded axiom with a witness";
    return o;
}

// 2. Cocyclic identities, n <= 3, and the non-SAYD control.
Outcome identities() {
    Outcome o;
    set_entry_budget(1u << 22);
    for (const auto& name : kBundles) {
        CyclicComplex cx(bundle(name), 3);
        o.require(cx.gates().ok(), name + ": gates");
        for (std::size_t n = 0; n <= 3; ++n) {
            const Matrix lam = power(cx.lambda(n), n + 1);
            for (const Vec& v : cx.space(n).equivariant.basis_vectors()) {
                o.require(cx.equivalent(n, lam * v, v), name + ": λ^(n+1) at " + std::to_string(n));
                if (n + 1 <= 3)
                    o.require(cx.space(n + 2).null.contains(cx.b(n + 1) * (cx.b(n) * v)),
                              name + ": b² at " + std::to_string(n));
            }
            for (const Vec& v : cx.cyclic_cochains(n).basis_vectors()) {
                const Vec w = cx.b(n) * v;
                o.require(cx.equivalent(n + 1, cx.lambda(n + 1) * w, w), name + ": b on ker(1-λ) at " + std::to_string(n));
            }
        }
    }
    set_entry_budget(1000000);
    std::string broken;
    for (const std::string name : {"signA", "B=H-kZ2", "C=H-kZ2"}) {
        SymmetryBundle b = bundle(name);
        b.coeffs = *fixture("Mtriv-badAYD").sayd;
        const ValidationReport g = CyclicComplex(b, 3).gates();
        o.require(!g.ok(), name + " with Mtriv-badAYD passes all gates");
        if (!g.ok()) broken += (broken.empty() ? "" : "; ") + name + ": " + g.failed_axioms().front();
    }
    o.detail = "b²=0, λ^(n+1)=id, b(ker(1-λ)) ⊂ ker(1-λ) on " + std::to_string(kBundles.size()) +
               " bundles, n <= 3; Mtriv-badAYD breaks " + broken;
    return o;
}

// 3. Trace correspondences.
Outcome traces() {
    Outcome o;
    std::size_t reps = 0;
    for (const auto& name : kBundles) {
        CyclicComplex cx(bundle(name), 2);
        const auto hc = compute_cohomology(cx, 2);
        for (std::size_t n = 0; n <= 2; ++n) {
            TraceCorrespondence tc(cx, n);
            const Subspace tnull = tc.trace_null();
            for (const Vec& rep : hc[n].representatives) {
                ++reps;
                const Vec t = tc.to_trace(rep);
                o.require(tc.check_trace(t).ok(), name + ": trace invariants at " + std::to_string(n));
                o.require(cx.equivalent(n, tc.to_cocycle(t), rep), name + ": to_cocycle∘to_trace at " + std::to_string(n));
                o.require(tnull.contains(sub(tc.to_trace(tc.to_cocycle(t)), t)),
                          name + ": to_trace∘to_cocycle at " + std::to_string(n));
            }
        }
    }
    o.detail = std::to_string(reps) + " HC representatives, kinds A/B/C, n <= 2: both round trips exact";
    return o;
}

// 4. Homotopy κ and Ad_u^*.
Outcome homotopy() {
    Outcome o;
    CyclicComplex cx(bundle("B=M2"), 2);
    const auto hc = compute_cohomology(cx, 2);
    int sign = 0;
    for (const Vec& uv : {Vec{1, 1, 0, 1}, Vec{1, 0, 0, -1}, Vec{0, 1, 2, 0}}) {
        const CoinvariantUnit u = coinvariant_unit(cx.bundle(), uv);
        const HomotopyReport r = check_homotopy(cx, u, 2);
        o.require(r.sign != 0, "no reading of κ satisfies the homotopy formula");
        sign = r.sign;
        for (const auto& c : hc)
            for (const Vec& rep : c.representatives) {
                const Vec diff = sub(ad_u_pullback(cx, u, c.degree) * rep, rep);
                o.require(c.degree == 0 ? is_zero(diff) : cx.coboundary_test(c.degree, diff).has_value(),
                          "Ad_u^* moves a class in degree " + std::to_string(c.degree));
            }
    }
    o.detail = "B=M2, 3 units, n <= 2: bκ + κb = Ad_u^* - id exactly (" +
               std::string(sign == -1 ? "κ with overall sign -1" : "κ as written") + "); Ad_u^* fixes every HC class";
    return o;
}

// 5. i*∘Tr = id.
Outcome matrices() {
    Outcome o;
    for (const std::string name : {"B=H-kZ2", "B=H-kZ2-Msigma"}) {
        MatrixMaps maps(bundle(name), 2);
        for (std::size_t n = 0; n <= 2; ++n) {
            const Matrix p = maps.i_star(n) * maps.trace_map(n);
            o.require(p == Matrix::identity(p.rows()), name + ": i*∘Tr at " + std::to_string(n));
        }
    }
    o.detail = "M2(B) for B=H-kZ2 (two coefficient choices), p <= 2: i*∘Tr = id";
    return o;
}

// 6. Ad_χ on HC classes.
Outcome convolution_units() {
    Outcome o;
    const SymmetryBundle c = bundle("C=H-kZ2");
    CyclicComplex cx(c, 2);
    const auto hc = compute_cohomology(cx, 2);
    std::size_t count = 0;
    for (const Rational a : {Rational(1), Rational(2), Rational(-1, 3), Rational(5)}) {
        const ConvolutionUnit chi = convolution_unit(c, Vec{a, a});
        ++count;
        for (const auto& r : hc)
            for (const Vec& rep : r.representatives) {
                const Vec moved = ad_chi_pullback(cx, chi, r.degree) * rep;
                o.require(r.degree == 0 ? cx.equivalent(0, moved, rep)
                                        : cx.coboundary_test(r.degree, sub(moved, rep)).has_value(),
                          "Ad_χ moves a class");
            }
    }
    o.detail = "C=H-kZ2, " + std::to_string(count) + " admissible χ, q <= 2: every class fixed";
    return o;
}

// 7. First cup product.
Outcome first_cup() {
    Outcome o;
    std::size_t outputs = 0, perturbations = 0;
    for (const std::string coeffs : {"", "-Msigma"}) {
        FirstCup fc(bundle("signA" + coeffs), bundle("B=H-kZ2" + coeffs), 2);
        std::mt19937_64 rng(2024);
        for (std::size_t p = 0; p <= 2; ++p)
            for (std::size_t q = 0; p + q <= 2; ++q) {
                const Subspace zb = fc.complex_b().cocycles(p), za = fc.complex_a().cocycles(q);
                if (zb.dim() == 0 || za.dim() == 0) continue;
                for (const Vec& phi : zb.basis_vectors())
                    for (const Vec& psi : za.basis_vectors()) {
                        ++outputs;
                        o.require(in_ker_b_and_cyclic(fc.target_complex(), p + q, fc.cup(phi, p, psi, q)),
                                  "output not in ker b ∩ ker(1-λ)");
                        if (p >= 1)
                            for (std::uint64_t seed = 1; seed <= 5; ++seed)
                                for (const auto& t : class_invariance_first(fc, phi, p, psi, q, seed, 1)) {
                                    ++perturbations;
                                    o.require(t.coboundary, "class invariance");
                                }
                    }
                const Vec f1 = random_element(zb, rng), f2 = random_element(zb, rng), g1 = random_element(za, rng);
                o.require(fc.cup(add(f1, scale(Rational(-7, 2), f2)), p, g1, q) ==
                              add(fc.cup(f1, p, g1, q), scale(Rational(-7, 2), fc.cup(f2, p, g1, q))),
                          "bilinearity");
            }
    }
    FirstCup plain(bundle("A=k"), bundle("B=M2"), 2);
    const auto ha = compute_cohomology(plain.complex_a(), 2), hb = compute_cohomology(plain.complex_b(), 2);
    std::size_t compared = 0;
    for (const auto& ra : ha)
        for (const auto& rb : hb) {
            if (ra.degree + rb.degree > 2) continue;
            TraceCorrespondence tb(plain.complex_b(), rb.degree), ta(plain.complex_a(), ra.degree);
            for (const Vec& phi : rb.representatives)
                for (const Vec& psi : ra.representatives) {
                    ++compared;
                    const Vec pt = tb.to_trace(phi), qt = ta.to_trace(psi);
                    o.require(plain.evaluate(pt, rb.degree, qt, ra.degree) ==
                                  plain.evaluate_untwisted(pt, rb.degree, qt, ra.degree),
                              "H=k mismatch");
                    ++outputs;
                    o.require(in_ker_b_and_cyclic(plain.target_complex(), ra.degree + rb.degree,
                                                  plain.cup(phi, rb.degree, psi, ra.degree)),
                              "output not in ker b ∩ ker(1-λ)");
                    if (rb.degree >= 1)
                        for (const auto& t : class_invariance_first(plain, phi, rb.degree, psi, ra.degree, 99, 5)) {
                            ++perturbations;
                            o.require(t.coboundary, "class invariance");
                        }
                }
        }
    o.detail = std::to_string(outputs) + " cup outputs cyclic cocycles, bilinear; " + std::to_string(perturbations) +
               " seeded perturbations invariant; H=k matches plain tensor product on " + std::to_string(compared) +
               " pairs";
    return o;
}

// 8. Closed formula at p = q = 1, checked against a hand evaluation on signA.
Outcome golden() {
    using hcc::test::sign_act;
    using hcc::test::sign_mul;
    using hcc::test::SignMonomial;
    Outcome o;
    const SymmetryBundle c = bundle("C=H-kZ2"), a = bundle("signA");
    const CoalgebraAction act = hopf_action_pairing(c, a);
    SecondCup sc(c, a, 2, act);
    std::size_t entries = 0;
    for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1)
            for (int j0 = 0; j0 < 2; ++j0)
                for (int j1 = 0; j1 < 2; ++j1) {
                    Vec x(4), phi(4);
                    x[c0 * 2 + c1] = 1;
                    phi[j0 * 2 + j1] = 1;
                    const Vec engine = sc.evaluate_pullback(sc.lift_x(x, 1), 1, sc.lift_psi(phi, 1), 1);
                    auto f = [&](SignMonomial u, SignMonomial v) {
                        return (u.power == j0 && v.power == j1) ? u.coeff * v.coeff : 0;
                    };
                    for (int a0 = 0; a0 < 2; ++a0)
                        for (int a1 = 0; a1 < 2; ++a1)
                            for (int a2 = 0; a2 < 2; ++a2) {
                                const SignMonomial x0{1, a0}, x1{1, a1}, x2{1, a2};
                                const int expected =
                                    f(sign_act(c0, x0), sign_mul(sign_act(c0, x1), sign_act(c1, x2))) -
                                    f(sign_mul(sign_act(c0, x0), sign_act(c1, x1)), sign_act(c1, x2));
                                ++entries;
                                o.require(engine.at(a0 * 4 + a1 * 2 + a2) == expected, "closed formula mismatch");
                            }
                }
    const auto cli = hcc::test::run(hcc::test::hcs("cup2 " + hcc::test::fixture_path("cup2-kZ2-signA.hcs")));
    o.require(cli.exit_code == 0 && cli.out.find("PASS closed-formula check: exact match") != std::string::npos,
              "CLI job does not report an exact match");
    o.detail = "16 basis (x, φ) pairs x 8 basis triples = " + std::to_string(entries) +
               " entries equal the hand evaluation; CLI job reports exact match";
    return o;
}

// 9. Desk-scale numbers.
Outcome desk(std::chrono::steady_clock::time_point start) {
    Outcome o;
    auto dims = [](const std::string& name) {
        CyclicComplex cx(bundle(name), 2);
        std::vector<std::size_t> d;
        for (const auto& r : compute_cohomology(cx, 2)) d.push_back(r.hc_dim);
        return d;
    };
    const std::vector<std::size_t> expected{1, 0, 1};
    o.require(dims("A=k") == expected, "HC(k) != (1, 0, 1)");
    o.require(dims("C=H-kZ2") == expected, "HC of C=H-kZ2 != (1, 0, 1)");
    CyclicComplex sa(bundle("signA"), 1);
    const auto h0 = compute_cohomology(sa, 0).at(0);
    o.require(h0.hc_dim == 1, "signA HC^0 dimension");
    o.require(h0.hc_dim == 1 && h0.representatives[0] == Vec{1, 0}, "signA HC^0 representative");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 300, "acceptance run exceeded 5 minutes");
    std::ostringstream ss;
    ss.precision(1);
    ss << std::fixed << secs;
    o.detail = "HC(k) = (1,0,1); HC(C=H-kZ2) = (1,0,1); signA HC^0 = span{τ(1)=1, τ(x)=0}; criteria 1-9 ran in " +
               ss.str() + " s";
    return o;
}

// 10. CLI contract.
Outcome cli() {
    using hcc::test::fixture_path;
    using hcc::test::hcs;
    using hcc::test::run;
    Outcome o;
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(FIXTURE_DIR)) {
        if (e.path().extension() != ".hcs") continue;
        ++files;
        const std::string text = slurp(e.path());
        o.require(serialize_spec(parse_spec(text)) == text, e.path().filename().string() + " not canonical");
    }
    for (const std::string args : {"hc " + fixture_path("signA.hcs"), "--out json cup1 " + fixture_path("cup1-kZ2-signA.hcs"),
                                   "homotopy " + fixture_path("homotopy-M2.hcs")}) {
        const auto a = run(hcs(args)), b = run(hcs(args));
        o.require(a.out == b.out && a.exit_code == b.exit_code, "non-deterministic: " + args);
    }
    o.require(run(hcs("verify " + fixture_path("kZ2.hcs"))).exit_code == 0, "exit 0");
    o.require(run(hcs("verify " + fixture_path("Mtriv-badAYD.hcs"))).exit_code == 1, "exit 1");
    const fs::path bad = fs::temp_directory_path() / "hcc-acceptance-bad.hcs";
    std::ofstream(bad, std::ios::binary) << "{\n  \"field\": \"Q\",\n  \"spaces\": {\"a\": [\"1\"],}\n}\n";
    const auto err = run(hcs("verify " + bad.string()));
    fs::remove(bad);
    o.require(err.exit_code == 2, "exit 2");
    o.require(err.out.find("line 3, column") != std::string::npos, "error without position");
    o.require(run(hcs("--budget 2000 hc " + fixture_path("B_M2.hcs"))).exit_code == 3, "exit 3");
    o.detail = std::to_string(files) + " shipped files round-trip byte-identically; reports deterministic; exits 0/1/2/3 "
               "as contracted; syntax errors carry line and column";
    return o;
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"axiom suite", axioms},
        {"cocyclic identities", identities},
        {"trace correspondences", traces},
        {"homotopy κ", homotopy},
        {"i*∘Tr = id", matrices},
        {"convolution units", convolution_units},
        {"first cup product", first_cup},
        {"closed formula, p = q = 1", golden},
        {"desk-scale numbers", [start] { return desk(start); }},
        {"CLI contract", cli},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failed;
        std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
                  << o.detail;
        for (const auto& p : o.problems) std::cout << " [" << p << "]";
        std::cout << "\n";
    }
    return failed;
}
