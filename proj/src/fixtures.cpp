#include "hcc/fixtures.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace hcc {

namespace {

struct Entry {
    std::size_t row, col;
    Rational value;
};

Matrix from_entries(std::size_t rows, std::size_t cols, const std::vector<Entry>& entries) {
    Matrix m(rows, cols);
    for (const auto& e : entries) m(e.row, e.col) = e.value;
    return m;
}

// Raw tables of a Hopf algebra; mutants edit these before assembly.
struct RawHopf {
    Space space;
    Matrix mult, comult, antipode;
    Vec unit, counit;

    HopfPtr build() const {
        return std::make_shared<const Hopf>(Algebra(space, mult, unit), Coalgebra(space, comult, counit), antipode);
    }
    Algebra algebra() const { return Algebra(space, mult, unit); }
    Coalgebra coalgebra() const { return Coalgebra(space, comult, counit); }
};

RawHopf raw_group(const std::string& name, const std::vector<std::string>& labels,
                  const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
    const std::size_t d = labels.size();
    RawHopf r{Space(name, labels), Matrix(d, d * d), Matrix(d * d, d), Matrix(d, d), Vec(d), Vec(d)};
    r.unit[0] = 1;
    for (std::size_t i = 0; i < d; ++i) {
        r.counit[i] = 1;
        r.comult(i * d + i, i) = 1;
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t k = mul(i, j);
            r.mult(k, i * d + j) = 1;
            if (k == 0) r.antipode(j, i) = 1;
        }
    }
    return r;
}

RawHopf raw_trivial() { return raw_group("k", {"1"}, [](std::size_t, std::size_t) { return std::size_t{0}; }); }

RawHopf raw_cyclic(std::size_t n) {
    std::vector<std::string> labels{"1"};
    for (std::size_t i = 1; i < n; ++i) labels.push_back(i == 1 ? "g" : "g" + std::to_string(i));
    return raw_group("kZ" + std::to_string(n), labels, [n](std::size_t i, std::size_t j) { return (i + j) % n; });
}

RawHopf raw_s3() {
    // Permutations of {0,1,2} as images; product is composition (στ)(i) = σ(τ(i)).
    const std::vector<std::array<std::size_t, 3>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto mul = [perms](std::size_t i, std::size_t j) {
        std::array<std::size_t, 3> p{};
        for (std::size_t k = 0; k < 3; ++k) p[k] = perms[i][perms[j][k]];
        return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    };
    return raw_group("kS3", {"1", "a", "b", "c", "r", "r2"}, mul);
}

RawHopf raw_sweedler() {
    // Basis g^a x^b at index a + 2b: 1, g, x, gx.
    RawHopf r{Space("sweedler4", {"1", "g", "x", "gx"}), Matrix(4, 16), Matrix(16, 4), Matrix(4, 4), Vec(4), Vec(4)};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const std::size_t a = i % 2, b = i / 2, c = j % 2, e = j / 2;
            if (b + e >= 2) continue;
            // x g = -g x
            r.mult(((a + c) % 2) + 2 * (b + e), i * 4 + j) = (b * c) % 2 ? -1 : 1;
        }
    r.unit[0] = 1;
    r.counit[0] = 1;
    r.counit[1] = 1;
    auto put = [&](std::size_t c, std::size_t i, std::size_t j, int v) { r.comult(i * 4 + j, c) = v; };
    put(0, 0, 0, 1);
    put(1, 1, 1, 1);
    put(2, 2, 0, 1);  // x ⊗ 1
    put(2, 1, 2, 1);  // g ⊗ x
    put(3, 3, 1, 1);  // gx ⊗ g
    put(3, 0, 3, 1);  // 1 ⊗ gx
    r.antipode(0, 0) = 1;
    r.antipode(1, 1) = 1;
    r.antipode(3, 2) = -1;  // S(x) = -gx
    r.antipode(2, 3) = 1;   // S(gx) = x
    return r;
}

struct RawSignA {
    Space space{"A", {"1", "x"}};
    Matrix mult = from_entries(2, 4, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}, {0, 3, 1}});
    Vec unit{Rational(1), Rational(0)};
    // columns h*2+v: 1·1, 1·x, g·1, g·x
    Matrix act = from_entries(2, 4, {{0, 0, 1}, {1, 1, 1}, {0, 2, 1}, {1, 3, -1}});
};

SymmetryBundle sign_bundle(const HopfPtr& h, const RawSignA& raw, const SAYD& coeffs) {
    SymmetryBundle b;
    b.name = "signA";
    b.kind = Kind::A;
    b.hopf = h;
    b.algebra = Algebra(raw.space, raw.mult, raw.unit);
    b.action = Action(h, raw.space, raw.act);
    b.coeffs = coeffs;
    return b;
}

SAYD msigma(const HopfPtr& h) {
    return modular_pair_module(h, ModularPair{h->coalgebra.counit, unit_vector(h->dim(), 1)});
}

Space k_space() { return Space("k", {"1"}); }

FixtureBundle make_mutant(std::string name, std::string description, FixtureType type, std::string primary,
                          std::vector<std::string> failures) {
    FixtureBundle f;
    f.name = std::move(name);
    f.description = std::move(description);
    f.type = type;
    f.mutant = true;
    f.primary_axiom = std::move(primary);
    std::sort(failures.begin(), failures.end());
    f.expected_failures = std::move(failures);
    return f;
}

using Builder = std::function<FixtureBundle()>;

const std::vector<std::pair<std::string, Builder>>& catalog() {
    static const std::vector<std::pair<std::string, Builder>> entries = [] {
        std::vector<std::pair<std::string, Builder>> v;
        auto hopf_fixture = [](std::string name, std::string desc, RawHopf (*raw)()) {
            return std::make_pair(name, Builder([name, desc, raw] {
                FixtureBundle f;
                f.name = name;
                f.description = desc;
                f.type = FixtureType::Hopf;
                f.hopf = raw().build();
                return f;
            }));
        };
        v.push_back(hopf_fixture("k", "ground field as a Hopf algebra", raw_trivial));
        v.push_back(hopf_fixture("kZ2", "group algebra of Z/2, basis 1, g", [] { return raw_cyclic(2); }));
        v.push_back(hopf_fixture("kZ3", "group algebra of Z/3, basis 1, g, g2", [] { return raw_cyclic(3); }));
        v.push_back(hopf_fixture("kS3", "group algebra of S3; a, b, c transpositions, r, r2 three-cycles", raw_s3));
        v.push_back(hopf_fixture("sweedler4", "Sweedler algebra: g^2=1, x^2=0, xg=-gx, Δx=x⊗1+g⊗x", raw_sweedler));

        v.emplace_back("Mtriv", [] {
            FixtureBundle f;
            f.name = "Mtriv";
            f.description = "k over kZ2 with trivial action and coaction";
            f.type = FixtureType::SAYD;
            f.hopf = raw_cyclic(2).build();
            f.sayd = trivial_sayd(f.hopf);
            return f;
        });
        v.emplace_back("Msigma", [] {
            FixtureBundle f;
            f.name = "Msigma";
            f.description = "k over kZ2 from the modular pair (ε, g): trivial action, coaction 1 ↦ g⊗1";
            f.type = FixtureType::SAYD;
            f.hopf = raw_cyclic(2).build();
            f.sayd = msigma(f.hopf);
            return f;
        });

        v.emplace_back("Mreg-sweedler4", [] {
            FixtureBundle f;
            f.name = "Mreg-sweedler4";
            f.description = "sweedler4 over itself: h·m = h^(1) m S^-1(h^(2)), coaction Δ";
            f.type = FixtureType::SAYD;
            f.hopf = raw_sweedler().build();
            f.sayd = regular_sayd(f.hopf);
            return f;
        });

        auto bundle_fixture = [](std::string name, std::string desc, std::function<SymmetryBundle()> make,
                                 std::vector<std::size_t> hc = {}) {
            return std::make_pair(name, Builder([name, desc, make, hc] {
                FixtureBundle f;
                f.name = name;
                f.description = desc;
                f.type = FixtureType::Bundle;
                f.bundle = make();
                f.bundle->name = name;
                f.hopf = f.bundle->hopf;
                f.expected_hc = hc;
                return f;
            }));
        };
        v.push_back(bundle_fixture("A=k", "kind A: A = k over H = k, M = k", [] {
            auto h = raw_trivial().build();
            SymmetryBundle b;
            b.kind = Kind::A;
            b.hopf = h;
            b.algebra = Algebra(Space("A", {"1"}), Matrix::identity(1), Vec{Rational(1)});
            b.action = trivial_action(h, Space("A", {"1"}));
            b.coeffs = trivial_sayd(h);
            return b;
        }, {1, 0, 1}));
        v.push_back(bundle_fixture("signA", "kind A: A = k[x]/(x^2-1) over kZ2 with g·x = -x, M = Mtriv", [] {
            auto h = raw_cyclic(2).build();
            return sign_bundle(h, RawSignA{}, trivial_sayd(h));
        }, {1}));
        v.push_back(bundle_fixture("signA-Msigma", "kind A: signA with coefficients Msigma", [] {
            auto h = raw_cyclic(2).build();
            return sign_bundle(h, RawSignA{}, msigma(h));
        }));
        v.push_back(bundle_fixture("B=H-kZ2", "kind B: B = kZ2 with coaction Δ, M = Mtriv", [] {
            auto h = raw_cyclic(2).build();
            return regular_comodule_bundle("B=H-kZ2", h, trivial_sayd(h));
        }));
        v.push_back(bundle_fixture("B=H-kZ2-Msigma", "kind B: B = kZ2 with coaction Δ, M = Msigma", [] {
            auto h = raw_cyclic(2).build();
            return regular_comodule_bundle("B=H-kZ2-Msigma", h, msigma(h));
        }));
        v.push_back(bundle_fixture("B=M2", "kind B: B = M2(k) over H = k, M = k", [] {
            auto h = raw_trivial().build();
            SymmetryBundle base;
            base.kind = Kind::B;
            base.hopf = h;
            base.algebra = Algebra(Space("B", {"1"}), Matrix::identity(1), Vec{Rational(1)});
            base.coaction = trivial_coaction(h, Space("B", {"1"}));
            base.coeffs = trivial_sayd(h);
            return matrix_bundle(base, 2);
        }));
        v.push_back(bundle_fixture("B=M2(H-kZ2)", "kind B: 2x2 matrices over B = kZ2, entrywise coaction, M = Mtriv", [] {
            auto h = raw_cyclic(2).build();
            return matrix_bundle(regular_comodule_bundle("B=H-kZ2", h, trivial_sayd(h)), 2);
        }));
        v.push_back(bundle_fixture("C=H-kZ2", "kind C: C = kZ2 with left multiplication, M = Mtriv", [] {
            auto h = raw_cyclic(2).build();
            return regular_module_bundle("C=H-kZ2", h, trivial_sayd(h));
        }, {1, 0, 1}));
        v.push_back(bundle_fixture("C=H-kZ2-Msigma", "kind C: C = kZ2 with left multiplication, M = Msigma", [] {
            auto h = raw_cyclic(2).build();
            return regular_module_bundle("C=H-kZ2-Msigma", h, msigma(h));
        }));
        v.push_back(bundle_fixture("C=H-kZ3", "kind C: C = kZ3 with left multiplication, M = k", [] {
            auto h = raw_cyclic(3).build();
            return regular_module_bundle("C=H-kZ3", h, trivial_sayd(h));
        }, {1, 0, 1}));
        v.push_back(bundle_fixture("C=H-sweedler4", "kind C: C = sweedler4 with left multiplication, M from the modular pair (ε, g)", [] {
            auto h = raw_sweedler().build();
            return regular_module_bundle("C=H-sweedler4", h, msigma(h));
        }));

        // ------------------------------------------------------------ mutants
        v.emplace_back("kZ2-badcoassoc", [] {
            auto f = make_mutant("kZ2-badcoassoc", "kZ2 with Δg = g⊗g + g⊗1", FixtureType::Hopf, "coassociativity",
                                 {"coassociativity", "left counit", "right counit", "comultiplication multiplicative",
                                  "antipode left", "antipode right"});
            auto r = raw_cyclic(2);
            r.comult(1 * 2 + 0, 1) = 1;
            f.hopf = r.build();
            return f;
        });
        v.emplace_back("Mtriv-badAYD", [] {
            auto f = make_mutant("Mtriv-badAYD", "Msigma with g acting by -1: coaction 1 ↦ g⊗1, action through the sign character",
                                 FixtureType::SAYD, "stability", {"stability"});
            f.hopf = raw_cyclic(2).build();
            SAYD m = msigma(f.hopf);
            Matrix act = m.action.act;
            act(0, 1) = -1;
            f.sayd = SAYD{Action(f.hopf, m.action.carrier, act), m.coaction};
            return f;
        });
        v.emplace_back("kZ3-alg-assoc", [] {
            auto f = make_mutant("kZ3-alg-assoc", "kZ3 algebra with g·g2 = 0", FixtureType::Algebra, "associativity", {"associativity"});
            auto r = raw_cyclic(3);
            r.mult(0, 1 * 3 + 2) = 0;
            f.algebra = r.algebra();
            return f;
        });
        v.emplace_back("kZ2-alg-unit", [] {
            auto f = make_mutant("kZ2-alg-unit", "kZ2 algebra with unit vector 1 + g", FixtureType::Algebra, "left unit",
                                 {"left unit", "right unit"});
            auto r = raw_cyclic(2);
            r.unit[1] = 1;
            f.algebra = r.algebra();
            return f;
        });
        v.emplace_back("kZ2-alg-leftmul", [] {
            auto f = make_mutant("kZ2-alg-leftmul", "kZ2 algebra with 1·g = 0", FixtureType::Algebra, "left unit",
                                 {"associativity", "left unit"});
            auto r = raw_cyclic(2);
            r.mult(1, 0 * 2 + 1) = 0;
            f.algebra = r.algebra();
            return f;
        });
        v.emplace_back("sweedler4-alg-xx", [] {
            auto f = make_mutant("sweedler4-alg-xx", "sweedler4 algebra with x·x = 1", FixtureType::Algebra, "associativity",
                                 {"associativity"});
            auto r = raw_sweedler();
            r.mult(0, 2 * 4 + 2) = 1;
            f.algebra = r.algebra();
            return f;
        });
        v.emplace_back("kZ2-coalg-counit", [] {
            auto f = make_mutant("kZ2-coalg-counit", "kZ2 coalgebra with ε(g) = 0", FixtureType::Coalgebra, "left counit",
                                 {"left counit", "right counit"});
            auto r = raw_cyclic(2);
            r.counit[1] = 0;
            f.coalgebra = r.coalgebra();
            return f;
        });
        v.emplace_back("kZ3-coalg-scaled", [] {
            auto f = make_mutant("kZ3-coalg-scaled", "kZ3 coalgebra with Δg = 2 g⊗g", FixtureType::Coalgebra, "left counit",
                                 {"left counit", "right counit"});
            auto r = raw_cyclic(3);
            r.comult(1 * 3 + 1, 1) = 2;
            f.coalgebra = r.coalgebra();
            return f;
        });
        v.emplace_back("sweedler4-coalg-coassoc", [] {
            auto f = make_mutant("sweedler4-coalg-coassoc", "sweedler4 coalgebra with Δx = x⊗1 + g⊗x + x⊗x",
                                 FixtureType::Coalgebra, "coassociativity", {"coassociativity"});
            auto r = raw_sweedler();
            r.comult(2 * 4 + 2, 2) = 1;
            f.coalgebra = r.coalgebra();
            return f;
        });
        v.emplace_back("kZ2-antipode-scaled", [] {
            auto f = make_mutant("kZ2-antipode-scaled", "kZ2 with S(g) = 2g", FixtureType::Hopf, "antipode left",
                                 {"antipode left", "antipode right"});
            auto r = raw_cyclic(2);
            r.antipode(1, 1) = 2;
            f.hopf = r.build();
            return f;
        });
        v.emplace_back("kZ3-antipode-singular", [] {
            auto f = make_mutant("kZ3-antipode-singular", "kZ3 with S(g2) = 0", FixtureType::Hopf, "antipode invertible",
                                 {"antipode left", "antipode right", "antipode invertible"});
            auto r = raw_cyclic(3);
            r.antipode(1, 2) = 0;
            f.hopf = r.build();
            return f;
        });
        v.emplace_back("sweedler4-antipode-sign", [] {
            auto f = make_mutant("sweedler4-antipode-sign", "sweedler4 with S(x) = gx", FixtureType::Hopf, "antipode left",
                                 {"antipode left", "antipode right"});
            auto r = raw_sweedler();
            r.antipode(3, 2) = 1;
            f.hopf = r.build();
            return f;
        });
        v.emplace_back("kZ2-counit-sign", [] {
            auto f = make_mutant("kZ2-counit-sign", "kZ2 with ε(g) = -1", FixtureType::Hopf, "left counit",
                                 {"left counit", "right counit", "antipode left", "antipode right"});
            auto r = raw_cyclic(2);
            r.counit[1] = -1;
            f.hopf = r.build();
            return f;
        });
        v.emplace_back("k-counit", [] {
            auto f = make_mutant("k-counit", "trivial Hopf algebra with ε(1) = 2", FixtureType::Hopf, "counit unital",
                                 {"left counit", "right counit", "counit multiplicative", "counit unital", "antipode left",
                                  "antipode right"});
            auto r = raw_trivial();
            r.counit[0] = 2;
            f.hopf = r.build();
            return f;
        });
        v.emplace_back("k-comult", [] {
            auto f = make_mutant("k-comult", "trivial Hopf algebra with Δ1 = 2·1⊗1", FixtureType::Hopf, "comultiplication unital",
                                 {"left counit", "right counit", "comultiplication multiplicative", "comultiplication unital",
                                  "antipode left", "antipode right"});
            auto r = raw_trivial();
            r.comult(0, 0) = 2;
            f.hopf = r.build();
            return f;
        });
        v.emplace_back("k-unit", [] {
            auto f = make_mutant("k-unit", "trivial Hopf algebra with unit vector 2", FixtureType::Hopf, "left unit",
                                 {"left unit", "right unit", "comultiplication unital", "counit unital", "antipode left",
                                  "antipode right"});
            auto r = raw_trivial();
            r.unit[0] = 2;
            f.hopf = r.build();
            return f;
        });
        v.emplace_back("signA-action-scaled", [] {
            auto f = make_mutant("signA-action-scaled", "kZ2 acting on k[x]/(x^2-1) with g·x = -2x", FixtureType::Action,
                                 "action associativity", {"action associativity"});
            f.hopf = raw_cyclic(2).build();
            RawSignA raw;
            raw.act(1, 3) = -2;
            f.action = Action(f.hopf, raw.space, raw.act);
            return f;
        });
        v.emplace_back("signA-action-unit", [] {
            auto f = make_mutant("signA-action-unit", "kZ2 acting on k[x]/(x^2-1) with 1·x = 0", FixtureType::Action,
                                 "action unit", {"action associativity", "action unit"});
            f.hopf = raw_cyclic(2).build();
            RawSignA raw;
            raw.act(1, 1) = 0;
            f.action = Action(f.hopf, raw.space, raw.act);
            return f;
        });
        v.emplace_back("Msigma-coaction-scaled", [] {
            auto f = make_mutant("Msigma-coaction-scaled", "Msigma with coaction 1 ↦ 2g⊗1", FixtureType::SAYD,
                                 "coaction counit", {"coaction coassociativity", "coaction counit", "stability"});
            f.hopf = raw_cyclic(2).build();
            SAYD m = msigma(f.hopf);
            Matrix co = m.coaction.coact;
            co(1, 0) = 2;
            f.sayd = SAYD{m.action, Coaction(f.hopf, m.coaction.carrier, co)};
            return f;
        });
        v.emplace_back("Mtriv-coaction-extra", [] {
            auto f = make_mutant("Mtriv-coaction-extra", "Mtriv with coaction 1 ↦ 1⊗1 + g⊗1", FixtureType::SAYD,
                                 "coaction coassociativity", {"coaction coassociativity", "coaction counit", "stability"});
            f.hopf = raw_cyclic(2).build();
            SAYD m = trivial_sayd(f.hopf);
            Matrix co = m.coaction.coact;
            co(1, 0) = 1;
            f.sayd = SAYD{m.action, Coaction(f.hopf, m.coaction.carrier, co)};
            return f;
        });
        v.emplace_back("kS3-sign-partial", [] {
            auto f = make_mutant("kS3-sign-partial", "k over kS3 with only the transposition a acting by -1",
                                 FixtureType::SAYD, "action associativity", {"action associativity"});
            f.hopf = raw_s3().build();
            SAYD m = trivial_sayd(f.hopf);
            Matrix act = m.action.act;
            act(0, 1) = -1;
            f.sayd = SAYD{Action(f.hopf, m.action.carrier, act), m.coaction};
            return f;
        });
        v.emplace_back("signA-unit-moved", [] {
            auto f = make_mutant("signA-unit-moved", "signA with g·1 = -1", FixtureType::Bundle, "module algebra unit",
                                 {"module algebra multiplicativity", "module algebra unit"});
            f.hopf = raw_cyclic(2).build();
            RawSignA raw;
            raw.act(0, 2) = -1;
            f.bundle = sign_bundle(f.hopf, raw, trivial_sayd(f.hopf));
            f.bundle->name = f.name;
            return f;
        });
        v.emplace_back("signA-action-shift", [] {
            auto f = make_mutant("signA-action-shift", "signA with g·x = 1 - x", FixtureType::Bundle,
                                 "module algebra multiplicativity", {"module algebra multiplicativity"});
            f.hopf = raw_cyclic(2).build();
            RawSignA raw;
            raw.act(0, 3) = 1;
            f.bundle = sign_bundle(f.hopf, raw, trivial_sayd(f.hopf));
            f.bundle->name = f.name;
            return f;
        });
        v.emplace_back("B=H-kZ2-coaction-scaled", [] {
            auto f = make_mutant("B=H-kZ2-coaction-scaled", "B = kZ2 with coaction g ↦ 2 g⊗g", FixtureType::Bundle,
                                 "comodule algebra multiplicativity",
                                 {"coaction coassociativity", "coaction counit", "comodule algebra multiplicativity"});
            f.hopf = raw_cyclic(2).build();
            f.bundle = regular_comodule_bundle(f.name, f.hopf, trivial_sayd(f.hopf));
            Matrix co = f.bundle->coaction->coact;
            co(1 * 2 + 1, 1) = 2;
            f.bundle->coaction = Coaction(f.hopf, f.bundle->coaction->carrier, co);
            return f;
        });
        v.emplace_back("B=H-kZ2-coaction-unit", [] {
            auto f = make_mutant("B=H-kZ2-coaction-unit", "B = kZ2 with coaction 1 ↦ 1⊗1 + g⊗1", FixtureType::Bundle,
                                 "comodule algebra unit",
                                 {"coaction coassociativity", "coaction counit", "comodule algebra multiplicativity",
                                  "comodule algebra unit"});
            f.hopf = raw_cyclic(2).build();
            f.bundle = regular_comodule_bundle(f.name, f.hopf, trivial_sayd(f.hopf));
            Matrix co = f.bundle->coaction->coact;
            co(1 * 2 + 0, 0) = 1;
            f.bundle->coaction = Coaction(f.hopf, f.bundle->coaction->carrier, co);
            return f;
        });
        v.emplace_back("C=H-kZ2-action-degenerate", [] {
            auto f = make_mutant("C=H-kZ2-action-degenerate", "C = kZ2 with g·g = 0", FixtureType::Bundle,
                                 "module coalgebra counit", {"action associativity", "module coalgebra counit"});
            f.hopf = raw_cyclic(2).build();
            f.bundle = regular_module_bundle(f.name, f.hopf, trivial_sayd(f.hopf));
            Matrix act = f.bundle->action->act;
            act(0, 1 * 2 + 1) = 0;
            f.bundle->action = Action(f.hopf, f.bundle->action->carrier, act);
            return f;
        });
        v.emplace_back("C=H-kZ2-comult-extra", [] {
            auto f = make_mutant("C=H-kZ2-comult-extra", "C = kZ2 with Δg = g⊗g + 1⊗1", FixtureType::Bundle,
                                 "module coalgebra comultiplication",
                                 {"coassociativity", "left counit", "right counit", "module coalgebra comultiplication"});
            f.hopf = raw_cyclic(2).build();
            f.bundle = regular_module_bundle(f.name, f.hopf, trivial_sayd(f.hopf));
            Coalgebra c = *f.bundle->coalgebra;
            Matrix m = c.comult;
            m(0, 1) = 1;
            f.bundle->coalgebra = Coalgebra(c.space, m, c.counit);
            return f;
        });
        return v;
    }();
    return entries;
}

}  // namespace

const char* fixture_type_name(FixtureType t) {
    switch (t) {
        case FixtureType::Hopf: return "hopf";
        case FixtureType::Algebra: return "algebra";
        case FixtureType::Coalgebra: return "coalgebra";
        case FixtureType::Action: return "action";
        case FixtureType::Coaction: return "coaction";
        case FixtureType::SAYD: return "sayd";
        case FixtureType::Bundle: return "bundle";
    }
    return "?";
}

ValidationReport FixtureBundle::validate() const {
    ValidationReport rep;
    switch (type) {
        case FixtureType::Hopf: rep = hcc::validate(*hopf); break;
        case FixtureType::Algebra: rep = hcc::validate(*algebra); break;
        case FixtureType::Coalgebra: rep = hcc::validate(*coalgebra); break;
        case FixtureType::Action: rep = hcc::validate(*action); break;
        case FixtureType::Coaction: rep = hcc::validate(*coaction); break;
        case FixtureType::SAYD: rep = hcc::validate(*sayd); break;
        case FixtureType::Bundle: rep = hcc::validate(*bundle); break;
    }
    rep.subject = name + ": " + rep.subject;
    return rep;
}

FixtureBundle fixture(const std::string& name) {
    for (const auto& [n, make] : catalog())
        if (n == name) return make();
    std::string known;
    for (const auto& [n, make] : catalog()) known += (known.empty() ? "" : ", ") + n;
    throw CatalogError("unknown fixture '" + name + "'; available: " + known);
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& [n, make] : catalog()) out.push_back(n);
    return out;
}

std::vector<std::string> mutant_names() {
    std::vector<std::string> out;
    for (const auto& [n, make] : catalog())
        if (make().mutant) out.push_back(n);
    return out;
}

HopfPtr trivial_hopf() { return raw_trivial().build(); }

HopfPtr group_algebra(const std::string& name, const std::vector<std::string>& labels,
                      const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
    return raw_group(name, labels, mul).build();
}

HopfPtr sweedler_hopf() { return raw_sweedler().build(); }

SAYD trivial_sayd(const HopfPtr& h) { return SAYD{trivial_action(h, k_space()), trivial_coaction(h, k_space())}; }

SymmetryBundle regular_comodule_bundle(const std::string& name, const HopfPtr& h, const SAYD& coeffs) {
    SymmetryBundle b;
    b.name = name;
    b.kind = Kind::B;
    b.hopf = h;
    b.algebra = h->algebra;
    b.coaction = Coaction(h, h->space(), h->coalgebra.comult);
    b.coeffs = coeffs;
    return b;
}

SymmetryBundle regular_module_bundle(const std::string& name, const HopfPtr& h, const SAYD& coeffs) {
    SymmetryBundle b;
    b.name = name;
    b.kind = Kind::C;
    b.hopf = h;
    b.coalgebra = h->coalgebra;
    b.action = Action(h, h->space(), h->algebra.mult);
    b.coeffs = coeffs;
    return b;
}

SymmetryBundle matrix_bundle(const SymmetryBundle& b, std::size_t k) {
    if (b.kind != Kind::B) throw std::invalid_argument("matrix_bundle requires a kind-B bundle");
    const Algebra& B = *b.algebra;
    const std::size_t db = B.dim(), n = k * k * db;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t x = 0; x < db; ++x)
                labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + (db == 1 ? "" : "⊗" + B.space.basis_labels[x]));
    Space s("M" + std::to_string(k) + "(" + B.space.name + ")", labels);
    auto idx = [&](std::size_t i, std::size_t j, std::size_t x) { return (i * k + j) * db + x; };
    Matrix mult(n, n * n);
    Vec unit(n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t x = 0; x < db; ++x) unit[idx(i, i, x)] = B.unit[x];
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l)
                for (std::size_t x = 0; x < db; ++x)
                    for (std::size_t y = 0; y < db; ++y)
                        for (const auto& [z, c] : B.mul_basis(x, y)) mult(idx(i, l, z), idx(i, j, x) * n + idx(j, l, y)) += c;
    }
    const Hopf& h = *b.hopf;
    Matrix co(h.dim() * n, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t x = 0; x < db; ++x)
                for (const auto& t : b.coaction->terms(x)) co(t.h * n + idx(i, j, t.v), idx(i, j, x)) += t.coeff;
    SymmetryBundle out;
    out.name = b.name + "-M" + std::to_string(k);
    out.kind = Kind::B;
    out.hopf = b.hopf;
    out.algebra = Algebra(s, mult, unit);
    out.coaction = Coaction(b.hopf, s, co);
    out.coeffs = b.coeffs;
    return out;
}

namespace {

// h ↦ (m ↦ h^(1) m T(h^(2))) on the regular representation.
Matrix twisted_conjugation(const Hopf& h, const Matrix& t) {
    const std::size_t d = h.dim();
    Matrix act(d, d * d);
    for (std::size_t hb = 0; hb < d; ++hb)
        for (std::size_t m = 0; m < d; ++m) {
            Vec acc(d);
            for (const auto& term : iterated_coproduct_terms(h.coalgebra, hb, 1)) {
                Vec left = h.algebra.mul(h.algebra.basis(term.digits[0]), h.algebra.basis(m));
                acc = add(acc, scale(term.coeff, h.algebra.mul(left, t.col(term.digits[1]))));
            }
            act.set_col(hb * d + m, acc);
        }
    return act;
}

}  // namespace

SAYD regular_sayd(const HopfPtr& h) {
    Space m("M", h->space().basis_labels);
    for (auto& l : m.basis_labels) l = "m" + l;
    return SAYD{Action(h, m, twisted_conjugation(*h, h->antipode_inv())), Coaction(h, m, h->coalgebra.comult)};
}

Action adjoint_action(const HopfPtr& h) { return Action(h, h->space(), twisted_conjugation(*h, h->antipode)); }

}  // namespace hcc
