#include "hcc/products.hpp"

#include "hcc/fixtures.hpp"

#include <functional>

namespace hcc {

namespace {

int parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

bool same_hopf(const Hopf& x, const Hopf& y) {
    return x.dim() == y.dim() && x.algebra.mult == y.algebra.mult && x.coalgebra.comult == y.coalgebra.comult &&
           x.antipode == y.antipode;
}

bool same_coeffs(const SAYD& x, const SAYD& y) {
    return x.dim() == y.dim() && x.action.act == y.action.act && x.coaction.coact == y.coaction.coact;
}

void require_compatible(const SymmetryBundle& x, const SymmetryBundle& y, const char* what) {
    if (!x.hopf || !y.hopf || !same_hopf(*x.hopf, *y.hopf))
        throw PreconditionError(std::string(what) + ": bundles '" + x.name + "' and '" + y.name +
                                "' use different Hopf algebras");
    if (!same_coeffs(x.coeffs, y.coeffs))
        throw PreconditionError(std::string(what) + ": bundles '" + x.name + "' and '" + y.name +
                                "' use different coefficient modules");
}

void require_kind(const SymmetryBundle& b, Kind k, const char* what) {
    if (b.kind != k)
        throw PreconditionError(std::string(what) + ": bundle '" + b.name + "' must be of kind " + kind_name(k));
}

Vec kind_a_lift(const UniversalCalculus& calc, std::size_t dm, const Vec& cochain, std::size_t n) {
    const auto dims = power_dims(calc.base_dim(), n + 1);
    const std::size_t per = product(dims), tdim = calc.dim(n);
    if (cochain.size() != dm * per) throw PreconditionError("cochain has wrong length for degree " + std::to_string(n));
    Vec t(dm * tdim);
    for (std::size_t idx = 0; idx < cochain.size(); ++idx)
        if (cochain[idx] != 0) t[(idx / per) * tdim + calc.index(multi_index(idx % per, dims))] = cochain[idx];
    return t;
}

// Σ_m a[m, x] b[m, y] as a dense x × y table.
Matrix pair_over_m(const Vec& a, std::size_t xa, const Vec& b, std::size_t yb) {
    const std::size_t dm = a.size() / xa;
    Matrix k(xa, yb);
    for (std::size_t m = 0; m < dm; ++m)
        for (std::size_t x = 0; x < xa; ++x) {
            if (a[m * xa + x] == 0) continue;
            for (std::size_t y = 0; y < yb; ++y)
                if (b[m * yb + y] != 0) k(x, y) += a[m * xa + x] * b[m * yb + y];
        }
    return k;
}

}  // namespace

// ---------------------------------------------------------------- smash algebra

Algebra smash_algebra(const SymmetryBundle& a, const SymmetryBundle& b) {
    require_kind(a, Kind::A, "smash algebra");
    require_kind(b, Kind::B, "smash algebra");
    require_compatible(a, b, "smash algebra");
    const Algebra& A = *a.algebra;
    const Algebra& B = *b.algebra;
    const std::size_t da = A.dim(), db = B.dim(), D = da * db;
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < da; ++x)
        for (std::size_t y = 0; y < db; ++y) labels.push_back(A.space.basis_labels[x] + "⊗" + B.space.basis_labels[y]);
    Matrix mult(D, D * D);
    for (std::size_t a1 = 0; a1 < da; ++a1)
        for (std::size_t b1 = 0; b1 < db; ++b1)
            for (const auto& t : b.coaction->terms(b1)) {
                const Matrix& op = a.action->op(t.h);
                for (std::size_t a2 = 0; a2 < da; ++a2) {
                    const Vec left = A.mul(A.basis(a1), op.col(a2));
                    for (std::size_t b2 = 0; b2 < db; ++b2)
                        for (const auto& [bk, cb] : B.mul_basis(t.v, b2))
                            for (auto [ak, ca] : sparse(left))
                                mult(ak * db + bk, (a1 * db + b1) * D + a2 * db + b2) += t.coeff * ca * cb;
                }
            }
    Vec unit(D);
    for (auto [x, cx] : sparse(A.unit))
        for (auto [y, cy] : sparse(B.unit)) unit[x * db + y] = cx * cy;
    return Algebra(Space(A.space.name + "⋊" + B.space.name, labels), mult, unit);
}

ValidationReport validate_smash(const SymmetryBundle& a, const SymmetryBundle& b) {
    ValidationReport rep = validate(smash_algebra(a, b));
    rep.subject = "smash algebra " + a.name + " ⋊ " + b.name;
    return rep;
}

SymmetryBundle ordinary_bundle(const Algebra& alg, const std::string& name) {
    HopfPtr k = trivial_hopf();
    SymmetryBundle out;
    out.name = name;
    out.kind = Kind::A;
    out.hopf = k;
    out.algebra = alg;
    out.action = Action(k, alg.space, Matrix::identity(alg.dim()));
    out.coeffs = trivial_sayd(k);
    return out;
}

BigradedVec plain_tensor_mul(const UniversalCalculus& a, const UniversalCalculus& b, const BigradedVec& x,
                             const BigradedVec& y, std::size_t max_degree) {
    BigradedVec out;
    for (const auto& [kx, vx] : x)
        for (const auto& [ky, vy] : y) {
            const auto [i1, j1] = kx;
            const auto [i2, j2] = ky;
            if (i1 + i2 + j1 + j2 > max_degree) continue;
            const std::size_t gj1 = b.dim(j1), gj2 = b.dim(j2), gj = b.dim(j1 + j2);
            Vec v(a.dim(i1 + i2) * gj);
            const Rational sign(parity_sign(j1 * i2));
            for (auto [fx, cx] : sparse(vx))
                for (auto [fy, cy] : sparse(vy))
                    for (const auto& [wk, cw] : a.mul_basis(i1, fx / gj1, i2, fy / gj2))
                        for (const auto& [gk, cg] : b.mul_basis(j1, fx % gj1, j2, fy % gj2))
                            v[wk * gj + gk] += sign * cx * cy * cw * cg;
            out = add(out, BigradedVec{{{i1 + i2, j1 + j2}, v}});
        }
    return out;
}

// ---------------------------------------------------------------- first cup

FirstCup::FirstCup(const SymmetryBundle& bundle_a, const SymmetryBundle& bundle_b, std::size_t max_degree)
    : a_(bundle_a), b_(bundle_b), n_max_(max_degree), target_(smash_algebra(bundle_a, bundle_b)) {
    ValidationReport rep = validate(target_);
    if (!rep.ok()) throw ConstructionError("smash algebra fails: " + rep.failed_axioms().front());
    cx_a_ = std::make_unique<CyclicComplex>(a_, n_max_);
    cx_b_ = std::make_unique<CyclicComplex>(b_, n_max_);
    cx_t_ = std::make_unique<CyclicComplex>(ordinary_bundle(target_, target_.space.name), n_max_);
    omega_ = std::make_unique<OmegaA>(a_, n_max_);
    gamma_ = std::make_unique<OmegaB>(b_, n_max_);
    smash_ = std::make_unique<SmashDG>(*omega_, *gamma_, n_max_);
}

Vec FirstCup::cup(const Vec& phi, std::size_t p, const Vec& psi, std::size_t q) const {
    if (p + q > n_max_) throw PreconditionError("cup product degree exceeds the truncation");
    if (!cx_b_->is_cyclic_cocycle(p, phi)) throw PreconditionError("first cup: φ is not a cyclic cocycle of kind B");
    if (!cx_a_->is_cyclic_cocycle(q, psi)) throw PreconditionError("first cup: ψ is not a cyclic cocycle of kind A");
    TraceCorrespondence tb(*cx_b_, p), ta(*cx_a_, q);
    Vec out = evaluate(tb.to_trace(phi), p, ta.to_trace(psi), q);
    if (!cx_t_->is_cyclic_cocycle(p + q, out))
        throw ConstructionError("first cup: the character is not a cyclic cocycle of the smash algebra");
    return out;
}

namespace {

// Value of Σ v[w, g] K[w, g] over the requested component.
Rational contract(const BigradedVec& v, std::size_t i, std::size_t j, const Matrix& k) {
    auto it = v.find({i, j});
    if (it == v.end()) return Rational(0);
    Rational s(0);
    const std::size_t cols = k.cols();
    for (auto [f, c] : sparse(it->second)) s += c * k(f / cols, f % cols);
    return s;
}

// Iterates over basis tuples (ξ_0..ξ_n) in lexicographic order, keeping
// prefix products ξ_0 dξ_1 ⋯ dξ_k.
template <class Elem, class Mul, class D, class Leaf>
void prefix_products(std::size_t n, const std::vector<Elem>& basis, const Mul& mul, const D& d, const Leaf& leaf) {
    std::vector<Elem> dbasis;
    for (const auto& e : basis) dbasis.push_back(d(e));
    std::vector<std::size_t> digits(n + 1);
    std::function<void(std::size_t, const Elem&)> rec = [&](std::size_t k, const Elem& acc) {
        if (k == n + 1) {
            leaf(digits, acc);
            return;
        }
        for (std::size_t x = 0; x < basis.size(); ++x) {
            digits[k] = x;
            rec(k + 1, mul(acc, dbasis[x]));
        }
    };
    for (std::size_t x = 0; x < basis.size(); ++x) {
        digits[0] = x;
        rec(1, basis[x]);
    }
}

}  // namespace

Vec FirstCup::evaluate(const Vec& phi_trace, std::size_t p, const Vec& psi_trace, std::size_t q) const {
    if (p + q > n_max_) throw PreconditionError("cup product degree exceeds the truncation");
    const auto& om = omega_->calculus();
    const auto& ga = gamma_->calculus();
    const Matrix k = pair_over_m(psi_trace, om.dim(q), phi_trace, ga.dim(p));
    const std::size_t n = p + q, db = b_.carrier_dim(), D = target_.dim();
    std::vector<BigradedVec> basis;
    for (std::size_t x = 0; x < D; ++x) {
        Vec v(smash_->dim(0, 0));
        v[(x / db) * ga.dim(0) + x % db] = 1;
        basis.push_back({{{0, 0}, v}});
    }
    const auto dims = cochain_dims(1, D, n);
    Vec out(product(dims));
    prefix_products(
        n, basis, [&](const BigradedVec& x, const BigradedVec& y) { return smash_->mul(x, y); },
        [&](const BigradedVec& x) { return smash_->d(x); },
        [&](const std::vector<std::size_t>& digits, const BigradedVec& acc) {
            std::vector<std::size_t> idx{0};
            idx.insert(idx.end(), digits.begin(), digits.end());
            out[flat_index(idx, dims)] = contract(acc, q, p, k);
        });
    return out;
}

Vec FirstCup::evaluate_untwisted(const Vec& phi_trace, std::size_t p, const Vec& psi_trace, std::size_t q) const {
    if (a_.hopf->dim() != 1) throw PreconditionError("untwisted product requires H = k");
    if (p + q > n_max_) throw PreconditionError("cup product degree exceeds the truncation");
    const auto& om = omega_->calculus();
    const auto& ga = gamma_->calculus();
    const Matrix k = pair_over_m(psi_trace, om.dim(q), phi_trace, ga.dim(p));
    const std::size_t n = p + q, db = b_.carrier_dim(), D = target_.dim();
    std::vector<BigradedVec> basis;
    for (std::size_t x = 0; x < D; ++x) {
        Vec v(om.dim(0) * ga.dim(0));
        v[(x / db) * ga.dim(0) + x % db] = 1;
        basis.push_back({{{0, 0}, v}});
    }
    auto dmap = [&](const BigradedVec& x) {
        BigradedVec out;
        for (const auto& [key, v] : x) {
            const auto [i, j] = key;
            if (i + j + 1 > n_max_) continue;
            out = add(out, BigradedVec{{{i + 1, j}, kron(om.d(i), Matrix::identity(ga.dim(j))) * v}});
            out = add(out, BigradedVec{{{i, j + 1},
                                        scale(parity_sign(i), kron(Matrix::identity(om.dim(i)), ga.d(j)) * v)}});
        }
        return out;
    };
    const auto dims = cochain_dims(1, D, n);
    Vec out(product(dims));
    prefix_products(
        n, basis, [&](const BigradedVec& x, const BigradedVec& y) { return plain_tensor_mul(om, ga, x, y, n_max_); },
        dmap,
        [&](const std::vector<std::size_t>& digits, const BigradedVec& acc) {
            std::vector<std::size_t> idx{0};
            idx.insert(idx.end(), digits.begin(), digits.end());
            out[flat_index(idx, dims)] = contract(acc, q, p, k);
        });
    return out;
}

// ---------------------------------------------------------------- coalgebra actions

Vec CoalgebraAction::apply(std::size_t c, const Vec& a) const {
    const std::size_t da = pairing.rows();
    Vec out(da);
    for (auto [x, cx] : sparse(a)) out = add(out, scale(cx, pairing.col(c * da + x)));
    return out;
}

ValidationReport validate(const CoalgebraAction& act, const SymmetryBundle& c, const SymmetryBundle& a) {
    require_kind(c, Kind::C, "coalgebra action");
    require_kind(a, Kind::A, "coalgebra action");
    const Coalgebra& C = *c.coalgebra;
    const Algebra& A = *a.algebra;
    const Hopf& h = *c.hopf;
    const std::size_t dc = C.dim(), da = A.dim();
    if (act.pairing.rows() != da || act.pairing.cols() != dc * da)
        throw SpecFormatError("coalgebra action: pairing must be " + std::to_string(da) + " x " + std::to_string(dc * da));
    ValidationReport rep{"coalgebra action of " + C.space.name + " on " + A.space.name, {}};
    AxiomCheck mul{"coalgebra action multiplicativity", true, ""}, unit{"coalgebra action unit", true, ""},
        lin{"coalgebra action H-compatibility", true, ""};
    for (std::size_t x = 0; x < dc && mul.pass; ++x)
        for (std::size_t a1 = 0; a1 < da && mul.pass; ++a1)
            for (std::size_t a2 = 0; a2 < da && mul.pass; ++a2) {
                Vec lhs = act.apply(x, A.mul(A.basis(a1), A.basis(a2)));
                Vec rhs(da);
                for (const auto& [f, cf] : C.comult_basis(x))
                    rhs = add(rhs, scale(cf, A.mul(act.apply(f / dc, A.basis(a1)), act.apply(f % dc, A.basis(a2)))));
                if (lhs != rhs) {
                    mul.pass = false;
                    mul.witness = "(" + C.space.basis_labels[x] + ", " + A.space.basis_labels[a1] + ", " +
                                  A.space.basis_labels[a2] + ")";
                }
            }
    for (std::size_t x = 0; x < dc && unit.pass; ++x)
        if (act.apply(x, A.unit) != scale(C.counit[x], A.unit)) {
            unit.pass = false;
            unit.witness = "(" + C.space.basis_labels[x] + ")";
        }
    for (std::size_t hb = 0; hb < h.dim() && lin.pass; ++hb)
        for (std::size_t x = 0; x < dc && lin.pass; ++x)
            for (std::size_t y = 0; y < da && lin.pass; ++y) {
                const Vec hc = c.action->op(hb).col(x);
                Vec lhs(da);
                for (auto [z, cz] : sparse(hc)) lhs = add(lhs, scale(cz, act.apply(z, A.basis(y))));
                if (lhs != a.action->op(hb) * act.apply(x, A.basis(y))) {
                    lin.pass = false;
                    lin.witness = "(" + h.space().basis_labels[hb] + ", " + C.space.basis_labels[x] + ", " +
                                  A.space.basis_labels[y] + ")";
                }
            }
    rep.checks = {mul, unit, lin};
    return rep;
}

CoalgebraAction hopf_action_pairing(const SymmetryBundle& c, const SymmetryBundle& a) {
    require_kind(c, Kind::C, "coalgebra action");
    require_kind(a, Kind::A, "coalgebra action");
    require_compatible(c, a, "coalgebra action");
    if (c.carrier_dim() != c.hopf->dim())
        throw PreconditionError("coalgebra action: bundle '" + c.name + "' is not H over itself");
    return CoalgebraAction{a.action->act};
}

// ---------------------------------------------------------------- Hom_H(C, A)

HomAlgebra::HomAlgebra(const SymmetryBundle& c, const SymmetryBundle& a) : c_(c), a_(a) {
    require_kind(c, Kind::C, "Hom_H(C, A)");
    require_kind(a, Kind::A, "Hom_H(C, A)");
    require_compatible(c, a, "Hom_H(C, A)");
    const Hopf& h = *c.hopf;
    const std::size_t dc = c.carrier_dim(), da = a.carrier_dim();
    // (A_h F - F C_h) = 0 on row-major vec(F).
    Matrix cons(h.dim() * da * dc, da * dc);
    for (std::size_t hb = 0; hb < h.dim(); ++hb) {
        const Matrix& ah = a.action->op(hb);
        const Matrix& ch = c.action->op(hb);
        for (std::size_t r = 0; r < da; ++r)
            for (std::size_t col = 0; col < dc; ++col) {
                const std::size_t row = (hb * da + r) * dc + col;
                for (std::size_t k = 0; k < da; ++k)
                    if (ah(r, k) != 0) cons(row, k * dc + col) += ah(r, k);
                for (std::size_t k = 0; k < dc; ++k)
                    if (ch(k, col) != 0) cons(row, r * dc + k) -= ch(k, col);
            }
    }
    space_ = kernel_basis(cons);
    for (const Vec& v : space_.basis_vectors()) {
        Matrix f(da, dc);
        for (std::size_t r = 0; r < da; ++r)
            for (std::size_t col = 0; col < dc; ++col) f(r, col) = v[r * dc + col];
        maps_.push_back(f);
    }
    const std::size_t n = maps_.size();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("f" + std::to_string(i + 1));
    Matrix mult(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mult.set_col(i * n + j, coordinates(convolve(maps_[i], maps_[j])));
    Matrix unit_map(da, dc);
    for (std::size_t col = 0; col < dc; ++col) unit_map.set_col(col, scale(c.coalgebra->counit[col], a.algebra->unit));
    algebra_ = Algebra(Space("Hom_H(" + c.carrier_space().name + "," + a.carrier_space().name + ")", labels), mult,
                       coordinates(unit_map));
}

Vec HomAlgebra::coordinates(const Matrix& f) const {
    const std::size_t dc = c_.carrier_dim();
    Vec v(f.rows() * f.cols());
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t col = 0; col < f.cols(); ++col) v[r * dc + col] = f(r, col);
    if (!space_.contains(v)) throw PreconditionError("map C -> A is not H-linear");
    Vec out(space_.dim());
    for (std::size_t i = 0; i < space_.dim(); ++i) out[i] = v[space_.pivots()[i]];
    return out;
}

Matrix HomAlgebra::to_map(const Vec& coords) const {
    Matrix f(a_.carrier_dim(), c_.carrier_dim());
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) f = f + coords[i] * maps_.at(i);
    return f;
}

Matrix HomAlgebra::convolve(const Matrix& f, const Matrix& g) const {
    const Coalgebra& C = *c_.coalgebra;
    const Algebra& A = *a_.algebra;
    const std::size_t dc = C.dim();
    Matrix out(A.dim(), dc);
    for (std::size_t x = 0; x < dc; ++x) {
        Vec acc(A.dim());
        for (const auto& [pair, cp] : C.comult_basis(x)) acc = add(acc, scale(cp, A.mul(f.col(pair / dc), g.col(pair % dc))));
        out.set_col(x, acc);
    }
    return out;
}

Matrix HomAlgebra::evaluation_map(const CoalgebraAction& act, const Vec& a) const {
    Matrix f(a_.carrier_dim(), c_.carrier_dim());
    for (std::size_t x = 0; x < c_.carrier_dim(); ++x) f.set_col(x, act.apply(x, a));
    return f;
}

Matrix HomAlgebra::evaluation(const CoalgebraAction& act) const {
    const Algebra& A = *a_.algebra;
    Matrix e(dim(), A.dim());
    for (std::size_t y = 0; y < A.dim(); ++y) e.set_col(y, coordinates(evaluation_map(act, A.basis(y))));
    return e;
}

ValidationReport HomAlgebra::check_evaluation(const CoalgebraAction& act) const {
    const Algebra& A = *a_.algebra;
    const Matrix e = evaluation(act);
    AxiomCheck mul{"evaluation multiplicative", true, ""}, unit{"evaluation unital", true, ""};
    for (std::size_t x = 0; x < A.dim() && mul.pass; ++x)
        for (std::size_t y = 0; y < A.dim() && mul.pass; ++y)
            if (e * A.mul(A.basis(x), A.basis(y)) != algebra_.mul(e.col(x), e.col(y))) {
                mul.pass = false;
                mul.witness = "(" + A.space.basis_labels[x] + ", " + A.space.basis_labels[y] + ")";
            }
    if (e * A.unit != algebra_.unit) unit.pass = false;
    return {"evaluation map", {mul, unit}};
}

// ---------------------------------------------------------------- second cup

SecondCup::SecondCup(const SymmetryBundle& bundle_c, const SymmetryBundle& bundle_a, std::size_t max_degree,
                     std::optional<CoalgebraAction> action)
    : c_(bundle_c), a_(bundle_a), n_max_(max_degree), action_(std::move(action)), hom_(bundle_c, bundle_a) {
    cx_c_ = std::make_unique<CyclicComplex>(c_, n_max_);
    cx_a_ = std::make_unique<CyclicComplex>(a_, n_max_);
    cx_hom_ = std::make_unique<CyclicComplex>(ordinary_bundle(hom_.algebra(), hom_.algebra().space.name), n_max_);
    if (action_) {
        ValidationReport rep = validate(*action_, c_, a_);
        if (!rep.ok()) throw ConstructionError("coalgebra action fails: " + rep.failed_axioms().front());
        ValidationReport ev = hom_.check_evaluation(*action_);
        if (!ev.ok()) throw ConstructionError("evaluation map fails: " + ev.failed_axioms().front());
        cx_pull_ = std::make_unique<CyclicComplex>(ordinary_bundle(*a_.algebra, a_.algebra->space.name), n_max_);
    }
    omega_ = std::make_unique<OmegaA>(a_, n_max_);
    theta_ = std::make_unique<OmegaCC>(c_, n_max_);
}

const CyclicComplex& SecondCup::pullback_complex() const {
    if (!cx_pull_) throw PreconditionError("second cup: no coalgebra action supplied");
    return *cx_pull_;
}

const ConvolutionDG& SecondCup::convolution(std::size_t p, std::size_t q) const {
    auto& slot = conv_[{p, q}];
    if (!slot) slot = std::make_unique<ConvolutionDG>(*theta_, *omega_, p, q);
    return *slot;
}

BigradedMap SecondCup::embed(const Matrix& f) const {
    // Maps C -> A extend to C̃ -> Ã by 1̃* ↦ 0.
    Matrix m(omega_->calculus().dim(0), theta_->dim(0));
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t col = 0; col < f.cols(); ++col) m(r, col) = f(r, col);
    return {{{0, 0}, m}};
}

Rational SecondCup::evaluate(const Vec& x_trace, std::size_t p, const Vec& psi_trace, std::size_t q,
                             const std::vector<Matrix>& maps) const {
    if (maps.size() != p + q + 1) throw PreconditionError("second cup: expected " + std::to_string(p + q + 1) + " maps");
    const ConvolutionDG& conv = convolution(p, q);
    BigradedMap acc = embed(maps[0]);
    for (std::size_t k = 1; k < maps.size(); ++k) acc = conv.mul(acc, conv.d(embed(maps[k])));
    auto it = acc.find({p, q});
    if (it == acc.end()) return Rational(0);
    const Matrix kk = pair_over_m(psi_trace, omega_->calculus().dim(q), x_trace, theta_->dim(p));
    Rational s(0);
    for (std::size_t w = 0; w < kk.rows(); ++w)
        for (std::size_t t = 0; t < kk.cols(); ++t)
            if (kk(w, t) != 0) s += kk(w, t) * it->second(w, t);
    return s;
}

Vec SecondCup::evaluate_tuples(const Vec& x_trace, std::size_t p, const Vec& psi_trace, std::size_t q,
                               const std::vector<Matrix>& generators) const {
    if (p + q > n_max_) throw PreconditionError("cup product degree exceeds the truncation");
    const ConvolutionDG& conv = convolution(p, q);
    const Matrix kk = pair_over_m(psi_trace, omega_->calculus().dim(q), x_trace, theta_->dim(p));
    std::vector<BigradedMap> basis;
    for (const auto& g : generators) basis.push_back(embed(g));
    const std::size_t n = p + q;
    const auto dims = cochain_dims(1, generators.size(), n);
    Vec out(product(dims));
    prefix_products(
        n, basis, [&](const BigradedMap& f, const BigradedMap& g) { return conv.mul(f, g); },
        [&](const BigradedMap& f) { return conv.d(f); },
        [&](const std::vector<std::size_t>& digits, const BigradedMap& acc) {
            auto it = acc.find({p, q});
            if (it == acc.end()) return;
            Rational s(0);
            for (std::size_t w = 0; w < kk.rows(); ++w)
                for (std::size_t t = 0; t < kk.cols(); ++t)
                    if (kk(w, t) != 0) s += kk(w, t) * it->second(w, t);
            std::vector<std::size_t> idx{0};
            idx.insert(idx.end(), digits.begin(), digits.end());
            out[flat_index(idx, dims)] = s;
        });
    return out;
}

Vec SecondCup::evaluate_hom(const Vec& x_trace, std::size_t p, const Vec& psi_trace, std::size_t q) const {
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < hom_.dim(); ++i) gens.push_back(hom_.basis_map(i));
    return evaluate_tuples(x_trace, p, psi_trace, q, gens);
}

Vec SecondCup::evaluate_pullback(const Vec& x_trace, std::size_t p, const Vec& psi_trace, std::size_t q) const {
    if (!action_) throw PreconditionError("second cup: pullback needs a coalgebra action");
    std::vector<Matrix> gens;
    const Algebra& A = *a_.algebra;
    for (std::size_t y = 0; y < A.dim(); ++y) gens.push_back(hom_.evaluation_map(*action_, A.basis(y)));
    return evaluate_tuples(x_trace, p, psi_trace, q, gens);
}

Vec SecondCup::lift_x(const Vec& x, std::size_t p) const {
    const std::size_t dm = c_.coeffs.dim();
    const std::size_t per = product(power_dims(c_.carrier_dim(), p + 1)), tdim = theta_->dim(p);
    if (x.size() != dm * per) throw PreconditionError("cochain has wrong length for degree " + std::to_string(p));
    Vec t(dm * tdim);
    for (std::size_t idx = 0; idx < x.size(); ++idx)
        if (x[idx] != 0) t[(idx / per) * tdim + theta_->embed(p, idx % per)] = x[idx];
    return t;
}

Vec SecondCup::lift_psi(const Vec& psi, std::size_t q) const {
    return kind_a_lift(omega_->calculus(), a_.coeffs.dim(), psi, q);
}

Vec SecondCup::cup(const Vec& x, std::size_t p, const Vec& psi, std::size_t q) const {
    if (p + q > n_max_) throw PreconditionError("cup product degree exceeds the truncation");
    if (!cx_c_->is_cyclic_cocycle(p, x)) throw PreconditionError("second cup: x is not a cyclic cocycle of kind C");
    if (!cx_a_->is_cyclic_cocycle(q, psi)) throw PreconditionError("second cup: ψ is not a cyclic cocycle of kind A");
    TraceCorrespondence tc(*cx_c_, p), ta(*cx_a_, q);
    Vec out = evaluate_hom(tc.to_trace(x), p, ta.to_trace(psi), q);
    if (!cx_hom_->is_cyclic_cocycle(p + q, out))
        throw ConstructionError("second cup: the character is not a cyclic cocycle of Hom_H(C, A)");
    return out;
}

Vec SecondCup::pullback(const Vec& x, std::size_t p, const Vec& psi, std::size_t q) const {
    if (!action_) throw PreconditionError("second cup: pullback needs a coalgebra action");
    if (p + q > n_max_) throw PreconditionError("cup product degree exceeds the truncation");
    if (!cx_c_->is_cyclic_cocycle(p, x)) throw PreconditionError("second cup: x is not a cyclic cocycle of kind C");
    if (!cx_a_->is_cyclic_cocycle(q, psi)) throw PreconditionError("second cup: ψ is not a cyclic cocycle of kind A");
    TraceCorrespondence tc(*cx_c_, p), ta(*cx_a_, q);
    Vec out = evaluate_pullback(tc.to_trace(x), p, ta.to_trace(psi), q);
    if (!cx_pull_->is_cyclic_cocycle(p + q, out))
        throw ConstructionError("second cup: the pulled-back character is not a cyclic cocycle of A");
    return out;
}

Vec closed_formula_degree_one(const SymmetryBundle& c, const SymmetryBundle& a, const CoalgebraAction& act,
                              const Vec& x, const Vec& phi) {
    const Coalgebra& C = *c.coalgebra;
    const Algebra& A = *a.algebra;
    const std::size_t dm = c.coeffs.dim(), dc = C.dim(), da = A.dim();
    const auto xd = cochain_dims(dm, dc, 1), pd = cochain_dims(dm, da, 1), od = cochain_dims(1, da, 2);
    if (x.size() != product(xd) || phi.size() != product(pd)) throw PreconditionError("closed formula: wrong input lengths");
    // φ(m, u, v) for vectors u, v.
    auto phi_at = [&](std::size_t m, const Vec& u, const Vec& v) {
        Rational s(0);
        for (auto [i, ci] : sparse(u))
            for (auto [j, cj] : sparse(v)) s += ci * cj * phi[flat_index({m, i, j}, pd)];
        return s;
    };
    Vec out(product(od));
    for (std::size_t a0 = 0; a0 < da; ++a0)
        for (std::size_t a1 = 0; a1 < da; ++a1)
            for (std::size_t a2 = 0; a2 < da; ++a2) {
                Rational total(0);
                for (std::size_t xi = 0; xi < x.size(); ++xi) {
                    if (x[xi] == 0) continue;
                    const auto t = multi_index(xi, xd);
                    const std::size_t m = t[0], c0 = t[1], c1 = t[2];
                    Rational s(0);
                    const Vec c1a2 = act.apply(c1, A.basis(a2));
                    for (const auto& [f, cf] : C.comult_basis(c0))
                        s += cf * phi_at(m, act.apply(f / dc, A.basis(a0)), A.mul(act.apply(f % dc, A.basis(a1)), c1a2));
                    const Vec c0a0 = act.apply(c0, A.basis(a0));
                    for (const auto& [f, cf] : C.comult_basis(c1))
                        s -= cf * phi_at(m, A.mul(c0a0, act.apply(f / dc, A.basis(a1))), act.apply(f % dc, A.basis(a2)));
                    total += x[xi] * s;
                }
                out[flat_index({0, a0, a1, a2}, od)] = total;
            }
    return out;
}

// ---------------------------------------------------------------- class invariance

Vec random_element(const Subspace& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Vec v(s.ambient_dim());
    for (const Vec& b : s.basis_vectors()) v = add(v, scale(Rational(coeff(rng)), b));
    return v;
}

std::vector<InvarianceTrial> class_invariance_first(const FirstCup& cup, const Vec& phi, std::size_t p, const Vec& psi,
                                                    std::size_t q, std::uint64_t seed, std::size_t trials) {
    if (p == 0) throw PreconditionError("class invariance needs p >= 1");
    std::mt19937_64 rng(seed);
    const CyclicComplex& cb = cup.complex_b();
    const Subspace eta_space = cb.cyclic_cochains(p - 1);
    const Vec base = cup.cup(phi, p, psi, q);
    std::vector<InvarianceTrial> out;
    for (std::size_t t = 0; t < trials; ++t) {
        InvarianceTrial trial;
        trial.perturbation = random_element(eta_space, rng);
        const Vec shifted = cup.cup(add(phi, cb.b(p - 1) * trial.perturbation), p, psi, q);
        trial.coboundary = cup.target_complex().coboundary_test(p + q, sub(shifted, base)).has_value();
        out.push_back(std::move(trial));
    }
    return out;
}

std::vector<InvarianceTrial> class_invariance_second(const SecondCup& cup, const Vec& x, std::size_t p, const Vec& psi,
                                                     std::size_t q, std::uint64_t seed, std::size_t trials) {
    if (p == 0) throw PreconditionError("class invariance needs p >= 1");
    std::mt19937_64 rng(seed);
    const CyclicComplex& cc = cup.complex_c();
    const Subspace eta_space = cc.cyclic_cochains(p - 1);
    const Vec base = cup.cup(x, p, psi, q);
    const std::optional<Vec> base_pull = cup.has_action() ? std::optional<Vec>(cup.pullback(x, p, psi, q)) : std::nullopt;
    std::vector<InvarianceTrial> out;
    for (std::size_t t = 0; t < trials; ++t) {
        InvarianceTrial trial;
        trial.perturbation = random_element(eta_space, rng);
        const Vec shifted_x = add(x, cc.b(p - 1) * trial.perturbation);
        trial.coboundary = cup.hom_complex().coboundary_test(p + q, sub(cup.cup(shifted_x, p, psi, q), base)).has_value();
        if (base_pull)
            trial.coboundary = trial.coboundary && cup.pullback_complex()
                                                       .coboundary_test(p + q, sub(cup.pullback(shifted_x, p, psi, q), *base_pull))
                                                       .has_value();
        out.push_back(std::move(trial));
    }
    return out;
}

}  // namespace hcc
