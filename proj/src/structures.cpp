#include "hcc/structures.hpp"

#include <sstream>

namespace hcc {

Sparse sparse(const Vec& v) {
    Sparse s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.emplace_back(i, v[i]);
    return s;
}

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols) {
        std::ostringstream os;
        os << what << ": expected " << rows << "x" << cols << " matrix, got " << m.rows() << "x" << m.cols();
        throw SpecFormatError(os.str());
    }
}

void require_len(const Vec& v, std::size_t n, const std::string& what) {
    if (v.size() != n) throw SpecFormatError(what + ": expected length " + std::to_string(n) + ", got " + std::to_string(v.size()));
}

std::string tuple_label(const std::vector<const Space*>& spaces, const std::vector<std::size_t>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += spaces[i]->basis_labels[idx[i]];
    }
    return s + ")";
}

// Records the first failing tuple of an axiom family.
class CheckBuilder {
public:
    explicit CheckBuilder(std::string axiom) { check_.axiom = std::move(axiom); }
    void fail(const std::string& witness) {
        if (check_.pass) {
            check_.pass = false;
            check_.witness = witness;
        }
    }
    bool failed() const { return !check_.pass; }
    AxiomCheck done() const { return check_; }

private:
    AxiomCheck check_;
};

// (a⊗b)(c⊗d) = ac⊗bd on flat H⊗H coordinates.
Vec tensor_square_mul(const Algebra& a, const Vec& x, const Vec& y) {
    const std::size_t d = a.dim();
    Vec out(d * d);
    for (auto [ix, cx] : sparse(x)) {
        for (auto [iy, cy] : sparse(y)) {
            const Sparse& left = a.mul_basis(ix / d, iy / d);
            const Sparse& right = a.mul_basis(ix % d, iy % d);
            for (auto [l, cl] : left)
                for (auto [r, cr] : right) out[l * d + r] += cx * cy * cl * cr;
        }
    }
    return out;
}

// (h⊗v)(h'⊗v') = hh'⊗vv' on H⊗B.
Vec mixed_mul(const Algebra& h, const Algebra& b, const Vec& x, const Vec& y) {
    const std::size_t db = b.dim();
    Vec out(h.dim() * db);
    for (auto [ix, cx] : sparse(x)) {
        for (auto [iy, cy] : sparse(y)) {
            for (auto [l, cl] : h.mul_basis(ix / db, iy / db))
                for (auto [r, cr] : b.mul_basis(ix % db, iy % db)) out[l * db + r] += cx * cy * cl * cr;
        }
    }
    return out;
}

Vec outer(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- constructors

Algebra::Algebra(Space s, Matrix m, Vec u) : space(std::move(s)), mult(std::move(m)), unit(std::move(u)) {
    const std::size_t d = space.dim();
    require_shape(mult, d, d * d, "algebra '" + space.name + "' multiplication");
    require_len(unit, d, "algebra '" + space.name + "' unit");
    table_.reserve(d * d);
    for (std::size_t c = 0; c < d * d; ++c) table_.push_back(sparse(mult.col(c)));
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
    Vec out(dim());
    for (auto [i, ci] : sparse(a))
        for (auto [j, cj] : sparse(b))
            for (auto [k, ck] : mul_basis(i, j)) out[k] += ci * cj * ck;
    return out;
}

Vec Algebra::basis(std::size_t i) const { return unit_vector(dim(), i); }

Coalgebra::Coalgebra(Space s, Matrix c, Vec e) : space(std::move(s)), comult(std::move(c)), counit(std::move(e)) {
    const std::size_t d = space.dim();
    require_shape(comult, d * d, d, "coalgebra '" + space.name + "' comultiplication");
    require_len(counit, d, "coalgebra '" + space.name + "' counit");
    for (std::size_t i = 0; i < d; ++i) table_.push_back(sparse(comult.col(i)));
}

Rational Coalgebra::eps(const Vec& c) const {
    Rational r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) r += counit[i] * c[i];
    return r;
}

Hopf::Hopf(Algebra a, Coalgebra c, Matrix s) : algebra(std::move(a)), coalgebra(std::move(c)), antipode(std::move(s)) {
    const std::size_t d = algebra.dim();
    if (coalgebra.dim() != d) throw SpecFormatError("Hopf algebra: algebra and coalgebra dimensions differ");
    require_shape(antipode, d, d, "Hopf algebra antipode");
    Matrix aug(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug(i, j) = antipode(i, j);
        aug(i, d + i) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.rank() == d && rr.pivots.back() < d) {
        Matrix inv(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) inv(i, j) = rr.reduced(i, d + j);
        antipode_inv_ = std::move(inv);
    }
}

const Matrix& Hopf::antipode_inv() const {
    if (!antipode_inv_) throw NonInvertibleAntipode("antipode of '" + algebra.space.name + "' is not invertible");
    return *antipode_inv_;
}

Action::Action(HopfPtr h, Space c, Matrix a) : hopf(std::move(h)), carrier(std::move(c)), act(std::move(a)) {
    const std::size_t dh = hopf->dim(), dv = carrier.dim();
    require_shape(act, dv, dh * dv, "action on '" + carrier.name + "'");
    for (std::size_t i = 0; i < dh; ++i) {
        Matrix m(dv, dv);
        for (std::size_t v = 0; v < dv; ++v)
            for (std::size_t w = 0; w < dv; ++w) m(w, v) = act(w, i * dv + v);
        ops_.push_back(std::move(m));
    }
}

Matrix Action::op(const Vec& h) const {
    Matrix m(dim(), dim());
    for (auto [i, c] : sparse(h)) m = m + c * ops_[i];
    return m;
}

Action trivial_action(HopfPtr h, Space carrier) {
    const std::size_t dh = h->dim(), dv = carrier.dim();
    Matrix a(dv, dh * dv);
    for (std::size_t i = 0; i < dh; ++i)
        for (std::size_t v = 0; v < dv; ++v) a(v, i * dv + v) = h->coalgebra.counit[i];
    return Action(std::move(h), std::move(carrier), std::move(a));
}

Coaction::Coaction(HopfPtr h, Space c, Matrix m) : hopf(std::move(h)), carrier(std::move(c)), coact(std::move(m)) {
    const std::size_t dh = hopf->dim(), dv = carrier.dim();
    require_shape(coact, dh * dv, dv, "coaction on '" + carrier.name + "'");
    terms_.resize(dv);
    for (std::size_t v = 0; v < dv; ++v)
        for (std::size_t r = 0; r < dh * dv; ++r)
            if (coact(r, v) != 0) terms_[v].push_back({r / dv, r % dv, coact(r, v)});
}

Coaction trivial_coaction(HopfPtr h, Space carrier) {
    const std::size_t dh = h->dim(), dv = carrier.dim();
    Matrix m(dh * dv, dv);
    for (std::size_t i = 0; i < dh; ++i)
        for (std::size_t v = 0; v < dv; ++v) m(i * dv + v, v) = h->algebra.unit[i];
    return Coaction(std::move(h), std::move(carrier), std::move(m));
}

SAYD modular_pair_module(const HopfPtr& h, const ModularPair& pair) {
    require_len(pair.delta, h->dim(), "modular pair character");
    require_len(pair.sigma, h->dim(), "modular pair group-like");
    Space k("k", {"1"});
    Matrix act(1, h->dim());
    for (std::size_t i = 0; i < h->dim(); ++i) act(0, i) = pair.delta[i];
    return SAYD{Action(h, k, act), Coaction(h, k, Matrix::column(pair.sigma))};
}

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::A: return "A";
        case Kind::B: return "B";
        case Kind::C: return "C";
    }
    return "?";
}

std::size_t SymmetryBundle::carrier_dim() const { return carrier_space().dim(); }

const Space& SymmetryBundle::carrier_space() const {
    return kind == Kind::C ? coalgebra->space : algebra->space;
}

// ---------------------------------------------------------------- reports

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<std::string> ValidationReport::failed_axioms() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.pass) out.push_back(c.axiom);
    return out;
}

const AxiomCheck* ValidationReport::find(const std::string& axiom) const {
    for (const auto& c : checks)
        if (c.axiom == axiom) return &c;
    return nullptr;
}

void ValidationReport::append(const ValidationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

// ---------------------------------------------------------------- validators

ValidationReport validate(const Algebra& a) {
    const std::size_t d = a.dim();
    const std::vector<const Space*> s3(3, &a.space);
    CheckBuilder assoc("associativity"), lunit("left unit"), runit("right unit");
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d && !assoc.failed(); ++j) {
            Vec ij = a.mul(a.basis(i), a.basis(j));
            for (std::size_t k = 0; k < d; ++k) {
                if (a.mul(ij, a.basis(k)) != a.mul(a.basis(i), a.mul(a.basis(j), a.basis(k)))) {
                    assoc.fail(tuple_label(s3, {i, j, k}));
                    break;
                }
            }
        }
        if (a.mul(a.unit, a.basis(i)) != a.basis(i)) lunit.fail(tuple_label(s3, {i}));
        if (a.mul(a.basis(i), a.unit) != a.basis(i)) runit.fail(tuple_label(s3, {i}));
    }
    return {"algebra " + a.space.name, {assoc.done(), lunit.done(), runit.done()}};
}

ValidationReport validate(const Coalgebra& c) {
    const std::size_t d = c.dim();
    const std::vector<const Space*> s1(1, &c.space);
    Matrix id = Matrix::identity(d);
    Matrix left = kron(c.comult, id) * c.comult;
    Matrix right = kron(id, c.comult) * c.comult;
    Matrix eps = Matrix::from_rows({c.counit}, d);
    Matrix lc = kron(eps, id) * c.comult;
    Matrix rc = kron(id, eps) * c.comult;
    CheckBuilder coassoc("coassociativity"), lcounit("left counit"), rcounit("right counit");
    for (std::size_t i = 0; i < d; ++i) {
        if (left.col(i) != right.col(i)) coassoc.fail(tuple_label(s1, {i}));
        if (lc.col(i) != id.col(i)) lcounit.fail(tuple_label(s1, {i}));
        if (rc.col(i) != id.col(i)) rcounit.fail(tuple_label(s1, {i}));
    }
    return {"coalgebra " + c.space.name, {coassoc.done(), lcounit.done(), rcounit.done()}};
}

ValidationReport validate(const Hopf& h) {
    ValidationReport rep{"Hopf algebra " + h.space().name, {}};
    rep.append(validate(h.algebra));
    rep.append(validate(h.coalgebra));
    const std::size_t d = h.dim();
    const auto& A = h.algebra;
    const auto& C = h.coalgebra;
    const std::vector<const Space*> s2(2, &h.space());
    CheckBuilder dmul("comultiplication multiplicative"), dunit("comultiplication unital"),
        emul("counit multiplicative"), eunit("counit unital"), sl("antipode left"), sr("antipode right"),
        sinv("antipode invertible");
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Vec ij = A.mul(A.basis(i), A.basis(j));
            if (C.coproduct(ij) != tensor_square_mul(A, C.coproduct(A.basis(i)), C.coproduct(A.basis(j))))
                dmul.fail(tuple_label(s2, {i, j}));
            if (C.eps(ij) != C.counit[i] * C.counit[j]) emul.fail(tuple_label(s2, {i, j}));
        }
    }
    if (C.coproduct(A.unit) != outer(A.unit, A.unit)) dunit.fail("(1)");
    if (C.eps(A.unit) != 1) eunit.fail("(1)");
    Matrix id = Matrix::identity(d);
    Matrix left = A.mult * kron(h.antipode, id) * C.comult;
    Matrix right = A.mult * kron(id, h.antipode) * C.comult;
    for (std::size_t i = 0; i < d; ++i) {
        Vec expect = scale(C.counit[i], A.unit);
        if (left.col(i) != expect) sl.fail(tuple_label(s2, {i}));
        if (right.col(i) != expect) sr.fail(tuple_label(s2, {i}));
    }
    if (!h.antipode_invertible()) sinv.fail("(S)");
    rep.checks.insert(rep.checks.end(), {dmul.done(), dunit.done(), emul.done(), eunit.done(), sl.done(), sr.done(), sinv.done()});
    return rep;
}

ValidationReport validate(const Action& a) {
    const Hopf& h = *a.hopf;
    const std::size_t dh = h.dim(), dv = a.dim();
    std::vector<const Space*> sp{&h.space(), &h.space(), &a.carrier};
    CheckBuilder assoc("action associativity"), unit("action unit");
    for (std::size_t i = 0; i < dh; ++i) {
        for (std::size_t j = 0; j < dh; ++j) {
            Matrix lhs = a.op(h.algebra.mul(h.algebra.basis(i), h.algebra.basis(j)));
            Matrix rhs = a.op(i) * a.op(j);
            for (std::size_t v = 0; v < dv; ++v)
                if (lhs.col(v) != rhs.col(v)) {
                    assoc.fail(tuple_label(sp, {i, j, v}));
                    break;
                }
        }
    }
    Matrix u = a.op(h.algebra.unit);
    for (std::size_t v = 0; v < dv; ++v)
        if (u.col(v) != unit_vector(dv, v)) unit.fail("(" + a.carrier.basis_labels[v] + ")");
    return {"action on " + a.carrier.name, {assoc.done(), unit.done()}};
}

ValidationReport validate(const Coaction& c) {
    const Hopf& h = *c.hopf;
    const std::size_t dh = h.dim(), dv = c.dim();
    Matrix idv = Matrix::identity(dv);
    Matrix lhs = kron(h.coalgebra.comult, idv) * c.coact;
    Matrix rhs = kron(Matrix::identity(dh), c.coact) * c.coact;
    Matrix cu = kron(Matrix::from_rows({h.coalgebra.counit}, dh), idv) * c.coact;
    CheckBuilder coassoc("coaction coassociativity"), counit("coaction counit");
    for (std::size_t v = 0; v < dv; ++v) {
        const std::string w = "(" + c.carrier.basis_labels[v] + ")";
        if (lhs.col(v) != rhs.col(v)) coassoc.fail(w);
        if (cu.col(v) != idv.col(v)) counit.fail(w);
    }
    return {"coaction on " + c.carrier.name, {coassoc.done(), counit.done()}};
}

ValidationReport validate(const SAYD& m) {
    ValidationReport rep{"SAYD module " + m.action.carrier.name, {}};
    if (m.action.dim() != m.coaction.dim()) throw SpecFormatError("SAYD: action and coaction carriers differ in dimension");
    rep.append(validate(m.action));
    rep.append(validate(m.coaction));
    const Hopf& h = *m.action.hopf;
    const std::size_t dh = h.dim(), dm = m.dim();
    CheckBuilder ayd("anti-Yetter-Drinfeld"), stab("stability");
    std::vector<const Space*> sp{&h.space(), &m.action.carrier};
    if (!h.antipode_invertible()) {
        ayd.fail("(S not invertible)");
    } else {
        const Matrix& sinv = h.antipode_inv();
        for (std::size_t hi = 0; hi < dh && !ayd.failed(); ++hi) {
            auto d2 = iterated_coproduct_terms(h.coalgebra, hi, 2);
            for (std::size_t mi = 0; mi < dm; ++mi) {
                Vec lhs = m.coaction.coact * m.action.op(hi).col(mi);
                Vec rhs(dh * dm);
                for (const auto& t : d2) {
                    Vec s3 = sinv.col(t.digits[2]);
                    for (const auto& ct : m.coaction.terms(mi)) {
                        Vec left = h.algebra.mul(h.algebra.mul(h.algebra.basis(t.digits[0]), h.algebra.basis(ct.h)), s3);
                        Vec right = m.action.op(t.digits[1]).col(ct.v);
                        rhs = add(rhs, scale(t.coeff * ct.coeff, outer(left, right)));
                    }
                }
                if (lhs != rhs) {
                    ayd.fail(tuple_label(sp, {hi, mi}));
                    break;
                }
            }
        }
    }
    Matrix s = m.action.act * m.coaction.coact;
    for (std::size_t mi = 0; mi < dm; ++mi)
        if (s.col(mi) != unit_vector(dm, mi)) stab.fail("(" + m.action.carrier.basis_labels[mi] + ")");
    rep.checks.push_back(ayd.done());
    rep.checks.push_back(stab.done());
    return rep;
}

ValidationReport validate(const HopfPtr& h, const ModularPair& pair) {
    // A modular pair is accepted exactly when ^σk_δ is SAYD.
    ValidationReport rep = validate(modular_pair_module(h, pair));
    rep.subject = "modular pair";
    return rep;
}

ValidationReport validate(const SymmetryBundle& b) {
    ValidationReport rep{"bundle " + b.name, {}};
    if (!b.hopf) throw SpecFormatError("bundle '" + b.name + "' has no Hopf algebra");
    rep.append(validate(*b.hopf));
    rep.append(validate(b.coeffs));
    const Hopf& h = *b.hopf;
    const std::size_t dh = h.dim();
    switch (b.kind) {
        case Kind::A: {
            if (!b.algebra || !b.action) throw SpecFormatError("kind-A bundle '" + b.name + "' needs an algebra and an action");
            if (b.action->dim() != b.algebra->dim()) throw SpecFormatError("kind-A bundle '" + b.name + "': action carrier mismatch");
            rep.append(validate(*b.algebra));
            rep.append(validate(*b.action));
            const Algebra& A = *b.algebra;
            const Action& act = *b.action;
            std::vector<const Space*> sp{&h.space(), &A.space, &A.space};
            CheckBuilder mul("module algebra multiplicativity"), unit("module algebra unit");
            for (std::size_t hi = 0; hi < dh; ++hi) {
                auto d1 = iterated_coproduct_terms(h.coalgebra, hi, 1);
                for (std::size_t i = 0; i < A.dim() && !mul.failed(); ++i)
                    for (std::size_t j = 0; j < A.dim(); ++j) {
                        Vec lhs = act.op(hi) * A.mul(A.basis(i), A.basis(j));
                        Vec rhs(A.dim());
                        for (const auto& t : d1)
                            rhs = add(rhs, scale(t.coeff, A.mul(act.op(t.digits[0]).col(i), act.op(t.digits[1]).col(j))));
                        if (lhs != rhs) {
                            mul.fail(tuple_label(sp, {hi, i, j}));
                            break;
                        }
                    }
                if (act.op(hi) * A.unit != scale(h.coalgebra.counit[hi], A.unit)) unit.fail("(" + h.space().basis_labels[hi] + ")");
            }
            rep.checks.push_back(mul.done());
            rep.checks.push_back(unit.done());
            break;
        }
        case Kind::B: {
            if (!b.algebra || !b.coaction) throw SpecFormatError("kind-B bundle '" + b.name + "' needs an algebra and a coaction");
            if (b.coaction->dim() != b.algebra->dim()) throw SpecFormatError("kind-B bundle '" + b.name + "': coaction carrier mismatch");
            rep.append(validate(*b.algebra));
            rep.append(validate(*b.coaction));
            const Algebra& B = *b.algebra;
            const Matrix& rho = b.coaction->coact;
            std::vector<const Space*> sp{&B.space, &B.space};
            CheckBuilder mul("comodule algebra multiplicativity"), unit("comodule algebra unit");
            for (std::size_t i = 0; i < B.dim(); ++i)
                for (std::size_t j = 0; j < B.dim(); ++j) {
                    Vec lhs = rho * B.mul(B.basis(i), B.basis(j));
                    Vec rhs = mixed_mul(h.algebra, B, rho.col(i), rho.col(j));
                    if (lhs != rhs) mul.fail(tuple_label(sp, {i, j}));
                }
            if (rho * B.unit != outer(h.algebra.unit, B.unit)) unit.fail("(1)");
            rep.checks.push_back(mul.done());
            rep.checks.push_back(unit.done());
            break;
        }
        case Kind::C: {
            if (!b.coalgebra || !b.action) throw SpecFormatError("kind-C bundle '" + b.name + "' needs a coalgebra and an action");
            if (b.action->dim() != b.coalgebra->dim()) throw SpecFormatError("kind-C bundle '" + b.name + "': action carrier mismatch");
            rep.append(validate(*b.coalgebra));
            rep.append(validate(*b.action));
            const Coalgebra& C = *b.coalgebra;
            const Action& act = *b.action;
            std::vector<const Space*> sp{&h.space(), &C.space};
            CheckBuilder com("module coalgebra comultiplication"), cou("module coalgebra counit");
            for (std::size_t hi = 0; hi < dh; ++hi) {
                auto d1 = iterated_coproduct_terms(h.coalgebra, hi, 1);
                Matrix hh(C.dim() * C.dim(), C.dim() * C.dim());
                for (const auto& t : d1) hh = hh + t.coeff * kron(act.op(t.digits[0]), act.op(t.digits[1]));
                Matrix lhs = C.comult * act.op(hi);
                Matrix rhs = hh * C.comult;
                for (std::size_t c = 0; c < C.dim(); ++c) {
                    if (lhs.col(c) != rhs.col(c)) com.fail(tuple_label(sp, {hi, c}));
                    if (C.eps(act.op(hi).col(c)) != h.coalgebra.counit[hi] * C.counit[c]) cou.fail(tuple_label(sp, {hi, c}));
                }
            }
            rep.checks.push_back(com.done());
            rep.checks.push_back(cou.done());
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------- operations

std::vector<TupleTerm> iterated_coproduct_terms(const Coalgebra& c, std::size_t basis, std::size_t n) {
    std::vector<TupleTerm> terms{{{basis}, Rational(1)}};
    const std::size_t d = c.dim();
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<TupleTerm> next;
        for (const auto& t : terms) {
            for (auto [pair, coeff] : c.comult_basis(t.digits.back())) {
                TupleTerm nt{t.digits, t.coeff * coeff};
                nt.digits.back() = pair / d;
                nt.digits.push_back(pair % d);
                next.push_back(std::move(nt));
            }
        }
        terms = std::move(next);
    }
    return terms;
}

TensorElement iterated_coproduct(const Hopf& h, const Vec& element, std::size_t n) {
    std::vector<Space> factors(n + 1, h.space());
    auto dims = power_dims(h.dim(), n + 1);
    Vec coords(product(dims));
    for (auto [i, ci] : sparse(element))
        for (const auto& t : iterated_coproduct_terms(h.coalgebra, i, n)) coords[flat_index(t.digits, dims)] += ci * t.coeff;
    return TensorElement(std::move(factors), std::move(coords));
}

LinMap antipode_inverse(const Hopf& h) { return LinMap(h.space(), h.space(), h.antipode_inv()); }

Vec convolve(const Coalgebra& c, const Vec& f, const Vec& g) {
    const std::size_t d = c.dim();
    Vec out(d);
    for (std::size_t k = 0; k < d; ++k)
        for (auto [pair, coeff] : c.comult_basis(k)) out[k] += coeff * f[pair / d] * g[pair % d];
    return out;
}

Vec convolution_inverse(const Coalgebra& c, const Vec& chi) {
    const std::size_t d = c.dim();
    Matrix m(d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (auto [pair, coeff] : c.comult_basis(k)) m(k, pair % d) += coeff * chi[pair / d];
    auto psi = solve_linear(m, c.counit);
    if (!psi || convolve(c, *psi, chi) != c.counit || convolve(c, chi, *psi) != c.counit)
        throw ConvolutionNonInvertible("functional on '" + c.space.name + "' is not convolution invertible");
    return *psi;
}

bool is_group_like(const Hopf& h, const Vec& g) {
    return h.coalgebra.coproduct(g) == outer(g, g) && h.coalgebra.eps(g) == 1;
}

bool is_character(const Hopf& h, const Vec& delta) {
    const auto& A = h.algebra;
    Rational u = 0;
    for (std::size_t i = 0; i < A.dim(); ++i) u += delta[i] * A.unit[i];
    if (u != 1) return false;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            Vec ij = A.mul(A.basis(i), A.basis(j));
            Rational v = 0;
            for (std::size_t k = 0; k < A.dim(); ++k) v += delta[k] * ij[k];
            if (v != delta[i] * delta[j]) return false;
        }
    return true;
}

}  // namespace hcc
