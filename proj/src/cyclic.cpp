#include "hcc/cyclic.hpp"

#include <functional>

namespace hcc {

std::vector<std::size_t> cochain_dims(std::size_t dm, std::size_t dx, std::size_t n) {
    std::vector<std::size_t> d(n + 2, dx);
    d[0] = dm;
    return d;
}

namespace {

int parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

// Σ over Δ^{k-1}(h) of the Kronecker product of the slot actions.
Matrix tensor_action(const Hopf& h, std::size_t hb, const std::vector<const Action*>& slots) {
    std::size_t dim = 1;
    for (const auto* s : slots) dim *= s->dim();
    Matrix total(dim, dim);
    for (const auto& t : iterated_coproduct_terms(h.coalgebra, hb, slots.size() - 1)) {
        Matrix m = slots[0]->op(t.digits[0]);
        for (std::size_t k = 1; k < slots.size(); ++k) m = kron(m, slots[k]->op(t.digits[k]));
        total = total + t.coeff * m;
    }
    return total;
}

Matrix rows_to_matrix(const std::vector<Vec>& rows, std::size_t cols) {
    if (rows.empty()) return Matrix(0, cols);
    return Matrix::from_rows(rows, cols);
}

AxiomCheck check_in(const std::string& name, bool ok, const std::string& witness) {
    return AxiomCheck{name, ok, ok ? "" : witness};
}

}  // namespace

// ---------------------------------------------------------------- complex

CyclicComplex::CyclicComplex(SymmetryBundle bundle, std::size_t max_degree, ComplexOptions opts)
    : bundle_(std::move(bundle)), max_degree_(max_degree), opts_(opts) {
    if (!bundle_.hopf) throw ConstructionError("bundle '" + bundle_.name + "' has no Hopf algebra");
    if (!bundle_.hopf->antipode_invertible())
        throw NonInvertibleAntipode("bundle '" + bundle_.name + "': antipode is not invertible");
    for (std::size_t n = 0; n <= max_degree_ + 1; ++n) spaces_.push_back(build_space(n));
    for (std::size_t n = 0; n <= max_degree_; ++n) b_.push_back(build_b(n));
    for (std::size_t n = 0; n <= max_degree_ + 1; ++n) lambda_.push_back(build_lambda(n));
}

const char* twist_name(Twist t) {
    switch (t) {
        case Twist::Identity: return "identity";
        case Twist::Antipode: return "S";
        case Twist::AntipodeInverse: return "S^-1";
    }
    return "?";
}

Vec CyclicComplex::twisted(std::size_t h) const {
    const Hopf& hopf = *bundle_.hopf;
    const Twist t = bundle_.kind == Kind::A ? opts_.kind_a : bundle_.kind == Kind::B ? opts_.kind_b : opts_.kind_c;
    switch (t) {
        case Twist::Identity: return hopf.algebra.basis(h);
        case Twist::Antipode: return hopf.antipode.col(h);
        case Twist::AntipodeInverse: return hopf.antipode_inv().col(h);
    }
    return {};
}

Matrix CyclicComplex::twist_op(std::size_t h) const {
    const Vec t = twisted(h);
    return bundle_.kind == Kind::A ? bundle_.action->op(t) : bundle_.coeffs.action.op(t);
}

Matrix CyclicComplex::diagonal_action(std::size_t h, std::size_t n) const {
    std::vector<const Action*> slots(n + 1, &*bundle_.action);
    return tensor_action(*bundle_.hopf, h, slots);
}

Matrix CyclicComplex::diagonal_coaction(std::size_t n) const {
    const Hopf& h = *bundle_.hopf;
    const Coaction& rho = *bundle_.coaction;
    const std::size_t dx = rho.dim();
    const auto dims = power_dims(dx, n + 1);
    const std::size_t N = product(dims);
    Matrix out(h.dim() * N, N);
    for (std::size_t flat = 0; flat < N; ++flat) {
        auto t = multi_index(flat, dims);
        std::function<void(std::size_t, const Vec&, std::vector<std::size_t>&, const Rational&)> rec =
            [&](std::size_t slot, const Vec& hacc, std::vector<std::size_t>& digits, const Rational& coeff) {
                if (slot == t.size()) {
                    const std::size_t target = flat_index(digits, dims);
                    for (auto [hk, ch] : sparse(hacc)) out(hk * N + target, flat) += coeff * ch;
                    return;
                }
                for (const auto& term : rho.terms(t[slot])) {
                    digits.push_back(term.v);
                    rec(slot + 1, h.algebra.mul(hacc, h.algebra.basis(term.h)), digits, coeff * term.coeff);
                    digits.pop_back();
                }
            };
        std::vector<std::size_t> digits;
        rec(0, h.algebra.unit, digits, Rational(1));
    }
    return out;
}

CochainSpace CyclicComplex::build_space(std::size_t n) const {
    const Hopf& h = *bundle_.hopf;
    const SAYD& M = bundle_.coeffs;
    const std::size_t dm = M.dim(), dx = bundle_.carrier_dim();
    CochainSpace s;
    s.kind = bundle_.kind;
    s.degree = n;
    s.dims = cochain_dims(dm, dx, n);
    const std::size_t V = s.ambient_dim();
    (void)Matrix(1, V * V);  // budget guard for the operator matrices
    switch (bundle_.kind) {
        case Kind::A: {
            std::vector<const Action*> slots{&M.action};
            for (std::size_t k = 0; k <= n; ++k) slots.push_back(&*bundle_.action);
            Matrix cons(0, V);
            for (std::size_t hb = 0; hb < h.dim(); ++hb) {
                Matrix dh = tensor_action(h, hb, slots).transpose();
                cons = Matrix::vstack(cons, dh - h.coalgebra.counit[hb] * Matrix::identity(V));
            }
            s.equivariant = kernel_basis(cons);
            s.null = Subspace::zero(V);
            break;
        }
        case Kind::B: {
            const std::size_t N = V / dm;
            const Matrix R = diagonal_coaction(n);
            const Matrix& cm = M.coaction.coact;
            Matrix cons(h.dim() * dm * N, V);
            for (std::size_t hb = 0; hb < h.dim(); ++hb)
                for (std::size_t m = 0; m < dm; ++m)
                    for (std::size_t x = 0; x < N; ++x) {
                        const std::size_t row = (hb * dm + m) * N + x;
                        for (std::size_t mp = 0; mp < dm; ++mp)
                            if (cm(hb * dm + m, mp) != 0) cons(row, mp * N + x) += cm(hb * dm + m, mp);
                        for (std::size_t xp = 0; xp < N; ++xp)
                            if (R(hb * N + xp, x) != 0) cons(row, m * N + xp) -= R(hb * N + xp, x);
                    }
            s.equivariant = kernel_basis(cons);
            s.null = Subspace::zero(V);
            break;
        }
        case Kind::C: {
            const std::size_t N = V / dm;
            Matrix gens(V, 0);
            std::vector<Vec> cols;
            for (std::size_t hb = 0; hb < h.dim(); ++hb) {
                Matrix g = kron(twist_op(hb), Matrix::identity(N)) - kron(Matrix::identity(dm), diagonal_action(hb, n));
                for (std::size_t c = 0; c < V; ++c) cols.push_back(g.col(c));
            }
            s.equivariant = Subspace::full(V);
            s.null = Subspace::span(cols, V);
            break;
        }
    }
    return s;
}

Matrix CyclicComplex::build_lambda(std::size_t n) const {
    const CochainSpace& s = spaces_.at(n);
    const std::size_t V = s.ambient_dim();
    const Coaction& mc = bundle_.coeffs.coaction;
    const Rational sgn(parity_sign(n));
    Matrix L(V, V);
    switch (bundle_.kind) {
        case Kind::A: {
            for (std::size_t r = 0; r < V; ++r) {
                auto d = multi_index(r, s.dims);
                for (const auto& t : mc.terms(d[0])) {
                    Matrix op = twist_op(t.h);
                    for (std::size_t k = 0; k < op.rows(); ++k) {
                        if (op(k, d.back()) == 0) continue;
                        std::vector<std::size_t> c{t.v, k};
                        c.insert(c.end(), d.begin() + 1, d.end() - 1);
                        L(r, flat_index(c, s.dims)) += sgn * t.coeff * op(k, d.back());
                    }
                }
            }
            break;
        }
        case Kind::B: {
            for (std::size_t r = 0; r < V; ++r) {
                auto d = multi_index(r, s.dims);
                for (const auto& t : bundle_.coaction->terms(d.back())) {
                    const Matrix op = twist_op(t.h);
                    for (std::size_t mp = 0; mp < op.cols(); ++mp) {
                        if (op(d[0], mp) == 0) continue;
                        std::vector<std::size_t> c{mp, t.v};
                        c.insert(c.end(), d.begin() + 1, d.end() - 1);
                        L(r, flat_index(c, s.dims)) += sgn * t.coeff * op(d[0], mp);
                    }
                }
            }
            break;
        }
        case Kind::C: {
            const Action& ca = *bundle_.action;
            for (std::size_t col = 0; col < V; ++col) {
                auto d = multi_index(col, s.dims);
                for (const auto& t : mc.terms(d[0])) {
                    const Matrix& op = ca.op(t.h);
                    for (std::size_t k = 0; k < op.rows(); ++k) {
                        if (op(k, d[1]) == 0) continue;
                        std::vector<std::size_t> r{t.v};
                        r.insert(r.end(), d.begin() + 2, d.end());
                        r.push_back(k);
                        L(flat_index(r, s.dims), col) += sgn * t.coeff * op(k, d[1]);
                    }
                }
            }
            break;
        }
    }
    return L;
}

Matrix CyclicComplex::build_b(std::size_t n) const {
    const CochainSpace& src = spaces_.at(n);
    const CochainSpace& dst = spaces_.at(n + 1);
    const std::size_t Vs = src.ambient_dim(), Vd = dst.ambient_dim();
    const Coaction& mc = bundle_.coeffs.coaction;
    const Rational last(parity_sign(n + 1));
    Matrix B(Vd, Vs);
    switch (bundle_.kind) {
        case Kind::A:
        case Kind::B: {
            const Algebra& A = *bundle_.algebra;
            for (std::size_t r = 0; r < Vd; ++r) {
                auto d = multi_index(r, dst.dims);  // (m, x_0 .. x_{n+1})
                for (std::size_t i = 0; i <= n; ++i)
                    for (const auto& [k, c] : A.mul_basis(d[i + 1], d[i + 2])) {
                        std::vector<std::size_t> t(d.begin(), d.begin() + 1 + i);
                        t.push_back(k);
                        t.insert(t.end(), d.begin() + 3 + i, d.end());
                        B(r, flat_index(t, src.dims)) += parity_sign(i) * c;
                    }
                if (bundle_.kind == Kind::A) {
                    for (const auto& mt : mc.terms(d[0])) {
                        Matrix op = twist_op(mt.h);
                        for (std::size_t k = 0; k < op.rows(); ++k) {
                            if (op(k, d.back()) == 0) continue;
                            for (const auto& [l, c] : A.mul_basis(k, d[1])) {
                                std::vector<std::size_t> t{mt.v, l};
                                t.insert(t.end(), d.begin() + 2, d.end() - 1);
                                B(r, flat_index(t, src.dims)) += last * mt.coeff * op(k, d.back()) * c;
                            }
                        }
                    }
                } else {
                    for (const auto& bt : bundle_.coaction->terms(d.back())) {
                        const Matrix op = twist_op(bt.h);
                        for (const auto& [l, c] : A.mul_basis(bt.v, d[1]))
                            for (std::size_t mp = 0; mp < op.cols(); ++mp) {
                                if (op(d[0], mp) == 0) continue;
                                std::vector<std::size_t> t{mp, l};
                                t.insert(t.end(), d.begin() + 2, d.end() - 1);
                                B(r, flat_index(t, src.dims)) += last * bt.coeff * c * op(d[0], mp);
                            }
                    }
                }
            }
            break;
        }
        case Kind::C: {
            const Coalgebra& C = *bundle_.coalgebra;
            const Action& ca = *bundle_.action;
            const std::size_t dc = C.dim();
            for (std::size_t col = 0; col < Vs; ++col) {
                auto d = multi_index(col, src.dims);  // (m, c_0 .. c_n)
                for (std::size_t i = 0; i <= n; ++i)
                    for (const auto& [pq, c] : C.comult_basis(d[i + 1])) {
                        std::vector<std::size_t> t(d.begin(), d.begin() + 1 + i);
                        t.push_back(pq / dc);
                        t.push_back(pq % dc);
                        t.insert(t.end(), d.begin() + 2 + i, d.end());
                        B(flat_index(t, dst.dims), col) += parity_sign(i) * c;
                    }
                for (const auto& mt : mc.terms(d[0])) {
                    const Matrix& op = ca.op(mt.h);
                    for (const auto& [pq, c] : C.comult_basis(d[1])) {
                        const std::size_t p = pq / dc, q = pq % dc;
                        for (std::size_t k = 0; k < op.rows(); ++k) {
                            if (op(k, p) == 0) continue;
                            std::vector<std::size_t> t{mt.v, q};
                            t.insert(t.end(), d.begin() + 2, d.end());
                            t.push_back(k);
                            B(flat_index(t, dst.dims), col) += last * mt.coeff * c * op(k, p);
                        }
                    }
                }
            }
            break;
        }
    }
    return B;
}

Subspace CyclicComplex::cyclic_cochains(std::size_t n) const {
    const CochainSpace& s = spaces_.at(n);
    Matrix t = Matrix::identity(s.ambient_dim()) - lambda_.at(n);
    return intersection(s.equivariant, preimage(t, s.null));
}

Subspace CyclicComplex::cocycles(std::size_t n) const {
    return intersection(cyclic_cochains(n), preimage(b_.at(n), spaces_.at(n + 1).null));
}

Subspace CyclicComplex::coboundaries(std::size_t n) const {
    if (n == 0) return spaces_.at(0).null;
    return subspace_sum(image(b_.at(n - 1), cyclic_cochains(n - 1)), spaces_.at(n).null);
}

Subspace CyclicComplex::hochschild_cocycles(std::size_t n) const {
    return intersection(spaces_.at(n).equivariant, preimage(b_.at(n), spaces_.at(n + 1).null));
}

Subspace CyclicComplex::hochschild_coboundaries(std::size_t n) const {
    if (n == 0) return spaces_.at(0).null;
    return subspace_sum(image(b_.at(n - 1), spaces_.at(n - 1).equivariant), spaces_.at(n).null);
}

bool CyclicComplex::equivalent(std::size_t n, const Vec& v, const Vec& w) const {
    return spaces_.at(n).null.contains(sub(v, w));
}

bool CyclicComplex::is_cyclic_cocycle(std::size_t n, const Vec& v) const {
    const CochainSpace& s = spaces_.at(n);
    if (!s.equivariant.contains(v)) return false;
    if (!s.null.contains(sub(v, lambda_.at(n) * v))) return false;
    return spaces_.at(n + 1).null.contains(b_.at(n) * v);
}

ValidationReport CyclicComplex::gates() const {
    ValidationReport rep{"cyclic complex of " + bundle_.name, {}};
    AxiomCheck wd{"operators preserve cochain space", true, ""}, bb{"b∘b = 0", true, ""},
        lam{"λ^(n+1) = id", true, ""}, cyc{"b preserves ker(1−λ)", true, ""};
    auto fail = [](AxiomCheck& c, std::size_t n) {
        if (c.pass) c.witness = "degree " + std::to_string(n);
        c.pass = false;
    };
    for (std::size_t n = 0; n <= max_degree_ + 1; ++n) {
        const CochainSpace& s = spaces_[n];
        const Matrix& L = lambda_[n];
        if (s.kind == Kind::C) {
            if (!s.null.contains(image(L, s.null))) fail(wd, n);
            if (n <= max_degree_ && !spaces_[n + 1].null.contains(image(b_[n], s.null))) fail(wd, n);
        } else {
            if (!s.equivariant.contains(image(L, s.equivariant))) fail(wd, n);
            if (n <= max_degree_ && !spaces_[n + 1].equivariant.contains(image(b_[n], s.equivariant))) fail(wd, n);
        }
        Matrix p = Matrix::identity(s.ambient_dim());
        for (std::size_t k = 0; k <= n; ++k) p = L * p;
        if (!s.null.contains(image(p - Matrix::identity(s.ambient_dim()), s.equivariant))) fail(lam, n);
        if (n + 1 <= max_degree_ && !spaces_[n + 2].null.contains(image(b_[n + 1] * b_[n], s.equivariant))) fail(bb, n);
        if (n <= max_degree_ && !cyclic_cochains(n + 1).contains(image(b_[n], cyclic_cochains(n)))) fail(cyc, n);
    }
    rep.checks = {wd, bb, lam, cyc};
    return rep;
}

std::optional<Vec> CyclicComplex::coboundary_test(std::size_t n, const Vec& phi) const {
    const CochainSpace& s = spaces_.at(n);
    if (n == 0) {
        if (s.null.contains(phi)) return Vec{};
        return std::nullopt;
    }
    // Solve b(Σ α_i e_i) + Σ β_j z_j = φ over a basis e of Cλ_{n-1} and z of null.
    const auto cyc = cyclic_cochains(n - 1).basis_vectors();
    const auto nul = s.null.basis_vectors();
    Matrix sys(s.ambient_dim(), cyc.size() + nul.size());
    for (std::size_t i = 0; i < cyc.size(); ++i) sys.set_col(i, b_.at(n - 1) * cyc[i]);
    for (std::size_t j = 0; j < nul.size(); ++j) sys.set_col(cyc.size() + j, nul[j]);
    auto sol = solve_linear(sys, phi);
    if (!sol) return std::nullopt;
    Vec eta(spaces_.at(n - 1).ambient_dim());
    for (std::size_t i = 0; i < cyc.size(); ++i) eta = add(eta, scale((*sol)[i], cyc[i]));
    return eta;
}

std::optional<Vec> CyclicComplex::hochschild_coboundary_test(std::size_t n, const Vec& phi) const {
    const CochainSpace& s = spaces_.at(n);
    if (n == 0) {
        if (s.null.contains(phi)) return Vec{};
        return std::nullopt;
    }
    const auto eq = spaces_.at(n - 1).equivariant.basis_vectors();
    const auto nul = s.null.basis_vectors();
    Matrix sys(s.ambient_dim(), eq.size() + nul.size());
    for (std::size_t i = 0; i < eq.size(); ++i) sys.set_col(i, b_.at(n - 1) * eq[i]);
    for (std::size_t j = 0; j < nul.size(); ++j) sys.set_col(eq.size() + j, nul[j]);
    auto sol = solve_linear(sys, phi);
    if (!sol) return std::nullopt;
    Vec eta(spaces_.at(n - 1).ambient_dim());
    for (std::size_t i = 0; i < eq.size(); ++i) eta = add(eta, scale((*sol)[i], eq[i]));
    return eta;
}

std::vector<CohomologyResult> compute_cohomology(const CyclicComplex& cx, std::size_t n_max) {
    if (n_max > cx.max_degree()) throw std::invalid_argument("compute_cohomology: degree beyond the built complex");
    auto g = cx.gates();
    if (!g.ok()) {
        std::string what = "cyclic complex of '" + cx.bundle().name + "' fails:";
        for (const auto& c : g.checks)
            if (!c.pass) what += " " + c.axiom + " (" + c.witness + ")";
        throw ConstructionError(what);
    }
    std::vector<CohomologyResult> out;
    for (std::size_t n = 0; n <= n_max; ++n) {
        CohomologyResult r;
        r.degree = n;
        Subspace z = cx.cocycles(n), bd = cx.coboundaries(n);
        r.hc_dim = quotient_dim(z, bd);
        r.representatives = complement_basis(z, bd);
        Subspace hz = cx.hochschild_cocycles(n), hb = cx.hochschild_coboundaries(n);
        r.hh_dim = quotient_dim(hz, hb);
        r.hh_representatives = complement_basis(hz, hb);
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------- traces

TraceCorrespondence::TraceCorrespondence(const CyclicComplex& cx, std::size_t n) : cx_(cx), n_(n) {
    if (n > cx.max_degree()) throw std::invalid_argument("trace correspondence: degree beyond the built complex");
    switch (cx.kind()) {
        case Kind::A: omega_a_ = std::make_unique<OmegaA>(cx.bundle(), n); break;
        case Kind::B: omega_b_ = std::make_unique<OmegaB>(cx.bundle(), n); break;
        case Kind::C: omega_c_ = std::make_unique<OmegaCC>(cx.bundle(), n); break;
    }
}

std::size_t TraceCorrespondence::trace_ambient_dim() const {
    const std::size_t dm = cx_.bundle().coeffs.dim();
    switch (cx_.kind()) {
        case Kind::A: return dm * omega_a_->calculus().dim(n_);
        case Kind::B: return dm * omega_b_->calculus().dim(n_);
        case Kind::C: return dm * omega_c_->dim(n_);
    }
    return 0;
}

Vec TraceCorrespondence::to_trace(const Vec& cocycle) const {
    if (!cx_.is_cyclic_cocycle(n_, cocycle))
        throw PreconditionError("to_trace: input is not a cyclic cocycle of degree " + std::to_string(n_));
    const CochainSpace& s = cx_.space(n_);
    const std::size_t dm = s.dims[0], per = s.ambient_dim() / dm;
    const std::size_t tdim = trace_ambient_dim() / dm;
    Vec t(trace_ambient_dim());
    for (std::size_t idx = 0; idx < cocycle.size(); ++idx) {
        if (cocycle[idx] == 0) continue;
        const std::size_t m = idx / per, x = idx % per;
        std::size_t target = 0;
        if (cx_.kind() == Kind::C) {
            target = omega_c_->embed(n_, x);
        } else {
            const auto& calc = cx_.kind() == Kind::A ? omega_a_->calculus() : omega_b_->calculus();
            target = calc.index(multi_index(x, power_dims(calc.base_dim(), n_ + 1)));
        }
        t[m * tdim + target] = cocycle[idx];
    }
    return t;
}

Vec TraceCorrespondence::to_cocycle(const Vec& trace) const {
    const CochainSpace& s = cx_.space(n_);
    const std::size_t dm = s.dims[0], per = s.ambient_dim() / dm;
    const std::size_t tdim = trace_ambient_dim() / dm;
    Vec out(s.ambient_dim());
    for (std::size_t m = 0; m < dm; ++m)
        for (std::size_t x = 0; x < per; ++x) {
            std::size_t source = 0;
            if (cx_.kind() == Kind::C) {
                source = omega_c_->embed(n_, x);
            } else {
                const auto& calc = cx_.kind() == Kind::A ? omega_a_->calculus() : omega_b_->calculus();
                source = calc.index(multi_index(x, power_dims(calc.base_dim(), n_ + 1)));
            }
            out[m * per + x] = trace[m * tdim + source];
        }
    return out;
}

Subspace TraceCorrespondence::theta_relations(std::size_t deg) const {
    const SymmetryBundle& b = cx_.bundle();
    const Hopf& h = *b.hopf;
    const std::size_t dm = b.coeffs.dim(), dt = omega_c_->dim(deg);
    std::vector<Vec> cols;
    for (std::size_t hb = 0; hb < h.dim(); ++hb) {
        Matrix sm = b.coeffs.action.op(cx_.twisted(hb));
        Matrix g = kron(sm, Matrix::identity(dt)) - kron(Matrix::identity(dm), omega_c_->action(hb, deg));
        for (std::size_t c = 0; c < g.cols(); ++c) cols.push_back(g.col(c));
    }
    return Subspace::span(cols, dm * dt);
}

Subspace TraceCorrespondence::theta_pair_relations(std::size_t i, std::size_t j) const {
    // Relations in M ⊗ Θ_i ⊗ Θ_j for the diagonal action.
    const SymmetryBundle& b = cx_.bundle();
    const Hopf& h = *b.hopf;
    const std::size_t dm = b.coeffs.dim(), di = omega_c_->dim(i), dj = omega_c_->dim(j);
    std::vector<Vec> cols;
    for (std::size_t hb = 0; hb < h.dim(); ++hb) {
        Matrix diag(di * dj, di * dj);
        for (const auto& t : iterated_coproduct_terms(h.coalgebra, hb, 1))
            diag = diag + t.coeff * kron(omega_c_->action(t.digits[0], i), omega_c_->action(t.digits[1], j));
        Matrix sm = b.coeffs.action.op(cx_.twisted(hb));
        Matrix g = kron(sm, Matrix::identity(di * dj)) - kron(Matrix::identity(dm), diag);
        for (std::size_t c = 0; c < g.cols(); ++c) cols.push_back(g.col(c));
    }
    return Subspace::span(cols, dm * di * dj);
}

std::vector<std::pair<std::string, Matrix>> TraceCorrespondence::constraints() const {
    const SymmetryBundle& b = cx_.bundle();
    const Hopf& h = *b.hopf;
    const SAYD& M = b.coeffs;
    const std::size_t dm = M.dim();
    const std::size_t T = trace_ambient_dim();
    std::vector<std::pair<std::string, Matrix>> out;

    // Degree 0: the adjoined unit carries no cochain data, so its value is fixed to 0.
    if (n_ == 0) {
        const std::size_t per = T / dm;
        Matrix p(T, T);
        for (std::size_t m = 0; m < dm; ++m) p(m * per + per - 1, m * per + per - 1) = 1;
        if (cx_.kind() == Kind::C) p = theta_relations(0).annihilator() * p;
        out.emplace_back("normalization", p);
    }

    if (cx_.kind() == Kind::A) {
        const OmegaA& om = *omega_a_;
        const auto& calc = om.calculus();
        const std::size_t dw = calc.dim(n_);
        Matrix inv(0, T);
        for (std::size_t hb = 0; hb < h.dim(); ++hb) {
            Matrix dh(T, T);
            for (const auto& t : iterated_coproduct_terms(h.coalgebra, hb, 1))
                dh = dh + t.coeff * kron(M.action.op(t.digits[0]), om.action(t.digits[1], n_));
            inv = Matrix::vstack(inv, dh.transpose() - h.coalgebra.counit[hb] * Matrix::identity(T));
        }
        out.emplace_back("H-invariance", inv);
        if (n_ >= 1) out.emplace_back("closedness", kron(Matrix::identity(dm), calc.d(n_ - 1)).transpose());
        std::vector<Vec> rows;
        for (std::size_t i = 0; i <= n_; ++i) {
            const std::size_t j = n_ - i;
            const Rational sgn(parity_sign(i * j));
            std::vector<Matrix> acts;
            for (std::size_t hb = 0; hb < h.dim(); ++hb) acts.push_back(om.action(cx_.twisted(hb), j));
            for (std::size_t m = 0; m < dm; ++m)
                for (std::size_t w1 = 0; w1 < calc.dim(i); ++w1)
                    for (std::size_t w2 = 0; w2 < calc.dim(j); ++w2) {
                        Vec row(T);
                        for (const auto& [k, c] : calc.mul_basis(i, w1, j, w2)) row[m * dw + k] += c;
                        for (const auto& mt : M.coaction.terms(m)) {
                            const Matrix& a = acts[mt.h];
                            for (std::size_t w2p = 0; w2p < calc.dim(j); ++w2p) {
                                if (a(w2p, w2) == 0) continue;
                                for (const auto& [k, c] : calc.mul_basis(j, w2p, i, w1))
                                    row[mt.v * dw + k] -= sgn * mt.coeff * a(w2p, w2) * c;
                            }
                        }
                        rows.push_back(std::move(row));
                    }
        }
        out.emplace_back("graded trace property", rows_to_matrix(rows, T));
        return out;
    }

    if (cx_.kind() == Kind::B) {
        const OmegaB& om = *omega_b_;
        const auto& calc = om.calculus();
        const std::size_t dg = calc.dim(n_);
        const Matrix& R = om.coaction(n_);
        const Matrix& cm = M.coaction.coact;
        Matrix col(h.dim() * dm * dg, T);
        for (std::size_t hb = 0; hb < h.dim(); ++hb)
            for (std::size_t m = 0; m < dm; ++m)
                for (std::size_t g = 0; g < dg; ++g) {
                    const std::size_t row = (hb * dm + m) * dg + g;
                    for (std::size_t mp = 0; mp < dm; ++mp)
                        if (cm(hb * dm + m, mp) != 0) col(row, mp * dg + g) += cm(hb * dm + m, mp);
                    for (std::size_t gp = 0; gp < dg; ++gp)
                        if (R(hb * dg + gp, g) != 0) col(row, m * dg + gp) -= R(hb * dg + gp, g);
                }
        out.emplace_back("H-colinearity", col);
        if (n_ >= 1) out.emplace_back("closedness", kron(Matrix::identity(dm), calc.d(n_ - 1).transpose()));
        std::vector<Vec> rows;
        for (std::size_t i = 0; i <= n_; ++i) {
            const std::size_t j = n_ - i;
            const Rational sgn(parity_sign(i * j));
            const Matrix& Rj = om.coaction(j);
            const std::size_t dj = calc.dim(j);
            for (std::size_t g1 = 0; g1 < calc.dim(i); ++g1)
                for (std::size_t g2 = 0; g2 < dj; ++g2)
                    for (std::size_t m = 0; m < dm; ++m) {
                        Vec row(T);
                        for (const auto& [k, c] : calc.mul_basis(i, g1, j, g2)) row[m * dg + k] += c;
                        for (std::size_t r = 0; r < Rj.rows(); ++r) {
                            const Rational& cr = Rj(r, g2);
                            if (cr == 0) continue;
                            const std::size_t hb = r / dj, g2p = r % dj;
                            const Matrix op = M.action.op(cx_.twisted(hb));
                            for (const auto& [k, c] : calc.mul_basis(j, g2p, i, g1))
                                for (std::size_t mp = 0; mp < dm; ++mp)
                                    if (op(m, mp) != 0) row[mp * dg + k] -= sgn * cr * c * op(m, mp);
                        }
                        rows.push_back(std::move(row));
                    }
        }
        out.emplace_back("graded trace property", rows_to_matrix(rows, T));
        return out;
    }

    // Kind C.
    const OmegaCC& th = *omega_c_;
    const std::size_t dt = th.dim(n_);
    if (n_ >= 1) {
        Subspace rel = theta_relations(n_ - 1);
        out.emplace_back("closedness", rel.annihilator() * kron(Matrix::identity(dm), th.d(n_)));
    }
    Matrix sym(0, T);
    for (std::size_t i = 0; i <= n_; ++i) {
        const std::size_t j = n_ - i;
        const std::size_t di = th.dim(i), dj = th.dim(j);
        // L(m ⊗ θ) = m^(0) ⊗ θ^(2) ⊗ m^(-1)θ^(1)  for the (i, j) splitting, in M ⊗ Θ_j ⊗ Θ_i;
        // R(m ⊗ θ) = m ⊗ θ^(1) ⊗ θ^(2)            for the (j, i) splitting.
        Matrix L(dm * dj * di, T), Rm(dm * dj * di, T);
        const Matrix& cij = th.comult(i, j);
        const Matrix& cji = th.comult(j, i);
        for (std::size_t m = 0; m < dm; ++m)
            for (std::size_t t = 0; t < dt; ++t) {
                const std::size_t col = m * dt + t;
                for (std::size_t r = 0; r < cij.rows(); ++r) {
                    const Rational& c = cij(r, t);
                    if (c == 0) continue;
                    const std::size_t p = r / dj, q = r % dj;
                    for (const auto& mt : M.coaction.terms(m)) {
                        const Matrix& a = th.action(mt.h, i);
                        for (std::size_t k = 0; k < di; ++k)
                            if (a(k, p) != 0) L((mt.v * dj + q) * di + k, col) += mt.coeff * c * a(k, p);
                    }
                }
                for (std::size_t r = 0; r < cji.rows(); ++r)
                    if (cji(r, t) != 0) Rm(m * dj * di + r, col) += cji(r, t);
            }
        Subspace rel = theta_pair_relations(j, i);
        sym = Matrix::vstack(sym, rel.annihilator() * (L - Rational(parity_sign(i * j)) * Rm));
    }
    out.emplace_back("cotrace symmetry", sym);
    return out;
}

ValidationReport TraceCorrespondence::check_trace(const Vec& trace) const {
    ValidationReport rep{std::string(cx_.kind() == Kind::C ? "cotrace" : "trace") + " of degree " + std::to_string(n_), {}};
    for (const auto& [name, m] : constraints()) rep.checks.push_back(check_in(name, is_zero(m * trace), "degree " + std::to_string(n_)));
    return rep;
}

Subspace TraceCorrespondence::trace_space() const {
    Matrix all(0, trace_ambient_dim());
    for (const auto& [name, m] : constraints()) all = Matrix::vstack(all, m);
    return kernel_basis(all);
}

Subspace TraceCorrespondence::trace_null() const {
    if (cx_.kind() != Kind::C) return Subspace::zero(trace_ambient_dim());
    return theta_relations(n_);
}

}  // namespace hcc
