#include "hcc/calculi.hpp"

#include <functional>

namespace hcc {

namespace {

int parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

// Action of h on Ã (or C̃): the carrier action plus ε(h) on the adjoined unit.
Matrix extended_op(const Action& act, std::size_t h) {
    const std::size_t d = act.dim();
    Matrix m(d + 1, d + 1);
    const Matrix& op = act.op(h);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = op(i, j);
    m(d, d) = act.hopf->coalgebra.counit[h];
    return m;
}

// Diagonal action of basis h on Ω^n = Ã ⊗ A^{⊗n}.
std::vector<std::vector<Matrix>> diagonal_actions(const Action& act, std::size_t max_degree) {
    const Hopf& h = *act.hopf;
    std::vector<std::vector<Matrix>> out(max_degree + 1);
    for (std::size_t n = 0; n <= max_degree; ++n) {
        for (std::size_t hi = 0; hi < h.dim(); ++hi) {
            Matrix total;
            for (const auto& t : iterated_coproduct_terms(h.coalgebra, hi, n)) {
                Matrix m = extended_op(act, t.digits[0]);
                for (std::size_t k = 1; k <= n; ++k) m = kron(m, act.op(t.digits[k]));
                m = t.coeff * m;
                total = total.rows() == 0 ? m : total + m;
            }
            if (total.rows() == 0) {
                const std::size_t d = act.dim();
                std::size_t dim = d + 1;
                for (std::size_t k = 0; k < n; ++k) dim *= d;
                total = Matrix(dim, dim);
            }
            out[n].push_back(std::move(total));
        }
    }
    return out;
}

std::string basis_witness(const char* what, std::size_t deg, std::size_t idx) {
    return std::string(what) + "^" + std::to_string(deg) + "[" + std::to_string(idx) + "]";
}

}  // namespace

// ---------------------------------------------------------------- UniversalCalculus

UniversalCalculus::UniversalCalculus(Algebra algebra, std::size_t max_degree)
    : algebra_(std::move(algebra)), max_degree_(max_degree) {
    // Budget: the largest component must be representable as a dense matrix.
    (void)Matrix(1, dim(max_degree_));
    const std::size_t a = base_dim();
    for (std::size_t n = 0; n < max_degree_; ++n) {
        Matrix d(dim(n + 1), dim(n));
        for (std::size_t flat = 0; flat < dim(n); ++flat) {
            auto t = tuple(n, flat);
            if (t[0] == a) continue;
            std::vector<std::size_t> nt{a};
            nt.insert(nt.end(), t.begin(), t.end());
            d(index(nt), flat) = 1;
        }
        d_.push_back(std::move(d));
    }
}

std::size_t UniversalCalculus::dim(std::size_t n) const { return product(dims(n)); }

std::vector<std::size_t> UniversalCalculus::dims(std::size_t n) const {
    std::vector<std::size_t> d(n + 1, base_dim());
    d[0] = base_dim() + 1;
    return d;
}

std::size_t UniversalCalculus::index(const std::vector<std::size_t>& t) const { return flat_index(t, dims(t.size() - 1)); }

std::vector<std::size_t> UniversalCalculus::tuple(std::size_t n, std::size_t flat) const { return multi_index(flat, dims(n)); }

Vec UniversalCalculus::from_algebra(const Vec& a) const {
    Vec w(dim(0));
    for (std::size_t i = 0; i < a.size(); ++i) w[i] = a[i];
    return w;
}

const Sparse& UniversalCalculus::right_mul(std::size_t n, std::size_t basis, std::size_t b) const {
    const std::size_t a = base_dim();
    const std::size_t key = (n << 56) | (basis << 24) | b;
    if (auto it = right_cache_.find(key); it != right_cache_.end()) return it->second;
    auto t = tuple(n, basis);
    std::map<std::size_t, Rational> acc;
    if (n == 0) {
        if (t[0] == a) {
            acc[b] += 1;
        } else {
            for (auto [k, c] : algebra_.mul_basis(t[0], b)) acc[k] += c;
        }
    } else {
        // ω'' da_n · b = ω'' d(a_n b) - (ω'' a_n) db
        std::vector<std::size_t> head(t.begin(), t.end() - 1);
        const std::size_t an = t.back();
        for (auto [k, c] : algebra_.mul_basis(an, b)) {
            auto nt = head;
            nt.push_back(k);
            acc[index(nt)] += c;
        }
        const Sparse& r = right_mul(n - 1, index(head), an);
        for (const auto& [idx, c] : r) {
            auto nt = tuple(n - 1, idx);
            nt.push_back(b);
            acc[index(nt)] -= c;
        }
    }
    Sparse out;
    for (auto& [k, c] : acc)
        if (c != 0) out.emplace_back(k, c);
    return right_cache_.emplace(key, std::move(out)).first->second;
}

const Sparse& UniversalCalculus::mul_basis(std::size_t i, std::size_t bx, std::size_t j, std::size_t by) const {
    if (i + j > max_degree_) throw std::out_of_range("product beyond truncation degree");
    const std::size_t key = (i << 56) | (j << 48) | (bx << 24) | by;
    if (auto it = mul_cache_.find(key); it != mul_cache_.end()) return it->second;
    auto ty = tuple(j, by);
    std::vector<std::size_t> tail(ty.begin() + 1, ty.end());
    Sparse out;
    if (ty[0] == tilde_one()) {
        auto tx = tuple(i, bx);
        tx.insert(tx.end(), tail.begin(), tail.end());
        out.emplace_back(index(tx), Rational(1));
    } else {
        for (const auto& [idx, c] : right_mul(i, bx, ty[0])) {
            auto t = tuple(i, idx);
            t.insert(t.end(), tail.begin(), tail.end());
            out.emplace_back(index(t), c);
        }
    }
    return mul_cache_.emplace(key, std::move(out)).first->second;
}

Vec UniversalCalculus::mul(std::size_t i, const Vec& x, std::size_t j, const Vec& y) const {
    Vec out(dim(i + j));
    const Sparse sx = sparse(x), sy = sparse(y);
    for (const auto& [bx, cx] : sx)
        for (const auto& [by, cy] : sy)
            for (const auto& [k, c] : mul_basis(i, bx, j, by)) out[k] += cx * cy * c;
    return out;
}

Matrix UniversalCalculus::mult_matrix(std::size_t i, std::size_t j) const {
    Matrix m(dim(i + j), dim(i) * dim(j));
    for (std::size_t bx = 0; bx < dim(i); ++bx)
        for (std::size_t by = 0; by < dim(j); ++by)
            for (const auto& [k, c] : mul_basis(i, bx, j, by)) m(k, bx * dim(j) + by) += c;
    return m;
}

ValidationReport UniversalCalculus::check_dg() const {
    AxiomCheck dd{"d∘d = 0", true, ""}, leib{"graded Leibniz", true, ""};
    for (std::size_t n = 0; n + 2 <= max_degree_; ++n)
        if (!(d_[n + 1] * d_[n]).is_zero()) {
            dd.pass = false;
            dd.witness = "degree " + std::to_string(n);
            break;
        }
    for (std::size_t i = 0; i < max_degree_ && leib.pass; ++i) {
        for (std::size_t j = 0; i + j + 1 <= max_degree_ && leib.pass; ++j) {
            for (std::size_t bx = 0; bx < dim(i) && leib.pass; ++bx) {
                Vec x = unit_vector(dim(i), bx);
                Vec dx = apply_d(i, x);
                for (std::size_t by = 0; by < dim(j); ++by) {
                    Vec y = unit_vector(dim(j), by);
                    Vec lhs = apply_d(i + j, mul(i, x, j, y));
                    Vec rhs = add(mul(i + 1, dx, j, y), scale(parity_sign(i), mul(i, x, j + 1, apply_d(j, y))));
                    if (lhs != rhs) {
                        leib.pass = false;
                        leib.witness = basis_witness("Ω", i, bx) + "," + basis_witness("Ω", j, by);
                        break;
                    }
                }
            }
        }
    }
    return {"universal calculus of " + algebra_.space.name, {dd, leib}};
}

// ---------------------------------------------------------------- OmegaA

OmegaA::OmegaA(const SymmetryBundle& bundle, std::size_t max_degree)
    : bundle_(bundle), calc_(*bundle.algebra, max_degree) {
    if (bundle.kind != Kind::A) throw ConstructionError("OmegaA requires a kind-A bundle");
    actions_ = diagonal_actions(*bundle.action, max_degree);
}

Matrix OmegaA::action(const Vec& h, std::size_t n) const {
    Matrix m(calc_.dim(n), calc_.dim(n));
    for (auto [i, c] : sparse(h)) m = m + c * actions_[n][i];
    return m;
}

ValidationReport OmegaA::check_equivariance() const {
    const Hopf& h = *bundle_.hopf;
    const std::size_t N = calc_.max_degree();
    AxiomCheck modalg{"Ω action multiplicative", true, ""}, dlin{"d H-linear", true, ""};
    for (std::size_t hi = 0; hi < h.dim(); ++hi) {
        for (std::size_t n = 0; n < N; ++n)
            if (!(calc_.d(n) * actions_[n][hi] == actions_[n + 1][hi] * calc_.d(n))) {
                dlin.pass = false;
                dlin.witness = h.space().basis_labels[hi] + " degree " + std::to_string(n);
            }
        auto d1 = iterated_coproduct_terms(h.coalgebra, hi, 1);
        for (std::size_t i = 0; i <= N && modalg.pass; ++i)
            for (std::size_t j = 0; i + j <= N && modalg.pass; ++j)
                for (std::size_t bx = 0; bx < calc_.dim(i) && modalg.pass; ++bx)
                    for (std::size_t by = 0; by < calc_.dim(j); ++by) {
                        Vec x = unit_vector(calc_.dim(i), bx), y = unit_vector(calc_.dim(j), by);
                        Vec lhs = actions_[i + j][hi] * calc_.mul(i, x, j, y);
                        Vec rhs(calc_.dim(i + j));
                        for (const auto& t : d1)
                            rhs = add(rhs, scale(t.coeff, calc_.mul(i, actions_[i][t.digits[0]] * x, j, actions_[j][t.digits[1]] * y)));
                        if (lhs != rhs) {
                            modalg.pass = false;
                            modalg.witness = h.space().basis_labels[hi] + "," + basis_witness("Ω", i, bx) + "," + basis_witness("Ω", j, by);
                            break;
                        }
                    }
    }
    ValidationReport rep = calc_.check_dg();
    rep.subject = "Ω of bundle " + bundle_.name;
    rep.checks.push_back(modalg);
    rep.checks.push_back(dlin);
    return rep;
}

// ---------------------------------------------------------------- OmegaB

OmegaB::OmegaB(const SymmetryBundle& bundle, std::size_t max_degree)
    : bundle_(bundle), calc_(*bundle.algebra, max_degree) {
    if (bundle.kind != Kind::B) throw ConstructionError("OmegaB requires a kind-B bundle");
    const Hopf& h = *bundle.hopf;
    const Coaction& rho = *bundle.coaction;
    const std::size_t dh = h.dim();
    for (std::size_t n = 0; n <= max_degree; ++n) {
        const std::size_t dn = calc_.dim(n);
        Matrix m(dh * dn, dn);
        for (std::size_t flat = 0; flat < dn; ++flat) {
            auto t = calc_.tuple(n, flat);
            // Expand slot by slot: accumulate (H element, tuple, coefficient).
            std::function<void(std::size_t, Vec, std::vector<std::size_t>, Rational)> rec =
                [&](std::size_t slot, Vec hacc, std::vector<std::size_t> digits, Rational coeff) {
                    if (slot == t.size()) {
                        const std::size_t target = calc_.index(digits);
                        for (auto [hk, ch] : sparse(hacc)) m(hk * dn + target, flat) += coeff * ch;
                        return;
                    }
                    if (slot == 0 && t[0] == calc_.tilde_one()) {
                        digits.push_back(t[0]);
                        rec(slot + 1, hacc, digits, coeff);
                        return;
                    }
                    for (const auto& term : rho.terms(t[slot])) {
                        auto nd = digits;
                        nd.push_back(term.v);
                        rec(slot + 1, h.algebra.mul(hacc, h.algebra.basis(term.h)), nd, coeff * term.coeff);
                    }
                };
            rec(0, h.algebra.unit, {}, Rational(1));
        }
        coactions_.push_back(std::move(m));
    }
}

ValidationReport OmegaB::check_equivariance() const {
    const Hopf& h = *bundle_.hopf;
    const std::size_t dh = h.dim();
    const std::size_t N = calc_.max_degree();
    AxiomCheck dcol{"d H-colinear", true, ""}, mcol{"Γ product H-colinear", true, ""};
    for (std::size_t n = 0; n < N; ++n)
        if (!(coactions_[n + 1] * calc_.d(n) == kron(Matrix::identity(dh), calc_.d(n)) * coactions_[n])) {
            dcol.pass = false;
            dcol.witness = "degree " + std::to_string(n);
        }
    for (std::size_t i = 0; i <= N && mcol.pass; ++i)
        for (std::size_t j = 0; i + j <= N && mcol.pass; ++j)
            for (std::size_t bx = 0; bx < calc_.dim(i) && mcol.pass; ++bx)
                for (std::size_t by = 0; by < calc_.dim(j); ++by) {
                    const std::size_t di = calc_.dim(i), dj = calc_.dim(j), dn = calc_.dim(i + j);
                    Vec lhs = coactions_[i + j] * calc_.mul(i, unit_vector(di, bx), j, unit_vector(dj, by));
                    Vec rhs(dh * dn);
                    for (auto [rx, cx] : sparse(coactions_[i].col(bx)))
                        for (auto [ry, cy] : sparse(coactions_[j].col(by))) {
                            Vec hh = h.algebra.mul(h.algebra.basis(rx / di), h.algebra.basis(ry / dj));
                            for (const auto& [k, ck] : calc_.mul_basis(i, rx % di, j, ry % dj))
                                for (auto [hk, ch] : sparse(hh)) rhs[hk * dn + k] += cx * cy * ck * ch;
                        }
                    if (lhs != rhs) {
                        mcol.pass = false;
                        mcol.witness = basis_witness("Γ", i, bx) + "," + basis_witness("Γ", j, by);
                        break;
                    }
                }
    ValidationReport rep = calc_.check_dg();
    rep.subject = "Γ of bundle " + bundle_.name;
    rep.checks.push_back(dcol);
    rep.checks.push_back(mcol);
    return rep;
}

// ---------------------------------------------------------------- OmegaCC

Algebra dual_algebra(const Coalgebra& c) {
    std::vector<std::string> labels;
    for (const auto& l : c.space.basis_labels) labels.push_back(l + "*");
    return Algebra(Space(c.space.name + "*", labels), c.comult.transpose(), c.counit);
}

OmegaCC::OmegaCC(const SymmetryBundle& bundle, std::size_t max_degree)
    : bundle_(bundle), dual_(dual_algebra(*bundle.coalgebra), max_degree) {
    if (bundle.kind != Kind::C) throw ConstructionError("OmegaCC requires a kind-C bundle");
    // Graded dual with Koszul signs: d on Θ_n is (-1)^n d^T, and the
    // (i, j) component of Δ is (-1)^{ij} times the transposed product.
    d_.emplace_back();
    for (std::size_t n = 1; n <= max_degree; ++n) d_.push_back(Rational(parity_sign(n)) * dual_.d(n - 1).transpose());
    for (std::size_t i = 0; i <= max_degree; ++i)
        for (std::size_t j = 0; i + j <= max_degree; ++j)
            comult_.emplace(std::make_pair(i, j), Rational(parity_sign(i * j)) * dual_.mult_matrix(i, j).transpose());
    actions_ = diagonal_actions(*bundle.action, max_degree);
    counit_ = unit_vector(dual_.dim(0), dual_.tilde_one());
}

std::size_t OmegaCC::embed(std::size_t n, std::size_t flat_c_tuple) const {
    return dual_.index(multi_index(flat_c_tuple, power_dims(base_dim(), n + 1)));
}

ValidationReport OmegaCC::check_dg() const {
    const std::size_t N = max_degree();
    const Hopf& h = *bundle_.hopf;
    AxiomCheck dd{"d∘d = 0", true, ""}, coassoc{"Θ coassociativity", true, ""}, counit{"Θ counit", true, ""},
        coder{"graded coderivation", true, ""}, hlin{"Θ H-linear", true, ""};
    for (std::size_t n = 2; n <= N; ++n)
        if (!(d_[n - 1] * d_[n]).is_zero()) {
            dd.pass = false;
            dd.witness = "degree " + std::to_string(n);
        }
    for (std::size_t i = 0; i <= N; ++i)
        for (std::size_t j = 0; i + j <= N; ++j)
            for (std::size_t k = 0; i + j + k <= N; ++k) {
                Matrix l = kron(comult(i, j), Matrix::identity(dim(k))) * comult(i + j, k);
                Matrix r = kron(Matrix::identity(dim(i)), comult(j, k)) * comult(i, j + k);
                if (!(l == r)) {
                    coassoc.pass = false;
                    coassoc.witness = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
                }
            }
    for (std::size_t n = 0; n <= N; ++n) {
        Matrix e = Matrix::from_rows({counit_}, dim(0));
        if (!(kron(e, Matrix::identity(dim(n))) * comult(0, n) == Matrix::identity(dim(n))) ||
            !(kron(Matrix::identity(dim(n)), e) * comult(n, 0) == Matrix::identity(dim(n)))) {
            counit.pass = false;
            counit.witness = "degree " + std::to_string(n);
        }
    }
    // Δ d = (d ⊗ 1 + (-1)^i 1 ⊗ d) Δ on the (i, j) component, i + j = n - 1.
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t i = 0; i + 1 <= n; ++i) {
            const std::size_t j = n - 1 - i;
            Matrix lhs = comult(i, j) * d_[n];
            Matrix rhs = kron(d_[i + 1], Matrix::identity(dim(j))) * comult(i + 1, j) +
                         Rational(parity_sign(i)) * (kron(Matrix::identity(dim(i)), d_[j + 1]) * comult(i, j + 1));
            if (!(lhs == rhs)) {
                coder.pass = false;
                coder.witness = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        }
    for (std::size_t hi = 0; hi < h.dim(); ++hi) {
        for (std::size_t n = 1; n <= N; ++n)
            if (!(d_[n] * actions_[n][hi] == actions_[n - 1][hi] * d_[n])) {
                hlin.pass = false;
                hlin.witness = h.space().basis_labels[hi] + " d degree " + std::to_string(n);
            }
        auto d1 = iterated_coproduct_terms(h.coalgebra, hi, 1);
        for (std::size_t i = 0; i <= N; ++i)
            for (std::size_t j = 0; i + j <= N; ++j) {
                Matrix hh(dim(i) * dim(j), dim(i) * dim(j));
                for (const auto& t : d1) hh = hh + t.coeff * kron(actions_[i][t.digits[0]], actions_[j][t.digits[1]]);
                if (!(comult(i, j) * actions_[i + j][hi] == hh * comult(i, j))) {
                    hlin.pass = false;
                    hlin.witness = h.space().basis_labels[hi] + " Δ(" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
    }
    return {"Θ of bundle " + bundle_.name, {dd, coassoc, counit, coder, hlin}};
}

// ---------------------------------------------------------------- bigraded helpers

bool is_zero(const BigradedVec& v) {
    for (const auto& [k, x] : v)
        if (!is_zero(x)) return false;
    return true;
}

BigradedVec add(const BigradedVec& a, const BigradedVec& b) {
    BigradedVec out = a;
    for (const auto& [k, x] : b) {
        auto it = out.find(k);
        if (it == out.end()) out.emplace(k, x); else it->second = add(it->second, x);
    }
    return out;
}

BigradedVec scale(const Rational& s, const BigradedVec& v) {
    BigradedVec out;
    for (const auto& [k, x] : v) out.emplace(k, scale(s, x));
    return out;
}

bool is_zero(const BigradedMap& f) {
    for (const auto& [k, m] : f)
        if (!m.is_zero()) return false;
    return true;
}

BigradedMap add(const BigradedMap& a, const BigradedMap& b) {
    BigradedMap out = a;
    for (const auto& [k, m] : b) {
        auto it = out.find(k);
        if (it == out.end()) out.emplace(k, m); else it->second = it->second + m;
    }
    return out;
}

BigradedMap scale(const Rational& s, const BigradedMap& f) {
    BigradedMap out;
    for (const auto& [k, m] : f) out.emplace(k, s * m);
    return out;
}

std::optional<std::size_t> homogeneous_degree(const BigradedMap& f) {
    std::optional<std::size_t> deg;
    for (const auto& [k, m] : f) {
        if (m.is_zero()) continue;
        const std::size_t d = k.first + k.second;
        if (deg && *deg != d) throw std::invalid_argument("inhomogeneous convolution element");
        deg = d;
    }
    return deg;
}

// ---------------------------------------------------------------- SmashDG

SmashDG::SmashDG(const OmegaA& omega, const OmegaB& gamma, std::size_t max_degree)
    : omega_(omega), gamma_(gamma), max_degree_(max_degree) {
    if (omega.bundle().hopf->dim() != gamma.bundle().hopf->dim())
        throw ConstructionError("smash product: bundles use different Hopf algebras");
    if (omega.calculus().max_degree() < max_degree || gamma.calculus().max_degree() < max_degree)
        throw ConstructionError("smash product: calculi truncated below requested degree");
}

std::size_t SmashDG::dim(std::size_t i, std::size_t j) const {
    return omega_.calculus().dim(i) * gamma_.calculus().dim(j);
}

Vec SmashDG::mul_component(std::size_t i1, std::size_t j1, const Vec& x, std::size_t i2, std::size_t j2, const Vec& y) const {
    const auto& om = omega_.calculus();
    const auto& ga = gamma_.calculus();
    const std::size_t gj1 = ga.dim(j1), gj2 = ga.dim(j2), gj = ga.dim(j1 + j2);
    const std::size_t oi2 = om.dim(i2);
    Vec out(om.dim(i1 + i2) * gj);
    const int sign = parity_sign(i2 * j1);
    const Matrix& rho = gamma_.coaction(j1);
    for (auto [fx, cx] : sparse(x)) {
        const std::size_t w1 = fx / gj1, g1 = fx % gj1;
        for (auto [fy, cy] : sparse(y)) {
            const std::size_t w2 = fy / gj2, g2 = fy % gj2;
            for (std::size_t r = 0; r < rho.rows(); ++r) {
                const Rational& cr = rho(r, g1);
                if (cr == 0) continue;
                const std::size_t hk = r / gj1, g1p = r % gj1;
                const Matrix& act = omega_.action(hk, i2);
                for (std::size_t w2p = 0; w2p < oi2; ++w2p) {
                    const Rational& ca = act(w2p, w2);
                    if (ca == 0) continue;
                    const Rational base = cx * cy * cr * ca * sign;
                    for (const auto& [wk, cw] : om.mul_basis(i1, w1, i2, w2p))
                        for (const auto& [gk, cg] : ga.mul_basis(j1, g1p, j2, g2)) out[wk * gj + gk] += base * cw * cg;
                }
            }
        }
    }
    return out;
}

BigradedVec SmashDG::mul(const BigradedVec& x, const BigradedVec& y) const {
    BigradedVec out;
    for (const auto& [kx, vx] : x)
        for (const auto& [ky, vy] : y) {
            const std::size_t i = kx.first + ky.first, j = kx.second + ky.second;
            if (i + j > max_degree_) continue;
            Vec v = mul_component(kx.first, kx.second, vx, ky.first, ky.second, vy);
            auto it = out.find({i, j});
            if (it == out.end()) out.emplace(std::make_pair(i, j), std::move(v)); else it->second = add(it->second, v);
        }
    return out;
}

BigradedVec SmashDG::d(const BigradedVec& x) const {
    const auto& om = omega_.calculus();
    const auto& ga = gamma_.calculus();
    BigradedVec out;
    for (const auto& [k, v] : x) {
        const auto [i, j] = k;
        if (i + j + 1 > max_degree_) continue;
        Vec a = kron(om.d(i), Matrix::identity(ga.dim(j))) * v;
        Vec b = scale(parity_sign(i), kron(Matrix::identity(om.dim(i)), ga.d(j)) * v);
        out = add(out, BigradedVec{{{i + 1, j}, a}});
        out = add(out, BigradedVec{{{i, j + 1}, b}});
    }
    return out;
}

BigradedVec SmashDG::unit() const {
    const auto& om = omega_.calculus();
    const auto& ga = gamma_.calculus();
    Vec u(dim(0, 0));
    u[om.tilde_one() * ga.dim(0) + ga.tilde_one()] = 1;
    return {{{0, 0}, u}};
}

BigradedVec SmashDG::basis(std::size_t i, std::size_t j, std::size_t flat) const {
    return {{{i, j}, unit_vector(dim(i, j), flat)}};
}

ValidationReport SmashDG::check_dg() const {
    AxiomCheck dd{"d∘d = 0", true, ""}, leib{"graded Leibniz", true, ""}, assoc{"associativity", true, ""},
        unit_law{"unit", true, ""};
    const std::size_t N = max_degree_;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> all;
    for (std::size_t i = 0; i <= N; ++i)
        for (std::size_t j = 0; i + j <= N; ++j)
            for (std::size_t f = 0; f < dim(i, j); ++f) all.emplace_back(i, j, f);
    auto deg = [](const auto& t) { return std::get<0>(t) + std::get<1>(t); };
    const BigradedVec one = unit();
    for (const auto& t : all) {
        BigradedVec x = basis(std::get<0>(t), std::get<1>(t), std::get<2>(t));
        if (!is_zero(d(d(x)))) dd.pass = false;
        auto xs = mul(one, x), sx = mul(x, one);
        if (!is_zero(add(xs, scale(-1, x))) || !is_zero(add(sx, scale(-1, x)))) unit_law.pass = false;
    }
    for (const auto& tx : all) {
        BigradedVec x = basis(std::get<0>(tx), std::get<1>(tx), std::get<2>(tx));
        for (const auto& ty : all) {
            if (deg(tx) + deg(ty) > N) continue;
            BigradedVec y = basis(std::get<0>(ty), std::get<1>(ty), std::get<2>(ty));
            BigradedVec xy = mul(x, y);
            if (leib.pass && deg(tx) + deg(ty) + 1 <= N) {
                BigradedVec rhs = add(mul(d(x), y), scale(parity_sign(deg(tx)), mul(x, d(y))));
                if (!is_zero(add(d(xy), scale(-1, rhs)))) {
                    leib.pass = false;
                    leib.witness = std::to_string(std::get<2>(tx)) + "," + std::to_string(std::get<2>(ty));
                }
            }
            for (const auto& tz : all) {
                if (!assoc.pass) break;
                if (deg(tx) + deg(ty) + deg(tz) > N) continue;
                BigradedVec z = basis(std::get<0>(tz), std::get<1>(tz), std::get<2>(tz));
                if (!is_zero(add(mul(xy, z), scale(-1, mul(x, mul(y, z)))))) {
                    assoc.pass = false;
                    assoc.witness = std::to_string(std::get<2>(tx)) + "," + std::to_string(std::get<2>(ty)) + "," +
                                    std::to_string(std::get<2>(tz));
                }
            }
        }
    }
    return {"Ω⋊Γ", {dd, leib, assoc, unit_law}};
}

// ---------------------------------------------------------------- ConvolutionDG

ConvolutionDG::ConvolutionDG(const OmegaCC& theta, const OmegaA& omega, std::size_t max_theta, std::size_t max_omega)
    : theta_(theta), omega_(omega), max_theta_(max_theta), max_omega_(max_omega) {
    if (theta.bundle().hopf->dim() != omega.bundle().hopf->dim())
        throw ConstructionError("convolution algebra: bundles use different Hopf algebras");
    if (theta.max_degree() < max_theta || omega.calculus().max_degree() < max_omega)
        throw ConstructionError("convolution algebra: calculi truncated below requested degree");
}

BigradedMap ConvolutionDG::zero_map(std::size_t i, std::size_t j) const {
    return {{{i, j}, Matrix(omega_.calculus().dim(j), theta_.dim(i))}};
}

BigradedMap ConvolutionDG::unit() const {
    Matrix u(omega_.calculus().dim(0), theta_.dim(0));
    u(omega_.calculus().tilde_one(), theta_.tilde_counit()) = 1;
    return {{{0, 0}, u}};
}

BigradedMap ConvolutionDG::mul(const BigradedMap& f, const BigradedMap& g) const {
    const auto& om = omega_.calculus();
    BigradedMap out;
    for (const auto& [kf, F] : f) {
        for (const auto& [kg, G] : g) {
            const auto [i1, j1] = kf;
            const auto [i2, j2] = kg;
            const std::size_t i = i1 + i2, j = j1 + j2;
            if (i > max_theta_ || j > max_omega_) continue;
            if (F.is_zero() || G.is_zero()) continue;
            const int sign = parity_sign((i2 + j2) * i1);
            Matrix m = om.mult_matrix(j1, j2) * kron(F, G) * theta_.comult(i1, i2);
            if (sign < 0) m = Rational(-1) * m;
            out = add(out, BigradedMap{{{i, j}, m}});
        }
    }
    return out;
}

BigradedMap ConvolutionDG::d(const BigradedMap& f) const {
    const auto& om = omega_.calculus();
    BigradedMap out;
    for (const auto& [k, F] : f) {
        const auto [i, j] = k;
        if (j + 1 <= max_omega_) out = add(out, BigradedMap{{{i, j + 1}, om.d(j) * F}});
        if (i + 1 <= max_theta_) {
            // -(-1)^{deg f} f∘d
            Matrix m = F * theta_.d(i + 1);
            if ((i + j) % 2 == 0) m = Rational(-1) * m;
            out = add(out, BigradedMap{{{i + 1, j}, m}});
        }
    }
    return out;
}

Subspace ConvolutionDG::equivariant_component(std::size_t i, std::size_t j) const {
    const auto& om = omega_.calculus();
    const std::size_t rows = om.dim(j), cols = theta_.dim(i);
    const Hopf& h = *theta_.bundle().hopf;
    Matrix constraints(h.dim() * rows * cols, rows * cols);
    for (std::size_t hi = 0; hi < h.dim(); ++hi) {
        const Matrix& ao = omega_.action(hi, j);
        const Matrix& at = theta_.action(hi, i);
        // (ao F - F at)(r, c) = Σ_k ao(r,k) F(k,c) - Σ_k F(r,k) at(k,c)
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                const std::size_t row = (hi * rows + r) * cols + c;
                for (std::size_t k = 0; k < rows; ++k)
                    if (ao(r, k) != 0) constraints(row, k * cols + c) += ao(r, k);
                for (std::size_t k = 0; k < cols; ++k)
                    if (at(k, c) != 0) constraints(row, r * cols + k) -= at(k, c);
            }
    }
    return kernel_basis(constraints);
}

ValidationReport ConvolutionDG::check_dg(const std::vector<BigradedMap>& samples) const {
    AxiomCheck assoc{"convolution associativity", true, ""}, dd{"d∘d = 0", true, ""}, leib{"graded Leibniz", true, ""},
        unit_law{"convolution unit", true, ""};
    const BigradedMap one = unit();
    for (std::size_t a = 0; a < samples.size(); ++a) {
        const auto& f = samples[a];
        if (!is_zero(d(d(f)))) {
            dd.pass = false;
            dd.witness = "sample " + std::to_string(a);
        }
        if (!is_zero(add(mul(one, f), scale(-1, f))) || !is_zero(add(mul(f, one), scale(-1, f)))) {
            unit_law.pass = false;
            unit_law.witness = "sample " + std::to_string(a);
        }
        const std::size_t df = homogeneous_degree(f).value_or(0);
        for (std::size_t b = 0; b < samples.size(); ++b) {
            const auto& g = samples[b];
            BigradedMap fg = mul(f, g);
            BigradedMap rhs = add(mul(d(f), g), scale(df % 2 == 0 ? 1 : -1, mul(f, d(g))));
            if (!is_zero(add(d(fg), scale(-1, rhs)))) {
                leib.pass = false;
                leib.witness = "samples " + std::to_string(a) + "," + std::to_string(b);
            }
            for (std::size_t c = 0; c < samples.size(); ++c) {
                const auto& k = samples[c];
                if (!is_zero(add(mul(fg, k), scale(-1, mul(f, mul(g, k)))))) {
                    assoc.pass = false;
                    assoc.witness = "samples " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
                }
            }
        }
    }
    return {"Hom(Θ,Ω)", {assoc, dd, leib, unit_law}};
}

}  // namespace hcc
