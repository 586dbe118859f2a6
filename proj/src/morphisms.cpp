#include "hcc/morphisms.hpp"

#include <functional>

namespace hcc {

namespace {

using SlotVisitor = std::function<void(const std::vector<std::size_t>&, const Rational&)>;

// Visits every term of the tensor product of the given sparse slot vectors.
void expand(const std::vector<Sparse>& slots, const SlotVisitor& visit) {
    std::vector<std::size_t> digits(slots.size());
    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t k, const Rational& c) {
        if (k == slots.size()) {
            visit(digits, c);
            return;
        }
        for (const auto& [i, v] : slots[k]) {
            digits[k] = i;
            rec(k + 1, c * v);
        }
    };
    rec(0, Rational(1));
}

int parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

Rational dot(const Vec& a, const Vec& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Sparse single(std::size_t i) { return Sparse{{i, Rational(1)}}; }

std::vector<std::size_t> with_m(std::size_t m, const std::vector<std::size_t>& xs) {
    std::vector<std::size_t> out{m};
    out.insert(out.end(), xs.begin(), xs.end());
    return out;
}

void require_kind(const CyclicComplex& cx, Kind k, const char* what) {
    if (cx.kind() != k)
        throw PreconditionError(std::string(what) + " needs a kind-" + kind_name(k) + " complex, got kind " +
                                kind_name(cx.kind()));
}

// I_M ⊗ P^{⊗(n+1)} on ambient coordinates laid out as (m, x_0..x_n).
Matrix slotwise(const CochainSpace& s, const Matrix& p) {
    const std::size_t V = s.ambient_dim();
    const std::size_t d = p.rows();
    std::vector<Sparse> cols(d);
    for (std::size_t c = 0; c < d; ++c) cols[c] = sparse(p.col(c));
    Matrix out(V, V);
    for (std::size_t col = 0; col < V; ++col) {
        auto t = multi_index(col, s.dims);
        std::vector<Sparse> slots;
        for (std::size_t k = 1; k < t.size(); ++k) slots.push_back(cols[t[k]]);
        expand(slots, [&](const std::vector<std::size_t>& xs, const Rational& c) {
            out(flat_index(with_m(t[0], xs), s.dims), col) += c;
        });
    }
    return out;
}

}  // namespace

Subspace coinvariants(const SymmetryBundle& b) {
    if (b.kind != Kind::B || !b.coaction) throw PreconditionError("coinvariants need a kind-B bundle");
    const Hopf& h = *b.hopf;
    const std::size_t d = b.carrier_dim();
    Matrix one_tensor(h.dim() * d, d);
    for (std::size_t x = 0; x < d; ++x)
        for (auto [hk, c] : sparse(h.algebra.unit)) one_tensor(hk * d + x, x) = c;
    return kernel_basis(b.coaction->coact - one_tensor);
}

CoinvariantUnit coinvariant_unit(const SymmetryBundle& b, const Vec& u) {
    if (b.kind != Kind::B || !b.algebra) throw PreconditionError("coinvariant unit needs a kind-B bundle");
    const Algebra& a = *b.algebra;
    if (u.size() != a.dim()) throw PreconditionError("coinvariant unit: element has wrong length");
    if (!coinvariants(b).contains(u)) throw PreconditionError("coinvariant unit: ρ(u) ≠ 1 ⊗ u");
    Matrix left(a.dim(), a.dim());
    for (std::size_t x = 0; x < a.dim(); ++x) left.set_col(x, a.mul(u, a.basis(x)));
    auto inv = solve_linear(left, a.unit);
    if (!inv || a.mul(*inv, u) != a.unit) throw PreconditionError("coinvariant unit: u is not invertible");
    return CoinvariantUnit{u, *inv};
}

Matrix conjugation_matrix(const Algebra& a, const CoinvariantUnit& u) {
    Matrix out(a.dim(), a.dim());
    for (std::size_t x = 0; x < a.dim(); ++x) out.set_col(x, a.mul(a.mul(u.u, a.basis(x)), u.u_inv));
    return out;
}

Matrix ad_u_pullback(const CyclicComplex& cx, const CoinvariantUnit& u, std::size_t n) {
    require_kind(cx, Kind::B, "Ad_u pullback");
    return slotwise(cx.space(n), conjugation_matrix(*cx.bundle().algebra, u)).transpose();
}

Matrix kappa(const CyclicComplex& cx, const CoinvariantUnit& u, std::size_t n, int sign) {
    require_kind(cx, Kind::B, "κ");
    if (n == 0) throw PreconditionError("κ is defined on degrees n >= 1");
    const Algebra& a = *cx.bundle().algebra;
    const CochainSpace& src = cx.space(n);
    const CochainSpace& dst = cx.space(n - 1);
    const Matrix conj = conjugation_matrix(a, u);
    const Sparse su = sparse(u.u);
    Matrix K(dst.ambient_dim(), src.ambient_dim());
    for (std::size_t row = 0; row < dst.ambient_dim(); ++row) {
        auto t = multi_index(row, dst.dims);  // (m, b_0 .. b_{n-1})
        const Sparse first = sparse(a.mul(a.basis(t[1]), u.u_inv));
        for (std::size_t i = 0; i + 1 <= n; ++i) {
            std::vector<Sparse> slots{first};
            for (std::size_t j = 1; j <= i; ++j) slots.push_back(sparse(conj.col(t[j + 1])));
            slots.push_back(su);
            for (std::size_t j = i + 1; j < n; ++j) slots.push_back(single(t[j + 1]));
            const Rational s(sign * parity_sign(i));
            expand(slots, [&](const std::vector<std::size_t>& xs, const Rational& c) {
                K(row, flat_index(with_m(t[0], xs), src.dims)) += s * c;
            });
        }
    }
    return K;
}

HomotopyReport check_homotopy(const CyclicComplex& cx, const CoinvariantUnit& u, std::size_t n_max) {
    auto holds = [&](int sign) {
        for (std::size_t n = 0; n <= n_max; ++n) {
            const CochainSpace& s = cx.space(n);
            Matrix lhs = kappa(cx, u, n + 1, sign) * cx.b(n);
            if (n >= 1) lhs = lhs + cx.b(n - 1) * kappa(cx, u, n, sign);
            Matrix rhs = ad_u_pullback(cx, u, n) - Matrix::identity(s.ambient_dim());
            if (!((lhs - rhs) * s.equivariant.basis().transpose()).is_zero()) return false;
        }
        return true;
    };
    HomotopyReport r;
    r.literal_holds = holds(1);
    r.negated_holds = holds(-1);
    if (r.negated_holds) {
        r.sign = -1;
        r.reading = "κ = -Σ_{i=0}^{n-1} (-1)^i f(b_0u^-1, ub_1u^-1, .., ub_iu^-1, u, b_{i+1}, .., b_{n-1})";
    } else if (r.literal_holds) {
        r.sign = 1;
        r.reading = "κ = Σ_{i=0}^{n-1} (-1)^i f(b_0u^-1, ub_1u^-1, .., ub_iu^-1, u, b_{i+1}, .., b_{n-1})";
    } else {
        r.reading = "no reading of κ satisfies bκ + κb = Ad_u^* - id";
    }
    return r;
}

ConvolutionUnit convolution_unit(const SymmetryBundle& c, const Vec& chi) {
    if (c.kind != Kind::C || !c.coalgebra || !c.action) throw PreconditionError("convolution unit needs a kind-C bundle");
    const Coalgebra& C = *c.coalgebra;
    const Hopf& h = *c.hopf;
    if (chi.size() != C.dim()) throw PreconditionError("convolution unit: functional has wrong length");
    for (std::size_t hb = 0; hb < h.dim(); ++hb) {
        const Matrix& op = c.action->op(hb);
        for (std::size_t x = 0; x < C.dim(); ++x)
            if (dot(chi, op.col(x)) != h.coalgebra.counit[hb] * chi[x])
                throw PreconditionError("convolution unit: χ is not H-linear at (" + h.space().basis_labels[hb] + ", " +
                                        C.space.basis_labels[x] + ")");
    }
    Vec inv;
    try {
        inv = convolution_inverse(C, chi);
    } catch (const std::exception&) {
        throw PreconditionError("convolution unit: χ is not convolution invertible");
    }
    return ConvolutionUnit{chi, inv};
}

Matrix coinner_matrix(const Coalgebra& c, const ConvolutionUnit& chi) {
    Matrix out(c.dim(), c.dim());
    for (std::size_t x = 0; x < c.dim(); ++x)
        for (const auto& t : iterated_coproduct_terms(c, x, 2)) {
            const Rational w = t.coeff * chi.chi[t.digits[0]] * chi.chi_inv[t.digits[2]];
            if (w != 0) out(t.digits[1], x) += w;
        }
    return out;
}

Matrix ad_chi_pullback(const CyclicComplex& cx, const ConvolutionUnit& chi, std::size_t n) {
    require_kind(cx, Kind::C, "Ad_χ pullback");
    return slotwise(cx.space(n), coinner_matrix(*cx.bundle().coalgebra, chi));
}

MatrixMaps::MatrixMaps(const SymmetryBundle& b, std::size_t k) : base_(b), matrix_(matrix_bundle(b, k)), k_(k) {
    if (k == 0) throw PreconditionError("matrix size must be at least 1");
}

Matrix MatrixMaps::i_star(std::size_t n) const {
    const std::size_t dm = base_.coeffs.dim(), db = base_.carrier_dim(), dk = matrix_.carrier_dim();
    const auto bd = power_dims(db, n + 1), kd = power_dims(dk, n + 1);
    const std::size_t nb = product(bd), nk = product(kd);
    Matrix out(dm * nb, dm * nk);
    // b ⊗ E11 has index b in the matrix carrier.
    for (std::size_t m = 0; m < dm; ++m)
        for (std::size_t x = 0; x < nb; ++x) out(m * nb + x, m * nk + flat_index(multi_index(x, bd), kd)) = 1;
    return out;
}

Matrix MatrixMaps::trace_map(std::size_t n) const {
    const std::size_t dm = base_.coeffs.dim(), db = base_.carrier_dim(), dk = matrix_.carrier_dim();
    const auto bd = power_dims(db, n + 1), kd = power_dims(dk, n + 1);
    const std::size_t nb = product(bd), nk = product(kd);
    Matrix out(dm * nk, dm * nb);
    for (std::size_t y = 0; y < nk; ++y) {
        auto t = multi_index(y, kd);
        std::vector<std::size_t> xs(n + 1);
        bool nonzero = true;
        for (std::size_t s = 0; s <= n && nonzero; ++s) {
            const std::size_t ij = t[s] / db, j = ij % k_;
            const std::size_t next_i = (t[(s + 1) % (n + 1)] / db) / k_;
            xs[s] = t[s] % db;
            nonzero = j == next_i;  // tr(E_{i0 j0} ⋯ E_{in jn}) = Π [j_s = i_{s+1}], cyclically
        }
        if (!nonzero) continue;
        const std::size_t x = flat_index(xs, bd);
        for (std::size_t m = 0; m < dm; ++m) out(m * nk + y, m * nb + x) = 1;
    }
    return out;
}

}  // namespace hcc
