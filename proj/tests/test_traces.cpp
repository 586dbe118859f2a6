#include "hcc/cyclic.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hcc;
using hcc::test::bundle;

TEST_CASE("traces and cocycles correspond on every HC representative, degrees <= 2") {
    for (const std::string name : {"A=k", "signA", "signA-Msigma", "B=H-kZ2", "B=H-kZ2-Msigma", "B=M2", "C=H-kZ2",
                                   "C=H-kZ2-Msigma", "C=H-kZ3"}) {
        INFO(name);
        CyclicComplex cx(bundle(name), 2);
        const auto hc = compute_cohomology(cx, 2);
        for (std::size_t n = 0; n <= 2; ++n) {
            INFO("degree " << n);
            TraceCorrespondence tc(cx, n);
            const Subspace traces = tc.trace_space();
            const Subspace tnull = tc.trace_null();
            CHECK(traces.contains(tnull));
            for (const Vec& rep : hc[n].representatives) {
                const Vec t = tc.to_trace(rep);
                const ValidationReport r = tc.check_trace(t);
                for (const auto& c : r.checks) {
                    INFO(c.axiom << " " << c.witness);
                    CHECK(c.pass);
                }
                CHECK(traces.contains(t));
                CHECK(cx.equivalent(n, tc.to_cocycle(t), rep));
                // Other direction, modulo the relations on the trace side.
                CHECK(tnull.contains(sub(tc.to_trace(tc.to_cocycle(t)), t)));
            }
            // Every closed trace gives a cyclic cocycle, and the two spaces match in size.
            for (const Vec& t : traces.basis_vectors()) CHECK(cx.is_cyclic_cocycle(n, tc.to_cocycle(t)));
            CHECK(traces.dim() - tnull.dim() == cx.cocycles(n).dim() - cx.space(n).null.dim());
        }
    }
}

TEST_CASE("degree-0 trace of signA vanishes on the adjoined unit") {
    CyclicComplex cx(bundle("signA"), 1);
    TraceCorrespondence tc(cx, 0);
    // Ω^0 = A ⊕ k·1̃ with basis (1, x, 1̃); the trace of τ = (1, 0) is (1, 0, 0).
    CHECK(tc.to_trace(Vec{1, 0}) == Vec{1, 0, 0});
    CHECK(tc.to_cocycle(Vec{1, 0, 0}) == Vec{1, 0});
}

TEST_CASE("a non-closed functional fails the trace checks") {
    CyclicComplex cx(bundle("signA"), 1);
    TraceCorrespondence tc(cx, 1);
    Vec t(tc.trace_ambient_dim());
    t[0] = 1;  // the functional 1 d1 ↦ 1 alone is not closed under d
    CHECK_FALSE(tc.check_trace(t).ok());
}
