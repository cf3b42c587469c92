#ifndef VLOGIC_VERIFY_HPP
#define VLOGIC_VERIFY_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "vlogic/basis.hpp"
#include "vlogic/diagnosis.hpp"
#include "vlogic/matfun.hpp"
#include "vlogic/operators.hpp"
#include "vlogic/report.hpp"
#include "vlogic/scalar_logic.hpp"
#include "vlogic/srn.hpp"

// Invariant suites shared by the `verify` command and the test programs.
// Every suite returns named max-norm residuals against a fixed tolerance.

namespace vlogic::suites {

inline constexpr double structural_tol = 1e-10;

/// <y,s> = <z,n> = 1, <y,n> = <z,s> = 0, and [y z]^T [s n] = identity.
inline identity_report basis_duals(const truth_basis& b) {
    identity_report r;
    const double dev = std::max({std::abs(dot(b.y(), b.s()) - 1.0), std::abs(dot(b.z(), b.n()) - 1.0),
                                 std::abs(dot(b.y(), b.n())), std::abs(dot(b.z(), b.s()))});
    r.add("dual_biorthogonality", dev, structural_tol);

    const std::size_t q = b.dim();
    complex_matrix duals(2, q), cols(q, 2);
    for (std::size_t i = 0; i < q; ++i) {
        duals(0, i) = b.y()[i];
        duals(1, i) = b.z()[i];
        cols(i, 0) = b.s()[i];
        cols(i, 1) = b.n()[i];
    }
    r.add("pseudoinverse_consistency", max_abs_diff(duals * cols, complex_matrix::unit(2)),
          structural_tol);
    return r;
}

/**
 * Every monadic and dyadic table, applied to every combination of s and n,
 * against the +1/-1 arithmetic read back through t <-> s, f <-> n.
 */
inline identity_report truth_table_fidelity(const truth_basis& b) {
    auto vec = [&b](scalar_truth v) { return complexify(b.vector_of(v.symbol())); };
    double worst = 0;
    for (int m = 0; m < 4; ++m) {
        const monadic_table table{static_cast<truth>(m >> 1), static_cast<truth>(m & 1)};
        const auto u = monadic_operator(b, table);
        for (truth p : truth_values) {
            const scalar_truth w(p);
            worst = std::max(worst, max_abs_diff(apply_monadic(u, vec(w)), vec(mon_eval(table, w))));
        }
    }
    for (unsigned i = 0; i < 16; ++i) {
        const auto table = dyadic_table::from_index(i);
        const auto t = dyadic_operator(b, table);
        for (truth p : truth_values)
            for (truth q : truth_values) {
                const scalar_truth u(p), v(q);
                worst = std::max(worst, max_abs_diff(apply_dyadic(t, vec(u), vec(v)),
                                                     vec(dyad_eval(table, u, v))));
            }
    }
    identity_report r;
    r.add("truth_table_fidelity", worst, structural_tol);
    return r;
}

/// L = D (N kron I) and D = N C (N kron N).
inline identity_report tautologies(const truth_basis& b) {
    const auto id = logical_identity(b);
    const auto neg = logical_negation(b);
    const auto l = dyadic_operator(b, gates::impl);
    const auto d = dyadic_operator(b, gates::or_);
    const auto c = dyadic_operator(b, gates::and_);
    identity_report r;
    r.add("impl_as_or_of_not", max_abs_diff(l, mul_kron(d, neg, id)), structural_tol);
    r.add("or_as_not_and_of_nots", max_abs_diff(d, neg * mul_kron(c, neg, neg)), structural_tol);
    return r;
}

inline identity_report srn_algebra(const truth_basis& b) { return sqrt_not(b).residuals; }

/**
 * Single-probe round trip for the 4 monadic and 7 named dyadic gates. A wrong
 * or missing verdict reports an infinite residual.
 */
inline identity_report diagnosis_round_trip(const truth_basis& b) {
    double worst_distance = 0;
    double worst_span = 0;
    for (const auto& g : monadic_gates) {
        const auto sig = probe_monadic(monadic_operator(b, g.table), b);
        const auto res = classify_monadic(sig);
        worst_span = std::max(worst_span, sig.residual);
        worst_distance = std::max(worst_distance, res.verdict == g.name
                                                      ? res.distance
                                                      : std::numeric_limits<double>::infinity());
    }
    for (const auto& g : dyadic_gates) {
        const auto sig = probe_dyadic(dyadic_operator(b, g.table), b);
        const auto res = classify_dyadic(sig);
        worst_span = std::max(worst_span, sig.residual);
        worst_distance = std::max(worst_distance, res.verdict == g.name
                                                      ? res.distance
                                                      : std::numeric_limits<double>::infinity());
    }
    for (unsigned i = 0; i < 16; ++i)
        worst_span = std::max(worst_span,
                              probe_dyadic(dyadic_operator(b, dyadic_table::from_index(i)), b).residual);

    identity_report r;
    r.add("diagnosis_round_trip", worst_distance, structural_tol);
    r.add("signature_in_span", worst_span, structural_tol);
    return r;
}

/// logical_exp(A Pi v) against e^{i pi v} I from the scalar series.
template <typename Real>
identity_report scalar_oracle(const basic_logic_algebra<Real>& ctx, const std::vector<double>& vs,
                              const series_policy& policy = {}) {
    using scalar = std::complex<Real>;
    identity_report r;
    for (double v : vs) {
        const basic_matrix<Real> g = ctx.A * (ctx.Pi * scalar(Real(v)));
        const auto e = logical_exp(ctx, g, policy);
        const auto z = scalar_exp_series(complex(0.0, std::numbers::pi * v), policy);
        const auto expected = scalar(Real(z.real()), Real(z.imag())) * ctx.I;
        r.merge_max("scalar_series_oracle", static_cast<double>(max_abs_diff(e, expected)), structural_tol);
    }
    return r;
}

inline const std::vector<double>& default_v_samples() {
    static const std::vector<double> vs{0.0, 0.25, 0.5, 1.0, 1.5, -0.75};
    return vs;
}

inline void append_prefixed(identity_report& into, const identity_report& from, const std::string& prefix) {
    for (const auto& c : from.checks()) into.add(prefix + c.name, c.residual, c.tolerance);
}

/**
 * Everything at one dimension: structural suites on an orthonormal basis and
 * on two overlapping ones (eps = 0.3, -0.4), diagnosis on the orthonormal
 * basis, and the Euler suite plus scalar oracle on the orthonormal basis and
 * the eps = 0.3 one. Bases come from random_basis(dim, eps, seed + offset).
 */
inline identity_report run_all(std::size_t dim, std::uint64_t seed, double euler_tolerance = euler_tol) {
    identity_report report;
    struct labelled {
        std::string label;
        truth_basis basis;
    };
    const std::vector<labelled> bases{
        {"eps=0/", random_basis(dim, 0.0, seed)},
        {"eps=0.3/", random_basis(dim, 0.3, seed + 1)},
        {"eps=-0.4/", random_basis(dim, -0.4, seed + 2)},
    };
    for (const auto& [label, b] : bases) {
        append_prefixed(report, basis_duals(b), label);
        append_prefixed(report, truth_table_fidelity(b), label);
        append_prefixed(report, tautologies(b), label);
        append_prefixed(report, srn_algebra(b), label);
    }
    append_prefixed(report, diagnosis_round_trip(bases[0].basis), bases[0].label);

    for (std::size_t i = 0; i < 2; ++i) {
        const auto ctx = make_logic_algebra<long double>(bases[i].basis);
        append_prefixed(report, verify_euler_suite(ctx, default_v_samples(), {2, 3, 5}, {}, euler_tolerance),
                        bases[i].label);
        append_prefixed(report, scalar_oracle(ctx, default_v_samples()), bases[i].label);
    }
    return report;
}

} // namespace vlogic::suites

#endif // VLOGIC_VERIFY_HPP
