#ifndef VLOGIC_SRN_HPP
#define VLOGIC_SRN_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Eigenvalues>

#include "vlogic/basis.hpp"
#include "vlogic/operators.hpp"
#include "vlogic/report.hpp"

namespace vlogic {

using complex = std::complex<double>;

inline constexpr double srn_tol = 1e-10;

/// Coefficients of the root on s and n: A s = alpha s + beta n,
/// A n = alpha_prime s + beta_prime n.
struct srn_coefficients {
    complex alpha;
    complex beta;
    complex alpha_prime;
    complex beta_prime;
};

/**
 * Solves A A s = n, A A n = s for the root coefficients.
 *
 * Substituting the trial expansion gives
 *   alpha^2 + beta alpha' = 0,    alpha beta + beta beta' = 1,
 *   alpha' alpha + beta' alpha' = 1,  alpha' beta + beta'^2 = 0,
 * whose solutions are symmetric (alpha' = beta, beta' = alpha). Then
 * alpha^2 + beta^2 = 0 and 2 alpha beta = 1, so (alpha + beta)^2 = 1; the
 * positive root alpha + beta = 1 makes alpha and beta the two roots of
 * x^2 - x + 1/2 = 0. alpha is the one with positive imaginary part.
 */
inline srn_coefficients solve_srn_coefficients() {
    const complex sum_of_squares = 0.0; // alpha^2 + beta^2
    const complex twice_product = 1.0;  // 2 alpha beta
    const complex sum = std::sqrt(sum_of_squares + twice_product);
    const complex prod = twice_product / 2.0;
    const complex disc = std::sqrt(sum * sum - 4.0 * prod);
    complex r1 = (sum + disc) / 2.0;
    complex r2 = (sum - disc) / 2.0;
    if (r1.imag() < r2.imag()) std::swap(r1, r2);
    return {r1, r2, r2, r1};
}

/// The two square roots of (generalized) negation for one basis.
template <typename Real>
struct basic_srn_pair {
    basic_matrix<Real> A;
    basic_matrix<Real> B;
    complex alpha;
    complex beta;
    identity_report residuals;
};

using srn_pair = basic_srn_pair<double>;

/**
 * A = alpha I + beta N, B = beta I + alpha N with I, N the logical identity and
 * negation of `basis` (the dual-vector versions when eps != 0).
 */
template <typename Real = double>
basic_srn_pair<Real> sqrt_not(const truth_basis& basis) {
    using wide = std::complex<Real>;
    const auto c = solve_srn_coefficients();
    const wide alpha(c.alpha.real(), c.alpha.imag());
    const wide beta(c.beta.real(), c.beta.imag());
    const auto id = logical_identity<Real>(basis);
    const auto neg = logical_negation<Real>(basis);

    basic_srn_pair<Real> p{alpha * id + beta * neg, beta * id + alpha * neg, c.alpha, c.beta, {}};
    auto add = [&p](const char* name, Real r) { p.residuals.add(name, static_cast<double>(r), srn_tol); };
    add("A2_minus_N", max_abs_diff(p.A * p.A, neg));
    add("B2_minus_N", max_abs_diff(p.B * p.B, neg));
    add("AB_minus_I", max_abs_diff(p.A * p.B, id));
    add("BA_minus_I", max_abs_diff(p.B * p.A, id));
    add("A_minus_conjB", max_abs_diff(p.A, conj(p.B)));
    add("B_minus_NA", max_abs_diff(p.B, neg * p.A));
    add("A_minus_NB", max_abs_diff(p.A, neg * p.B));
    return p;
}

/**
 * Eigenvalues with multiplicity, ordered by modulus (descending) then
 * argument in (-pi, pi] (ascending).
 *
 * Parts below 1e-12 of the spectral scale are flushed to zero first so that
 * numerically-zero eigenvalues sort deterministically.
 */
inline std::vector<complex> eigenvalues(const complex_matrix& m) {
    if (!m.is_square()) throw non_square("eigenvalues of non-square " + m.shape() + " matrix");
    const auto n = static_cast<Eigen::Index>(m.rows());
    if (n == 0) return {};
    Eigen::MatrixXcd em(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) em(r, c) = m(r, c);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(em, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw no_convergence("eigenvalue iteration did not converge");

    std::vector<complex> values(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    double scale = 1.0;
    for (const auto& v : values) scale = std::max(scale, std::abs(v));
    const double flush = 1e-12 * scale;
    for (auto& v : values) {
        double re = std::abs(v.real()) < flush ? 0.0 : v.real();
        double im = std::abs(v.imag()) < flush ? 0.0 : v.imag();
        v = {re, im};
    }

    // Moduli are compared on a 1e-9 grid so that equal-modulus pairs such as
    // {1, i} order by argument.
    const double grid = 1e-9 * scale;
    auto key = [grid](const complex& v) { return std::llround(std::abs(v) / grid); };
    std::sort(values.begin(), values.end(), [&key](const complex& a, const complex& b) {
        const auto ka = key(a), kb = key(b);
        if (ka != kb) return ka > kb;
        return std::arg(a) < std::arg(b);
    });
    return values;
}

} // namespace vlogic

#endif // VLOGIC_SRN_HPP
