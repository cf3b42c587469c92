#ifndef VLOGIC_MATFUN_HPP
#define VLOGIC_MATFUN_HPP

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <string>
#include <type_traits>
#include <vector>

#include "vlogic/basis.hpp"
#include "vlogic/operators.hpp"
#include "vlogic/report.hpp"
#include "vlogic/srn.hpp"

// Logical exponential and the circular functions C(X), S(X).
//
// These are NOT the standard matrix exponential / cos / sin. The zeroth term
// of every series is the logical identity I = s y^T + n z^T, which has rank 2
// when Q > 2, and the -1 of the scalar cosine and sine series is replaced by
// the negation matrix N:
//
//   e^G  = I + G + G^2/2! + G^3/3! + ...
//   C(X) = I + N X^2/2! + X^4/4! + N X^6/6! + ...
//   S(X) = X + N X^3/3! + X^5/5! + N X^7/7! + ...
//
// With this convention e^O = I, e^{AX} = C(X) + A S(X) and e^{A Pi} + I = O.
//
// Precision: X = Pi v has the real eigenvalue pi v along s - n, so rounding in
// the entries of X is amplified by roughly e^{pi |v|} in C and S even though
// the exact results are bounded. Everything here is templated on the scalar
// type; build the algebra as make_logic_algebra<long double>(basis) when
// pi |v| reaches the tens (the Euler suite always does).

namespace vlogic {

inline constexpr double commutator_tol = 1e-10;
inline constexpr double euler_tol = 1e-8;

/// Truncation control for the series.
struct series_policy {
    /// Stop once an added term has max-norm below this.
    double term_tol = 1e-16;
    /// Cap on the number of terms added, zeroth term included.
    int max_terms = 192;
};

inline void validate(const series_policy& p) {
    if (!(p.term_tol > 0)) throw error("series term_tol must be positive");
    if (p.max_terms < 8) throw error("series max_terms must be at least 8");
}

/// The commutative algebra spanned by the logical identity and negation of one basis.
template <typename Real>
struct basic_logic_algebra {
    using matrix = basic_matrix<Real>;

    truth_basis basis;
    matrix I;
    matrix N;
    matrix A;
    matrix B;
    /// i pi B.
    matrix Pi;
};

using logic_algebra = basic_logic_algebra<double>;

template <typename Real>
basic_matrix<Real> pi_matrix(const basic_matrix<Real>& b) {
    return b * std::complex<Real>(0, std::numbers::pi_v<Real>);
}

template <typename Real>
const basic_matrix<Real>& pi_matrix(const basic_logic_algebra<Real>& ctx) {
    return ctx.Pi;
}

template <typename Real = double>
basic_logic_algebra<Real> make_logic_algebra(const truth_basis& basis) {
    auto roots = sqrt_not<Real>(basis);
    auto pi = pi_matrix(roots.B);
    return {basis, logical_identity<Real>(basis), logical_negation<Real>(basis), std::move(roots.A),
            std::move(roots.B), std::move(pi)};
}

namespace detail {

template <typename Real>
void require_commutes_with_negation(const basic_logic_algebra<Real>& ctx, const basic_matrix<Real>& x) {
    const auto q = ctx.basis.dim();
    if (x.rows() != q || x.cols() != q)
        throw dimension_mismatch("series argument must be " + std::to_string(q) + "x" +
                                 std::to_string(q) + ", got " + x.shape());
    const double c = static_cast<double>(max_abs_diff(x * ctx.N, ctx.N * x));
    if (!(c < commutator_tol))
        throw non_commuting("argument does not commute with N (commutator max-norm " +
                            std::to_string(c) + ")");
}

enum class series_kind { exp, cos, sin };

/**
 * Sums the selected powers of x with P_k = P_{k-1} x / k, in long double or
 * wider. Terms reach ~1e9 for arguments near 7.5 pi before cancelling.
 */
template <typename Real>
basic_matrix<Real> sum_series(const basic_logic_algebra<Real>& ctx, const basic_matrix<Real>& x,
                              const series_policy& policy, series_kind kind,
                              std::vector<double>* term_norms) {
    using acc_real = std::common_type_t<Real, long double>;
    using acc_matrix = basic_matrix<acc_real>;

    validate(policy);
    require_commutes_with_negation(ctx, x);

    const acc_matrix xw = x.template cast<acc_real>();
    const acc_matrix nw = ctx.N.template cast<acc_real>();
    const auto q = x.rows();
    acc_matrix sum = kind == series_kind::sin ? acc_matrix(q, q) : ctx.I.template cast<acc_real>();
    int added = 0;
    if (kind != series_kind::sin) {
        ++added;
        if (term_norms) term_norms->push_back(static_cast<double>(max_norm(sum)));
    }

    acc_matrix power;
    for (long k = 1;; ++k) {
        if (k == 1) {
            power = xw;
        } else {
            power = power * xw;
            power /= static_cast<acc_real>(k);
        }

        const bool odd = k % 2 == 1;
        if ((kind == series_kind::cos && odd) || (kind == series_kind::sin && !odd)) continue;

        // Cosine and sine carry N^m on the k = 2m (resp. 2m + 1) term; N^2 = I.
        const long m = k / 2;
        const bool with_negation = kind != series_kind::exp && m % 2 == 1;
        const acc_matrix term = with_negation ? nw * power : power;
        sum += term;
        ++added;
        const auto nrm = static_cast<double>(max_norm(term));
        if (term_norms) term_norms->push_back(nrm);
        if (nrm < policy.term_tol) return sum.template cast<Real>();
        if (added >= policy.max_terms)
            throw series_not_converged("series did not reach term tolerance " +
                                       std::to_string(policy.term_tol) + " within " +
                                       std::to_string(policy.max_terms) + " terms (last term " +
                                       std::to_string(nrm) + ")");
    }
}

} // namespace detail

/// e^G with the logical identity as zeroth term. G must commute with N.
template <typename Real>
basic_matrix<Real> logical_exp(const basic_logic_algebra<Real>& ctx, const basic_matrix<Real>& g,
                               const series_policy& policy = {},
                               std::vector<double>* term_norms = nullptr) {
    return detail::sum_series(ctx, g, policy, detail::series_kind::exp, term_norms);
}

template <typename Real>
basic_matrix<Real> C_of(const basic_logic_algebra<Real>& ctx, const basic_matrix<Real>& x,
                        const series_policy& policy = {}, std::vector<double>* term_norms = nullptr) {
    return detail::sum_series(ctx, x, policy, detail::series_kind::cos, term_norms);
}

template <typename Real>
basic_matrix<Real> S_of(const basic_logic_algebra<Real>& ctx, const basic_matrix<Real>& x,
                        const series_policy& policy = {}, std::vector<double>* term_norms = nullptr) {
    return detail::sum_series(ctx, x, policy, detail::series_kind::sin, term_norms);
}

/**
 * Truncated scalar series 1 + z + z^2/2! + ... under the same policy as the
 * matrix series. Independent of every matrix path; used as the oracle for
 * logical_exp(A Pi v) = e^{i pi v} I.
 */
inline complex scalar_exp_series(complex z, const series_policy& policy = {}) {
    validate(policy);
    const std::complex<long double> w(z.real(), z.imag());
    std::complex<long double> sum = 1.0L;
    std::complex<long double> term = 1.0L;
    for (int k = 1; k < policy.max_terms; ++k) {
        term *= w / static_cast<long double>(k);
        sum += term;
        if (std::abs(term) < policy.term_tol)
            return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
    }
    throw series_not_converged("scalar series did not converge for |z| = " + std::to_string(std::abs(z)));
}

/// M = a I + b N + remainder, with a, b read off M s through the duals.
struct algebra_coordinates {
    complex a;
    complex b;
    double residual;
};

template <typename Real>
algebra_coordinates decompose_in_algebra(const basic_logic_algebra<Real>& ctx, const basic_matrix<Real>& m) {
    const basis_vectors<Real> v(ctx.basis);
    const auto ms = matvec(m, v.s);
    const auto a = dot(v.y, ms);
    const auto b = dot(v.z, ms);
    const double residual = static_cast<double>(max_abs_diff(m, a * ctx.I + b * ctx.N));
    return {{static_cast<double>(a.real()), static_cast<double>(a.imag())},
            {static_cast<double>(b.real()), static_cast<double>(b.imag())},
            residual};
}

namespace identity_names {
inline const std::string euler_form = "euler_form";            // e^{AX} = C(X) + A S(X)
inline const std::string pythagorean = "pythagorean";          // C^2 - N S^2 = I
inline const std::string cos_from_exp = "cos_from_exp";        // C = (e^{AX} + e^{-AX}) / 2
inline const std::string sin_from_exp = "sin_from_exp";        // S = B (e^{AX} - e^{-AX}) / 2
inline const std::string cos_addition = "cos_addition";
inline const std::string sin_addition = "sin_addition";
inline const std::string great_euler = "great_euler";          // e^{A Pi} + I = O
inline const std::string de_moivre = "de_moivre";              // (C + A S)^k = C(k X) + A S(k X)
inline const std::string closed_form_cos = "closed_form_cos";  // C(Pi v) = cos(pi v) I
inline const std::string closed_form_sin = "closed_form_sin";  // S(Pi v) = i sin(pi v) B
} // namespace identity_names

/**
 * Runs the Euler identity list on X = Pi v for every v, every pair (for the
 * addition formulas) and every k (De Moivre). Each named entry holds the
 * worst max-norm residual seen.
 */
template <typename Real>
identity_report verify_euler_suite(const basic_logic_algebra<Real>& ctx, const std::vector<double>& v_samples,
                                   const std::vector<int>& ks = {2, 3, 5}, const series_policy& policy = {},
                                   double tol = euler_tol) {
    namespace id = identity_names;
    using matrix = basic_matrix<Real>;
    using scalar = std::complex<Real>;
    for (double v : v_samples)
        if (!std::isfinite(v)) throw error("Euler suite sample is not finite");
    for (int k : ks)
        if (k < 1) throw error("De Moivre exponent must be >= 1, got " + std::to_string(k));

    identity_report report;
    const auto& I = ctx.I;
    const auto& N = ctx.N;
    const auto& A = ctx.A;
    const auto& B = ctx.B;
    const scalar half(Real(0.5));
    auto record = [&report, tol](const std::string& name, Real r) {
        report.merge_max(name, static_cast<double>(r), tol);
    };

    struct circular {
        matrix c, s;
    };
    std::map<double, circular> cache;
    auto at = [&](double v) -> const circular& {
        auto it = cache.find(v);
        if (it == cache.end()) {
            const auto x = ctx.Pi * scalar(Real(v));
            it = cache.emplace(v, circular{C_of(ctx, x, policy), S_of(ctx, x, policy)}).first;
        }
        return it->second;
    };

    const Real pi = std::numbers::pi_v<Real>;
    for (double v : v_samples) {
        const auto& [c, s] = at(v);
        const matrix ax = A * (ctx.Pi * scalar(Real(v)));
        const auto e_plus = logical_exp(ctx, ax, policy);
        const auto e_minus = logical_exp(ctx, matrix(-ax), policy);

        record(id::euler_form, max_abs_diff(e_plus, c + A * s));
        record(id::pythagorean, max_abs_diff(c * c - N * (s * s), I));
        record(id::cos_from_exp, max_abs_diff(c, half * (e_plus + e_minus)));
        record(id::sin_from_exp, max_abs_diff(s, half * (B * (e_plus - e_minus))));
        record(id::closed_form_cos, max_abs_diff(c, scalar(std::cos(pi * Real(v))) * I));
        record(id::closed_form_sin, max_abs_diff(s, scalar(0, std::sin(pi * Real(v))) * B));

        const matrix unit = c + A * s;
        for (int k : ks) {
            const auto& [ck, sk] = at(k * v);
            record(id::de_moivre, max_abs_diff(power(unit, k), ck + A * sk));
        }
    }

    for (double a : v_samples)
        for (double b : v_samples) {
            const auto& [ca, sa] = at(a);
            const auto& [cb, sb] = at(b);
            const matrix x = ctx.Pi * scalar(Real(a)) + ctx.Pi * scalar(Real(b));
            record(id::cos_addition, max_abs_diff(C_of(ctx, x, policy), ca * cb + N * (sa * sb)));
            record(id::sin_addition, max_abs_diff(S_of(ctx, x, policy), sa * cb + sb * ca));
        }

    const matrix a_pi = A * ctx.Pi;
    report.add(id::great_euler, static_cast<double>(max_norm(logical_exp(ctx, a_pi, policy) + I)), tol);
    return report;
}

} // namespace vlogic

#endif // VLOGIC_MATFUN_HPP
