#ifndef VLOGIC_BASIS_HPP
#define VLOGIC_BASIS_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "vlogic/error.hpp"
#include "vlogic/matrix.hpp"
#include "vlogic/scalar_logic.hpp"

namespace vlogic {

inline constexpr double default_basis_tol = 1e-10;

/// |epsilon| above this is rejected: the dual formulas divide by 1 - epsilon^2.
inline constexpr double nearly_dependent_threshold = 1.0 - 1e-6;

/**
 * Truth vectors s (true) and n (false) with their duals.
 *
 * The duals are the rows of the exact pseudoinverse of [s n]:
 *   y = (s - eps n) / (1 - eps^2),  z = (n - eps s) / (1 - eps^2)
 * so that <y,s> = <z,n> = 1 and <y,n> = <z,s> = 0. s and n are unit vectors
 * but need not be orthogonal; eps = <s,n> may be any value in (-1, 1).
 * Instances are immutable once built.
 */
class truth_basis {
public:
    std::size_t dim() const noexcept { return s_.size(); }
    const rvector& s() const noexcept { return s_; }
    const rvector& n() const noexcept { return n_; }
    const rvector& y() const noexcept { return y_; }
    const rvector& z() const noexcept { return z_; }
    double epsilon() const noexcept { return epsilon_; }

    bool is_orthonormal(double tol = default_basis_tol) const noexcept {
        return std::abs(epsilon_) <= tol;
    }

    /// The vector standing for a symbolic truth value: t -> s, f -> n.
    const rvector& vector_of(truth v) const noexcept { return v == truth::t ? s_ : n_; }
    const rvector& dual_of(truth v) const noexcept { return v == truth::t ? y_ : z_; }

    friend truth_basis make_basis(rvector s, rvector n, double tol);

private:
    rvector s_, n_, y_, z_;
    double epsilon_ = 0;
};

inline truth_basis make_basis(rvector s, rvector n, double tol = default_basis_tol) {
    if (s.size() != n.size())
        throw dimension_mismatch("truth vectors differ in length: " + std::to_string(s.size()) +
                                 " vs " + std::to_string(n.size()));
    if (s.size() < 2) throw dimension_mismatch("truth vectors need length >= 2");
    for (const rvector* v : {&s, &n})
        for (double x : *v)
            if (!std::isfinite(x)) throw error("truth vector has a non-finite entry");

    const double ns = norm(s);
    const double nn = norm(n);
    if (std::abs(ns - 1.0) > tol || std::abs(nn - 1.0) > tol)
        throw not_unit_norm("truth vectors must be normalized (|s| = " + std::to_string(ns) +
                            ", |n| = " + std::to_string(nn) + ")");

    const double eps = dot(s, n);
    if (std::abs(eps) > nearly_dependent_threshold || std::abs(eps) > 1.0 - tol)
        throw nearly_dependent("truth vectors nearly dependent: <s,n> = " + std::to_string(eps));

    truth_basis b;
    const double scale = 1.0 / (1.0 - eps * eps);
    b.y_.resize(s.size());
    b.z_.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        b.y_[i] = scale * (s[i] - eps * n[i]);
        b.z_[i] = scale * (n[i] - eps * s[i]);
    }
    b.s_ = std::move(s);
    b.n_ = std::move(n);
    b.epsilon_ = eps;
    return b;
}

enum class canonical { set1, set2, dim4 };

inline canonical parse_canonical(std::string_view name) {
    const auto key = to_upper(name);
    if (key == "SET1") return canonical::set1;
    if (key == "SET2") return canonical::set2;
    if (key == "DIM4") return canonical::dim4;
    throw unknown_name("unknown canonical basis '" + std::string(name) +
                       "' (expected SET1, SET2 or DIM4)");
}

inline truth_basis canonical_basis(canonical which) {
    switch (which) {
    case canonical::set1:
        return make_basis({1.0, 0.0}, {0.0, 1.0});
    case canonical::set2: {
        const double h = 1.0 / std::sqrt(2.0);
        return make_basis({h, h}, {h, -h});
    }
    case canonical::dim4:
        return make_basis({0.5, 0.5, 0.5, 0.5}, {0.5, -0.5, -0.5, 0.5});
    }
    throw unknown_name("unknown canonical basis");
}

inline truth_basis canonical_basis(std::string_view name) {
    return canonical_basis(parse_canonical(name));
}

namespace detail {

// Uniform in [-1, 1) from the top 53 bits of one mt19937_64 draw. Written out
// by hand because std::uniform_real_distribution is implementation-defined.
inline double signed_unit(std::mt19937_64& gen) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

inline rvector draw_vector(std::mt19937_64& gen, std::size_t q) {
    rvector v(q);
    for (auto& x : v) x = signed_unit(gen);
    return v;
}

} // namespace detail

/**
 * Seeded random basis with a prescribed overlap.
 *
 * Generator: std::mt19937_64 seeded with `seed`; each entry is
 * 2 * (draw >> 11) * 2^-53 - 1. Two vectors of Q entries are drawn (s first),
 * Gram-Schmidt gives unit s and s_perp, and n = eps s + sqrt(1 - eps^2) s_perp.
 * A draw that is numerically degenerate is discarded and redrawn.
 */
inline truth_basis random_basis(std::size_t q, double epsilon, std::uint64_t seed) {
    if (q < 2) throw q_too_small("random basis needs Q >= 2, got " + std::to_string(q));
    if (!std::isfinite(epsilon) || std::abs(epsilon) >= 1.0)
        throw bad_epsilon("overlap must satisfy |epsilon| < 1, got " + std::to_string(epsilon));

    std::mt19937_64 gen(seed);
    for (;;) {
        rvector s = detail::draw_vector(gen, q);
        rvector t = detail::draw_vector(gen, q);
        const double ns = norm(s);
        if (ns < 1e-3) continue;
        for (auto& x : s) x /= ns;
        const double proj = dot(t, s);
        for (std::size_t i = 0; i < q; ++i) t[i] -= proj * s[i];
        const double nt = norm(t);
        if (nt < 1e-3) continue;
        for (auto& x : t) x /= nt;

        const double c = std::sqrt(1.0 - epsilon * epsilon);
        rvector n(q);
        for (std::size_t i = 0; i < q; ++i) n[i] = epsilon * s[i] + c * t[i];
        return make_basis(std::move(s), std::move(n));
    }
}

} // namespace vlogic

#endif // VLOGIC_BASIS_HPP
