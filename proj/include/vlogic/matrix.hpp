#ifndef VLOGIC_MATRIX_HPP
#define VLOGIC_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "vlogic/error.hpp"

namespace vlogic {

/// Dense complex vector. Truth vectors are real, probe outputs are not.
template <typename Real>
using basic_vector = std::vector<std::complex<Real>>;

using cvector = basic_vector<double>;
using rvector = std::vector<double>;

/**
 * Dense row-major complex matrix with explicit shape.
 *
 * Every logical operator in the library is one of these: monadic gates are
 * Q x Q, dyadic gates Q x Q^2. Sizes stay at desk scale (Q <= 64) so the
 * storage is a plain vector and products are naive triple loops.
 */
template <typename Real>
class basic_matrix {
public:
    using real_type = Real;
    using value_type = std::complex<Real>;

    basic_matrix() = default;

    basic_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    basic_matrix(std::size_t rows, std::size_t cols, std::vector<value_type> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw dimension_mismatch("matrix entries do not match " + std::to_string(rows_) +
                                     "x" + std::to_string(cols_));
    }

    basic_matrix(std::initializer_list<std::initializer_list<value_type>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw dimension_mismatch("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static basic_matrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    /// The ordinary identity matrix (not the logical identity of a basis).
    static basic_matrix unit(std::size_t n) {
        basic_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Real(1);
        return m;
    }

    static basic_matrix column(const basic_vector<Real>& v) {
        return {v.size(), 1, v};
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<value_type> entries() noexcept { return data_; }
    std::span<const value_type> entries() const noexcept { return data_; }

    bool all_finite() const {
        return std::all_of(data_.begin(), data_.end(), [](const value_type& z) {
            return std::isfinite(z.real()) && std::isfinite(z.imag());
        });
    }

    template <typename To>
    basic_matrix<To> cast() const {
        std::vector<std::complex<To>> out(data_.size());
        std::transform(data_.begin(), data_.end(), out.begin(), [](const value_type& z) {
            return std::complex<To>(static_cast<To>(z.real()), static_cast<To>(z.imag()));
        });
        return {rows_, cols_, std::move(out)};
    }

    basic_matrix& operator+=(const basic_matrix& o) {
        require_same_shape(o, "+");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }

    basic_matrix& operator-=(const basic_matrix& o) {
        require_same_shape(o, "-");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }

    basic_matrix& operator*=(value_type k) {
        for (auto& z : data_) z *= k;
        return *this;
    }

    basic_matrix& operator/=(value_type k) {
        for (auto& z : data_) z /= k;
        return *this;
    }

    friend basic_matrix operator+(basic_matrix a, const basic_matrix& b) { return a += b; }
    friend basic_matrix operator-(basic_matrix a, const basic_matrix& b) { return a -= b; }
    friend basic_matrix operator-(basic_matrix a) { return a *= value_type(-1); }
    friend basic_matrix operator*(basic_matrix a, value_type k) { return a *= k; }
    friend basic_matrix operator*(value_type k, basic_matrix a) { return a *= k; }
    friend basic_matrix operator/(basic_matrix a, value_type k) { return a /= k; }

    friend basic_matrix operator*(const basic_matrix& a, const basic_matrix& b) {
        if (a.cols_ != b.rows_)
            throw dimension_mismatch("cannot multiply " + a.shape() + " by " + b.shape());
        basic_matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            value_type* dst = &out.data_[i * b.cols_];
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const value_type aik = a.data_[i * a.cols_ + k];
                if (aik == value_type{}) continue;
                const value_type* src = &b.data_[k * b.cols_];
                // Plain real arithmetic: std::complex operator* goes through
                // the Annex G inf/nan path, which blocks vectorization.
                const Real ar = aik.real(), ai = aik.imag();
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Real br = src[j].real(), bi = src[j].imag();
                    dst[j] = {dst[j].real() + ar * br - ai * bi, dst[j].imag() + ar * bi + ai * br};
                }
            }
        }
        return out;
    }

    friend bool operator==(const basic_matrix&, const basic_matrix&) = default;

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const basic_matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_mismatch(std::string("shape mismatch in '") + op + "': " + shape() +
                                     " vs " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

using complex_matrix = basic_matrix<double>;

template <typename Real>
basic_matrix<Real> transpose(const basic_matrix<Real>& m) {
    basic_matrix<Real> t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    return t;
}

/// Entrywise complex conjugate.
template <typename Real>
basic_matrix<Real> conj(basic_matrix<Real> m) {
    for (auto& z : m.entries()) z = std::conj(z);
    return m;
}

/// Largest absolute entry; the residual norm used throughout.
template <typename Real>
Real max_norm(const basic_matrix<Real>& m) {
    Real best = 0;
    for (const auto& z : m.entries()) best = std::max(best, std::abs(z));
    return best;
}

template <typename Real>
Real max_norm(const basic_vector<Real>& v) {
    Real best = 0;
    for (const auto& z : v) best = std::max(best, std::abs(z));
    return best;
}

template <typename Real>
Real max_abs_diff(const basic_matrix<Real>& a, const basic_matrix<Real>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_mismatch("cannot compare " + a.shape() + " with " + b.shape());
    Real best = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) best = std::max(best, std::abs(ea[i] - eb[i]));
    return best;
}

template <typename Real>
Real max_abs_diff(const basic_vector<Real>& a, const basic_vector<Real>& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector length mismatch");
    Real best = 0;
    for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
    return best;
}

/// Kronecker product: the block matrix [u_ij V].
template <typename Real>
basic_matrix<Real> kron(const basic_matrix<Real>& u, const basic_matrix<Real>& v) {
    basic_matrix<Real> out(u.rows() * v.rows(), u.cols() * v.cols());
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j) {
            const auto uij = u(i, j);
            for (std::size_t r = 0; r < v.rows(); ++r)
                for (std::size_t c = 0; c < v.cols(); ++c)
                    out(i * v.rows() + r, j * v.cols() + c) = uij * v(r, c);
        }
    return out;
}

template <typename Real>
basic_vector<Real> kron(const basic_vector<Real>& a, const basic_vector<Real>& b) {
    basic_vector<Real> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

/**
 * T * (U kron V) without materializing the Kronecker product.
 *
 * Row r of T, read as a p x q block M_r (T(r, i*q + k) = M_r(i, k)), maps to
 * the row vec(U^T M_r V). Cost is O(rows * (p^2 q + p q^2)) instead of the
 * O(rows * p^2 q^2) of the dense route.
 */
template <typename Real>
basic_matrix<Real> mul_kron(const basic_matrix<Real>& t, const basic_matrix<Real>& u,
                            const basic_matrix<Real>& v) {
    const std::size_t p = u.rows();
    const std::size_t q = v.rows();
    if (t.cols() != p * q)
        throw dimension_mismatch("cannot multiply " + t.shape() + " by kron(" + u.shape() + ", " +
                                 v.shape() + ")");
    const std::size_t pc = u.cols();
    const std::size_t qc = v.cols();
    basic_matrix<Real> out(t.rows(), pc * qc);
    basic_matrix<Real> block(p, q);
    for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t k = 0; k < q; ++k) block(i, k) = t(r, i * q + k);
        const auto partial = transpose(u) * block * v;
        for (std::size_t j = 0; j < pc; ++j)
            for (std::size_t l = 0; l < qc; ++l) out(r, j * qc + l) = partial(j, l);
    }
    return out;
}

template <typename Real>
basic_vector<Real> matvec(const basic_matrix<Real>& m, const basic_vector<Real>& x) {
    if (m.cols() != x.size())
        throw dimension_mismatch("cannot apply " + m.shape() + " to a vector of length " +
                                 std::to_string(x.size()));
    basic_vector<Real> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::complex<Real> acc{};
        for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * x[c];
        out[r] = acc;
    }
    return out;
}

/// a b^T (no conjugation).
template <typename Real>
basic_matrix<Real> outer(const basic_vector<Real>& a, const basic_vector<Real>& b) {
    basic_matrix<Real> out(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out(i, j) = a[i] * b[j];
    return out;
}

/// Bilinear product sum a_i b_i (no conjugation).
template <typename Real>
std::complex<Real> dot(const basic_vector<Real>& a, const basic_vector<Real>& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector length mismatch in dot");
    std::complex<Real> acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline double dot(const rvector& a, const rvector& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector length mismatch in dot");
    double acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline double norm(const rvector& a) { return std::sqrt(dot(a, a)); }

inline cvector complexify(const rvector& v) { return {v.begin(), v.end()}; }

/// Integer power by repeated multiplication; k >= 1.
template <typename Real>
basic_matrix<Real> power(const basic_matrix<Real>& m, int k) {
    if (!m.is_square()) throw non_square("power of non-square " + m.shape() + " matrix");
    if (k < 1) throw error("matrix power needs k >= 1, got " + std::to_string(k));
    basic_matrix<Real> out = m;
    for (int i = 1; i < k; ++i) out = out * m;
    return out;
}

} // namespace vlogic

#endif // VLOGIC_MATRIX_HPP
