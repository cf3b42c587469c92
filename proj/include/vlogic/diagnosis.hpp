#ifndef VLOGIC_DIAGNOSIS_HPP
#define VLOGIC_DIAGNOSIS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "vlogic/basis.hpp"
#include "vlogic/operators.hpp"
#include "vlogic/srn.hpp"

namespace vlogic {

inline constexpr double default_classify_tol = 1e-6;

/// output = (re_s + i im_s) s + (re_n + i im_n) n + (something outside span{s,n}).
struct gate_signature {
    double re_s = 0;
    double re_n = 0;
    double im_s = 0;
    double im_n = 0;
    /// Max-norm of the part of the output outside span{s, n}.
    double residual = 0;

    std::array<double, 4> coefficients() const noexcept { return {re_s, re_n, im_s, im_n}; }
};

/// Max-norm distance between the coefficient 4-tuples.
inline double distance(const gate_signature& a, const gate_signature& b) noexcept {
    const auto ca = a.coefficients();
    const auto cb = b.coefficients();
    double d = 0;
    for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(ca[i] - cb[i]));
    return d;
}

inline constexpr std::string_view verdict_unknown = "UNKNOWN";
inline constexpr std::string_view verdict_ambiguous = "AMBIGUOUS";

struct diagnosis_result {
    std::string verdict;
    gate_signature signature;
    /// Distance to the nearest reference signature.
    double distance = std::numeric_limits<double>::infinity();

    bool identified() const { return verdict != verdict_unknown && verdict != verdict_ambiguous; }
};

/// Which square root preprocesses the probe. The standard probe uses A.
enum class probe_root { a, b };

/// Coefficients along s and n via the duals, plus the out-of-span residual.
inline gate_signature decompose(const truth_basis& basis, const cvector& out) {
    const auto y = complexify(basis.y());
    const auto z = complexify(basis.z());
    const complex cs = dot(y, out);
    const complex cn = dot(z, out);
    double residual = 0;
    for (std::size_t i = 0; i < out.size(); ++i)
        residual = std::max(residual, std::abs(out[i] - cs * basis.s()[i] - cn * basis.n()[i]));
    return {cs.real(), cn.real(), cs.imag(), cn.imag(), residual};
}

namespace detail {

inline void require_orthonormal(const truth_basis& basis) {
    if (!basis.is_orthonormal())
        throw non_orthogonal_basis("single-probe diagnosis requires an orthonormal basis (epsilon = " +
                                   std::to_string(basis.epsilon()) + ")");
}

inline cvector preprocessed_true(const truth_basis& basis, probe_root root) {
    const auto pair = sqrt_not(basis);
    return matvec(root == probe_root::a ? pair.A : pair.B, complexify(basis.s()));
}

} // namespace detail

/// Signature of oracle * A * s.
inline gate_signature probe_monadic(const complex_matrix& oracle, const truth_basis& basis,
                                    probe_root root = probe_root::a) {
    detail::require_orthonormal(basis);
    const auto q = basis.dim();
    if (oracle.rows() != q || oracle.cols() != q)
        throw dimension_mismatch("monadic oracle must be " + std::to_string(q) + "x" +
                                 std::to_string(q) + ", got " + oracle.shape());
    return decompose(basis, matvec(oracle, detail::preprocessed_true(basis, root)));
}

/// Signature of oracle * (A kron A) * (s kron s), evaluated as oracle * (As kron As).
inline gate_signature probe_dyadic(const complex_matrix& oracle, const truth_basis& basis,
                                   probe_root root = probe_root::a) {
    detail::require_orthonormal(basis);
    const auto q = basis.dim();
    if (oracle.rows() != q || oracle.cols() != q * q)
        throw dimension_mismatch("dyadic oracle must be " + std::to_string(q) + "x" +
                                 std::to_string(q * q) + ", got " + oracle.shape());
    const auto as = detail::preprocessed_true(basis, root);
    return decompose(basis, matvec(oracle, kron(as, as)));
}

struct reference_signature {
    std::string_view name;
    gate_signature signature;
};

inline const std::array<reference_signature, 4>& monadic_references() {
    static const std::array<reference_signature, 4> refs{{
        {"ID", {0.5, 0.5, 0.5, -0.5}},
        {"NOT", {0.5, 0.5, -0.5, 0.5}},
        {"CID", {1.0, 0.0, 0.0, 0.0}},
        {"CNOT", {0.0, 1.0, 0.0, 0.0}},
    }};
    return refs;
}

inline const std::array<reference_signature, 7>& dyadic_references() {
    static const std::array<reference_signature, 7> refs{{
        {"AND", {0.0, 1.0, 0.5, -0.5}},
        {"OR", {1.0, 0.0, 0.5, -0.5}},
        {"IMPL", {0.5, 0.5, 0.0, 0.0}},
        {"EQUI", {0.0, 1.0, 0.0, 0.0}},
        {"XOR", {1.0, 0.0, 0.0, 0.0}},
        {"NAND", {1.0, 0.0, -0.5, 0.5}},
        {"NOR", {0.0, 1.0, -0.5, 0.5}},
    }};
    return refs;
}

namespace detail {

template <std::size_t N>
diagnosis_result classify(const gate_signature& sig, double tol,
                          const std::array<reference_signature, N>& refs) {
    diagnosis_result result{std::string(verdict_unknown), sig};
    std::size_t within = 0;
    for (const auto& ref : refs) {
        const double d = distance(sig, ref.signature);
        if (d < tol) ++within;
        if (d < result.distance) {
            result.distance = d;
            if (d < tol) result.verdict = ref.name;
        }
    }
    if (within > 1) result.verdict = verdict_ambiguous;
    return result;
}

} // namespace detail

inline diagnosis_result classify_monadic(const gate_signature& sig, double tol = default_classify_tol) {
    return detail::classify(sig, tol, monadic_references());
}

inline diagnosis_result classify_dyadic(const gate_signature& sig, double tol = default_classify_tol) {
    return detail::classify(sig, tol, dyadic_references());
}

struct signature_entry {
    dyadic_table table;
    gate_signature signature;
};

/// All 16 dyadic probe signatures and the classes of tables that share one.
struct dyadic_enumeration {
    std::array<signature_entry, 16> entries;
    std::vector<std::vector<dyadic_table>> classes;

    const gate_signature& signature_of(dyadic_table t) const { return entries[t.index()].signature; }

    const std::vector<dyadic_table>& class_of(dyadic_table t) const {
        for (const auto& c : classes)
            if (std::find(c.begin(), c.end(), t) != c.end()) return c;
        throw error("table missing from enumeration");
    }
};

inline dyadic_enumeration enumerate_dyadic_signatures(const truth_basis& basis,
                                                      double same_tol = 1e-9) {
    dyadic_enumeration out;
    for (unsigned i = 0; i < 16; ++i) {
        const auto table = dyadic_table::from_index(i);
        out.entries[i] = {table, probe_dyadic(dyadic_operator(basis, table), basis)};
    }
    std::array<bool, 16> placed{};
    for (unsigned i = 0; i < 16; ++i) {
        if (placed[i]) continue;
        std::vector<dyadic_table> cls{out.entries[i].table};
        placed[i] = true;
        for (unsigned j = i + 1; j < 16; ++j) {
            if (!placed[j] &&
                distance(out.entries[i].signature, out.entries[j].signature) < same_tol) {
                cls.push_back(out.entries[j].table);
                placed[j] = true;
            }
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

} // namespace vlogic

#endif // VLOGIC_DIAGNOSIS_HPP
