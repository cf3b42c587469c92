#ifndef VLOGIC_OPERATORS_HPP
#define VLOGIC_OPERATORS_HPP

#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "vlogic/basis.hpp"
#include "vlogic/matrix.hpp"
#include "vlogic/scalar_logic.hpp"

namespace vlogic {

/// s, n, y, z of a basis in working precision `Real`; the duals are recomputed
/// from s and n rather than widened from their double values.
template <typename Real>
struct basis_vectors {
    basic_vector<Real> s, n, y, z;

    explicit basis_vectors(const truth_basis& b) {
        // Duals from the inverse Gram matrix, so that <y,s> = <z,n> = 1 holds
        // to the working precision even when |s|, |n| are 1 only to double.
        const auto q = b.dim();
        Real ss = 0, sn = 0, nn = 0;
        for (std::size_t i = 0; i < q; ++i) {
            const Real si(b.s()[i]), ni(b.n()[i]);
            ss += si * si;
            sn += si * ni;
            nn += ni * ni;
        }
        const Real inv_det = Real(1) / (ss * nn - sn * sn);
        s.resize(q);
        n.resize(q);
        y.resize(q);
        z.resize(q);
        for (std::size_t i = 0; i < q; ++i) {
            const Real si(b.s()[i]), ni(b.n()[i]);
            s[i] = si;
            n[i] = ni;
            y[i] = inv_det * (nn * si - sn * ni);
            z[i] = inv_det * (ss * ni - sn * si);
        }
    }

    const basic_vector<Real>& vector_of(truth v) const noexcept { return v == truth::t ? s : n; }
    const basic_vector<Real>& dual_of(truth v) const noexcept { return v == truth::t ? y : z; }
};

/// U = a y^T + b z^T, so that U s = a and U n = b.
template <typename Real = double>
basic_matrix<Real> monadic_operator(const truth_basis& basis, monadic_table table) {
    const basis_vectors<Real> v(basis);
    return outer(v.vector_of(table.out_t), v.y) + outer(v.vector_of(table.out_f), v.z);
}

/// T = e (y kron y)^T + f (y kron z)^T + g (z kron y)^T + h (z kron z)^T.
template <typename Real = double>
basic_matrix<Real> dyadic_operator(const truth_basis& basis, dyadic_table table) {
    const basis_vectors<Real> v(basis);
    const auto q = basis.dim();
    basic_matrix<Real> t(q, q * q);
    for (truth p : truth_values)
        for (truth r : truth_values) {
            const auto& out = v.vector_of(table(p, r));
            const auto& dp = v.dual_of(p);
            const auto& dr = v.dual_of(r);
            for (std::size_t row = 0; row < q; ++row) {
                if (out[row] == Real(0)) continue;
                for (std::size_t i = 0; i < q; ++i)
                    for (std::size_t k = 0; k < q; ++k)
                        t(row, i * q + k) += out[row] * dp[i] * dr[k];
            }
        }
    return t;
}

/// Logical identity I (written I-bar when the basis is not orthogonal).
template <typename Real = double>
basic_matrix<Real> logical_identity(const truth_basis& basis) {
    return monadic_operator<Real>(basis, gates::id);
}

/// Logical negation N (N-bar when the basis is not orthogonal).
template <typename Real = double>
basic_matrix<Real> logical_negation(const truth_basis& basis) {
    return monadic_operator<Real>(basis, gates::not_);
}

inline cvector apply_monadic(const complex_matrix& u, const cvector& x) { return matvec(u, x); }

inline cvector apply_dyadic(const complex_matrix& t, const cvector& x, const cvector& w) {
    return matvec(t, kron(x, w));
}

/// A gate identified by name, with its table.
struct named_gate {
    int arity;
    std::string name;
    std::variant<monadic_table, dyadic_table> table;
};

inline named_gate find_gate(std::string_view name) {
    if (auto m = find_monadic(name)) return {1, to_upper(name), *m};
    if (auto d = find_dyadic(name)) return {2, to_upper(name), *d};
    throw unknown_name("unknown gate '" + std::string(name) + "'");
}

inline complex_matrix gate_operator(const truth_basis& basis, const named_gate& gate) {
    return std::visit(
        [&basis](auto table) {
            if constexpr (std::is_same_v<decltype(table), monadic_table>)
                return monadic_operator(basis, table);
            else
                return dyadic_operator(basis, table);
        },
        gate.table);
}

} // namespace vlogic

#endif // VLOGIC_OPERATORS_HPP
