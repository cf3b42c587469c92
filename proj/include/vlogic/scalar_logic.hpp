#ifndef VLOGIC_SCALAR_LOGIC_HPP
#define VLOGIC_SCALAR_LOGIC_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "vlogic/error.hpp"

namespace vlogic {

/// Symbolic truth value of a table entry.
enum class truth : std::uint8_t { f = 0, t = 1 };

constexpr truth operator!(truth v) noexcept { return v == truth::t ? truth::f : truth::t; }

constexpr char to_char(truth v) noexcept { return v == truth::t ? 'T' : 'F'; }

/// A truth value in the +1/-1 arithmetic: t -> +1, f -> -1.
class scalar_truth {
public:
    constexpr scalar_truth(truth v) noexcept : value_(v == truth::t ? 1 : -1) {}

    static scalar_truth from_int(int v) {
        if (v != 1 && v != -1) throw error("scalar truth must be +1 or -1, got " + std::to_string(v));
        return scalar_truth(v == 1 ? truth::t : truth::f);
    }

    constexpr int value() const noexcept { return value_; }
    constexpr truth symbol() const noexcept { return value_ == 1 ? truth::t : truth::f; }

    friend constexpr bool operator==(scalar_truth, scalar_truth) = default;

private:
    int value_;
};

constexpr std::array<truth, 2> truth_values{truth::t, truth::f};

/// Output on input t and output on input f.
struct monadic_table {
    truth out_t;
    truth out_f;

    constexpr truth operator()(truth p) const noexcept { return p == truth::t ? out_t : out_f; }
    friend constexpr bool operator==(const monadic_table&, const monadic_table&) = default;
};

/**
 * Outputs on (t,t), (t,f), (f,t), (f,f).
 *
 * The 16 tables are indexed by the bit pattern tt:8 tf:4 ft:2 ff:1, so
 * index 15 is the constant-true gate and index 0 constant-false.
 */
struct dyadic_table {
    truth out_tt;
    truth out_tf;
    truth out_ft;
    truth out_ff;

    constexpr truth operator()(truth p, truth q) const noexcept {
        if (p == truth::t) return q == truth::t ? out_tt : out_tf;
        return q == truth::t ? out_ft : out_ff;
    }

    constexpr unsigned index() const noexcept {
        return (static_cast<unsigned>(out_tt) << 3) | (static_cast<unsigned>(out_tf) << 2) |
               (static_cast<unsigned>(out_ft) << 1) | static_cast<unsigned>(out_ff);
    }

    static constexpr dyadic_table from_index(unsigned i) noexcept {
        auto bit = [i](unsigned b) { return ((i >> b) & 1u) ? truth::t : truth::f; };
        return {bit(3), bit(2), bit(1), bit(0)};
    }

    /// Four-letter output pattern, e.g. "TFTT" for IMPL.
    std::string pattern() const {
        return {to_char(out_tt), to_char(out_tf), to_char(out_ft), to_char(out_ff)};
    }

    friend constexpr bool operator==(const dyadic_table&, const dyadic_table&) = default;
};

constexpr monadic_table negate(monadic_table m) noexcept { return {!m.out_t, !m.out_f}; }
constexpr dyadic_table negate(dyadic_table d) noexcept {
    return {!d.out_tt, !d.out_tf, !d.out_ft, !d.out_ff};
}

namespace gates {

inline constexpr monadic_table id{truth::t, truth::f};
inline constexpr monadic_table not_{truth::f, truth::t};
inline constexpr monadic_table cid{truth::t, truth::t};
inline constexpr monadic_table cnot{truth::f, truth::f};

inline constexpr dyadic_table impl{truth::t, truth::f, truth::t, truth::t};
inline constexpr dyadic_table or_{truth::t, truth::t, truth::t, truth::f};
inline constexpr dyadic_table and_{truth::t, truth::f, truth::f, truth::f};
inline constexpr dyadic_table equi{truth::t, truth::f, truth::f, truth::t};
inline constexpr dyadic_table xor_{truth::f, truth::t, truth::t, truth::f};
// NAND = N.C and NOR = N.D: negated AND / OR entries.
inline constexpr dyadic_table nand = negate(and_);
inline constexpr dyadic_table nor = negate(or_);

inline constexpr dyadic_table constant_true{truth::t, truth::t, truth::t, truth::t};
inline constexpr dyadic_table constant_false{truth::f, truth::f, truth::f, truth::f};

} // namespace gates

struct named_monadic {
    std::string_view name;
    monadic_table table;
};

struct named_dyadic {
    std::string_view name;
    dyadic_table table;
};

inline constexpr std::array<named_monadic, 4> monadic_gates{{
    {"ID", gates::id},
    {"NOT", gates::not_},
    {"CID", gates::cid},
    {"CNOT", gates::cnot},
}};

inline constexpr std::array<named_dyadic, 7> dyadic_gates{{
    {"IMPL", gates::impl},
    {"OR", gates::or_},
    {"AND", gates::and_},
    {"EQUI", gates::equi},
    {"XOR", gates::xor_},
    {"NAND", gates::nand},
    {"NOR", gates::nor},
}};

inline std::string to_upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

inline std::optional<monadic_table> find_monadic(std::string_view name) {
    const auto key = to_upper(name);
    for (const auto& g : monadic_gates)
        if (g.name == key) return g.table;
    return std::nullopt;
}

inline std::optional<dyadic_table> find_dyadic(std::string_view name) {
    const auto key = to_upper(name);
    for (const auto& g : dyadic_gates)
        if (g.name == key) return g.table;
    return std::nullopt;
}

inline std::optional<std::string> name_of(monadic_table t) {
    for (const auto& g : monadic_gates)
        if (g.table == t) return std::string(g.name);
    return std::nullopt;
}

inline std::optional<std::string> name_of(dyadic_table t) {
    for (const auto& g : dyadic_gates)
        if (g.table == t) return std::string(g.name);
    return std::nullopt;
}

/// Named gate, or the bracketed output pattern for the unnamed dyadic tables.
inline std::string label(dyadic_table t) { return name_of(t).value_or("[" + t.pattern() + "]"); }

/// Table lookup in the +1/-1 arithmetic.
constexpr scalar_truth mon_eval(monadic_table table, scalar_truth w) noexcept {
    return table(w.symbol());
}

constexpr scalar_truth dyad_eval(dyadic_table table, scalar_truth u, scalar_truth v) noexcept {
    return table(u.symbol(), v.symbol());
}

/// Closed-form polynomials of the +1/-1 arithmetic. Only defined for the
/// gates that have one; the tables remain the canonical definition.
namespace polynomial {

constexpr int id(int w) noexcept { return w; }
constexpr int not_(int w) noexcept { return -w; }
constexpr int cid(int w) noexcept { return w * w; }
constexpr int cnot(int w) noexcept { return -w * w; }

constexpr double impl(int u, int v) noexcept {
    const double h = (-u + v) / 2.0;
    return h + (1.0 - h * h) * u * v;
}

constexpr double or_(int u, int v) noexcept {
    const double h = (u + v) / 2.0;
    return h - (1.0 - h * h) * u * v;
}

constexpr double and_(int u, int v) noexcept {
    const double h = (u + v) / 2.0;
    return h + (1.0 - h * h) * u * v;
}

constexpr double equi(int u, int v) noexcept { return u * v; }
constexpr double xor_(int u, int v) noexcept { return -u * v; }

} // namespace polynomial

} // namespace vlogic

#endif // VLOGIC_SCALAR_LOGIC_HPP
