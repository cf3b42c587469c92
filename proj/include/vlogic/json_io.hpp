#ifndef VLOGIC_JSON_IO_HPP
#define VLOGIC_JSON_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "vlogic/basis.hpp"
#include "vlogic/diagnosis.hpp"
#include "vlogic/matrix.hpp"
#include "vlogic/report.hpp"

// Wire formats:
//   basis  {"dim": Q, "s": [..], "n": [..]}   (+ "epsilon", "y", "z" on output;
//          the duals are always recomputed on load)
//   matrix {"rows": r, "cols": c, "re": [[..]], "im": [[..]]}, row-major,
//          "im" omitted when identically zero.

namespace vlogic::json_io {

using json = nlohmann::json;

inline json to_json(const truth_basis& b) {
    return json{{"dim", b.dim()}, {"s", b.s()},     {"n", b.n()},
                {"epsilon", b.epsilon()}, {"y", b.y()}, {"z", b.z()}};
}

inline truth_basis basis_from_json(const json& j, double tol = default_basis_tol) {
    if (!j.is_object() || !j.contains("s") || !j.contains("n"))
        throw error("basis JSON needs \"s\" and \"n\" arrays");
    auto s = j.at("s").get<rvector>();
    auto n = j.at("n").get<rvector>();
    if (j.contains("dim")) {
        const auto dim = j.at("dim").get<std::size_t>();
        if (dim != s.size() || dim != n.size())
            throw dimension_mismatch("basis JSON: dim " + std::to_string(dim) +
                                     " does not match vector lengths");
    }
    return make_basis(std::move(s), std::move(n), tol);
}

inline json to_json(const complex_matrix& m) {
    json re = json::array();
    json im = json::array();
    bool any_imag = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json rr = json::array();
        json ii = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            rr.push_back(m(r, c).real());
            ii.push_back(m(r, c).imag());
            any_imag = any_imag || m(r, c).imag() != 0.0;
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ii));
    }
    json out{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}};
    if (any_imag) out["im"] = std::move(im);
    return out;
}

inline complex_matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("re"))
        throw error("matrix JSON needs \"rows\", \"cols\" and \"re\"");
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    if (rows == 0 || cols == 0) throw dimension_mismatch("matrix JSON: empty shape");
    const auto re = j.at("re").get<std::vector<std::vector<double>>>();
    std::vector<std::vector<double>> im;
    if (j.contains("im")) im = j.at("im").get<std::vector<std::vector<double>>>();

    auto check = [&](const std::vector<std::vector<double>>& part, const char* what) {
        if (part.size() != rows) throw dimension_mismatch(std::string("matrix JSON: \"") + what + "\" row count");
        for (const auto& row : part)
            if (row.size() != cols)
                throw dimension_mismatch(std::string("matrix JSON: \"") + what + "\" column count");
    };
    check(re, "re");
    if (!im.empty()) check(im, "im");

    complex_matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = {re[r][c], im.empty() ? 0.0 : im[r][c]};
    if (!m.all_finite()) throw error("matrix JSON has non-finite entries");
    return m;
}

inline json to_json(const gate_signature& s) {
    return json{{"re_s", s.re_s}, {"re_n", s.re_n}, {"im_s", s.im_s},
                {"im_n", s.im_n}, {"residual", s.residual}};
}

inline json to_json(const diagnosis_result& d) {
    return json{{"verdict", d.verdict}, {"signature", to_json(d.signature)}, {"distance", d.distance}};
}

inline json to_json(const identity_check& c) {
    return json{{"identity", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance},
                {"pass", c.pass()}};
}

/// {"pass": bool, "identities": [{"identity", "residual", "tolerance", "pass"}, ...]}
inline json to_json(const identity_report& r) {
    json list = json::array();
    for (const auto& c : r.checks()) list.push_back(to_json(c));
    return json{{"pass", r.all_pass()}, {"identities", std::move(list)}};
}

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw error("'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace vlogic::json_io

#endif // VLOGIC_JSON_IO_HPP
