#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vlogic/json_io.hpp"
#include "vlogic/verify.hpp"
#include "vlogic/vlogic.hpp"

namespace vlogic::cli {
namespace {

using json = nlohmann::json;

struct options {
    // shared
    double tol = -1; // < 0: command default
    std::uint64_t seed = 1;
    std::string out_file;

    // basis
    std::string canonical_name;
    std::size_t dim = 0;
    double epsilon = 0;

    // op / sqrt-not / diagnose / euler
    std::string basis_file;
    std::string gate;
    std::string oracle_file;
    int arity = 0;
    std::vector<double> v_samples;
    std::vector<int> ks;
};

void emit(const json& payload, const options& opt, std::ostream& out) {
    const auto text = payload.dump(2);
    if (opt.out_file.empty()) {
        out << text << '\n';
        return;
    }
    std::ofstream file(opt.out_file);
    if (!file) throw error("cannot write '" + opt.out_file + "'");
    file << text << '\n';
}

double tol_or(const options& opt, double fallback) { return opt.tol < 0 ? fallback : opt.tol; }

truth_basis load_basis(const options& opt) {
    return json_io::basis_from_json(json_io::read_file(opt.basis_file), tol_or(opt, default_basis_tol));
}

json complex_json(complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

int cmd_basis(const options& opt, std::ostream& out) {
    truth_basis b = !opt.canonical_name.empty() ? canonical_basis(opt.canonical_name)
                                                : random_basis(opt.dim, opt.epsilon, opt.seed);
    emit(json_io::to_json(b), opt, out);
    return exit_ok;
}

int cmd_op(const options& opt, std::ostream& out) {
    const auto b = load_basis(opt);
    const auto gate = find_gate(opt.gate);
    auto payload = json_io::to_json(gate_operator(b, gate));
    payload["gate"] = gate.name;
    payload["arity"] = gate.arity;
    emit(payload, opt, out);
    return exit_ok;
}

int cmd_sqrt_not(const options& opt, std::ostream& out, std::ostream& err) {
    const auto b = load_basis(opt);
    const auto pair = sqrt_not(b);
    json payload{{"A", json_io::to_json(pair.A)},
                 {"B", json_io::to_json(pair.B)},
                 {"alpha", complex_json(pair.alpha)},
                 {"beta", complex_json(pair.beta)},
                 {"pass", pair.residuals.all_pass()}};
    json report = json::object();
    for (const auto& c : pair.residuals.checks()) report[c.name] = c.residual;
    payload["report"] = std::move(report);
    emit(payload, opt, out);
    if (!pair.residuals.all_pass()) {
        err << "sqrt-not: an identity residual exceeded " << srn_tol << '\n';
        return exit_failed;
    }
    return exit_ok;
}

int cmd_diagnose(const options& opt, std::ostream& out, std::ostream& err) {
    const auto b = load_basis(opt);
    const auto oracle = json_io::matrix_from_json(json_io::read_file(opt.oracle_file));
    int arity = opt.arity;
    if (arity == 0) {
        if (oracle.cols() == b.dim()) arity = 1;
        else if (oracle.cols() == b.dim() * b.dim()) arity = 2;
        else throw dimension_mismatch("cannot infer arity from a " + oracle.shape() + " oracle");
    }
    const double tol = tol_or(opt, default_classify_tol);
    const auto result = arity == 1 ? classify_monadic(probe_monadic(oracle, b), tol)
                                   : classify_dyadic(probe_dyadic(oracle, b), tol);
    auto payload = json_io::to_json(result);
    payload["arity"] = arity;
    emit(payload, opt, out);
    if (!result.identified()) {
        err << "diagnose: verdict " << result.verdict << " (nearest reference at distance "
            << result.distance << ")\n";
        return exit_failed;
    }
    return exit_ok;
}

int cmd_euler(const options& opt, std::ostream& out, std::ostream& err) {
    const auto b = load_basis(opt);
    const auto ctx = make_logic_algebra<long double>(b);
    const auto vs = opt.v_samples.empty() ? suites::default_v_samples() : opt.v_samples;
    const auto ks = opt.ks.empty() ? std::vector<int>{3} : opt.ks;
    const auto report = verify_euler_suite(ctx, vs, ks, {}, tol_or(opt, euler_tol));
    emit(json_io::to_json(report), opt, out);
    if (!report.all_pass()) {
        err << "euler: at least one identity exceeded its tolerance\n";
        return exit_failed;
    }
    return exit_ok;
}

int cmd_verify(const options& opt, std::ostream& out, std::ostream& err) {
    const std::size_t dim = opt.dim == 0 ? 4 : opt.dim;
    const auto report = suites::run_all(dim, opt.seed, tol_or(opt, euler_tol));
    auto payload = json_io::to_json(report);
    payload["dim"] = dim;
    payload["seed"] = opt.seed;
    emit(payload, opt, out);
    for (const auto& c : report.checks())
        if (!c.pass()) err << "verify: FAIL " << c.name << " residual " << c.residual << '\n';
    return report.all_pass() ? exit_ok : exit_failed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vector-logic operators, square roots of NOT, gate diagnosis and matrix Euler identities",
                 "vlogic"};
    app.require_subcommand(1);
    options opt;

    auto common = [&opt](CLI::App* sub, const std::string& tol_help) {
        sub->add_option("--tol", opt.tol, tol_help)->check(CLI::PositiveNumber);
        sub->add_option("--out", opt.out_file, "Write the JSON payload to FILE instead of stdout");
    };

    auto* basis = app.add_subcommand("basis", "Emit a canonical or seeded random truth basis");
    auto* canon = basis->add_option("--canonical", opt.canonical_name, "SET1, SET2 or DIM4");
    auto* dim = basis->add_option("--dim", opt.dim, "Dimension Q of a random basis")->check(CLI::PositiveNumber);
    basis->add_option("--epsilon", opt.epsilon, "Overlap <s,n> of a random basis");
    basis->add_option("--seed", opt.seed, "Seed of the random basis");
    canon->excludes(dim);
    common(basis, "Input tolerance (unused for generated bases)");

    auto* op = app.add_subcommand("op", "Emit the matrix of a named gate");
    op->add_option("--basis", opt.basis_file, "Basis JSON file")->required();
    op->add_option("--gate", opt.gate, "ID, NOT, CID, CNOT, IMPL, OR, AND, EQUI, XOR, NAND or NOR")->required();
    common(op, "Basis input tolerance (default 1e-10)");

    auto* srn = app.add_subcommand("sqrt-not", "Emit both square roots of NOT and their identity residuals");
    srn->add_option("--basis", opt.basis_file, "Basis JSON file")->required();
    common(srn, "Basis input tolerance (default 1e-10)");

    auto* diag = app.add_subcommand("diagnose", "Identify a hidden gate from a single preprocessed probe");
    diag->add_option("--oracle", opt.oracle_file, "Oracle matrix JSON file")->required();
    diag->add_option("--basis", opt.basis_file, "Basis JSON file")->required();
    diag->add_option("--arity", opt.arity, "1 or 2 (inferred from the oracle shape when omitted)")
        ->check(CLI::IsMember({1, 2}));
    common(diag, "Classification tolerance (default 1e-6)");

    auto* euler = app.add_subcommand("euler", "Check the matrix Euler identities on X = Pi v");
    euler->add_option("--basis", opt.basis_file, "Basis JSON file")->required();
    euler->add_option("--v", opt.v_samples, "Comma-separated v samples")->delimiter(',');
    euler->add_option("--k", opt.ks, "Comma-separated De Moivre exponents (default 3)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    common(euler, "Identity tolerance (default 1e-8)");

    auto* verify = app.add_subcommand("verify", "Run every invariant suite at one dimension");
    verify->add_option("--dim", opt.dim, "Dimension Q (default 4)")->check(CLI::Range(2, 64));
    verify->add_option("--seed", opt.seed, "Base seed");
    common(verify, "Euler identity tolerance (default 1e-8)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "vlogic: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (basis->parsed()) {
            if (opt.canonical_name.empty() && opt.dim == 0) {
                err << "vlogic basis: give --canonical NAME or --dim Q\n";
                return exit_usage;
            }
            return cmd_basis(opt, out);
        }
        if (op->parsed()) return cmd_op(opt, out);
        if (srn->parsed()) return cmd_sqrt_not(opt, out, err);
        if (diag->parsed()) return cmd_diagnose(opt, out, err);
        if (euler->parsed()) return cmd_euler(opt, out, err);
        if (verify->parsed()) return cmd_verify(opt, out, err);
    } catch (const std::exception& e) {
        err << "vlogic: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace vlogic::cli
