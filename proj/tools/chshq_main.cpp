// chshq: construct, evaluate, and audit classical strategies for CHSH_q
// games over prime fields.
//
// Exit codes: 0 ok, 2 bad input, 3 construction unsupported, 4 malformed
// document, 5 bound violation, 6 cap refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chshq/documents.hpp"

namespace {

using namespace chshq;

constexpr int kOk = 0;
constexpr int kBadInput = 2;
constexpr int kUnsupported = 3;
constexpr int kMalformedDocument = 4;
constexpr int kBoundViolation = 5;
constexpr int kCapRefusal = 6;

void emit(const nlohmann::json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << doc.dump(2) << "\n";
}

int cmd_construct(std::uint64_t p_value, const std::string& out_path, unsigned threads) {
    PrimeModulus p(p_value);
    auto [strategy, report] = build_strategy(p, threads);
    save_strategy(strategy, out_path);
    std::cout << construction_to_json(report).dump(2) << "\n";
    std::cerr << "strategy written to " << out_path << "\n";
    return kOk;
}

int cmd_evaluate(std::uint64_t p_value, const std::string& path, const std::string& builtin,
                 unsigned threads) {
    DeterministicStrategy strategy = [&] {
        if (!path.empty()) return load_strategy(path);
        PrimeModulus p(p_value);
        if (builtin == "trivial") return trivial_strategy(p);
        if (builtin == "explicit") return construct_strategy(p).strategy;
        throw std::invalid_argument("unknown builtin strategy: " + builtin);
    }();
    if (!path.empty() && p_value != 0 && p_value != strategy.q.value())
        throw std::invalid_argument("--p does not match the document's q");

    EvaluationReport report = evaluate(strategy, threads);
    std::cout << evaluation_to_json(report).dump(2) << "\n";
    std::cerr << "evaluated " << report.q << "^2 input pairs in " << report.elapsed_seconds
              << " s\n";
    return kOk;
}

int cmd_audit(std::uint64_t p_value, unsigned threads, const std::string& format,
              const std::string& out_path) {
    ConstructionParams params = derive_params(PrimeModulus(p_value));
    AuditReport report = audit(params, threads);

    if (format == "csv") {
        std::string csv = "k,band,solution_count\n";
        for (const KCensusRow& row : k_census(params)) {
            csv += std::to_string(row.k);
            csv += ',';
            csv += band_name(row.band);
            csv += ',';
            csv += std::to_string(row.solution_count);
            csv += '\n';
        }
        if (out_path.empty()) {
            std::cout << csv;
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot write " + out_path);
            out << csv;
        }
    } else {
        emit(audit_to_json(report), out_path);
    }

    bool flags_hold = params.p1_gt_30 && params.bound_p1sq_lt_p2 && params.bound_sandwich;
    if (report.middle_band_violations > 0 ||
        (flags_hold && int_at_least(report.r_emp, report.r_final_bound)))
        return kBoundViolation;
    return kOk;
}

int cmd_oracle(std::uint64_t q_value, std::uint64_t cap, unsigned threads) {
    OracleResult result = optimal_classical_value(PrimeModulus(q_value), cap, threads);
    std::cout << oracle_to_json(result).dump(2) << "\n";
    return kOk;
}

int cmd_bounds(std::uint64_t q_value) {
    if (q_value < 2) throw std::invalid_argument("bounds requires q >= 2");
    nlohmann::json doc{{"q", q_value}, {"quantum_upper_bound", quantum_upper_bound(q_value)}};
    if (is_prime(q_value)) {
        PrimeModulus p(q_value);
        doc["prime"] = true;
        doc["trivial_win_count"] = 2 * q_value - 1;
        doc["trivial_probability"] = static_cast<double>(2 * q_value - 1) /
                                     (static_cast<double>(q_value) * static_cast<double>(q_value));
        doc["classical_guarantee"] = guarantee_to_json(classical_guarantee(p));
    } else {
        doc["prime"] = false;
        doc["note"] = "q is not prime; the quantum bound is a formula value only";
    }
    std::cout << doc.dump(2) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CHSH_q classical strategies over prime fields"};
    app.require_subcommand(1);

    std::uint64_t p_value = 0, q_value = 0, cap = 7;
    unsigned threads = 0;
    std::string out_path, strategy_path, builtin, format = "json";

    CLI::App* construct = app.add_subcommand(
        "construct", "Build the explicit strategy for prime p and report its statistics");
    construct->add_option("--p", p_value, "prime modulus")->required();
    construct->add_option("--out", out_path, "strategy document path")->required();
    construct->add_option("--threads", threads, "worker threads (0 = all)");

    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "Exact win count of a strategy over all q^2 input pairs");
    evaluate->add_option("--p", p_value, "prime modulus (required with --builtin)");
    evaluate->add_option("--path", strategy_path, "strategy document to evaluate");
    evaluate->add_option("--builtin", builtin, "one of: trivial, explicit");
    evaluate->add_option("--threads", threads, "worker threads (0 = all)");

    CLI::App* audit_cmd = app.add_subcommand(
        "audit", "Duplicate-slope census and bound comparisons for prime p");
    audit_cmd->add_option("--p", p_value, "prime modulus")->required();
    audit_cmd->add_option("--threads", threads, "worker threads (0 = all)");
    audit_cmd->add_option("--format", format, "json (report) or csv (per-k census)")
        ->check(CLI::IsMember({"json", "csv"}));
    audit_cmd->add_option("--out", out_path, "write output here instead of stdout");

    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "Exact optimal classical value by exhaustive scan (tiny q)");
    oracle_cmd->add_option("--q", q_value, "prime field size")->required();
    oracle_cmd->add_option("--cap", cap, "largest q the scan will accept");
    oracle_cmd->add_option("--threads", threads, "worker threads (0 = all)");

    CLI::App* bounds = app.add_subcommand(
        "bounds", "Quantum upper bound, trivial value, and classical guarantee for q");
    bounds->add_option("--q", q_value, "field size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (construct->parsed()) return cmd_construct(p_value, out_path, threads);
        if (evaluate->parsed()) {
            if (strategy_path.empty() && builtin.empty())
                throw std::invalid_argument("evaluate needs --path or --builtin");
            if (strategy_path.empty() && p_value == 0)
                throw std::invalid_argument("--builtin requires --p");
            return cmd_evaluate(p_value, strategy_path, builtin, threads);
        }
        if (audit_cmd->parsed()) return cmd_audit(p_value, threads, format, out_path);
        if (oracle_cmd->parsed()) return cmd_oracle(q_value, cap, threads);
        if (bounds->parsed()) return cmd_bounds(q_value);
    } catch (const DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformedDocument;
    } catch (const ConstructionUnsupportedError& e) {
        std::cerr << "error: " << e.what() << " (p = " << e.p() << ")\n";
        return kUnsupported;
    } catch (const CapExceededError& e) {
        std::cerr << "error: refusing to scan q = " << e.q() << " with cap " << e.cap()
                  << "; estimated " << e.estimated_ops() << " table-steps\n";
        return kCapRefusal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kBadInput;
}
