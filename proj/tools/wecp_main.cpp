// Command-line surface for the W-state concentration toolkit: single-point
// reports, parameter sweeps, recursion-depth studies, and the oracle
// cross-check gate.
//
// Exit codes: 0 success, 1 oracle deviation, 2 invalid input, 3 I/O failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wecp/crosscheck.hpp"
#include "wecp/metrics.hpp"
#include "wecp/protocol.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOracleDeviation = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitIoFailure = 3;

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Accept either a full (alpha, beta, gamma) triple (auto-normalized) or
// (alpha, gamma) with beta inferred from normalization.
wecp::WCoefficients coefficients_from(double alpha, std::optional<double> beta, double gamma) {
    if (beta) {
        return wecp::WCoefficients::normalized(alpha, *beta, gamma);
    }
    const double b2 = 1.0 - alpha * alpha - gamma * gamma;
    if (b2 <= 0.0) {
        throw wecp::DegenerateCoefficientsError(
            "alpha^2 + gamma^2 must stay below 1 when beta is inferred");
    }
    return wecp::WCoefficients{alpha, std::sqrt(b2), gamma};
}

json branch_json(const wecp::Branch& br) {
    return json{{"outcome", br.outcome},
                {"probability", br.probability},
                {"posterior", {br.posterior.a, br.posterior.b, br.posterior.c}},
                {"is_success", br.is_success}};
}

int cmd_report(double alpha, std::optional<double> beta, double gamma) {
    const wecp::WCoefficients w = coefficients_from(alpha, beta, gamma);
    const wecp::RoundReport round = wecp::run_round_one(w);
    const wecp::EfficiencyReport eff = wecp::efficiencies(w);

    json branches = json::array();
    for (const auto& br : round.branches) branches.push_back(branch_json(br));

    json out{
        {"input", {{"alpha", w.a}, {"beta", w.b}, {"gamma", w.c}}},
        {"round_one", {{"p0", round.branches[0].probability},
                       {"p1", round.branches[1].probability},
                       {"p2", round.branches[2].probability},
                       {"p3", round.branches[3].probability},
                       {"branches", branches}}},
        {"concurrence_before", {{"c_ab", eff.before.c_ab},
                                {"c_ac", eff.before.c_ac},
                                {"c_a_bc", eff.before.c_a_bc},
                                {"three_tangle", eff.before.three_tangle}}},
        {"concurrence_after", {{"c_ab", eff.after.c_ab},
                               {"c_ac", eff.after.c_ac},
                               {"c_a_bc", eff.after.c_a_bc}}},
        {"eta", {{"eta_ab", eff.eta_ab}, {"eta_ac", eff.eta_ac}, {"eta_a_bc", eff.eta_a_bc}}},
    };
    json warnings = json::array();
    for (const auto& [name, value] :
         {std::pair{"eta_ab", eff.eta_ab}, {"eta_ac", eff.eta_ac}, {"eta_a_bc", eff.eta_a_bc}}) {
        if (value > 1.0 + 1e-9) {
            warnings.push_back(std::string(name) + " exceeds 1");
        }
    }
    out["warnings"] = warnings;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

struct SweepConfig {
    double gamma = 0.0;
    double alpha_min = 0.0;
    double alpha_max = 0.0;
    int steps = 0;
    std::string quantity;
    int depth = 1;
};

double evaluate_quantity(const SweepConfig& cfg, double alpha) {
    const double b2 = 1.0 - alpha * alpha - cfg.gamma * cfg.gamma;
    const wecp::WCoefficients w{alpha, std::sqrt(b2), cfg.gamma};
    if (cfg.quantity == "p0") {
        return wecp::run_round_one(w).branches[0].probability;
    }
    if (cfg.quantity == "total_success") {
        return wecp::recurse(w, cfg.depth).total_success_probability;
    }
    const wecp::EfficiencyReport eff = wecp::efficiencies(w);
    if (cfg.quantity == "eta_ab") return eff.eta_ab;
    if (cfg.quantity == "eta_ac") return eff.eta_ac;
    if (cfg.quantity == "eta_a_bc") return eff.eta_a_bc;
    throw wecp::Error("unknown quantity: " + cfg.quantity);
}

// Grids sample step midpoints, so exact endpoints (where formulas can
// degenerate) are never evaluated.
std::vector<double> sweep_grid(const SweepConfig& cfg) {
    std::vector<double> alphas;
    alphas.reserve(cfg.steps);
    const double width = (cfg.alpha_max - cfg.alpha_min) / cfg.steps;
    for (int i = 0; i < cfg.steps; ++i) {
        alphas.push_back(cfg.alpha_min + (i + 0.5) * width);
    }
    return alphas;
}

void validate_sweep(const SweepConfig& cfg) {
    if (!(cfg.gamma > 0.0 && cfg.gamma < 1.0)) {
        throw wecp::DegenerateCoefficientsError("gamma must lie in (0, 1)");
    }
    if (!(cfg.alpha_min >= 0.0 && cfg.alpha_min < cfg.alpha_max)) {
        throw wecp::DegenerateCoefficientsError("need 0 <= alpha-min < alpha-max");
    }
    if (cfg.steps < 2) {
        throw wecp::DegenerateCoefficientsError("steps must be at least 2");
    }
    for (double alpha : sweep_grid(cfg)) {
        if (alpha <= 0.0 || 1.0 - alpha * alpha - cfg.gamma * cfg.gamma <= 0.0) {
            throw wecp::DegenerateCoefficientsError(
                "sweep grid leaves the physical region (beta^2 must stay positive)");
        }
    }
}

int cmd_sweep(const SweepConfig& cfg, const std::string& out_path, const std::string& format) {
    validate_sweep(cfg);
    const std::vector<double> alphas = sweep_grid(cfg);
    std::vector<std::pair<double, double>> rows;  // (alpha_squared, value)
    rows.reserve(alphas.size());
    for (double alpha : alphas) {
        rows.emplace_back(alpha * alpha, evaluate_quantity(cfg, alpha));
    }

    std::string body;
    if (format == "csv") {
        body = "alpha_squared," + cfg.quantity + "\n";
        for (const auto& [a2, v] : rows) {
            body += fmt12(a2) + "," + fmt12(v) + "\n";
        }
    } else {
        json rows_json = json::array();
        for (const auto& [a2, v] : rows) {
            rows_json.push_back({{"alpha_squared", a2}, {"value", v}});
        }
        json out{{"quantity", cfg.quantity},
                 {"gamma", cfg.gamma},
                 {"depth", cfg.depth},
                 {"rows", rows_json}};
        body = out.dump(2) + "\n";
    }

    if (out_path.empty() || out_path == "-") {
        std::cout << body;
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitIoFailure;
    }
    file << body;
    file.close();
    if (!file) {
        std::cerr << "error: failed writing " << out_path << "\n";
        return kExitIoFailure;
    }
    return kExitOk;
}

int cmd_recurse(double alpha, std::optional<double> beta, double gamma, int depth) {
    const wecp::WCoefficients w = coefficients_from(alpha, beta, gamma);
    if (std::abs(w.a) < 1e-12 || std::abs(w.b) < 1e-12 || std::abs(w.c) < 1e-12) {
        throw wecp::DegenerateCoefficientsError(
            "recursion requires all three coefficients nonzero (W-class state)");
    }
    json rows = json::array();
    double previous = 0.0;
    for (int d = 0; d <= depth; ++d) {
        const wecp::RecursionResult r = wecp::recurse(w, d);
        if (r.total_success_probability + 1e-12 < previous) {
            throw wecp::Error("success probability decreased with depth");
        }
        previous = r.total_success_probability;
        rows.push_back({{"depth", d},
                        {"total_success_probability", r.total_success_probability},
                        {"leaves", r.leaves.size()}});
    }
    json out{{"input", {{"alpha", w.a}, {"beta", w.b}, {"gamma", w.c}}}, {"rows", rows}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_oracle(int grid_steps, bool inject_fault) {
    const double perturb = inject_fault ? 1e-9 : 0.0;
    const wecp::CrosscheckReport r1 = wecp::crosscheck_round_one_grid(grid_steps, perturb);
    const wecp::CrosscheckReport r2 = wecp::crosscheck_round_two_grid(grid_steps);
    const double max_dev = std::max(r1.max_deviation, r2.max_deviation);
    std::cout << "round_one points: " << r1.points << ", max deviation: " << fmt12(r1.max_deviation)
              << "\n"
              << "round_two points: " << r2.points << ", max deviation: " << fmt12(r2.max_deviation)
              << "\n"
              << "max deviation: " << fmt12(max_dev) << " (gate: 1e-12)\n";
    return max_dev <= 1e-12 ? kExitOk : kExitOracleDeviation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact simulator for the three-photon W-state concentration protocol"};
    app.require_subcommand(1);

    double alpha = 0.0, gamma = 0.0;
    std::optional<double> beta;
    int depth = 4;

    auto add_point_options = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "coefficient of |VHH>")->required();
        cmd->add_option("--beta", beta,
                        "coefficient of |HVH> (inferred from normalization when omitted)");
        cmd->add_option("--gamma", gamma, "coefficient of |HHV>")->required();
    };

    CLI::App* report = app.add_subcommand("report", "one-point branch/concurrence/eta report");
    add_point_options(report);

    SweepConfig cfg;
    std::string out_path;
    std::string format = "csv";
    CLI::App* sweep = app.add_subcommand("sweep", "alpha sweep at fixed gamma");
    sweep->add_option("--gamma", cfg.gamma)->required();
    sweep->add_option("--alpha-min", cfg.alpha_min)->required();
    sweep->add_option("--alpha-max", cfg.alpha_max)->required();
    sweep->add_option("--steps", cfg.steps)->required();
    sweep->add_option("--quantity", cfg.quantity)
        ->required()
        ->check(CLI::IsMember({"eta_ab", "eta_ac", "eta_a_bc", "p0", "total_success"}));
    sweep->add_option("--depth", cfg.depth, "recursion depth for total_success");
    sweep->add_option("--out", out_path, "output path (default: stdout)");
    sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    CLI::App* recurse_cmd = app.add_subcommand("recurse", "cumulative success by depth");
    add_point_options(recurse_cmd);
    recurse_cmd->add_option("--depth", depth, "maximum recursion depth");

    int grid_steps = 50;
    bool inject_fault = false;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "closed-form vs enumeration cross-check");
    oracle_cmd->add_option("--steps", grid_steps, "grid steps per axis")->check(CLI::Range(2, 500));
    oracle_cmd->add_flag("--inject-fault", inject_fault)->group("");  // test fixture only

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (report->parsed()) return cmd_report(alpha, beta, gamma);
        if (sweep->parsed()) return cmd_sweep(cfg, out_path, format);
        if (recurse_cmd->parsed()) return cmd_recurse(alpha, beta, gamma, depth);
        if (oracle_cmd->parsed()) return cmd_oracle(grid_steps, inject_fault);
    } catch (const wecp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
