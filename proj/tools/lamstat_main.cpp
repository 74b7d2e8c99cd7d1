#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lamstat/runner.hpp"
#include "lamstat/version.hpp"

namespace {

using lamstat::cli::Command;
using lamstat::cli::RunConfig;

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) grid.push_back(std::stod(token));
    }
    return grid;
}

void add_common_io(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--input", cfg.input_path, "input sequence file");
    cmd->add_option("--format", cfg.format, "input format: csv|jsonl")->default_str("csv");
    cmd->add_flag("--header", cfg.header, "CSV inputs carry a header line");
    cmd->add_option("--out", cfg.out_path, "output path (default stdout; LAMSTAT_OUT_DIR applies)");
}

void add_tolerances(CLI::App* cmd, RunConfig& cfg, std::string& eps_text) {
    cmd->add_option("--eps", eps_text, "comma-separated epsilon grid (default 0.5,0.1,0.02)");
    cmd->add_option("--tol", cfg.tolerance, "density tolerance (default 0.05)");
    cmd->add_option("--tail", cfg.tail_fraction, "tail fraction (default 0.2)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(lamstat::kToolName) +
                 " — windowed summability and quasi-Cauchy diagnostics on sequence prefixes"};
    app.set_version_flag("--version", lamstat::kVersion);
    app.require_subcommand(1);

    RunConfig cfg;
    std::string eps_text;

    auto* schedule = app.add_subcommand("schedule", "validate a lambda or lacunary schedule");
    schedule->add_option("--schedule", cfg.schedule_id,
                         "built-in id (identity|floor-sqrt|log2) or CSV path");
    schedule->add_option("--theta", cfg.theta, "lacunary cuts: comma list or CSV path");
    schedule->add_option("--margin", cfg.margin, "lacunary regularity margin (default 0)");
    schedule->add_option("--n", cfg.length, "materialization length for built-ins");
    schedule->add_flag("--header", cfg.header, "CSV inputs carry a header line");
    schedule->add_option("--out", cfg.out_path, "output path");

    auto* analyze = app.add_subcommand("analyze", "estimate a limit under a summability method");
    add_common_io(analyze, cfg);
    analyze->add_option("--method", cfg.method,
                        "LIM|ST|S_THETA|S_LAMBDA|V_LAMBDA_STRONG|V_LAMBDA_MEAN");
    analyze->add_option("--schedule", cfg.schedule_id, "lambda schedule id or CSV path");
    analyze->add_option("--theta", cfg.theta, "lacunary cuts (S_THETA)");
    analyze->add_option("--margin", cfg.margin, "lacunary regularity margin");
    add_tolerances(analyze, cfg, eps_text);
    analyze->add_flag("--strict", cfg.strict, "exit 1 on INCONCLUSIVE");

    auto* qc = app.add_subcommand("qc", "quasi-Cauchy diagnostics of a sequence prefix");
    add_common_io(qc, cfg);
    qc->add_option("--schedule", cfg.schedule_id, "lambda schedule id or CSV path");
    add_tolerances(qc, cfg, eps_text);
    qc->add_option("--step-tol", cfg.step_tolerance, "max-step tolerance (default 0.05)");
    qc->add_flag("--strict", cfg.strict, "exit 1 on INCONCLUSIVE");

    auto* generate = app.add_subcommand("generate", "construct a named test sequence");
    add_common_io(generate, cfg);
    generate->add_option("--family", cfg.family,
                         "bit-average|interleave|pair-embedding|sqrt|jump-squares")
        ->required();
    generate->add_option("--n", cfg.length, "sequence length for seeded families");
    generate->add_option("--seed", cfg.seed, "random seed (default 0)");
    generate->add_option("--x0", cfg.anchor, "interleave anchor value (default 0)");

    auto* simulate = app.add_subcommand("simulate", "run a stochastic example process");
    simulate->add_option("process", cfg.process, "example1|survivor|example2|three-split")
        ->required();
    simulate->add_option("--n-max", cfg.n_max, "largest group size (default 6)");
    simulate->add_option("--trials", cfg.trials, "Monte Carlo trials per n (default 10000)");
    simulate->add_option("--seed", cfg.seed, "random seed (default 0)");
    simulate->add_option("--mode", cfg.sim_mode, "mc|exact (exact: survivor only, n <= 8)");
    simulate->add_option("--out", cfg.out_path, "output path");

    auto* probe = app.add_subcommand("probe", "uniform/ward continuity probe of a function");
    probe->add_option("--fn", cfg.fn, "square|reciprocal|sin|abs|affine:a,b|table:path")
        ->required();
    probe->add_option("--domain", [&cfg](const std::vector<std::string>& vals) {
        const auto grid = parse_grid(vals.back());
        if (grid.size() != 2) return false;
        cfg.domain_lo = grid[0];
        cfg.domain_hi = grid[1];
        return true;
    }, "domain as lo,hi (default 0,1)");
    probe->add_option("--eps0", cfg.epsilon0, "witness image-gap threshold (default 1)");
    probe->add_option("--n-max", cfg.n_max, "witness scales to search / preserve family size");
    probe->add_option("--mode", cfg.probe_mode, "witness|modulus|preserve (default witness)");
    probe->add_option("--schedule", cfg.schedule_id, "schedule for diagnostics");
    probe->add_option("--family", cfg.family, "preserve mode family: qc-walk|bit-average");
    probe->add_option("--n", cfg.length, "preserve mode prefix length (default 500)");
    probe->add_option("--seed", cfg.seed, "random seed (default 0)");
    probe->add_option("--lipschitz", cfg.lipschitz, "override the declared Lipschitz constant");
    add_tolerances(probe, cfg, eps_text);
    probe->add_option("--step-tol", cfg.step_tolerance, "max-step tolerance (default 0.05)");
    probe->add_flag("--header", cfg.header, "CSV inputs carry a header line");
    probe->add_option("--out", cfg.out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // bad flags fail here, before any computation
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (!eps_text.empty()) {
        try {
            cfg.epsilon_grid = parse_grid(eps_text);
        } catch (const std::exception&) {
            std::cerr << "cannot parse --eps grid: " << eps_text << "\n";
            return 2;
        }
    }

    if (schedule->parsed()) cfg.command = Command::Schedule;
    if (analyze->parsed()) cfg.command = Command::Analyze;
    if (qc->parsed()) cfg.command = Command::Qc;
    if (generate->parsed()) cfg.command = Command::Generate;
    if (simulate->parsed()) cfg.command = Command::Simulate;
    if (probe->parsed()) cfg.command = Command::Probe;

    return lamstat::cli::run(cfg).exit_code;
}
