#include "lamstat/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "lamstat/io.hpp"
#include "lamstat/probe.hpp"

namespace lamstat::cli {

namespace {

const char* command_name(Command c) {
    switch (c) {
        case Command::Schedule: return "schedule";
        case Command::Analyze: return "analyze";
        case Command::Qc: return "qc";
        case Command::Generate: return "generate";
        case Command::Simulate: return "simulate";
        case Command::Probe: return "probe";
    }
    return "?";
}

json echo_config(const RunConfig& c) {
    return json{{"command", command_name(c.command)},
                {"input", c.input_path},
                {"format", c.format},
                {"header", c.header},
                {"schedule", c.schedule_id},
                {"theta", c.theta},
                {"margin", c.margin},
                {"method", c.method},
                {"eps", c.epsilon_grid},
                {"tol", c.tolerance},
                {"step_tol", c.step_tolerance},
                {"tail", c.tail_fraction},
                {"seed", c.seed},
                {"trials", c.trials},
                {"n_max", c.n_max},
                {"n", c.length},
                {"process", c.process},
                {"mode", c.sim_mode},
                {"family", c.family},
                {"x0", c.anchor},
                {"fn", c.fn},
                {"domain", json::array({c.domain_lo, c.domain_hi})},
                {"eps0", c.epsilon0},
                {"probe_mode", c.probe_mode},
                {"lipschitz", c.lipschitz},
                {"strict", c.strict}};
}

std::vector<double> grid_or_default(const RunConfig& c) {
    return c.epsilon_grid.empty() ? default_epsilon_grid() : c.epsilon_grid;
}

LambdaSchedule make_lambda_schedule(const RunConfig& c, std::size_t length) {
    if (LambdaSchedule::is_built_in(c.schedule_id)) {
        return LambdaSchedule::built_in(c.schedule_id, length);
    }
    return LambdaSchedule::validate(load_schedule_csv(c.schedule_id, c.header),
                                    std::filesystem::path(c.schedule_id).stem().string());
}

LacunarySchedule make_lacunary_schedule(const RunConfig& c) {
    if (c.theta.empty()) {
        throw Error(ErrorCode::BadConfig, "this run needs --theta (cut list or file)");
    }
    std::vector<std::size_t> cuts;
    if (std::filesystem::exists(c.theta)) {
        cuts = load_cuts_csv(c.theta, c.header);
    } else {
        cuts = parse_cut_list(c.theta);
    }
    return LacunarySchedule::validate(std::move(cuts), c.margin);
}

SequencePrefix load_input(const RunConfig& c) {
    if (c.input_path.empty()) {
        throw Error(ErrorCode::BadConfig, "this run needs --input");
    }
    return parse_sequence_file(c.input_path, format_from_name(c.format), c.header);
}

FunctionSpec make_function(const RunConfig& c) {
    if (c.fn.empty()) throw Error(ErrorCode::BadConfig, "this run needs --fn");
    if (c.fn.rfind("table:", 0) == 0) {
        auto [xs, ys] = load_table_csv(c.fn.substr(6), c.header);
        return FunctionSpec::table(std::move(xs), std::move(ys));
    }
    return FunctionSpec::builtin(c.fn, c.domain_lo, c.domain_hi);
}

EstimateParams estimate_params(const RunConfig& c) {
    EstimateParams p;
    p.epsilon_grid = grid_or_default(c);
    p.tolerance = c.tolerance;
    p.tail_fraction = c.tail_fraction;
    return p;
}

QcParams qc_params(const RunConfig& c) {
    QcParams p;
    p.epsilon_grid = grid_or_default(c);
    p.step_tolerance = c.step_tolerance;
    p.density_tolerance = c.tolerance;
    p.tail_fraction = c.tail_fraction;
    return p;
}

json run_schedule(const RunConfig& c) {
    if (!c.theta.empty()) {
        return schedule_summary(make_lacunary_schedule(c));
    }
    const std::size_t length = c.length > 0 ? c.length : 100;
    return schedule_summary(make_lambda_schedule(c, length));
}

json run_analyze(const RunConfig& c, bool& inconclusive) {
    const SequencePrefix prefix = load_input(c);
    const Method method = method_from_name(c.method);
    ConvergenceReport report;
    if (method == Method::STheta) {
        report = estimate_limit(prefix, make_lacunary_schedule(c), estimate_params(c));
    } else {
        report = estimate_limit(prefix, make_lambda_schedule(c, prefix.size()), method,
                                estimate_params(c));
    }
    inconclusive = (report.verdict == Verdict::Inconclusive);
    return to_json(report);
}

json run_qc(const RunConfig& c, bool& inconclusive) {
    const SequencePrefix prefix = load_input(c);
    const QcDiagnostic diag =
        qc_profile(prefix, make_lambda_schedule(c, prefix.size()), qc_params(c));
    inconclusive = (diag.verdict == QcVerdict::Inconclusive);
    return to_json(diag);
}

std::vector<int> bits_from_prefix(const SequencePrefix& prefix) {
    std::vector<int> bits(prefix.size());
    for (std::size_t k = 1; k <= prefix.size(); ++k) {
        const double v = prefix.value(k);
        if (v != 0.0 && v != 1.0) {
            throw Error(ErrorCode::NonBitValue, "value at index " + std::to_string(k) +
                                                    " is not a bit", k);
        }
        bits[k - 1] = static_cast<int>(v);
    }
    return bits;
}

json run_generate(const RunConfig& c) {
    SequencePrefix out = SequencePrefix::from({0.0});
    if (c.family == "bit-average") {
        const std::vector<int> bits = c.input_path.empty()
                                          ? gen_random_bits(c.length > 0 ? c.length : 1000, c.seed)
                                          : bits_from_prefix(load_input(c));
        out = gen_bit_average(bits);
    } else if (c.family == "interleave") {
        out = gen_interleave(load_input(c), c.anchor);
    } else if (c.family == "pair-embedding") {
        if (c.input_path.empty()) {
            throw Error(ErrorCode::BadConfig, "pair-embedding needs --input pairs.csv");
        }
        out = gen_pair_embedding(load_pairs_csv(c.input_path, c.header)).sequence;
    } else if (c.family == "sqrt") {
        out = gen_sqrt(c.length > 0 ? c.length : 1000);
    } else if (c.family == "jump-squares") {
        out = gen_jump_at_squares(c.length > 0 ? c.length : 1000);
    } else {
        throw Error(ErrorCode::BadConfig, "unknown family: " + c.family);
    }
    return json{{"family", c.family}, {"length", out.size()}, {"values", out.values()}};
}

json run_simulate(const RunConfig& c) {
    const std::size_t n_max = c.n_max > 0 ? c.n_max : 6;
    const bool survivor = (c.process == "example1" || c.process == "survivor");
    const bool three = (c.process == "example2" || c.process == "three-split");
    if (!survivor && !three) {
        throw Error(ErrorCode::BadConfig, "process must be example1|survivor|example2|three-split");
    }
    if (c.sim_mode == "exact") {
        if (!survivor) {
            throw Error(ErrorCode::BadConfig, "exact mode exists only for the survivor process");
        }
        return to_json(exact_survivor_sweep(n_max));
    }
    if (c.sim_mode != "mc") {
        throw Error(ErrorCode::BadConfig, "mode must be mc or exact");
    }
    return to_json(survivor ? simulate_survivor(n_max, c.trials, c.seed)
                            : simulate_three_split(n_max, c.trials, c.seed));
}

json run_probe(const RunConfig& c) {
    const FunctionSpec f = make_function(c);
    if (c.probe_mode == "witness") {
        WitnessParams params;
        params.image_qc = qc_params(c);
        const std::size_t n_max = c.n_max > 0 ? c.n_max : 50;
        return to_json(find_nonuniform_witness(f, c.epsilon0, n_max, params));
    }
    if (c.probe_mode == "modulus") {
        std::vector<double> deltas = grid_or_default(c);
        const double min_delta = *std::min_element(deltas.begin(), deltas.end());
        return to_json(modulus_estimate(f, std::move(deltas), min_delta / 8.0));
    }
    if (c.probe_mode == "preserve") {
        const std::size_t count = c.n_max > 0 ? c.n_max : 10;
        const std::size_t length = c.length > 0 ? c.length : 500;
        std::vector<SequencePrefix> family;
        family.reserve(count);
        const double width = f.hi() - f.lo();
        for (std::size_t i = 0; i < count; ++i) {
            if (c.family.empty() || c.family == "qc-walk") {
                // shrinking-step walk pinned to the middle half of the domain
                SplitMix64 rng = SplitMix64::substream(c.seed, 0x70beull + i);
                const double scale =
                    width / (4.0 * std::log(static_cast<double>(length) + 1.0));
                std::vector<double> values(length);
                double x = f.lo() + width / 2.0;
                for (std::size_t k = 0; k < length; ++k) {
                    values[k] = x;
                    x += (2.0 * rng.next_unit() - 1.0) * scale / static_cast<double>(k + 1);
                }
                family.push_back(SequencePrefix::from(std::move(values)));
            } else if (c.family == "bit-average") {
                // bit averages live in [0,1]; squeeze into the middle half
                const SequencePrefix a = gen_bit_average(gen_random_bits(length, c.seed + i));
                std::vector<double> values(a.size());
                for (std::size_t k = 1; k <= a.size(); ++k) {
                    values[k - 1] = f.lo() + width * (0.25 + 0.5 * a.value(k));
                }
                family.push_back(SequencePrefix::from(std::move(values)));
            } else {
                throw Error(ErrorCode::BadConfig, "preserve family must be qc-walk or bit-average");
            }
        }
        const LambdaSchedule schedule = LambdaSchedule::is_built_in(c.schedule_id)
                                            ? LambdaSchedule::built_in(c.schedule_id, length)
                                            : make_lambda_schedule(c, length);
        std::optional<double> k_override;
        if (c.lipschitz > 0.0) k_override = c.lipschitz;
        return to_json(ward_preservation_test(f, family, schedule, qc_params(c), k_override));
    }
    throw Error(ErrorCode::BadConfig, "probe mode must be witness|modulus|preserve");
}

} // namespace

std::string resolve_out_path(const std::string& out_path) {
    if (out_path.empty()) return out_path;
    const std::filesystem::path p(out_path);
    if (p.is_absolute()) return out_path;
    if (const char* dir = std::getenv("LAMSTAT_OUT_DIR"); dir && *dir) {
        return (std::filesystem::path(dir) / p).string();
    }
    return out_path;
}

RunResult execute(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    bool inconclusive = false;
    json payload;
    switch (config.command) {
        case Command::Schedule: payload = run_schedule(config); break;
        case Command::Analyze: payload = run_analyze(config, inconclusive); break;
        case Command::Qc: payload = run_qc(config, inconclusive); break;
        case Command::Generate: payload = run_generate(config); break;
        case Command::Simulate: payload = run_simulate(config); break;
        case Command::Probe: payload = run_probe(config); break;
    }
    const auto stop = std::chrono::steady_clock::now();
    const double wall_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
            .count();

    RunResult result;
    result.report =
        make_report(command_name(config.command), echo_config(config), std::move(payload), wall_ms);
    result.exit_code = (config.strict && inconclusive) ? 1 : 0;
    return result;
}

RunResult run(const RunConfig& config) {
    RunResult result;
    try {
        result = execute(config);
    } catch (const Error& e) {
        result.report = make_report(command_name(config.command), echo_config(config),
                                    json{{"error", {{"code", error_code_name(e.code())},
                                                    {"message", e.what()},
                                                    {"index", e.index()}}}},
                                    0.0);
        result.exit_code = 2;
    }

    const std::string out = resolve_out_path(config.out_path);
    if (config.command == Command::Generate && result.exit_code != 2) {
        // generate emits the sequence itself as CSV
        const auto& values = result.report["payload"]["values"];
        std::string text;
        for (const auto& v : values) text += v.dump() + "\n";
        if (out.empty()) {
            std::cout << text;
        } else {
            std::ofstream file(out);
            if (!file) {
                std::cerr << "cannot write " << out << "\n";
                result.exit_code = 2;
                return result;
            }
            file << text;
        }
        return result;
    }

    const std::string text = result.report.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(out);
        if (!file) {
            std::cerr << "cannot write " << out << "\n";
            result.exit_code = 2;
            return result;
        }
        file << text;
    }
    return result;
}

} // namespace lamstat::cli
