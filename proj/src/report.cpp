#include "lamstat/report.hpp"

#include "lamstat/version.hpp"

namespace lamstat {

json to_json(const DensityProfile& profile) {
    return json{{"epsilon", profile.epsilon},
                {"center", profile.center},
                {"schedule", profile.schedule_name},
                {"counts", profile.counts},
                {"densities", profile.densities}};
}

json to_json(const LacunaryDensityProfile& profile) {
    return json{{"epsilon", profile.epsilon},
                {"center", profile.center},
                {"counts", profile.counts},
                {"densities", profile.densities}};
}

json to_json(const ConvergenceReport& report) {
    return json{{"method", method_name(report.method)},
                {"schedule", report.schedule_name},
                {"candidate_limit", report.candidate_limit},
                {"epsilon_grid", report.epsilon_grid},
                {"tail_densities", report.tail_max},
                {"tail_min", report.tail_min},
                {"tail_start", report.tail_start},
                {"score_count", report.score_count},
                {"verdict", verdict_name(report.verdict)}};
}

json to_json(const QcDiagnostic& diagnostic) {
    json profiles = json::array();
    for (const auto& p : diagnostic.delta_density_profiles) profiles.push_back(to_json(p));
    return json{{"max_recent_step", diagnostic.max_recent_step},
                {"delta_density_profiles", profiles},
                {"tail_start", diagnostic.tail_start},
                {"step_count", diagnostic.step_count},
                {"verdict", qc_verdict_name(diagnostic.verdict)}};
}

json to_json(const SimulationResult& result) {
    json j{{"mode", result.mode == SimMode::MonteCarlo ? "MONTE_CARLO" : "EXACT"},
           {"trials", result.trials},
           {"seed", result.seed},
           {"n", result.n_values},
           {"estimates", result.estimates},
           {"stderrs", result.stderrs}};
    if (!result.scaled_estimates.empty()) j["scaled_estimates"] = result.scaled_estimates;
    return j;
}

json to_json(const ModulusTable& table) {
    return json{{"deltas", table.deltas},
                {"omegas", table.omegas},
                {"grid_step", table.grid_step}};
}

json to_json(const WitnessReport& report) {
    json pairs = json::array();
    for (const auto& p : report.pairs) {
        pairs.push_back(json{{"n", p.n},
                             {"xi", p.xi},
                             {"eta", p.eta},
                             {"gap", p.gap},
                             {"image_gap", p.image_gap}});
    }
    json j{{"epsilon0", report.epsilon0},
           {"n_max", report.n_max},
           {"found", report.found},
           {"first_missing_n", report.first_missing_n},
           {"finest_gap", report.finest_gap},
           {"pairs", pairs}};
    if (report.embedded) {
        j["embedded"] = json{{"values", report.embedded->sequence.values()},
                             {"anchor_indices", report.embedded->anchor_indices}};
    }
    if (report.image_diagnostic) {
        j["image_diagnostic"] = to_json(*report.image_diagnostic);
    }
    return j;
}

json to_json(const PreservationReport& report) {
    json cases = json::array();
    for (const auto& c : report.cases) {
        cases.push_back(json{{"input", to_json(c.input)},
                             {"image", to_json(c.image)},
                             {"domination_violations", c.domination_violations}});
    }
    json j{{"function", report.function_name},
           {"cases", cases},
           {"domination_pass", report.domination_pass}};
    if (report.lipschitz) j["lipschitz"] = *report.lipschitz;
    return j;
}

json to_json(const InterleaveImageCheck& check) {
    return json{{"anchor_image", check.anchor_image},
                {"image_qc", to_json(check.image_qc)},
                {"image_summability", to_json(check.image_summability)}};
}

json schedule_summary(const LambdaSchedule& schedule) {
    return json{{"kind", "lambda"},
                {"name", schedule.name()},
                {"length", schedule.size()},
                {"lambda_final", schedule.values().back()},
                {"growth_warning", schedule.growth_warning()}};
}

json schedule_summary(const LacunarySchedule& schedule) {
    json lengths = json::array();
    json ratios = json::array();
    for (std::size_t r = 1; r <= schedule.window_count(); ++r) {
        lengths.push_back(schedule.length(r));
        if (r >= 2) ratios.push_back(schedule.ratio(r));
    }
    return json{{"kind", "lacunary"},
                {"cuts", schedule.cuts()},
                {"window_count", schedule.window_count()},
                {"lengths", lengths},
                {"ratios", ratios},
                {"regularity_margin", schedule.regularity_margin()},
                {"regular_flag", schedule.regular_flag()}};
}

json make_report(std::string_view command, json config, json payload, double wall_ms) {
    return json{{"tool", kToolName},
                {"version", kVersion},
                {"command", std::string(command)},
                {"wall_ms", wall_ms},
                {"config", std::move(config)},
                {"payload", std::move(payload)}};
}

json normalize_report(json report) {
    report.erase("wall_ms");
    return report;
}

} // namespace lamstat
