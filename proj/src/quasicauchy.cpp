#include "lamstat/quasicauchy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lamstat {

SequencePrefix diff(const SequencePrefix& prefix) {
    if (prefix.size() < 2) {
        throw Error(ErrorCode::PrefixTooShort, "difference needs at least two terms");
    }
    std::vector<double> out(prefix.size() - 1);
    for (std::size_t n = 1; n < prefix.size(); ++n) {
        out[n - 1] = prefix.value(n + 1) - prefix.value(n);
    }
    return SequencePrefix::from(std::move(out));
}

const char* qc_verdict_name(QcVerdict verdict) {
    switch (verdict) {
        case QcVerdict::QcEvidence: return "QC_EVIDENCE";
        case QcVerdict::LambdaQcOnlyEvidence: return "LAMBDA_QC_ONLY_EVIDENCE";
        case QcVerdict::Neither: return "NEITHER";
        case QcVerdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

QcDiagnostic qc_profile(const SequencePrefix& prefix, const LambdaSchedule& schedule,
                        const QcParams& params) {
    if (params.epsilon_grid.empty()) {
        throw Error(ErrorCode::BadConfig, "epsilon grid must be non-empty");
    }
    if (!(params.tail_fraction > 0.0) || params.tail_fraction > 1.0) {
        throw Error(ErrorCode::BadConfig, "tail_fraction must lie in (0, 1]");
    }

    const SequencePrefix steps = diff(prefix);
    const std::size_t step_count = steps.size();

    QcDiagnostic diag;
    diag.step_count = step_count;

    // tail sized from the prefix length, clamped to the available steps
    auto tail = static_cast<std::size_t>(
        std::ceil(params.tail_fraction * static_cast<double>(prefix.size())));
    tail = std::clamp<std::size_t>(tail, 1, step_count);
    diag.tail_start = step_count - tail + 1;

    double max_step = 0.0;
    for (std::size_t k = diag.tail_start; k <= step_count; ++k) {
        max_step = std::max(max_step, std::abs(steps.value(k)));
    }
    diag.max_recent_step = max_step;

    bool densities_small = true; // max over tail <= density tolerance, for every eps
    bool some_row_stuck = false; // min over tail >= factor * tolerance, for some eps
    for (double eps : params.epsilon_grid) {
        DensityProfile profile = lambda_density(steps, schedule, 0.0, eps);
        double hi = 0.0, lo = std::numeric_limits<double>::infinity();
        for (std::size_t k = diag.tail_start; k <= step_count; ++k) {
            hi = std::max(hi, profile.densities[k - 1]);
            lo = std::min(lo, profile.densities[k - 1]);
        }
        densities_small = densities_small && hi <= params.density_tolerance;
        some_row_stuck =
            some_row_stuck || lo >= params.divergence_factor * params.density_tolerance;
        diag.delta_density_profiles.push_back(std::move(profile));
    }

    if (max_step <= params.step_tolerance) {
        diag.verdict = QcVerdict::QcEvidence;
    } else if (densities_small) {
        diag.verdict = QcVerdict::LambdaQcOnlyEvidence;
    } else if (some_row_stuck) {
        diag.verdict = QcVerdict::Neither;
    } else {
        diag.verdict = QcVerdict::Inconclusive;
    }
    return diag;
}

} // namespace lamstat
