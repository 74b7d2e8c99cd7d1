#pragma once

#include <cstddef>
#include <vector>

#include "lamstat/summability.hpp"

namespace lamstat {

// Delta x_n = x_{n+1} - x_n, length N-1
SequencePrefix diff(const SequencePrefix& prefix);

enum class QcVerdict { QcEvidence, LambdaQcOnlyEvidence, Neither, Inconclusive };

const char* qc_verdict_name(QcVerdict verdict);

struct QcParams {
    std::vector<double> epsilon_grid = default_epsilon_grid();
    double step_tolerance = kDefaultTolerance;
    double density_tolerance = kDefaultTolerance;
    double tail_fraction = kDefaultTailFraction;
    double divergence_factor = kDefaultDivergenceFactor;
};

/// Evidence over a finite prefix: ordinary quasi-Cauchyness is sup-smallness
/// of the recent steps, the lambda-statistical kind is window-density
/// smallness of the same steps.
struct QcDiagnostic {
    double max_recent_step = 0.0;
    std::vector<DensityProfile> delta_density_profiles; // one per grid epsilon, center 0
    QcVerdict verdict = QcVerdict::Inconclusive;
    std::size_t tail_start = 1;   // first delta index inside the tail window
    std::size_t step_count = 0;   // N - 1
};

QcDiagnostic qc_profile(const SequencePrefix& prefix, const LambdaSchedule& schedule,
                        const QcParams& params = {});

} // namespace lamstat
