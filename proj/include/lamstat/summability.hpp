#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lamstat/schedules.hpp"
#include "lamstat/sequence.hpp"

namespace lamstat {

// Finite-scale cutoffs shared by the convergence and quasi-Cauchy verdicts.
inline constexpr double kDefaultTolerance = 0.05;
inline constexpr double kDefaultTailFraction = 0.2;
inline constexpr double kDefaultDivergenceFactor = 10.0;

inline std::vector<double> default_epsilon_grid() { return {0.5, 0.1, 0.02}; }

/// Per-window deviation densities d_n = |{k in I_n : |x_k - L| >= eps}| / lambda_n.
/// `counts` keeps the integer numerators so exact comparisons stay exact.
struct DensityProfile {
    double epsilon = 0.0;
    double center = 0.0;
    std::string schedule_name;
    std::vector<std::size_t> counts;
    std::vector<double> densities;
};

struct LacunaryDensityProfile {
    double epsilon = 0.0;
    double center = 0.0;
    std::vector<std::size_t> counts;    // per window r = 1..R
    std::vector<double> densities;      // count / h_r
};

// t_n(x) = (1/lambda_n) * sum over the window at n
double vp_mean(const SequencePrefix& prefix, const LambdaSchedule& schedule, std::size_t n);

// (1/lambda_n) * sum |x_k - L| over the window at n
double strong_residual(const SequencePrefix& prefix, const LambdaSchedule& schedule,
                       double center, std::size_t n);

DensityProfile lambda_density(const SequencePrefix& prefix, const LambdaSchedule& schedule,
                              double center, double epsilon);

LacunaryDensityProfile lacunary_density(const SequencePrefix& prefix,
                                        const LacunarySchedule& schedule,
                                        double center, double epsilon);

// (x_{n+1} - x_n) / lambda_n for n = 1..N-1
SequencePrefix matrix_a_transform(const SequencePrefix& prefix, const LambdaSchedule& schedule);

enum class Method { Lim, St, STheta, SLambda, VLambdaStrong, VLambdaMean };
enum class Verdict { ConvergedEvidence, DivergedEvidence, Inconclusive };

const char* method_name(Method method);
const char* verdict_name(Verdict verdict);
Method method_from_name(std::string_view name); // throws BadConfig

struct EstimateParams {
    std::vector<double> epsilon_grid = default_epsilon_grid();
    double tail_fraction = kDefaultTailFraction;
    double tolerance = kDefaultTolerance;
    double divergence_factor = kDefaultDivergenceFactor;
};

/// Desk-scale evidence for each limit functional. Scores over the tail are
/// densities for the statistical methods and residuals for LIM / (V,lambda);
/// tail_max is the reported per-epsilon "tail density".
struct ConvergenceReport {
    Method method = Method::Lim;
    std::string schedule_name;
    double candidate_limit = 0.0;
    std::vector<double> epsilon_grid;
    std::vector<double> tail_max;   // per-epsilon max score over the tail
    std::vector<double> tail_min;   // per-epsilon min score over the tail
    Verdict verdict = Verdict::Inconclusive;
    std::size_t tail_start = 1;    // first window index inside the tail
    std::size_t score_count = 0;   // number of scored windows (N, or R for S_theta)
};

ConvergenceReport estimate_limit(const SequencePrefix& prefix, const LambdaSchedule& schedule,
                                 Method method, const EstimateParams& params = {});

// lacunary statistical method (S_theta); windows are the lacunary blocks
ConvergenceReport estimate_limit(const SequencePrefix& prefix, const LacunarySchedule& schedule,
                                 const EstimateParams& params = {});

} // namespace lamstat
