#include "lamstat/summability.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace lamstat {

namespace {

void require_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw Error(ErrorCode::NonPositiveEpsilon, "epsilon must be a positive real");
    }
}

void require_coverage(const SequencePrefix& prefix, const LambdaSchedule& schedule,
                      std::size_t needed) {
    if (schedule.size() < needed) {
        throw Error(ErrorCode::OutOfRange,
                    "schedule of length " + std::to_string(schedule.size()) +
                        " does not cover prefix of length " + std::to_string(prefix.size()));
    }
}

std::size_t check_index(const SequencePrefix& prefix, const LambdaSchedule& schedule,
                        std::size_t n) {
    if (n < 1 || n > prefix.size() || n > schedule.size()) {
        throw Error(ErrorCode::OutOfRange, "index " + std::to_string(n) + " out of range", n);
    }
    return n;
}

std::size_t tail_count_for(double tail_fraction, std::size_t total) {
    if (!(tail_fraction > 0.0) || tail_fraction > 1.0) {
        throw Error(ErrorCode::BadConfig, "tail_fraction must lie in (0, 1]");
    }
    auto count = static_cast<std::size_t>(
        std::ceil(tail_fraction * static_cast<double>(total)));
    return std::clamp<std::size_t>(count, 1, total);
}

double median_of(std::vector<double> values) {
    const std::size_t n = values.size();
    std::sort(values.begin(), values.end());
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::vector<double> window_values(const SequencePrefix& prefix, IndexWindow w) {
    std::vector<double> out;
    out.reserve(w.count());
    for (std::size_t k = w.lo; k <= w.hi; ++k) out.push_back(prefix.value(k));
    return out;
}

} // namespace

double vp_mean(const SequencePrefix& prefix, const LambdaSchedule& schedule, std::size_t n) {
    check_index(prefix, schedule, n);
    const IndexWindow w = schedule.window(n);
    double sum = 0.0;
    for (std::size_t k = w.lo; k <= w.hi; ++k) sum += prefix.value(k);
    return sum / schedule.lambda(n);
}

double strong_residual(const SequencePrefix& prefix, const LambdaSchedule& schedule,
                       double center, std::size_t n) {
    check_index(prefix, schedule, n);
    const IndexWindow w = schedule.window(n);
    double sum = 0.0;
    for (std::size_t k = w.lo; k <= w.hi; ++k) sum += std::abs(prefix.value(k) - center);
    return sum / schedule.lambda(n);
}

DensityProfile lambda_density(const SequencePrefix& prefix, const LambdaSchedule& schedule,
                              double center, double epsilon) {
    require_epsilon(epsilon);
    require_coverage(prefix, schedule, prefix.size());

    const std::size_t n_total = prefix.size();
    DensityProfile profile;
    profile.epsilon = epsilon;
    profile.center = center;
    profile.schedule_name = schedule.name();
    profile.counts.resize(n_total);
    profile.densities.resize(n_total);

    // Both window ends are non-decreasing in n (hi = n, and the increment
    // bound on lambda keeps lo monotone), so one pass with a running count
    // gives the same integers as recounting every window.
    const auto violates = [&](std::size_t k) {
        return std::abs(prefix.value(k) - center) >= epsilon;
    };
    std::size_t lo = 1;
    std::size_t count = 0;
    for (std::size_t n = 1; n <= n_total; ++n) {
        const IndexWindow w = schedule.window(n);
        while (lo < w.lo) {
            if (violates(lo)) --count;
            ++lo;
        }
        if (violates(n)) ++count;
        profile.counts[n - 1] = count;
        profile.densities[n - 1] = static_cast<double>(count) / schedule.lambda(n);
    }
    return profile;
}

LacunaryDensityProfile lacunary_density(const SequencePrefix& prefix,
                                        const LacunarySchedule& schedule,
                                        double center, double epsilon) {
    require_epsilon(epsilon);
    if (schedule.max_index() > prefix.size()) {
        throw Error(ErrorCode::CutsExceedPrefix,
                    "last cut " + std::to_string(schedule.max_index()) +
                        " exceeds prefix length " + std::to_string(prefix.size()));
    }
    LacunaryDensityProfile profile;
    profile.epsilon = epsilon;
    profile.center = center;
    const std::size_t windows = schedule.window_count();
    profile.counts.resize(windows);
    profile.densities.resize(windows);
    for (std::size_t r = 1; r <= windows; ++r) {
        const IndexWindow w = schedule.window(r);
        std::size_t count = 0;
        for (std::size_t k = w.lo; k <= w.hi; ++k) {
            if (std::abs(prefix.value(k) - center) >= epsilon) ++count;
        }
        profile.counts[r - 1] = count;
        profile.densities[r - 1] =
            static_cast<double>(count) / static_cast<double>(schedule.length(r));
    }
    return profile;
}

SequencePrefix matrix_a_transform(const SequencePrefix& prefix, const LambdaSchedule& schedule) {
    if (prefix.size() < 2) {
        throw Error(ErrorCode::PrefixTooShort, "matrix transform needs at least two terms");
    }
    require_coverage(prefix, schedule, prefix.size() - 1);
    std::vector<double> out(prefix.size() - 1);
    for (std::size_t n = 1; n + 1 <= prefix.size(); ++n) {
        out[n - 1] = (prefix.value(n + 1) - prefix.value(n)) / schedule.lambda(n);
    }
    return SequencePrefix::from(std::move(out));
}

const char* method_name(Method method) {
    switch (method) {
        case Method::Lim: return "LIM";
        case Method::St: return "ST";
        case Method::STheta: return "S_THETA";
        case Method::SLambda: return "S_LAMBDA";
        case Method::VLambdaStrong: return "V_LAMBDA_STRONG";
        case Method::VLambdaMean: return "V_LAMBDA_MEAN";
    }
    return "?";
}

const char* verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::ConvergedEvidence: return "CONVERGED_EVIDENCE";
        case Verdict::DivergedEvidence: return "DIVERGED_EVIDENCE";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

Method method_from_name(std::string_view name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    std::replace(up.begin(), up.end(), '-', '_');
    if (up == "LIM") return Method::Lim;
    if (up == "ST") return Method::St;
    if (up == "S_THETA") return Method::STheta;
    if (up == "S_LAMBDA") return Method::SLambda;
    if (up == "V_LAMBDA_STRONG") return Method::VLambdaStrong;
    if (up == "V_LAMBDA_MEAN") return Method::VLambdaMean;
    throw Error(ErrorCode::BadConfig, "unknown method: " + std::string(name));
}

namespace {

void check_params(const EstimateParams& params) {
    if (params.epsilon_grid.empty()) {
        throw Error(ErrorCode::BadConfig, "epsilon grid must be non-empty");
    }
    for (double eps : params.epsilon_grid) require_epsilon(eps);
    if (!(params.tolerance > 0.0)) {
        throw Error(ErrorCode::BadConfig, "tolerance must be positive");
    }
}

Verdict verdict_from_rows(const std::vector<double>& tail_max,
                          const std::vector<double>& tail_min,
                          const EstimateParams& params) {
    bool all_small = true;
    for (double v : tail_max) all_small = all_small && v <= params.tolerance;
    if (all_small) return Verdict::ConvergedEvidence;
    const double floor = params.divergence_factor * params.tolerance;
    for (double v : tail_min) {
        if (v >= floor) return Verdict::DivergedEvidence;
    }
    return Verdict::Inconclusive;
}

} // namespace

ConvergenceReport estimate_limit(const SequencePrefix& prefix, const LambdaSchedule& schedule,
                                 Method method, const EstimateParams& params) {
    check_params(params);
    if (method == Method::STheta) {
        throw Error(ErrorCode::BadConfig, "S_THETA requires a lacunary schedule");
    }
    const std::size_t n_total = prefix.size();

    // LIM and ST are schedule-free by definition; they run on the identity
    // schedule internally.
    const bool schedule_free = (method == Method::Lim || method == Method::St);
    std::optional<LambdaSchedule> internal;
    if (schedule_free) {
        internal = LambdaSchedule::identity(n_total);
    } else {
        require_coverage(prefix, schedule, n_total);
    }
    const LambdaSchedule& sched = internal ? *internal : schedule;

    ConvergenceReport report;
    report.method = method;
    report.schedule_name = sched.name();
    report.epsilon_grid = params.epsilon_grid;
    report.score_count = n_total;

    const std::size_t tail_count = tail_count_for(params.tail_fraction, n_total);
    report.tail_start = n_total - tail_count + 1;

    const bool mean_type = (method == Method::Lim || method == Method::VLambdaMean ||
                            method == Method::VLambdaStrong);
    if (mean_type) {
        report.candidate_limit = vp_mean(prefix, sched, n_total);
    } else {
        report.candidate_limit = median_of(window_values(prefix, sched.window(n_total)));
    }
    const double center = report.candidate_limit;

    if (method == Method::St || method == Method::SLambda) {
        for (double eps : params.epsilon_grid) {
            const DensityProfile profile = lambda_density(prefix, sched, center, eps);
            double hi = 0.0, lo_v = std::numeric_limits<double>::infinity();
            for (std::size_t n = report.tail_start; n <= n_total; ++n) {
                hi = std::max(hi, profile.densities[n - 1]);
                lo_v = std::min(lo_v, profile.densities[n - 1]);
            }
            report.tail_max.push_back(hi);
            report.tail_min.push_back(lo_v);
        }
    } else {
        // residual scores: |x_n - L|, |t_n - L|, or the strong residual
        double hi = 0.0, lo_v = std::numeric_limits<double>::infinity();
        for (std::size_t n = report.tail_start; n <= n_total; ++n) {
            double score = 0.0;
            switch (method) {
                case Method::Lim: score = std::abs(prefix.value(n) - center); break;
                case Method::VLambdaMean:
                    score = std::abs(vp_mean(prefix, sched, n) - center);
                    break;
                case Method::VLambdaStrong:
                    score = strong_residual(prefix, sched, center, n);
                    break;
                default: break;
            }
            hi = std::max(hi, score);
            lo_v = std::min(lo_v, score);
        }
        // the grid does not enter residual scores; repeat the row per epsilon
        report.tail_max.assign(params.epsilon_grid.size(), hi);
        report.tail_min.assign(params.epsilon_grid.size(), lo_v);
    }

    report.verdict = verdict_from_rows(report.tail_max, report.tail_min, params);
    return report;
}

ConvergenceReport estimate_limit(const SequencePrefix& prefix, const LacunarySchedule& schedule,
                                 const EstimateParams& params) {
    check_params(params);
    const std::size_t windows = schedule.window_count();

    ConvergenceReport report;
    report.method = Method::STheta;
    report.schedule_name = "theta";
    report.epsilon_grid = params.epsilon_grid;
    report.score_count = windows;

    const std::size_t tail_count = tail_count_for(params.tail_fraction, windows);
    report.tail_start = windows - tail_count + 1;

    report.candidate_limit = median_of(window_values(prefix, schedule.window(windows)));

    for (double eps : params.epsilon_grid) {
        const LacunaryDensityProfile profile =
            lacunary_density(prefix, schedule, report.candidate_limit, eps);
        double hi = 0.0, lo_v = std::numeric_limits<double>::infinity();
        for (std::size_t r = report.tail_start; r <= windows; ++r) {
            hi = std::max(hi, profile.densities[r - 1]);
            lo_v = std::min(lo_v, profile.densities[r - 1]);
        }
        report.tail_max.push_back(hi);
        report.tail_min.push_back(lo_v);
    }

    report.verdict = verdict_from_rows(report.tail_max, report.tail_min, params);
    return report;
}

} // namespace lamstat
