#include "lamstat/probe.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

namespace lamstat {

namespace {

double parse_affine_part(const std::string& text, const std::string& id) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::BadConfig, "cannot parse affine parameters in '" + id + "'");
    }
}

} // namespace

FunctionSpec FunctionSpec::builtin(std::string_view id, double lo, double hi) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw Error(ErrorCode::BadConfig, "domain must be a bounded interval with lo < hi");
    }
    FunctionSpec f;
    f.name_ = std::string(id);
    f.lo_ = lo;
    f.hi_ = hi;
    const double abs_edge = std::max(std::abs(lo), std::abs(hi));

    if (id == "square") {
        f.eval_ = [](double x) { return x * x; };
        f.lipschitz_ = 2.0 * abs_edge;
    } else if (id == "reciprocal") {
        if (lo <= 0.0 && hi >= 0.0) {
            throw Error(ErrorCode::BadConfig, "reciprocal domain must exclude 0");
        }
        const double closest = std::min(std::abs(lo), std::abs(hi));
        f.eval_ = [](double x) { return 1.0 / x; };
        f.lipschitz_ = 1.0 / (closest * closest);
    } else if (id == "sin") {
        f.eval_ = [](double x) { return std::sin(x); };
        f.lipschitz_ = 1.0;
    } else if (id == "abs") {
        f.eval_ = [](double x) { return std::abs(x); };
        f.lipschitz_ = 1.0;
    } else if (id.rfind("affine:", 0) == 0) {
        const std::string rest(id.substr(7));
        const auto comma = rest.find(',');
        if (comma == std::string::npos) {
            throw Error(ErrorCode::BadConfig, "affine spec needs two parameters: affine:a,b");
        }
        const std::string sid(id);
        const double a = parse_affine_part(rest.substr(0, comma), sid);
        const double b = parse_affine_part(rest.substr(comma + 1), sid);
        f.eval_ = [a, b](double x) { return a * x + b; };
        f.lipschitz_ = std::abs(a);
    } else {
        throw Error(ErrorCode::BadConfig, "unknown builtin function id: " + std::string(id));
    }
    return f;
}

FunctionSpec FunctionSpec::table(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw Error(ErrorCode::BadConfig, "table needs at least two matched samples");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
            throw Error(ErrorCode::NonFiniteValue, "table entry " + std::to_string(i + 1),
                        i + 1);
        }
        if (i > 0 && xs[i] <= xs[i - 1]) {
            throw Error(ErrorCode::NotIncreasing, "table x-values must strictly increase",
                        i + 1);
        }
    }
    FunctionSpec f;
    f.name_ = "table";
    f.lo_ = xs.front();
    f.hi_ = xs.back();
    double max_slope = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        max_slope = std::max(max_slope, std::abs((ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1])));
    }
    f.lipschitz_ = max_slope;
    f.eval_ = [tx = std::move(xs), ty = std::move(ys)](double x) {
        const auto it = std::lower_bound(tx.begin(), tx.end(), x);
        if (it == tx.begin()) return ty.front();
        const auto hi = static_cast<std::size_t>(it - tx.begin());
        if (hi == tx.size()) return ty.back();
        const std::size_t lo = hi - 1;
        const double t = (x - tx[lo]) / (tx[hi] - tx[lo]);
        return ty[lo] + t * (ty[hi] - ty[lo]);
    };
    return f;
}

double FunctionSpec::operator()(double x) const {
    if (!(x >= lo_ && x <= hi_)) {
        throw Error(ErrorCode::DomainViolation,
                    "query " + std::to_string(x) + " outside [" + std::to_string(lo_) + ", " +
                        std::to_string(hi_) + "]");
    }
    return eval_(x);
}

SequencePrefix FunctionSpec::map(const SequencePrefix& prefix) const {
    std::vector<double> out(prefix.size());
    for (std::size_t k = 1; k <= prefix.size(); ++k) {
        const double x = prefix.value(k);
        if (!(x >= lo_ && x <= hi_)) {
            throw Error(ErrorCode::DomainViolation,
                        "point " + std::to_string(k) + " leaves the domain", k);
        }
        out[k - 1] = eval_(x);
    }
    return SequencePrefix::from(std::move(out));
}

namespace {

constexpr std::size_t kMaxModulusPoints = 20000000;

// max over sliding windows of (max - min), window = `lag` grid steps
double window_oscillation(const std::vector<double>& fx, std::size_t lag) {
    if (lag == 0) return 0.0;
    std::deque<std::size_t> max_q, min_q;
    double best = 0.0;
    for (std::size_t j = 0; j < fx.size(); ++j) {
        while (!max_q.empty() && fx[max_q.back()] <= fx[j]) max_q.pop_back();
        max_q.push_back(j);
        while (!min_q.empty() && fx[min_q.back()] >= fx[j]) min_q.pop_back();
        min_q.push_back(j);
        const std::size_t left = (j >= lag) ? j - lag : 0;
        while (max_q.front() < left) max_q.pop_front();
        while (min_q.front() < left) min_q.pop_front();
        best = std::max(best, fx[max_q.front()] - fx[min_q.front()]);
    }
    return best;
}

} // namespace

ModulusTable modulus_estimate(const FunctionSpec& f, std::vector<double> delta_grid,
                              double grid_step) {
    if (delta_grid.empty()) throw Error(ErrorCode::BadConfig, "delta grid must be non-empty");
    double min_delta = std::numeric_limits<double>::infinity();
    for (double d : delta_grid) {
        if (!(d > 0.0) || !std::isfinite(d)) {
            throw Error(ErrorCode::BadConfig, "deltas must be positive reals");
        }
        min_delta = std::min(min_delta, d);
    }
    if (!(grid_step > 0.0) || grid_step > min_delta / 4.0) {
        throw Error(ErrorCode::BadConfig, "grid_step must be positive and at most min(delta)/4");
    }
    const double width = f.hi() - f.lo();
    if (width < grid_step) {
        throw Error(ErrorCode::DomainTooSmall, "domain shorter than one grid step");
    }
    const auto intervals = static_cast<std::size_t>(std::ceil(width / grid_step));
    if (intervals + 1 > kMaxModulusPoints) {
        throw Error(ErrorCode::BadConfig, "grid_step too fine for this domain");
    }
    const double h = width / static_cast<double>(intervals);

    std::vector<double> fx(intervals + 1);
    for (std::size_t j = 0; j <= intervals; ++j) {
        const double x = f.lo() + width * (static_cast<double>(j) /
                                           static_cast<double>(intervals));
        fx[j] = f(std::min(x, f.hi()));
    }

    ModulusTable table;
    table.grid_step = h;
    table.deltas = std::move(delta_grid);
    table.omegas.reserve(table.deltas.size());
    for (double d : table.deltas) {
        const auto lag = static_cast<std::size_t>(std::floor(d / h * (1.0 + 1e-12)));
        table.omegas.push_back(window_oscillation(fx, std::min(lag, intervals)));
    }
    return table;
}

namespace {

struct ScanHit {
    double a = 0.0;
    double b = 0.0;
    double image_gap = -1.0;
    double gap = 0.0;
};

// best (max image-gap) pair with spacing below `target_gap`
ScanHit scan_for_pair(const FunctionSpec& f, double target_gap, std::size_t max_points) {
    const double width = f.hi() - f.lo();
    ScanHit best;
    const auto intervals = static_cast<std::size_t>(std::ceil(width / target_gap));
    if (intervals + 1 <= max_points) {
        // consecutive fine-grid pairs
        const double denom = static_cast<double>(intervals);
        double prev_x = f.lo();
        double prev_f = f(prev_x);
        best.gap = width / denom;
        for (std::size_t j = 1; j <= intervals; ++j) {
            const double x = f.lo() + width * (static_cast<double>(j) / denom);
            const double fxv = f(x);
            const double ig = std::abs(fxv - prev_f);
            if (ig > best.image_gap) {
                best = ScanHit{prev_x, x, ig, x - prev_x};
            }
            prev_x = x;
            prev_f = fxv;
        }
    } else {
        // coarse anchors with one fine offset each
        const auto anchors = max_points;
        const double span = width - target_gap;
        best.gap = target_gap;
        for (std::size_t j = 0; j < anchors; ++j) {
            const double x = f.lo() + span * (static_cast<double>(j) /
                                              static_cast<double>(anchors - 1));
            const double y = x + target_gap;
            const double ig = std::abs(f(y) - f(x));
            if (ig > best.image_gap) {
                best = ScanHit{x, y, ig, y - x};
            }
        }
    }
    return best;
}

} // namespace

WitnessReport find_nonuniform_witness(const FunctionSpec& f, double epsilon0,
                                      std::size_t n_max, const WitnessParams& params) {
    if (!(epsilon0 > 0.0) || !std::isfinite(epsilon0)) {
        throw Error(ErrorCode::NonPositiveEpsilon, "epsilon0 must be a positive real");
    }
    if (n_max < 2) throw Error(ErrorCode::BadConfig, "n_max must be at least 2");
    if (!(params.gap_fraction > 0.0) || params.gap_fraction >= 1.0) {
        throw Error(ErrorCode::BadConfig, "gap_fraction must lie in (0, 1)");
    }
    if (params.max_points_per_scan < 2) {
        throw Error(ErrorCode::BadConfig, "max_points_per_scan too small");
    }

    WitnessReport report;
    report.epsilon0 = epsilon0;
    report.n_max = n_max;
    report.finest_gap = std::numeric_limits<double>::infinity();

    const double width = f.hi() - f.lo();
    for (std::size_t n = 1; n <= n_max; ++n) {
        const double target = std::min(params.gap_fraction / static_cast<double>(n), width);
        const ScanHit hit = scan_for_pair(f, target, params.max_points_per_scan);
        report.finest_gap = std::min(report.finest_gap, hit.gap);
        if (hit.image_gap >= epsilon0 &&
            hit.gap < 1.0 / static_cast<double>(n)) {
            report.pairs.push_back(WitnessPair{n, hit.a, hit.b, hit.gap, hit.image_gap});
        } else if (report.first_missing_n == 0) {
            report.first_missing_n = n;
        }
    }
    report.found = (report.first_missing_n == 0);

    if (report.found) {
        PairList pl;
        pl.pairs.reserve(report.pairs.size());
        for (const auto& p : report.pairs) pl.pairs.emplace_back(p.xi, p.eta);
        report.embedded = gen_pair_embedding(pl);
        // linear bridges stay inside the interval, so f is defined along it
        const SequencePrefix image = f.map(report.embedded->sequence);
        const auto schedule = LambdaSchedule::identity(image.size());
        report.image_diagnostic = qc_profile(image, schedule, params.image_qc);
    }
    return report;
}

PreservationReport ward_preservation_test(const FunctionSpec& f,
                                          const std::vector<SequencePrefix>& family,
                                          const LambdaSchedule& schedule,
                                          const QcParams& params,
                                          std::optional<double> lipschitz_override) {
    if (family.empty()) throw Error(ErrorCode::BadConfig, "family must be non-empty");
    PreservationReport report;
    report.function_name = f.name();
    report.lipschitz = lipschitz_override ? lipschitz_override : f.lipschitz();

    for (const SequencePrefix& x : family) {
        PreservationCase pc;
        pc.input = qc_profile(x, schedule, params);
        const SequencePrefix image = f.map(x);
        pc.image = qc_profile(image, schedule, params);

        if (report.lipschitz && *report.lipschitz > 0.0) {
            const double k = *report.lipschitz;
            const SequencePrefix dx = diff(x);
            const SequencePrefix dimg = diff(image);
            for (double eps : params.epsilon_grid) {
                const DensityProfile dom = lambda_density(dx, schedule, 0.0, eps / k);
                const DensityProfile img = lambda_density(dimg, schedule, 0.0, eps);
                for (std::size_t i = 0; i < img.counts.size(); ++i) {
                    if (img.counts[i] > dom.counts[i]) ++pc.domination_violations;
                }
            }
        }
        report.domination_pass = report.domination_pass && pc.domination_violations == 0;
        report.cases.push_back(std::move(pc));
    }
    return report;
}

InterleaveImageCheck interleave_image_check(const FunctionSpec& f, const SequencePrefix& x,
                                            double anchor, const LambdaSchedule& schedule,
                                            const QcParams& params) {
    const SequencePrefix seq = gen_interleave(x, anchor);
    const SequencePrefix image = f.map(seq);

    InterleaveImageCheck check;
    check.anchor_image = f(anchor);
    check.image_qc = qc_profile(image, schedule, params);

    // summability reading: densities of the image around the fixed target f(x0)
    ConvergenceReport summ;
    summ.method = Method::SLambda;
    summ.schedule_name = schedule.name();
    summ.candidate_limit = check.anchor_image;
    summ.epsilon_grid = params.epsilon_grid;
    summ.score_count = image.size();
    auto tail = static_cast<std::size_t>(
        std::ceil(params.tail_fraction * static_cast<double>(image.size())));
    tail = std::clamp<std::size_t>(tail, 1, image.size());
    summ.tail_start = image.size() - tail + 1;
    bool all_small = true;
    bool some_stuck = false;
    for (double eps : params.epsilon_grid) {
        const DensityProfile profile = lambda_density(image, schedule, check.anchor_image, eps);
        double hi = 0.0, lo = std::numeric_limits<double>::infinity();
        for (std::size_t n = summ.tail_start; n <= image.size(); ++n) {
            hi = std::max(hi, profile.densities[n - 1]);
            lo = std::min(lo, profile.densities[n - 1]);
        }
        summ.tail_max.push_back(hi);
        summ.tail_min.push_back(lo);
        all_small = all_small && hi <= params.density_tolerance;
        some_stuck = some_stuck || lo >= params.divergence_factor * params.density_tolerance;
    }
    summ.verdict = all_small ? Verdict::ConvergedEvidence
                             : (some_stuck ? Verdict::DivergedEvidence : Verdict::Inconclusive);
    check.image_summability = summ;
    return check;
}

} // namespace lamstat
