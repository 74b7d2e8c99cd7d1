#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lamstat/generators.hpp"
#include "lamstat/quasicauchy.hpp"

namespace lamstat {

/// A black-box real function on a closed interval. Builtins: square,
/// reciprocal, sin, abs, affine:a,b. Tables interpolate linearly between
/// sorted samples; queries outside the domain throw DomainViolation.
class FunctionSpec {
public:
    static FunctionSpec builtin(std::string_view id, double lo, double hi);
    static FunctionSpec table(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const;
    SequencePrefix map(const SequencePrefix& prefix) const; // DomainViolation carries the index

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    const std::string& name() const noexcept { return name_; }

    // A valid Lipschitz constant on [lo, hi] where one is known (all builtins
    // and tables have one); used by the Theorem-2-style domination check.
    std::optional<double> lipschitz() const noexcept { return lipschitz_; }

private:
    FunctionSpec() = default;
    std::string name_;
    double lo_ = 0.0;
    double hi_ = 1.0;
    std::optional<double> lipschitz_;
    std::function<double(double)> eval_;
};

struct ModulusTable {
    std::vector<double> deltas;
    std::vector<double> omegas;  // omega_hat(delta), non-decreasing
    double grid_step = 0.0;      // actual sample spacing used
};

// omega_hat(delta) = max |f(x) - f(y)| over sampled x, y with |x - y| <= delta.
// Requires grid_step <= min(delta_grid)/4.
ModulusTable modulus_estimate(const FunctionSpec& f, std::vector<double> delta_grid,
                              double grid_step);

struct WitnessPair {
    std::size_t n = 0;      // the scale this pair certifies: |xi - eta| < 1/n
    double xi = 0.0;
    double eta = 0.0;
    double gap = 0.0;       // |xi - eta|
    double image_gap = 0.0; // |f(xi) - f(eta)|
};

struct WitnessParams {
    double gap_fraction = 0.5;                 // scan step as a fraction of 1/n
    std::size_t max_points_per_scan = 2000000; // beyond this, coarse anchors + fine offset
    QcParams image_qc{};                       // diagnostic settings for f along the embedding
};

struct WitnessReport {
    double epsilon0 = 0.0;
    std::size_t n_max = 0;
    bool found = false;               // a pair was recorded for every n <= n_max
    std::size_t first_missing_n = 0;  // 0 when found
    double finest_gap = 0.0;          // smallest pair gap the scan reached
    std::vector<WitnessPair> pairs;
    std::optional<EmbeddingResult> embedded;      // built from the pairs when found
    std::optional<QcDiagnostic> image_diagnostic; // qc_profile of f along the embedding
};

// Operationalizes the non-uniform-continuity witness search: for each n look
// for sampled x, y with |x - y| < 1/n yet |f(x) - f(y)| >= epsilon0.
WitnessReport find_nonuniform_witness(const FunctionSpec& f, double epsilon0,
                                      std::size_t n_max, const WitnessParams& params = {});

struct PreservationCase {
    QcDiagnostic input;
    QcDiagnostic image;
    // per grid-epsilon: violating counts of the image at eps vs the input at
    // eps/K, per window; only filled when a Lipschitz constant is available
    std::size_t domination_violations = 0;
};

struct PreservationReport {
    std::string function_name;
    std::optional<double> lipschitz;
    std::vector<PreservationCase> cases;
    bool domination_pass = true; // vacuously true when no constant is declared
};

// Compares quasi-Cauchy diagnostics of each prefix with those of its image
// under f; when a Lipschitz constant K is declared, checks the window-wise
// domination d^{f.x}_n(eps) <= d^{x}_n(eps/K) at the exact count level.
PreservationReport ward_preservation_test(const FunctionSpec& f,
                                          const std::vector<SequencePrefix>& family,
                                          const LambdaSchedule& schedule,
                                          const QcParams& params = {},
                                          std::optional<double> lipschitz_override = std::nullopt);

struct InterleaveImageCheck {
    QcDiagnostic image_qc;                    // is f along the interleaving quasi-Cauchy-like?
    ConvergenceReport image_summability;      // is f along it summable to f(anchor)?
    double anchor_image = 0.0;                // f(x0)
};

// Both readings of the interleaving argument: image quasi-Cauchyness and
// image lambda-statistical summability to f(x0), reported side by side.
InterleaveImageCheck interleave_image_check(const FunctionSpec& f, const SequencePrefix& x,
                                            double anchor, const LambdaSchedule& schedule,
                                            const QcParams& params = {});

} // namespace lamstat
