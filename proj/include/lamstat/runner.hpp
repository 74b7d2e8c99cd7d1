#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lamstat/report.hpp"

namespace lamstat::cli {

enum class Command { Schedule, Analyze, Qc, Generate, Simulate, Probe };

// Everything a run needs, already parsed. Argv handling lives in the binary;
// tests construct this directly.
struct RunConfig {
    Command command = Command::Analyze;

    std::string input_path;
    std::string format = "csv";
    bool header = false;            // CSV inputs carry a header line

    std::string schedule_id = "identity"; // built-in id or path to a CSV schedule
    std::string theta;                    // lacunary cuts: comma list or path
    double margin = 0.0;                  // lacunary regularity margin

    std::string method = "S_LAMBDA";
    std::vector<double> epsilon_grid;     // empty -> defaults
    double tolerance = 0.05;
    double step_tolerance = 0.05;
    double tail_fraction = 0.2;

    std::uint64_t seed = 0;
    std::uint64_t trials = 10000;
    std::size_t n_max = 0;
    std::size_t length = 0;               // generate: sequence length

    std::string process;                  // simulate: survivor|three-split (example1|example2)
    std::string sim_mode = "mc";          // mc|exact

    std::string family;                   // generate / probe preserve families
    double anchor = 0.0;                  // interleave x0

    std::string fn;                       // probe: builtin id or table:path
    double domain_lo = 0.0;
    double domain_hi = 1.0;
    double epsilon0 = 1.0;
    std::string probe_mode = "witness";   // witness|modulus|preserve
    double lipschitz = 0.0;               // 0 -> use the function's declared constant

    std::string out_path;
    bool strict = false;
};

struct RunResult {
    json report;       // full document (empty for generate runs that emit CSV)
    int exit_code = 0; // 0 ok, 1 strict+INCONCLUSIVE, 2 input error
};

// Dispatches to the library, writes the report (or generated CSV) to
// config.out_path / LAMSTAT_OUT_DIR / stdout, and returns the exit code.
RunResult run(const RunConfig& config);

// Pure dispatch: builds the report without touching the filesystem for
// output (inputs are still read). Used by run() and by tests.
RunResult execute(const RunConfig& config);

std::string resolve_out_path(const std::string& out_path);

} // namespace lamstat::cli
