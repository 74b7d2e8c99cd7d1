#pragma once

#include <nlohmann/json.hpp>

#include "lamstat/generators.hpp"
#include "lamstat/probe.hpp"
#include "lamstat/quasicauchy.hpp"
#include "lamstat/summability.hpp"

namespace lamstat {

using json = nlohmann::ordered_json;

// payload serialization; numbers round-trip exactly through dump()/parse()
json to_json(const DensityProfile& profile);
json to_json(const LacunaryDensityProfile& profile);
json to_json(const ConvergenceReport& report);
json to_json(const QcDiagnostic& diagnostic);
json to_json(const SimulationResult& result);
json to_json(const ModulusTable& table);
json to_json(const WitnessReport& report);
json to_json(const PreservationReport& report);
json to_json(const InterleaveImageCheck& check);
json schedule_summary(const LambdaSchedule& schedule);
json schedule_summary(const LacunarySchedule& schedule);

// Whole-run document. `wall_ms` sits outside `payload` and `config` so that
// reruns with identical flags compare byte-identical after dropping it.
json make_report(std::string_view command, json config, json payload, double wall_ms);

// the documented normalization rule for golden comparisons
json normalize_report(json report);

} // namespace lamstat
