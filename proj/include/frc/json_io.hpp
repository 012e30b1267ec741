#pragma once

#include "frc/bounds.hpp"
#include "frc/code.hpp"
#include "frc/designs.hpp"
#include "frc/simulator.hpp"

#include "json.hpp"

#include <vector>

namespace frc {

using Json = nlohmann::json;

/// {"n":..,"d":..,"rho":..,"theta":..,"nodes":[[..],..]}
Json code_to_json(const FrCode& code);
/// Throws ParameterError on missing or mistyped fields. Does not validate.
FrCode code_from_json(const Json& j);

/// {"t":2,"alpha":..,"v":..,"blocks":[[..],..]}
Json steiner_to_json(const SteinerSystem& sys);
SteinerSystem steiner_from_json(const Json& j);

/// {"n","k","d","rho","averaging","recursive"} plus "search" and
/// "best_known" when present.
Json capacity_report_to_json(const CapacityReport& report);

/// [{"op":"fail","nodes":[..]},{"op":"repair"},{"op":"read","nodes":[..]}]
std::vector<ScenarioEvent> script_from_json(const Json& j);
Json script_to_json(const std::vector<ScenarioEvent>& script);
Json scenario_report_to_json(const ScenarioReport& report);

/// Sidecar of one packet file: {"index","m","theta","packet_len"}.
struct PacketHeader {
    int index = 0;
    int m = 0;
    int theta = 0;
    std::size_t packet_len = 0;
};

Json packet_header_to_json(const PacketHeader& h);
PacketHeader packet_header_from_json(const Json& j);

} // namespace frc
