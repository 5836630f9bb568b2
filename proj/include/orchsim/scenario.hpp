// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Scenario file model: parsing, validation, serialization. The on-disk
// format is a JSON object whose field names match the domain types
// one-to-one (lower_snake_case).

#pragma once

#include <string>
#include <vector>

#include "orchsim/energy.hpp"
#include "orchsim/model.hpp"
#include "orchsim/slicing.hpp"

namespace orchsim {

// A full simulation instance: the continuum, the slices, the task set,
// and the price forecast.
struct Scenario {
    std::vector<Node> nodes;
    SliceSet slices;
    SliceThresholds thresholds;
    std::vector<NanoService> tasks;
    EnergyPriceForecast forecast;
    double profile_alpha = 0.3;     // EMA weight for profile updates
    double observation_noise = 0.0; // relative amplitude of power-observation noise

    bool operator==(const Scenario&) const = default;
};

// Parses and fully validates a scenario document. Errors carry field
// paths (SchemaError), offending ids (DuplicateId), or the violated
// constraint (InvariantError).
Scenario parse_scenario(const std::string& json_text);

// Convenience: read the file then parse_scenario.
Scenario parse_scenario_file(const std::string& path);

// Canonical JSON rendering; parse_scenario(serialize_scenario(s)) == s
// for every valid scenario.
std::string serialize_scenario(const Scenario& scenario);

// Semantic invariant checks (schema-independent). Throws InvariantError
// or DuplicateId.
void validate_scenario(const Scenario& scenario);

} // namespace orchsim
