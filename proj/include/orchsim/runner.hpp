// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command execution and artifact export: plan.csv, summary.txt and the
// optional oracle.csv, written with a stable number format so repeated
// runs diff clean.

#pragma once

#include <cstdint>
#include <string>

#include "orchsim/scheduling.hpp"
#include "orchsim/simengine.hpp"

namespace orchsim {

struct CommandOptions {
    std::string scenario_path;
    Objective objective = Objective::Energy;
    std::uint64_t seed = 0;
    std::string out_dir = "out";
    bool with_oracle = false;
    bool strict = false;        // exit 2 on any deadline miss
    bool validate_only = false; // parse and validate, run nothing
};

// Exit codes: 0 success, 1 input/runtime error, 2 strict-mode QoS
// violation. Errors are reported on stderr.
int run_command(const CommandOptions& options);

// Shortest round-trip decimal rendering; integral finite values keep a
// trailing ".0" so the column stays visibly numeric.
std::string format_double(double value);

std::string render_plan_csv(const SimulationReport& report);
std::string render_summary(const SimulationReport& report, Objective objective,
                           std::uint64_t seed);
std::string render_oracle_csv(const SimulationReport& report);

} // namespace orchsim
