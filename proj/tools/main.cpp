// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// orchsim command line. `orchsim run --scenario <file>` simulates one
// scenario and writes plan.csv / summary.txt (plus oracle.csv with
// --oracle) into the output directory.

#include <string>

#include <CLI11.hpp>

#include "orchsim/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"orchsim - energy-aware nanoservice orchestration simulator"};
    app.require_subcommand(1);

    orchsim::CommandOptions options;
    std::string objective = "energy";

    CLI::App* run = app.add_subcommand("run", "simulate a scenario file");
    run->add_option("--scenario", options.scenario_path,
                    "path to the scenario JSON file")
        ->required();
    run->add_option("--objective", objective,
                    "optimization objective: energy or cost")
        ->check(CLI::IsMember({"energy", "cost"}));
    run->add_option("--seed", options.seed,
                    "seed for observation-noise randomness");
    run->add_option("--out", options.out_dir, "output directory");
    run->add_flag("--oracle", options.with_oracle,
                  "emit oracle.csv comparing every decision against the "
                  "exhaustive optimizer");
    run->add_flag("--strict", options.strict,
                  "exit with status 2 when any deadline is missed");
    run->add_flag("--validate", options.validate_only,
                  "parse and validate the scenario, run nothing");

    CLI11_PARSE(app, argc, argv);

    options.objective = objective == "cost" ? orchsim::Objective::Cost
                                            : orchsim::Objective::Energy;
    return orchsim::run_command(options);
}
