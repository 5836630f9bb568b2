// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "orchsim/runner.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "orchsim/log.hpp"
#include "orchsim/scenario.hpp"

namespace orchsim {

std::string format_double(double value) {
    char buffer[64];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value);
    std::string text(buffer, result.ptr);
    if (text.find_first_of(".eni") == std::string::npos) {
        text += ".0"; // keep integral values visibly floating point
    }
    return text;
}

namespace {

const char* bool_str(bool v) { return v ? "true" : "false"; }

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::SchemaError,
                    "cannot write output file '" + path.string() + "'");
    }
    out << content;
}

} // namespace

std::string render_plan_csv(const SimulationReport& report) {
    std::ostringstream out;
    out << "task_id,node_id,slice,start,finish,energy_j,cost_units,"
           "deadline_met,rejected\n";
    for (const TaskRecord& r : report.tasks) {
        out << r.task_id << ',' << r.node_id << ',' << to_string(r.slice_class)
            << ',' << format_double(r.start) << ',' << format_double(r.finish)
            << ',' << format_double(r.energy_j) << ','
            << format_double(r.cost_units) << ',' << bool_str(r.deadline_met)
            << ',' << bool_str(r.rejected) << '\n';
    }
    return out.str();
}

std::string render_summary(const SimulationReport& report, Objective objective,
                           std::uint64_t seed) {
    std::ostringstream out;
    out << "objective=" << to_string(objective) << '\n';
    out << "seed=" << seed << '\n';
    out << "horizon_s=" << format_double(report.horizon) << '\n';
    out << "tasks_total=" << report.tasks.size() << '\n';
    out << "rejection_count=" << report.rejection_count << '\n';
    out << "deadline_miss_count=" << report.deadline_miss_count << '\n';
    out << "total_task_energy_j=" << format_double(report.total_task_energy_j)
        << '\n';
    out << "total_predicted_energy_j="
        << format_double(report.total_predicted_energy_j) << '\n';
    out << "total_idle_energy_j=" << format_double(report.total_idle_energy_j)
        << '\n';
    out << "total_cost_units=" << format_double(report.total_cost_units)
        << '\n';
    for (const NodeUsage& usage : report.node_usage) {
        out << "busy_seconds." << usage.node_id << '='
            << format_double(usage.busy_seconds) << '\n';
        out << "utilization." << usage.node_id << '='
            << format_double(usage.utilization) << '\n';
    }
    for (const SliceUsage& usage : report.slice_usage) {
        out << "peak_bw." << to_string(usage.slice_class) << '='
            << format_double(usage.peak_bw) << '\n';
    }
    return out.str();
}

std::string render_oracle_csv(const SimulationReport& report) {
    std::ostringstream out;
    out << "task_id,match,plan_node,plan_start,plan_value,oracle_node,"
           "oracle_start,oracle_value\n";
    for (const OracleRow& r : report.oracle_rows) {
        out << r.task_id << ',' << bool_str(r.match) << ',' << r.plan_node
            << ',' << format_double(r.plan_start) << ','
            << format_double(r.plan_value) << ',' << r.oracle_node << ','
            << format_double(r.oracle_start) << ','
            << format_double(r.oracle_value) << '\n';
    }
    return out.str();
}

int run_command(const CommandOptions& options) {
    try {
        const Scenario scenario = parse_scenario_file(options.scenario_path);
        if (options.validate_only) {
            std::cout << "scenario '" << options.scenario_path << "' is valid ("
                      << scenario.nodes.size() << " nodes, "
                      << scenario.tasks.size() << " tasks)\n";
            return 0;
        }

        RunOptions run_options;
        run_options.with_oracle = options.with_oracle;
        const SimulationReport report =
            run(scenario, options.seed, options.objective, run_options);

        const std::filesystem::path out_dir(options.out_dir);
        std::filesystem::create_directories(out_dir);
        write_file(out_dir / "plan.csv", render_plan_csv(report));
        write_file(out_dir / "summary.txt",
                   render_summary(report, options.objective, options.seed));
        if (options.with_oracle) {
            write_file(out_dir / "oracle.csv", render_oracle_csv(report));
        }

        log(LogLevel::Info,
            "simulated " + std::to_string(report.tasks.size()) + " tasks, " +
                std::to_string(report.rejection_count) + " rejected, " +
                std::to_string(report.deadline_miss_count) +
                " deadline misses");

        if (options.strict && report.deadline_miss_count > 0) {
            log(LogLevel::Error,
                "strict mode: " + std::to_string(report.deadline_miss_count) +
                    " deadline miss(es)");
            return 2;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace orchsim
