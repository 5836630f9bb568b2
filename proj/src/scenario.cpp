// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "orchsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

namespace orchsim {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::SchemaError, path + ": " + what);
}

[[noreturn]] void invariant_error(const std::string& what) {
    throw Error(ErrorCode::InvariantError, what);
}

std::string num_str(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

const json& member(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        schema_error(path, std::string("missing field '") + key + "'");
    }
    return *it;
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& path) {
    if (!obj.is_object()) {
        schema_error(path, "expected an object");
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (allowed.count(it.key()) == 0) {
            schema_error(path, "unknown field '" + it.key() + "'");
        }
    }
}

double get_number(const json& obj, const char* key, const std::string& path) {
    const json& v = member(obj, key, path);
    if (!v.is_number()) {
        schema_error(path + "." + key, "expected a number");
    }
    return v.get<double>();
}

double get_number_or(const json& obj, const char* key, const std::string& path,
                     double fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_number()) {
        schema_error(path + "." + key, "expected a number");
    }
    return it->get<double>();
}

bool get_bool_or(const json& obj, const char* key, const std::string& path,
                 bool fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_boolean()) {
        schema_error(path + "." + key, "expected a boolean");
    }
    return it->get<bool>();
}

std::string get_string(const json& obj, const char* key,
                       const std::string& path) {
    const json& v = member(obj, key, path);
    if (!v.is_string()) {
        schema_error(path + "." + key, "expected a string");
    }
    return v.get<std::string>();
}

const json& get_array(const json& obj, const char* key,
                      const std::string& path) {
    const json& v = member(obj, key, path);
    if (!v.is_array()) {
        schema_error(path + "." + key, "expected an array");
    }
    return v;
}

ResourceVector parse_resources(const json& obj, const std::string& path) {
    check_keys(obj, {"cpu", "gpu", "memory", "storage"}, path);
    ResourceVector r;
    r.cpu = get_number_or(obj, "cpu", path, 0.0);
    r.gpu = get_number_or(obj, "gpu", path, 0.0);
    r.memory = get_number_or(obj, "memory", path, 0.0);
    r.storage = get_number_or(obj, "storage", path, 0.0);
    return r;
}

Tier parse_tier(const std::string& value, const std::string& path) {
    if (value == "local") return Tier::Local;
    if (value == "edge") return Tier::Edge;
    if (value == "cloud") return Tier::Cloud;
    schema_error(path, "unknown tier '" + value + "'");
}

SliceClass parse_slice_class(const std::string& value,
                             const std::string& path) {
    if (value == "URLLC") return SliceClass::URLLC;
    if (value == "EMBB") return SliceClass::EMBB;
    if (value == "MMTC") return SliceClass::MMTC;
    schema_error(path, "unknown slice class '" + value + "'");
}

Node parse_node(const json& obj, const std::string& path) {
    check_keys(obj,
               {"id", "tier", "capacity", "service_rate", "p_idle", "p_max",
                "rtt_to_end", "net_energy_coeff", "link_bw"},
               path);
    Node node;
    node.id = get_string(obj, "id", path);
    node.tier = parse_tier(get_string(obj, "tier", path), path + ".tier");
    node.capacity = parse_resources(member(obj, "capacity", path), path + ".capacity");
    node.service_rate = get_number(obj, "service_rate", path);
    node.p_idle = get_number(obj, "p_idle", path);
    node.p_max = get_number(obj, "p_max", path);
    node.rtt_to_end = get_number(obj, "rtt_to_end", path);
    node.net_energy_coeff = get_number_or(obj, "net_energy_coeff", path, 0.0);
    node.link_bw = get_number_or(obj, "link_bw", path,
                                 std::numeric_limits<double>::infinity());
    return node;
}

NetworkSlice parse_slice(const json& obj, const std::string& path) {
    check_keys(obj, {"class", "latency_bound", "capacity_bw", "allocated_bw"},
               path);
    NetworkSlice slice;
    slice.slice_class =
        parse_slice_class(get_string(obj, "class", path), path + ".class");
    slice.latency_bound = get_number(obj, "latency_bound", path);
    slice.capacity_bw = get_number(obj, "capacity_bw", path);
    slice.allocated_bw = get_number_or(obj, "allocated_bw", path, 0.0);
    return slice;
}

NanoService parse_task(const json& obj, const std::string& path) {
    check_keys(obj,
               {"id", "demand", "workload", "data_size", "comm", "arrival",
                "deadline"},
               path);
    NanoService task;
    task.id = get_string(obj, "id", path);
    task.demand = parse_resources(member(obj, "demand", path), path + ".demand");
    task.workload = get_number(obj, "workload", path);
    task.data_size = get_number(obj, "data_size", path);
    const json& comm = member(obj, "comm", path);
    const std::string comm_path = path + ".comm";
    check_keys(comm, {"latency_req", "bandwidth_req", "delay_tolerant"},
               comm_path);
    task.comm.latency_req = get_number(comm, "latency_req", comm_path);
    task.comm.bandwidth_req = get_number(comm, "bandwidth_req", comm_path);
    task.comm.delay_tolerant =
        get_bool_or(comm, "delay_tolerant", comm_path, false);
    task.arrival = get_number(obj, "arrival", path);
    task.deadline = get_number(obj, "deadline", path);
    return task;
}

EnergyPriceForecast parse_forecast(const json& obj, const std::string& path) {
    check_keys(obj, {"slots", "horizon_end"}, path);
    EnergyPriceForecast forecast;
    const json& slots = get_array(obj, "slots", path);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const std::string slot_path = path + ".slots[" + std::to_string(i) + "]";
        check_keys(slots[i], {"start", "price"}, slot_path);
        PriceSlot slot;
        slot.start = get_number(slots[i], "start", slot_path);
        slot.price = get_number(slots[i], "price", slot_path);
        forecast.slots.push_back(slot);
    }
    forecast.horizon_end = get_number(obj, "horizon_end", path);
    return forecast;
}

bool finite(double v) { return std::isfinite(v); }

void validate_node(const Node& node) {
    const std::string who = "node '" + node.id + "'";
    if (node.id.empty()) {
        invariant_error("node id must not be empty");
    }
    if (!node.capacity.all_finite_nonnegative()) {
        invariant_error(who + ": capacity components must be finite and >= 0");
    }
    if (!finite(node.service_rate) || node.service_rate <= 0.0) {
        invariant_error(who + ": service_rate must be > 0");
    }
    if (!finite(node.p_idle) || !finite(node.p_max) || node.p_idle < 0.0 ||
        node.p_max < node.p_idle) {
        invariant_error(who + ": requires p_max >= p_idle >= 0, got p_idle=" +
                        num_str(node.p_idle) + " p_max=" + num_str(node.p_max));
    }
    if (!finite(node.rtt_to_end) || node.rtt_to_end < 0.0) {
        invariant_error(who + ": rtt_to_end must be >= 0");
    }
    if (!finite(node.net_energy_coeff) || node.net_energy_coeff < 0.0) {
        invariant_error(who + ": net_energy_coeff must be >= 0");
    }
    if (std::isnan(node.link_bw) || node.link_bw <= 0.0) {
        invariant_error(who + ": link_bw must be > 0");
    }
}

void validate_task(const NanoService& task) {
    const std::string who = "task '" + task.id + "'";
    if (task.id.empty()) {
        invariant_error("task id must not be empty");
    }
    if (!task.demand.all_finite_nonnegative()) {
        invariant_error(who + ": demand components must be finite and >= 0");
    }
    if (!finite(task.workload) || task.workload < 0.0) {
        invariant_error(who + ": workload must be >= 0");
    }
    if (!finite(task.data_size) || task.data_size < 0.0) {
        invariant_error(who + ": data_size must be >= 0");
    }
    if (!finite(task.comm.latency_req) || task.comm.latency_req <= 0.0) {
        invariant_error(who + ": latency_req must be > 0");
    }
    if (!finite(task.comm.bandwidth_req) || task.comm.bandwidth_req < 0.0) {
        invariant_error(who + ": bandwidth_req must be >= 0");
    }
    if (!finite(task.arrival) || task.arrival < 0.0) {
        invariant_error(who + ": arrival must be >= 0");
    }
    if (!finite(task.deadline) || task.deadline <= task.arrival) {
        invariant_error(who + ": deadline (" + num_str(task.deadline) +
                        ") must be > arrival (" + num_str(task.arrival) + ")");
    }
}

} // namespace

void validate_scenario(const Scenario& scenario) {
    std::set<std::string> node_ids;
    for (const Node& node : scenario.nodes) {
        validate_node(node);
        if (!node_ids.insert(node.id).second) {
            throw Error(ErrorCode::DuplicateId, "duplicate node id '" + node.id + "'");
        }
    }
    for (int c = 0; c < 3; ++c) {
        const NetworkSlice& slice = scenario.slices.slices[c];
        if (slice.slice_class != static_cast<SliceClass>(c)) {
            invariant_error("slices must hold URLLC, EMBB, MMTC in order");
        }
        const std::string who = std::string(to_string(slice.slice_class)) + " slice";
        if (!finite(slice.latency_bound) || slice.latency_bound <= 0.0) {
            invariant_error(who + ": latency_bound must be > 0");
        }
        if (!finite(slice.capacity_bw) || slice.capacity_bw <= 0.0) {
            invariant_error(who + ": capacity_bw must be > 0");
        }
        if (!finite(slice.allocated_bw) || slice.allocated_bw < 0.0 ||
            slice.allocated_bw > slice.capacity_bw) {
            invariant_error(who + ": allocated_bw must lie in [0, capacity_bw]");
        }
    }
    if (!finite(scenario.thresholds.urllc_latency_max) ||
        scenario.thresholds.urllc_latency_max <= 0.0 ||
        !finite(scenario.thresholds.embb_bw_min) ||
        scenario.thresholds.embb_bw_min <= 0.0) {
        invariant_error("slice thresholds must be > 0");
    }

    std::set<std::string> task_ids;
    for (const NanoService& task : scenario.tasks) {
        validate_task(task);
        if (!task_ids.insert(task.id).second) {
            throw Error(ErrorCode::DuplicateId, "duplicate task id '" + task.id + "'");
        }
    }

    const EnergyPriceForecast& forecast = scenario.forecast;
    if (forecast.slots.empty()) {
        invariant_error("forecast must contain at least one slot");
    }
    double prev = -std::numeric_limits<double>::infinity();
    for (const PriceSlot& slot : forecast.slots) {
        if (!finite(slot.start) || slot.start <= prev) {
            invariant_error("forecast slot starts must be finite and strictly increasing");
        }
        if (!finite(slot.price) || slot.price < 0.0) {
            invariant_error("forecast prices must be >= 0");
        }
        prev = slot.start;
    }
    if (!finite(forecast.horizon_end) ||
        forecast.horizon_end <= forecast.slots.back().start) {
        invariant_error("forecast horizon_end must exceed the last slot start");
    }
    const double first = forecast.slots.front().start;
    if (first > 0.0) {
        double earliest = std::numeric_limits<double>::infinity();
        for (const NanoService& task : scenario.tasks) {
            earliest = std::min(earliest, task.arrival);
        }
        if (first > earliest || scenario.tasks.empty()) {
            invariant_error("forecast must start at or before the simulation "
                            "origin or the earliest arrival");
        }
    }

    if (!(scenario.profile_alpha >= 0.0 && scenario.profile_alpha <= 1.0)) {
        invariant_error("profile_alpha must lie in [0, 1]");
    }
    if (!finite(scenario.observation_noise) || scenario.observation_noise < 0.0) {
        invariant_error("observation_noise must be >= 0");
    }
}

Scenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        schema_error("$", "expected a top-level object");
    }
    check_keys(doc,
               {"nodes", "slices", "thresholds", "tasks", "forecast",
                "profile_alpha", "observation_noise"},
               "$");

    Scenario scenario;
    const json& nodes = get_array(doc, "nodes", "$");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        scenario.nodes.push_back(
            parse_node(nodes[i], "nodes[" + std::to_string(i) + "]"));
    }

    const json& slices = get_array(doc, "slices", "$");
    bool seen[3] = {false, false, false};
    for (std::size_t i = 0; i < slices.size(); ++i) {
        NetworkSlice slice =
            parse_slice(slices[i], "slices[" + std::to_string(i) + "]");
        const int index = static_cast<int>(slice.slice_class);
        if (seen[index]) {
            throw Error(ErrorCode::DuplicateId,
                        std::string("duplicate slice class ") +
                            to_string(slice.slice_class));
        }
        seen[index] = true;
        scenario.slices.slices[index] = slice;
    }
    if (!(seen[0] && seen[1] && seen[2])) {
        invariant_error("scenario requires exactly one slice per class "
                        "(URLLC, EMBB, MMTC)");
    }

    if (auto it = doc.find("thresholds"); it != doc.end()) {
        check_keys(*it, {"urllc_latency_max", "embb_bw_min"}, "thresholds");
        scenario.thresholds.urllc_latency_max = get_number_or(
            *it, "urllc_latency_max", "thresholds", scenario.thresholds.urllc_latency_max);
        scenario.thresholds.embb_bw_min = get_number_or(
            *it, "embb_bw_min", "thresholds", scenario.thresholds.embb_bw_min);
    }

    const json& tasks = get_array(doc, "tasks", "$");
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        scenario.tasks.push_back(
            parse_task(tasks[i], "tasks[" + std::to_string(i) + "]"));
    }

    scenario.forecast = parse_forecast(member(doc, "forecast", "$"), "forecast");
    scenario.profile_alpha = get_number_or(doc, "profile_alpha", "$", 0.3);
    scenario.observation_noise =
        get_number_or(doc, "observation_noise", "$", 0.0);

    validate_scenario(scenario);
    return scenario;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::SchemaError, "cannot open scenario file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

namespace {

ordered_json resources_json(const ResourceVector& r) {
    return {{"cpu", r.cpu}, {"gpu", r.gpu}, {"memory", r.memory},
            {"storage", r.storage}};
}

} // namespace

std::string serialize_scenario(const Scenario& scenario) {
    ordered_json doc;
    doc["nodes"] = ordered_json::array();
    for (const Node& node : scenario.nodes) {
        ordered_json n;
        n["id"] = node.id;
        n["tier"] = to_string(node.tier);
        n["capacity"] = resources_json(node.capacity);
        n["service_rate"] = node.service_rate;
        n["p_idle"] = node.p_idle;
        n["p_max"] = node.p_max;
        n["rtt_to_end"] = node.rtt_to_end;
        n["net_energy_coeff"] = node.net_energy_coeff;
        if (std::isfinite(node.link_bw)) {
            n["link_bw"] = node.link_bw;
        }
        doc["nodes"].push_back(std::move(n));
    }
    doc["slices"] = ordered_json::array();
    for (const NetworkSlice& slice : scenario.slices.slices) {
        ordered_json s;
        s["class"] = to_string(slice.slice_class);
        s["latency_bound"] = slice.latency_bound;
        s["capacity_bw"] = slice.capacity_bw;
        s["allocated_bw"] = slice.allocated_bw;
        doc["slices"].push_back(std::move(s));
    }
    doc["thresholds"] = {
        {"urllc_latency_max", scenario.thresholds.urllc_latency_max},
        {"embb_bw_min", scenario.thresholds.embb_bw_min},
    };
    doc["tasks"] = ordered_json::array();
    for (const NanoService& task : scenario.tasks) {
        ordered_json t;
        t["id"] = task.id;
        t["demand"] = resources_json(task.demand);
        t["workload"] = task.workload;
        t["data_size"] = task.data_size;
        t["comm"] = {{"latency_req", task.comm.latency_req},
                     {"bandwidth_req", task.comm.bandwidth_req},
                     {"delay_tolerant", task.comm.delay_tolerant}};
        t["arrival"] = task.arrival;
        t["deadline"] = task.deadline;
        doc["tasks"].push_back(std::move(t));
    }
    doc["forecast"]["slots"] = ordered_json::array();
    for (const PriceSlot& slot : scenario.forecast.slots) {
        doc["forecast"]["slots"].push_back(
            {{"start", slot.start}, {"price", slot.price}});
    }
    doc["forecast"]["horizon_end"] = scenario.forecast.horizon_end;
    doc["profile_alpha"] = scenario.profile_alpha;
    doc["observation_noise"] = scenario.observation_noise;
    return doc.dump(2) + "\n";
}

} // namespace orchsim
