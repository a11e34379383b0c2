// Copyright 2026 The qmeasure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmeasure/report.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qmeasure {

using nlohmann::json;

json to_json(const CoordTransform &t) {
    return {{"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d}};
}

json to_json(const GateSequence &sequence) {
    json out = json::array();
    for (const auto &gate : sequence) {
        json params = json::array();
        if (gate_has_parameter(gate.kind)) {
            params.push_back(gate.parameter);
        }
        out.push_back({{"gate", std::string(gate_name(gate.kind))}, {"params", params}});
    }
    return out;
}

GateSequence gate_sequence_from_json(const json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("gate sequence must be a JSON array");
    }
    GateSequence seq;
    for (const auto &entry : j) {
        if (!entry.is_object() || !entry.contains("gate") || !entry["gate"].is_string()) {
            throw std::invalid_argument("gate entry needs a string 'gate' field");
        }
        CVGateKind kind = parse_gate_name(entry["gate"].get<std::string>());
        json params = entry.value("params", json::array());
        std::size_t expected = gate_has_parameter(kind) ? 1 : 0;
        if (!params.is_array() || params.size() != expected) {
            throw std::invalid_argument(
                "gate " + entry["gate"].get<std::string>() + " takes " + std::to_string(expected) + " parameter(s)");
        }
        double value = expected == 1 ? params[0].get<double>() : 0.0;
        seq.push_back({kind, value});
    }
    return seq;
}

json to_json(const VonNeumannParams &params) {
    return {
        {"p", params.p},
        {"alpha", params.alpha},
        {"beta", params.beta},
        {"gamma", params.gamma},
        {"sequence", to_json(params.sequence())},
    };
}

json to_json(const OpticalParams &params) {
    return {
        {"r", params.r},
        {"theta1", params.theta1},
        {"theta2", params.theta2},
        {"p", params.p},
        {"sequence", to_json(params.sequence())},
    };
}

json to_json(const SingleModeOpticalParams &params) {
    return {
        {"r", params.r},
        {"theta1", params.theta1},
        {"theta2", params.theta2},
        {"p", params.p},
        {"sequence", to_json(params.sequence())},
    };
}

json to_json(const HamiltonianParams &params) {
    return {{"u", params.u}, {"v", params.v}, {"w", params.w}, {"D", params.D()}};
}

namespace {

json to_json(const PeakResolution &res) {
    return {
        {"lambda", res.lambda},
        {"effective_probe_width", res.effective_probe_width},
        {"valley_to_peak", res.valley_to_peak},
        {"resolved", res.resolved},
        {"distribution_total", res.distribution.total()},
    };
}

}  // namespace

json to_json(const TwoPeakReport &report) {
    return {
        {"separation", report.separation},
        {"probe_width", report.probe_width},
        {"system_width", report.system_width},
        {"resolved_threshold", kResolvedValleyRatio},
        {"scaled", to_json(report.scaled)},
        {"unit", to_json(report.unit)},
    };
}

json to_json(const RepeatedReport &report) {
    json rounds = json::array();
    for (const auto &r : report.rounds) {
        rounds.push_back({
            {"outcome", r.outcome},
            {"post_center", r.post_center},
            {"post_width", r.post_width},
            {"distance_to_first", r.distance_to_first},
        });
    }
    return {
        {"scheme", std::string(scheme_name(report.scheme))},
        {"lambda", report.lambda},
        {"p", report.p},
        {"seed", report.seed},
        {"rounds", rounds},
        {"post_state_spread", report.post_state_spread},
        {"center_spread", report.center_spread},
        {"resolution_window", report.resolution_window},
        {"resolution_window_definition",
         "length of the union of [center - 3 sigma, center + 3 sigma] over rounds (tool-defined statistic)"},
    };
}

double round_significant(double x, int digits) {
    if (x == 0.0) {
        return 0.0;
    }
    if (!std::isfinite(x)) {
        return x;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

void round_numbers(json &j, int digits) {
    if (j.is_number_float()) {
        j = round_significant(j.get<double>(), digits);
    } else if (j.is_structured()) {
        for (auto &child : j) {
            round_numbers(child, digits);
        }
    }
}

}  // namespace qmeasure
