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

#ifndef QMEASURE_REPORT_H
#define QMEASURE_REPORT_H

#include "json.hpp"

#include "qmeasure/cv_transform.h"
#include "qmeasure/scenarios.h"

// JSON shapes shared by the command-line tool.
//
// A gate sequence is an array of {"gate": <name>, "params": [<numbers>]}
// in application order; parity gates carry an empty parameter array.

namespace qmeasure {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kSignificantDigits = 12;

nlohmann::json to_json(const CoordTransform &t);
nlohmann::json to_json(const GateSequence &sequence);
/// Throws std::invalid_argument on a malformed array or unknown gate name.
GateSequence gate_sequence_from_json(const nlohmann::json &j);

nlohmann::json to_json(const VonNeumannParams &params);
nlohmann::json to_json(const OpticalParams &params);
nlohmann::json to_json(const SingleModeOpticalParams &params);
nlohmann::json to_json(const HamiltonianParams &params);

nlohmann::json to_json(const TwoPeakReport &report);
nlohmann::json to_json(const RepeatedReport &report);

/// x rounded to `digits` significant decimal digits.
double round_significant(double x, int digits = kSignificantDigits);

/// Rounds every floating-point number in the document in place.
void round_numbers(nlohmann::json &j, int digits = kSignificantDigits);

}  // namespace qmeasure

#endif
