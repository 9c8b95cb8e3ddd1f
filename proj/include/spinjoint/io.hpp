// Copyright 2026 The spinjoint Authors
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

#pragma once

// JSON records and CSV text for everything the CLI emits. Numbers are written
// with 17 significant digits and '.' as the decimal point regardless of
// locale, so output is byte-identical across runs and platforms.

#include <string>
#include <vector>

#include <json.hpp>

#include "spinjoint/scenarios.hpp"
#include "spinjoint/uncertainty.hpp"

namespace spinjoint::io {

using nlohmann::json;

std::string format_double(double v);

json vector_to_json(const Vector3& v);
Vector3 vector_from_json(const json& j);

/// {"effects": [{"label": "+", "op": [[re, im], [re, im], [re, im], [re, im]]}, ...]}
/// with entries in row-major order. Round-trips bit-exactly.
json to_json(const Povm& povm);
Povm povm_from_json(const json& j);

/// {"a": [x,y,z], "a_prime": [x,y,z], "alpha": α, "alpha_prime": α'}
json to_json(const JointSpec& spec);
JointSpec joint_spec_from_json(const json& j);

/// {"p": p, "c": [...], "c_prime": [...]}
json to_json(const SwitchRealization& sw);
SwitchRealization switch_from_json(const json& j);

json to_json(const ValidationReport& report);
json to_json(const Settings& settings);
json to_json(const CorrelationSet& corr);
json to_json(const NoSignallingProbe& probe);
json to_json(const SampleStats& stats);
json to_json(const SignallingResult& result);
json to_json(const UncertaintyReport& report);
json to_json(const CloningScenario& scenario);
json to_json(const Bb84EveReport& report);

json stream_metadata(const SeededStream& stream, std::uint64_t n);

/// "# <metadata json>\nlabel,count,frequency\n..." rows.
std::string tally_csv(const SampleStats& stats, const json& metadata);

/// relation_id,lhs,rhs,slack
std::string uncertainty_csv_header();
std::string uncertainty_csv_row(const UncertaintyReport& report);

}  // namespace spinjoint::io
