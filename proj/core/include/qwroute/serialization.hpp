// Copyright 2026 The qwroute Authors
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

#include <string>
#include <vector>

#include "qwroute/planner.hpp"
#include "qwroute/verify.hpp"

namespace qwroute {

/// Schema version written into every emitted document.
inline constexpr int kFormatVersion = 1;

/// Plan document: JSON object with fields, in order: format_version, n,
/// source, target, legs (array of {a, b} per walker), flips (array of
/// {step, walker, position}, sorted), round_trip.
std::string plan_to_json(const RoutePlan& plan);

/// Report document: format_version, plan summary {n, source, target,
/// round_trip}, fidelity, success, per_step_norm_drift,
/// oracle_max_deviation, special_flip_count.
std::string report_to_json(const TransferReport& report);

/// Trace file: one `#`-prefixed header naming the columns, then one line
/// per stored amplitude per step with fixed column order
///   step pos_1 .. pos_D coin_index re im
/// and 17 significant digits. Map iteration is ordered, so output is
/// byte-stable for a given trace.
std::string trace_to_text(const std::vector<WalkState>& trace);

}  // namespace qwroute
