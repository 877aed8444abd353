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

#include <cstdint>
#include <vector>

#include "qwroute/planner.hpp"
#include "qwroute/state.hpp"

namespace qwroute {

/// Largest |a(L) - b(L)| over the union of both states' labels.
double max_amplitude_difference(const WalkState& a, const WalkState& b);

/// |<target_positions (x) coin | final>|^2.
double fidelity(const WalkState& final_state,
                const std::vector<std::int64_t>& target_positions,
                const CoinVector& coin);

/// Evolves a round-trip plan for its full 2n steps and returns the fidelity
/// of the end state against the initial one. Throws Error when the plan is
/// not a round trip.
double periodicity_check(const RoutePlan& plan, const CoinVector& coin);

/// Max amplitude deviation between the engine trace and the closed-form
/// prediction, over every step of the plan.
double trace_vs_oracle(const RoutePlan& plan, const CoinVector& coin);

/// Outcome of executing one plan on one coin state.
struct TransferReport {
  std::int64_t n = 0;
  std::vector<std::int64_t> source;
  std::vector<std::int64_t> target;
  bool round_trip = false;
  /// One-way: overlap with |target> (x) coin. Round trip: overlap of the
  /// step-2n state with the initial state.
  double fidelity = 0.0;
  bool success = false;
  /// max |1 - norm^2| over the whole trace.
  double per_step_norm_drift = 0.0;
  double oracle_max_deviation = 0.0;
  std::size_t special_flip_count = 0;
};

/// Runs the plan on `coin` and assembles the report. `tolerance` sets the
/// success threshold: fidelity >= 1 - tolerance.
TransferReport run_transfer(const RoutePlan& plan, const CoinVector& coin,
                            double tolerance = kDefaultTolerance);

}  // namespace qwroute
