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
#include <utility>

#include "qwroute/planner.hpp"
#include "qwroute/state.hpp"

namespace qwroute {

/// Unit step function: 1 for v >= 0, else 0.
int unit_step(std::int64_t v);

/// Where the two branches of a one-walker transfer sit after step `step`.
/// The alpha branch is the trajectory of the initial coin-|0> component,
/// the beta branch that of the coin-|1> component. Pure integer formulas,
/// no floating point.
struct BranchPrediction {
  std::int64_t alpha_position = 0;
  int alpha_coin = 0;
  std::int64_t beta_position = 0;
  int beta_coin = 0;
  std::int64_t step = 0;
};

/// Branch positions and coins after step i of the outbound walk,
/// 1 <= i <= n with n = a + b + 2:
///   alpha: position -i + 2(i-b-1)*u(i-b-2), coin u(b+1-i)
///   beta:  position  i - 2(i-a-1)*u(i-a-2), coin u(i-a-2)
/// where u is unit_step. Throws std::out_of_range outside [1, n].
BranchPrediction forward_1d(std::int64_t i, const Legs& legs);

/// Branch positions and coins after step n + i of a round trip whose
/// outbound target offset is x, 1 <= i <= n:
///   alpha: position x - i + 2(i-a-1)*u(i-a-2), coin u(a+1-i)
///   beta:  position x + i - 2(i-b-1)*u(i-b-2), coin u(i-b-2)
BranchPrediction return_1d(std::int64_t i, std::int64_t x, const Legs& legs);

/// Two-walker closed form for the entangled transfer whose initial coin is
/// alpha|01> + beta|10>. Element .first describes walker 1, .second
/// walker 2; the alpha_* fields give each walker's position and coin in the
/// alpha term, the beta_* fields in the beta term. The alpha term pairs
/// walker 1's left-first trajectory (legs1.b) with walker 2's right-first
/// trajectory (legs2.a); the beta term is the reverse.
std::pair<BranchPrediction, BranchPrediction> forward_2d(std::int64_t i,
                                                         const Legs& legs1,
                                                         const Legs& legs2);

/// Closed-form state of a compiled plan after `step` steps (0 <= step <=
/// plan.total_steps()): every initial coin component is routed per walker
/// by the branch formulas above, keeping its amplitude. This is the
/// independent prediction the sparse engine is checked against.
WalkState oracle_state(const RoutePlan& plan, const CoinVector& coin,
                       std::int64_t step);

}  // namespace qwroute
