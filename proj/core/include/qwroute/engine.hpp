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

#include <vector>

#include "qwroute/coin.hpp"
#include "qwroute/state.hpp"

namespace qwroute {

/// Applies the program's coin unitaries for `step` to every walker. The
/// state's step counter must equal step - 1; a mismatch throws
/// StepMismatchError rather than silently mis-aligning the schedule.
/// Positions and the counter are unchanged.
WalkState coin_step(const WalkState& s, const CoinProgram& prog,
                    std::int64_t step);

/// Conditional shift: per walker, coin bit 0 increments the position and
/// bit 1 decrements it. Amplitudes and the step counter are unchanged.
WalkState shift(const WalkState& s);

/// One full step: coin for step s.step()+1, then shift, then the counter
/// advances by one.
WalkState step(const WalkState& s, const CoinProgram& prog);

/// Repeated stepping. Returns the full trace of length steps+1 with
/// trace[0] == s.
std::vector<WalkState> evolve(const WalkState& s, const CoinProgram& prog,
                              std::int64_t steps);

}  // namespace qwroute
