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

#include "qwroute/coin.hpp"
#include "qwroute/state.hpp"

namespace qwroute {

/// Brute-force reference evolution on the full dense state vector over
/// positions in [-radius, radius]^D times the 2^D coin space. Each step
/// builds the joint 2^D x 2^D coin matrix per lattice site and applies it
/// row by row, then moves amplitudes one site per walker. Deliberately
/// naive and independent of the sparse engine; the two are compared in
/// tests and reports.
///
/// The box must be large enough that no amplitude reaches the boundary:
/// radius >= steps + max initial |position|. A violation throws
/// BoundaryError. Intended for D <= 2; larger D works but the box grows
/// fast. Returns the final state in sparse form.
WalkState dense_evolve(const WalkState& initial, const CoinProgram& prog,
                       std::int64_t steps, std::int64_t radius);

}  // namespace qwroute
