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

#include "qwroute/engine.hpp"

#include <stdexcept>
#include <utility>

namespace qwroute {

WalkState coin_step(const WalkState& s, const CoinProgram& prog,
                    std::int64_t step) {
  if (prog.dims() != s.dims()) {
    throw DimensionError("program has " + std::to_string(prog.dims()) +
                         " walkers, state has " + std::to_string(s.dims()));
  }
  if (step != s.step() + 1) {
    throw StepMismatchError("coin for step " + std::to_string(step) +
                            " applied to a state after step " +
                            std::to_string(s.step()));
  }
  AmplitudeMap current = s.amplitudes();
  // One walker at a time; the joint coin operator is the tensor product of
  // the per-walker 2x2s, each looked up at that walker's own position.
  for (std::size_t d = 0; d < s.dims(); ++d) {
    AmplitudeMap next;
    for (const auto& [label, amp] : current) {
      const CoinUnitary& u = prog.coin_at(step, d, label.positions[d]);
      const bool from_one = label.coins[d] == 1;
      BasisLabel to0 = label;
      to0.coins[d] = 0;
      BasisLabel to1 = label;
      to1.coins[d] = 1;
      next[std::move(to0)] += (from_one ? u.u01 : u.u00) * amp;
      next[std::move(to1)] += (from_one ? u.u11 : u.u10) * amp;
    }
    for (auto it = next.begin(); it != next.end();) {
      it = it->second == Complex{0.0, 0.0} ? next.erase(it) : std::next(it);
    }
    current = std::move(next);
  }
  return WalkState(std::move(current), s.step(), s.dims());
}

WalkState shift(const WalkState& s) {
  AmplitudeMap moved;
  for (const auto& [label, amp] : s.amplitudes()) {
    BasisLabel to = label;
    for (std::size_t d = 0; d < s.dims(); ++d) {
      to.positions[d] += label.coins[d] == 0 ? 1 : -1;
    }
    moved.emplace(std::move(to), amp);
  }
  return WalkState(std::move(moved), s.step(), s.dims());
}

WalkState step(const WalkState& s, const CoinProgram& prog) {
  WalkState moved = shift(coin_step(s, prog, s.step() + 1));
  return WalkState(moved.amplitudes(), s.step() + 1, s.dims());
}

std::vector<WalkState> evolve(const WalkState& s, const CoinProgram& prog,
                              std::int64_t steps) {
  if (steps < 0) {
    throw std::invalid_argument("evolve: steps must be >= 0");
  }
  std::vector<WalkState> trace;
  trace.reserve(static_cast<std::size_t>(steps) + 1);
  trace.push_back(s);
  for (std::int64_t i = 0; i < steps; ++i) {
    trace.push_back(step(trace.back(), prog));
  }
  return trace;
}

}  // namespace qwroute
