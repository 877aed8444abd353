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

#include "qwroute/coin.hpp"

namespace qwroute {

/// Leg lengths of one walker's transfer schedule. The branch that starts in
/// the positive direction walks straight for `a` steps, turns around, and
/// walks `b` more; the opposite branch does the mirror image. For a budget
/// of n steps and a target offset x they satisfy a + b = n - 2 and
/// a - b = x.
struct Legs {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool operator==(const Legs&) const = default;
};

/// A compiled transfer: step budget, endpoints, per-walker legs, and the
/// coin program that realizes the transfer. The program is identity
/// everywhere except for FLIP at the `special_flips` sites: three per
/// walker one-way, six per walker for a round trip.
struct RoutePlan {
  std::int64_t n = 0;
  std::vector<std::int64_t> source;
  std::vector<std::int64_t> target;
  std::vector<Legs> legs;
  CoinProgram program;
  std::vector<CoinSite> special_flips;
  bool round_trip = false;

  std::size_t dims() const { return target.size(); }
  std::int64_t total_steps() const { return round_trip ? 2 * n : n; }
};

/// True iff a coin state can be moved by offset x in exactly n steps:
/// n >= 2, |x| <= n - 2, and n - x even.
bool feasible(std::int64_t n, std::int64_t x) noexcept;

/// Leg lengths a = (n+x)/2 - 1, b = (n-x)/2 - 1 for a feasible request.
/// Throws FeasibilityError naming the violated constraint otherwise.
Legs legs_for(std::int64_t n, std::int64_t x);

/// One-walker plan from the origin to x in n steps. The program flips the
/// coin at (step 1, position 0), at the negative turnaround
/// (step b+2, position -(b+1)), and at the positive turnaround
/// (step a+2, position a+1); every other step is identity.
RoutePlan plan_1d(std::int64_t n, std::int64_t x);

/// D-walker plan from the origin: each walker d gets the 1D schedule for
/// target[d], so the program carries exactly 3 flips per walker. Works for
/// every unit coin vector, entangled coins included. Throws
/// FeasibilityError naming the first offending coordinate.
RoutePlan plan_nd(std::int64_t n, const std::vector<std::int64_t>& target);

/// Extends plan_nd with the return schedule: per walker, a flip at the
/// target when the outbound walk ends (step n+1) plus mirrored turnaround
/// flips, giving period exactly 2n.
RoutePlan plan_round_trip(std::int64_t n,
                          const std::vector<std::int64_t>& target);

/// Smallest feasible step budget for offset x: 2 when x == 0, |x| + 2
/// otherwise.
std::int64_t min_steps(std::int64_t x) noexcept;

/// Plan between arbitrary endpoints: the origin plan for target - source
/// with every flip position translated by source.
RoutePlan plan_between(const std::vector<std::int64_t>& source,
                       const std::vector<std::int64_t>& target,
                       std::int64_t n);

/// Shifts a plan to a different frame: endpoints and flip positions move by
/// `offset` per walker; legs and timing are unchanged.
RoutePlan translate_plan(const RoutePlan& plan,
                         const std::vector<std::int64_t>& offset);

/// The feasible budget for x closest to the requested n (ties go down).
std::int64_t nearest_feasible_n(std::int64_t n, std::int64_t x) noexcept;

}  // namespace qwroute
