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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qwroute/planner.hpp"
#include "qwroute/state.hpp"

namespace qwroute {

/// Exit codes shared by all commands.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInvalidRequest = 2;

/// Walker count ceiling for scenario configs; the engine itself has no
/// such limit, but the dense cross-check grows as (2r+1)^D * 2^D.
inline constexpr std::size_t kMaxScenarioDims = 4;

/// One transfer scenario, either loaded from a JSON config document or
/// assembled from command-line flags.
struct ScenarioConfig {
  std::size_t dims = 1;
  std::vector<std::int64_t> source;  // defaults to the origin
  std::vector<std::int64_t> target;
  /// Step budget; empty means "min" (smallest budget feasible for every
  /// walker at once).
  std::optional<std::int64_t> steps;
  /// 2^dims entries; empty means "draw a seeded random unit coin".
  std::vector<Complex> coin;
  enum class Mode { kOneWay, kRoundTrip };
  Mode mode = Mode::kOneWay;
  std::string trace_path;   // empty: out_dir/qwroute_trace.txt
  std::string report_path;  // empty: out_dir/qwroute_report.json
  std::string out_dir = ".";
  std::uint64_t seed = 0;
};

/// Parses a config document. Input coin vectors may be off unit norm by up
/// to 1e-9 and are renormalized; anything worse is a ConfigError, as are
/// missing/malformed fields and dims outside 1..4.
ScenarioConfig scenario_from_json(const std::string& text);

/// Reads and parses a config file.
ScenarioConfig scenario_from_file(const std::string& path);

/// Resolves the scenario's step budget: explicit n is returned as-is
/// (validation happens at planning); "min" starts at max_d(|offset_d| + 2)
/// and is bumped while any coordinate's parity is off, failing if nothing
/// works by max_d(|offset_d|) + 4 (mixed-parity targets have no feasible
/// budget at all; they are reported, not padded).
std::int64_t resolve_steps(const ScenarioConfig& config);

/// Compiles the scenario into a plan (translating to the requested source
/// frame, round trip if asked).
RoutePlan plan_from_scenario(const ScenarioConfig& config);

/// The scenario's coin: explicit entries (renormalized) or a seeded random
/// unit coin when none were given.
CoinVector coin_from_scenario(const ScenarioConfig& config);

/// `plan`: prints the plan document to `out`. Infeasible requests print a
/// diagnostic naming the violated constraint and the nearest feasible n.
int cmd_plan(const ScenarioConfig& config, std::ostream& out,
             std::ostream& err);

/// `run`: executes the scenario, writes the trace and report files, prints
/// the report to `out`.
int cmd_run(const ScenarioConfig& config, std::ostream& out,
            std::ostream& err, double tolerance = kDefaultTolerance);

/// `oracle-check`: compares the engine trace against the closed-form
/// prediction and prints the max deviation.
int cmd_oracle_check(const ScenarioConfig& config, std::ostream& out,
                     std::ostream& err, double tolerance = kDefaultTolerance);

/// `sweep`: every feasible (n, x) with n <= n_max, `trials` seeded random
/// coins each; prints one row per pair with min fidelity, max norm drift,
/// and max oracle deviation, sorted by (n, x).
int cmd_sweep(std::int64_t n_max, std::int64_t trials, std::uint64_t seed,
              std::ostream& out, std::ostream& err,
              double tolerance = kDefaultTolerance);

}  // namespace qwroute
