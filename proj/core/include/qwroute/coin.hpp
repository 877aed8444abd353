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
#include <map>

#include "qwroute/state.hpp"

namespace qwroute {

/// A 2x2 unitary acting on one walker's coin.
struct CoinUnitary {
  Complex u00, u01, u10, u11;

  /// Leaves the coin alone; the walker keeps its direction.
  static CoinUnitary identity();
  /// Pauli X: swaps the coin bits, so the walker reverses direction.
  static CoinUnitary flip();
  /// The unbiased coin, equal-magnitude split of either basis state.
  static CoinUnitary hadamard();
  /// Pauli Z: phases the |1> component only; it never changes a coin bit,
  /// so it cannot turn a walker around.
  static CoinUnitary phase();

  bool is_unitary(double tolerance = kDefaultTolerance) const;

  bool operator==(const CoinUnitary&) const = default;
};

/// Where a coin override applies: walker `walker` during `step`, for
/// amplitude resident at `position` after step-1 steps.
struct CoinSite {
  std::int64_t step;
  std::size_t walker;
  std::int64_t position;

  auto operator<=>(const CoinSite&) const = default;
};

/// Assignment of coin unitaries to (step, walker, position) triples, with a
/// default applied everywhere else. The joint coin operator at any step is
/// the tensor product over walkers of each walker's 2x2 at its own
/// position, so it always factorizes per walker.
class CoinProgram {
 public:
  explicit CoinProgram(std::size_t dims,
                       CoinUnitary default_coin = CoinUnitary::identity());

  /// Registers an override. Throws UnitarityError for a non-unitary matrix,
  /// DimensionError for a walker index out of range, and Error for a
  /// non-positive step.
  void set_override(const CoinSite& site, const CoinUnitary& coin);

  /// The unitary applied to `walker` during `step` at `position`.
  const CoinUnitary& coin_at(std::int64_t step, std::size_t walker,
                             std::int64_t position) const;

  std::size_t dims() const { return dims_; }
  const CoinUnitary& default_coin() const { return default_coin_; }
  const std::map<CoinSite, CoinUnitary>& overrides() const {
    return overrides_;
  }

  bool operator==(const CoinProgram&) const = default;

 private:
  std::size_t dims_;
  CoinUnitary default_coin_;
  std::map<CoinSite, CoinUnitary> overrides_;
};

}  // namespace qwroute
