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

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qwroute/errors.hpp"

namespace qwroute {

using Complex = std::complex<double>;

/// Tolerance used for normalization and unitarity checks throughout.
inline constexpr double kDefaultTolerance = 1e-12;

/// One lattice configuration: the positions of the D walkers plus their D
/// coin bits. Coin bit 0 moves a walker in the positive direction on the
/// next shift, bit 1 in the negative direction, independently per walker.
struct BasisLabel {
  std::vector<std::int64_t> positions;
  std::vector<std::uint8_t> coins;

  std::size_t dims() const { return positions.size(); }

  auto operator<=>(const BasisLabel&) const = default;
};

/// Packs the coin bits of `label` into a single index, walker-major:
/// walker 0 contributes the most significant bit.
std::size_t coin_index(const BasisLabel& label);

/// Unpacks a walker-major coin index into D bits.
std::vector<std::uint8_t> coin_bits(std::size_t index, std::size_t dims);

/// A joint coin state over D walkers: 2^D complex entries indexed
/// walker-major. Unit norm is enforced on construction.
class CoinVector {
 public:
  explicit CoinVector(std::vector<Complex> entries,
                      double tolerance = kDefaultTolerance);

  /// Rescales `entries` to unit norm before constructing. Throws
  /// NormalizationError only for an all-zero vector.
  static CoinVector normalized(std::vector<Complex> entries);

  std::size_t dims() const { return dims_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Complex>& entries() const { return entries_; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<Complex> entries_;
  std::size_t dims_;
};

using AmplitudeMap = std::map<BasisLabel, Complex>;

/// Sparse walker+coin state: a map from basis labels to nonzero complex
/// amplitudes, plus the number of steps taken so far. Exactly-zero entries
/// are dropped on construction; there is no magnitude-threshold pruning, so
/// any unitarity violation shows up in the norm instead of being masked.
///
/// WalkState is a value: operations return new states and never mutate
/// their inputs, so states are safe to copy and share across threads.
class WalkState {
 public:
  WalkState(AmplitudeMap amplitudes, std::int64_t step, std::size_t dims);

  const AmplitudeMap& amplitudes() const { return amplitudes_; }
  std::int64_t step() const { return step_; }
  std::size_t dims() const { return dims_; }

  /// Euclidean norm, sqrt of the summed amplitude magnitudes squared.
  double norm() const;

  /// Amplitude of `label`, zero when absent.
  Complex amplitude(const BasisLabel& label) const;

 private:
  AmplitudeMap amplitudes_;
  std::int64_t step_ = 0;
  std::size_t dims_ = 1;
};

/// Builds the product state |positions> (x) coin at step 0.
WalkState make_product_state(const std::vector<std::int64_t>& positions,
                             const CoinVector& coin);

/// <a|b>: conjugate-linear in `a`, linear in `b`.
Complex inner_product(const WalkState& a, const WalkState& b);

/// Shifts every label's positions by `offset`; amplitudes and step counter
/// are unchanged.
WalkState translate(const WalkState& s,
                    const std::vector<std::int64_t>& offset);

}  // namespace qwroute
