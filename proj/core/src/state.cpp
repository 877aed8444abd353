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

#include "qwroute/state.hpp"

#include <cmath>
#include <utility>

namespace qwroute {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::size_t log2_exact(std::size_t v) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < v) ++bits;
  return bits;
}

}  // namespace

std::size_t coin_index(const BasisLabel& label) {
  std::size_t index = 0;
  for (std::uint8_t bit : label.coins) {
    index = (index << 1) | (bit & 1u);
  }
  return index;
}

std::vector<std::uint8_t> coin_bits(std::size_t index, std::size_t dims) {
  std::vector<std::uint8_t> bits(dims, 0);
  for (std::size_t d = 0; d < dims; ++d) {
    bits[d] = static_cast<std::uint8_t>((index >> (dims - 1 - d)) & 1u);
  }
  return bits;
}

CoinVector::CoinVector(std::vector<Complex> entries, double tolerance)
    : entries_(std::move(entries)) {
  if (!is_power_of_two(entries_.size())) {
    throw DimensionError("coin vector size must be 2^D, got " +
                         std::to_string(entries_.size()));
  }
  dims_ = log2_exact(entries_.size());
  if (dims_ == 0) {
    throw DimensionError("coin vector needs at least one walker (size >= 2)");
  }
  double norm2 = 0.0;
  for (const Complex& e : entries_) norm2 += std::norm(e);
  if (std::abs(norm2 - 1.0) > tolerance) {
    throw NormalizationError("coin vector is not unit norm: |coin|^2 = " +
                             std::to_string(norm2));
  }
}

CoinVector CoinVector::normalized(std::vector<Complex> entries) {
  double norm2 = 0.0;
  for (const Complex& e : entries) norm2 += std::norm(e);
  if (norm2 <= 0.0) {
    throw NormalizationError("cannot normalize an all-zero coin vector");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& e : entries) e *= scale;
  return CoinVector(std::move(entries), 1e-9);
}

WalkState::WalkState(AmplitudeMap amplitudes, std::int64_t step,
                     std::size_t dims)
    : amplitudes_(std::move(amplitudes)), step_(step), dims_(dims) {
  if (dims_ == 0) throw DimensionError("state needs at least one walker");
  if (step_ < 0) throw Error("step counter must be nonnegative");
  for (auto it = amplitudes_.begin(); it != amplitudes_.end();) {
    const BasisLabel& label = it->first;
    if (label.positions.size() != dims_ || label.coins.size() != dims_) {
      throw DimensionError("label dimension mismatch: state has " +
                           std::to_string(dims_) + " walkers");
    }
    for (std::uint8_t bit : label.coins) {
      if (bit > 1) throw Error("coin bits must be 0 or 1");
    }
    if (it->second == Complex{0.0, 0.0}) {
      it = amplitudes_.erase(it);  // exact zeros only, never a threshold
    } else {
      ++it;
    }
  }
  const double n = norm();
  if (std::abs(n * n - 1.0) > kDefaultTolerance) {
    throw NormalizationError("state is not normalized: |psi|^2 = " +
                             std::to_string(n * n));
  }
}

double WalkState::norm() const {
  double norm2 = 0.0;
  for (const auto& [label, amp] : amplitudes_) norm2 += std::norm(amp);
  return std::sqrt(norm2);
}

Complex WalkState::amplitude(const BasisLabel& label) const {
  auto it = amplitudes_.find(label);
  return it == amplitudes_.end() ? Complex{0.0, 0.0} : it->second;
}

WalkState make_product_state(const std::vector<std::int64_t>& positions,
                             const CoinVector& coin) {
  if (positions.size() != coin.dims()) {
    throw DimensionError("positions has " + std::to_string(positions.size()) +
                         " walkers but coin has " +
                         std::to_string(coin.dims()));
  }
  AmplitudeMap amplitudes;
  for (std::size_t c = 0; c < coin.size(); ++c) {
    if (coin[c] == Complex{0.0, 0.0}) continue;
    amplitudes.emplace(BasisLabel{positions, coin_bits(c, coin.dims())},
                       coin[c]);
  }
  return WalkState(std::move(amplitudes), 0, coin.dims());
}

Complex inner_product(const WalkState& a, const WalkState& b) {
  if (a.dims() != b.dims()) {
    throw DimensionError("inner product between states of different walker "
                         "counts");
  }
  Complex sum{0.0, 0.0};
  // Iterate the smaller support.
  const WalkState& lead = a.amplitudes().size() <= b.amplitudes().size() ? a : b;
  for (const auto& [label, _] : lead.amplitudes()) {
    sum += std::conj(a.amplitude(label)) * b.amplitude(label);
  }
  return sum;
}

WalkState translate(const WalkState& s,
                    const std::vector<std::int64_t>& offset) {
  if (offset.size() != s.dims()) {
    throw DimensionError("offset has " + std::to_string(offset.size()) +
                         " entries for a " + std::to_string(s.dims()) +
                         "-walker state");
  }
  AmplitudeMap moved;
  for (const auto& [label, amp] : s.amplitudes()) {
    BasisLabel shifted = label;
    for (std::size_t d = 0; d < s.dims(); ++d) {
      shifted.positions[d] += offset[d];
    }
    moved.emplace(std::move(shifted), amp);
  }
  return WalkState(std::move(moved), s.step(), s.dims());
}

}  // namespace qwroute
