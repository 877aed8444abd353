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

#include "qwroute/coin.hpp"

#include <cmath>

namespace qwroute {

CoinUnitary CoinUnitary::identity() {
  return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
}

CoinUnitary CoinUnitary::flip() {
  return {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
}

CoinUnitary CoinUnitary::hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{s, 0.0}, {s, 0.0}, {s, 0.0}, {-s, 0.0}};
}

CoinUnitary CoinUnitary::phase() {
  return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}};
}

bool CoinUnitary::is_unitary(double tolerance) const {
  // Rows of U * U^dagger.
  const Complex r00 = u00 * std::conj(u00) + u01 * std::conj(u01);
  const Complex r01 = u00 * std::conj(u10) + u01 * std::conj(u11);
  const Complex r10 = u10 * std::conj(u00) + u11 * std::conj(u01);
  const Complex r11 = u10 * std::conj(u10) + u11 * std::conj(u11);
  return std::abs(r00 - Complex{1.0, 0.0}) <= tolerance &&
         std::abs(r01) <= tolerance && std::abs(r10) <= tolerance &&
         std::abs(r11 - Complex{1.0, 0.0}) <= tolerance;
}

CoinProgram::CoinProgram(std::size_t dims, CoinUnitary default_coin)
    : dims_(dims), default_coin_(default_coin) {
  if (dims_ == 0) throw DimensionError("program needs at least one walker");
  if (!default_coin_.is_unitary()) {
    throw UnitarityError("default coin is not unitary");
  }
}

void CoinProgram::set_override(const CoinSite& site, const CoinUnitary& coin) {
  if (site.step < 1) {
    throw Error("coin override step must be >= 1, got " +
                std::to_string(site.step));
  }
  if (site.walker >= dims_) {
    throw DimensionError("walker index " + std::to_string(site.walker) +
                         " out of range for " + std::to_string(dims_) +
                         " walkers");
  }
  if (!coin.is_unitary()) {
    throw UnitarityError("coin override at step " + std::to_string(site.step) +
                         ", position " + std::to_string(site.position) +
                         " is not unitary");
  }
  overrides_[site] = coin;
}

const CoinUnitary& CoinProgram::coin_at(std::int64_t step, std::size_t walker,
                                        std::int64_t position) const {
  auto it = overrides_.find(CoinSite{step, walker, position});
  return it == overrides_.end() ? default_coin_ : it->second;
}

}  // namespace qwroute
