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
#include <random>

#include "qwroute/state.hpp"

namespace qwroute {

// Sampling goes through explicit arithmetic on raw mt19937_64 output rather
// than <random> distributions, whose sequences differ across standard
// library implementations; seeded outputs must be reproducible everywhere.

/// Uniform double in [0, 1) built from the top 53 bits of the generator.
double uniform_double(std::mt19937_64& rng);

/// Standard complex Gaussian (Box-Muller).
Complex gaussian_complex(std::mt19937_64& rng);

/// Haar-like random unit coin vector over D walkers.
CoinVector random_unit_coin(std::mt19937_64& rng, std::size_t dims);

/// Random unit coin vector whose every component magnitude is at least
/// `min_abs` (rejection sampling).
CoinVector random_unit_coin_min_abs(std::mt19937_64& rng, std::size_t dims,
                                    double min_abs);

}  // namespace qwroute
