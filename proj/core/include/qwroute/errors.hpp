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

#include <stdexcept>
#include <string>

namespace qwroute {

/// Base class for all qwroute domain errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Walker counts, label lengths, or coin-space sizes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A state or coin vector is not unit-norm within tolerance.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// A 2x2 coin matrix is not unitary within tolerance.
class UnitarityError : public Error {
 public:
  using Error::Error;
};

/// A transfer request violates the step-budget range or parity constraints.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

/// Amplitude would leave the dense simulation box.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

/// A coin program was applied at a step that does not match the state's
/// step counter.
class StepMismatchError : public Error {
 public:
  using Error::Error;
};

/// A scenario configuration document is malformed or out of supported range.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwroute
