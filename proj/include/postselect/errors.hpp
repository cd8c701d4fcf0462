// Copyright 2026 The postselect Authors
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

namespace postselect {

/// Base class for domain errors. Type-invariant violations on construction
/// throw std::invalid_argument instead.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The postselected ensemble is empty (success probability at or below the
/// probability tolerance), so no outcome distribution exists.
class DegeneratePostselection : public Error {
  public:
    using Error::Error;
};

class InvalidWitness : public Error {
  public:
    using Error::Error;
};

class PolygonViolation : public Error {
  public:
    using Error::Error;
};

class SingularSystem : public Error {
  public:
    using Error::Error;
};

class RegionViolation : public Error {
  public:
    using Error::Error;
};

/// Internal closure construction missed its tolerance. Never expected on
/// valid input.
class ClosureFailure : public Error {
  public:
    using Error::Error;
};

class NormViolation : public Error {
  public:
    using Error::Error;
};

class InfeasibleScenario : public Error {
  public:
    using Error::Error;
};

class SearchBudgetExhausted : public Error {
  public:
    using Error::Error;
};

} // namespace postselect
