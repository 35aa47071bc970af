// Copyright 2026 The domlab Authors.
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

#ifndef DOMLAB_ERRORS_H_
#define DOMLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace domlab {

// Base class for every error raised by the library. The command-line tool
// maps UsageError to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters, malformed input files or invalid indices.
class UsageError : public Error {
 public:
  using Error::Error;
};

// The game or learner lacks a capability the caller asked for (exact
// expectations on a sampled game, bandit feedback to a full-vector learner).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured profile limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

// A stochastic payoff was requested without a random stream.
class MissingRngError : public Error {
 public:
  using Error::Error;
};

// The closed-form Lemons elimination path does not apply to the parameters.
class AnalyticPathUnavailable : public Error {
 public:
  using Error::Error;
};

// An iterative numerical routine (power iteration, root finding) failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace domlab

#endif  // DOMLAB_ERRORS_H_
