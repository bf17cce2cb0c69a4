// Copyright 2026 The nilaut Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NILAUT_ERRORS_HPP
#define NILAUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilaut {

/// Base class for all library errors. Invalid arguments that violate a
/// documented precondition use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No integral different exponent makes the Hurwitz formula balance.
class InconsistentTower : public Error {
 public:
  using Error::Error;
};

/// A candidate generator-image pair fails the defining-equation check.
class NotAnAutomorphism : public Error {
 public:
  using Error::Error;
};

/// A closure or order computation exceeded its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Group or instance beyond the exhaustive-computation limits.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// A verified claim did not hold. `claim` names the first failing claim.
class ClaimMismatch : public Error {
 public:
  ClaimMismatch(std::string claim, const std::string& detail)
      : Error(claim + ": " + detail), claim_(std::move(claim)) {}
  const std::string& claim() const { return claim_; }

 private:
  std::string claim_;
};

}  // namespace nilaut

#endif  // NILAUT_ERRORS_HPP
