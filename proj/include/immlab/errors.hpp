// Copyright 2026 The immlab Authors
//
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

#ifndef IMMLAB_ERRORS_HPP
#define IMMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace immlab {

/// Input rejected before any work was done: bad vertex id, size limit,
/// violated hypothesis of a construction.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural claim that a construction relies on did not hold on the
/// instance at hand. Carries a JSON dump of the instance so that the
/// counterexample can be replayed.
class ClaimViolation : public std::runtime_error {
 public:
  ClaimViolation(const std::string& what, std::string instance_json)
      : std::runtime_error(what), instance_json_(std::move(instance_json)) {}

  const std::string& instance_json() const noexcept { return instance_json_; }

 private:
  std::string instance_json_;
};

/// An exhaustive search ran out of its node budget. Distinct from a negative
/// answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of a structural check. `reason` is empty when the check passed.
struct Verdict {
  bool ok = true;
  std::string reason;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const noexcept { return ok; }
};

}  // namespace immlab

#endif  // IMMLAB_ERRORS_HPP
