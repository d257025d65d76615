// Copyright 2026 The sngames Authors
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

#ifndef SNG_ERROR_HPP_
#define SNG_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sng {

// Every failure the library reports carries one of these codes. The string
// form (to_string) is what the CLI prints and what the Python layer exposes.
enum class ErrorCode {
  // network validation
  kWeightOutOfRange,
  kWeightSumExceeded,
  kThresholdOutOfRange,
  kThresholdProductMismatch,
  kEmptyProductSet,
  kNonpositiveC0,
  kDuplicateEdge,
  kDuplicateNode,
  kSelfLoop,
  kDanglingEdgeEndpoint,
  kEmptyNetwork,
  // lookups and profiles
  kUnknownNode,
  kUnknownProduct,
  kInvalidProfile,
  // solver preconditions
  kGuardExceeded,
  kNotADag,
  kNotASimpleCycle,
  kHasSourceNodes,
  kInvalidCore,
  kNotANashEquilibrium,
  kTrivialProfile,
  kInvalidScheduler,
  kInvalidArgument,
  // generators
  kConstraintViolated,
  kInvalidShape,
  kUnsatisfiableClass,
  // documents
  kSyntaxError,
  kArithmeticOverflow,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when an exhaustive routine would have to visit more joint strategies
// than the caller allowed.
class GuardExceeded : public Error {
 public:
  GuardExceeded(std::uint64_t state_count, std::uint64_t guard);
  std::uint64_t state_count() const noexcept { return state_count_; }
  std::uint64_t guard() const noexcept { return guard_; }

 private:
  std::uint64_t state_count_;
  std::uint64_t guard_;
};

// True for the codes produced by network validation (CLI exit code 3).
bool is_validation_code(ErrorCode code);

}  // namespace sng

#endif  // SNG_ERROR_HPP_
