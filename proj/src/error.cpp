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

#include "sng/error.hpp"

namespace sng {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kWeightOutOfRange: return "weight-out-of-range";
    case ErrorCode::kWeightSumExceeded: return "weight-sum-exceeded";
    case ErrorCode::kThresholdOutOfRange: return "threshold-out-of-range";
    case ErrorCode::kThresholdProductMismatch: return "threshold-product-mismatch";
    case ErrorCode::kEmptyProductSet: return "empty-product-set";
    case ErrorCode::kNonpositiveC0: return "nonpositive-c0";
    case ErrorCode::kDuplicateEdge: return "duplicate-edge";
    case ErrorCode::kDuplicateNode: return "duplicate-node";
    case ErrorCode::kSelfLoop: return "self-loop";
    case ErrorCode::kDanglingEdgeEndpoint: return "dangling-edge-endpoint";
    case ErrorCode::kEmptyNetwork: return "empty-network";
    case ErrorCode::kUnknownNode: return "unknown-node";
    case ErrorCode::kUnknownProduct: return "unknown-product";
    case ErrorCode::kInvalidProfile: return "invalid-profile";
    case ErrorCode::kGuardExceeded: return "guard-exceeded";
    case ErrorCode::kNotADag: return "not-a-dag";
    case ErrorCode::kNotASimpleCycle: return "not-a-simple-cycle";
    case ErrorCode::kHasSourceNodes: return "has-source-nodes";
    case ErrorCode::kInvalidCore: return "invalid-core";
    case ErrorCode::kNotANashEquilibrium: return "not-a-nash-equilibrium";
    case ErrorCode::kTrivialProfile: return "trivial-profile";
    case ErrorCode::kInvalidScheduler: return "invalid-scheduler";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kConstraintViolated: return "constraint-violated";
    case ErrorCode::kInvalidShape: return "invalid-shape";
    case ErrorCode::kUnsatisfiableClass: return "unsatisfiable-class";
    case ErrorCode::kSyntaxError: return "syntax-error";
    case ErrorCode::kArithmeticOverflow: return "arithmetic-overflow";
  }
  return "unknown-error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

GuardExceeded::GuardExceeded(std::uint64_t state_count, std::uint64_t guard)
    : Error(ErrorCode::kGuardExceeded,
            "joint strategy count " + std::to_string(state_count) +
                " exceeds guard " + std::to_string(guard)),
      state_count_(state_count),
      guard_(guard) {}

bool is_validation_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kWeightOutOfRange:
    case ErrorCode::kWeightSumExceeded:
    case ErrorCode::kThresholdOutOfRange:
    case ErrorCode::kThresholdProductMismatch:
    case ErrorCode::kEmptyProductSet:
    case ErrorCode::kNonpositiveC0:
    case ErrorCode::kDuplicateEdge:
    case ErrorCode::kDuplicateNode:
    case ErrorCode::kSelfLoop:
    case ErrorCode::kDanglingEdgeEndpoint:
    case ErrorCode::kEmptyNetwork:
    case ErrorCode::kUnknownProduct:
      return true;
    default:
      return false;
  }
}

}  // namespace sng
