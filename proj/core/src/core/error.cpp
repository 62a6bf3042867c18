/*
 * Copyright 2026 The SIPA Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sipa/core/error.hpp"

namespace sipa {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kInvalidLevel:
      return "invalid-level";
    case ErrorCode::kUnsupportedKind:
      return "unsupported-kind";
    case ErrorCode::kShape:
      return "shape";
    case ErrorCode::kMissingTarget:
      return "missing-target";
    case ErrorCode::kMissingValue:
      return "missing-value";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kIo:
      return "io";
    case ErrorCode::kDegenerateBinning:
      return "degenerate-binning";
    case ErrorCode::kCapacity:
      return "capacity";
    case ErrorCode::kSingularFit:
      return "singular-fit";
    case ErrorCode::kUndefinedVariance:
      return "undefined-variance";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sipa
