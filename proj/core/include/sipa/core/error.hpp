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

#ifndef SIPA_CORE_ERROR_HPP_
#define SIPA_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sipa {

// Failure categories surfaced by the library. The CLI maps these onto exit
// codes, so keep the set closed and stable.
enum class ErrorCode {
  kInvalidArgument,
  kInvalidLevel,
  kUnsupportedKind,
  kShape,
  kMissingTarget,
  kMissingValue,
  kParse,
  kIo,
  kDegenerateBinning,
  kCapacity,
  kSingularFit,
  kUndefinedVariance,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace sipa

#endif  // SIPA_CORE_ERROR_HPP_
