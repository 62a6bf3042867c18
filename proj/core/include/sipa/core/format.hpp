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

#ifndef SIPA_CORE_FORMAT_HPP_
#define SIPA_CORE_FORMAT_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace sipa {

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

// Whole-string parse; nullopt unless `text` is a complete number.
std::optional<double> parse_double(std::string_view text);

}  // namespace sipa

#endif  // SIPA_CORE_FORMAT_HPP_
