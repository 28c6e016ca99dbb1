//
// Copyright 2026 the quboflow authors
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
//

#pragma once

#include <string>
#include <string_view>

namespace quboflow {

/// Shortest decimal that round-trips to the same double (std::to_chars).
/// All file output goes through this so reruns are byte-identical.
std::string format_double(double value);

/// Strict full-string parse; throws ParseError on trailing garbage.
double parse_double(std::string_view text);
long long parse_int(std::string_view text);

/// Strips leading/trailing blanks.
std::string_view trim(std::string_view s);

}  // namespace quboflow
