// Copyright 2026 The folkso Authors
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

#ifndef FOLKSO_PORTER_HPP
#define FOLKSO_PORTER_HPP

#include <string>
#include <string_view>

namespace folkso {

/// Porter stemming algorithm (M.F. Porter, 1980).
///
/// Follows the behavior of the author's maintained reference
/// implementation, including its documented departures from the 1980
/// paper: words of length <= 2 are returned unchanged, step 2 uses
/// "bli" -> "ble" instead of "abli" -> "able", and step 2 gains
/// "logi" -> "log". Input must be lowercase ASCII letters; anything
/// else is the caller's responsibility (the normalizer only stems
/// all-alphabetic words).
std::string porter_stem(std::string_view word);

}  // namespace folkso

#endif  // FOLKSO_PORTER_HPP
