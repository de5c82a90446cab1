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

#ifndef FOLKSO_ERRORS_HPP
#define FOLKSO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace folkso {

/// Bad input data: missing files, malformed records, unknown concepts.
/// Maps to CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration: out-of-range parameters, bad option values.
/// Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace folkso

#endif  // FOLKSO_ERRORS_HPP
