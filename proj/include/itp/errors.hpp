// Copyright 2026 The itp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace itp {

// Invalid parameters or inconsistent configuration (CLI exit code 2).
class config_error : public std::invalid_argument {
 public:
  explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

// A size/work guard would be exceeded (CLI exit code 3).
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed, e.g. a factorization could not be
// certified (CLI exit code 4).
class check_error : public std::runtime_error {
 public:
  explicit check_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace itp
