// Copyright 2026 The matchcore Authors
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

#ifndef MATCHCORE_ERRORS_H_
#define MATCHCORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace matchcore {

// Malformed or invalid input: bad game file, unknown vertex, wrong variant.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive enumeration would exceed its configured limit.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, long long cap, long long requested)
      : std::runtime_error(what + " (cap " + std::to_string(cap) +
                           ", needed " + std::to_string(requested) + ")"),
        cap_(cap),
        requested_(requested) {}

  long long cap() const { return cap_; }
  long long requested() const { return requested_; }

 private:
  long long cap_;
  long long requested_;
};

}  // namespace matchcore

#endif  // MATCHCORE_ERRORS_H_
