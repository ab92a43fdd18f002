// Copyright 2026 The leafsel Authors
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

#ifndef LEAFSEL_ERRORS_H_
#define LEAFSEL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace leafsel {

// Malformed data: ids out of range, unparsable files.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad numeric parameter (p outside (0,1), m = 0, oracle size limit).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The contracted tree has no labelable core (m <= 3).
class DegenerateTree : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal precondition was broken by corrupt input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace leafsel

#endif  // LEAFSEL_ERRORS_H_
