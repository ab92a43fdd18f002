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

#ifndef LEAFSEL_RATIONAL_H_
#define LEAFSEL_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace leafsel {

// Exact fraction num/den with den > 0, kept in lowest terms. Used for the
// trade-off parameter so that yield bounds are compared without rounding.
class Rational {
 public:
  // Denominators and numerators are capped so that products with tree sizes
  // stay inside 64 bits.
  static constexpr std::int64_t kMaxTerm = 1'000'000'000;

  Rational() = default;
  // Throws ParameterError on den == 0 or a term above kMaxTerm.
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "num/den" or a bare integer; decimals are rejected.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool in_open_unit_interval() const { return num_ > 0 && num_ < den_; }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace leafsel

#endif  // LEAFSEL_RATIONAL_H_
