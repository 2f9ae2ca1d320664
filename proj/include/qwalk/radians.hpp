// Copyright 2026 The qwalk Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qwalk {

/**
 * A real quantity measured in radians (also used for walk durations, since
 * with hbar = 1 time and phase share units).
 *
 * Values produced by the compiler are exact rational multiples of pi and stay
 * exact under addition and subtraction. Anything else is held as a double.
 * Mixing an exact and an inexact value yields an inexact one.
 */
class Radians {
 public:
  /** Zero, exact. */
  Radians() = default;

  /** num/den * pi, reduced to lowest terms. Throws on den == 0. */
  static Radians pi_times(std::int64_t num, std::int64_t den = 1);

  /** An inexact value given directly in radians. */
  static Radians from_double(double radians);

  bool exact() const { return exact_; }
  std::int64_t pi_num() const { return num_; }
  std::int64_t pi_den() const { return den_; }

  double value() const;

  bool is_zero() const { return exact_ ? num_ == 0 : value_ == 0.0; }
  bool is_negative() const { return exact_ ? num_ < 0 : value_ < 0.0; }

  Radians operator+(const Radians& other) const;
  Radians operator-(const Radians& other) const;
  Radians operator-() const;
  Radians& operator+=(const Radians& other) { return *this = *this + other; }

  /** Reduce into [0, 2pi). */
  Radians normalized_angle() const;

  /**
   * Canonical text: `0`, `pi`, `3pi/4`, `-pi/2`, ... for exact values and the
   * shortest round-tripping decimal otherwise.
   */
  std::string to_string() const;

  /**
   * Accepts `[-][p]pi[/q]` (p and q integers) or a decimal literal. Returns
   * nullopt when the text is neither.
   */
  static std::optional<Radians> parse(std::string_view text);

  /** Structural equality: exact values compare as rationals, inexact ones bitwise. */
  friend bool operator==(const Radians& a, const Radians& b);

  /**
   * Numeric comparison. Exact pairs compare exactly; otherwise compares the
   * double values.
   */
  static int compare(const Radians& a, const Radians& b);

 private:
  bool exact_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double value_ = 0.0;
};

}  // namespace qwalk
