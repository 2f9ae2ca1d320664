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

#include "qwalk/radians.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw ArgumentError("rational multiple of pi overflows 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Radians reduce(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Radians::pi_times(narrow(num), narrow(den));
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Radians Radians::pi_times(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArgumentError("zero denominator in multiple of pi");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  Radians r;
  r.exact_ = true;
  r.num_ = num / g;
  r.den_ = den / g;
  return r;
}

Radians Radians::from_double(double radians) {
  Radians r;
  r.exact_ = false;
  r.value_ = radians;
  return r;
}

double Radians::value() const {
  if (!exact_) return value_;
  return static_cast<double>(num_) * std::numbers::pi / static_cast<double>(den_);
}

Radians Radians::operator+(const Radians& other) const {
  if (exact_ && other.exact_) {
    return reduce(Wide(num_) * other.den_ + Wide(other.num_) * den_,
                  Wide(den_) * other.den_);
  }
  return from_double(value() + other.value());
}

Radians Radians::operator-(const Radians& other) const { return *this + (-other); }

Radians Radians::operator-() const {
  if (exact_) return pi_times(-num_, den_);
  return from_double(-value_);
}

Radians Radians::normalized_angle() const {
  if (exact_) {
    std::int64_t period = 2 * den_;
    std::int64_t n = num_ % period;
    if (n < 0) n += period;
    return pi_times(n, den_);
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double v = std::fmod(value_, two_pi);
  if (v < 0.0) v += two_pi;
  if (v >= two_pi) v = 0.0;
  return from_double(v);
}

std::string Radians::to_string() const {
  if (!exact_) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value_);
    std::string out(buf, ptr);
    // Keep inexact values visibly decimal so they never re-parse as exact zero.
    if (out.find_first_of(".en") == std::string::npos) out += ".0";
    return out;
  }
  if (num_ == 0) return "0";
  std::string out;
  if (num_ == -1) {
    out = "-pi";
  } else if (num_ == 1) {
    out = "pi";
  } else {
    out = std::to_string(num_) + "pi";
  }
  if (den_ != 1) out += "/" + std::to_string(den_);
  return out;
}

std::optional<Radians> Radians::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) {
    // Plain integers stay exact as multiples of pi only when zero.
    if (auto i = parse_int(text); i && *i == 0) return Radians{};
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
      return std::nullopt;
    }
    return from_double(v);
  }

  std::string_view coeff = text.substr(0, pi_pos);
  std::string_view rest = text.substr(pi_pos + 2);
  std::int64_t num = 1;
  if (coeff == "-") {
    num = -1;
  } else if (!coeff.empty()) {
    auto c = parse_int(coeff);
    if (!c) return std::nullopt;
    num = *c;
  }
  std::int64_t den = 1;
  if (!rest.empty()) {
    if (rest.front() != '/') return std::nullopt;
    auto d = parse_int(rest.substr(1));
    if (!d || *d <= 0) return std::nullopt;
    den = *d;
  }
  return pi_times(num, den);
}

bool operator==(const Radians& a, const Radians& b) {
  if (a.exact_ != b.exact_) return false;
  if (a.exact_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.value_ == b.value_;
}

int Radians::compare(const Radians& a, const Radians& b) {
  if (a.exact_ && b.exact_) {
    Wide lhs = Wide(a.num_) * b.den_;
    Wide rhs = Wide(b.num_) * a.den_;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }
  double x = a.value();
  double y = b.value();
  return x < y ? -1 : (x > y ? 1 : 0);
}

}  // namespace qwalk
