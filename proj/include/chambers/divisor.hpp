// Copyright 2026 The Chambers Authors.
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

#ifndef CHAMBERS_DIVISOR_HPP
#define CHAMBERS_DIVISOR_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>

#include "chambers/error.hpp"
#include "chambers/rational.hpp"

namespace chambers {

/// A class in the real Neron-Severi space, written in the surface's basis.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::size_t rank) : coords_(rank) {}
  explicit DivisorClass(RationalVector coords) : coords_(std::move(coords)) {}
  DivisorClass(std::initializer_list<Rational> coords) : coords_(coords) {}

  static DivisorClass unit(std::size_t rank, std::size_t index) {
    DivisorClass d(rank);
    d.coords_[index] = 1;
    return d;
  }

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  DivisorClass& operator+=(const DivisorClass& other) {
    check(other);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& other) {
    check(other);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
  }
  DivisorClass& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  /// this += s * other
  DivisorClass& add_scaled(const Rational& s, const DivisorClass& other) {
    check(other);
    if (s == 0) return *this;
    for (std::size_t i = 0; i < size(); ++i)
      if (other.coords_[i] != 0) coords_[i] += s * other.coords_[i];
    return *this;
  }

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  std::string to_string() const { return join(coords_); }

 private:
  void check(const DivisorClass& other) const {
    if (other.size() != size())
      throw DimensionMismatch("divisor classes of length " + std::to_string(size()) + " and " +
                              std::to_string(other.size()));
  }

  RationalVector coords_;
};

inline DivisorClass parse_class(std::string_view text) { return DivisorClass(parse_rational_list(text)); }

}  // namespace chambers

#endif  // CHAMBERS_DIVISOR_HPP
