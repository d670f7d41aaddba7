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

#ifndef CHAMBERS_CURVE_SET_HPP
#define CHAMBERS_CURVE_SET_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace chambers {

/// A finite set of declared negative curves, held as sorted distinct
/// indices into Surface::curves(). Ordering is lexicographic on the index
/// lists, which is the canonical order used for all output.
class CurveSet {
 public:
  CurveSet() = default;
  CurveSet(std::initializer_list<std::size_t> indices) : CurveSet(std::vector<std::size_t>(indices)) {}
  explicit CurveSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  }

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  std::span<const std::size_t> indices() const noexcept { return indices_; }

  bool contains(std::size_t index) const { return std::binary_search(indices_.begin(), indices_.end(), index); }

  bool is_subset_of(const CurveSet& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
  }

  CurveSet with(std::size_t index) const {
    auto v = indices_;
    v.push_back(index);
    return CurveSet(std::move(v));
  }

  friend CurveSet set_union(const CurveSet& a, const CurveSet& b) {
    std::vector<std::size_t> v;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
    return CurveSet(std::move(v));
  }

  friend CurveSet set_difference(const CurveSet& a, const CurveSet& b) {
    std::vector<std::size_t> v;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
    return CurveSet(std::move(v));
  }

  friend bool operator==(const CurveSet&, const CurveSet&) = default;
  friend auto operator<=>(const CurveSet& a, const CurveSet& b) { return a.indices_ <=> b.indices_; }

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace chambers

#endif  // CHAMBERS_CURVE_SET_HPP
