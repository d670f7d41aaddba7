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

#ifndef CHAMBERS_ATLAS_HPP
#define CHAMBERS_ATLAS_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "chambers/curve_set.hpp"
#include "chambers/linalg.hpp"
#include "chambers/surface.hpp"
#include "chambers/zariski.hpp"

namespace chambers {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct AtlasOptions {
  std::optional<std::size_t> max_size;
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned workers = 1;
};

/// The nonempty sets of declared curves with negative definite intersection
/// matrix, in canonical order. Each set indexes one Zariski chamber and one
/// Weyl chamber; the empty set adds the nef chamber and the ample cone.
struct ChamberAtlas {
  std::vector<CurveSet> sets;
  std::size_t zariski_count = 1;
  std::size_t weyl_count = 1;
  std::optional<std::size_t> max_size;
  std::uint64_t nodes = 0;

  bool contains(const CurveSet& set) const {
    if (set.empty()) return true;
    return std::binary_search(sets.begin(), sets.end(), set);
  }
};

namespace detail {

class AtlasSearch {
 public:
  AtlasSearch(const Surface& s, const AtlasOptions& options, std::atomic<std::uint64_t>& nodes)
      : s_(s), options_(options), nodes_(nodes) {}

  /// Enumerates every listed set whose smallest index is `root`.
  bool run_root(std::size_t root) {
    current_.clear();
    return visit(root);
  }

  std::vector<CurveSet>& found() { return found_; }

 private:
  bool visit(std::size_t i) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > options_.node_budget) return false;
    column_.clear();
    for (auto j : current_) column_.push_back(s_.curve_pair(j, i));
    if (!ldl_.try_push(column_, s_.curve_pair(i, i))) return true;
    current_.push_back(i);
    found_.emplace_back(current_);
    if (!options_.max_size || current_.size() < *options_.max_size) {
      for (std::size_t next = i + 1; next < s_.curve_count(); ++next)
        if (!visit(next)) return false;
    }
    current_.pop_back();
    ldl_.pop();
    return true;
  }

  const Surface& s_;
  const AtlasOptions& options_;
  std::atomic<std::uint64_t>& nodes_;
  IncrementalLdl ldl_;
  std::vector<std::size_t> current_;
  RationalVector column_;
  std::vector<CurveSet> found_;
};

}  // namespace detail

/// Depth-first enumeration in increasing index order, extending a set only
/// while it stays negative definite (every principal submatrix of a
/// negative definite matrix is negative definite). Throws BudgetExceeded
/// once more than options.node_budget extension attempts are made.
inline ChamberAtlas enumerate_zx(const Surface& s, const AtlasOptions& options = {}) {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exceeded{false};
  const std::size_t n = s.curve_count();
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::vector<CurveSet>> parts(workers);

  auto work = [&](unsigned w) {
    detail::AtlasSearch search(s, options, nodes);
    for (std::size_t root = w; root < n && !exceeded; root += workers) {
      if (!search.run_root(root)) {
        exceeded = true;
        return;
      }
    }
    parts[w] = std::move(search.found());
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  if (exceeded)
    throw BudgetExceeded("chamber enumeration exceeded the node budget of " + std::to_string(options.node_budget));

  ChamberAtlas atlas;
  for (auto& part : parts)
    for (auto& set : part) atlas.sets.push_back(std::move(set));
  std::sort(atlas.sets.begin(), atlas.sets.end());
  atlas.zariski_count = atlas.weyl_count = atlas.sets.size() + 1;
  atlas.max_size = options.max_size;
  atlas.nodes = nodes;
  return atlas;
}

/// Count header followed by one "S: name,name" line per set.
inline std::string export_atlas(const Surface& s, const ChamberAtlas& atlas) {
  std::ostringstream out;
  out << "zariski=" << atlas.zariski_count << " weyl=" << atlas.weyl_count << " sets=" << atlas.sets.size();
  if (atlas.max_size) out << " max_size=" << *atlas.max_size;
  out << '\n';
  for (const auto& set : atlas.sets) out << "S: " << s.format_set(set) << '\n';
  return out.str();
}

/// Either a Weyl chamber W_S (curves = S, the curves D is negative on) or a
/// wall (curves = those D is orthogonal to).
struct WeylLabel {
  bool wall = false;
  CurveSet curves;

  friend bool operator==(const WeylLabel&, const WeylLabel&) = default;
};

/// Label by sign pattern alone; no bigness check.
inline WeylLabel sign_label(const Surface& s, const DivisorClass& d) {
  std::vector<std::size_t> negative, zero;
  for (std::size_t i = 0; i < s.curve_count(); ++i) {
    const int sg = sgn(s.dot_curve(d, i));
    if (sg < 0) negative.push_back(i);
    if (sg == 0) zero.push_back(i);
  }
  if (!zero.empty()) return {true, CurveSet(std::move(zero))};
  return {false, CurveSet(std::move(negative))};
}

inline WeylLabel weyl_label(const Surface& s, const DivisorClass& d) {
  if (!is_big(s, d)) throw NotBig("class " + d.to_string() + " is not big");
  return sign_label(s, d);
}

struct Classification {
  ZariskiDecomposition decomposition;
  CurveSet neg;
  CurveSet null_of_p;
  WeylLabel weyl;
  bool is_interior = false;
  bool is_nef_chamber = false;
};

/// Zariski chamber (Neg D), Null(P_D), Weyl chamber or wall, and whether D
/// lies in the interior of its Zariski chamber (Neg D = Null P_D).
inline Classification classify(const Surface& s, const DivisorClass& d) {
  Classification c;
  try {
    c.decomposition = zariski_decompose(s, d);
  } catch (const NotPseudoeffective&) {
    throw NotBig("class " + d.to_string() + " is not big (not pseudoeffective)");
  }
  if (sgn(s.pair(c.decomposition.positive, c.decomposition.positive)) <= 0)
    throw NotBig("class " + d.to_string() + " is not big (positive part has self-intersection 0)");
  c.neg = c.decomposition.support;
  c.null_of_p = null_set(s, c.decomposition.positive);
  c.weyl = sign_label(s, d);
  c.is_interior = c.neg == c.null_of_p;
  c.is_nef_chamber = c.neg.empty();
  return c;
}

inline std::string format_label(const Surface& s, const WeylLabel& label) {
  return (label.wall ? "wall{" : "{") + s.format_set(label.curves) + "}";
}

}  // namespace chambers

#endif  // CHAMBERS_ATLAS_HPP
