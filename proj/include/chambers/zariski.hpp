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

#ifndef CHAMBERS_ZARISKI_HPP
#define CHAMBERS_ZARISKI_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chambers/curve_set.hpp"
#include "chambers/linalg.hpp"
#include "chambers/surface.hpp"

namespace chambers {

/// D = positive + negative, negative = sum coefficients[k] * C_{support[k]}.
struct ZariskiDecomposition {
  DivisorClass positive;
  DivisorClass negative;
  CurveSet support;
  RationalVector coefficients;

  friend bool operator==(const ZariskiDecomposition&, const ZariskiDecomposition&) = default;
};

/// Nefness relative to the declared curves: P.P >= 0, P.H >= 0 and P.C >= 0
/// for every declared C. Any other irreducible curve has C^2 >= 0 and so
/// lies in the closed positive cone, where such a P is nonnegative.
inline bool is_nef(const Surface& s, const DivisorClass& p) {
  if (sgn(s.pair(p, p)) < 0 || sgn(s.pair(p, s.ample())) < 0) return false;
  for (std::size_t i = 0; i < s.curve_count(); ++i)
    if (sgn(s.dot_curve(p, i)) < 0) return false;
  return true;
}

/// Coefficients a with sum_j a_j C_j . C_i = rhs_i over the set.
inline RationalVector solve_on(const Surface& s, const CurveSet& set, std::span<const Rational> rhs) {
  return solve(s.curve_matrix(set), rhs);
}

/// Iterative construction: start from the curves D is negative on, solve
/// for the orthogonal projection, absorb any curve the residual is negative
/// on, and repeat. Off the pseudoeffective cone one of the checks fails and
/// NotPseudoeffective is raised.
inline ZariskiDecomposition zariski_decompose(const Surface& s, const DivisorClass& d) {
  s.check_class(d);
  const auto d_dots = s.dot_curves(d);
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < s.curve_count(); ++i)
    if (sgn(d_dots[i]) < 0) members.push_back(i);

  CurveSet support(members);
  DivisorClass positive = d;
  RationalVector coeffs;
  while (true) {
    if (!support.empty()) {
      const auto m = s.curve_matrix(support);
      if (!is_negative_definite(m))
        throw NotPseudoeffective("class " + d.to_string() + " is not pseudoeffective: the curves {" +
                                 s.format_set(support) + "} do not have a negative definite matrix");
      RationalVector rhs;
      for (auto i : support) rhs.push_back(d_dots[i]);
      coeffs = solve(m, rhs);
      positive = d;
      for (std::size_t k = 0; k < support.size(); ++k) positive.add_scaled(-coeffs[k], s.curve(support[k]).cls);
    }
    std::vector<std::size_t> added;
    for (std::size_t i = 0; i < s.curve_count(); ++i)
      if (!support.contains(i) && sgn(s.dot_curve(positive, i)) < 0) added.push_back(i);
    if (added.empty()) break;
    for (auto i : support) added.push_back(i);
    support = CurveSet(std::move(added));
  }

  ZariskiDecomposition z;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (sgn(coeffs[k]) < 0)
      throw NotPseudoeffective("class " + d.to_string() + " is not pseudoeffective: coefficient of " +
                               s.name(support[k]) + " is " + to_string(coeffs[k]));
    kept.push_back(support[k]);
    z.coefficients.push_back(coeffs[k]);
  }
  if (!is_nef(s, positive))
    throw NotPseudoeffective("class " + d.to_string() + " is not pseudoeffective: residual " + positive.to_string() +
                             " is not nef");
  z.support = CurveSet(std::move(kept));
  z.positive = std::move(positive);
  z.negative = d - z.positive;
  return z;
}

struct DecompositionReport {
  std::vector<Check> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  std::string to_string() const { return SurfaceReport{checks}.to_string(); }
};

namespace detail {

/// Writes n as a positive combination of a negative definite set of declared
/// curves, if possible. Such a set is linearly independent, so each
/// candidate set admits at most one representation; the search extends the
/// forced set {C : n.C < 0} through negative definite supersets.
inline std::optional<std::pair<CurveSet, RationalVector>> effective_representation(const Surface& s,
                                                                                    const DivisorClass& n) {
  if (n.is_zero()) return std::make_pair(CurveSet{}, RationalVector{});
  const auto dots = s.dot_curves(n);
  std::vector<std::size_t> forced;
  for (std::size_t i = 0; i < s.curve_count(); ++i)
    if (sgn(dots[i]) < 0) forced.push_back(i);

  auto try_set = [&](const CurveSet& set) -> std::optional<RationalVector> {
    if (set.empty()) return std::nullopt;
    RationalVector rhs;
    for (auto i : set) rhs.push_back(dots[i]);
    auto a = solve(s.curve_matrix(set), rhs);
    for (const auto& v : a)
      if (sgn(v) <= 0) return std::nullopt;
    if (s.combination(set, a) != n) return std::nullopt;
    return a;
  };

  const CurveSet base(forced);
  if (!base.empty() && !is_negative_definite(s.curve_matrix(base))) return std::nullopt;
  std::optional<std::pair<CurveSet, RationalVector>> found;
  std::vector<std::size_t> current(forced);
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (found) return;
    const CurveSet set(current);
    if (auto a = try_set(set)) {
      found = std::make_pair(set, std::move(*a));
      return;
    }
    for (std::size_t i = from; i < s.curve_count() && !found; ++i) {
      if (base.contains(i)) continue;
      auto next = set.with(i);
      if (!is_negative_definite(s.curve_matrix(next))) continue;
      current.push_back(i);
      extend(i + 1);
      current.pop_back();
    }
  };
  extend(0);
  return found;
}

}  // namespace detail

/// Checks a proposed decomposition D = P + N against the three defining
/// properties, reporting the exact values that violate them.
inline DecompositionReport verify_decomposition(const Surface& s, const DivisorClass& d, const DivisorClass& p,
                                                const DivisorClass& n) {
  s.check_class(d);
  s.check_class(p);
  s.check_class(n);
  DecompositionReport report;
  report.checks.push_back({"sum", p + n == d, p + n == d ? "" : "P + N = " + (p + n).to_string()});

  std::vector<std::string> bad;
  const auto p2 = s.pair(p, p);
  if (sgn(p2) < 0) bad.push_back("P.P = " + to_string(p2));
  const auto ph = s.pair(p, s.ample());
  if (sgn(ph) < 0) bad.push_back("P.H = " + to_string(ph));
  for (std::size_t i = 0; i < s.curve_count(); ++i) {
    const auto v = s.dot_curve(p, i);
    if (sgn(v) < 0) bad.push_back("P." + s.name(i) + " = " + to_string(v));
  }
  std::string detail_text;
  for (std::size_t i = 0; i < bad.size(); ++i) detail_text += (i ? "; " : "") + bad[i];
  report.checks.push_back({"nef", bad.empty(), detail_text});

  const auto rep = detail::effective_representation(s, n);
  if (!rep) {
    report.checks.push_back(
        {"negative_definite_support", false, "N = " + n.to_string() + " is not a positive combination of a negative definite set of declared curves"});
    report.checks.push_back({"orthogonal", false, "no support to test"});
    return report;
  }
  std::string rep_text;
  for (std::size_t k = 0; k < rep->first.size(); ++k)
    rep_text += (k ? " + " : "") + to_string(rep->second[k]) + "*" + s.name(rep->first[k]);
  report.checks.push_back({"negative_definite_support", true, rep->first.empty() ? "N = 0" : "N = " + rep_text});

  bad.clear();
  for (auto i : rep->first) {
    const auto v = s.dot_curve(p, i);
    if (v != 0) bad.push_back("P." + s.name(i) + " = " + to_string(v));
  }
  detail_text.clear();
  for (std::size_t i = 0; i < bad.size(); ++i) detail_text += (i ? "; " : "") + bad[i];
  report.checks.push_back({"orthogonal", bad.empty(), detail_text});
  return report;
}

/// Neg(D): the components of the negative part.
inline CurveSet neg_set(const Surface& s, const DivisorClass& d) { return zariski_decompose(s, d).support; }

/// Null(P) over the declared curves; P must be nef.
inline CurveSet null_set(const Surface& s, const DivisorClass& p) {
  if (!is_nef(s, p)) throw NotNef("class " + p.to_string() + " is not nef");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.curve_count(); ++i)
    if (s.dot_curve(p, i) == 0) out.push_back(i);
  return CurveSet(std::move(out));
}

struct Volume {
  Rational value;
  bool pseudoeffective = true;
};

/// vol(D) = P_D^2 on the pseudoeffective cone; 0, flagged, elsewhere.
inline Volume volume(const Surface& s, const DivisorClass& d) {
  try {
    const auto z = zariski_decompose(s, d);
    return {s.pair(z.positive, z.positive), true};
  } catch (const NotPseudoeffective&) {
    return {0, false};
  }
}

inline bool is_big(const Surface& s, const DivisorClass& d) { return sgn(volume(s, d).value) > 0; }

}  // namespace chambers

#endif  // CHAMBERS_ZARISKI_HPP
