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

#ifndef CHAMBERS_RELATIONS_HPP
#define CHAMBERS_RELATIONS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chambers/atlas.hpp"
#include "chambers/curve_set.hpp"
#include "chambers/surface.hpp"
#include "chambers/zariski.hpp"

namespace chambers {

enum class Relation { WeylInZariski, InteriorInWeyl, NumericallyDetermined, Intersect };

/// Two curves whose intersection number witnesses a false verdict.
struct CurvePair {
  std::size_t first = 0;
  std::size_t second = 0;
  friend bool operator==(const CurvePair&, const CurvePair&) = default;
};

/// Nonempty S' in S \ S1 whose curves meet nothing else in S.
struct IsolatedSubset {
  CurveSet curves;
  friend bool operator==(const IsolatedSubset&, const IsolatedSubset&) = default;
};

/// Curves of S1 missing from S.
struct MissingCurves {
  CurveSet curves;
  friend bool operator==(const MissingCurves&, const MissingCurves&) = default;
};

using Certificate = std::variant<std::monostate, CurvePair, IsolatedSubset, MissingCurves, DivisorClass>;

struct RelationVerdict {
  Relation relation = Relation::WeylInZariski;
  bool verdict = false;
  CurveSet set;       // S
  CurveSet weyl_set;  // S1, for Intersect
  Certificate certificate;
};

namespace detail {

inline void require_negative_definite(const Surface& s, const CurveSet& set) {
  s.check_set(set);
  if (!set.empty() && !is_negative_definite(s.curve_matrix(set)))
    throw NotNegativeDefinite("curve set {" + s.format_set(set) + "} is not negative definite");
}

inline bool in_zx(const Surface& s, const CurveSet& set, const ChamberAtlas* atlas) {
  if (atlas) return atlas->contains(set);
  return set.empty() || is_negative_definite(s.curve_matrix(set));
}

}  // namespace detail

/// W_S is contained in Z_S iff every curve C' outside S with S + C' still
/// negative definite is orthogonal to all of S. A false verdict carries
/// (C', C) with C' . C > 0.
inline RelationVerdict weyl_subset_of_zariski(const Surface& s, const CurveSet& set,
                                              const ChamberAtlas* atlas = nullptr) {
  detail::require_negative_definite(s, set);
  RelationVerdict v{Relation::WeylInZariski, true, set};
  for (std::size_t c = 0; c < s.curve_count(); ++c) {
    if (set.contains(c)) continue;
    auto meets = std::find_if(set.begin(), set.end(), [&](std::size_t i) { return sgn(s.curve_pair(c, i)) > 0; });
    if (meets == set.end()) continue;
    if (!detail::in_zx(s, set.with(c), atlas)) continue;
    v.verdict = false;
    v.certificate = CurvePair{c, *meets};
    return v;
  }
  return v;
}

/// The interior of Z_S lies in W_S iff distinct curves of S are pairwise
/// orthogonal.
inline RelationVerdict interior_subset_of_weyl(const Surface& s, const CurveSet& set) {
  detail::require_negative_definite(s, set);
  RelationVerdict v{Relation::InteriorInWeyl, true, set};
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      if (s.curve_pair(set[a], set[b]) != 0) {
        v.verdict = false;
        v.certificate = CurvePair{set[a], set[b]};
        return v;
      }
  return v;
}

/// (C1.C2)^2 >= C1^2 * C2^2 for every pair of meeting curves, evaluated
/// exactly (both sides are products of rationals; C1.C2 > 0 so squaring
/// preserves the comparison with the square root).
inline RelationVerdict numerically_determined(const Surface& s) {
  RelationVerdict v{Relation::NumericallyDetermined, true};
  for (std::size_t a = 0; a < s.curve_count(); ++a)
    for (std::size_t b = a + 1; b < s.curve_count(); ++b) {
      const auto& m = s.curve_pair(a, b);
      if (sgn(m) <= 0) continue;
      if (m * m < s.curve_pair(a, a) * s.curve_pair(b, b)) {
        v.verdict = false;
        v.certificate = CurvePair{a, b};
        return v;
      }
    }
  return v;
}

/// Four formulations of numerical determinacy, each evaluated on its own:
/// (1) the meeting-pair inequality, (2) pairs in Z(X) are orthogonal,
/// (3) the W_S in Z_S condition for every S in the atlas, (4) pairwise
/// orthogonality inside every S in the atlas.
struct DeterminacyConditions {
  bool meeting_pairs = false;
  bool orthogonal_pairs = false;
  bool weyl_in_zariski_everywhere = false;
  bool interior_in_weyl_everywhere = false;

  bool agree() const {
    return meeting_pairs == orthogonal_pairs && meeting_pairs == weyl_in_zariski_everywhere &&
           meeting_pairs == interior_in_weyl_everywhere;
  }
};

inline DeterminacyConditions determinacy_conditions(const Surface& s, const ChamberAtlas& atlas) {
  DeterminacyConditions c;
  c.meeting_pairs = numerically_determined(s).verdict;
  c.orthogonal_pairs = true;
  for (std::size_t a = 0; a < s.curve_count() && c.orthogonal_pairs; ++a)
    for (std::size_t b = a + 1; b < s.curve_count(); ++b)
      if (atlas.contains(CurveSet{a, b}) && s.curve_pair(a, b) != 0) {
        c.orthogonal_pairs = false;
        break;
      }
  c.weyl_in_zariski_everywhere = std::all_of(atlas.sets.begin(), atlas.sets.end(), [&](const CurveSet& set) {
    return weyl_subset_of_zariski(s, set, &atlas).verdict;
  });
  c.interior_in_weyl_everywhere = std::all_of(atlas.sets.begin(), atlas.sets.end(), [&](const CurveSet& set) {
    return interior_subset_of_weyl(s, set).verdict;
  });
  return c;
}

inline DeterminacyConditions determinacy_conditions(const Surface& s, const AtlasOptions& options = {}) {
  return determinacy_conditions(s, enumerate_zx(s, options));
}

/// Subset form of the W_{S1} / Z_S intersection criterion: S1 in S, and
/// every nonempty S' in S \ S1 has some C' in S' meeting some C in S \ S'.
inline RelationVerdict chambers_intersect_bruteforce(const Surface& s, const CurveSet& weyl_set, const CurveSet& set) {
  detail::require_negative_definite(s, weyl_set);
  detail::require_negative_definite(s, set);
  RelationVerdict v{Relation::Intersect, false, set, weyl_set};
  if (!weyl_set.is_subset_of(set)) {
    v.certificate = MissingCurves{set_difference(weyl_set, set)};
    return v;
  }
  const auto rest = set_difference(set, weyl_set);
  if (rest.size() > 30) throw PreconditionFailed("subset enumeration over more than 30 curves");
  const std::uint64_t total = std::uint64_t{1} << rest.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t k = 0; k < rest.size(); ++k)
      if (mask >> k & 1) sub.push_back(rest[k]);
    const CurveSet subset(sub);
    bool meets = false;
    for (auto c1 : subset) {
      for (auto c : set)
        if (!subset.contains(c) && sgn(s.curve_pair(c1, c)) > 0) {
          meets = true;
          break;
        }
      if (meets) break;
    }
    if (!meets) {
      v.certificate = IsolatedSubset{subset};
      return v;
    }
  }
  v.verdict = true;
  return v;
}

/// Graph form: every connected component of the intersection graph on S
/// (edges between curves with positive intersection) contains a curve of S1.
inline RelationVerdict chambers_intersect_graph(const Surface& s, const CurveSet& weyl_set, const CurveSet& set) {
  detail::require_negative_definite(s, weyl_set);
  detail::require_negative_definite(s, set);
  RelationVerdict v{Relation::Intersect, false, set, weyl_set};
  if (!weyl_set.is_subset_of(set)) {
    v.certificate = MissingCurves{set_difference(weyl_set, set)};
    return v;
  }
  std::vector<int> component(set.size(), -1);
  int count = 0;
  for (std::size_t start = 0; start < set.size(); ++start) {
    if (component[start] >= 0) continue;
    std::vector<std::size_t> stack{start};
    component[start] = count;
    while (!stack.empty()) {
      const auto a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < set.size(); ++b)
        if (component[b] < 0 && sgn(s.curve_pair(set[a], set[b])) > 0) {
          component[b] = count;
          stack.push_back(b);
        }
    }
    ++count;
  }
  for (int comp = 0; comp < count; ++comp) {
    std::vector<std::size_t> members;
    bool anchored = false;
    for (std::size_t k = 0; k < set.size(); ++k)
      if (component[k] == comp) {
        members.push_back(set[k]);
        anchored = anchored || weyl_set.contains(set[k]);
      }
    if (!anchored) {
      v.certificate = IsolatedSubset{CurveSet(std::move(members))};
      return v;
    }
  }
  v.verdict = true;
  return v;
}

namespace detail {

/// a* with (H + sum a*_i C_i) . C_j = 0 for all C_j in the set.
inline RationalVector orthogonalizing_coefficients(const Surface& s, const CurveSet& set) {
  RationalVector rhs;
  for (auto i : set) rhs.push_back(-s.ample_dot(i));
  return solve_on(s, set, rhs);
}

inline RationalVector minus_ones_solution(const Surface& s, const CurveSet& set) {
  return solve_on(s, set, RationalVector(set.size(), Rational(-1)));
}

/// H + sum a*_i C_i: nef, with Null equal to the set.
inline DivisorClass orthogonal_positive_part(const Surface& s, const CurveSet& set) {
  return s.ample() + s.combination(set, orthogonalizing_coefficients(s, set));
}

inline Integer smallest_integer_above(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f + 1;
}

}  // namespace detail

/// D = H + sum (a*_i + x_i) C_i, where H + sum a*_i C_i is orthogonal to S
/// and sum x_i C_i pairs to -1 with every curve of S. Lies in W_S and in the
/// interior of Z_S.
inline DivisorClass witness_interior(const Surface& s, const CurveSet& set) {
  detail::require_negative_definite(s, set);
  if (set.empty()) return s.ample();
  const auto a = detail::orthogonalizing_coefficients(s, set);
  const auto x = detail::minus_ones_solution(s, set);
  RationalVector total(set.size());
  for (std::size_t k = 0; k < set.size(); ++k) total[k] = a[k] + x[k];
  return s.ample() + s.combination(set, total);
}

/// A class in W_S but outside Z_S, built from a curve C' with S + C'
/// negative definite and C' meeting S.
inline DivisorClass witness_weyl_not_in_zariski(const Surface& s, const CurveSet& set, std::size_t extra) {
  detail::require_negative_definite(s, set);
  if (extra >= s.curve_count()) throw DimensionMismatch("curve index out of range");
  if (set.contains(extra)) throw PreconditionFailed(s.name(extra) + " already belongs to the set");
  const auto grown = set.with(extra);
  if (!is_negative_definite(s.curve_matrix(grown)))
    throw PreconditionFailed("{" + s.format_set(grown) + "} is not negative definite");
  if (std::none_of(set.begin(), set.end(), [&](std::size_t i) { return sgn(s.curve_pair(extra, i)) > 0; }))
    throw PreconditionFailed(s.name(extra) + " is orthogonal to every curve of the set");

  const auto positive = detail::orthogonal_positive_part(s, grown);
  const auto c = detail::minus_ones_solution(s, grown);
  const Rational smallest = *std::min_element(c.begin(), c.end());
  const Rational extra_coeff = smallest / (2 * abs(Rational(s.curve_pair(extra, extra))));
  RationalVector coeffs(grown.size());
  for (std::size_t k = 0; k < grown.size(); ++k) coeffs[k] = grown[k] == extra ? extra_coeff : c[k];
  return positive + s.combination(grown, coeffs);
}

/// A class in the interior of Z_S that is not in W_S, for curves C_i, C_j
/// of S that meet. It pairs positively with C_i.
inline DivisorClass witness_interior_not_in_weyl(const Surface& s, const CurveSet& set, std::size_t i, std::size_t j) {
  detail::require_negative_definite(s, set);
  if (!set.contains(i) || !set.contains(j) || i == j)
    throw PreconditionFailed("the pair must be two distinct curves of the set");
  const auto meet = s.curve_pair(i, j);
  if (sgn(meet) <= 0)
    throw PreconditionFailed(s.name(i) + " and " + s.name(j) + " do not meet");
  const auto a = detail::orthogonalizing_coefficients(s, set);
  // k = 1 / (2|C_i^2|) for integral intersection numbers.
  const Rational k = std::min(Rational(1), meet) / (2 * abs(Rational(s.curve_pair(i, i))));
  RationalVector coeffs(set.size());
  for (std::size_t m = 0; m < set.size(); ++m) coeffs[m] = a[m] + (set[m] == i ? k : Rational(1));
  return s.ample() + s.combination(set, coeffs);
}

/// Staged construction of a class in W_{S1} and Z_S. Each stage adds the
/// curves of S meeting the current support T, rebuilds the positive part
/// orthogonal to the grown support, and sets N = n * N_prev + sum of the new
/// curves with n the smallest positive integer keeping every sign strict.
inline DivisorClass witness_intersection(const Surface& s, const CurveSet& weyl_set, const CurveSet& set) {
  if (weyl_set.empty()) throw PreconditionFailed("the Weyl set must be nonempty");
  if (!chambers_intersect_graph(s, weyl_set, set).verdict)
    throw PreconditionFailed("W_{" + s.format_set(weyl_set) + "} does not meet Z_{" + s.format_set(set) + "}");

  CurveSet support = weyl_set;
  DivisorClass positive = detail::orthogonal_positive_part(s, support);
  DivisorClass negative = s.combination(support, detail::minus_ones_solution(s, support));
  while (support != set) {
    std::vector<std::size_t> next;
    for (auto c : set)
      if (!support.contains(c) &&
          std::any_of(support.begin(), support.end(), [&](std::size_t t) { return sgn(s.curve_pair(c, t)) > 0; }))
        next.push_back(c);
    if (next.empty()) throw PreconditionFailed("staged construction stalled");
    const CurveSet added(next);
    const auto grown = set_union(support, added);
    DivisorClass added_sum = s.combination(added, RationalVector(added.size(), Rational(1)));

    // D.C = n * (N_prev . C) + (added . C) for C in the grown support.
    Integer n = 1;
    struct Constraint {
      Rational slope, offset;
      bool negative;
    };
    std::vector<Constraint> constraints;
    for (auto c : grown)
      constraints.push_back({s.dot_curve(negative, c), s.dot_curve(added_sum, c), weyl_set.contains(c)});
    for (const auto& k : constraints) {
      const Rational& a = k.slope;
      const Rational& b = k.offset;
      if (k.negative && sgn(a) < 0) n = std::max(n, detail::smallest_integer_above(b / -a));
      if (!k.negative && sgn(a) > 0) n = std::max(n, detail::smallest_integer_above(-b / a));
    }
    for (const auto& k : constraints) {
      const Rational value = Rational(n) * k.slope + k.offset;
      if (k.negative ? sgn(value) >= 0 : sgn(value) <= 0)
        throw PreconditionFailed("no integer multiplier keeps the stage constraints strict");
    }
    negative *= Rational(n);
    negative += added_sum;
    positive = detail::orthogonal_positive_part(s, grown);
    support = grown;
  }
  return positive + negative;
}

/// Decides W_{S1} meets Z_S by the graph criterion; a true verdict carries a
/// witness class from the staged construction (the ample class when both
/// sets are empty).
inline RelationVerdict chambers_intersect(const Surface& s, const CurveSet& weyl_set, const CurveSet& set) {
  auto v = chambers_intersect_graph(s, weyl_set, set);
  if (v.verdict) v.certificate = weyl_set.empty() ? s.ample() : witness_intersection(s, weyl_set, set);
  return v;
}

struct MembershipClaim {
  DivisorClass divisor;
  std::optional<CurveSet> in_weyl;
  std::optional<CurveSet> in_zariski;
  std::optional<bool> in_interior;
};

struct MembershipReport {
  std::vector<Check> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  std::string to_string() const { return SurfaceReport{checks}.to_string(); }
};

inline MembershipReport verify_membership(const Surface& s, const MembershipClaim& claim) {
  MembershipReport report;
  std::optional<Classification> c;
  try {
    c = classify(s, claim.divisor);
    report.checks.push_back({"big", true, "vol = " + to_string(s.pair(c->decomposition.positive, c->decomposition.positive))});
  } catch (const NotBig& e) {
    report.checks.push_back({"big", false, e.what()});
  }
  if (claim.in_weyl) {
    const bool pass = c && !c->weyl.wall && c->weyl.curves == *claim.in_weyl;
    report.checks.push_back({"weyl", pass, c ? "label " + format_label(s, c->weyl) : "not big"});
  }
  if (claim.in_zariski) {
    const bool pass = c && c->neg == *claim.in_zariski;
    report.checks.push_back({"zariski", pass, c ? "Neg = {" + s.format_set(c->neg) + "}" : "not big"});
  }
  if (claim.in_interior) {
    const bool pass = c && c->is_interior == *claim.in_interior;
    report.checks.push_back(
        {"interior", pass, c ? "Neg = {" + s.format_set(c->neg) + "}, Null(P) = {" + s.format_set(c->null_of_p) + "}" : "not big"});
  }
  return report;
}

/// Re-checks a verdict's certificate by direct exact arithmetic.
inline bool recheck(const Surface& s, const RelationVerdict& v) {
  const auto* pair = std::get_if<CurvePair>(&v.certificate);
  switch (v.relation) {
    case Relation::WeylInZariski:
      if (v.verdict) return std::holds_alternative<std::monostate>(v.certificate);
      return pair && !v.set.contains(pair->first) && v.set.contains(pair->second) &&
             sgn(s.curve_pair(pair->first, pair->second)) > 0 &&
             is_negative_definite(s.curve_matrix(v.set.with(pair->first)));
    case Relation::InteriorInWeyl:
      if (v.verdict) return std::holds_alternative<std::monostate>(v.certificate);
      return pair && pair->first != pair->second && v.set.contains(pair->first) && v.set.contains(pair->second) &&
             s.curve_pair(pair->first, pair->second) != 0;
    case Relation::NumericallyDetermined: {
      if (v.verdict) return std::holds_alternative<std::monostate>(v.certificate);
      if (!pair) return false;
      const auto& m = s.curve_pair(pair->first, pair->second);
      return sgn(m) > 0 && m * m < s.curve_pair(pair->first, pair->first) * s.curve_pair(pair->second, pair->second);
    }
    case Relation::Intersect: {
      if (v.verdict) {
        const auto* d = std::get_if<DivisorClass>(&v.certificate);
        if (!d) return std::holds_alternative<std::monostate>(v.certificate);
        return verify_membership(s, {*d, v.weyl_set, v.set, std::nullopt}).ok();
      }
      if (const auto* m = std::get_if<MissingCurves>(&v.certificate))
        return !m->curves.empty() && m->curves.is_subset_of(v.weyl_set) &&
               set_difference(m->curves, v.set) == m->curves;
      if (const auto* iso = std::get_if<IsolatedSubset>(&v.certificate)) {
        if (iso->curves.empty() || !iso->curves.is_subset_of(set_difference(v.set, v.weyl_set))) return false;
        for (auto a : iso->curves)
          for (auto b : v.set)
            if (!iso->curves.contains(b) && sgn(s.curve_pair(a, b)) > 0) return false;
        return true;
      }
      return false;
    }
  }
  return false;
}

}  // namespace chambers

#endif  // CHAMBERS_RELATIONS_HPP
