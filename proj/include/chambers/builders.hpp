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

#ifndef CHAMBERS_BUILDERS_HPP
#define CHAMBERS_BUILDERS_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "chambers/surface.hpp"
#include "chambers/surface_io.hpp"

namespace chambers {

/// Which surface to build. Tokens: fourcollinear, fivepoints, fivelines,
/// delpezzo:R, cubicpoints:S:B, ruled:E; `custom` loads a surface file.
struct BuilderSpec {
  enum class Kind { FourCollinear, FivePointsThreeCollinear, FiveGeneralLines, DelPezzo, CubicPoints, Ruled, Custom };

  Kind kind = Kind::FourCollinear;
  int points = 0;        // r for del Pezzo, s for cubic points
  int degree_bound = 0;  // B for cubic points
  int e = 0;             // ruled surface invariant
  std::string file;      // custom

  static BuilderSpec four_collinear() { return {Kind::FourCollinear}; }
  static BuilderSpec five_points_three_collinear() { return {Kind::FivePointsThreeCollinear}; }
  static BuilderSpec five_general_lines() { return {Kind::FiveGeneralLines}; }
  static BuilderSpec del_pezzo(int r) { return {Kind::DelPezzo, r}; }
  static BuilderSpec cubic_points(int s, int bound) { return {Kind::CubicPoints, s, bound}; }
  static BuilderSpec ruled(int e) { return {Kind::Ruled, 0, 0, e}; }
  static BuilderSpec custom(std::string path) { return {Kind::Custom, 0, 0, 0, std::move(path)}; }

  static BuilderSpec parse(std::string_view token) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      const auto colon = token.find(':', start);
      parts.emplace_back(token.substr(start, colon - start));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    auto number = [&](std::size_t i) {
      const auto& p = parts[i];
      if (p.empty() || p.size() > 6 || !std::all_of(p.begin(), p.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InvalidSpec("invalid parameter '" + p + "' in builder '" + std::string(token) + "'");
      return std::stoi(p);
    };
    auto arity = [&](std::size_t n) {
      if (parts.size() != n + 1) throw InvalidSpec("builder '" + parts[0] + "' takes " + std::to_string(n) + " parameter(s)");
    };
    const auto& name = parts[0];
    if (name == "custom") {
      if (token.size() <= 7) throw InvalidSpec("custom builder needs a file path");
      return custom(std::string(token.substr(7)));
    }
    if (name == "fourcollinear") return arity(0), four_collinear();
    if (name == "fivepoints") return arity(0), five_points_three_collinear();
    if (name == "fivelines") return arity(0), five_general_lines();
    if (name == "delpezzo") return arity(1), del_pezzo(number(1));
    if (name == "ruled") return arity(1), ruled(number(1));
    if (name == "cubicpoints") return arity(2), cubic_points(number(1), number(2));
    throw InvalidSpec("unknown builder '" + std::string(token) + "'");
  }

  std::string token() const {
    switch (kind) {
      case Kind::FourCollinear: return "fourcollinear";
      case Kind::FivePointsThreeCollinear: return "fivepoints";
      case Kind::FiveGeneralLines: return "fivelines";
      case Kind::DelPezzo: return "delpezzo:" + std::to_string(points);
      case Kind::CubicPoints: return "cubicpoints:" + std::to_string(points) + ":" + std::to_string(degree_bound);
      case Kind::Ruled: return "ruled:" + std::to_string(e);
      case Kind::Custom: return "custom:" + file;
    }
    return {};
  }
};

namespace detail {

/// Basis {H, E1..Er} with form diag(1, -1, ..., -1).
inline SurfaceData blowup_plane(int r) {
  SurfaceData s;
  s.basis.push_back("H");
  for (int i = 1; i <= r; ++i) s.basis.push_back("E" + std::to_string(i));
  s.form = SymMatrix(r + 1);
  s.form.set(0, 0, 1);
  for (int i = 1; i <= r; ++i) s.form.set(i, i, -1);
  return s;
}

/// d*H - sum m_i E_i in the blow-up basis.
inline DivisorClass plane_class(int r, int d, const std::vector<int>& m) {
  DivisorClass c(r + 1);
  c[0] = d;
  for (int i = 0; i < r; ++i) c[i + 1] = -m[i];
  return c;
}

inline DivisorClass exceptional(int r, int i) {
  std::vector<int> m(r, 0);
  m[i - 1] = -1;
  return plane_class(r, 0, m);
}

/// H - sum_{i in points} E_i
inline DivisorClass line_through(int r, const std::vector<int>& points) {
  std::vector<int> m(r, 0);
  for (int p : points) m[p - 1] = 1;
  return plane_class(r, 1, m);
}

inline std::string index_name(const std::string& prefix, const std::vector<int>& items) {
  const bool wide = std::any_of(items.begin(), items.end(), [](int v) { return v > 9; });
  std::string out = prefix;
  for (std::size_t i = 0; i < items.size(); ++i) out += (wide && i ? "_" : "") + std::to_string(items[i]);
  return out;
}

/// Name of the class d*H - sum m_i E_i: L/Q plus point indices for lines and
/// conics through simple points, C<d>_<multiplicities> otherwise.
inline std::string plane_curve_name(int d, const std::vector<int>& m) {
  const bool simple = std::all_of(m.begin(), m.end(), [](int v) { return v == 0 || v == 1; });
  if (simple && (d == 1 || d == 2)) {
    std::vector<int> pts;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) pts.push_back(static_cast<int>(i) + 1);
    return index_name(d == 1 ? "L" : "Q", pts);
  }
  return index_name("C" + std::to_string(d) + "_", m);
}

/// True when d*H - sum m_i E_i lies in the Cremona orbit of an exceptional
/// class: repeated quadratic transformations centred at the three largest
/// multiplicities must reach some E_i.
inline bool cremona_reduces_to_exceptional(int d, std::vector<int> m) {
  while (m.size() < 3) m.push_back(0);
  while (true) {
    std::sort(m.begin(), m.end(), std::greater<>());
    if (d == 0) return m.back() == -1 && std::count(m.begin(), m.end(), 0) == static_cast<long>(m.size()) - 1;
    const int excess = m[0] + m[1] + m[2] - d;
    if (excess <= 0 || d < 0) return false;
    d -= excess;
    for (int i = 0; i < 3; ++i) m[i] -= excess;
  }
}

/// All classes d*H - sum m_i E_i with 1 <= d <= max_degree, m_i >= 0,
/// d^2 - sum m_i^2 = -1, 3d - sum m_i = 1 that are Cremona-equivalent to an
/// exceptional class. Multiplicity patterns are generated as descending
/// partitions and then spread over the r points.
inline std::vector<NegativeCurve> minus_one_curves(int r, int max_degree) {
  std::vector<NegativeCurve> out;
  for (int i = 1; i <= r; ++i) out.push_back({"E" + std::to_string(i), exceptional(r, i)});
  for (int d = 1; d <= max_degree; ++d) {
    const int target_sum = 3 * d - 1;
    const int target_sq = d * d + 1;
    std::vector<int> pattern;
    std::function<void(int, int, int)> descend = [&](int max_part, int sum_left, int sq_left) {
      if (sum_left == 0 && sq_left == 0) {
        if (static_cast<int>(pattern.size()) > r) return;
        std::vector<int> m(pattern);
        m.resize(r, 0);
        std::sort(m.begin(), m.end());
        do {
          if (cremona_reduces_to_exceptional(d, m)) out.push_back({plane_curve_name(d, m), plane_class(r, d, m)});
        } while (std::next_permutation(m.begin(), m.end()));
        return;
      }
      if (static_cast<int>(pattern.size()) >= r) return;
      for (int part = std::min(max_part, sum_left); part >= 1; --part) {
        if (part * part > sq_left) continue;
        // Remaining parts are at most `part`, so sum of squares <= part * sum.
        if (sq_left > part * sum_left) break;
        pattern.push_back(part);
        descend(part, sum_left - part, sq_left - part * part);
        pattern.pop_back();
      }
    };
    descend(d, target_sum, target_sq);
  }
  return out;
}

}  // namespace detail

inline Surface build_four_collinear() {
  auto s = detail::blowup_plane(4);
  for (int i = 1; i <= 4; ++i) s.curves.push_back({"E" + std::to_string(i), detail::exceptional(4, i)});
  s.curves.push_back({"L1234", detail::line_through(4, {1, 2, 3, 4})});
  s.ample = detail::plane_class(4, 5, {1, 1, 1, 1});
  s.meta["builder"] = "fourcollinear";
  return Surface(std::move(s));
}

/// P1, P2, P3 collinear, no other triple collinear.
inline Surface build_five_points_three_collinear() {
  auto s = detail::blowup_plane(5);
  for (int i = 1; i <= 5; ++i) s.curves.push_back({"E" + std::to_string(i), detail::exceptional(5, i)});
  s.curves.push_back({"L123", detail::line_through(5, {1, 2, 3})});
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      if (j <= 3) continue;
      s.curves.push_back({detail::index_name("L", {i, j}), detail::line_through(5, {i, j})});
    }
  s.ample = detail::plane_class(5, 6, std::vector<int>(5, 1));
  s.meta["builder"] = "fivepoints";
  return Surface(std::move(s));
}

/// Blow-up of the ten pairwise intersection points of five general lines.
/// Points are numbered by line pairs in lexicographic order, (1,2) -> E1,
/// (1,3) -> E2, ..., (4,5) -> E10, so line C1 carries E1..E4.
inline Surface build_five_general_lines() {
  auto s = detail::blowup_plane(10);
  for (int i = 1; i <= 10; ++i) s.curves.push_back({"E" + std::to_string(i), detail::exceptional(10, i)});
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) pairs.emplace_back(a, b);
  for (int line = 1; line <= 5; ++line) {
    std::vector<int> on_line;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (pairs[p].first == line || pairs[p].second == line) on_line.push_back(static_cast<int>(p) + 1);
    s.curves.push_back({"C" + std::to_string(line), detail::line_through(10, on_line)});
  }
  s.ample = detail::plane_class(10, 6, std::vector<int>(10, 1));
  s.meta["builder"] = "fivelines";
  s.meta["assumption"] = "declared curves are the ten exceptional curves and the five line transforms only";
  return Surface(std::move(s));
}

/// Blow-up of P^2 at r <= 8 general points; the negative curves are the
/// (-1)-curves, all of degree at most 6. Ample class is -K = 3H - sum E_i.
inline Surface build_del_pezzo(int r) {
  if (r < 0 || r > 8) throw InvalidSpec("del Pezzo surfaces need 0 <= r <= 8, got " + std::to_string(r));
  auto s = detail::blowup_plane(r);
  s.curves = detail::minus_one_curves(r, 6);
  s.ample = detail::plane_class(r, 3, std::vector<int>(r, 1));
  s.meta["builder"] = "delpezzo:" + std::to_string(r);
  return Surface(std::move(s));
}

/// Blow-up of s very general points on a plane cubic. Declares the cubic's
/// strict transform (when s >= 10, so that it is negative) and the
/// (-1)-curves of degree <= bound; the list is truncated at that bound.
inline Surface build_cubic_points(int points, int bound) {
  if (points < 0 || bound < 0) throw InvalidSpec("cubicpoints needs nonnegative parameters");
  auto s = detail::blowup_plane(points);
  s.curves = detail::minus_one_curves(points, bound);
  if (points >= 10) s.curves.push_back({"Cubic", detail::plane_class(points, 3, std::vector<int>(points, 1))});
  int k = 3;
  while (3 * k <= points || k * k <= points) ++k;
  s.ample = detail::plane_class(points, k, std::vector<int>(points, 1));
  s.meta["builder"] = "cubicpoints:" + std::to_string(points) + ":" + std::to_string(bound);
  s.meta["truncation_degree"] = std::to_string(bound);
  return Surface(std::move(s));
}

/// Geometrically ruled surface with invariant e: basis {C0, f},
/// C0^2 = -e, C0.f = 1, f^2 = 0.
inline Surface build_ruled(int e) {
  if (e < 0) throw InvalidSpec("ruled surfaces need e >= 0, got " + std::to_string(e));
  SurfaceData s;
  s.basis = {"C0", "f"};
  s.form = SymMatrix{{-e, 1}, {1, 0}};
  if (e > 0) {
    s.curves.push_back({"C0", DivisorClass{1, 0}});
    s.ample = DivisorClass{1, e + 1};
  } else {
    s.ample = DivisorClass{1, 1};
  }
  s.meta["builder"] = "ruled:" + std::to_string(e);
  return Surface(std::move(s));
}

inline Surface build(const BuilderSpec& spec) {
  using K = BuilderSpec::Kind;
  switch (spec.kind) {
    case K::FourCollinear: return build_four_collinear();
    case K::FivePointsThreeCollinear: return build_five_points_three_collinear();
    case K::FiveGeneralLines: return build_five_general_lines();
    case K::DelPezzo: return build_del_pezzo(spec.points);
    case K::CubicPoints: return build_cubic_points(spec.points, spec.degree_bound);
    case K::Ruled: return build_ruled(spec.e);
    case K::Custom: return parse_surface(read_text_file(spec.file));
  }
  throw InvalidSpec("unknown builder");
}

inline Surface build(std::string_view token) { return build(BuilderSpec::parse(token)); }

}  // namespace chambers

#endif  // CHAMBERS_BUILDERS_HPP
