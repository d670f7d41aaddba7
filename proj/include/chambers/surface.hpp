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

#ifndef CHAMBERS_SURFACE_HPP
#define CHAMBERS_SURFACE_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chambers/curve_set.hpp"
#include "chambers/divisor.hpp"
#include "chambers/error.hpp"
#include "chambers/linalg.hpp"

namespace chambers {

struct NegativeCurve {
  std::string name;
  DivisorClass cls;

  friend bool operator==(const NegativeCurve&, const NegativeCurve&) = default;
};

/// Raw, possibly invalid, surface description. Surface wraps a validated one.
struct SurfaceData {
  std::vector<std::string> basis;
  SymMatrix form;
  DivisorClass ample;
  std::vector<NegativeCurve> curves;
  std::map<std::string, std::string> meta;

  friend bool operator==(const SurfaceData&, const SurfaceData&) = default;
};

/// Raw pairing a^T * form * b.
inline Rational pair(const SymMatrix& form, const DivisorClass& a, const DivisorClass& b) {
  if (a.size() != form.dim() || b.size() != form.dim())
    throw DimensionMismatch("pairing classes of length " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()) + " with a form of rank " + std::to_string(form.dim()));
  Rational total = 0;
  for (std::size_t i = 0; i < form.dim(); ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < form.dim(); ++j)
      if (b[j] != 0 && form(i, j) != 0) row += form(i, j) * b[j];
    total += a[i] * row;
  }
  return total;
}

/// Name order: runs of digits compare numerically, so E2 < E10.
inline bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      auto na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      while (na.size() > 1 && na[0] == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb[0] == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SurfaceReport {
  std::vector<Check> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  std::string to_string() const {
    std::ostringstream out;
    for (const auto& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << '\n';
    }
    return out.str();
  }
};

class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(SurfaceReport report)
      : Error("surface failed validation:\n" + report.to_string()), report_(std::move(report)) {}
  const SurfaceReport& report() const noexcept { return report_; }

 private:
  SurfaceReport report_;
};

/// Checks every structural requirement on a surface description: hyperbolic
/// signature of the form, positivity of the ample class, and the declared
/// curves being negative, ample-positive and pairwise nonnegative.
inline SurfaceReport validate(const SurfaceData& s) {
  SurfaceReport report;
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  auto join_list = [](const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "; " : "") + items[i];
    return out;
  };

  const std::size_t rho = s.basis.size();
  {
    std::vector<std::string> bad;
    auto sorted = s.basis;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i] == sorted[i + 1]) bad.push_back("duplicate label " + sorted[i]);
    for (const auto& b : s.basis)
      if (b.empty()) bad.push_back("empty label");
    if (rho == 0) bad.push_back("basis is empty");
    add("basis.labels", bad.empty(), join_list(bad));
  }

  const bool form_ok = s.form.dim() == rho && rho > 0;
  add("form.dimension", form_ok,
      form_ok ? "" : "form has dimension " + std::to_string(s.form.dim()) + ", basis has " + std::to_string(rho));
  {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < s.form.dim(); ++i)
      for (std::size_t j = i; j < s.form.dim(); ++j)
        if (!is_integer(s.form(i, j)))
          bad.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ") = " + to_string(s.form(i, j)));
    add("form.integral", bad.empty(), join_list(bad));
  }
  if (form_ok) {
    const auto in = inertia(s.form);
    const bool hyperbolic = in == Inertia{1, rho - 1, 0};
    add("form.signature", hyperbolic,
        hyperbolic ? ""
                   : "inertia (" + std::to_string(in.n_pos) + "," + std::to_string(in.n_neg) + "," +
                         std::to_string(in.n_zero) + "), expected (1," + std::to_string(rho - 1) + ",0)");
  }

  const bool ample_dim = s.ample.size() == rho;
  add("ample.dimension", ample_dim && form_ok,
      ample_dim ? "" : "ample has length " + std::to_string(s.ample.size()));
  if (ample_dim && form_ok) {
    const auto a2 = pair(s.form, s.ample, s.ample);
    add("ample.self_intersection", sgn(a2) > 0, sgn(a2) > 0 ? "" : "ample.ample = " + to_string(a2));
  }

  {
    std::vector<std::string> bad;
    for (const auto& c : s.curves)
      if (c.cls.size() != rho) bad.push_back(c.name + " has length " + std::to_string(c.cls.size()));
    add("curves.dimension", bad.empty(), join_list(bad));
    if (!bad.empty() || !form_ok || !ample_dim) return report;
  }
  {
    std::vector<std::string> bad;
    std::vector<std::string> names;
    for (const auto& c : s.curves) {
      if (c.name.empty() || c.name.find_first_of(", \t\n") != std::string::npos)
        bad.push_back("invalid name '" + c.name + "'");
      names.push_back(c.name);
    }
    std::sort(names.begin(), names.end());
    for (std::size_t i = 0; i + 1 < names.size(); ++i)
      if (names[i] == names[i + 1]) bad.push_back("duplicate name " + names[i]);
    add("curves.names", bad.empty(), join_list(bad));
  }
  {
    std::vector<std::string> bad;
    for (const auto& c : s.curves) {
      const auto c2 = pair(s.form, c.cls, c.cls);
      if (sgn(c2) >= 0) bad.push_back(c.name + "." + c.name + " = " + to_string(c2));
    }
    add("curves.negative", bad.empty(), join_list(bad));
  }
  {
    std::vector<std::string> bad;
    for (const auto& c : s.curves) {
      const auto hc = pair(s.form, s.ample, c.cls);
      if (sgn(hc) <= 0) bad.push_back("ample." + c.name + " = " + to_string(hc));
    }
    add("curves.ample_positive", bad.empty(), join_list(bad));
  }
  {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < s.curves.size(); ++i)
      for (std::size_t j = i + 1; j < s.curves.size(); ++j) {
        const auto cc = pair(s.form, s.curves[i].cls, s.curves[j].cls);
        if (sgn(cc) < 0) bad.push_back(s.curves[i].name + "." + s.curves[j].name + " = " + to_string(cc));
      }
    add("curves.meet_nonnegative", bad.empty(), join_list(bad));
  }
  return report;
}

/// A validated surface: basis, intersection form, ample class and the
/// declared negative curves, which the model treats as the complete list.
/// Curves are kept in natural name order; immutable after construction.
class Surface {
 public:
  explicit Surface(SurfaceData data) : data_(std::move(data)) {
    std::stable_sort(data_.curves.begin(), data_.curves.end(),
                     [](const NegativeCurve& a, const NegativeCurve& b) { return natural_less(a.name, b.name); });
    auto report = chambers::validate(data_);
    if (!report.ok()) throw ValidationFailed(std::move(report));
    const std::size_t n = data_.curves.size();
    duals_.reserve(n);
    for (const auto& c : data_.curves) {
      DivisorClass dual(rank());
      for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) dual[i] += data_.form(i, j) * c.cls[j];
      duals_.push_back(std::move(dual));
    }
    gram_ = SymMatrix(n);
    ample_dots_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      ample_dots_[i] = dot_curve(data_.ample, i);
      for (std::size_t j = i; j < n; ++j) gram_.set(i, j, dot_curve(data_.curves[j].cls, i));
    }
  }

  const SurfaceData& data() const noexcept { return data_; }
  std::size_t rank() const noexcept { return data_.basis.size(); }
  const std::vector<std::string>& basis() const noexcept { return data_.basis; }
  const SymMatrix& form() const noexcept { return data_.form; }
  const DivisorClass& ample() const noexcept { return data_.ample; }
  const std::vector<NegativeCurve>& curves() const noexcept { return data_.curves; }
  std::size_t curve_count() const noexcept { return data_.curves.size(); }
  const NegativeCurve& curve(std::size_t i) const { return data_.curves.at(i); }
  const std::map<std::string, std::string>& meta() const noexcept { return data_.meta; }

  Rational pair(const DivisorClass& a, const DivisorClass& b) const { return chambers::pair(data_.form, a, b); }

  /// D . C_i
  Rational dot_curve(const DivisorClass& d, std::size_t i) const {
    check_class(d);
    const auto& dual = duals_[i];
    Rational total = 0;
    for (std::size_t k = 0; k < rank(); ++k)
      if (d[k] != 0 && dual[k] != 0) total += d[k] * dual[k];
    return total;
  }

  RationalVector dot_curves(const DivisorClass& d) const {
    RationalVector out(curve_count());
    for (std::size_t i = 0; i < curve_count(); ++i) out[i] = dot_curve(d, i);
    return out;
  }

  const Rational& curve_pair(std::size_t i, std::size_t j) const { return gram_(i, j); }
  const SymMatrix& curve_gram() const noexcept { return gram_; }
  const Rational& ample_dot(std::size_t i) const { return ample_dots_[i]; }

  SymMatrix curve_matrix(const CurveSet& set) const {
    check_set(set);
    return gram_.principal_submatrix(set.indices());
  }

  std::optional<std::size_t> find_curve(std::string_view name) const {
    for (std::size_t i = 0; i < curve_count(); ++i)
      if (data_.curves[i].name == name) return i;
    return std::nullopt;
  }

  /// Parses a comma-separated list of curve names; empty text is the empty set.
  CurveSet parse_set(std::string_view text) const {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start < text.size()) {
      auto comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      const auto name = text.substr(start, comma - start);
      const auto idx = find_curve(name);
      if (!idx) throw ParseError("unknown curve '" + std::string(name) + "'");
      out.push_back(*idx);
      start = comma + 1;
    }
    return CurveSet(std::move(out));
  }

  std::string format_set(const CurveSet& set, std::string_view sep = ",") const {
    check_set(set);
    std::string out;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) out += sep;
      out += data_.curves[set[i]].name;
    }
    return out;
  }

  const std::string& name(std::size_t i) const { return data_.curves.at(i).name; }

  /// Sum of coefficients[k] * C_{set[k]}.
  DivisorClass combination(const CurveSet& set, std::span<const Rational> coefficients) const {
    check_set(set);
    if (coefficients.size() != set.size()) throw DimensionMismatch("coefficient count does not match curve set");
    DivisorClass out(rank());
    for (std::size_t k = 0; k < set.size(); ++k) out.add_scaled(coefficients[k], data_.curves[set[k]].cls);
    return out;
  }

  void check_class(const DivisorClass& d) const {
    if (d.size() != rank())
      throw DimensionMismatch("class has length " + std::to_string(d.size()) + ", surface has rank " +
                              std::to_string(rank()));
  }

  void check_set(const CurveSet& set) const {
    if (!set.empty() && set.indices().back() >= curve_count())
      throw DimensionMismatch("curve index " + std::to_string(set.indices().back()) + " out of range");
  }

 private:
  SurfaceData data_;
  std::vector<DivisorClass> duals_;
  SymMatrix gram_;
  RationalVector ample_dots_;
};

inline Rational pair(const Surface& s, const DivisorClass& a, const DivisorClass& b) { return s.pair(a, b); }

inline SurfaceReport validate(const Surface& s) { return validate(s.data()); }

}  // namespace chambers

#endif  // CHAMBERS_SURFACE_HPP
