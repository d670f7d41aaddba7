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

// Seeded generators shared by the property tests.

#ifndef CHAMBERS_TESTS_GENERATORS_HPP
#define CHAMBERS_TESTS_GENERATORS_HPP

#include <random>
#include <string>
#include <vector>

#include "chambers/chambers.hpp"

namespace gen {

using chambers::CurveSet;
using chambers::DivisorClass;
using chambers::Integer;
using chambers::Rational;
using chambers::RationalVector;
using chambers::Surface;
using chambers::SymMatrix;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// p/q with |p| <= bound, 1 <= q <= max_den.
inline Rational rational(Rng& rng, long bound, long max_den = 1) {
  Rational q(Integer(uniform(rng, -bound, bound)), Integer(uniform(rng, 1, max_den)));
  q.canonicalize();
  return q;
}

inline Rational nonnegative(Rng& rng, long bound, long max_den = 1) {
  Rational q(Integer(uniform(rng, 0, bound)), Integer(uniform(rng, 1, max_den)));
  q.canonicalize();
  return q;
}

inline SymMatrix symmetric(Rng& rng, std::size_t n, long bound, long max_den = 1) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, rational(rng, bound, max_den));
  return m;
}

/// Symmetric matrices biased toward definite, semidefinite and indefinite
/// cases: a random product -B^T B, optionally rank deficient, plus noise.
inline SymMatrix structured_symmetric(Rng& rng, std::size_t n) {
  const long kind = uniform(rng, 0, 3);
  if (kind == 0) return symmetric(rng, n, 4, 3);
  const std::size_t rank = kind == 1 ? n : static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n)));
  std::vector<RationalVector> b(rank, RationalVector(n));
  for (auto& row : b)
    for (auto& x : row) x = rational(rng, 3, 2);
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < rank; ++k) acc -= b[k][i] * b[k][j];
      m.set(i, j, acc);
    }
  if (kind == 3 && n > 0) {
    const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    m.set(i, i, m(i, i) + uniform(rng, 1, 3));
  }
  return m;
}

/// Random integer matrix with determinant +-1: a product of elementary
/// shears and a permutation.
inline std::vector<RationalVector> unimodular(Rng& rng, std::size_t n) {
  std::vector<RationalVector> u(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    if (i == j) continue;
    const long c = uniform(rng, -2, 2);
    for (std::size_t k = 0; k < n; ++k) u[i][k] += c * u[j][k];
  }
  std::shuffle(u.begin(), u.end(), rng);
  return u;
}

/// U^T M U.
inline SymMatrix congruent(const SymMatrix& m, const std::vector<RationalVector>& u) {
  const std::size_t n = m.dim();
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational acc = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) acc += u[a][i] * m(a, b) * u[b][j];
      out.set(i, j, acc);
    }
  return out;
}

inline DivisorClass divisor(Rng& rng, std::size_t rank, long bound, long max_den = 1) {
  DivisorClass d(rank);
  for (std::size_t i = 0; i < rank; ++i) d[i] = rational(rng, bound, max_den);
  return d;
}

/// a*H + sum of random nonnegative multiples of a few declared curves.
/// Pseudoeffective by construction; big whenever a > 0.
inline DivisorClass effective(Rng& rng, const Surface& s, long ample_max = 2, bool force_big = false) {
  DivisorClass d = nonnegative(rng, ample_max * 2, 2) * s.ample();
  if (force_big && d.is_zero()) d = s.ample();
  const long picks = uniform(rng, 0, 4);
  for (long k = 0; k < picks && s.curve_count() > 0; ++k) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(s.curve_count()) - 1));
    d.add_scaled(nonnegative(rng, 6, 3), s.curve(i).cls);
  }
  return d;
}

/// Big class: a positive multiple of H plus effective curves plus a small
/// random nef-preserving perturbation is not guaranteed, so perturbations
/// are rejected until the result is big.
inline DivisorClass big(Rng& rng, const Surface& s) {
  while (true) {
    DivisorClass d = effective(rng, s, 2, true);
    if (coin(rng)) d += divisor(rng, s.rank(), 1, 3);
    if (chambers::is_big(s, d)) return d;
  }
}

/// Random blow-up of the plane at r points with curves drawn from
/// exceptional curves, lines through >= 2 points and conics through >= 5
/// points, kept only if the result validates.
inline chambers::SurfaceData blowup_candidate(Rng& rng) {
  const int r = static_cast<int>(uniform(rng, 2, 6));
  chambers::SurfaceData s;
  s.basis.push_back("H");
  for (int i = 1; i <= r; ++i) s.basis.push_back("E" + std::to_string(i));
  s.form = SymMatrix(static_cast<std::size_t>(r + 1));
  s.form.set(0, 0, 1);
  for (int i = 1; i <= r; ++i) s.form.set(i, i, -1);
  auto plane = [&](int d, const std::vector<int>& pts) {
    DivisorClass c(static_cast<std::size_t>(r + 1));
    c[0] = d;
    for (int p : pts) c[static_cast<std::size_t>(p)] = -1;
    return c;
  };
  const int k = 2 * r + 1;
  s.ample = plane(k, {});
  for (int i = 1; i <= r; ++i) s.ample[static_cast<std::size_t>(i)] = -1;
  for (int i = 1; i <= r; ++i)
    if (coin(rng, 0.7)) s.curves.push_back({"E" + std::to_string(i), plane(0, {}) + DivisorClass::unit(r + 1, i)});
  const int lines = static_cast<int>(uniform(rng, 0, 3));
  for (int l = 0; l < lines; ++l) {
    std::vector<int> pts;
    for (int i = 1; i <= r; ++i)
      if (coin(rng, 0.5)) pts.push_back(i);
    if (pts.size() < 2) continue;
    std::string name = "L";
    for (int p : pts) name += std::to_string(p);
    s.curves.push_back({name, plane(1, pts)});
  }
  if (r >= 5 && coin(rng, 0.3)) {
    std::vector<int> pts;
    for (int i = 1; i <= r; ++i) pts.push_back(i);
    if (r == 6 && coin(rng)) pts.erase(pts.begin() + uniform(rng, 0, 5));
    std::string name = "Q";
    for (int p : pts) name += std::to_string(p);
    s.curves.push_back({name, plane(2, pts)});
  }
  return s;
}

inline Surface fuzz_surface(Rng& rng) {
  while (true) {
    auto data = blowup_candidate(rng);
    std::sort(data.curves.begin(), data.curves.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    auto dup = std::adjacent_find(data.curves.begin(), data.curves.end(),
                                  [](const auto& a, const auto& b) { return a.name == b.name; });
    if (dup != data.curves.end()) continue;
    if (chambers::validate(data).ok()) return Surface(std::move(data));
  }
}

/// Builders whose full atlas is small enough for exhaustive checks.
inline const std::vector<std::string>& small_builders() {
  static const std::vector<std::string> tokens{"fourcollinear", "fivepoints", "fivelines", "delpezzo:0",
                                               "delpezzo:1",    "delpezzo:2", "delpezzo:3", "delpezzo:4",
                                               "ruled:0",       "ruled:1",    "ruled:3"};
  return tokens;
}

}  // namespace gen

#endif  // CHAMBERS_TESTS_GENERATORS_HPP
