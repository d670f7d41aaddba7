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

#include <gtest/gtest.h>

#include "chambers/linalg.hpp"
#include "chambers/rational.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace {

using namespace chambers;

SymMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalVector> out;
  for (auto r : rows) {
    RationalVector row;
    for (long v : r) row.emplace_back(v);
    out.push_back(row);
  }
  return SymMatrix(out);
}

RationalVector vec(std::initializer_list<long> v) {
  RationalVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational(" 12 "), Rational(12));
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("3/-6"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational_list("1,,2"), ParseError);
}

TEST(SymMatrix, RejectsAsymmetricAndRagged) {
  EXPECT_THROW(mat({{1, 2}, {3, 4}}), std::invalid_argument);
  EXPECT_THROW(SymMatrix(std::vector<RationalVector>{vec({1, 2}), vec({2})}), DimensionMismatch);
}

TEST(Inertia, Examples) {
  EXPECT_EQ(inertia(mat({{-1}})), (Inertia{0, 1, 0}));
  EXPECT_EQ(inertia(mat({{-1, 0, 1}, {0, -1, 1}, {1, 1, -1}})), (Inertia{1, 2, 0}));
  EXPECT_EQ(inertia(mat({{-1, 0, 1}, {0, -1, 0}, {1, 0, -1}})).n_zero, 1u);
  EXPECT_EQ(inertia(mat({{0, 1}, {1, 0}})), (Inertia{1, 1, 0}));
  EXPECT_EQ(inertia(mat({{0, 0}, {0, 0}})), (Inertia{0, 0, 2}));
  EXPECT_EQ(inertia(SymMatrix(0)), (Inertia{0, 0, 0}));
}

TEST(Inertia, OracleAgreesOnExamples) {
  for (const auto& m : {mat({{-1, 0, 1}, {0, -1, 1}, {1, 1, -1}}), mat({{-1, 0, 1}, {0, -1, 0}, {1, 0, -1}}),
                        mat({{0, 1, 0}, {1, 0, 2}, {0, 2, 0}}), mat({{-3, 1}, {1, -1}})})
    EXPECT_EQ(inertia(m), oracle::eigen_signs(m));
}

TEST(NegativeDefinite, Examples) {
  EXPECT_TRUE(is_negative_definite(mat({{-1, 0}, {0, -1}})));
  EXPECT_TRUE(is_negative_definite(mat({{-3, 1}, {1, -1}})));
  EXPECT_FALSE(is_negative_definite(mat({{-1, 1}, {1, -1}})));
  EXPECT_TRUE(is_negative_definite(SymMatrix(0)));
  for (const auto& m : {mat({{-1, 0}, {0, -1}}), mat({{-3, 1}, {1, -1}}), mat({{-1, 1}, {1, -1}})})
    EXPECT_EQ(is_negative_definite_by_inertia(m), is_negative_definite_sylvester(m));
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(mat({{-3, 1}, {1, -1}})), Rational(2));
  EXPECT_EQ(determinant(mat({{-1, 0, 1}, {0, -1, 0}, {1, 0, -1}})), Rational(0));
  EXPECT_EQ(determinant(mat({{0, 1}, {1, 0}})), Rational(-1));
  SymMatrix half(1);
  half.set(0, 0, Rational(1, 2));
  EXPECT_EQ(determinant(half), Rational(1, 2));
}

TEST(Solve, Examples) {
  EXPECT_EQ(solve(mat({{-1, 0}, {0, -1}}), vec({-1, -1})), vec({1, 1}));
  EXPECT_EQ(solve(mat({{-3, 1}, {1, -1}}), vec({-1, -1})), vec({1, 2}));
  EXPECT_THROW(solve(mat({{-1, 0, 1}, {0, -1, 0}, {1, 0, -1}}), vec({1, 2, 3})), SingularMatrix);
  EXPECT_THROW(solve(mat({{-1, 0}, {0, -1}}), vec({1})), DimensionMismatch);
}

TEST(InverseNonpositive, Examples) {
  EXPECT_TRUE(inverse_is_nonpositive(mat({{-1, 0}, {0, -1}})));
  EXPECT_TRUE(inverse_is_nonpositive(mat({{-2, 1}, {1, -2}})));
  const auto inv = inverse(mat({{-2, 1}, {1, -2}}));
  EXPECT_EQ(inv(0, 0), Rational(-2, 3));
  EXPECT_EQ(inv(0, 1), Rational(-1, 3));
  EXPECT_FALSE(inverse_is_nonpositive(mat({{-1, 2}, {2, -1}})));
  EXPECT_THROW(inverse_is_nonpositive(mat({{-1, 1}, {1, -1}})), SingularMatrix);
}

TEST(IncrementalLdl, TracksDefiniteness) {
  IncrementalLdl ldl;
  EXPECT_TRUE(ldl.try_push(RationalVector{}, Rational(-3)));
  EXPECT_TRUE(ldl.try_push(vec({1}), Rational(-1)));
  EXPECT_FALSE(ldl.try_push(vec({1, 1}), Rational(-1)));
  EXPECT_EQ(ldl.size(), 2u);
  ldl.pop();
  EXPECT_TRUE(ldl.try_push(vec({0}), Rational(-1)));
  EXPECT_EQ(ldl.size(), 2u);
}

// Property: the Sylvester route, the inertia route and the characteristic
// polynomial oracle agree on random matrices of dimension <= 8.
TEST(Property, SylvesterMatchesInertia) {
  gen::Rng rng(20261014);
  int definite = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
    const auto m = gen::structured_symmetric(rng, n);
    const bool syl = is_negative_definite_sylvester(m);
    ASSERT_EQ(syl, is_negative_definite_by_inertia(m)) << "trial " << trial;
    ASSERT_EQ(syl, oracle::negative_definite(m.rows())) << "trial " << trial;
    definite += syl;
  }
  EXPECT_GT(definite, 100);
  EXPECT_LT(definite, 900);
}

TEST(Property, InertiaMatchesEigenSigns) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const auto m = gen::structured_symmetric(rng, n);
    const auto in = inertia(m);
    ASSERT_EQ(in.n_pos + in.n_neg + in.n_zero, n);
    ASSERT_EQ(in, oracle::eigen_signs(m)) << "trial " << trial;
  }
}

TEST(Property, InertiaIsCongruenceInvariant) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const auto m = gen::structured_symmetric(rng, n);
    const auto u = gen::unimodular(rng, n);
    ASSERT_EQ(inertia(m), inertia(gen::congruent(m, u))) << "trial " << trial;
  }
}

TEST(Property, NegativeDefinitenessIsHereditary) {
  gen::Rng rng(13);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 7));
    const auto m = gen::structured_symmetric(rng, n);
    if (!is_negative_definite(m)) continue;
    ++checked;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) idx.push_back(i);
      ASSERT_TRUE(is_negative_definite(m.principal_submatrix(idx)));
    }
  }
  EXPECT_GT(checked, 30);
}

TEST(Property, SolveMatchesOracleAndDeterminant) {
  gen::Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const auto m = gen::symmetric(rng, n, 5, 2);
    RationalVector b(n);
    for (auto& x : b) x = gen::rational(rng, 5, 3);
    const auto expected = oracle::solve(m.rows(), b);
    ASSERT_EQ(expected.has_value(), determinant(m) != 0);
    if (expected) {
      ASSERT_EQ(solve(m, b), *expected);
    } else {
      ASSERT_THROW(solve(m, b), SingularMatrix);
    }
    const auto c = oracle::charpoly(m.rows());
    // det(-A) = c[0], so det(A) = (-1)^n c[0].
    ASSERT_EQ(determinant(m), (n % 2 ? -c[0] : c[0]));
  }
}

TEST(Property, IncrementalLdlMatchesSylvesterOnPrefixes) {
  gen::Rng rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 7));
    const auto m = gen::structured_symmetric(rng, n);
    IncrementalLdl ldl;
    for (std::size_t k = 0; k < n; ++k) {
      RationalVector column;
      for (std::size_t j = 0; j < k; ++j) column.push_back(m(j, k));
      std::vector<std::size_t> idx(k + 1);
      std::iota(idx.begin(), idx.end(), 0);
      const bool expected = is_negative_definite(m.principal_submatrix(idx));
      ASSERT_EQ(ldl.try_push(column, m(k, k)), expected);
      if (!expected) break;
    }
  }
}

// Negative definite matrices with nonnegative off-diagonal entries have
// entrywise nonpositive inverses.
TEST(Property, NonnegativeOffDiagonalGivesNonpositiveInverse) {
  gen::Rng rng(23);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 200; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, i, -gen::uniform(rng, 1, 5));
      for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, gen::uniform(rng, 0, 1));
    }
    if (!is_negative_definite(m)) continue;
    ++checked;
    ASSERT_TRUE(inverse_is_nonpositive(m));
    const auto inv = inverse(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += m(i, k) * inv(k, j);
        ASSERT_EQ(acc, Rational(i == j ? 1 : 0));
      }
  }
  EXPECT_EQ(checked, 200);
}

}  // namespace
