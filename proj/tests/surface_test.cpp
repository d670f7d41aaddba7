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

#include <algorithm>

#include "chambers/builders.hpp"
#include "chambers/surface_io.hpp"
#include "generators.hpp"

namespace {

using namespace chambers;

const Check* find_check(const SurfaceReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

TEST(Pair, FourCollinearExample) {
  const auto s = build("fourcollinear");
  const auto h = DivisorClass::unit(5, 0);
  EXPECT_EQ(s.pair(h, h), 1);
  const auto d = parse_class("6,1,1,-1,-1");
  EXPECT_EQ(s.dot_curve(d, *s.find_curve("L1234")), 6);
  EXPECT_EQ(s.dot_curve(d, *s.find_curve("E1")), -1);
  EXPECT_EQ(s.dot_curve(d, *s.find_curve("E2")), -1);
  EXPECT_EQ(s.dot_curve(d, *s.find_curve("E3")), 1);
  EXPECT_EQ(s.dot_curve(d, *s.find_curve("E4")), 1);
  EXPECT_THROW(s.pair(h, DivisorClass{1, 0}), DimensionMismatch);
}

TEST(Pair, BilinearAndSymmetric) {
  gen::Rng rng(3);
  for (const auto& token : gen::small_builders()) {
    const auto s = build(token);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = gen::divisor(rng, s.rank(), 5, 3);
      const auto b = gen::divisor(rng, s.rank(), 5, 3);
      const auto c = gen::divisor(rng, s.rank(), 5, 3);
      const auto l = gen::rational(rng, 4, 3);
      ASSERT_EQ(s.pair(a, b), s.pair(b, a));
      ASSERT_EQ(s.pair(a + l * b, c), s.pair(a, c) + l * s.pair(b, c));
    }
  }
}

TEST(Validate, RejectsEuclideanForm) {
  SurfaceData d;
  d.basis = {"A", "B"};
  d.form = SymMatrix{{1, 0}, {0, 1}};
  d.ample = DivisorClass{1, 0};
  const auto r = validate(d);
  EXPECT_FALSE(r.ok());
  ASSERT_NE(find_check(r, "form.signature"), nullptr);
  EXPECT_FALSE(find_check(r, "form.signature")->passed);
  EXPECT_NE(find_check(r, "form.signature")->detail.find("(2,0,0)"), std::string::npos);
}

TEST(Validate, RejectsAmpleZeroOnExceptionalCurves) {
  auto d = build("fourcollinear").data();
  d.ample = DivisorClass::unit(5, 0);
  const auto r = validate(d);
  EXPECT_FALSE(r.ok());
  const auto* c = find_check(r, "curves.ample_positive");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_NE(c->detail.find("E1"), std::string::npos);
  EXPECT_THROW(Surface{d}, ValidationFailed);
}

TEST(Validate, RejectsDuplicateNamesAndMeetingNegatively) {
  auto d = build("fourcollinear").data();
  d.curves.push_back(d.curves.front());
  EXPECT_FALSE(find_check(validate(d), "curves.names")->passed);
  auto e = build("delpezzo:3").data();
  e.curves.push_back({"Bad", parse_class("1,1,1,-1")});
  const auto r = validate(e);
  EXPECT_FALSE(r.ok());
}

TEST(Validate, ReportIsDeterministic) {
  auto d = build("fivepoints").data();
  d.ample = DivisorClass::unit(6, 0);
  EXPECT_EQ(validate(d).to_string(), validate(d).to_string());
}

TEST(Builders, AllValidate) {
  for (const auto& token : gen::small_builders()) {
    const auto s = build(token);
    EXPECT_TRUE(validate(s).ok()) << token << "\n" << validate(s).to_string();
  }
  for (const auto* token : {"delpezzo:5", "delpezzo:6", "delpezzo:7", "delpezzo:8", "cubicpoints:9:2",
                            "cubicpoints:10:2", "cubicpoints:11:2", "ruled:7"})
    EXPECT_TRUE(validate(build(token)).ok()) << token;
}

TEST(Builders, CurveLists) {
  EXPECT_EQ(build("fourcollinear").curve_count(), 5u);
  const auto dp2 = build("delpezzo:2");
  ASSERT_EQ(dp2.curve_count(), 3u);
  EXPECT_EQ(dp2.name(0), "E1");
  EXPECT_EQ(dp2.name(1), "E2");
  EXPECT_EQ(dp2.curve(2).cls, parse_class("1,-1,-1"));
  const auto ruled1 = build("ruled:1");
  ASSERT_EQ(ruled1.curve_count(), 1u);
  EXPECT_EQ(ruled1.curve_pair(0, 0), -1);
  EXPECT_EQ(build("ruled:0").curve_count(), 0u);
  EXPECT_EQ(build("delpezzo:0").curve_count(), 0u);

  const auto five = build("fivepoints");
  EXPECT_EQ(five.curve_count(), 13u);
  EXPECT_EQ(five.curve(*five.find_curve("L123")).cls, parse_class("1,-1,-1,-1,0,0"));
  EXPECT_FALSE(five.find_curve("L12").has_value());
  EXPECT_TRUE(five.find_curve("L45").has_value());

  const auto lines = build("fivelines");
  EXPECT_EQ(lines.curve_count(), 15u);
  EXPECT_EQ(lines.curve(*lines.find_curve("C1")).cls, parse_class("1,-1,-1,-1,-1,0,0,0,0,0,0"));
  // Each point lies on exactly two lines; each line carries four points.
  for (std::size_t e = 0; e < 10; ++e) {
    int on = 0;
    for (int l = 1; l <= 5; ++l)
      on += lines.curve_pair(*lines.find_curve("C" + std::to_string(l)), *lines.find_curve("E" + std::to_string(e + 1))) == 1;
    EXPECT_EQ(on, 2);
  }
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b)
      EXPECT_EQ(lines.curve_pair(*lines.find_curve("C" + std::to_string(a)), *lines.find_curve("C" + std::to_string(b))), 0);
  EXPECT_EQ(lines.meta().count("assumption"), 1u);
}

TEST(Builders, NaturalNameOrder) {
  const auto s = build("cubicpoints:10:1");
  EXPECT_EQ(s.name(0), "Cubic");
  std::vector<std::string> es;
  for (std::size_t i = 0; i < s.curve_count(); ++i)
    if (s.name(i)[0] == 'E') es.push_back(s.name(i));
  ASSERT_EQ(es.size(), 10u);
  EXPECT_EQ(es[1], "E2");
  EXPECT_EQ(es[9], "E10");
  EXPECT_TRUE(natural_less("E2", "E10"));
  EXPECT_FALSE(natural_less("E10", "E2"));
}

TEST(Builders, CubicPoints) {
  const auto s9 = build("cubicpoints:9:1");
  EXPECT_FALSE(s9.find_curve("Cubic").has_value());
  const auto s = build("cubicpoints:12:2");
  const auto cubic = s.find_curve("Cubic");
  ASSERT_TRUE(cubic.has_value());
  EXPECT_EQ(s.curve_pair(*cubic, *cubic), -3);
  EXPECT_EQ(s.meta().at("truncation_degree"), "2");
  // 12 exceptional curves, 66 lines, 792 conics, and the cubic.
  EXPECT_EQ(s.curve_count(), 12u + 66u + 792u + 1u);
  EXPECT_GT(s.pair(s.ample(), s.ample()), 0);
}

TEST(Builders, TokensRoundTrip) {
  for (const auto* token : {"fourcollinear", "fivepoints", "fivelines", "delpezzo:3", "ruled:2", "cubicpoints:12:5"})
    EXPECT_EQ(BuilderSpec::parse(token).token(), token);
  EXPECT_EQ(build(BuilderSpec::del_pezzo(3)).curve_count(), 6u);
}

TEST(Builders, InvalidSpecs) {
  EXPECT_THROW(build("delpezzo:9"), InvalidSpec);
  EXPECT_THROW(build("ruled:-1"), InvalidSpec);
  EXPECT_THROW(build(BuilderSpec::ruled(-1)), InvalidSpec);
  EXPECT_THROW(build("delpezzo"), InvalidSpec);
  EXPECT_THROW(build("delpezzo:2:3"), InvalidSpec);
  EXPECT_THROW(build("nosuch"), InvalidSpec);
  EXPECT_THROW(build("ruled:x"), InvalidSpec);
}

TEST(SurfaceIo, RoundTripOnBuilders) {
  for (const auto& token : gen::small_builders()) {
    const auto s = build(token);
    const auto text = serialize_surface(s);
    const auto back = parse_surface(text);
    EXPECT_EQ(back.data(), s.data()) << token;
    EXPECT_EQ(serialize_surface(back), text) << token;
  }
  const auto dp8 = build("delpezzo:8");
  EXPECT_EQ(parse_surface(serialize_surface(dp8)).data(), dp8.data());
}

TEST(SurfaceIo, SerializedLayout) {
  const auto text = serialize_surface(build("ruled:2"));
  EXPECT_EQ(text,
            "{\n"
            "  \"basis\": [\"C0\", \"f\"],\n"
            "  \"form\": [\n"
            "    [-2, 1],\n"
            "    [1, 0]\n"
            "  ],\n"
            "  \"ample\": [\"1\", \"3\"],\n"
            "  \"curves\": [\n"
            "    {\"name\": \"C0\", \"class\": [\"1\", \"0\"]}\n"
            "  ],\n"
            "  \"meta\": {\"builder\": \"ruled:2\"}\n"
            "}\n");
}

TEST(SurfaceIo, AcceptsRationalStringsAndIntegers) {
  const auto s = parse_surface(R"({"basis":["H","E1"],"form":[[1,0],[0,-1]],"ample":["2", -1],
      "curves":[{"name":"E1","class":[0,"2/2"]}]})");
  EXPECT_EQ(s.curve(0).cls, parse_class("0,1"));
  EXPECT_EQ(s.ample(), parse_class("2,-1"));
}

TEST(SurfaceIo, NonSymmetricFormIsParseError) {
  try {
    parse_surface(R"({"basis":["H","E1"],"form":[[1,1],[0,-1]],"ample":["2","-1"],"curves":[]})");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "form");
  }
}

TEST(SurfaceIo, SyntaxErrorReportsLine) {
  try {
    parse_surface("{\n  \"basis\": [\"H\"],\n  \"form\": [[1]]\n  \"ample\": []\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(SurfaceIo, FieldDiagnostics) {
  try {
    parse_surface(R"({"basis":["H","E1"],"form":[[1,0],[0,-1]],"ample":["2","x"],"curves":[]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "ample[1]");
  }
  EXPECT_THROW(parse_surface(R"({"basis":["H"],"form":[[1]]})"), ParseError);
}

TEST(SurfaceIo, ZeroSelfIntersectionCurveFailsValidation) {
  try {
    parse_surface(R"({"basis":["H","E1","E2"],"form":[[1,0,0],[0,-1,0],[0,0,-1]],"ample":["3","-1","-1"],
        "curves":[{"name":"F","class":["1","-1","0"]}]})");
    FAIL() << "expected ValidationFailed";
  } catch (const ValidationFailed& e) {
    EXPECT_FALSE(e.report().ok());
    EXPECT_NE(std::string(e.what()).find("curves.negative"), std::string::npos);
  }
}

TEST(SurfaceIo, SampleFileParses) {
  const auto s = parse_surface(read_text_file(std::string(CHAMBERS_SAMPLES_DIR) + "/fourcollinear.json"));
  EXPECT_EQ(s.data(), build("fourcollinear").data());
}

TEST(Surface, ParseAndFormatSets) {
  const auto s = build("fourcollinear");
  const auto set = s.parse_set("L1234,E2");
  EXPECT_EQ(s.format_set(set), "E2,L1234");
  EXPECT_EQ(s.parse_set(""), CurveSet{});
  EXPECT_THROW(s.parse_set("E9"), ParseError);
}

}  // namespace
