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

#ifndef CHAMBERS_CLI_HPP
#define CHAMBERS_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chambers/atlas.hpp"
#include "chambers/builders.hpp"
#include "chambers/relations.hpp"
#include "chambers/slice.hpp"
#include "chambers/surface_io.hpp"
#include "chambers/zariski.hpp"

namespace chambers {

namespace cli {

/// Prints "key = value" (text) or "key=value" (machine) lines.
class Printer {
 public:
  Printer(std::ostream& out, bool machine) : out_(out), machine_(machine) {}
  void field(const std::string& key, const std::string& value) {
    out_ << key << (machine_ ? "=" : " = ") << value << '\n';
  }
  void line(const std::string& text) { out_ << text << '\n'; }
  bool machine() const { return machine_; }
  std::ostream& stream() { return out_; }

 private:
  std::ostream& out_;
  bool machine_;
};

struct Options {
  std::string builder;
  std::string surface_file;
  std::string format = "text";
  std::string class_text;
  std::string set_text;
  std::string weyl_text;
  std::string zariski_text;
  std::string curve_text;
  std::string pair_text;
  std::optional<std::size_t> max_size;
  std::optional<std::uint64_t> budget;
  std::string origin, u, v, extent = "1", out = "csv", output_file;
  std::size_t grid = 2;
  unsigned workers = 1;
};

inline std::uint64_t node_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("CHAMBERS_BUDGET")) {
    const std::string text(env);
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw UsageError("CHAMBERS_BUDGET must be a nonnegative integer, got '" + text + "'");
    return std::stoull(text);
  }
  return kDefaultNodeBudget;
}

inline Surface load(const Options& o) {
  if (!o.builder.empty() && !o.surface_file.empty()) throw UsageError("--builder and --surface are exclusive");
  if (!o.surface_file.empty()) return parse_surface(read_text_file(o.surface_file));
  if (o.builder.empty()) throw UsageError("one of --builder or --surface is required");
  return build(o.builder);
}

inline DivisorClass parse_class_arg(const Surface& s, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  auto d = parse_class(text);
  if (d.size() != s.rank())
    throw UsageError(std::string(flag) + " has " + std::to_string(d.size()) + " coordinates, surface rank is " +
                     std::to_string(s.rank()));
  return d;
}

inline std::size_t parse_curve_arg(const Surface& s, const std::string& name, const char* flag) {
  auto idx = s.find_curve(name);
  if (!idx) throw ParseError("unknown curve '" + name + "'", 0, flag);
  return *idx;
}

inline void echo_truncation(const Surface& s, Printer& p) {
  if (auto it = s.meta().find("truncation_degree"); it != s.meta().end()) p.field("truncation_degree", it->second);
}

inline void print_certificate(const Surface& s, const RelationVerdict& v, Printer& p) {
  p.field(p.machine() ? "verdict" : "verdict", v.verdict ? "true" : "false");
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CurvePair>) {
          p.field("pair", s.name(c.first) + "," + s.name(c.second));
          p.field("pair_intersection", to_string(s.curve_pair(c.first, c.second)));
        } else if constexpr (std::is_same_v<T, IsolatedSubset>) {
          p.field("isolated_subset", s.format_set(c.curves));
        } else if constexpr (std::is_same_v<T, MissingCurves>) {
          p.field("missing", s.format_set(c.curves));
        } else if constexpr (std::is_same_v<T, DivisorClass>) {
          p.field("witness", c.to_string());
          const auto report = verify_membership(s, {c, v.weyl_set, v.set, std::nullopt});
          p.field("witness_verified", report.ok() ? "true" : "false");
        }
      },
      v.certificate);
}

inline void print_decomposition(const Surface& s, const ZariskiDecomposition& z, Printer& p) {
  p.field("P", z.positive.to_string());
  p.field("N", z.negative.to_string());
  p.field("support", s.format_set(z.support));
  p.field("coefficients", join(z.coefficients));
}

}  // namespace cli

/// Runs one `chambers` subcommand. `args` excludes the program name.
/// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using cli::Options;
  Options o;
  CLI::App app{"Zariski and Weyl chambers on the big cone of a surface", "chambers"};
  app.require_subcommand(1);

  auto add_surface = [&](CLI::App* cmd) {
    cmd->add_option("--builder", o.builder, "builder token, e.g. delpezzo:3, fourcollinear, ruled:2, cubicpoints:12:5");
    cmd->add_option("--surface", o.surface_file, "surface file (JSON)");
    cmd->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--max-size", o.max_size, "largest curve set to enumerate");
    cmd->add_option("--budget", o.budget, "DFS node budget (default 1e8, env CHAMBERS_BUDGET)");
  };

  auto* info = app.add_subcommand("info", "describe a surface");
  add_surface(info);
  auto* validate_cmd = app.add_subcommand("validate", "validate a surface file");
  validate_cmd->add_option("--surface", o.surface_file, "surface file (JSON)")->required();
  validate_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "machine"}));
  auto* decompose = app.add_subcommand("decompose", "Zariski decomposition of a class");
  add_surface(decompose);
  decompose->add_option("--class", o.class_text, "comma-separated rationals in basis order")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Zariski chamber, Weyl chamber and interior status");
  add_surface(classify_cmd);
  classify_cmd->add_option("--class", o.class_text)->required();
  auto* count = app.add_subcommand("count", "count Zariski and Weyl chambers");
  add_surface(count);
  add_budget(count);
  auto* enumerate = app.add_subcommand("enumerate", "list the negative definite curve sets");
  add_surface(enumerate);
  add_budget(enumerate);

  auto* check = app.add_subcommand("check", "decide a chamber relation");
  check->require_subcommand(1);
  auto* numdet = check->add_subcommand("numdet", "are the Zariski chambers numerically determined");
  add_surface(numdet);
  auto* wiz = check->add_subcommand("weyl-in-zariski", "is W_S contained in Z_S");
  add_surface(wiz);
  wiz->add_option("--set", o.set_text, "comma-separated curve names")->required();
  auto* iiw = check->add_subcommand("interior-in-weyl", "is the interior of Z_S contained in W_S");
  add_surface(iiw);
  iiw->add_option("--set", o.set_text)->required();
  auto* thm36 = check->add_subcommand("thm36", "evaluate the four equivalent determinacy conditions");
  add_surface(thm36);
  add_budget(thm36);
  auto* intersect = check->add_subcommand("intersect", "does W_{S1} meet Z_S");
  add_surface(intersect);
  intersect->add_option("--weyl", o.weyl_text, "S1")->required();
  intersect->add_option("--zariski", o.zariski_text, "S")->required();

  auto* witness = app.add_subcommand("witness", "construct a certified witness class");
  witness->require_subcommand(1);
  auto* w_interior = witness->add_subcommand("interior", "a class in W_S and the interior of Z_S");
  add_surface(w_interior);
  w_interior->add_option("--set", o.set_text)->required();
  auto* w_wnz = witness->add_subcommand("weyl-not-zariski", "a class in W_S outside Z_S");
  add_surface(w_wnz);
  w_wnz->add_option("--set", o.set_text)->required();
  w_wnz->add_option("--curve", o.curve_text, "the extra curve C' (default: first certificate)");
  auto* w_inw = witness->add_subcommand("interior-not-weyl", "a class in the interior of Z_S outside W_S");
  add_surface(w_inw);
  w_inw->add_option("--set", o.set_text)->required();
  w_inw->add_option("--pair", o.pair_text, "Ci,Cj (default: first meeting pair)");
  auto* w_int = witness->add_subcommand("intersection", "a class in W_{S1} and Z_S");
  add_surface(w_int);
  w_int->add_option("--weyl", o.weyl_text)->required();
  w_int->add_option("--zariski", o.zariski_text)->required();

  auto* slice = app.add_subcommand("slice", "rasterize a 2D slice of the chamber decomposition");
  add_surface(slice);
  slice->add_option("--origin", o.origin)->required();
  slice->add_option("--u", o.u)->required();
  slice->add_option("--v", o.v)->required();
  slice->add_option("--grid", o.grid)->required();
  slice->add_option("--extent", o.extent, "half-width p/q")->required();
  slice->add_option("--out", o.out)->check(CLI::IsMember({"csv", "svg"}));
  slice->add_option("--output", o.output_file, "write to this file instead of stdout");
  slice->add_option("--workers", o.workers, "rows labelled in parallel");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  cli::Printer p(out, o.format == "machine");
  try {
    if (validate_cmd->parsed()) {
      const auto data = parse_surface_data(read_text_file(o.surface_file));
      const auto report = validate(data);
      p.stream() << report.to_string();
      p.field("valid", report.ok() ? "true" : "false");
      return report.ok() ? 0 : 1;
    }

    const Surface s = cli::load(o);
    AtlasOptions atlas_options;
    atlas_options.max_size = o.max_size;

    if (info->parsed()) {
      if (p.machine()) {
        out << serialize_surface(s);
        return 0;
      }
      p.field("rank", std::to_string(s.rank()));
      std::string basis;
      for (std::size_t i = 0; i < s.rank(); ++i) basis += (i ? "," : "") + s.basis()[i];
      p.field("basis", basis);
      p.field("ample", s.ample().to_string());
      p.field("curves", std::to_string(s.curve_count()));
      for (std::size_t i = 0; i < s.curve_count(); ++i)
        p.field("curve " + s.name(i), s.curve(i).cls.to_string() + " (self-intersection " +
                                          to_string(s.curve_pair(i, i)) + ")");
      for (const auto& [k, v] : s.meta()) p.field("meta " + k, v);
      return 0;
    }
    if (decompose->parsed()) {
      const auto d = cli::parse_class_arg(s, o.class_text, "--class");
      const auto z = zariski_decompose(s, d);
      cli::print_decomposition(s, z, p);
      const Rational vol = s.pair(z.positive, z.positive);
      p.field("volume", to_string(vol));
      p.field("big", sgn(vol) > 0 ? "true" : "false");
      cli::echo_truncation(s, p);
      return 0;
    }
    if (classify_cmd->parsed()) {
      const auto d = cli::parse_class_arg(s, o.class_text, "--class");
      const auto c = classify(s, d);
      p.field("neg", s.format_set(c.neg));
      p.field("null", s.format_set(c.null_of_p));
      p.field("weyl", (c.weyl.wall ? "wall:" : "") + s.format_set(c.weyl.curves));
      p.field("interior", c.is_interior ? "true" : "false");
      p.field("nef_chamber", c.is_nef_chamber ? "true" : "false");
      cli::print_decomposition(s, c.decomposition, p);
      cli::echo_truncation(s, p);
      return 0;
    }
    if (count->parsed() || enumerate->parsed()) {
      atlas_options.node_budget = cli::node_budget(o);
      const auto atlas = enumerate_zx(s, atlas_options);
      if (count->parsed()) {
        out << "zariski=" << atlas.zariski_count << " weyl=" << atlas.weyl_count << '\n';
      } else {
        out << export_atlas(s, atlas);
      }
      cli::echo_truncation(s, p);
      return 0;
    }
    if (numdet->parsed()) {
      cli::print_certificate(s, numerically_determined(s), p);
    } else if (wiz->parsed()) {
      cli::print_certificate(s, weyl_subset_of_zariski(s, s.parse_set(o.set_text)), p);
    } else if (iiw->parsed()) {
      cli::print_certificate(s, interior_subset_of_weyl(s, s.parse_set(o.set_text)), p);
    } else if (thm36->parsed()) {
      atlas_options.node_budget = cli::node_budget(o);
      const auto c = determinacy_conditions(s, atlas_options);
      p.field("meeting_pairs", c.meeting_pairs ? "true" : "false");
      p.field("orthogonal_pairs", c.orthogonal_pairs ? "true" : "false");
      p.field("weyl_in_zariski_everywhere", c.weyl_in_zariski_everywhere ? "true" : "false");
      p.field("interior_in_weyl_everywhere", c.interior_in_weyl_everywhere ? "true" : "false");
      p.field("agree", c.agree() ? "true" : "false");
    } else if (intersect->parsed()) {
      cli::print_certificate(s, chambers_intersect(s, s.parse_set(o.weyl_text), s.parse_set(o.zariski_text)), p);
    } else if (witness->parsed()) {
      MembershipClaim claim;
      if (w_interior->parsed()) {
        const auto set = s.parse_set(o.set_text);
        claim = {witness_interior(s, set), set, set, true};
      } else if (w_wnz->parsed()) {
        const auto set = s.parse_set(o.set_text);
        std::size_t extra;
        if (!o.curve_text.empty()) {
          extra = cli::parse_curve_arg(s, o.curve_text, "--curve");
        } else {
          const auto v = weyl_subset_of_zariski(s, set);
          if (v.verdict) throw PreconditionFailed("W_S is contained in Z_S; no witness exists");
          extra = std::get<CurvePair>(v.certificate).first;
        }
        claim = {witness_weyl_not_in_zariski(s, set, extra), set, set.with(extra), std::nullopt};
      } else if (w_inw->parsed()) {
        const auto set = s.parse_set(o.set_text);
        std::size_t i, j;
        if (!o.pair_text.empty()) {
          const auto comma = o.pair_text.find(',');
          if (comma == std::string::npos) throw ParseError("expected Ci,Cj", 0, "--pair");
          i = cli::parse_curve_arg(s, o.pair_text.substr(0, comma), "--pair");
          j = cli::parse_curve_arg(s, o.pair_text.substr(comma + 1), "--pair");
        } else {
          const auto v = interior_subset_of_weyl(s, set);
          if (v.verdict) throw PreconditionFailed("the curves of the set are pairwise orthogonal; no witness exists");
          std::tie(i, j) = std::pair{std::get<CurvePair>(v.certificate).first, std::get<CurvePair>(v.certificate).second};
        }
        claim = {witness_interior_not_in_weyl(s, set, i, j), std::nullopt, set, true};
      } else {
        const auto s1 = s.parse_set(o.weyl_text);
        const auto set = s.parse_set(o.zariski_text);
        claim = {witness_intersection(s, s1, set), s1, set, std::nullopt};
      }
      p.field("class", claim.divisor.to_string());
      const auto report = verify_membership(s, claim);
      for (const auto& c : report.checks) p.field("check " + c.name, std::string(c.passed ? "pass" : "fail") + " (" + c.detail + ")");
      p.field("verified", report.ok() ? "true" : "false");
      cli::echo_truncation(s, p);
      return report.ok() ? 0 : 1;
    } else if (slice->parsed()) {
      SliceSpec spec{cli::parse_class_arg(s, o.origin, "--origin"), cli::parse_class_arg(s, o.u, "--u"),
                     cli::parse_class_arg(s, o.v, "--v"), o.grid, parse_rational(o.extent)};
      const auto cells = slice_raster(s, spec, o.workers);
      const auto text = o.out == "svg" ? emit_svg(s, cells) : emit_csv(s, cells);
      if (!o.output_file.empty()) {
        std::ofstream file(o.output_file, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + o.output_file + "'");
        file << text;
      } else {
        out << text;
      }
      if (auto it = s.meta().find("truncation_degree"); it != s.meta().end())
        err << "truncation_degree=" << it->second << '\n';
      return 0;
    }
    cli::echo_truncation(s, p);
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace chambers

#endif  // CHAMBERS_CLI_HPP
