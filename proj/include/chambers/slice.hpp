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

#ifndef CHAMBERS_SLICE_HPP
#define CHAMBERS_SLICE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "chambers/atlas.hpp"
#include "chambers/surface.hpp"

namespace chambers {

/// Affine square {origin + x u + y v : |x|, |y| <= extent} sampled on a
/// grid x grid lattice that includes the corners.
struct SliceSpec {
  DivisorClass origin;
  DivisorClass u;
  DivisorClass v;
  std::size_t grid = 2;
  Rational extent = 1;
};

struct SliceLabel {
  enum class Kind { Chamber, Wall, NotBig };
  Kind kind = Kind::NotBig;
  CurveSet chamber;

  friend bool operator==(const SliceLabel&, const SliceLabel&) = default;
  /// Chambers in canonical set order, then walls, then non-big samples.
  friend bool operator<(const SliceLabel& a, const SliceLabel& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.chamber < b.chamber;
  }
};

struct SliceCell {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational x;
  Rational y;
  DivisorClass sample;
  SliceLabel label;
};

inline std::string label_text(const Surface& s, const SliceLabel& label) {
  switch (label.kind) {
    case SliceLabel::Kind::NotBig: return "notbig";
    case SliceLabel::Kind::Wall: return "wall";
    case SliceLabel::Kind::Chamber: return "{" + s.format_set(label.chamber, ";") + "}";
  }
  return {};
}

/// Label the CLI and rasterizer use: NotBig, Wall, or the Weyl chamber.
inline SliceLabel slice_label(const Surface& s, const DivisorClass& d) {
  try {
    const auto c = classify(s, d);
    if (c.weyl.wall) return {SliceLabel::Kind::Wall, {}};
    return {SliceLabel::Kind::Chamber, c.weyl.curves};
  } catch (const NotBig&) {
    return {SliceLabel::Kind::NotBig, {}};
  }
}

inline void validate_slice(const Surface& s, const SliceSpec& spec) {
  s.check_class(spec.origin);
  s.check_class(spec.u);
  s.check_class(spec.v);
  if (spec.grid < 2) throw InvalidSpec("slice grid must be at least 2");
  if (sgn(spec.extent) <= 0) throw InvalidSpec("slice extent must be positive");
  // u, v independent iff some 2x2 minor of [u v] is nonzero.
  bool independent = false;
  for (std::size_t i = 0; i < s.rank() && !independent; ++i)
    for (std::size_t j = i + 1; j < s.rank() && !independent; ++j)
      independent = spec.u[i] * spec.v[j] - spec.u[j] * spec.v[i] != 0;
  if (!independent) throw InvalidSpec("slice directions are linearly dependent");
}

/// Row-major list of labelled samples. Rows may be labelled on several
/// threads; each cell is written to a fixed slot, so output order does not
/// depend on the worker count.
inline std::vector<SliceCell> slice_raster(const Surface& s, const SliceSpec& spec, unsigned workers = 1) {
  validate_slice(s, spec);
  const std::size_t g = spec.grid;
  std::vector<SliceCell> cells(g * g);
  auto coordinate = [&](std::size_t k) {
    Rational t(Integer(static_cast<unsigned long>(k)), Integer(static_cast<unsigned long>(g - 1)));
    t.canonicalize();
    return Rational(-spec.extent + 2 * spec.extent * t);
  };
  auto fill_row = [&](std::size_t row) {
    const Rational y = coordinate(row);
    for (std::size_t col = 0; col < g; ++col) {
      auto& cell = cells[row * g + col];
      cell.row = row;
      cell.col = col;
      cell.x = coordinate(col);
      cell.y = y;
      cell.sample = spec.origin;
      cell.sample.add_scaled(cell.x, spec.u);
      cell.sample.add_scaled(cell.y, spec.v);
      cell.label = slice_label(s, cell.sample);
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(g)));
  if (workers == 1) {
    for (std::size_t row = 0; row < g; ++row) fill_row(row);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        for (std::size_t row = w; row < g; row += workers) fill_row(row);
      });
    for (auto& t : threads) t.join();
  }
  return cells;
}

inline std::string emit_csv(const Surface& s, const std::vector<SliceCell>& cells) {
  std::ostringstream out;
  out << "row,col,x,y,label\n";
  for (const auto& c : cells)
    out << c.row << ',' << c.col << ',' << to_string(c.x) << ',' << to_string(c.y) << ',' << label_text(s, c.label)
        << '\n';
  return out.str();
}

/// FNV-1a over the label text, folded to an RGB colour.
inline std::string label_color(const std::string& text) {
  std::uint32_t h = 2166136261u;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 16777619u;
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%06x", static_cast<unsigned>((h ^ (h >> 24)) & 0xffffffu));
  return buf;
}

inline std::string emit_svg(const Surface& s, const std::vector<SliceCell>& cells) {
  constexpr int kCell = 16;
  std::size_t grid = 0;
  for (const auto& c : cells) grid = std::max({grid, c.row + 1, c.col + 1});
  std::map<SliceLabel, std::string> legend;
  for (const auto& c : cells) legend.emplace(c.label, label_text(s, c.label));

  const int plot = static_cast<int>(grid) * kCell;
  const int width = plot + 20 + 220;
  const int height = std::max(plot, static_cast<int>(legend.size()) * 20 + 10);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  for (const auto& c : cells) {
    const auto text = label_text(s, c.label);
    out << "  <rect x=\"" << c.col * kCell << "\" y=\"" << (grid - 1 - c.row) * kCell << "\" width=\"" << kCell
        << "\" height=\"" << kCell << "\" fill=\"" << label_color(text) << "\"><title>" << text << "</title></rect>\n";
  }
  int k = 0;
  for (const auto& [label, text] : legend) {
    const int y = 10 + 20 * k++;
    out << "  <rect x=\"" << plot + 20 << "\" y=\"" << y << "\" width=\"12\" height=\"12\" fill=\"" << label_color(text)
        << "\"/>\n";
    out << "  <text x=\"" << plot + 38 << "\" y=\"" << y + 11 << "\" font-family=\"monospace\" font-size=\"12\">"
        << text << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace chambers

#endif  // CHAMBERS_SLICE_HPP
