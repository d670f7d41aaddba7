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

#ifndef CHAMBERS_SURFACE_IO_HPP
#define CHAMBERS_SURFACE_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "chambers/surface.hpp"

namespace chambers {

namespace detail {

inline Rational json_rational(const nlohmann::json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(Integer(v.dump(), 10));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(e.what(), 0, field);
    }
  }
  throw ParseError("expected an integer or a rational string", 0, field);
}

inline DivisorClass json_class(const nlohmann::json& v, const std::string& field) {
  if (!v.is_array()) throw ParseError("expected an array of rationals", 0, field);
  RationalVector coords;
  for (std::size_t i = 0; i < v.size(); ++i) coords.push_back(json_rational(v[i], field + "[" + std::to_string(i) + "]"));
  return DivisorClass(std::move(coords));
}

inline const nlohmann::json& require(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing key", 0, key);
  return *it;
}

inline int line_of(std::string_view text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline std::string dump_string(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::string dump_class(const DivisorClass& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? ", " : "") + dump_string(to_string(d[i]));
  return out + "]";
}

}  // namespace detail

/// Reads the surface file format without validating the result.
inline SurfaceData parse_surface_data(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), detail::line_of(text, e.byte));
  }
  if (!doc.is_object()) throw ParseError("surface file must hold a JSON object", 1);

  SurfaceData s;
  const auto& basis = detail::require(doc, "basis");
  if (!basis.is_array()) throw ParseError("expected an array of labels", 0, "basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) throw ParseError("expected a string", 0, "basis[" + std::to_string(i) + "]");
    s.basis.push_back(basis[i].get<std::string>());
  }

  const auto& form = detail::require(doc, "form");
  if (!form.is_array()) throw ParseError("expected an array of rows", 0, "form");
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < form.size(); ++i) {
    const std::string field = "form[" + std::to_string(i) + "]";
    if (!form[i].is_array()) throw ParseError("expected a row", 0, field);
    RationalVector row;
    for (std::size_t j = 0; j < form[i].size(); ++j)
      row.push_back(detail::json_rational(form[i][j], field + "[" + std::to_string(j) + "]"));
    if (row.size() != form.size()) throw ParseError("form must be square", 0, field);
    rows.push_back(std::move(row));
  }
  try {
    s.form = SymMatrix(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, "form");
  }

  s.ample = detail::json_class(detail::require(doc, "ample"), "ample");

  const auto& curves = detail::require(doc, "curves");
  if (!curves.is_array()) throw ParseError("expected an array of curves", 0, "curves");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string field = "curves[" + std::to_string(i) + "]";
    const auto& c = curves[i];
    if (!c.is_object()) throw ParseError("expected an object", 0, field);
    const auto& name = detail::require(c, "name");
    if (!name.is_string()) throw ParseError("expected a string", 0, field + ".name");
    s.curves.push_back({name.get<std::string>(), detail::json_class(detail::require(c, "class"), field + ".class")});
  }

  if (auto it = doc.find("meta"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("expected an object", 0, "meta");
    for (const auto& [key, value] : it->items())
      s.meta[key] = value.is_string() ? value.get<std::string>() : value.dump();
  }
  return s;
}

/// Parses and validates; throws ParseError or ValidationFailed.
inline Surface parse_surface(std::string_view text) { return Surface(parse_surface_data(text)); }

inline std::string serialize_surface(const Surface& surface) {
  const auto& s = surface.data();
  std::ostringstream out;
  out << "{\n  \"basis\": [";
  for (std::size_t i = 0; i < s.basis.size(); ++i) out << (i ? ", " : "") << detail::dump_string(s.basis[i]);
  out << "],\n  \"form\": [\n";
  for (std::size_t i = 0; i < s.form.dim(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < s.form.dim(); ++j) out << (j ? ", " : "") << to_string(s.form(i, j));
    out << "]" << (i + 1 < s.form.dim() ? "," : "") << "\n";
  }
  out << "  ],\n  \"ample\": " << detail::dump_class(s.ample) << ",\n  \"curves\": [";
  for (std::size_t i = 0; i < s.curves.size(); ++i) {
    out << (i ? ",\n" : "\n") << "    {\"name\": " << detail::dump_string(s.curves[i].name)
        << ", \"class\": " << detail::dump_class(s.curves[i].cls) << "}";
  }
  out << (s.curves.empty() ? "" : "\n  ") << "],\n  \"meta\": {";
  std::size_t k = 0;
  for (const auto& [key, value] : s.meta)
    out << (k++ ? ", " : "") << detail::dump_string(key) << ": " << detail::dump_string(value);
  out << "}\n}\n";
  return out.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace chambers

#endif  // CHAMBERS_SURFACE_IO_HPP
