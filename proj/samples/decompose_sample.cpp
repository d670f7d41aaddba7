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

// Decomposes a few classes on the four-collinear-points surface and prints
// the chamber data for each.

#include <iostream>

#include "chambers/chambers.hpp"

int main() {
  using namespace chambers;
  const Surface s = build("fourcollinear");
  for (const char* text : {"6,1,1,-1,-1", "3,-1,-1,-1,-1", "5,-1,-1,-1,-1"}) {
    const auto d = parse_class(text);
    const auto c = classify(s, d);
    std::cout << "D = " << d.to_string() << '\n'
              << "  P = " << c.decomposition.positive.to_string() << '\n'
              << "  N = " << c.decomposition.negative.to_string() << '\n'
              << "  Zariski chamber " << s.format_set(c.neg) << ", Weyl " << format_label(s, c.weyl) << '\n';
  }
  const auto atlas = enumerate_zx(s);
  std::cout << "zariski=" << atlas.zariski_count << " weyl=" << atlas.weyl_count << '\n';
}
