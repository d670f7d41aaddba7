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

#ifndef CHAMBERS_CHAMBERS_HPP
#define CHAMBERS_CHAMBERS_HPP

#include "chambers/atlas.hpp"
#include "chambers/builders.hpp"
#include "chambers/curve_set.hpp"
#include "chambers/divisor.hpp"
#include "chambers/error.hpp"
#include "chambers/linalg.hpp"
#include "chambers/rational.hpp"
#include "chambers/relations.hpp"
#include "chambers/slice.hpp"
#include "chambers/surface.hpp"
#include "chambers/surface_io.hpp"
#include "chambers/zariski.hpp"

#endif  // CHAMBERS_CHAMBERS_HPP
