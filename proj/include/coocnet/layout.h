// Copyright 2026 The coocnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COOCNET_LAYOUT_H_
#define COOCNET_LAYOUT_H_

#include <cstdint>
#include <vector>

#include "coocnet/graph.h"

namespace coocnet {

struct Point {
  double x = 0;
  double y = 0;

  bool operator==(const Point &) const = default;
};

struct Layout {
  std::vector<Point> positions;  // Indexed by node id.
  uint64_t seed = 0;
  int iterations = 0;
};

struct ForceAtlasOptions {
  // Repulsion between every node pair: repulsion * (deg_u+1)(deg_v+1) / d.
  double repulsion = 10.0;
  // Attraction along edges only: attraction * d * weight.
  double attraction = 0.1;
  // Per-iteration displacement cap, multiplied by `cooling` each iteration.
  double max_step = 10.0;
  double cooling = 0.99;
  // Initial positions are uniform in a square of this side, centred at 0.
  double initial_side = 100.0;
};

// ForceAtlas-style layout. All node displacements of an iteration are
// computed from the previous positions and applied together, so the result
// depends only on the graph, the seed and the options.
Layout ForceAtlas(const CoocGraph &g, uint64_t seed, int iterations,
                  const ForceAtlasOptions &options = {});

}  // namespace coocnet

#endif  // COOCNET_LAYOUT_H_
