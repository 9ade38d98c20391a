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

#include "coocnet/layout.h"

#include <cmath>

#include "coocnet/error.h"
#include "coocnet/random.h"

namespace coocnet {
namespace {

constexpr double kMinDistance = 1e-6;

}  // namespace

Layout ForceAtlas(const CoocGraph &g, uint64_t seed, int iterations,
                  const ForceAtlasOptions &options) {
  if (iterations < 0) throw Error("iterations must be >= 0");
  const int n = g.NodeCount();
  Layout layout;
  layout.seed = seed;
  layout.iterations = iterations;
  layout.positions.resize(n);

  Rng rng(seed);
  for (Point &p : layout.positions) {
    p.x = (rng.Unit() - 0.5) * options.initial_side;
    p.y = (rng.Unit() - 0.5) * options.initial_side;
  }

  std::vector<double> mass(n);
  for (int u = 0; u < n; ++u) mass[u] = g.Degree(u) + 1.0;
  const std::vector<GraphEdge> edges = g.Edges();

  std::vector<Point> force(n);
  double step = options.max_step;
  for (int it = 0; it < iterations; ++it) {
    for (Point &f : force) f = {0, 0};
    auto &pos = layout.positions;

    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        double dx = pos[u].x - pos[v].x;
        double dy = pos[u].y - pos[v].y;
        double d = std::sqrt(dx * dx + dy * dy);
        if (d < kMinDistance) {
          // Coincident nodes: separate along a fixed direction.
          dx = 1.0;
          dy = 0.0;
          d = kMinDistance;
        } else {
          dx /= d;
          dy /= d;
        }
        double magnitude = options.repulsion * mass[u] * mass[v] / d;
        force[u].x += dx * magnitude;
        force[u].y += dy * magnitude;
        force[v].x -= dx * magnitude;
        force[v].y -= dy * magnitude;
      }
    }

    for (const GraphEdge &e : edges) {
      double dx = pos[e.target].x - pos[e.source].x;
      double dy = pos[e.target].y - pos[e.source].y;
      double d = std::sqrt(dx * dx + dy * dy);
      if (d < kMinDistance) continue;
      // attraction * d * w along the unit vector = attraction * w * (dx, dy)
      double scale = options.attraction * static_cast<double>(e.weight);
      force[e.source].x += dx * scale;
      force[e.source].y += dy * scale;
      force[e.target].x -= dx * scale;
      force[e.target].y -= dy * scale;
    }

    for (int u = 0; u < n; ++u) {
      double fx = force[u].x, fy = force[u].y;
      double len = std::sqrt(fx * fx + fy * fy);
      if (len > step) {
        fx *= step / len;
        fy *= step / len;
      }
      pos[u].x += fx;
      pos[u].y += fy;
    }
    step *= options.cooling;
  }
  return layout;
}

}  // namespace coocnet
