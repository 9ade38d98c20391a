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

#ifndef COOCNET_GEXF_H_
#define COOCNET_GEXF_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coocnet/graph.h"
#include "coocnet/layout.h"
#include "coocnet/louvain.h"

namespace coocnet {

struct Rgb {
  uint8_t r = 0;
  uint8_t g = 0;
  uint8_t b = 0;

  bool operator==(const Rgb &) const = default;
};

inline constexpr double kMinNodeSize = 4.0;
inline constexpr double kMaxNodeSize = 40.0;

// Twelve-color palette; community c gets CommunityPalette()[c % 12].
const std::array<Rgb, 12> &CommunityPalette();

// Affine map of betweenness onto [kMinNodeSize, kMaxNodeSize] using the
// range of `betweenness`; a constant range maps everything to the minimum.
std::vector<double> NodeSizes(const std::vector<double> &betweenness);

// GEXF 1.2 document with undirected edges. Each node carries the
// attributes community, betweenness, degree, type and mentions, plus
// viz:color, viz:position and viz:size.
std::string ExportGexf(const CoocGraph &g, const Partition &p,
                       const std::vector<double> &betweenness,
                       const Layout &layout);

// Everything ExportGexf writes, read back. Node ids must be the dense
// integers ExportGexf produces.
struct GexfDocument {
  CoocGraph graph;
  Partition partition;
  std::vector<double> betweenness;
  std::vector<int> degree;
  std::vector<Point> positions;
  std::vector<double> sizes;
  std::vector<Rgb> colors;
};

// Throws Error on malformed XML or a structure this reader cannot map.
GexfDocument ReadGexf(std::string_view xml);

}  // namespace coocnet

#endif  // COOCNET_GEXF_H_
