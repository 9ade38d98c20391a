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

#ifndef COOCNET_LOUVAIN_H_
#define COOCNET_LOUVAIN_H_

#include <cstdint>
#include <vector>

#include "coocnet/graph.h"

namespace coocnet {

// Community assignment for every node of a graph, indexed by node id.
struct Partition {
  std::vector<int> community;

  int CommunityCount() const;
  bool operator==(const Partition &) const = default;
};

// Every node in its own community.
Partition SingletonPartition(int n);

// Weighted modularity Q = sum_c [ L_c / m - (D_c / 2m)^2 ], where L_c is the
// edge weight inside c, D_c the summed weighted degree of c and m the total
// edge weight. Zero when m = 0. Throws if the partition size is wrong.
double Modularity(const CoocGraph &g, const Partition &p);

struct LouvainOptions {
  uint64_t seed = 0;
  // A level whose modularity improvement falls below this ends the run.
  double min_gain = 1e-7;
  // Independent starts with different visit orders; the best one is kept.
  int restarts = 10;
  // Finish each start with node-level Kernighan-Lin passes.
  bool refine = true;
};

struct LouvainResult {
  Partition partition;
  double modularity = 0;
  // Modularity before the first sweep and after every local-move sweep.
  std::vector<double> sweep_modularity;
  int levels = 0;
};

// Greedy two-phase modularity optimization (local moving, then community
// aggregation). Nodes are visited in a fresh seed-determined permutation on
// every sweep; a node moves only for a strictly positive gain, and equal
// gains resolve to the lowest community id. Community ids in the result are
// numbered by first appearance in node order.
LouvainResult RunLouvain(const CoocGraph &g, const LouvainOptions &options);

inline Partition Louvain(const CoocGraph &g, uint64_t seed) {
  return RunLouvain(g, {seed}).partition;
}

}  // namespace coocnet

#endif  // COOCNET_LOUVAIN_H_
