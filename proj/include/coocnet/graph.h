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

#ifndef COOCNET_GRAPH_H_
#define COOCNET_GRAPH_H_

#include <string>
#include <vector>

#include "coocnet/annotation.h"
#include "coocnet/corpus.h"
#include "coocnet/normalization.h"

namespace coocnet {

struct GraphNode {
  int id = 0;
  std::string label;
  EntityType etype = EntityType::kOrganization;
  long long mentions = 0;

  bool operator==(const GraphNode &) const = default;
};

struct GraphEdge {
  int source = 0;  // source < target
  int target = 0;
  long long weight = 1;

  bool operator==(const GraphEdge &) const = default;
};

struct Neighbor {
  int node = 0;
  long long weight = 0;
};

// Weighted undirected simple graph. Node ids are dense indices 0..n-1.
class CoocGraph {
 public:
  CoocGraph() = default;

  int AddNode(std::string label, EntityType etype, long long mentions = 0);

  // Adds `weight` to the edge {u, v}, creating it if needed. Self-loops and
  // non-positive weights are rejected.
  void AddEdgeWeight(int u, int v, long long weight = 1);

  int NodeCount() const { return static_cast<int>(nodes_.size()); }
  const std::vector<GraphNode> &nodes() const { return nodes_; }

  // Edges sorted by (source, target).
  std::vector<GraphEdge> Edges() const;
  long long EdgeWeight(int u, int v) const;
  const std::vector<Neighbor> &Neighbors(int u) const { return adjacency_[u]; }
  int Degree(int u) const { return static_cast<int>(adjacency_[u].size()); }
  long long TotalWeight() const;

  bool operator==(const CoocGraph &other) const {
    return nodes_ == other.nodes_ && Edges() == other.Edges();
  }

 private:
  std::vector<GraphNode> nodes_;
  // Neighbors sorted by node id.
  std::vector<std::vector<Neighbor>> adjacency_;
};

// One node per cluster mentioned at least once, in cluster order. Each
// sentence adds 1 to the weight of every unordered pair of distinct clusters
// it mentions. Throws if an ORGANIZATION/PERSON mention maps to no cluster,
// or if `documents` is given and a mention names an unknown sentence.
CoocGraph BuildGraph(const std::vector<EntityCluster> &clusters,
                     const std::vector<EntityMention> &mentions,
                     const std::vector<Document> *documents = nullptr);

// Copy of `g` keeping only edges of weight >= min_weight.
CoocGraph FilterEdges(const CoocGraph &g, long long min_weight);

// `source<TAB>target<TAB>weight` per edge, using node labels.
std::string FormatEdgeList(const CoocGraph &g);

}  // namespace coocnet

#endif  // COOCNET_GRAPH_H_
