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

#include "coocnet/graph.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "coocnet/error.h"

namespace coocnet {

int CoocGraph::AddNode(std::string label, EntityType etype, long long mentions) {
  int id = NodeCount();
  nodes_.push_back({id, std::move(label), etype, mentions});
  adjacency_.emplace_back();
  return id;
}

void CoocGraph::AddEdgeWeight(int u, int v, long long weight) {
  if (u < 0 || v < 0 || u >= NodeCount() || v >= NodeCount()) {
    throw Error("edge endpoint out of range");
  }
  if (u == v) throw Error("self-loops are not allowed");
  if (weight <= 0) throw Error("edge weight must be positive");
  auto bump = [weight](std::vector<Neighbor> &list, int other) {
    auto it = std::lower_bound(
        list.begin(), list.end(), other,
        [](const Neighbor &n, int id) { return n.node < id; });
    if (it != list.end() && it->node == other) {
      it->weight += weight;
    } else {
      list.insert(it, {other, weight});
    }
  };
  bump(adjacency_[u], v);
  bump(adjacency_[v], u);
}

std::vector<GraphEdge> CoocGraph::Edges() const {
  std::vector<GraphEdge> edges;
  for (int u = 0; u < NodeCount(); ++u) {
    for (const Neighbor &n : adjacency_[u]) {
      if (u < n.node) edges.push_back({u, n.node, n.weight});
    }
  }
  return edges;
}

long long CoocGraph::EdgeWeight(int u, int v) const {
  const auto &list = adjacency_[u];
  auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Neighbor &n, int id) { return n.node < id; });
  return it != list.end() && it->node == v ? it->weight : 0;
}

long long CoocGraph::TotalWeight() const {
  long long total = 0;
  for (int u = 0; u < NodeCount(); ++u) {
    for (const Neighbor &n : adjacency_[u]) {
      if (u < n.node) total += n.weight;
    }
  }
  return total;
}

CoocGraph BuildGraph(const std::vector<EntityCluster> &clusters,
                     const std::vector<EntityMention> &mentions,
                     const std::vector<Document> *documents) {
  std::map<std::pair<EntityType, std::string>, size_t> cluster_of;
  for (size_t c = 0; c < clusters.size(); ++c) {
    for (const SurfaceStat &m : clusters[c].members) {
      cluster_of[{clusters[c].etype, m.surface}] = c;
    }
  }
  std::map<std::string, size_t> sentence_counts;
  if (documents != nullptr) {
    for (const Document &d : *documents) {
      sentence_counts[d.doc_id] = d.sentences.size();
    }
  }

  // (doc, sentence) -> clusters mentioned there.
  std::map<std::pair<std::string, int>, std::set<size_t>> by_sentence;
  std::vector<long long> mention_counts(clusters.size(), 0);
  for (const EntityMention &m : mentions) {
    if (m.etype != EntityType::kOrganization &&
        m.etype != EntityType::kPerson) {
      continue;
    }
    auto it = cluster_of.find({m.etype, m.surface});
    if (it == cluster_of.end()) {
      throw Error("mention '" + m.surface + "' (" +
                  std::string(EntityTypeName(m.etype)) +
                  ") belongs to no cluster");
    }
    if (documents != nullptr) {
      auto doc = sentence_counts.find(m.doc_id);
      if (doc == sentence_counts.end() || m.sentence_index < 0 ||
          static_cast<size_t>(m.sentence_index) >= doc->second) {
        throw Error("mention '" + m.surface + "' refers to unknown sentence " +
                    m.doc_id + ":" + std::to_string(m.sentence_index));
      }
    }
    ++mention_counts[it->second];
    by_sentence[{m.doc_id, m.sentence_index}].insert(it->second);
  }

  CoocGraph g;
  std::vector<int> node_of(clusters.size(), -1);
  for (size_t c = 0; c < clusters.size(); ++c) {
    if (mention_counts[c] == 0) continue;
    node_of[c] = g.AddNode(clusters[c].canonical, clusters[c].etype,
                           mention_counts[c]);
  }
  for (const auto &[key, present] : by_sentence) {
    std::vector<size_t> ids(present.begin(), present.end());
    for (size_t i = 0; i < ids.size(); ++i) {
      for (size_t j = i + 1; j < ids.size(); ++j) {
        g.AddEdgeWeight(node_of[ids[i]], node_of[ids[j]], 1);
      }
    }
  }
  return g;
}

CoocGraph FilterEdges(const CoocGraph &g, long long min_weight) {
  CoocGraph out;
  for (const GraphNode &n : g.nodes()) out.AddNode(n.label, n.etype, n.mentions);
  for (const GraphEdge &e : g.Edges()) {
    if (e.weight >= min_weight) out.AddEdgeWeight(e.source, e.target, e.weight);
  }
  return out;
}

std::string FormatEdgeList(const CoocGraph &g) {
  std::ostringstream out;
  for (const GraphEdge &e : g.Edges()) {
    out << g.nodes()[e.source].label << '\t' << g.nodes()[e.target].label
        << '\t' << e.weight << '\n';
  }
  return out.str();
}

}  // namespace coocnet
