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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coocnet/betweenness.h"
#include "coocnet/error.h"
#include "coocnet/graph.h"
#include "coocnet/normalization.h"
#include "coocnet/random.h"
#include "doctest.h"
#include "support/oracles.h"

namespace coocnet {
namespace {

constexpr EntityType kOrg = EntityType::kOrganization;
constexpr EntityType kPers = EntityType::kPerson;

EntityMention At(int sentence, std::string surface, EntityType type = kOrg) {
  return {"d", sentence, 0, surface.size(), surface, type};
}

int NodeNamed(const CoocGraph &g, const std::string &label) {
  for (const GraphNode &n : g.nodes())
    if (n.label == label) return n.id;
  return -1;
}

CoocGraph Path(int n) {
  CoocGraph g;
  for (int i = 0; i < n; ++i) g.AddNode("v" + std::to_string(i), kOrg);
  for (int i = 0; i + 1 < n; ++i) g.AddEdgeWeight(i, i + 1);
  return g;
}

CoocGraph Complete(int n) {
  CoocGraph g;
  for (int i = 0; i < n; ++i) g.AddNode("v" + std::to_string(i), kOrg);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.AddEdgeWeight(i, j);
  return g;
}

TEST_CASE("graph container") {
  CoocGraph g;
  int a = g.AddNode("A", kOrg, 2);
  int b = g.AddNode("B", kPers, 1);
  int c = g.AddNode("C", kOrg, 1);
  g.AddEdgeWeight(b, a, 2);
  g.AddEdgeWeight(a, b, 1);
  g.AddEdgeWeight(c, a);
  CHECK(g.EdgeWeight(a, b) == 3);
  CHECK(g.EdgeWeight(b, a) == 3);
  CHECK(g.EdgeWeight(b, c) == 0);
  CHECK(g.Degree(a) == 2);
  CHECK(g.TotalWeight() == 4);
  auto edges = g.Edges();
  REQUIRE(edges.size() == 2);
  CHECK(edges[0] == GraphEdge{0, 1, 3});
  CHECK(edges[1] == GraphEdge{0, 2, 1});
  CHECK_THROWS_AS(g.AddEdgeWeight(a, a), Error);
  CHECK_THROWS_AS(g.AddEdgeWeight(a, b, 0), Error);
  CHECK_THROWS_AS(g.AddEdgeWeight(a, 7), Error);
  CHECK(FormatEdgeList(g) == "A\tB\t3\nA\tC\t1\n");
  CHECK(FilterEdges(g, 2).Edges() == std::vector<GraphEdge>{{0, 1, 3}});
  CHECK(FilterEdges(g, 2).NodeCount() == 3);
}

TEST_CASE("co-occurrence edges") {
  std::vector<EntityCluster> clusters = {
      MakeCluster({{"A", kOrg, 3}}), MakeCluster({{"B", kOrg, 1}})};
  CoocGraph one = BuildGraph(clusters, {At(0, "A"), At(0, "B")});
  CHECK(one.Edges() == std::vector<GraphEdge>{{0, 1, 1}});

  CoocGraph repeated = BuildGraph(clusters, {At(0, "A"), At(0, "A"), At(0, "B")});
  CHECK(repeated.EdgeWeight(0, 1) == 1);
  CHECK(repeated.nodes()[0].mentions == 2);

  // Same sentence index in another document is another sentence.
  EntityMention other = At(0, "B");
  other.doc_id = "e";
  CoocGraph split = BuildGraph(clusters, {At(0, "A"), other});
  CHECK(split.Edges().empty());
  CHECK(split.NodeCount() == 2);
}

TEST_CASE("Tourre and Goldman Sachs in three sentences") {
  std::vector<EntityMention> mentions;
  for (int s = 0; s < 3; ++s) {
    mentions.push_back(At(s, "Fabrice Tourre", kPers));
    mentions.push_back(At(s, "Goldman Sachs"));
  }
  mentions.push_back(At(3, "Tourre", kPers));
  mentions.push_back(At(4, "Goldman Sachs"));
  auto clusters = Normalize(mentions, {ClusteringMode::kMax, std::nullopt});
  CoocGraph g = BuildGraph(clusters, mentions);
  int tourre = NodeNamed(g, "Fabrice Tourre");
  int goldman = NodeNamed(g, "Goldman Sachs");
  REQUIRE(tourre >= 0);
  REQUIRE(goldman >= 0);
  CHECK(g.NodeCount() == 2);
  CHECK(g.EdgeWeight(tourre, goldman) == 3);
  CHECK(g.nodes()[tourre].etype == kPers);
}

TEST_CASE("build graph errors and unmentioned clusters") {
  std::vector<EntityCluster> clusters = {
      MakeCluster({{"A", kOrg, 1}}), MakeCluster({{"Idle", kOrg, 1}})};
  CHECK_THROWS_WITH(BuildGraph(clusters, {At(0, "Z")}), doctest::Contains("no cluster"));
  CHECK(BuildGraph(clusters, {At(0, "A")}).NodeCount() == 1);
  // The cluster key includes the type.
  CHECK_THROWS_AS(BuildGraph(clusters, {At(0, "A", kPers)}), Error);
  // Dates and other types are ignored.
  CHECK(BuildGraph(clusters, {At(0, "2008", EntityType::kDate)}).NodeCount() == 0);

  Document doc;
  doc.doc_id = "d";
  doc.text = "A.";
  doc.sentences.push_back({0, 0, 2, "A."});
  std::vector<Document> docs = {doc};
  CHECK_THROWS_AS(BuildGraph(clusters, {At(1, "A")}, &docs), Error);
}

TEST_CASE("edge weights match a per-sentence recount") {
  Rng rng(41);
  std::vector<std::pair<std::string, EntityType>> entities = {
      {"Goldman Sachs", kOrg}, {"Goldman", kOrg}, {"OTS", kOrg},
      {"Office of Thrift Supervision", kOrg}, {"Fannie Mae", kOrg},
      {"Mary Schapiro", kPers}, {"Schapiro", kPers}, {"Ben Bernanke", kPers}};
  for (int round = 0; round < 40; ++round) {
    auto corpus = testing::RandomCorpus(rng, 3, 12, entities, {"rose", "fell", "and"});
    auto clusters = Normalize(corpus.mentions, {ClusteringMode::kMax, std::nullopt});
    CoocGraph g = BuildGraph(clusters, corpus.mentions, &corpus.docs);
    auto expected = testing::RecountPairs(clusters, corpus.mentions);
    size_t edges = 0;
    for (const GraphEdge &e : g.Edges()) {
      std::string a = g.nodes()[e.source].label, b = g.nodes()[e.target].label;
      if (b < a) std::swap(a, b);
      CHECK(expected[{a, b}] == e.weight);
      ++edges;
    }
    CHECK(edges == expected.size());
  }
}

TEST_CASE("betweenness closed forms") {
  CHECK(Betweenness(CoocGraph{}).empty());
  auto path = Betweenness(Path(3));
  CHECK(path == std::vector<double>{0.0, 1.0, 0.0});
  for (double x : Betweenness(Complete(4))) CHECK(x == 0.0);
  // Star: the hub carries every pair.
  CoocGraph star;
  for (int i = 0; i < 6; ++i) star.AddNode("v" + std::to_string(i), kOrg);
  for (int i = 1; i < 6; ++i) star.AddEdgeWeight(0, i, i);
  auto bc = Betweenness(star);
  CHECK(bc[0] == doctest::Approx(1.0));
  CHECK(bc[3] == 0.0);
  // Path of five: BC(i) = i (n-1-i) / ((n-1)(n-2)/2).
  auto p5 = Betweenness(Path(5));
  for (int i = 0; i < 5; ++i) CHECK(p5[i] == doctest::Approx(i * (4.0 - i) / 6.0));
}

TEST_CASE("betweenness ignores weights and matches brute force") {
  Rng rng(43);
  for (int round = 0; round < 30; ++round) {
    int n = 1 + static_cast<int>(rng.Below(30));
    CoocGraph g = testing::RandomGraph(rng, n, rng.Unit() * 0.4, 5);
    auto fast = Betweenness(g);
    auto slow = testing::BruteForceBetweenness(g);
    REQUIRE(fast.size() == slow.size());
    for (int i = 0; i < n; ++i) CHECK(std::abs(fast[i] - slow[i]) <= 1e-9);
  }
}

TEST_CASE("tree betweenness") {
  Rng rng(47);
  for (int round = 0; round < 30; ++round) {
    const int n = 3 + static_cast<int>(rng.Below(20));
    CoocGraph tree;
    for (int i = 0; i < n; ++i) tree.AddNode("v" + std::to_string(i), kOrg);
    for (int i = 1; i < n; ++i) tree.AddEdgeWeight(static_cast<int>(rng.Below(i)), i);
    auto bc = Betweenness(tree);
    // In a tree a node lies on the unique path of every pair it separates:
    // sum over components of removal, minus the pairs within each.
    double total = 0, expected = 0;
    for (int v = 0; v < n; ++v) {
      total += bc[v];
      if (tree.Degree(v) == 1) CHECK(bc[v] == 0.0);
      std::vector<int> comp(n, -1);
      std::vector<long long> sizes;
      for (int s = 0; s < n; ++s) {
        if (s == v || comp[s] >= 0) continue;
        int id = static_cast<int>(sizes.size());
        sizes.push_back(0);
        std::vector<int> stack = {s};
        comp[s] = id;
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          ++sizes[id];
          for (const Neighbor &nb : tree.Neighbors(u)) {
            if (nb.node != v && comp[nb.node] < 0) {
              comp[nb.node] = id;
              stack.push_back(nb.node);
            }
          }
        }
      }
      long long rest = n - 1, pairs = rest * (rest - 1) / 2;
      for (long long s : sizes) pairs -= s * (s - 1) / 2;
      expected += static_cast<double>(pairs);
    }
    CHECK(total == doctest::Approx(expected / ((n - 1.0) * (n - 2.0) / 2.0)));
  }
}

}  // namespace
}  // namespace coocnet
