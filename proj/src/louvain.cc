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

#include "coocnet/louvain.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "coocnet/error.h"
#include "coocnet/random.h"

namespace coocnet {
namespace {

constexpr double kGainEpsilon = 1e-12;
constexpr int kMaxRefinePasses = 10;

// Graph at one aggregation level. `self` holds the weight of edges folded
// inside a super-node (each counted once).
struct LevelGraph {
  std::vector<std::vector<std::pair<int, double>>> adjacency;
  std::vector<double> self;
  std::vector<double> degree;  // sum of adjacency weights + 2 * self
  double total = 0;            // m

  int size() const { return static_cast<int>(adjacency.size()); }
};

LevelGraph FromCoocGraph(const CoocGraph &g) {
  LevelGraph level;
  const int n = g.NodeCount();
  level.adjacency.resize(n);
  level.self.assign(n, 0.0);
  level.degree.assign(n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (const Neighbor &nb : g.Neighbors(u)) {
      level.adjacency[u].emplace_back(nb.node, static_cast<double>(nb.weight));
      level.degree[u] += static_cast<double>(nb.weight);
    }
  }
  level.total = static_cast<double>(g.TotalWeight());
  return level;
}

class LocalMover {
 public:
  explicit LocalMover(const LevelGraph &graph)
      : graph_(graph),
        community_(graph.size()),
        tot_(graph.size()),
        in_(graph.size()),
        neighbor_weight_(graph.size(), -1.0) {
    for (int i = 0; i < graph.size(); ++i) {
      community_[i] = i;
      tot_[i] = graph.degree[i];
      in_[i] = graph.self[i];
    }
  }

  double Modularity() const {
    const double m = graph_.total;
    double q = 0;
    for (size_t c = 0; c < tot_.size(); ++c) {
      if (tot_[c] == 0 && in_[c] == 0) continue;
      q += in_[c] / m - (tot_[c] / (2 * m)) * (tot_[c] / (2 * m));
    }
    return q;
  }

  // One pass over the nodes in `order`; returns the number of moves.
  int Sweep(const std::vector<int> &order) {
    const double two_m = 2 * graph_.total;
    int moves = 0;
    for (int i : order) {
      const int old = community_[i];
      const double k = graph_.degree[i];
      touched_.clear();
      touched_.push_back(old);
      neighbor_weight_[old] = 0;
      for (const auto &[j, w] : graph_.adjacency[i]) {
        const int c = community_[j];
        if (neighbor_weight_[c] < 0) {
          neighbor_weight_[c] = 0;
          touched_.push_back(c);
        }
        neighbor_weight_[c] += w;
      }

      tot_[old] -= k;
      in_[old] -= neighbor_weight_[old] + graph_.self[i];

      auto gain = [&](int c) { return neighbor_weight_[c] - tot_[c] * k / two_m; };
      std::sort(touched_.begin() + 1, touched_.end());
      int best = old;
      double best_gain = gain(old);
      for (size_t t = 1; t < touched_.size(); ++t) {
        const int c = touched_[t];
        const double g = gain(c);
        if (g > best_gain + kGainEpsilon) {
          best = c;
          best_gain = g;
        }
      }

      community_[i] = best;
      tot_[best] += k;
      in_[best] += neighbor_weight_[best] + graph_.self[i];
      if (best != old) ++moves;
      for (int c : touched_) neighbor_weight_[c] = -1.0;
    }
    return moves;
  }

  // Renumbers communities densely by first appearance; returns the count.
  int Renumber(std::vector<int> &dense) const {
    std::vector<int> id(community_.size(), -1);
    dense.assign(community_.size(), 0);
    int next = 0;
    for (size_t i = 0; i < community_.size(); ++i) {
      int &slot = id[community_[i]];
      if (slot < 0) slot = next++;
      dense[i] = slot;
    }
    return next;
  }

 private:
  const LevelGraph &graph_;
  std::vector<int> community_;
  std::vector<double> tot_;
  std::vector<double> in_;
  std::vector<double> neighbor_weight_;
  std::vector<int> touched_;
};

LevelGraph Aggregate(const LevelGraph &graph, const std::vector<int> &dense,
                     int count) {
  LevelGraph next;
  next.adjacency.resize(count);
  next.self.assign(count, 0.0);
  next.degree.assign(count, 0.0);
  next.total = graph.total;
  std::vector<std::vector<std::pair<int, double>>> raw(count);
  for (int i = 0; i < graph.size(); ++i) {
    const int ci = dense[i];
    next.self[ci] += graph.self[i];
    for (const auto &[j, w] : graph.adjacency[i]) {
      const int cj = dense[j];
      if (ci == cj) {
        if (i < j) next.self[ci] += w;
      } else {
        raw[ci].emplace_back(cj, w);
      }
    }
  }
  for (int c = 0; c < count; ++c) {
    auto &list = raw[c];
    std::sort(list.begin(), list.end());
    for (const auto &[d, w] : list) {
      if (!next.adjacency[c].empty() && next.adjacency[c].back().first == d) {
        next.adjacency[c].back().second += w;
      } else {
        next.adjacency[c].emplace_back(d, w);
      }
    }
    double degree = 2 * next.self[c];
    for (const auto &[d, w] : next.adjacency[c]) degree += w;
    next.degree[c] = degree;
  }
  return next;
}

Partition Canonicalize(const std::vector<int> &assignment) {
  Partition p;
  std::vector<int> id;
  p.community.resize(assignment.size());
  int next = 0;
  for (size_t v = 0; v < assignment.size(); ++v) {
    int a = assignment[v];
    if (a >= static_cast<int>(id.size())) id.resize(a + 1, -1);
    if (id[a] < 0) id[a] = next++;
    p.community[v] = id[a];
  }
  return p;
}

}  // namespace

int Partition::CommunityCount() const {
  int count = 0;
  for (int c : community) count = std::max(count, c + 1);
  return count;
}

Partition SingletonPartition(int n) {
  Partition p;
  p.community.resize(n);
  for (int i = 0; i < n; ++i) p.community[i] = i;
  return p;
}

double Modularity(const CoocGraph &g, const Partition &p) {
  if (static_cast<int>(p.community.size()) != g.NodeCount()) {
    throw Error("partition does not cover the graph");
  }
  const double m = static_cast<double>(g.TotalWeight());
  if (m == 0) return 0;
  const int k = p.CommunityCount();
  std::vector<double> inside(k, 0.0), degree(k, 0.0);
  for (int u = 0; u < g.NodeCount(); ++u) {
    const int cu = p.community[u];
    if (cu < 0) throw Error("negative community id");
    for (const Neighbor &nb : g.Neighbors(u)) {
      degree[cu] += static_cast<double>(nb.weight);
      if (u < nb.node && p.community[nb.node] == cu) {
        inside[cu] += static_cast<double>(nb.weight);
      }
    }
  }
  double q = 0;
  for (int c = 0; c < k; ++c) {
    q += inside[c] / m - (degree[c] / (2 * m)) * (degree[c] / (2 * m));
  }
  return q;
}

namespace {

// Kernighan-Lin style refinement on the original nodes. Each pass moves
// every node once, always taking the best available move (possibly a loss,
// possibly into an empty community), then rolls back to the best prefix.
// Escapes local optima that need a losing move first; never lowers Q.
void Refine(const LevelGraph &graph, std::vector<int> &community,
            double min_gain, std::vector<double> &history) {
  const int n = graph.size();
  const double m = graph.total;
  std::vector<double> tot(n, 0.0);
  std::vector<int> size(n, 0);
  for (int v = 0; v < n; ++v) {
    tot[community[v]] += graph.degree[v];
    ++size[community[v]];
  }
  std::vector<double> weight_to(n, -1.0);
  std::vector<int> touched;
  double q = history.back();

  for (int pass = 0; pass < kMaxRefinePasses; ++pass) {
    std::vector<char> moved(n, 0);
    std::vector<std::pair<int, int>> log;  // (node, previous community)
    double running = 0, best_running = 0;
    size_t best_prefix = 0;
    for (int step = 0; step < n; ++step) {
      int free_id = -1;
      for (int c = 0; c < n; ++c) {
        if (size[c] == 0) {
          free_id = c;
          break;
        }
      }
      int best_node = -1, best_target = -1;
      double best_gain = 0;
      for (int v = 0; v < n; ++v) {
        if (moved[v]) continue;
        const int from = community[v];
        const double k = graph.degree[v];
        touched.clear();
        weight_to[from] = 0;
        touched.push_back(from);
        for (const auto &[u, w] : graph.adjacency[v]) {
          const int c = community[u];
          if (weight_to[c] < 0) {
            weight_to[c] = 0;
            touched.push_back(c);
          }
          weight_to[c] += w;
        }
        if (free_id >= 0 && size[from] > 1) {
          weight_to[free_id] = 0;
          touched.push_back(free_id);
        }
        std::sort(touched.begin() + 1, touched.end());
        const double rest = tot[from] - k;
        for (size_t t = 1; t < touched.size(); ++t) {
          const int c = touched[t];
          const double gain = (weight_to[c] - weight_to[from]) / m -
                              k * (tot[c] - rest) / (2 * m * m);
          if (best_node < 0 || gain > best_gain + kGainEpsilon) {
            best_node = v;
            best_target = c;
            best_gain = gain;
          }
        }
        for (int c : touched) weight_to[c] = -1.0;
      }
      if (best_node < 0) break;
      const int from = community[best_node];
      log.emplace_back(best_node, from);
      tot[from] -= graph.degree[best_node];
      --size[from];
      tot[best_target] += graph.degree[best_node];
      ++size[best_target];
      community[best_node] = best_target;
      moved[best_node] = 1;
      running += best_gain;
      if (running > best_running + kGainEpsilon) {
        best_running = running;
        best_prefix = log.size();
      }
    }
    while (log.size() > best_prefix) {
      const auto [v, from] = log.back();
      log.pop_back();
      const int to = community[v];
      tot[to] -= graph.degree[v];
      --size[to];
      tot[from] += graph.degree[v];
      ++size[from];
      community[v] = from;
    }
    if (best_prefix == 0) break;
    q += best_running;
    history.push_back(q);
    if (best_running < min_gain) break;
  }
}

LouvainResult SingleRun(const CoocGraph &g, uint64_t seed, double min_gain,
                        bool refine) {
  LouvainResult result;
  const int n = g.NodeCount();
  std::vector<int> assignment(n);
  for (int v = 0; v < n; ++v) assignment[v] = v;
  if (n == 0 || g.TotalWeight() == 0) {
    result.partition = SingletonPartition(n);
    result.modularity = Modularity(g, result.partition);
    result.sweep_modularity.push_back(result.modularity);
    return result;
  }

  Rng rng(seed);
  LevelGraph level = FromCoocGraph(g);
  double level_start_q = 0;
  bool first = true;
  while (true) {
    LocalMover mover(level);
    double q = mover.Modularity();
    if (first) {
      result.sweep_modularity.push_back(q);
      first = false;
    }
    level_start_q = q;
    int level_moves = 0;
    while (true) {
      int moves = mover.Sweep(rng.Permutation(level.size()));
      double after = mover.Modularity();
      if (after < q - 1e-10) {
        throw std::logic_error("louvain: modularity decreased during a sweep");
      }
      result.sweep_modularity.push_back(after);
      level_moves += moves;
      bool small = after - q < min_gain;
      q = after;
      if (moves == 0 || small) break;
    }
    ++result.levels;
    if (level_moves == 0) break;

    std::vector<int> dense;
    int count = mover.Renumber(dense);
    for (int v = 0; v < n; ++v) assignment[v] = dense[assignment[v]];
    if (q - level_start_q < min_gain || count == level.size()) break;
    level = Aggregate(level, dense, count);
  }

  if (refine) Refine(FromCoocGraph(g), assignment, min_gain, result.sweep_modularity);
  result.partition = Canonicalize(assignment);
  result.modularity = Modularity(g, result.partition);
  return result;
}

}  // namespace

LouvainResult RunLouvain(const CoocGraph &g, const LouvainOptions &options) {
  if (options.restarts < 1) throw Error("louvain needs at least one start");
  // Start 0 uses the seed itself; later starts draw their seeds from it.
  Rng seeds(options.seed);
  LouvainResult best = SingleRun(g, options.seed, options.min_gain, options.refine);
  for (int r = 1; r < options.restarts && g.TotalWeight() > 0; ++r) {
    LouvainResult next = SingleRun(g, seeds.Next(), options.min_gain, options.refine);
    if (next.modularity > best.modularity) best = std::move(next);
  }
  return best;
}

}  // namespace coocnet
