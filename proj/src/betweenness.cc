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

#include "coocnet/betweenness.h"

#include <queue>

namespace coocnet {

std::vector<double> Betweenness(const CoocGraph &g) {
  const int n = g.NodeCount();
  std::vector<double> centrality(n, 0.0);
  if (n < 3) return centrality;

  std::vector<int> order;  // Nodes in non-decreasing distance from source.
  std::vector<std::vector<int>> predecessors(n);
  std::vector<double> sigma(n);
  std::vector<int> dist(n);
  std::vector<double> delta(n);
  order.reserve(n);

  for (int s = 0; s < n; ++s) {
    order.clear();
    for (int v = 0; v < n; ++v) {
      predecessors[v].clear();
      sigma[v] = 0;
      dist[v] = -1;
      delta[v] = 0;
    }
    sigma[s] = 1;
    dist[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      order.push_back(v);
      for (const Neighbor &w : g.Neighbors(v)) {
        if (dist[w.node] < 0) {
          dist[w.node] = dist[v] + 1;
          queue.push(w.node);
        }
        if (dist[w.node] == dist[v] + 1) {
          sigma[w.node] += sigma[v];
          predecessors[w.node].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int w = *it;
      for (int v : predecessors[w]) {
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) centrality[w] += delta[w];
    }
  }

  // Each unordered pair was counted from both endpoints.
  // Divide rather than scale by a reciprocal: exact sums stay correctly rounded.
  const double pairs = (n - 1.0) * (n - 2.0);
  for (double &c : centrality) c /= pairs;
  return centrality;
}

}  // namespace coocnet
