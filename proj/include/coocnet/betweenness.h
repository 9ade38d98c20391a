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

#ifndef COOCNET_BETWEENNESS_H_
#define COOCNET_BETWEENNESS_H_

#include <vector>

#include "coocnet/graph.h"

namespace coocnet {

// Exact shortest-path betweenness on the unweighted skeleton of `g`, using
// Brandes' dependency accumulation. Values are normalized by the number of
// unordered pairs of other nodes, (n-1)(n-2)/2, so they lie in [0, 1].
// Graphs with fewer than three nodes yield all zeros.
std::vector<double> Betweenness(const CoocGraph &g);

}  // namespace coocnet

#endif  // COOCNET_BETWEENNESS_H_
