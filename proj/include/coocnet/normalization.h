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

#ifndef COOCNET_NORMALIZATION_H_
#define COOCNET_NORMALIZATION_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coocnet/annotation.h"

namespace coocnet {

struct SurfaceStat {
  std::string surface;
  EntityType etype = EntityType::kOrganization;
  int count = 1;

  bool operator==(const SurfaceStat &) const = default;
};

// A set of surface forms resolved to one entity. Members are kept sorted by
// surface; `canonical` is the most frequent member (ties: smallest string).
struct EntityCluster {
  std::vector<SurfaceStat> members;
  EntityType etype = EntityType::kOrganization;
  std::string canonical;

  long long TotalCount() const;
  bool operator==(const EntityCluster &) const = default;
};

// Builds a cluster from members of one type, sorting them and choosing the
// canonical label.
EntityCluster MakeCluster(std::vector<SurfaceStat> members);

enum class ClusteringMode { kMax, kAverage };

struct NormalizationPolicy {
  ClusteringMode mode = ClusteringMode::kAverage;
  // Replaces the corpus average occurrence threshold when set; must be > 0.
  std::optional<double> av_override;
};

// Upper-cased first letters of the significant tokens of `name`. Connector
// tokens (and, of, the, for, &) are dropped and punctuation is stripped from
// token edges.
std::string Initials(std::string_view name);

// Organization rule: multi-word names with equal initials, case-insensitive
// token containment, or a single-token acronym equal to the initials of a
// multi-word name.
bool MatchOrg(std::string_view a, std::string_view b);

struct PersonRuleOptions {
  std::vector<std::string> honorifics = {"mr",   "mrs",      "ms",
                                         "miss", "chairman", "dr"};
};

// Person rule: token containment either way, or the last token of one name
// appearing among the tokens of the other. Honorifics are ignored.
bool MatchPers(std::string_view a, std::string_view b,
               const PersonRuleOptions &options = {});

// The type-appropriate rule: MatchOrg for organizations, MatchPers otherwise.
bool MatchSurfaces(EntityType type, std::string_view a, std::string_view b);

// Mean count over distinct surfaces. Throws on empty input or mixed types.
double AverageOccurrences(const std::vector<SurfaceStat> &stats);

struct MergeResult {
  std::vector<EntityCluster> clusters;
  bool changed = false;
};

// Called for each pair of clusters a merge pass unites, with their
// canonical labels.
using MergeObserver =
    std::function<void(const EntityCluster &, const EntityCluster &)>;

// One pass over all unordered cluster pairs, in lexicographic order of
// canonical labels. Matches are united through a union-find so transitive
// merges resolve within the pass. Throws on mixed entity types.
MergeResult MergePass(const std::vector<EntityCluster> &clusters,
                      const NormalizationPolicy &policy, double av,
                      const MergeObserver &observer = nullptr);

// Clusters ORGANIZATION and PERSON surfaces separately, iterating
// MergePass from singletons to a fixpoint. Other mention types are ignored.
// Output is sorted by descending total count, then canonical label.
std::vector<EntityCluster> Normalize(const std::vector<EntityMention> &mentions,
                                     const NormalizationPolicy &policy);

// Same, from precomputed surface counts.
std::vector<EntityCluster> NormalizeStats(std::vector<SurfaceStat> stats,
                                          const NormalizationPolicy &policy);

// Surface statistics aggregated from mentions (ORGANIZATION/PERSON only),
// sorted by type then surface.
std::vector<SurfaceStat> CountSurfaces(
    const std::vector<EntityMention> &mentions);

void SortClusters(std::vector<EntityCluster> &clusters);

// Dump format: `TYPE<TAB>canonical<TAB>total<TAB>m1|m2|...` where each member
// is written as `surface:count`.
std::string FormatClusters(const std::vector<EntityCluster> &clusters);
std::vector<EntityCluster> ParseClusters(std::string_view text);

}  // namespace coocnet

#endif  // COOCNET_NORMALIZATION_H_
