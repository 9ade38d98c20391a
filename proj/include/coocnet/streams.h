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

#ifndef COOCNET_STREAMS_H_
#define COOCNET_STREAMS_H_

#include <map>
#include <string>
#include <vector>

#include "coocnet/annotation.h"
#include "coocnet/corpus.h"
#include "coocnet/normalization.h"
#include "coocnet/terms.h"

namespace coocnet {

// Aggregated count of sentences in which a year, an entity and a term
// occur together.
struct Triple {
  int year = 0;
  std::string entity;  // Cluster canonical label.
  std::string term;
  long long count = 0;

  bool operator==(const Triple &) const = default;
};

// For every sentence holding at least one year, one ORGANIZATION/PERSON
// mention and one term occurrence, counts one unit per (year, entity, term)
// combination. Years apply to their own sentence only. Output is sorted by
// (year, entity, term). Throws if an entity mention belongs to no cluster.
std::vector<Triple> CollectTriples(const std::vector<Document> &docs,
                                   const std::vector<EntityMention> &mentions,
                                   const std::vector<YearMention> &years,
                                   const std::vector<TermRecord> &terms,
                                   const std::vector<EntityCluster> &clusters);

struct Period {
  int index = 0;
  int start_year = 0;
  int end_year = 0;  // inclusive

  bool operator==(const Period &) const = default;
};

struct StreamNode {
  std::string id;  // "p{period}:{entity}"
  int period = 0;
  std::string entity;
  std::map<std::string, long long> terms;

  bool operator==(const StreamNode &) const = default;
};

struct Tube {
  std::string from;
  std::string to;
  int weight = 0;
  std::vector<std::string> shared_terms;  // sorted

  bool operator==(const Tube &) const = default;
};

struct StreamModel {
  std::vector<Period> periods;
  std::vector<StreamNode> nodes;  // sorted by (period, entity)
  std::vector<Tube> tubes;        // sorted by (from, to) node order

  // nullptr when absent.
  const StreamNode *FindNode(const std::string &id) const;

  bool operator==(const StreamModel &) const = default;
};

std::string StreamNodeId(int period, const std::string &entity);

// Splits [lo, hi] so that each boundary year starts a new period.
// Boundaries must be strictly increasing with lo < b <= hi.
std::vector<Period> MakePeriods(int lo, int hi, const std::vector<int> &boundaries);

// One period per year of [lo, hi].
std::vector<int> YearlyBoundaries(int lo, int hi);

struct StreamOptions {
  int year_lo = 1990;
  int year_hi = 2020;
  std::vector<int> boundaries;
  int top_k_entities = 20;
  long long min_assoc = 2;
  int min_overlap = 1;
};

// Restricts to the top_k entities by total triple count (ties: label), makes
// a node for each (period, entity) having some term count >= min_assoc, and
// links nodes of consecutive periods, same entity or not, when they share at
// least max(min_overlap, 1) terms. Triples outside the year range are
// ignored. Throws on invalid boundaries.
StreamModel BuildStreams(const std::vector<Triple> &triples,
                         const StreamOptions &options);

struct TermDiff {
  std::vector<std::string> common;
  std::vector<std::string> only_a;
  std::vector<std::string> only_b;

  bool operator==(const TermDiff &) const = default;
};

// Set algebra on the term keys of two nodes of any periods. Throws on an
// unknown node id.
TermDiff DiffTerms(const StreamModel &model, const std::string &a,
                   const std::string &b);

}  // namespace coocnet

#endif  // COOCNET_STREAMS_H_
