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

#include "coocnet/streams.h"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "coocnet/error.h"
#include "coocnet/text_util.h"

namespace coocnet {

std::vector<Triple> CollectTriples(const std::vector<Document> &docs,
                                   const std::vector<EntityMention> &mentions,
                                   const std::vector<YearMention> &years,
                                   const std::vector<TermRecord> &terms,
                                   const std::vector<EntityCluster> &clusters) {
  using SentenceKey = std::pair<std::string, int>;

  std::map<std::pair<EntityType, std::string>, const std::string *> canonical_of;
  for (const EntityCluster &c : clusters) {
    for (const SurfaceStat &m : c.members) {
      canonical_of[{c.etype, m.surface}] = &c.canonical;
    }
  }

  std::map<SentenceKey, std::set<int>> years_at;
  for (const YearMention &y : years) {
    years_at[{y.doc_id, y.sentence_index}].insert(y.year);
  }
  std::map<SentenceKey, std::set<std::string>> entities_at;
  for (const EntityMention &m : mentions) {
    if (m.etype != EntityType::kOrganization &&
        m.etype != EntityType::kPerson) {
      continue;
    }
    auto it = canonical_of.find({m.etype, m.surface});
    if (it == canonical_of.end()) {
      throw Error("mention '" + m.surface + "' belongs to no cluster");
    }
    SentenceKey key{m.doc_id, m.sentence_index};
    if (years_at.count(key) > 0) entities_at[key].insert(*it->second);
  }

  std::unordered_set<std::string> term_set;
  size_t max_len = 1;
  for (const TermRecord &t : terms) {
    term_set.insert(t.term);
    max_len = std::max(max_len, SplitWhitespace(t.term).size());
  }

  std::map<std::tuple<int, std::string, std::string>, long long> counts;
  for (const Document &doc : docs) {
    for (const Sentence &s : doc.sentences) {
      SentenceKey key{doc.doc_id, s.index};
      auto ys = years_at.find(key);
      auto es = entities_at.find(key);
      if (ys == years_at.end() || es == entities_at.end()) continue;

      std::set<std::string> present;
      std::vector<std::string> toks = PhraseTokens(s.text);
      for (size_t len = 1; len <= max_len; ++len) {
        for (size_t pos = 0; pos + len <= toks.size(); ++pos) {
          std::string gram;
          bool crosses = false;
          for (size_t k = pos; k < pos + len; ++k) {
            if (toks[k].empty()) {
              crosses = true;
              break;
            }
            if (k > pos) gram += ' ';
            gram += toks[k];
          }
          if (!crosses && term_set.count(gram) > 0) present.insert(gram);
        }
      }
      if (present.empty()) continue;
      for (int year : ys->second) {
        for (const std::string &entity : es->second) {
          for (const std::string &term : present) {
            ++counts[{year, entity, term}];
          }
        }
      }
    }
  }

  std::vector<Triple> triples;
  triples.reserve(counts.size());
  for (const auto &[key, count] : counts) {
    triples.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                       count});
  }
  return triples;
}

const StreamNode *StreamModel::FindNode(const std::string &id) const {
  for (const StreamNode &n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

std::string StreamNodeId(int period, const std::string &entity) {
  return "p" + std::to_string(period) + ":" + entity;
}

std::vector<Period> MakePeriods(int lo, int hi,
                                const std::vector<int> &boundaries) {
  if (lo > hi) throw Error("year range is empty");
  int prev = lo;
  for (int b : boundaries) {
    if (b <= lo || b > hi) {
      throw Error("period boundary " + std::to_string(b) +
                  " outside the year range " + std::to_string(lo) + "-" +
                  std::to_string(hi));
    }
    if (b <= prev) {
      throw Error("period boundaries must be strictly increasing");
    }
    prev = b;
  }
  std::vector<Period> periods;
  int start = lo;
  for (int b : boundaries) {
    periods.push_back({static_cast<int>(periods.size()), start, b - 1});
    start = b;
  }
  periods.push_back({static_cast<int>(periods.size()), start, hi});
  return periods;
}

std::vector<int> YearlyBoundaries(int lo, int hi) {
  std::vector<int> b;
  for (int y = lo + 1; y <= hi; ++y) b.push_back(y);
  return b;
}

StreamModel BuildStreams(const std::vector<Triple> &triples,
                         const StreamOptions &options) {
  StreamModel model;
  model.periods =
      MakePeriods(options.year_lo, options.year_hi, options.boundaries);
  auto period_of = [&](int year) {
    for (const Period &p : model.periods) {
      if (year >= p.start_year && year <= p.end_year) return p.index;
    }
    return -1;
  };

  std::map<std::string, long long> entity_totals;
  for (const Triple &t : triples) {
    if (period_of(t.year) >= 0) entity_totals[t.entity] += t.count;
  }
  std::vector<std::pair<std::string, long long>> ranked(entity_totals.begin(),
                                                        entity_totals.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  if (options.top_k_entities >= 0 &&
      ranked.size() > static_cast<size_t>(options.top_k_entities)) {
    ranked.resize(options.top_k_entities);
  }
  std::set<std::string> kept;
  for (const auto &[entity, total] : ranked) kept.insert(entity);

  // (period, entity) -> term -> count
  std::map<std::pair<int, std::string>, std::map<std::string, long long>> cells;
  for (const Triple &t : triples) {
    int p = period_of(t.year);
    if (p < 0 || kept.count(t.entity) == 0) continue;
    cells[{p, t.entity}][t.term] += t.count;
  }
  for (const auto &[key, terms] : cells) {
    StreamNode node;
    node.period = key.first;
    node.entity = key.second;
    node.id = StreamNodeId(node.period, node.entity);
    for (const auto &[term, count] : terms) {
      if (count >= options.min_assoc) node.terms[term] = count;
    }
    if (!node.terms.empty()) model.nodes.push_back(std::move(node));
  }

  const int min_overlap = std::max(1, options.min_overlap);
  for (const StreamNode &a : model.nodes) {
    for (const StreamNode &b : model.nodes) {
      if (b.period != a.period + 1) continue;
      Tube tube;
      tube.from = a.id;
      tube.to = b.id;
      for (const auto &[term, count] : a.terms) {
        if (b.terms.count(term) > 0) tube.shared_terms.push_back(term);
      }
      tube.weight = static_cast<int>(tube.shared_terms.size());
      if (tube.weight >= min_overlap) model.tubes.push_back(std::move(tube));
    }
  }
  return model;
}

TermDiff DiffTerms(const StreamModel &model, const std::string &a,
                   const std::string &b) {
  const StreamNode *na = model.FindNode(a);
  if (na == nullptr) throw Error("unknown stream node: " + a);
  const StreamNode *nb = model.FindNode(b);
  if (nb == nullptr) throw Error("unknown stream node: " + b);
  TermDiff diff;
  for (const auto &[term, count] : na->terms) {
    (nb->terms.count(term) ? diff.common : diff.only_a).push_back(term);
  }
  for (const auto &[term, count] : nb->terms) {
    if (na->terms.count(term) == 0) diff.only_b.push_back(term);
  }
  return diff;
}

}  // namespace coocnet
