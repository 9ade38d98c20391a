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

#include "coocnet/normalization.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "coocnet/error.h"
#include "coocnet/text_util.h"

namespace coocnet {
namespace {

bool IsConnector(std::string_view lowered) {
  return lowered == "and" || lowered == "of" || lowered == "the" ||
         lowered == "for" || lowered == "&";
}

// Strips leading/trailing bytes that are neither ASCII alphanumerics nor
// part of a multi-byte character. `keep` survives at the edges.
std::string_view StripEdges(std::string_view token, char keep = '\0') {
  auto strip = [&](char c) {
    return !IsAlnum(c) && c != keep && static_cast<unsigned char>(c) < 0x80;
  };
  while (!token.empty() && strip(token.front())) token.remove_prefix(1);
  while (!token.empty() && strip(token.back())) token.remove_suffix(1);
  return token;
}

std::string_view StripPossessive(std::string_view token) {
  if (token.size() > 2 && token.substr(token.size() - 2) == "'s") {
    token.remove_suffix(2);
  } else if (token.size() > 4 &&
             token.substr(token.size() - 4) == "\xE2\x80\x99s") {
    token.remove_suffix(4);
  }
  return token;
}

// Lower-cased comparison tokens: edge punctuation and possessives removed,
// '&' kept as a token of its own.
std::vector<std::string> ComparisonTokens(std::string_view name) {
  std::vector<std::string> tokens;
  for (const std::string &raw : SplitWhitespace(name)) {
    std::string_view t = StripEdges(StripPossessive(StripEdges(raw, '&')), '&');
    if (!t.empty()) tokens.push_back(ToLower(t));
  }
  return tokens;
}

// Edge-stripped tokens minus connectors, in their original case.
std::vector<std::string> SignificantTokens(std::string_view name) {
  std::vector<std::string> tokens;
  for (const std::string &raw : SplitWhitespace(name)) {
    std::string_view t = StripEdges(raw);
    if (t.empty() || IsConnector(ToLower(t))) continue;
    tokens.emplace_back(t);
  }
  return tokens;
}

size_t Utf8Length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;
}

std::string InitialsOf(const std::vector<std::string> &significant) {
  std::string out;
  for (const std::string &t : significant) {
    size_t len = std::min(t.size(), Utf8Length(static_cast<unsigned char>(t[0])));
    out += ToUpper(std::string_view(t).substr(0, len));
  }
  return out;
}

bool ContainsSequence(const std::vector<std::string> &haystack,
                      const std::vector<std::string> &needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

bool EqualNoCase(std::string_view a, std::string_view b) {
  return ToLower(Trim(a)) == ToLower(Trim(b));
}

// Rule inputs computed once per surface.
struct PreparedName {
  std::string raw;
  std::vector<std::string> tokens;  // Comparison tokens.
  size_t raw_token_count = 0;
  size_t significant_count = 0;
  std::string initials;
  std::string acronym;  // Single-token names only: upper-cased, no '&'/'.'.
};

PreparedName PrepareOrg(std::string_view name) {
  PreparedName p;
  p.raw = std::string(name);
  p.tokens = ComparisonTokens(name);
  p.raw_token_count = SplitWhitespace(name).size();
  std::vector<std::string> significant = SignificantTokens(name);
  p.significant_count = significant.size();
  p.initials = InitialsOf(significant);
  if (p.raw_token_count == 1 && p.tokens.size() == 1) {
    for (char c : p.tokens[0]) {
      if (c != '&' && c != '.') p.acronym += c;
    }
    p.acronym = ToUpper(p.acronym);
  }
  return p;
}

PreparedName PreparePers(std::string_view name,
                         const PersonRuleOptions &options) {
  PreparedName p;
  p.raw = std::string(name);
  for (std::string &t : ComparisonTokens(name)) {
    if (std::find(options.honorifics.begin(), options.honorifics.end(), t) ==
        options.honorifics.end()) {
      p.tokens.push_back(std::move(t));
    }
  }
  return p;
}

bool MatchPreparedOrg(const PreparedName &a, const PreparedName &b) {
  if (a.tokens.empty() || b.tokens.empty()) return EqualNoCase(a.raw, b.raw);
  if (a.significant_count > 1 && b.significant_count > 1 &&
      a.initials == b.initials) {
    return true;
  }
  if (ContainsSequence(a.tokens, b.tokens) ||
      ContainsSequence(b.tokens, a.tokens)) {
    return true;
  }
  if (!a.acronym.empty() && b.significant_count > 1 &&
      a.acronym == b.initials) {
    return true;
  }
  if (!b.acronym.empty() && a.significant_count > 1 &&
      b.acronym == a.initials) {
    return true;
  }
  return false;
}

bool MatchPreparedPers(const PreparedName &a, const PreparedName &b) {
  if (a.tokens.empty() || b.tokens.empty()) return EqualNoCase(a.raw, b.raw);
  if (ContainsSequence(a.tokens, b.tokens) ||
      ContainsSequence(b.tokens, a.tokens)) {
    return true;
  }
  auto has = [](const std::vector<std::string> &tokens, const std::string &t) {
    return std::find(tokens.begin(), tokens.end(), t) != tokens.end();
  };
  return has(b.tokens, a.tokens.back()) || has(a.tokens, b.tokens.back());
}

PreparedName Prepare(EntityType type, std::string_view name) {
  return type == EntityType::kOrganization ? PrepareOrg(name)
                                           : PreparePers(name, {});
}

bool MatchPrepared(EntityType type, const PreparedName &a,
                   const PreparedName &b) {
  return type == EntityType::kOrganization ? MatchPreparedOrg(a, b)
                                           : MatchPreparedPers(a, b);
}

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  size_t Find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Unite(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

std::string EscapeMember(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::vector<std::string> SplitMembers(std::string_view s) {
  std::vector<std::string> out(1);
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      out.back() += s[++i];
    } else if (s[i] == '|') {
      out.emplace_back();
    } else {
      out.back() += s[i];
    }
  }
  return out;
}

}  // namespace

long long EntityCluster::TotalCount() const {
  long long total = 0;
  for (const SurfaceStat &m : members) total += m.count;
  return total;
}

EntityCluster MakeCluster(std::vector<SurfaceStat> members) {
  if (members.empty()) throw Error("cluster without members");
  EntityCluster cluster;
  cluster.etype = members[0].etype;
  std::sort(members.begin(), members.end(),
            [](const SurfaceStat &a, const SurfaceStat &b) {
              return a.surface < b.surface;
            });
  const SurfaceStat *best = &members[0];
  for (const SurfaceStat &m : members) {
    if (m.etype != cluster.etype) throw Error("cluster mixes entity types");
    if (m.count > best->count) best = &m;
  }
  cluster.canonical = best->surface;
  cluster.members = std::move(members);
  return cluster;
}

std::string Initials(std::string_view name) {
  return InitialsOf(SignificantTokens(name));
}

bool MatchOrg(std::string_view a, std::string_view b) {
  return MatchPreparedOrg(PrepareOrg(a), PrepareOrg(b));
}

bool MatchPers(std::string_view a, std::string_view b,
               const PersonRuleOptions &options) {
  return MatchPreparedPers(PreparePers(a, options), PreparePers(b, options));
}

bool MatchSurfaces(EntityType type, std::string_view a, std::string_view b) {
  return type == EntityType::kOrganization ? MatchOrg(a, b) : MatchPers(a, b);
}

double AverageOccurrences(const std::vector<SurfaceStat> &stats) {
  if (stats.empty()) throw Error("average of an empty surface list");
  double sum = 0;
  for (const SurfaceStat &s : stats) {
    if (s.etype != stats[0].etype) {
      throw Error("average over mixed entity types");
    }
    sum += s.count;
  }
  return sum / static_cast<double>(stats.size());
}

MergeResult MergePass(const std::vector<EntityCluster> &clusters,
                      const NormalizationPolicy &policy, double av,
                      const MergeObserver &observer) {
  MergeResult result;
  if (clusters.empty()) return result;
  const EntityType type = clusters[0].etype;
  for (const EntityCluster &c : clusters) {
    if (c.etype != type) throw Error("merge pass over mixed entity types");
  }
  if (policy.mode == ClusteringMode::kAverage && !(av > 0)) {
    throw Error("average threshold must be positive");
  }

  const size_t n = clusters.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return clusters[a].canonical < clusters[b].canonical;
  });

  // The members each cluster compares with: its canonical under P_MAX, the
  // members above the average threshold under P_AV.
  std::vector<std::vector<PreparedName>> probes(n);
  for (size_t i = 0; i < n; ++i) {
    if (policy.mode == ClusteringMode::kMax) {
      probes[i].push_back(Prepare(type, clusters[i].canonical));
    } else {
      for (const SurfaceStat &m : clusters[i].members) {
        if (m.count > av) probes[i].push_back(Prepare(type, m.surface));
      }
    }
  }

  UnionFind uf(n);
  for (size_t x = 0; x < n; ++x) {
    const size_t i = order[x];
    if (probes[i].empty()) continue;
    for (size_t y = x + 1; y < n; ++y) {
      const size_t j = order[y];
      if (probes[j].empty() || uf.Find(i) == uf.Find(j)) continue;
      bool all = true;
      for (const PreparedName &a : probes[i]) {
        for (const PreparedName &b : probes[j]) {
          if (!MatchPrepared(type, a, b)) {
            all = false;
            break;
          }
        }
        if (!all) break;
      }
      if (!all) continue;
      uf.Unite(i, j);
      result.changed = true;
      if (observer) observer(clusters[i], clusters[j]);
    }
  }

  std::map<size_t, std::vector<SurfaceStat>> groups;
  for (size_t i = 0; i < n; ++i) {
    auto &g = groups[uf.Find(i)];
    g.insert(g.end(), clusters[i].members.begin(), clusters[i].members.end());
  }
  for (auto &[root, members] : groups) {
    result.clusters.push_back(MakeCluster(std::move(members)));
  }
  SortClusters(result.clusters);
  return result;
}

std::vector<SurfaceStat> CountSurfaces(
    const std::vector<EntityMention> &mentions) {
  std::map<std::pair<EntityType, std::string>, int> counts;
  for (const EntityMention &m : mentions) {
    if (m.etype != EntityType::kOrganization &&
        m.etype != EntityType::kPerson) {
      continue;
    }
    ++counts[{m.etype, m.surface}];
  }
  std::vector<SurfaceStat> stats;
  stats.reserve(counts.size());
  for (const auto &[key, count] : counts) {
    stats.push_back({key.second, key.first, count});
  }
  return stats;
}

std::vector<EntityCluster> NormalizeStats(std::vector<SurfaceStat> stats,
                                          const NormalizationPolicy &policy) {
  if (policy.av_override && !(*policy.av_override > 0)) {
    throw Error("av_override must be positive");
  }
  std::vector<EntityCluster> out;
  for (EntityType type : {EntityType::kOrganization, EntityType::kPerson}) {
    std::vector<SurfaceStat> typed;
    for (const SurfaceStat &s : stats) {
      if (s.etype == type) typed.push_back(s);
    }
    if (typed.empty()) continue;
    const double av = policy.av_override ? *policy.av_override
                                         : AverageOccurrences(typed);
    std::vector<EntityCluster> clusters;
    clusters.reserve(typed.size());
    for (SurfaceStat &s : typed) clusters.push_back(MakeCluster({std::move(s)}));
    while (true) {
      MergeResult pass = MergePass(clusters, policy, av);
      clusters = std::move(pass.clusters);
      if (!pass.changed) break;
    }
    out.insert(out.end(), std::make_move_iterator(clusters.begin()),
               std::make_move_iterator(clusters.end()));
  }
  SortClusters(out);
  return out;
}

std::vector<EntityCluster> Normalize(const std::vector<EntityMention> &mentions,
                                     const NormalizationPolicy &policy) {
  return NormalizeStats(CountSurfaces(mentions), policy);
}

void SortClusters(std::vector<EntityCluster> &clusters) {
  std::sort(clusters.begin(), clusters.end(),
            [](const EntityCluster &a, const EntityCluster &b) {
              long long ta = a.TotalCount(), tb = b.TotalCount();
              if (ta != tb) return ta > tb;
              if (a.canonical != b.canonical) return a.canonical < b.canonical;
              return a.etype < b.etype;
            });
}

std::string FormatClusters(const std::vector<EntityCluster> &clusters) {
  std::ostringstream out;
  for (const EntityCluster &c : clusters) {
    out << EntityTypeName(c.etype) << '\t' << c.canonical << '\t'
        << c.TotalCount() << '\t';
    for (size_t i = 0; i < c.members.size(); ++i) {
      if (i > 0) out << '|';
      out << EscapeMember(c.members[i].surface) << ':' << c.members[i].count;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<EntityCluster> ParseClusters(std::string_view text) {
  std::vector<EntityCluster> clusters;
  int line_no = 0;
  for (std::string line : Split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 4) throw ParseError(line_no, "expected 4 fields");
    try {
      EntityType type = ParseEntityType(f[0]);
      long long total = ParseInt(f[2], "total_count");
      std::vector<SurfaceStat> members;
      for (const std::string &item : SplitMembers(f[3])) {
        size_t colon = item.rfind(':');
        if (colon == std::string::npos || colon == 0) {
          throw Error("member without count: '" + item + "'");
        }
        int count = static_cast<int>(ParseInt(item.substr(colon + 1), "count"));
        if (count < 1) throw Error("member count must be >= 1");
        members.push_back({item.substr(0, colon), type, count});
      }
      EntityCluster c = MakeCluster(std::move(members));
      if (c.TotalCount() != total) throw Error("total_count mismatch");
      if (c.canonical != f[1]) throw Error("canonical label mismatch");
      clusters.push_back(std::move(c));
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(line_no, e.what());
    }
  }
  return clusters;
}

}  // namespace coocnet
