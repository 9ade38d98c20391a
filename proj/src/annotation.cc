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

#include "coocnet/annotation.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "coocnet/error.h"
#include "coocnet/text_util.h"

namespace coocnet {
namespace {

constexpr std::pair<EntityType, std::string_view> kTypeNames[] = {
    {EntityType::kTime, "TIME"},
    {EntityType::kLocation, "LOCATION"},
    {EntityType::kOrganization, "ORGANIZATION"},
    {EntityType::kPerson, "PERSON"},
    {EntityType::kMoney, "MONEY"},
    {EntityType::kPercent, "PERCENT"},
    {EntityType::kDate, "DATE"},
};

bool IsWordStart(std::string_view s, size_t i) {
  if (IsSpace(s[i])) return false;
  if (i == 0) return true;
  char prev = s[i - 1];
  return IsSpace(prev) || prev == '(' || prev == '"' || prev == '[' ||
         (prev == '\'' && (i < 2 || IsSpace(s[i - 2])));
}

bool IsWordEnd(std::string_view s, size_t end) {
  return end == s.size() || !IsAlnum(s[end]);
}

}  // namespace

std::string_view EntityTypeName(EntityType type) {
  for (const auto &[t, name] : kTypeNames) {
    if (t == type) return name;
  }
  return "UNKNOWN";
}

EntityType ParseEntityType(std::string_view label) {
  for (const auto &[t, name] : kTypeNames) {
    if (name == label) return t;
  }
  throw Error("unknown entity type: " + std::string(label));
}

std::vector<EntityMention> ParseAnnotations(
    std::istream &in, const std::vector<Document> *documents) {
  std::unordered_map<std::string, const Document *> by_id;
  if (documents != nullptr) {
    for (const Document &d : *documents) by_id[d.doc_id] = &d;
  }
  std::vector<EntityMention> mentions;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 6) {
      throw ParseError(line_no, "expected 6 tab-separated fields, got " +
                                    std::to_string(f.size()));
    }
    EntityMention m;
    m.doc_id = f[0];
    m.surface = f[4];
    try {
      m.sentence_index = static_cast<int>(ParseInt(f[1], "sentence_index"));
      long long start = ParseInt(f[2], "start_char");
      long long end = ParseInt(f[3], "end_char");
      if (start < 0 || end <= start || m.sentence_index < 0) {
        throw Error("invalid span [" + f[2] + ", " + f[3] + ")");
      }
      m.start_char = static_cast<size_t>(start);
      m.end_char = static_cast<size_t>(end);
      m.etype = ParseEntityType(f[5]);
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(line_no, e.what());
    }
    if (m.doc_id.empty() || m.surface.empty()) {
      throw ParseError(line_no, "empty doc_id or surface");
    }
    auto it = by_id.find(m.doc_id);
    if (documents != nullptr && it == by_id.end()) {
      throw ParseError(line_no, "mention '" + m.surface +
                                    "' names unknown document " + m.doc_id);
    }
    if (it != by_id.end()) {
      const Document &doc = *it->second;
      bool ok = m.sentence_index < static_cast<int>(doc.sentences.size());
      if (ok) {
        const std::string &text = doc.sentences[m.sentence_index].text;
        ok = m.end_char <= text.size() &&
             text.compare(m.start_char, m.end_char - m.start_char,
                          m.surface) == 0;
      }
      if (!ok) {
        throw ParseError(line_no, "offset mismatch for mention '" + m.surface +
                                      "' in " + m.doc_id + " sentence " +
                                      std::to_string(m.sentence_index));
      }
    }
    mentions.push_back(std::move(m));
  }
  return mentions;
}

std::vector<EntityMention> ParseAnnotations(
    std::string_view text, const std::vector<Document> *documents) {
  std::istringstream in{std::string(text)};
  return ParseAnnotations(in, documents);
}

std::string SerializeAnnotations(const std::vector<EntityMention> &mentions) {
  std::ostringstream out;
  out << "# doc_id\tsentence_index\tstart_char\tend_char\tsurface\ttype\n";
  for (const EntityMention &m : mentions) {
    out << m.doc_id << '\t' << m.sentence_index << '\t' << m.start_char << '\t'
        << m.end_char << '\t' << m.surface << '\t' << EntityTypeName(m.etype)
        << '\n';
  }
  return out.str();
}

Gazetteer ParseGazetteer(std::string_view text) {
  Gazetteer gazetteer;
  int line_no = 0;
  for (std::string line : Split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 2) throw ParseError(line_no, "expected surface<TAB>TYPE");
    std::string surface = NormalizeWhitespace(f[0]);
    if (surface.empty()) throw ParseError(line_no, "empty surface");
    try {
      gazetteer[surface] = ParseEntityType(std::string(Trim(f[1])));
    } catch (const Error &e) {
      throw ParseError(line_no, e.what());
    }
  }
  return gazetteer;
}

std::vector<EntityMention> HeuristicTag(const Document &doc,
                                        const Gazetteer &gazetteer) {
  // Keys bucketed by first byte, longest first.
  std::unordered_map<char, std::vector<std::pair<std::string_view, EntityType>>>
      buckets;
  for (const auto &[key, type] : gazetteer) {
    if (!key.empty()) buckets[key[0]].emplace_back(key, type);
  }
  for (auto &[c, keys] : buckets) {
    std::stable_sort(keys.begin(), keys.end(), [](const auto &a, const auto &b) {
      return a.first.size() > b.first.size();
    });
  }

  std::vector<EntityMention> mentions;
  for (const Sentence &sentence : doc.sentences) {
    std::string_view s = sentence.text;
    size_t i = 0;
    while (i < s.size()) {
      if (!IsWordStart(s, i)) {
        ++i;
        continue;
      }
      auto bucket = buckets.find(s[i]);
      bool matched = false;
      if (bucket != buckets.end()) {
        for (const auto &[key, type] : bucket->second) {
          if (s.compare(i, key.size(), key) == 0 &&
              IsWordEnd(s, i + key.size())) {
            mentions.push_back({doc.doc_id, sentence.index, i, i + key.size(),
                                std::string(key), type});
            i += key.size();
            matched = true;
            break;
          }
        }
      }
      if (matched) continue;
      size_t j = i;
      while (j < s.size() && IsDigit(s[j])) ++j;
      if (j - i == 4 && (s[i] == '1' || s[i] == '2') && IsWordEnd(s, j)) {
        mentions.push_back({doc.doc_id, sentence.index, i, j,
                            std::string(s.substr(i, 4)), EntityType::kDate});
        i = j;
        continue;
      }
      ++i;
    }
  }
  return mentions;
}

std::vector<YearMention> ExtractYears(const std::vector<EntityMention> &mentions,
                                      int lo, int hi) {
  if (lo > hi) throw Error("year range is empty");
  std::vector<YearMention> years;
  for (const EntityMention &m : mentions) {
    if (m.etype != EntityType::kDate && m.etype != EntityType::kTime) continue;
    std::set<int> found;
    const std::string &s = m.surface;
    size_t i = 0;
    while (i < s.size()) {
      if (!IsDigit(s[i])) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < s.size() && IsDigit(s[j])) ++j;
      if (j - i == 4) {
        int year = std::stoi(s.substr(i, 4));
        if (year >= lo && year <= hi) found.insert(year);
      }
      i = j;
    }
    for (int year : found) years.push_back({m.doc_id, m.sentence_index, year});
  }
  return years;
}

}  // namespace coocnet
