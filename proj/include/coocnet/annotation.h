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

#ifndef COOCNET_ANNOTATION_H_
#define COOCNET_ANNOTATION_H_

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "coocnet/corpus.h"

namespace coocnet {

// The MUC tag set.
enum class EntityType {
  kTime,
  kLocation,
  kOrganization,
  kPerson,
  kMoney,
  kPercent,
  kDate,
};

std::string_view EntityTypeName(EntityType type);

// Parses an upper-case label such as "ORGANIZATION". Throws Error
// ("unknown entity type: X") for anything outside the closed set.
EntityType ParseEntityType(std::string_view label);

// One tagged span. Offsets are byte offsets within the sentence text.
struct EntityMention {
  std::string doc_id;
  int sentence_index = 0;
  size_t start_char = 0;
  size_t end_char = 0;
  std::string surface;
  EntityType etype = EntityType::kOrganization;

  bool operator==(const EntityMention &) const = default;
};

struct YearMention {
  std::string doc_id;
  int sentence_index = 0;
  int year = 0;

  bool operator==(const YearMention &) const = default;
};

// Reads the six-column standoff TSV
//   doc_id  sentence_index  start_char  end_char  surface  type
// '#' lines and blank lines are skipped. If `documents` is non-null, every
// mention whose document is present is checked against the sentence text.
std::vector<EntityMention> ParseAnnotations(
    std::istream &in, const std::vector<Document> *documents = nullptr);
std::vector<EntityMention> ParseAnnotations(
    std::string_view text, const std::vector<Document> *documents = nullptr);

std::string SerializeAnnotations(const std::vector<EntityMention> &mentions);

using Gazetteer = std::map<std::string, EntityType, std::less<>>;

// Reads `surface<TAB>TYPE` lines; surfaces are whitespace-normalized.
Gazetteer ParseGazetteer(std::string_view text);

// Longest-match, left-to-right tagging of every sentence against the
// gazetteer. Matches start and end on word boundaries. Standalone 4-digit
// tokens in 1000..2999 outside any gazetteer match are tagged DATE.
std::vector<EntityMention> HeuristicTag(const Document &doc,
                                        const Gazetteer &gazetteer);

// One YearMention per distinct in-range year found as a 4-digit run in a
// DATE or TIME mention. Throws Error if lo > hi.
std::vector<YearMention> ExtractYears(const std::vector<EntityMention> &mentions,
                                      int lo, int hi);

}  // namespace coocnet

#endif  // COOCNET_ANNOTATION_H_
