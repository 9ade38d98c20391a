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

#ifndef COOCNET_TERMS_H_
#define COOCNET_TERMS_H_

#include <string>
#include <string_view>
#include <vector>

#include "coocnet/corpus.h"

namespace coocnet {

struct TermRecord {
  std::string term;  // Lower-cased tokens joined by single spaces.
  double score = 0;
  long long count = 0;  // Raw corpus frequency.

  bool operator==(const TermRecord &) const = default;
};

const std::vector<std::string> &DefaultStopwords();

struct TermExtractionOptions {
  std::vector<std::string> stopwords = DefaultStopwords();
  int max_length = 4;
};

// Lower-cased word tokens of `text`. Runs of punctuation between words are
// reported as a single empty token so phrases never span them.
std::vector<std::string> PhraseTokens(std::string_view text);

// Frequency-by-length term scorer with nested-phrase discount.
//
// Candidates are the 1..max_length grams inside maximal runs of tokens that
// are neither stopwords, digit-only, nor punctuation. Lengths are processed
// longest first. An occurrence of phrase p is discounted when it lies inside
// a surviving occurrence of a longer phrase whose final score exceeds p's
// raw score, f(p) * log2(1 + len(p)). The final score is the count of
// undiscounted occurrences times log2(1 + len). Phrases left with no
// occurrence are dropped; the top n by score (ties: term order) are kept.
std::vector<TermRecord> ExtractTerms(const std::vector<Document> &docs, int n,
                                     const TermExtractionOptions &options = {});

// Terms from a user list (one per line, '#' comments), tokenized like the
// corpus. Counts are raw contiguous matches in `docs`; unseen terms are
// dropped. Scores are count * log2(1 + len), with no discount.
std::vector<TermRecord> TermsFromList(std::string_view list,
                                      const std::vector<Document> &docs);

// `term<TAB>score<TAB>count` lines.
std::string FormatTerms(const std::vector<TermRecord> &terms);
std::vector<TermRecord> ParseTerms(std::string_view text);

}  // namespace coocnet

#endif  // COOCNET_TERMS_H_
