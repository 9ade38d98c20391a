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

#include "coocnet/terms.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "coocnet/error.h"
#include "coocnet/text_util.h"

namespace coocnet {
namespace {

bool IsWordByte(char c) {
  return IsAlnum(c) || static_cast<unsigned char>(c) >= 0x80;
}

template <typename Fn>
void ForEachSentence(const std::vector<Document> &docs, Fn fn) {
  for (const Document &doc : docs) {
    if (doc.sentences.empty()) {
      if (!doc.text.empty()) fn(std::string_view(doc.text));
      continue;
    }
    for (const Sentence &s : doc.sentences) fn(std::string_view(s.text));
  }
}

std::string Join(const std::vector<std::string> &tokens, size_t begin,
                 size_t end) {
  std::string out;
  for (size_t i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += tokens[i];
  }
  return out;
}

double LengthWeight(int len) { return std::log2(1.0 + len); }

}  // namespace

const std::vector<std::string> &DefaultStopwords() {
  static const std::vector<std::string> words = {
      "a", "about", "above", "after", "again", "against", "all", "also", "am",
      "an", "and", "any", "are", "as", "at", "be", "because", "been",
      "before", "being", "below", "between", "both", "but", "by", "can",
      "could", "did", "do", "does", "doing", "down", "during", "each", "few",
      "for", "from", "further", "had", "has", "have", "having", "he", "her",
      "here", "hers", "herself", "him", "himself", "his", "how", "i", "if",
      "in", "into", "is", "it", "its", "itself", "just", "may", "me", "might",
      "more", "most", "must", "my", "myself", "no", "nor", "not", "now", "of",
      "off", "on", "once", "only", "or", "other", "our", "ours", "ourselves",
      "out", "over", "own", "s", "said", "same", "she", "should", "so",
      "some", "such", "than", "that", "the", "their", "theirs", "them",
      "themselves", "then", "there", "these", "they", "this", "those",
      "through", "to", "too", "under", "until", "up", "very", "was", "we",
      "were", "what", "when", "where", "which", "while", "who", "whom", "why",
      "will", "with", "would", "you", "your", "yours", "yourself",
      "yourselves"};
  return words;
}

std::vector<std::string> PhraseTokens(std::string_view text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  bool boundary_pending = false;
  while (i < text.size()) {
    char c = text[i];
    if (IsWordByte(c)) {
      size_t j = i;
      while (j < text.size()) {
        if (IsWordByte(text[j])) {
          ++j;
        } else if ((text[j] == '-' || text[j] == '\'') && j + 1 < text.size() &&
                   IsWordByte(text[j + 1])) {
          j += 2;
        } else {
          break;
        }
      }
      if (boundary_pending && !tokens.empty()) tokens.emplace_back();
      boundary_pending = false;
      tokens.push_back(ToLower(text.substr(i, j - i)));
      i = j;
    } else {
      if (!IsSpace(c)) boundary_pending = true;
      ++i;
    }
  }
  return tokens;
}

std::vector<TermRecord> ExtractTerms(const std::vector<Document> &docs, int n,
                                     const TermExtractionOptions &options) {
  if (n < 1) throw Error("number of terms must be >= 1");
  const int max_len = std::max(1, options.max_length);
  std::unordered_set<std::string> stop(options.stopwords.begin(),
                                       options.stopwords.end());

  // Content tokens of all runs, laid end to end; run_of tells runs apart.
  std::vector<std::string> tokens;
  std::vector<int> run_of;
  int run = 0;
  ForEachSentence(docs, [&](std::string_view sentence) {
    bool open = false;
    for (std::string &t : PhraseTokens(sentence)) {
      if (t.empty() || stop.count(t) > 0 || IsAllDigits(t)) {
        if (open) ++run;
        open = false;
        continue;
      }
      tokens.push_back(std::move(t));
      run_of.push_back(run);
      open = true;
    }
    if (open) ++run;
  });
  const size_t total = tokens.size();

  struct Phrase {
    std::string text;
    int len = 0;
    std::vector<size_t> starts;
    long long raw = 0;
    long long kept = 0;
    double score = 0;
  };
  std::vector<Phrase> phrases;
  // surviving_score[len][pos]: final score of the phrase whose undiscounted
  // occurrence of length len starts at pos, or -1.
  std::vector<std::vector<double>> surviving_score(
      max_len + 1, std::vector<double>(total, -1.0));

  for (int len = max_len; len >= 1; --len) {
    std::unordered_map<std::string, size_t> index;
    const size_t first_phrase = phrases.size();
    for (size_t pos = 0; pos + len <= total; ++pos) {
      if (run_of[pos] != run_of[pos + len - 1]) continue;
      std::string text = Join(tokens, pos, pos + len);
      auto [it, inserted] = index.try_emplace(text, phrases.size());
      if (inserted) phrases.push_back({std::move(text), len, {}, 0, 0, 0});
      phrases[it->second].starts.push_back(pos);
    }
    for (size_t p = first_phrase; p < phrases.size(); ++p) {
      Phrase &phrase = phrases[p];
      phrase.raw = static_cast<long long>(phrase.starts.size());
      const double raw_score = phrase.raw * LengthWeight(len);
      std::vector<size_t> kept;
      for (size_t pos : phrase.starts) {
        bool absorbed = false;
        for (int outer = len + 1; outer <= max_len && !absorbed; ++outer) {
          size_t lo = pos + len >= static_cast<size_t>(outer)
                          ? pos + len - outer
                          : 0;
          for (size_t s = lo; s <= pos; ++s) {
            if (surviving_score[outer][s] > raw_score) {
              absorbed = true;
              break;
            }
          }
        }
        if (!absorbed) kept.push_back(pos);
      }
      phrase.kept = static_cast<long long>(kept.size());
      phrase.score = phrase.kept * LengthWeight(len);
      phrase.starts = std::move(kept);
    }
    for (size_t p = first_phrase; p < phrases.size(); ++p) {
      for (size_t pos : phrases[p].starts) {
        surviving_score[len][pos] = phrases[p].score;
      }
    }
  }

  std::vector<TermRecord> terms;
  for (const Phrase &p : phrases) {
    if (p.kept > 0) terms.push_back({p.text, p.score, p.raw});
  }
  std::sort(terms.begin(), terms.end(),
            [](const TermRecord &a, const TermRecord &b) {
              if (a.score != b.score) return a.score > b.score;
              return a.term < b.term;
            });
  if (terms.size() > static_cast<size_t>(n)) terms.resize(n);
  return terms;
}

std::vector<TermRecord> TermsFromList(std::string_view list,
                                      const std::vector<Document> &docs) {
  std::vector<std::string> wanted;
  std::unordered_map<std::string, long long> counts;
  size_t max_len = 1;
  for (const std::string &line : Split(list, '\n')) {
    std::string_view t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> toks = PhraseTokens(t);
    toks.erase(std::remove(toks.begin(), toks.end(), std::string()),
               toks.end());
    if (toks.empty()) continue;
    std::string term = Join(toks, 0, toks.size());
    if (counts.try_emplace(term, 0).second) wanted.push_back(term);
    max_len = std::max(max_len, toks.size());
  }
  ForEachSentence(docs, [&](std::string_view sentence) {
    std::vector<std::string> toks = PhraseTokens(sentence);
    for (size_t len = 1; len <= max_len; ++len) {
      for (size_t pos = 0; pos + len <= toks.size(); ++pos) {
        bool crosses = false;
        for (size_t k = pos; k < pos + len; ++k) crosses |= toks[k].empty();
        if (crosses) continue;
        auto it = counts.find(Join(toks, pos, pos + len));
        if (it != counts.end()) ++it->second;
      }
    }
  });
  std::vector<TermRecord> terms;
  for (const std::string &term : wanted) {
    long long count = counts[term];
    if (count == 0) continue;
    int len = static_cast<int>(SplitWhitespace(term).size());
    terms.push_back({term, count * LengthWeight(len), count});
  }
  return terms;
}

std::string FormatTerms(const std::vector<TermRecord> &terms) {
  std::ostringstream out;
  for (const TermRecord &t : terms) {
    out << t.term << '\t' << FormatDouble(t.score) << '\t' << t.count << '\n';
  }
  return out.str();
}

std::vector<TermRecord> ParseTerms(std::string_view text) {
  std::vector<TermRecord> terms;
  int line_no = 0;
  for (const std::string &line : Split(text, '\n')) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 3) throw ParseError(line_no, "expected 3 fields");
    try {
      terms.push_back(
          {f[0], ParseDouble(f[1], "score"), ParseInt(f[2], "count")});
    } catch (const Error &e) {
      throw ParseError(line_no, e.what());
    }
  }
  return terms;
}

}  // namespace coocnet
