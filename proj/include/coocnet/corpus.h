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

#ifndef COOCNET_CORPUS_H_
#define COOCNET_CORPUS_H_

#include <string>
#include <string_view>
#include <vector>

namespace coocnet {

enum class SourceKind { kHtmlPages, kPlainText };

// A document as delivered: one payload per page of the original report.
struct RawCorpus {
  std::string doc_id;
  std::vector<std::string> pages;
  SourceKind source_kind = SourceKind::kHtmlPages;
};

// A sentence span. Offsets are byte offsets into Document::text.
struct Sentence {
  int index = 0;
  size_t start_char = 0;
  size_t end_char = 0;
  std::string text;

  bool operator==(const Sentence &) const = default;
};

// Whitespace-normalized text of one document, optionally segmented.
struct Document {
  std::string doc_id;
  std::string text;
  std::vector<Sentence> sentences;

  bool operator==(const Document &) const = default;
};

// Concatenates the visible text of all HTML pages. Tags, comments and the
// contents of <script>/<style> are dropped, character references are
// decoded and block-level tags end the current line. With
// `strip_page_numbers`, lines holding nothing but an integer are removed.
// The result is whitespace-normalized. Throws Error("empty input") on an
// empty corpus and names the page index when a page is not valid UTF-8.
Document HtmlToText(const RawCorpus &corpus, bool strip_page_numbers);

// Plain-text counterpart of HtmlToText; pages are taken verbatim.
Document PlainToText(const RawCorpus &corpus, bool strip_page_numbers);

// Replaces every maximal whitespace run by one space and trims both ends.
std::string NormalizeWhitespace(std::string_view text);

struct SegmenterOptions {
  // Tokens that do not end a sentence when followed by a period.
  std::vector<std::string> abbreviations = {"Mr", "Mrs", "Ms", "Dr",
                                            "Inc", "Corp", "Co", "U.S"};
};

// Splits doc.text at '.', '!' or '?' followed by a space and an uppercase
// letter or digit. A period directly after a single uppercase letter or a
// listed abbreviation does not split.
Document SegmentSentences(Document doc, const SegmenterOptions &options = {});

// File interfaces. A directory is read as HTML pages in lexicographic
// filename order (*.html, *.htm); a regular file as plain text. The doc id
// is the directory name or the file stem.
RawCorpus LoadCorpus(const std::string &path);

// Writes `<dir>/<doc_id>.txt` and `<dir>/<doc_id>.sentences.tsv`.
void WriteDocument(const Document &doc, const std::string &dir);

// Reads back what WriteDocument wrote, validating the sidecar offsets.
Document ReadDocument(const std::string &dir, const std::string &doc_id);

// Sentence sidecar format: one `index<TAB>start<TAB>end` line per sentence.
std::string FormatSentenceSidecar(const Document &doc);
std::vector<Sentence> ParseSentenceSidecar(std::string_view sidecar,
                                           const std::string &text);

}  // namespace coocnet

#endif  // COOCNET_CORPUS_H_
