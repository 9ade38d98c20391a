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

#include "coocnet/corpus.h"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include "coocnet/error.h"
#include "coocnet/text_util.h"

namespace coocnet {
namespace {

namespace fs = std::filesystem;

const std::set<std::string, std::less<>> &BlockTags() {
  static const std::set<std::string, std::less<>> tags = {
      "address", "article", "aside", "blockquote", "body", "br", "caption",
      "dd", "div", "dl", "dt", "footer", "form", "h1", "h2", "h3", "h4",
      "h5", "h6", "head", "header", "hr", "html", "li", "main", "nav", "ol",
      "p", "pre", "section", "table", "tbody", "td", "tfoot", "th", "thead",
      "title", "tr", "ul"};
  return tags;
}

bool StartsWithNoCase(std::string_view s, size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > s.size()) return false;
  for (size_t k = 0; k < prefix.size(); ++k) {
    char a = s[pos + k];
    if (IsUpper(a)) a = static_cast<char>(a - 'A' + 'a');
    if (a != prefix[k]) return false;
  }
  return true;
}

void AppendUtf8(std::string &out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Decodes the character reference starting at html[pos] == '&'. Returns the
// number of bytes consumed, or 0 if this is not a recognized reference.
size_t DecodeReference(std::string_view html, size_t pos, std::string &out) {
  size_t semi = html.find(';', pos + 1);
  if (semi == std::string_view::npos || semi - pos > 12) return 0;
  std::string_view name = html.substr(pos + 1, semi - pos - 1);
  if (name.empty()) return 0;
  if (name[0] == '#') {
    unsigned long cp = 0;
    bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
    std::string_view digits = name.substr(hex ? 2 : 1);
    if (digits.empty()) return 0;
    for (char c : digits) {
      int d;
      if (IsDigit(c)) {
        d = c - '0';
      } else if (hex && c >= 'a' && c <= 'f') {
        d = c - 'a' + 10;
      } else if (hex && c >= 'A' && c <= 'F') {
        d = c - 'A' + 10;
      } else {
        return 0;
      }
      cp = cp * (hex ? 16 : 10) + d;
      if (cp > 0x10FFFF) return 0;
    }
    if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
    if (cp == 0xA0) cp = ' ';
    AppendUtf8(out, cp);
    return semi - pos + 1;
  }
  static const std::pair<std::string_view, std::string_view> kNamed[] = {
      {"amp", "&"}, {"lt", "<"},   {"gt", ">"},   {"quot", "\""},
      {"apos", "'"}, {"nbsp", " "}, {"ndash", "\xE2\x80\x93"},
      {"mdash", "\xE2\x80\x94"}, {"rsquo", "\xE2\x80\x99"},
      {"lsquo", "\xE2\x80\x98"}, {"rdquo", "\xE2\x80\x9D"},
      {"ldquo", "\xE2\x80\x9C"}};
  for (const auto &[key, value] : kNamed) {
    if (name == key) {
      out += value;
      return semi - pos + 1;
    }
  }
  return 0;
}

// Position just past the '>' closing the tag opened at `pos`, honoring
// quoted attribute values. Returns npos for an unterminated tag.
size_t FindTagEnd(std::string_view html, size_t pos) {
  char quote = 0;
  for (size_t i = pos + 1; i < html.size(); ++i) {
    char c = html[i];
    if (quote) {
      if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      // Only treat quotes as delimiters inside attribute values.
      if (i > 0 && html[i - 1] == '=') quote = c;
    } else if (c == '>') {
      return i + 1;
    }
  }
  return std::string_view::npos;
}

// Visible text of one HTML page; block-level tags become line breaks.
std::string ExtractVisibleText(std::string_view html) {
  std::string out;
  out.reserve(html.size());
  size_t i = 0;
  while (i < html.size()) {
    char c = html[i];
    if (c == '<') {
      if (html.compare(i, 4, "<!--") == 0) {
        size_t end = html.find("-->", i + 4);
        i = end == std::string_view::npos ? html.size() : end + 3;
        continue;
      }
      char next = i + 1 < html.size() ? html[i + 1] : '\0';
      if (!(IsAlpha(next) || next == '/' || next == '!' || next == '?')) {
        out += c;  // A bare '<' in text.
        ++i;
        continue;
      }
      size_t end = FindTagEnd(html, i);
      if (end == std::string_view::npos) break;  // Unterminated tag.
      size_t name_begin = i + 1 + (next == '/' ? 1 : 0);
      size_t name_end = name_begin;
      while (name_end < end && (IsAlnum(html[name_end]))) ++name_end;
      std::string name =
          ToLower(html.substr(name_begin, name_end - name_begin));
      i = end;
      if (next != '/' && (name == "script" || name == "style")) {
        std::string closing = "</" + name;
        size_t close = i;
        while (close < html.size() && !StartsWithNoCase(html, close, closing)) {
          ++close;
        }
        if (close >= html.size()) break;
        size_t close_end = FindTagEnd(html, close);
        i = close_end == std::string_view::npos ? html.size() : close_end;
        continue;
      }
      if (BlockTags().count(name) > 0) out += '\n';
      continue;
    }
    if (c == '&') {
      size_t used = DecodeReference(html, i, out);
      if (used > 0) {
        i += used;
        continue;
      }
    }
    out += c;
    ++i;
  }
  return out;
}

std::string DropPageNumberLines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(start, end - start);
    if (!IsAllDigits(Trim(line))) {
      out += line;
      out += '\n';
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

void CheckPages(const RawCorpus &corpus) {
  if (corpus.pages.empty()) throw Error("empty input");
  for (size_t p = 0; p < corpus.pages.size(); ++p) {
    size_t bad = FindInvalidUtf8(corpus.pages[p]);
    if (bad != std::string::npos) {
      throw Error("page " + std::to_string(p) + " of " + corpus.doc_id +
                  ": invalid UTF-8 at byte " + std::to_string(bad));
    }
  }
}

Document JoinPages(const RawCorpus &corpus,
                   const std::vector<std::string> &page_texts,
                   bool strip_page_numbers) {
  std::string joined;
  for (const std::string &page : page_texts) {
    joined += strip_page_numbers ? DropPageNumberLines(page) : page;
    joined += '\n';
  }
  Document doc;
  doc.doc_id = corpus.doc_id;
  doc.text = NormalizeWhitespace(joined);
  return doc;
}

// Bare token immediately before text[pos], with leading punctuation removed.
std::string_view TokenBefore(std::string_view text, size_t pos) {
  size_t start = pos;
  while (start > 0 && text[start - 1] != ' ') --start;
  std::string_view token = text.substr(start, pos - start);
  while (!token.empty() && !IsAlnum(token.front())) token.remove_prefix(1);
  return token;
}

}  // namespace

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

Document HtmlToText(const RawCorpus &corpus, bool strip_page_numbers) {
  if (corpus.source_kind != SourceKind::kHtmlPages) {
    throw Error(corpus.doc_id + ": not an HTML page collection");
  }
  CheckPages(corpus);
  std::vector<std::string> texts;
  texts.reserve(corpus.pages.size());
  for (const std::string &page : corpus.pages) {
    texts.push_back(ExtractVisibleText(page));
  }
  return JoinPages(corpus, texts, strip_page_numbers);
}

Document PlainToText(const RawCorpus &corpus, bool strip_page_numbers) {
  CheckPages(corpus);
  return JoinPages(corpus, corpus.pages, strip_page_numbers);
}

Document SegmentSentences(Document doc, const SegmenterOptions &options) {
  doc.sentences.clear();
  const std::string &text = doc.text;
  auto is_abbreviation = [&](std::string_view token) {
    if (token.size() == 1 && IsUpper(token[0])) return true;
    return std::find(options.abbreviations.begin(), options.abbreviations.end(),
                     token) != options.abbreviations.end();
  };
  size_t start = 0;
  for (size_t i = 0; i + 2 < text.size(); ++i) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    if (text[i + 1] != ' ') continue;
    char next = text[i + 2];
    if (!IsUpper(next) && !IsDigit(next)) continue;
    if (c == '.' && is_abbreviation(TokenBefore(text, i))) continue;
    doc.sentences.push_back({static_cast<int>(doc.sentences.size()), start,
                             i + 1, text.substr(start, i + 1 - start)});
    start = i + 2;
  }
  if (start < text.size()) {
    doc.sentences.push_back({static_cast<int>(doc.sentences.size()), start,
                             text.size(), text.substr(start)});
  }
  return doc;
}

RawCorpus LoadCorpus(const std::string &path) {
  RawCorpus corpus;
  fs::path p(path);
  std::error_code ec;
  if (fs::is_directory(p, ec)) {
    std::vector<std::string> files;
    for (const auto &entry : fs::directory_iterator(p)) {
      if (!entry.is_regular_file()) continue;
      std::string ext = ToLower(entry.path().extension().string());
      if (ext == ".html" || ext == ".htm") {
        files.push_back(entry.path().filename().string());
      }
    }
    std::sort(files.begin(), files.end());
    for (const std::string &f : files) {
      corpus.pages.push_back(ReadFile((p / f).string()));
    }
    corpus.doc_id = p.lexically_normal().filename().string();
    if (corpus.doc_id.empty()) {
      corpus.doc_id = p.lexically_normal().parent_path().filename().string();
    }
    corpus.source_kind = SourceKind::kHtmlPages;
  } else if (fs::is_regular_file(p, ec)) {
    corpus.pages.push_back(ReadFile(path));
    corpus.doc_id = p.stem().string();
    corpus.source_kind = SourceKind::kPlainText;
  } else {
    throw Error("corpus input not found: " + path);
  }
  return corpus;
}

std::string FormatSentenceSidecar(const Document &doc) {
  std::ostringstream out;
  for (const Sentence &s : doc.sentences) {
    out << s.index << '\t' << s.start_char << '\t' << s.end_char << '\n';
  }
  return out.str();
}

std::vector<Sentence> ParseSentenceSidecar(std::string_view sidecar,
                                           const std::string &text) {
  std::vector<Sentence> sentences;
  int line_no = 0;
  size_t prev_end = 0;
  for (const std::string &line : Split(sidecar, '\n')) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 3) throw ParseError(line_no, "expected 3 fields");
    Sentence s;
    try {
      s.index = static_cast<int>(ParseInt(f[0], "index"));
      s.start_char = static_cast<size_t>(ParseInt(f[1], "start_char"));
      s.end_char = static_cast<size_t>(ParseInt(f[2], "end_char"));
    } catch (const Error &e) {
      throw ParseError(line_no, e.what());
    }
    if (s.index != static_cast<int>(sentences.size())) {
      throw ParseError(line_no, "sentence index out of order");
    }
    if (s.start_char >= s.end_char || s.end_char > text.size() ||
        s.start_char < prev_end) {
      throw ParseError(line_no, "invalid sentence span");
    }
    s.text = text.substr(s.start_char, s.end_char - s.start_char);
    prev_end = s.end_char;
    sentences.push_back(std::move(s));
  }
  return sentences;
}

void WriteDocument(const Document &doc, const std::string &dir) {
  fs::path base(dir);
  fs::create_directories(base);
  WriteFile((base / (doc.doc_id + ".txt")).string(), doc.text);
  WriteFile((base / (doc.doc_id + ".sentences.tsv")).string(),
            FormatSentenceSidecar(doc));
}

Document ReadDocument(const std::string &dir, const std::string &doc_id) {
  fs::path base(dir);
  Document doc;
  doc.doc_id = doc_id;
  doc.text = ReadFile((base / (doc_id + ".txt")).string());
  std::string sidecar_path = (base / (doc_id + ".sentences.tsv")).string();
  try {
    doc.sentences = ParseSentenceSidecar(ReadFile(sidecar_path), doc.text);
  } catch (const ParseError &e) {
    throw Error(sidecar_path + ": " + e.what());
  }
  return doc;
}

}  // namespace coocnet
