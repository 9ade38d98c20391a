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

#ifndef COOCNET_TEXT_UTIL_H_
#define COOCNET_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace coocnet {

// ASCII-only character classes. Non-ASCII bytes are never whitespace,
// letters or digits for the purposes of this library.
inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
inline bool IsDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsLower(char c) { return c >= 'a' && c <= 'z'; }
inline bool IsAlpha(char c) { return IsUpper(c) || IsLower(c); }
inline bool IsAlnum(char c) { return IsAlpha(c) || IsDigit(c); }

std::string ToLower(std::string_view s);
std::string ToUpper(std::string_view s);

// Splits on runs of whitespace; no empty tokens are returned.
std::vector<std::string> SplitWhitespace(std::string_view s);

// Splits on a single-character delimiter, keeping empty fields.
std::vector<std::string> Split(std::string_view s, char delim);

std::string_view Trim(std::string_view s);

// True if `s` is non-empty and made only of ASCII digits.
bool IsAllDigits(std::string_view s);

// Returns the byte offset of the first invalid UTF-8 sequence, or npos.
size_t FindInvalidUtf8(std::string_view s);

// Shortest round-trip decimal representation of a double.
std::string FormatDouble(double value);

// Parses a full string as an integer or double; throws Error on failure.
long long ParseInt(std::string_view s, std::string_view what);
double ParseDouble(std::string_view s, std::string_view what);

std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, std::string_view contents);

}  // namespace coocnet

#endif  // COOCNET_TEXT_UTIL_H_
