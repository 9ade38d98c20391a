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

#ifndef COOCNET_CONFIG_H_
#define COOCNET_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coocnet/error.h"
#include "coocnet/normalization.h"

namespace coocnet {

// Invalid configuration; the CLI maps it to exit status 1.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string &message) : Error(message) {}
};

struct PipelineConfig {
  std::vector<std::string> corpus;  // .txt files and/or HTML page directories
  std::string annotations;          // standoff TSV; takes precedence
  std::string gazetteer;            // used when no annotations are given
  std::string terms_file;           // bypasses term extraction when set
  bool strip_page_numbers = false;
  ClusteringMode normalization = ClusteringMode::kAverage;
  std::optional<double> av_override;
  int year_lo = 1990;
  int year_hi = 2020;
  std::vector<int> boundaries;  // empty: one period per year
  int n_terms = 50;
  int top_k_entities = 20;
  long long min_assoc = 2;
  int min_overlap = 1;
  long long min_edge_weight = 1;
  uint64_t louvain_seed = 42;
  int louvain_restarts = 10;
  uint64_t layout_seed = 42;
  int layout_iterations = 300;
  std::string out = "out";
};

// Every recognized key, in the order they are written out.
const std::vector<std::string> &ConfigKeys();

// Sets one key from its textual value. Throws ConfigError.
void SetConfigValue(PipelineConfig &config, std::string_view key,
                    std::string_view value);

// (key, value) pairs that SetConfigValue maps back to `config`.
std::vector<std::pair<std::string, std::string>> ConfigEntries(
    const PipelineConfig &config);

// `key = value` lines; '#' starts a comment line. Errors carry the line
// number: "config:LINE: message".
void ApplyConfigText(PipelineConfig &config, std::string_view text,
                     std::string_view source = "config");

// The config file format, with every key set.
std::string FormatConfig(const PipelineConfig &config);

// Range checks shared by all stages. Throws ConfigError.
void ValidateConfig(const PipelineConfig &config);

}  // namespace coocnet

#endif  // COOCNET_CONFIG_H_
