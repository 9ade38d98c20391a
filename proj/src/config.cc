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

#include "coocnet/config.h"

#include <algorithm>
#include <sstream>

#include "coocnet/text_util.h"

namespace coocnet {
namespace {

std::string JoinList(const std::vector<std::string> &items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    out += items[i];
  }
  return out;
}

std::vector<std::string> SplitList(std::string_view value) {
  std::vector<std::string> items;
  for (const std::string &item : Split(value, ',')) {
    std::string_view t = Trim(item);
    if (!t.empty()) items.emplace_back(t);
  }
  return items;
}

bool ParseBool(std::string_view value) {
  std::string v = ToLower(Trim(value));
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw Error("expected a boolean, got '" + std::string(value) + "'");
}

}  // namespace

const std::vector<std::string> &ConfigKeys() {
  static const std::vector<std::string> keys = {
      "corpus",         "annotations",       "gazetteer",
      "terms_file",     "strip_page_numbers", "normalization",
      "av_override",    "year_lo",           "year_hi",
      "boundaries",     "n_terms",           "top_k_entities",
      "min_assoc",      "min_overlap",       "min_edge_weight",
      "louvain_seed",   "louvain_restarts",  "layout_seed",
      "layout_iterations", "out"};
  return keys;
}

void SetConfigValue(PipelineConfig &c, std::string_view key,
                    std::string_view raw) {
  const std::string value(Trim(raw));
  const std::string name(key);
  try {
    if (key == "corpus") {
      c.corpus = SplitList(value);
    } else if (key == "annotations") {
      c.annotations = value;
    } else if (key == "gazetteer") {
      c.gazetteer = value;
    } else if (key == "terms_file") {
      c.terms_file = value;
    } else if (key == "strip_page_numbers") {
      c.strip_page_numbers = ParseBool(value);
    } else if (key == "normalization") {
      std::string mode = ToUpper(value);
      if (mode == "P_MAX") {
        c.normalization = ClusteringMode::kMax;
      } else if (mode == "P_AV") {
        c.normalization = ClusteringMode::kAverage;
      } else {
        throw Error("expected P_MAX or P_AV, got '" + value + "'");
      }
    } else if (key == "av_override") {
      if (value.empty()) {
        c.av_override.reset();
      } else {
        c.av_override = ParseDouble(value, name);
      }
    } else if (key == "year_lo") {
      c.year_lo = static_cast<int>(ParseInt(value, name));
    } else if (key == "year_hi") {
      c.year_hi = static_cast<int>(ParseInt(value, name));
    } else if (key == "boundaries") {
      c.boundaries.clear();
      for (const std::string &item : SplitList(value)) {
        c.boundaries.push_back(static_cast<int>(ParseInt(item, name)));
      }
    } else if (key == "n_terms") {
      c.n_terms = static_cast<int>(ParseInt(value, name));
    } else if (key == "top_k_entities") {
      c.top_k_entities = static_cast<int>(ParseInt(value, name));
    } else if (key == "min_assoc") {
      c.min_assoc = ParseInt(value, name);
    } else if (key == "min_overlap") {
      c.min_overlap = static_cast<int>(ParseInt(value, name));
    } else if (key == "min_edge_weight") {
      c.min_edge_weight = ParseInt(value, name);
    } else if (key == "louvain_seed") {
      c.louvain_seed = static_cast<uint64_t>(ParseInt(value, name));
    } else if (key == "louvain_restarts") {
      c.louvain_restarts = static_cast<int>(ParseInt(value, name));
    } else if (key == "layout_seed") {
      c.layout_seed = static_cast<uint64_t>(ParseInt(value, name));
    } else if (key == "layout_iterations") {
      c.layout_iterations = static_cast<int>(ParseInt(value, name));
    } else if (key == "out") {
      c.out = value;
    } else {
      throw Error("unknown key '" + name + "'");
    }
  } catch (const ConfigError &) {
    throw;
  } catch (const Error &e) {
    throw ConfigError(e.what());
  }
}

std::vector<std::pair<std::string, std::string>> ConfigEntries(
    const PipelineConfig &c) {
  std::vector<std::string> boundaries;
  for (int b : c.boundaries) boundaries.push_back(std::to_string(b));
  return {
      {"corpus", JoinList(c.corpus)},
      {"annotations", c.annotations},
      {"gazetteer", c.gazetteer},
      {"terms_file", c.terms_file},
      {"strip_page_numbers", c.strip_page_numbers ? "true" : "false"},
      {"normalization",
       c.normalization == ClusteringMode::kMax ? "P_MAX" : "P_AV"},
      {"av_override", c.av_override ? FormatDouble(*c.av_override) : ""},
      {"year_lo", std::to_string(c.year_lo)},
      {"year_hi", std::to_string(c.year_hi)},
      {"boundaries", JoinList(boundaries)},
      {"n_terms", std::to_string(c.n_terms)},
      {"top_k_entities", std::to_string(c.top_k_entities)},
      {"min_assoc", std::to_string(c.min_assoc)},
      {"min_overlap", std::to_string(c.min_overlap)},
      {"min_edge_weight", std::to_string(c.min_edge_weight)},
      {"louvain_seed", std::to_string(c.louvain_seed)},
      {"louvain_restarts", std::to_string(c.louvain_restarts)},
      {"layout_seed", std::to_string(c.layout_seed)},
      {"layout_iterations", std::to_string(c.layout_iterations)},
      {"out", c.out},
  };
}

void ApplyConfigText(PipelineConfig &config, std::string_view text,
                     std::string_view source) {
  int line_no = 0;
  for (std::string line : Split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto where = [&] {
      return std::string(source) + ":" + std::to_string(line_no) + ": ";
    };
    size_t eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(where() + "expected 'key = value'");
    }
    std::string_view key = Trim(t.substr(0, eq));
    if (key.empty()) throw ConfigError(where() + "missing key");
    try {
      SetConfigValue(config, key, t.substr(eq + 1));
    } catch (const ConfigError &e) {
      throw ConfigError(where() + e.what());
    }
  }
}

std::string FormatConfig(const PipelineConfig &config) {
  std::ostringstream out;
  for (const auto &[key, value] : ConfigEntries(config)) {
    out << key << " = " << value << '\n';
  }
  return out.str();
}

void ValidateConfig(const PipelineConfig &c) {
  if (c.year_lo > c.year_hi) {
    throw ConfigError("year_lo must not exceed year_hi");
  }
  if (c.av_override && !(*c.av_override > 0)) {
    throw ConfigError("av_override must be positive");
  }
  auto positive = [](long long v, const char *key) {
    if (v < 1) throw ConfigError(std::string(key) + " must be positive");
  };
  positive(c.n_terms, "n_terms");
  positive(c.top_k_entities, "top_k_entities");
  positive(c.min_assoc, "min_assoc");
  positive(c.min_overlap, "min_overlap");
  positive(c.min_edge_weight, "min_edge_weight");
  positive(c.louvain_restarts, "louvain_restarts");
  if (c.layout_iterations < 0) {
    throw ConfigError("layout_iterations must not be negative");
  }
  if (c.out.empty()) throw ConfigError("out must name a directory");
}

}  // namespace coocnet
