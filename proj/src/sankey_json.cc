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

#include "coocnet/sankey_json.h"

#include <map>
#include <stdexcept>

#include "json.hpp"

#include "coocnet/error.h"

namespace coocnet {
namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

std::string ExportSankeyJson(const StreamModel &model) {
  ordered_json root;
  root["periods"] = ordered_json::array();
  root["nodes"] = ordered_json::array();
  root["tubes"] = ordered_json::array();
  for (const Period &p : model.periods) {
    ordered_json j;
    j["index"] = p.index;
    j["start_year"] = p.start_year;
    j["end_year"] = p.end_year;
    root["periods"].push_back(std::move(j));
  }
  for (const StreamNode &n : model.nodes) {
    ordered_json j;
    j["id"] = n.id;
    j["period"] = n.period;
    j["entity"] = n.entity;
    j["terms"] = ordered_json::object();
    for (const auto &[term, count] : n.terms) j["terms"][term] = count;
    root["nodes"].push_back(std::move(j));
  }
  for (const Tube &t : model.tubes) {
    if (t.shared_terms.size() != static_cast<size_t>(t.weight)) {
      throw std::logic_error("tube " + t.from + " -> " + t.to +
                             ": shared_terms length differs from weight");
    }
    ordered_json j;
    j["from"] = t.from;
    j["to"] = t.to;
    j["weight"] = t.weight;
    j["shared_terms"] = t.shared_terms;
    root["tubes"].push_back(std::move(j));
  }
  return root.dump();
}

StreamModel ReadSankeyJson(std::string_view json) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(std::string("Sankey JSON: ") + e.what());
  }
  StreamModel model;
  try {
    for (const auto &j : root.at("periods")) {
      model.periods.push_back({j.at("index").get<int>(),
                               j.at("start_year").get<int>(),
                               j.at("end_year").get<int>()});
    }
    for (const auto &j : root.at("nodes")) {
      StreamNode n;
      n.id = j.at("id").get<std::string>();
      n.period = j.at("period").get<int>();
      n.entity = j.at("entity").get<std::string>();
      for (const auto &[term, count] : j.at("terms").items()) {
        n.terms[term] = count.get<long long>();
      }
      model.nodes.push_back(std::move(n));
    }
    for (const auto &j : root.at("tubes")) {
      Tube t;
      t.from = j.at("from").get<std::string>();
      t.to = j.at("to").get<std::string>();
      t.weight = j.at("weight").get<int>();
      t.shared_terms = j.at("shared_terms").get<std::vector<std::string>>();
      model.tubes.push_back(std::move(t));
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(std::string("Sankey JSON: ") + e.what());
  }

  for (size_t i = 0; i < model.periods.size(); ++i) {
    const Period &p = model.periods[i];
    if (p.index != static_cast<int>(i) || p.start_year > p.end_year ||
        (i > 0 && p.start_year != model.periods[i - 1].end_year + 1)) {
      throw Error("Sankey JSON: invalid period " + std::to_string(i));
    }
  }
  std::map<std::string, const StreamNode *> by_id;
  for (const StreamNode &n : model.nodes) {
    if (n.period < 0 || n.period >= static_cast<int>(model.periods.size()) ||
        n.id != StreamNodeId(n.period, n.entity)) {
      throw Error("Sankey JSON: invalid node " + n.id);
    }
    if (!by_id.emplace(n.id, &n).second) {
      throw Error("Sankey JSON: duplicate node " + n.id);
    }
  }
  for (const Tube &t : model.tubes) {
    auto from = by_id.find(t.from);
    auto to = by_id.find(t.to);
    if (from == by_id.end() || to == by_id.end()) {
      throw Error("Sankey JSON: tube endpoint missing for " + t.from + " -> " +
                  t.to);
    }
    if (to->second->period != from->second->period + 1) {
      throw Error("Sankey JSON: tube " + t.from + " -> " + t.to +
                  " skips a period");
    }
    std::vector<std::string> shared;
    for (const auto &[term, count] : from->second->terms) {
      if (to->second->terms.count(term) > 0) shared.push_back(term);
    }
    if (shared != t.shared_terms ||
        t.weight != static_cast<int>(t.shared_terms.size())) {
      throw Error("Sankey JSON: tube " + t.from + " -> " + t.to +
                  " has inconsistent shared terms");
    }
  }
  return model;
}

}  // namespace coocnet
