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

// Command-line driver for the corpus analysis pipeline.
//
//   coocnet <ingest|annotate|normalize|graph|temporal|all> [--config PATH]
//           [--out DIR] [--<key> VALUE ...]
//
// Exit status: 0 on success, 1 for configuration or input errors, 2 when a
// prerequisite stage has not been run.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "coocnet/config.h"
#include "coocnet/pipeline.h"
#include "coocnet/text_util.h"

int main(int argc, char **argv) {
  CLI::App app{"Entity co-occurrence networks and temporal term streams"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key = value configuration file");
  const std::map<std::string, std::string> help = {
      {"corpus", "comma-separated .txt files and HTML page directories"},
      {"annotations", "standoff mention TSV (takes precedence)"},
      {"gazetteer", "surface<TAB>TYPE list for the built-in tagger"},
      {"terms_file", "one term per line; skips term extraction"},
      {"strip_page_numbers", "drop lines holding only a number (true/false)"},
      {"normalization", "P_MAX or P_AV"},
      {"av_override", "replace the P_AV average threshold"},
      {"year_lo", "first year kept"},
      {"year_hi", "last year kept"},
      {"boundaries", "comma-separated first years of periods after the first"},
      {"n_terms", "number of extracted terms"},
      {"top_k_entities", "entities kept in the stream model"},
      {"min_assoc", "minimum entity-term count per period"},
      {"min_overlap", "minimum shared terms for a tube"},
      {"min_edge_weight", "drop lighter co-occurrence edges"},
      {"louvain_seed", "community detection seed"},
      {"louvain_restarts", "community detection starts; best kept"},
      {"layout_seed", "layout seed"},
      {"layout_iterations", "layout iterations"},
      {"out", "output directory"},
  };
  std::map<std::string, std::string> flags;
  for (const std::string &key : coocnet::ConfigKeys()) {
    auto it = help.find(key);
    app.add_option("--" + key, flags[key], it == help.end() ? key : it->second);
  }

  for (coocnet::Stage stage :
       {coocnet::Stage::kIngest, coocnet::Stage::kAnnotate,
        coocnet::Stage::kNormalize, coocnet::Stage::kGraph,
        coocnet::Stage::kTemporal, coocnet::Stage::kAll}) {
    const std::string name(coocnet::StageName(stage));
    app.add_subcommand(name, stage == coocnet::Stage::kAll
                                 ? "run every stage in order"
                                 : "run the " + name + " stage")
        ->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    coocnet::PipelineConfig config;
    if (!config_path.empty()) {
      coocnet::ApplyConfigText(config, coocnet::ReadFile(config_path),
                               config_path);
    }
    // Flags override the file.
    for (const std::string &key : coocnet::ConfigKeys()) {
      if (app.get_option("--" + key)->count() > 0) {
        coocnet::SetConfigValue(config, key, flags[key]);
      }
    }
    coocnet::Stage stage =
        coocnet::ParseStage(app.get_subcommands().front()->get_name());
    coocnet::RunStage(config, stage, &std::cerr);
  } catch (const coocnet::MissingArtifactError &e) {
    std::cerr << "coocnet: " << e.what() << '\n';
    return 2;
  } catch (const coocnet::Error &e) {
    std::cerr << "coocnet: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "coocnet: internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
