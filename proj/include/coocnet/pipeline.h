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

#ifndef COOCNET_PIPELINE_H_
#define COOCNET_PIPELINE_H_

#include <ostream>
#include <string>
#include <string_view>

#include "coocnet/config.h"
#include "coocnet/error.h"

namespace coocnet {

enum class Stage { kIngest, kAnnotate, kNormalize, kGraph, kTemporal, kAll };

std::string_view StageName(Stage stage);
Stage ParseStage(std::string_view name);  // Throws ConfigError.

// A stage's inputs have not been produced yet; the CLI exits with 2.
class MissingArtifactError : public Error {
 public:
  MissingArtifactError(const std::string &artifact, Stage prerequisite)
      : Error("missing " + artifact + "; run '" +
              std::string(StageName(prerequisite)) + "' first"),
        prerequisite_(prerequisite) {}

  Stage prerequisite() const { return prerequisite_; }

 private:
  Stage prerequisite_;
};

// Artifact file names, relative to the output directory.
namespace artifacts {
inline constexpr std::string_view kIngestDir = "ingest";
inline constexpr std::string_view kDocumentList = "ingest/documents.tsv";
inline constexpr std::string_view kMentions = "mentions.tsv";
inline constexpr std::string_view kClusters = "clusters.tsv";
inline constexpr std::string_view kGexf = "graph.gexf";
inline constexpr std::string_view kEdgeList = "edges.tsv";
inline constexpr std::string_view kTerms = "terms.tsv";
inline constexpr std::string_view kSankey = "sankey.json";
inline constexpr std::string_view kManifest = "manifest.json";
inline constexpr std::string_view kRunConfig = "run.conf";
}  // namespace artifacts

// Runs one stage (or all of them in order), writing its artifacts under
// config.out, then rewrites the manifest and run.conf. Progress lines go to
// `log` when non-null.
void RunStage(const PipelineConfig &config, Stage stage,
              std::ostream *log = nullptr);

// Hex SHA-256 of a byte string.
std::string Sha256Hex(std::string_view data);

}  // namespace coocnet

#endif  // COOCNET_PIPELINE_H_
