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

#include "coocnet/pipeline.h"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <memory>

#include "coocnet/annotation.h"
#include "coocnet/betweenness.h"
#include "coocnet/corpus.h"
#include "coocnet/gexf.h"
#include "coocnet/graph.h"
#include "coocnet/layout.h"
#include "coocnet/louvain.h"
#include "coocnet/normalization.h"
#include "coocnet/sankey_json.h"
#include "coocnet/streams.h"
#include "coocnet/terms.h"
#include "coocnet/text_util.h"
#include "json.hpp"

namespace coocnet {
namespace {

namespace fs = std::filesystem;

constexpr std::string_view kVersion = "1.0.0";

class Runner {
 public:
  Runner(const PipelineConfig &config, std::ostream *log)
      : config_(config), out_(config.out), log_(log) {}

  void Ingest();
  void Annotate();
  void Normalize();
  void Graph();
  void Temporal();
  void WriteManifest(Stage stage);

 private:
  std::string Path(std::string_view artifact) const {
    return (out_ / fs::path(artifact)).string();
  }

  void Log(const std::string &line) {
    if (log_ != nullptr) *log_ << line << '\n';
  }

  std::string Require(std::string_view artifact, Stage producer) const {
    std::string path = Path(artifact);
    if (!fs::exists(path)) {
      throw MissingArtifactError(std::string(artifact), producer);
    }
    return path;
  }

  const std::vector<Document> &Documents();
  const std::vector<EntityMention> &Mentions();
  const std::vector<EntityCluster> &Clusters();

  const PipelineConfig &config_;
  fs::path out_;
  std::ostream *log_;
  std::unique_ptr<std::vector<Document>> documents_;
  std::unique_ptr<std::vector<EntityMention>> mentions_;
  std::unique_ptr<std::vector<EntityCluster>> clusters_;
};

void RequireInput(const std::string &path, const char *key) {
  if (!fs::exists(path)) {
    throw ConfigError(std::string(key) + " not found: " + path);
  }
}

void Runner::Ingest() {
  if (config_.corpus.empty()) throw ConfigError("no corpus input configured");
  for (const std::string &path : config_.corpus) RequireInput(path, "corpus");
  fs::create_directories(out_ / fs::path(artifacts::kIngestDir));
  std::vector<Document> docs;
  std::string list;
  for (const std::string &path : config_.corpus) {
    RawCorpus raw = LoadCorpus(path);
    for (const Document &d : docs) {
      if (d.doc_id == raw.doc_id) {
        throw ConfigError("duplicate document id '" + raw.doc_id + "'");
      }
    }
    Document doc = raw.source_kind == SourceKind::kHtmlPages
                       ? HtmlToText(raw, config_.strip_page_numbers)
                       : PlainToText(raw, config_.strip_page_numbers);
    doc = SegmentSentences(std::move(doc));
    WriteDocument(doc, Path(artifacts::kIngestDir));
    Log("ingest: " + doc.doc_id + ": " + std::to_string(doc.sentences.size()) +
        " sentences");
    list += doc.doc_id + '\n';
    docs.push_back(std::move(doc));
  }
  WriteFile(Path(artifacts::kDocumentList), list);
  documents_ = std::make_unique<std::vector<Document>>(std::move(docs));
}

const std::vector<Document> &Runner::Documents() {
  if (!documents_) {
    std::string list = ReadFile(Require(artifacts::kDocumentList, Stage::kIngest));
    auto docs = std::make_unique<std::vector<Document>>();
    for (const std::string &line : Split(list, '\n')) {
      std::string_view id = Trim(line);
      if (id.empty()) continue;
      docs->push_back(ReadDocument(Path(artifacts::kIngestDir), std::string(id)));
    }
    documents_ = std::move(docs);
  }
  return *documents_;
}

const std::vector<EntityMention> &Runner::Mentions() {
  if (!mentions_) {
    std::string path = Require(artifacts::kMentions, Stage::kAnnotate);
    try {
      mentions_ = std::make_unique<std::vector<EntityMention>>(
          ParseAnnotations(ReadFile(path), &Documents()));
    } catch (const ParseError &e) {
      throw Error(path + ": " + e.what());
    }
  }
  return *mentions_;
}

const std::vector<EntityCluster> &Runner::Clusters() {
  if (!clusters_) {
    std::string path = Require(artifacts::kClusters, Stage::kNormalize);
    try {
      clusters_ = std::make_unique<std::vector<EntityCluster>>(
          ParseClusters(ReadFile(path)));
    } catch (const ParseError &e) {
      throw Error(path + ": " + e.what());
    }
  }
  return *clusters_;
}

void Runner::Annotate() {
  const std::vector<Document> &docs = Documents();
  std::vector<EntityMention> mentions;
  if (!config_.annotations.empty()) {
    RequireInput(config_.annotations, "annotations");
    try {
      mentions = ParseAnnotations(ReadFile(config_.annotations), &docs);
    } catch (const ParseError &e) {
      throw Error(config_.annotations + ": " + e.what());
    }
  } else if (!config_.gazetteer.empty()) {
    RequireInput(config_.gazetteer, "gazetteer");
    Gazetteer gazetteer;
    try {
      gazetteer = ParseGazetteer(ReadFile(config_.gazetteer));
    } catch (const ParseError &e) {
      throw Error(config_.gazetteer + ": " + e.what());
    }
    for (const Document &doc : docs) {
      std::vector<EntityMention> tagged = HeuristicTag(doc, gazetteer);
      mentions.insert(mentions.end(), tagged.begin(), tagged.end());
    }
  } else {
    throw ConfigError("annotate needs 'annotations' or 'gazetteer'");
  }
  WriteFile(Path(artifacts::kMentions), SerializeAnnotations(mentions));
  Log("annotate: " + std::to_string(mentions.size()) + " mentions");
  mentions_ = std::make_unique<std::vector<EntityMention>>(std::move(mentions));
}

void Runner::Normalize() {
  NormalizationPolicy policy{config_.normalization, config_.av_override};
  std::vector<EntityCluster> clusters = coocnet::Normalize(Mentions(), policy);
  WriteFile(Path(artifacts::kClusters), FormatClusters(clusters));
  Log("normalize: " + std::to_string(clusters.size()) + " clusters");
  clusters_ = std::make_unique<std::vector<EntityCluster>>(std::move(clusters));
}

void Runner::Graph() {
  const std::vector<EntityCluster> &clusters = Clusters();
  CoocGraph graph = BuildGraph(clusters, Mentions(), &Documents());
  graph = FilterEdges(graph, config_.min_edge_weight);
  std::vector<double> bc = Betweenness(graph);
  LouvainOptions louvain;
  louvain.seed = config_.louvain_seed;
  louvain.restarts = config_.louvain_restarts;
  Partition partition = RunLouvain(graph, louvain).partition;
  Layout layout =
      ForceAtlas(graph, config_.layout_seed, config_.layout_iterations);
  WriteFile(Path(artifacts::kGexf), ExportGexf(graph, partition, bc, layout));
  WriteFile(Path(artifacts::kEdgeList), FormatEdgeList(graph));
  Log("graph: " + std::to_string(graph.NodeCount()) + " nodes, " +
      std::to_string(graph.Edges().size()) + " edges, " +
      std::to_string(partition.CommunityCount()) + " communities");
}

void Runner::Temporal() {
  const std::vector<Document> &docs = Documents();
  const std::vector<EntityCluster> &clusters = Clusters();
  std::vector<TermRecord> terms;
  if (!config_.terms_file.empty()) {
    RequireInput(config_.terms_file, "terms_file");
    terms = TermsFromList(ReadFile(config_.terms_file), docs);
  } else {
    terms = ExtractTerms(docs, config_.n_terms);
  }
  std::vector<YearMention> years =
      ExtractYears(Mentions(), config_.year_lo, config_.year_hi);
  std::vector<Triple> triples =
      CollectTriples(docs, Mentions(), years, terms, clusters);
  StreamOptions options;
  options.year_lo = config_.year_lo;
  options.year_hi = config_.year_hi;
  options.boundaries = config_.boundaries.empty()
                           ? YearlyBoundaries(config_.year_lo, config_.year_hi)
                           : config_.boundaries;
  options.top_k_entities = config_.top_k_entities;
  options.min_assoc = config_.min_assoc;
  options.min_overlap = config_.min_overlap;
  StreamModel model;
  try {
    model = BuildStreams(triples, options);
  } catch (const Error &e) {
    throw ConfigError(e.what());
  }
  WriteFile(Path(artifacts::kTerms), FormatTerms(terms));
  WriteFile(Path(artifacts::kSankey), ExportSankeyJson(model));
  Log("temporal: " + std::to_string(terms.size()) + " terms, " +
      std::to_string(triples.size()) + " triples, " +
      std::to_string(model.nodes.size()) + " stream nodes, " +
      std::to_string(model.tubes.size()) + " tubes");
}

void AddChecksums(nlohmann::ordered_json &target, const std::string &path) {
  fs::path p(path);
  if (fs::is_directory(p)) {
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(p)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path &f : files) {
      target[f.string()] = Sha256Hex(ReadFile(f.string()));
    }
  } else if (fs::is_regular_file(p)) {
    target[path] = Sha256Hex(ReadFile(path));
  }
}

void Runner::WriteManifest(Stage stage) {
  nlohmann::ordered_json manifest;
  manifest["tool"] = "coocnet";
  manifest["version"] = kVersion;
  manifest["stage"] = StageName(stage);
  manifest["rerun"] = "coocnet all --config " + Path(artifacts::kRunConfig);
  // Relative input paths in the config resolve against this directory.
  manifest["working_directory"] = fs::current_path().string();
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto &[key, value] : ConfigEntries(config_)) config[key] = value;
  manifest["config"] = config;

  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const std::string &path : config_.corpus) AddChecksums(inputs, path);
  for (const std::string *path :
       {&config_.annotations, &config_.gazetteer, &config_.terms_file}) {
    if (!path->empty()) AddChecksums(inputs, *path);
  }
  manifest["inputs"] = inputs;

  nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
  for (std::string_view name :
       {artifacts::kDocumentList, artifacts::kMentions, artifacts::kClusters,
        artifacts::kGexf, artifacts::kEdgeList, artifacts::kTerms,
        artifacts::kSankey}) {
    std::string path = Path(name);
    if (fs::exists(path)) outputs[std::string(name)] = Sha256Hex(ReadFile(path));
  }
  manifest["artifacts"] = outputs;
  WriteFile(Path(artifacts::kRunConfig), FormatConfig(config_));
  WriteFile(Path(artifacts::kManifest), manifest.dump(2) + "\n");
}

}  // namespace

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kIngest: return "ingest";
    case Stage::kAnnotate: return "annotate";
    case Stage::kNormalize: return "normalize";
    case Stage::kGraph: return "graph";
    case Stage::kTemporal: return "temporal";
    case Stage::kAll: return "all";
  }
  return "unknown";
}

Stage ParseStage(std::string_view name) {
  for (Stage s : {Stage::kIngest, Stage::kAnnotate, Stage::kNormalize,
                  Stage::kGraph, Stage::kTemporal, Stage::kAll}) {
    if (StageName(s) == name) return s;
  }
  throw ConfigError("unknown stage '" + std::string(name) + "'");
}

void RunStage(const PipelineConfig &config, Stage stage, std::ostream *log) {
  ValidateConfig(config);
  fs::create_directories(config.out);
  Runner runner(config, log);
  switch (stage) {
    case Stage::kIngest: runner.Ingest(); break;
    case Stage::kAnnotate: runner.Annotate(); break;
    case Stage::kNormalize: runner.Normalize(); break;
    case Stage::kGraph: runner.Graph(); break;
    case Stage::kTemporal: runner.Temporal(); break;
    case Stage::kAll:
      runner.Ingest();
      runner.Annotate();
      runner.Normalize();
      runner.Graph();
      runner.Temporal();
      break;
  }
  runner.WriteManifest(stage);
}

std::string Sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  static const char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

}  // namespace coocnet
