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

#include "support/fixtures.h"

#include <atomic>
#include <chrono>

#include "coocnet/text_util.h"

#ifndef COOCNET_SOURCE_DIR
#error "COOCNET_SOURCE_DIR must be defined"
#endif

namespace coocnet::testing {

namespace fs = std::filesystem;

std::string SourcePath(const std::string &relative) {
  return (fs::path(COOCNET_SOURCE_DIR) / relative).string();
}

PipelineConfig MiniConfig(const std::string &out) {
  PipelineConfig config;
  ApplyConfigText(config, ReadFile(SourcePath("data/mini/mini.conf")), "mini.conf");
  for (std::string &path : config.corpus) path = SourcePath(path);
  config.gazetteer = SourcePath(config.gazetteer);
  config.out = out;
  return config;
}

ScratchDir::ScratchDir(const std::string &tag) {
  static std::atomic<int> counter{0};
  const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  path_ = fs::temp_directory_path() /
          ("coocnet-" + tag + "-" + std::to_string(stamp) + "-" +
           std::to_string(counter++));
  fs::create_directories(path_);
}

ScratchDir::~ScratchDir() {
  std::error_code ignored;
  fs::remove_all(path_, ignored);
}

}  // namespace coocnet::testing
