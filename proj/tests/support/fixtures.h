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

// Paths and scratch directories shared by the unit and acceptance tests.

#ifndef COOCNET_TESTS_SUPPORT_FIXTURES_H_
#define COOCNET_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <string>

#include "coocnet/config.h"

namespace coocnet::testing {

// Absolute path of `relative` inside the source tree.
std::string SourcePath(const std::string &relative);

// The bundled mini corpus config, inputs resolved against the source tree,
// writing to `out`.
PipelineConfig MiniConfig(const std::string &out);

// A fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string &tag);
  ~ScratchDir();
  ScratchDir(const ScratchDir &) = delete;
  ScratchDir &operator=(const ScratchDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::string Sub(const std::string &name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace coocnet::testing

#endif  // COOCNET_TESTS_SUPPORT_FIXTURES_H_
