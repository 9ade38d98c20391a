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

#ifndef COOCNET_SANKEY_JSON_H_
#define COOCNET_SANKEY_JSON_H_

#include <string>
#include <string_view>

#include "coocnet/streams.h"

namespace coocnet {

// Compact JSON with top-level arrays "periods", "nodes" and "tubes". Object
// keys are written in a fixed order; node term maps are sorted by term.
// Throws std::logic_error if a tube's shared_terms disagree with its weight.
std::string ExportSankeyJson(const StreamModel &model);

// Parses and validates what ExportSankeyJson writes: tube endpoints must
// exist, connect consecutive periods, and carry consistent shared terms.
StreamModel ReadSankeyJson(std::string_view json);

}  // namespace coocnet

#endif  // COOCNET_SANKEY_JSON_H_
