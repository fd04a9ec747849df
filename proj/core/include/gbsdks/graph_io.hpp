// Copyright 2026 The gbsdks Authors.
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

#ifndef GBSDKS_GRAPH_IO_HPP_
#define GBSDKS_GRAPH_IO_HPP_

#include <string>
#include <string_view>

#include "gbsdks/graph.hpp"

namespace gbsdks {

// Graph files are JSON objects {"n": int, "edges": [[i, j], ...]} with i < j.
//
// Loading throws ParseError for malformed JSON or missing/mistyped fields
// (with line or field context) and ValidationError for self loops and
// out-of-range endpoints.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

void save_graph(const Graph& g, const std::string& path);
Graph load_graph(const std::string& path);

}  // namespace gbsdks

#endif  // GBSDKS_GRAPH_IO_HPP_
