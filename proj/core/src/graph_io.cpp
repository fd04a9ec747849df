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

#include "gbsdks/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gbsdks/errors.hpp"

namespace gbsdks {
namespace {

using nlohmann::json;

// 1-based line of a byte offset, for parse diagnostics.
std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
  json doc = {{"n", g.size()}, {"edges", std::move(edges)}};
  return doc.dump() + "\n";
}

Graph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("graph file: malformed JSON at line " +
                     std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph file: top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("graph file: field 'n' missing or not an integer");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("graph file: field 'edges' missing or not an array");
  }
  const long long n = doc["n"].get<long long>();
  if (n < 1 || n > 1'000'000) {
    throw ValidationError("graph file: 'n' = " + std::to_string(n) +
                          " out of range");
  }
  GraphBuilder builder(static_cast<int>(n));
  const json& edges = doc["edges"];
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const json& pair = edges[e];
    const std::string where = "graph file: edges[" + std::to_string(e) + "]";
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw ParseError(where + " must be a pair of integers");
    }
    const long long i = pair[0].get<long long>();
    const long long j = pair[1].get<long long>();
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw ValidationError(where + " = [" + std::to_string(i) + ", " +
                            std::to_string(j) + "] outside [0, " +
                            std::to_string(n) + ")");
    }
    if (i == j) {
      throw ValidationError(where + " is a self loop on vertex " +
                            std::to_string(i));
    }
    builder.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return builder.build();
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << graph_to_json(g);
  if (!out) throw Error("failed writing '" + path + "'");
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return graph_from_json(buffer.str());
}

}  // namespace gbsdks
