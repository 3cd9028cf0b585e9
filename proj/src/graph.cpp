// Copyright 2026 The dpalpha Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpalpha/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "dpalpha/io_error.hpp"

namespace dpalpha {

Graph::Graph(NodeId node_count, std::vector<Edge> edges)
    : node_count_(node_count) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) continue;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::int64_t DegreeSequence::max_degree() const {
  if (degrees.empty()) return 0;
  return *std::max_element(degrees.begin(), degrees.end());
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view next_token(std::string_view& rest) {
  std::size_t i = 0;
  while (i < rest.size() && is_blank(rest[i])) ++i;
  std::size_t j = i;
  while (j < rest.size() && !is_blank(rest[j])) ++j;
  std::string_view tok = rest.substr(i, j - i);
  rest.remove_prefix(j);
  return tok;
}

std::int64_t parse_id(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected integer node id, got '" +
                               std::string(tok) + "'");
  }
  return value;
}

}  // namespace

EdgeListLoad load_edge_list(std::istream& in) {
  EdgeListLoad out;
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view rest(line);
    std::string_view first = next_token(rest);
    if (first.empty() || first.front() == '#') continue;
    std::string_view second = next_token(rest);
    if (second.empty()) throw ParseError(lineno, "expected two node ids");
    if (!next_token(rest).empty()) {
      throw ParseError(lineno, "trailing tokens after edge");
    }
    raw.emplace_back(parse_id(first, lineno), parse_id(second, lineno));
    ++out.lines_read;
  }

  // Relabel by ascending original id so that a canonical re-serialization
  // maps every id to itself. Ids seen only in self-loops get no node.
  auto& ids = out.original_ids;
  ids.reserve(2 * raw.size());
  for (const auto& [u, v] : raw) {
    if (u == v) continue;
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto dense = [&ids](std::int64_t original) {
    return static_cast<NodeId>(
        std::lower_bound(ids.begin(), ids.end(), original) - ids.begin());
  };

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) {
    if (u == v) {
      ++out.self_loops;
      continue;
    }
    edges.emplace_back(dense(u), dense(v));
  }
  const std::size_t kept = edges.size();
  out.graph = Graph(static_cast<NodeId>(ids.size()), std::move(edges));
  out.duplicate_edges = kept - out.graph.edge_count();
  return out;
}

EdgeListLoad load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

DegreeSequence degrees(const Graph& g) {
  DegreeSequence d;
  d.degrees.assign(static_cast<std::size_t>(g.node_count()), 0);
  for (const auto& [u, v] : g.edges()) {
    ++d.degrees[static_cast<std::size_t>(u)];
    ++d.degrees[static_cast<std::size_t>(v)];
  }
  return d;
}

}  // namespace dpalpha
