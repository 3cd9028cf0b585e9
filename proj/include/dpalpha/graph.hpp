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

#ifndef DPALPHA_GRAPH_HPP_
#define DPALPHA_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpalpha {

using NodeId = std::int64_t;
using Edge = std::pair<NodeId, NodeId>;

// Simple undirected graph. Edges are stored canonically (u < v), sorted and
// unique; every endpoint lies in [0, node_count).
class Graph {
 public:
  Graph() = default;

  // Builds a graph from arbitrary pairs: orientation is normalized,
  // duplicates collapse and self-loops are dropped. Throws
  // std::invalid_argument if an endpoint is outside [0, node_count).
  Graph(NodeId node_count, std::vector<Edge> edges);

  NodeId node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  NodeId node_count_ = 0;
  std::vector<Edge> edges_;
};

struct DegreeSequence {
  std::vector<std::int64_t> degrees;

  std::size_t size() const { return degrees.size(); }
  std::int64_t max_degree() const;
  friend bool operator==(const DegreeSequence&, const DegreeSequence&) =
      default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EdgeListLoad {
  Graph graph;
  // original_ids[k] is the id that was relabeled to k.
  std::vector<std::int64_t> original_ids;
  std::size_t lines_read = 0;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

// Parses whitespace-separated "u v" lines; '#' lines and blank lines are
// skipped. Ids are relabeled densely in ascending order of original id.
// Nodes that only occur in self-loops keep an id but have degree 0.
EdgeListLoad load_edge_list(std::istream& in);
EdgeListLoad load_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

DegreeSequence degrees(const Graph& g);

}  // namespace dpalpha

#endif  // DPALPHA_GRAPH_HPP_
