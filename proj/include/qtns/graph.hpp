// Copyright 2026 the qtns authors
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

#ifndef QTNS_GRAPH_HPP
#define QTNS_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qtns {

/// Simple undirected graph: no self-loops, no duplicate edges. Edges are
/// stored normalized with u < v.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    SimpleGraph() = default;
    explicit SimpleGraph(int vertices) : n(vertices) {}

    void addEdge(int u, int v);
    bool hasEdge(int u, int v) const;
    int edgeCount() const { return static_cast<int>(edges.size()); }
    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency() const;
    bool isConnected() const;
};

/// Line graph: one vertex per edge of g; two vertices are adjacent iff the
/// underlying edges share an endpoint. The overload on an explicit edge
/// list accepts multigraphs (parallel edges become distinct, adjacent
/// vertices), which is what a tensor network's wire list is.
SimpleGraph lineGraph(const SimpleGraph& g);
SimpleGraph lineGraph(std::span<const std::pair<int, int>> edges);

/// Tree of vertex bags; valid decompositions cover all vertices and edges
/// and satisfy the running-intersection property.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> treeEdges;

    int width() const;
};

/// Returns an error description, or nullopt when all four properties hold
/// (vertex cover, edge cover, running intersection, tree shape).
std::optional<std::string> validateTreeDecomposition(const SimpleGraph& g,
                                                     const TreeDecomposition& td);

/// Permutation of a graph's vertices; eliminating in this order induces a
/// tree decomposition whose width upper-bounds the treewidth.
struct EliminationOrdering {
    std::vector<int> order;
};

/// One line: whitespace-separated vertex (wire) indices.
std::string serializeOrdering(const EliminationOrdering& ord);
/// Parses and checks that the result is a permutation of 0..expectedSize-1.
EliminationOrdering parseOrdering(const std::string& text, int expectedSize);

}  // namespace qtns

#endif
