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

#include "qtns/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qtns {

void SimpleGraph::addEdge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop in simple graph");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
    if (u > v) std::swap(u, v);
    if (hasEdge(u, v)) throw std::invalid_argument("duplicate edge in simple graph");
    edges.emplace_back(u, v);
}

bool SimpleGraph::hasEdge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

bool SimpleGraph::isConnected() const {
    if (n == 0) return true;
    const auto adj = adjacency();
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    visited[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (!visited[static_cast<std::size_t>(v)]) {
                visited[static_cast<std::size_t>(v)] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

SimpleGraph lineGraph(const SimpleGraph& g) {
    return lineGraph(std::span<const std::pair<int, int>>(g.edges));
}

SimpleGraph lineGraph(std::span<const std::pair<int, int>> edges) {
    // bucket edge indices by endpoint, then connect all pairs per bucket
    int maxVertex = -1;
    for (const auto& [u, v] : edges) maxVertex = std::max({maxVertex, u, v});
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(maxVertex + 1));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        incident[static_cast<std::size_t>(edges[e].first)].push_back(static_cast<int>(e));
        incident[static_cast<std::size_t>(edges[e].second)].push_back(static_cast<int>(e));
    }
    SimpleGraph lg(static_cast<int>(edges.size()));
    std::set<std::pair<int, int>> added;
    for (const auto& bucket : incident) {
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            for (std::size_t j = i + 1; j < bucket.size(); ++j) {
                int a = bucket[i], b = bucket[j];
                if (a > b) std::swap(a, b);
                if (added.insert({a, b}).second) lg.edges.emplace_back(a, b);
            }
        }
    }
    return lg;
}

int TreeDecomposition::width() const {
    int maxBag = 0;
    for (const auto& bag : bags) maxBag = std::max(maxBag, static_cast<int>(bag.size()));
    return maxBag - 1;
}

std::optional<std::string> validateTreeDecomposition(const SimpleGraph& g,
                                                     const TreeDecomposition& td) {
    const int nb = static_cast<int>(td.bags.size());
    if (nb == 0) return "decomposition has no bags";

    // tree shape: |F| = |I| - 1 and connected
    if (static_cast<int>(td.treeEdges.size()) != nb - 1)
        return "tree edge count is not bag count - 1";
    {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(nb));
        for (const auto& [a, b] : td.treeEdges) {
            if (a < 0 || b < 0 || a >= nb || b >= nb) return "tree edge references unknown bag";
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        std::vector<bool> visited(static_cast<std::size_t>(nb), false);
        std::vector<int> stack{0};
        visited[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (!visited[static_cast<std::size_t>(v)]) {
                    visited[static_cast<std::size_t>(v)] = true;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        if (reached != nb) return "bag tree is not connected";
    }

    std::vector<std::set<int>> bagSets;
    bagSets.reserve(td.bags.size());
    for (const auto& bag : td.bags) bagSets.emplace_back(bag.begin(), bag.end());

    // vertex cover
    std::vector<bool> covered(static_cast<std::size_t>(g.n), false);
    for (const auto& s : bagSets)
        for (int v : s) {
            if (v < 0 || v >= g.n) return "bag contains unknown vertex";
            covered[static_cast<std::size_t>(v)] = true;
        }
    for (int v = 0; v < g.n; ++v)
        if (!covered[static_cast<std::size_t>(v)])
            return "vertex " + std::to_string(v) + " not covered by any bag";

    // edge cover
    for (const auto& [u, v] : g.edges) {
        bool found = false;
        for (const auto& s : bagSets)
            if (s.count(u) && s.count(v)) {
                found = true;
                break;
            }
        if (!found)
            return "edge (" + std::to_string(u) + "," + std::to_string(v) + ") not inside any bag";
    }

    // running intersection: bags containing each vertex induce a subtree
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nb));
    for (const auto& [a, b] : td.treeEdges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (int v = 0; v < g.n; ++v) {
        int start = -1, total = 0;
        for (int i = 0; i < nb; ++i)
            if (bagSets[static_cast<std::size_t>(i)].count(v)) {
                ++total;
                start = i;
            }
        if (total == 0) continue;
        std::vector<bool> visited(static_cast<std::size_t>(nb), false);
        std::vector<int> stack{start};
        visited[static_cast<std::size_t>(start)] = true;
        int reached = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (!visited[static_cast<std::size_t>(w)] &&
                    bagSets[static_cast<std::size_t>(w)].count(v)) {
                    visited[static_cast<std::size_t>(w)] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != total)
            return "bags containing vertex " + std::to_string(v) + " are not connected";
    }
    return std::nullopt;
}

std::string serializeOrdering(const EliminationOrdering& ord) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ord.order.size(); ++i) {
        if (i) out << ' ';
        out << ord.order[i];
    }
    return out.str();
}

EliminationOrdering parseOrdering(const std::string& text, int expectedSize) {
    EliminationOrdering ord;
    std::istringstream in(text);
    int v = 0;
    while (in >> v) ord.order.push_back(v);
    if (static_cast<int>(ord.order.size()) != expectedSize)
        throw std::invalid_argument("ordering has " + std::to_string(ord.order.size()) +
                                    " entries, expected " + std::to_string(expectedSize));
    std::vector<bool> seen(static_cast<std::size_t>(expectedSize), false);
    for (int x : ord.order) {
        if (x < 0 || x >= expectedSize || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("ordering is not a permutation");
        seen[static_cast<std::size_t>(x)] = true;
    }
    return ord;
}

}  // namespace qtns
