/* Copyright 2026 The mzvgraph Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef MZVGRAPH_GRAPHS_HPP
#define MZVGRAPH_GRAPHS_HPP

#include "mzvgraph/trees.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mzvgraph {

/// Node handle: 0 and 1 are the externals A and B, k + 1 is internal node v_k.
using NodeId = std::size_t;

struct Edge {
    NodeId source;
    NodeId target;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/* A Kontsevich graph with two external sinks A and B and internal nodes
 * v_1..v_n of outdegree two. The edge list order is part of the value.
 * Internal ids follow construction order, so serialization is reproducible.
 */
class KGraph {
public:
    static constexpr NodeId A = 0;
    static constexpr NodeId B = 1;
    static constexpr NodeId internal(std::size_t k) { return k + 1; }  // k is 1-based

    KGraph(std::size_t internal_count, std::vector<Edge> edges, std::optional<SyntaxTree> provenance);

    std::size_t internal_count() const { return internal_count_; }
    std::size_t weight() const { return internal_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::optional<SyntaxTree>& provenance() const { return provenance_; }

    std::size_t outdegree(NodeId node) const;
    /// Internal outdegrees all 2, external outdegrees 0, every endpoint in range.
    bool valid() const;

    static std::string node_name(NodeId node);

    friend bool operator==(const KGraph&, const KGraph&) = default;

private:
    std::size_t internal_count_;
    std::vector<Edge> edges_;
    std::optional<SyntaxTree> provenance_;
};

/// Single ladder rung: v1->v2, v2->v1, v1->A, v2->B; provenance e.
KGraph base_ladder();

/// Old B becomes a new internal node y; appends y->A, y->B' (B' the fresh external).
KGraph prepend_graph(const KGraph& g);
/// Old A becomes a new internal node y; appends y->A', y->B (A' the fresh external).
KGraph append_graph(const KGraph& g);
/// Identifies the externals; edges of g1 then edges of g2 (renumbered after g1).
KGraph join_graphs(const KGraph& g1, const KGraph& g2);

/// One internal node with edges to A then B; weight -1/2 exactly.
KGraph wedge_graph();
Rational wedge_value();

KGraph graph_of_tree(const SyntaxTree& t);

struct GraphTerm {
    Rational coefficient;
    KGraph graph;
};

/// Keyed by canonical provenance tree.
using GraphSum = std::map<SyntaxTree, GraphTerm>;

GraphSum graph_of_tree(const TreeSum& s);

enum class GraphFormat { dot, json };

/// DOT digraph or JSON {"external","internal","edges","provenance"}.
std::string emit_graph(const KGraph& g, GraphFormat format);

}  // namespace mzvgraph

#endif  // MZVGRAPH_GRAPHS_HPP
