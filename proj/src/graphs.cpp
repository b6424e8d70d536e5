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

#include "mzvgraph/graphs.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace mzvgraph {

KGraph::KGraph(std::size_t internal_count, std::vector<Edge> edges, std::optional<SyntaxTree> provenance)
    : internal_count_(internal_count), edges_(std::move(edges)), provenance_(std::move(provenance)) {}

std::size_t KGraph::outdegree(NodeId node) const {
    std::size_t n = 0;
    for (const auto& e : edges_)
        if (e.source == node) ++n;
    return n;
}

bool KGraph::valid() const {
    const NodeId last = internal(internal_count_);
    for (const auto& e : edges_)
        if (e.source > last || e.target > last || e.source == e.target) return false;
    if (outdegree(A) != 0 || outdegree(B) != 0) return false;
    for (std::size_t k = 1; k <= internal_count_; ++k)
        if (outdegree(internal(k)) != 2) return false;
    return edges_.size() == 2 * internal_count_;
}

std::string KGraph::node_name(NodeId node) {
    if (node == A) return "A";
    if (node == B) return "B";
    return "v" + std::to_string(node - 1);
}

KGraph base_ladder() {
    const NodeId x = KGraph::internal(1), y = KGraph::internal(2);
    return KGraph(2, {{x, y}, {y, x}, {x, KGraph::A}, {y, KGraph::B}}, SyntaxTree::leaf());
}

namespace {

// Turn the external `old_external` into a fresh internal node with edges to
// both (new) externals, appended after the existing edges.
KGraph attach_wedge(const KGraph& g, NodeId old_external, std::optional<SyntaxTree> provenance) {
    const NodeId wedge = KGraph::internal(g.internal_count() + 1);
    std::vector<Edge> edges = g.edges();
    for (auto& e : edges)
        if (e.target == old_external) e.target = wedge;
    edges.push_back({wedge, KGraph::A});
    edges.push_back({wedge, KGraph::B});
    return KGraph(g.internal_count() + 1, std::move(edges), std::move(provenance));
}

}  // namespace

KGraph prepend_graph(const KGraph& g) {
    std::optional<SyntaxTree> prov;
    if (g.provenance()) prov = SyntaxTree::prepend(*g.provenance());
    return attach_wedge(g, KGraph::B, std::move(prov));
}

KGraph append_graph(const KGraph& g) {
    std::optional<SyntaxTree> prov;
    if (g.provenance()) prov = SyntaxTree::append(*g.provenance());
    return attach_wedge(g, KGraph::A, std::move(prov));
}

KGraph join_graphs(const KGraph& g1, const KGraph& g2) {
    const std::size_t offset = g1.internal_count();
    auto shift = [offset](NodeId n) { return n <= KGraph::B ? n : n + offset; };
    std::vector<Edge> edges = g1.edges();
    for (const auto& e : g2.edges()) edges.push_back({shift(e.source), shift(e.target)});
    std::optional<SyntaxTree> prov;
    if (g1.provenance() && g2.provenance()) prov = SyntaxTree::join(*g1.provenance(), *g2.provenance());
    return KGraph(offset + g2.internal_count(), std::move(edges), std::move(prov));
}

KGraph wedge_graph() {
    const NodeId x = KGraph::internal(1);
    return KGraph(1, {{x, KGraph::A}, {x, KGraph::B}}, std::nullopt);
}

Rational wedge_value() { return Rational(-1, 2); }

KGraph graph_of_tree(const SyntaxTree& tree) {
    const SyntaxTree t = tree.is_canonical() ? tree : canonicalize(tree);
    using Kind = SyntaxTree::Kind;
    switch (t.kind()) {
        case Kind::leaf: return base_ladder();
        case Kind::prepend: return prepend_graph(graph_of_tree(t.child()));
        case Kind::append: return append_graph(graph_of_tree(t.child()));
        case Kind::join: {
            KGraph g = graph_of_tree(t.children().front());
            for (std::size_t i = 1; i < t.children().size(); ++i) g = join_graphs(g, graph_of_tree(t.children()[i]));
            return KGraph(g.internal_count(), g.edges(), t);
        }
    }
    throw std::logic_error("unreachable tree kind");
}

GraphSum graph_of_tree(const TreeSum& s) {
    GraphSum result;
    for (const auto& [t, c] : s) result.emplace(t, GraphTerm{c, graph_of_tree(t)});
    return result;
}

std::string emit_graph(const KGraph& g, GraphFormat format) {
    if (format == GraphFormat::json) {
        nlohmann::ordered_json j;
        j["external"] = {"A", "B"};
        auto internal = nlohmann::ordered_json::array();
        for (std::size_t k = 1; k <= g.internal_count(); ++k) internal.push_back(KGraph::node_name(KGraph::internal(k)));
        j["internal"] = internal;
        auto edges = nlohmann::ordered_json::array();
        for (const auto& e : g.edges()) edges.push_back({KGraph::node_name(e.source), KGraph::node_name(e.target)});
        j["edges"] = edges;
        j["provenance"] = g.provenance() ? nlohmann::ordered_json(g.provenance()->str()) : nlohmann::ordered_json();
        return j.dump();
    }

    std::ostringstream os;
    os << "digraph G {\n";
    if (g.provenance()) os << "  label=\"" << g.provenance()->str() << "\";\n";
    os << "  A [shape=box, label=\"A\"];\n";
    os << "  B [shape=box, label=\"B\"];\n";
    for (std::size_t k = 1; k <= g.internal_count(); ++k) {
        const auto name = KGraph::node_name(KGraph::internal(k));
        os << "  " << name << " [shape=circle, label=\"" << name << "\"];\n";
    }
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        os << "  " << KGraph::node_name(e.source) << " -> " << KGraph::node_name(e.target) << " [label=\"" << i + 1
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace mzvgraph
