#pragma once

// Breadth-first crystal graph construction and DOT / JSON export.
//
// build_graph() expands each BFS level with OpenMP and merges successors in
// frontier order, so the result is independent of the thread count.
// build_graph_serial() is the plain queue-based reference it is tested
// against.

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "levelone/crystal.hpp"

namespace levelone {

struct GraphNode {
    std::string id;
    std::vector<int> eps;
    std::vector<int> phi;
    std::vector<int> wt;
    friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
    std::string from;
    std::string to;
    int color;
    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct CrystalGraph {
    int ell = 2;
    int depth = 0;
    std::vector<std::string> roots;
    std::vector<GraphNode> nodes;  // sorted by id
    std::vector<GraphEdge> edges;  // sorted by (from, color, to)

    /// Node count per BFS level, computed from the edges.
    std::vector<std::size_t> level_sizes() const;
    const GraphNode* find(std::string_view id) const;
    friend bool operator==(const CrystalGraph&, const CrystalGraph&) = default;
};

enum class GraphFormat { dot, json };

GraphFormat parse_graph_format(std::string_view name);
std::string export_graph(const CrystalGraph& g, GraphFormat format);
std::string export_graph(const CrystalGraph& g, std::string_view format);
/// Inverse of the JSON export.  Roots are recovered as the nodes without
/// incoming edges.
CrystalGraph parse_graph_json(std::string_view text);

namespace detail {

template <Crystal B>
GraphNode node_stats(const B& c, const typename B::Node& b) {
    const int ell = c.ell();
    GraphNode n{c.serialize(b), {}, {}, c.wt(b).evals()};
    n.eps.reserve(static_cast<std::size_t>(ell));
    n.phi.reserve(static_cast<std::size_t>(ell));
    for (int j = 0; j < ell; ++j) {
        n.eps.push_back(c.eps(Residue(ell, j), b));
        n.phi.push_back(c.phi(Residue(ell, j), b));
    }
    return n;
}

void sort_graph(CrystalGraph& g);

}  // namespace detail

/// Reference BFS: a FIFO queue, one node at a time.
template <Crystal B>
CrystalGraph build_graph_serial(const B& c, const std::vector<typename B::Node>& roots, int depth) {
    if (depth < 0) throw InvalidDatum("depth must be nonnegative");
    const int ell = c.ell();
    CrystalGraph g;
    g.ell = ell;
    g.depth = depth;

    std::map<std::string, typename B::Node> seen;
    std::deque<std::pair<typename B::Node, int>> queue;
    for (const auto& r : roots) {
        const auto id = c.serialize(r);
        if (seen.emplace(id, r).second) {
            g.roots.push_back(id);
            queue.emplace_back(r, 0);
        }
    }
    while (!queue.empty()) {
        auto [b, d] = queue.front();
        queue.pop_front();
        if (d == depth) continue;
        for (int j = 0; j < ell; ++j) {
            auto next = c.f(Residue(ell, j), b);
            if (next && seen.emplace(c.serialize(*next), *next).second) queue.emplace_back(*next, d + 1);
        }
    }
    for (const auto& [id, b] : seen) {
        g.nodes.push_back(detail::node_stats(c, b));
        for (int j = 0; j < ell; ++j) {
            auto next = c.f(Residue(ell, j), b);
            if (!next) continue;
            auto to = c.serialize(*next);
            if (seen.contains(to)) g.edges.push_back({id, std::move(to), j});
        }
    }
    detail::sort_graph(g);
    return g;
}

/// Level-synchronous BFS; each level's f̃_j evaluations and the final node
/// statistics run as OpenMP parallel loops.
template <Crystal B>
CrystalGraph build_graph(const B& c, const std::vector<typename B::Node>& roots, int depth) {
    if (depth < 0) throw InvalidDatum("depth must be nonnegative");
    using Node = typename B::Node;
    const int ell = c.ell();
    CrystalGraph g;
    g.ell = ell;
    g.depth = depth;

    std::set<std::string> seen;
    std::vector<Node> all;
    std::vector<Node> frontier;
    for (const auto& r : roots) {
        auto id = c.serialize(r);
        if (seen.insert(id).second) {
            g.roots.push_back(std::move(id));
            frontier.push_back(r);
            all.push_back(r);
        }
    }

    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        const auto n = static_cast<long>(frontier.size());
        std::vector<std::vector<std::optional<Node>>> succ(frontier.size());
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k < n; ++k) {
            auto& out = succ[static_cast<std::size_t>(k)];
            out.reserve(static_cast<std::size_t>(ell));
            for (int j = 0; j < ell; ++j) out.push_back(c.f(Residue(ell, j), frontier[static_cast<std::size_t>(k)]));
        }
        std::vector<Node> next;
        for (auto& row : succ)
            for (auto& s : row)
                if (s && seen.insert(c.serialize(*s)).second) {
                    next.push_back(*s);
                    all.push_back(std::move(*s));
                }
        frontier = std::move(next);
    }

    const auto total = static_cast<long>(all.size());
    std::vector<GraphNode> stats(all.size());
    std::vector<std::vector<GraphEdge>> out_edges(all.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < total; ++k) {
        const auto& b = all[static_cast<std::size_t>(k)];
        stats[static_cast<std::size_t>(k)] = detail::node_stats(c, b);
        for (int j = 0; j < ell; ++j) {
            auto s = c.f(Residue(ell, j), b);
            if (!s) continue;
            auto to = c.serialize(*s);
            if (seen.contains(to))
                out_edges[static_cast<std::size_t>(k)].push_back({stats[static_cast<std::size_t>(k)].id, std::move(to), j});
        }
    }
    g.nodes = std::move(stats);
    for (auto& es : out_edges)
        for (auto& e : es) g.edges.push_back(std::move(e));
    detail::sort_graph(g);
    return g;
}

}  // namespace levelone
