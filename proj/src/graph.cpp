#include "levelone/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

#include "json.hpp"

namespace levelone {

using ojson = nlohmann::ordered_json;

namespace detail {

void sort_graph(CrystalGraph& g) {
    std::sort(g.nodes.begin(), g.nodes.end(), [](const GraphNode& a, const GraphNode& b) { return a.id < b.id; });
    std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
        return std::tie(a.from, a.color, a.to) < std::tie(b.from, b.color, b.to);
    });
    std::sort(g.roots.begin(), g.roots.end());
}

}  // namespace detail

const GraphNode* CrystalGraph::find(std::string_view id) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id,
                               [](const GraphNode& n, std::string_view key) { return n.id < key; });
    return it != nodes.end() && it->id == id ? &*it : nullptr;
}

std::vector<std::size_t> CrystalGraph::level_sizes() const {
    std::map<std::string_view, std::vector<std::string_view>> adj;
    for (const auto& e : edges) adj[e.from].push_back(e.to);
    std::map<std::string_view, std::size_t> dist;
    std::queue<std::string_view> q;
    for (const auto& r : roots)
        if (dist.emplace(r, 0).second) q.push(r);
    std::vector<std::size_t> sizes;
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        const auto d = dist[v];
        if (sizes.size() <= d) sizes.resize(d + 1, 0);
        ++sizes[d];
        for (auto w : adj[v])
            if (dist.emplace(w, d + 1).second) q.push(w);
    }
    return sizes;
}

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "dot") return GraphFormat::dot;
    if (name == "json") return GraphFormat::json;
    throw UsageError("unknown graph format '" + std::string(name) + "' (expected dot|json)");
}

namespace {

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + '"';
}

ojson stat_object(const std::vector<int>& v) {
    ojson o = ojson::object();
    for (std::size_t j = 0; j < v.size(); ++j) o[std::to_string(j)] = v[j];
    return o;
}

std::vector<int> read_stat(const ojson& o, int ell) {
    std::vector<int> v(static_cast<std::size_t>(ell), 0);
    for (const auto& [key, value] : o.items()) {
        const int j = std::stoi(key);
        if (j < 0 || j >= ell) throw InvalidDatum("color out of range in graph JSON: " + key);
        v[static_cast<std::size_t>(j)] = value.get<int>();
    }
    return v;
}

std::string to_dot(const CrystalGraph& g) {
    std::string out = "digraph crystal {\n";
    for (const auto& n : g.nodes) out += "  " + dot_quote(n.id) + " [shape=box]\n";
    for (const auto& e : g.edges)
        out += "  " + dot_quote(e.from) + " -> " + dot_quote(e.to) + " [label=\"" + std::to_string(e.color) + "\"]\n";
    out += "}\n";
    return out;
}

std::string to_json(const CrystalGraph& g) {
    ojson doc;
    doc["ell"] = g.ell;
    doc["depth"] = g.depth;
    doc["nodes"] = ojson::array();
    for (const auto& n : g.nodes)
        doc["nodes"].push_back(
            {{"id", n.id}, {"eps", stat_object(n.eps)}, {"phi", stat_object(n.phi)}, {"wt", stat_object(n.wt)}});
    doc["edges"] = ojson::array();
    for (const auto& e : g.edges) doc["edges"].push_back({{"from", e.from}, {"to", e.to}, {"color", e.color}});
    return doc.dump(2) + "\n";
}

}  // namespace

std::string export_graph(const CrystalGraph& g, GraphFormat format) {
    return format == GraphFormat::dot ? to_dot(g) : to_json(g);
}

std::string export_graph(const CrystalGraph& g, std::string_view format) {
    return export_graph(g, parse_graph_format(format));
}

CrystalGraph parse_graph_json(std::string_view text) {
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw InvalidDatum(std::string("graph JSON: ") + e.what());
    }
    CrystalGraph g;
    try {
        g.ell = doc.at("ell").get<int>();
        g.depth = doc.at("depth").get<int>();
        for (const auto& n : doc.at("nodes"))
            g.nodes.push_back({n.at("id").get<std::string>(), read_stat(n.at("eps"), g.ell),
                               read_stat(n.at("phi"), g.ell), read_stat(n.at("wt"), g.ell)});
        for (const auto& e : doc.at("edges"))
            g.edges.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(), e.at("color").get<int>()});
    } catch (const ojson::exception& e) {
        throw InvalidDatum(std::string("graph JSON: ") + e.what());
    }
    std::set<std::string> targets;
    for (const auto& e : g.edges) targets.insert(e.to);
    for (const auto& n : g.nodes)
        if (!targets.contains(n.id)) g.roots.push_back(n.id);
    detail::sort_graph(g);
    return g;
}

}  // namespace levelone
