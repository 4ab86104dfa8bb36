#include "maxgenus/multigraph.hpp"

#include "maxgenus/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace mg {

int Multigraph::add_vertex(int v) {
    if (v < 0) v = next_vertex_id_;
    vertices_.insert(v);
    next_vertex_id_ = std::max(next_vertex_id_, v + 1);
    return v;
}

int Multigraph::add_edge(int u, int v) {
    if (!has_vertex(u) || !has_vertex(v))
        throw input_error("edge endpoint not a present vertex");
    const int e = next_edge_id_++;
    edges_.emplace(e, std::make_pair(u, v));
    return e;
}

void Multigraph::remove_edge(int e) {
    if (!edges_.erase(e)) throw input_error("no such edge: " + std::to_string(e));
}

void Multigraph::remove_vertex(int v) {
    if (!vertices_.erase(v)) throw input_error("no such vertex: " + std::to_string(v));
    for (auto it = edges_.begin(); it != edges_.end();) {
        if (it->second.first == v || it->second.second == v) it = edges_.erase(it);
        else ++it;
    }
    vertex_labels.erase(v);
}

const std::pair<int, int>& Multigraph::endpoints(int e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw input_error("no such edge: " + std::to_string(e));
    return it->second;
}

int Multigraph::other_endpoint(int e, int v) const {
    const auto& [a, b] = endpoints(e);
    return a == v ? b : a;
}

bool Multigraph::is_loop(int e) const {
    const auto& [a, b] = endpoints(e);
    return a == b;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (const auto& [e, uv] : edges_) {
        if (uv.first == v) ++d;
        if (uv.second == v) ++d;
    }
    return d;
}

std::vector<EdgeEnd> Multigraph::incident_ends(int v) const {
    std::vector<EdgeEnd> ends;
    for (const auto& [e, uv] : edges_) {
        if (uv.first == v) ends.push_back({e, 0});
        if (uv.second == v) ends.push_back({e, 1});
    }
    return ends; // map order => sorted by (edge, side)
}

std::vector<int> Multigraph::incident_edges(int v) const {
    std::vector<int> out;
    for (const auto& [e, uv] : edges_)
        if (uv.first == v || uv.second == v) out.push_back(e);
    return out;
}

std::vector<int> Multigraph::neighbors(int v) const {
    std::set<int> out;
    for (const auto& [e, uv] : edges_) {
        if (uv.first == v) out.insert(uv.second);
        if (uv.second == v) out.insert(uv.first);
    }
    out.erase(v);
    return {out.begin(), out.end()};
}

int Multigraph::find_vertex_by_label(const std::string& label) const {
    for (const auto& [v, l] : vertex_labels)
        if (l == label) return v;
    return -1;
}

bool is_connected(const Multigraph& g) {
    if (g.vertices().empty()) return false;
    std::set<int> seen{*g.vertices().begin()};
    std::deque<int> queue{*g.vertices().begin()};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (const auto& [e, uv] : g.edges()) {
            for (int w : {uv.first, uv.second}) {
                if ((uv.first == v || uv.second == v) && !seen.count(w)) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
    }
    return seen.size() == g.vertex_count();
}

int betti(const Multigraph& g) {
    if (!is_connected(g)) throw input_error("betti requires a connected graph");
    return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + 1;
}

Multigraph delete_vertex(const Multigraph& g, int v) {
    Multigraph out = g;
    out.remove_vertex(v);
    return out;
}

Multigraph cleanup(const Multigraph& g) {
    Multigraph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        // prune all degree-1 vertices first
        bool pruned = true;
        while (pruned) {
            pruned = false;
            for (int v : std::vector<int>(cur.vertices().begin(), cur.vertices().end())) {
                if (cur.vertex_count() <= 1) break;
                if (cur.degree(v) <= 1) {
                    cur.remove_vertex(v);
                    pruned = true;
                    changed = true;
                }
            }
        }
        // then smooth one degree-2 vertex and start over
        for (int v : cur.vertices()) {
            if (cur.degree(v) != 2) continue;
            const auto edges = cur.incident_edges(v);
            if (edges.size() == 1) continue; // lone loop vertex: fixpoint
            const int e1 = edges[0], e2 = edges[1];
            const int a = cur.other_endpoint(e1, v);
            const int b = cur.other_endpoint(e2, v);
            cur.remove_vertex(v); // removes e1, e2 too
            const int fresh = cur.add_edge(a, b);
            cur.merged_from[fresh] = {e1, e2};
            changed = true;
            break;
        }
    }
    return cur;
}

SplitResult split_vertex(const Multigraph& g, int v, const std::vector<EdgeEnd>& block1) {
    if (!g.has_vertex(v)) throw input_error("no such vertex: " + std::to_string(v));
    const auto all = g.incident_ends(v);
    if (block1.empty() || block1.size() >= all.size())
        throw input_error("split blocks must both be nonempty");
    for (const auto& end : block1)
        if (std::find(all.begin(), all.end(), end) == all.end())
            throw input_error("split block contains an end not incident to the vertex");

    SplitResult res;
    res.graph = g;
    res.graph.remove_vertex(v);
    res.v1 = res.graph.add_vertex();
    res.v2 = res.graph.add_vertex();
    auto in_block1 = [&](const EdgeEnd& end) {
        return std::find(block1.begin(), block1.end(), end) != block1.end();
    };
    // Rebuild each removed edge with its ends routed to v1/v2.
    for (const auto& [e, uv] : g.edges()) {
        const bool touches = (uv.first == v || uv.second == v);
        if (!touches) continue;
        const int a = uv.first == v ? (in_block1({e, 0}) ? res.v1 : res.v2) : uv.first;
        const int b = uv.second == v ? (in_block1({e, 1}) ? res.v1 : res.v2) : uv.second;
        res.graph.add_edge(a, b);
    }
    res.graph.add_edge(res.v1, res.v2);
    return res;
}

Multigraph contract_edge(const Multigraph& g, int e) {
    const auto [u, v] = g.endpoints(e);
    if (u == v) {
        Multigraph out = g;
        out.remove_edge(e);
        return out;
    }
    const int keep = std::min(u, v), drop = std::max(u, v);
    Multigraph out;
    for (int w : g.vertices())
        if (w != drop) out.add_vertex(w);
    for (const auto& [id, uv] : g.edges()) {
        if (id == e) continue;
        const int a = uv.first == drop ? keep : uv.first;
        const int b = uv.second == drop ? keep : uv.second;
        out.add_edge(a, b);
    }
    return out;
}

SpanningTree spanning_tree(const Multigraph& g) {
    if (!is_connected(g)) throw input_error("spanning tree requires a connected graph");
    SpanningTree t;
    std::set<int> seen{*g.vertices().begin()};
    std::deque<int> queue{*g.vertices().begin()};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (const auto& [e, uv] : g.edges()) {
            if (uv.first != v && uv.second != v) continue;
            const int w = uv.first == v ? uv.second : uv.first;
            if (!seen.count(w)) {
                seen.insert(w);
                t.tree_edges.insert(e);
                queue.push_back(w);
            }
        }
    }
    for (const auto& [e, uv] : g.edges())
        if (!t.tree_edges.count(e)) t.cotree_edges.push_back(e);
    return t;
}

SpanningTree spanning_tree(const Multigraph& g, const std::set<int>& tree_edges) {
    if (!is_connected(g)) throw input_error("spanning tree requires a connected graph");
    if (tree_edges.size() != g.vertex_count() - 1)
        throw input_error("explicit edge set has wrong size for a spanning tree");
    Multigraph sub;
    for (int v : g.vertices()) sub.add_vertex(v);
    for (int e : tree_edges) {
        const auto& [u, v] = g.endpoints(e);
        sub.add_edge(u, v);
    }
    if (!is_connected(sub))
        throw input_error("explicit edge set is not a spanning tree");
    SpanningTree t;
    t.tree_edges = tree_edges;
    for (const auto& [e, uv] : g.edges())
        if (!tree_edges.count(e)) t.cotree_edges.push_back(e);
    return t;
}

namespace {

// true iff u and w stay connected after dropping edge `skip`
bool connected_avoiding(const Multigraph& g, int u, int w, int skip) {
    std::set<int> seen{u};
    std::deque<int> queue{u};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (const auto& [e, uv] : g.edges()) {
            if (e == skip) continue;
            if (uv.first != v && uv.second != v) continue;
            const int x = uv.first == v ? uv.second : uv.first;
            if (!seen.count(x)) {
                seen.insert(x);
                queue.push_back(x);
            }
        }
    }
    return seen.count(w) != 0;
}

} // namespace

bool is_cactus(const Multigraph& g) {
    if (!is_connected(g)) throw input_error("is_cactus requires a connected graph");
    // Strict reading: circuits must be pairwise vertex-disjoint. Drop all
    // bridges; each surviving component must then be a single simple
    // circuit (|E| == |V|, loops count as 1-vertex circuits). Components
    // with |E| > |V| hold two circuits sharing a vertex or an edge.
    std::set<int> cycle_edges;
    for (const auto& [e, uv] : g.edges()) {
        if (uv.first == uv.second) {
            cycle_edges.insert(e); // loop
        } else if (connected_avoiding(g, uv.first, uv.second, e)) {
            cycle_edges.insert(e); // non-bridge
        }
    }
    std::set<int> visited_edges;
    for (int start : cycle_edges) {
        if (visited_edges.count(start)) continue;
        // flood the component of non-bridge edges containing `start`
        std::set<int> comp_edges{start};
        std::set<int> comp_vertices{g.endpoints(start).first, g.endpoints(start).second};
        bool grew = true;
        while (grew) {
            grew = false;
            for (int e : cycle_edges) {
                if (comp_edges.count(e)) continue;
                const auto& [a, b] = g.endpoints(e);
                if (comp_vertices.count(a) || comp_vertices.count(b)) {
                    comp_edges.insert(e);
                    comp_vertices.insert(a);
                    comp_vertices.insert(b);
                    grew = true;
                }
            }
        }
        if (comp_edges.size() != comp_vertices.size()) return false;
        visited_edges.insert(comp_edges.begin(), comp_edges.end());
    }
    return true;
}

Multigraph parse_edge_list(std::istream& in) {
    Multigraph g;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream row(line);
        long u, v;
        if (!(row >> u)) continue; // blank/comment line
        if (!(row >> v)) throw input_error("edge line needs two endpoints: '" + line + "'");
        std::string extra;
        if (row >> extra) throw input_error("trailing tokens on edge line: '" + line + "'");
        if (u < 0 || v < 0) throw input_error("vertex ids must be non-negative");
        g.add_vertex(static_cast<int>(u));
        g.add_vertex(static_cast<int>(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

Multigraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string to_edge_list(const Multigraph& g) {
    std::ostringstream out;
    for (const auto& [e, uv] : g.edges())
        out << uv.first << ' ' << uv.second << '\n';
    return out.str();
}

} // namespace mg
