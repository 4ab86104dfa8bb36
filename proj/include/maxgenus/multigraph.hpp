#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mg {

// One of the two ends of an edge: side 0 attaches at the edge's first
// endpoint, side 1 at the second. A loop owns both sides at one vertex.
struct EdgeEnd {
    int edge = 0;
    int side = 0;

    friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
    friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

// Undirected multigraph: loops and parallel edges allowed, vertices and
// edges addressed by stable integer identifiers. Surgeries return new
// values; an instance is never mutated after construction is finished.
class Multigraph {
public:
    int add_vertex(int v = -1); // -1: next free id
    int add_edge(int u, int v); // endpoints must exist
    void remove_edge(int e);
    void remove_vertex(int v); // drops incident edges too

    bool has_vertex(int v) const { return vertices_.count(v) != 0; }
    bool has_edge(int e) const { return edges_.count(e) != 0; }
    const std::pair<int, int>& endpoints(int e) const;
    int other_endpoint(int e, int v) const;
    bool is_loop(int e) const;

    const std::set<int>& vertices() const { return vertices_; }
    const std::map<int, std::pair<int, int>>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    int degree(int v) const; // loops count twice
    std::vector<EdgeEnd> incident_ends(int v) const; // sorted by (edge, side)
    std::vector<int> incident_edges(int v) const;    // sorted, loops once
    std::vector<int> neighbors(int v) const;         // sorted, distinct

    // Optional metadata carried through surgeries (family provenance).
    std::map<int, std::string> vertex_labels;
    std::map<std::string, std::string> attrs;

    // Provenance of smoothed edges: fresh id -> the two absorbed ids.
    std::map<int, std::pair<int, int>> merged_from;

    int find_vertex_by_label(const std::string& label) const; // -1 if absent

private:
    std::set<int> vertices_;
    std::map<int, std::pair<int, int>> edges_;
    int next_vertex_id_ = 0;
    int next_edge_id_ = 0;
};

// Spanning tree of a connected multigraph; cotree edges kept in edge-id order.
struct SpanningTree {
    std::set<int> tree_edges;
    std::vector<int> cotree_edges;
};

bool is_connected(const Multigraph& g);

// |E| - |V| + 1; throws input_error on disconnected input.
int betti(const Multigraph& g);

Multigraph delete_vertex(const Multigraph& g, int v);

// Prunes degree-1 vertices, then smooths degree-2 vertices (replacing the
// two incident edges with one fresh edge joining the other endpoints),
// repeating to fixpoint. Never removes the last vertex; a lone loop vertex
// is a fixpoint.
Multigraph cleanup(const Multigraph& g);

// Replaces v by v1, v2: ends in block1 reattach to v1, the rest to v2,
// plus a fresh edge (v1, v2). Both blocks must be nonempty. Returns the
// new graph and the ids of the two replacement vertices.
struct SplitResult {
    Multigraph graph;
    int v1 = 0;
    int v2 = 0;
};
SplitResult split_vertex(const Multigraph& g, int v, const std::vector<EdgeEnd>& block1);

// Merges edge e's endpoints into one vertex (the smaller id survives).
// The contracted edge disappears; other parallel copies become loops.
Multigraph contract_edge(const Multigraph& g, int e);

// BFS spanning tree over sorted vertex/edge ids.
SpanningTree spanning_tree(const Multigraph& g);
// Validates an explicit edge set as a spanning tree.
SpanningTree spanning_tree(const Multigraph& g, const std::set<int>& tree_edges);

// True iff every pair of distinct circuits is vertex-disjoint (loops are
// circuits; two circuits sharing even one vertex are dependent).
bool is_cactus(const Multigraph& g);

// Edge-list text: one `u v` line per edge, `#` comments, loops as `u u`,
// parallel edges by repetition.
Multigraph parse_edge_list(std::istream& in);
Multigraph parse_edge_list(const std::string& text);
std::string to_edge_list(const Multigraph& g);

} // namespace mg
