#pragma once

#include "maxgenus/multigraph.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mg {

// Generator parameters. Gadget edges name host-spiral edges by the label
// indices of their endpoints, e.g. {13, 14} for the edge (v13, v14).
struct FamilySpec {
    enum class Kind { cycle, mobius, neckband, spiral, extended_spiral };
    Kind kind = Kind::cycle;
    int m = 0; // cycle length / spiral base cycle
    int n = 0; // ladder/neckband half-order / spiral ear count
    std::vector<std::pair<int, int>> gadget_edges;
};

// Mini-grammar: "cycle:M", "mobius:N", "neckband:N", "spiral:M,N",
// "extspiral:M,N:13-14,17-18". Throws input_error on malformed text.
FamilySpec parse_family_spec(const std::string& text);

// Labeled generator. Vertex id i carries label "v<i>"; gadget vertices get
// fresh ids labeled "g<k>.<part>". attrs records family/m/n/gadgets.
Multigraph generate(const FamilySpec& spec);

// The designated spanning tree of S_5^n for n = 5j, with cotree edges
// named e1..e_{n+1} by the published listing. Other n fall back to the
// default BFS tree with cotree names in edge-id order.
struct Theorem31Fixture {
    Multigraph graph;
    SpanningTree tree;
    std::map<int, std::string> cotree_names;
    bool case1 = false; // true when the designated n = 5j tree was used
};
Theorem31Fixture theorem31_fixture(int n);

// Structural facts used by tests and the CLI.
struct FamilyReport {
    int min_degree = 0;
    int max_degree = 0;
    bool regular = false;
    int betti_number = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
};
FamilyReport validate_family(const Multigraph& g);

// JSON label sidecar: {vertex_labels:{...}, ears:[...], gadgets:[...]}.
std::string labels_to_json(const Multigraph& g);

} // namespace mg
