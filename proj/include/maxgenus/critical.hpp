#pragma once

#include "maxgenus/genus_engine.hpp"
#include "maxgenus/multigraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mg {

// A detected deletion pattern and its witness.
struct CriticalFinding {
    enum class Kind { alpha, beta, gamma, delta, eta, spiral };
    Kind kind = Kind::alpha;
    int vertex = 0;
    // kind-specific witness: alpha {loop, edge}; beta {parallel pair};
    // gamma {v, u, x, y}; delta/eta the full ladder/neckband labeling
    std::vector<int> certificate;
};

std::string kind_name(CriticalFinding::Kind kind);

// Vertices carrying one loop plus one non-loop edge. Deleting one keeps
// the maximum genus unchanged.
std::vector<CriticalFinding> detect_alpha(const Multigraph& g);

// Degree-3 vertices joined to a degree-3 neighbor by exactly two parallel
// edges, with the graph staying connected after deletion.
std::vector<CriticalFinding> detect_beta(const Multigraph& g);

// Degree-3 vertices in a diamond: v and a degree-3 neighbor u joined by a
// simple edge and sharing both remaining neighbors, deletion keeps the
// graph connected. Certificate: {v, u, x, y}.
std::vector<CriticalFinding> detect_gamma(const Multigraph& g);

// Ladder labeling: vertex ids in cycle order v1..v2n such that rungs join
// vi to v_{n+i}. Absent unless g is exactly M_2n for some n >= 2.
std::optional<std::vector<int>> is_mobius_ladder(const Multigraph& g);

// Neckband labeling: cycle order v1..v2n with chords (v_{2i-1},
// v_{2i+2 mod 2n}). Absent unless g is exactly N_2n for some n >= 2.
std::optional<std::vector<int>> is_neckband(const Multigraph& g);

// First 1-critical vertex in priority order beta, gamma, delta, eta
// (lowest vertex id within a kind). Alpha vertices are genus-neutral and
// reported separately by detect_alpha.
std::optional<CriticalFinding> find_1_critical(const Multigraph& g);

// One deletion round plus the resulting graph size.
struct ReductionStep {
    CriticalFinding finding;
    std::size_t vertices_after = 0;
    std::size_t edges_after = 0;
    bool counted = false; // alpha steps do not increment the total
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    Multigraph base_graph;
    int base_genus = 0;
    int total = 0;
};

// Repeatedly deletes alpha vertices (uncounted) and 1-critical vertices
// (counted), cleaning up in between; finishes with an exhaustive run on
// the remaining base graph. total = base_genus + counted deletions.
ReductionTrace algorithm_I(const Multigraph& g, const GenusOptions& opts = {});

// Label-driven replay for generated (extended) spirals: collapses each
// gadget by two gamma deletions, then repeatedly deletes the labeled
// vertex v_{m+2n-2} until the remainder is a cactus. Requires generator
// labels; total = i + j + 1.
ReductionTrace algorithm_II(const Multigraph& g);

std::string trace_to_json(const ReductionTrace& trace);

} // namespace mg
