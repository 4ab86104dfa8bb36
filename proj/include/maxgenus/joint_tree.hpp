#pragma once

#include "maxgenus/multigraph.hpp"
#include "maxgenus/surface_word.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace mg {

// Per-vertex cyclic order of incident edge-ends; one orientable embedding
// per system.
using RotationSystem = std::map<int, std::vector<EdgeEnd>>;

// Number of rotation systems with the first incident end anchored per
// vertex: prod_v (deg(v) - 1)!. Saturates at UINT64_MAX.
std::uint64_t rotation_count(const Multigraph& g);

// The idx-th system in deterministic lexicographic order (vertex-major,
// remaining ends permuted by Lehmer code). idx < rotation_count(g).
RotationSystem rotation_from_index(const Multigraph& g, std::uint64_t idx);

// Index of a system produced by rotation_from_index (inverse map).
std::uint64_t rotation_to_index(const Multigraph& g, const RotationSystem& r);

// Face orbits of the directed-dart successor map; genus via Euler's
// formula (2 - |V| + |E| - F) / 2. Throws internal_error on odd parity.
int face_trace_genus(const Multigraph& g, const RotationSystem& r);

// Semi-edge exponent conventions; genus is invariant under the choice.
enum class ExponentRule {
    walk_first_positive, // first occurrence along the boundary walk is +1
    vertex_slot,         // the end at the lower (vertex, slot) is +1
};

struct AssociatedSurface {
    SurfaceWord word; // symbols are cotree edge ids
};

// Plants the spanning tree with the given rotations, splits each cotree
// edge into labeled semi-edges, and reads the boundary walk from the
// canonical start dart (lowest vertex id, slot 0). Optional names map
// cotree edge id -> display name (default "e<id>").
AssociatedSurface associated_surface(const Multigraph& g, const SpanningTree& t,
                                     const RotationSystem& r,
                                     const std::map<int, std::string>& cotree_names = {},
                                     ExponentRule rule = ExponentRule::walk_first_positive);

// Rotation text format: one line per vertex "v: edge.side edge.side ...".
std::string rotation_to_text(const RotationSystem& r);
RotationSystem rotation_from_text(std::istream& in);

// Dense scratch structures reused across many face traces of one graph.
// Dart id = 2 * dense_edge + side; the successor array is rebuilt per
// rotation index, the rest is fixed.
class FaceTracer {
public:
    explicit FaceTracer(const Multigraph& g);

    std::uint64_t count() const { return count_; }
    int euler_bound() const { return bound_; }

    // genus of the embedding given by the idx-th rotation system
    int genus_at(std::uint64_t idx);

    RotationSystem system_at(std::uint64_t idx) const;

private:
    struct VertexSlots {
        int vertex;
        std::vector<int> darts;       // incident darts sorted by (edge, side)
        std::uint64_t radix;          // (deg - 1)!
    };
    std::vector<VertexSlots> slots_;
    std::vector<int> succ_;
    std::vector<std::uint32_t> visited_;
    std::uint32_t epoch_ = 0;
    std::vector<int> perm_buf_;
    std::vector<int> pool_buf_;
    std::uint64_t count_ = 1;
    int bound_ = 0;
    int n_vertices_ = 0;
    int n_edges_ = 0;
    std::vector<int> edge_ids_; // dense index -> sparse edge id
    std::map<int, int> edge_dense_;

    void build_succ(std::uint64_t idx);
};

} // namespace mg
