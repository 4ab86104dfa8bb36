#include "maxgenus/joint_tree.hpp"

#include "maxgenus/errors.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

namespace mg {

namespace {

constexpr std::array<std::uint64_t, 21> kFactorial = [] {
    std::array<std::uint64_t, 21> f{};
    f[0] = 1;
    for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
    return f;
}();

std::uint64_t factorial(std::size_t n) {
    if (n >= kFactorial.size())
        return std::numeric_limits<std::uint64_t>::max(); // saturate
    return kFactorial[n];
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

// Lehmer decode: writes the sub-th permutation of {0..m-1} into out.
void decode_permutation(std::uint64_t sub, std::size_t m, std::vector<int>& pool,
                        std::vector<int>& out) {
    pool.resize(m);
    for (std::size_t i = 0; i < m; ++i) pool[i] = static_cast<int>(i);
    out.clear();
    for (std::size_t k = 0; k < m; ++k) {
        const std::uint64_t f = factorial(m - 1 - k);
        const std::size_t pick = static_cast<std::size_t>(sub / f);
        sub %= f;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
}

std::uint64_t encode_permutation(const std::vector<int>& perm) {
    std::uint64_t idx = 0;
    const std::size_t m = perm.size();
    std::vector<int> pool(m);
    for (std::size_t i = 0; i < m; ++i) pool[i] = static_cast<int>(i);
    for (std::size_t k = 0; k < m; ++k) {
        auto it = std::find(pool.begin(), pool.end(), perm[k]);
        idx += static_cast<std::uint64_t>(it - pool.begin()) * factorial(m - 1 - k);
        pool.erase(it);
    }
    return idx;
}

int end_vertex(const Multigraph& g, const EdgeEnd& end) {
    const auto& [u, v] = g.endpoints(end.edge);
    return end.side == 0 ? u : v;
}

void check_rotation(const Multigraph& g, const RotationSystem& r) {
    for (int v : g.vertices()) {
        auto want = g.incident_ends(v);
        auto it = r.find(v);
        if (it == r.end()) {
            if (!want.empty()) throw input_error("rotation missing vertex " + std::to_string(v));
            continue;
        }
        auto got = it->second;
        std::sort(got.begin(), got.end());
        if (got != want)
            throw input_error("rotation at vertex " + std::to_string(v) +
                              " is not a permutation of its incident ends");
    }
}

} // namespace

std::uint64_t rotation_count(const Multigraph& g) {
    std::uint64_t total = 1;
    for (int v : g.vertices()) {
        const int d = g.degree(v);
        if (d > 1) total = sat_mul(total, factorial(static_cast<std::size_t>(d - 1)));
    }
    return total;
}

RotationSystem rotation_from_index(const Multigraph& g, std::uint64_t idx) {
    // vertex-major mixed radix, most significant digit = lowest vertex
    std::vector<int> vs(g.vertices().begin(), g.vertices().end());
    std::vector<std::uint64_t> digit(vs.size(), 0);
    for (std::size_t i = vs.size(); i-- > 0;) {
        const int d = g.degree(vs[i]);
        const std::uint64_t radix = d > 1 ? factorial(static_cast<std::size_t>(d - 1)) : 1;
        digit[i] = idx % radix;
        idx /= radix;
    }
    if (idx != 0) throw input_error("rotation index out of range");
    RotationSystem r;
    std::vector<int> pool, perm;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        auto ends = g.incident_ends(vs[i]);
        if (ends.empty()) {
            r[vs[i]] = {};
            continue;
        }
        std::vector<EdgeEnd> rot{ends[0]};
        decode_permutation(digit[i], ends.size() - 1, pool, perm);
        for (int p : perm) rot.push_back(ends[static_cast<std::size_t>(p) + 1]);
        r[vs[i]] = std::move(rot);
    }
    return r;
}

std::uint64_t rotation_to_index(const Multigraph& g, const RotationSystem& r) {
    check_rotation(g, r);
    std::uint64_t idx = 0;
    for (int v : g.vertices()) {
        const auto ends = g.incident_ends(v);
        const int d = g.degree(v);
        const std::uint64_t radix = d > 1 ? factorial(static_cast<std::size_t>(d - 1)) : 1;
        idx = sat_mul(idx, radix);
        if (ends.size() < 2) continue;
        auto rot = r.at(v);
        // rotate so the anchor (lex-least end) sits first
        auto anchor = std::find(rot.begin(), rot.end(), ends[0]);
        std::rotate(rot.begin(), anchor, rot.end());
        std::vector<int> perm;
        for (std::size_t k = 1; k < rot.size(); ++k) {
            auto it = std::find(ends.begin(), ends.end(), rot[k]);
            perm.push_back(static_cast<int>(it - ends.begin()) - 1);
        }
        idx += encode_permutation(perm);
    }
    return idx;
}

int face_trace_genus(const Multigraph& g, const RotationSystem& r) {
    check_rotation(g, r);
    if (!is_connected(g)) throw input_error("face tracing requires a connected graph");
    if (g.edge_count() == 0) return 0; // single vertex on the sphere
    // dart = (end); next dart of a face = rotation successor, at the head
    // of the current dart, of that dart's reverse
    std::map<EdgeEnd, EdgeEnd> succ;
    for (const auto& [v, rot] : r) {
        for (std::size_t k = 0; k < rot.size(); ++k)
            succ[rot[k]] = rot[(k + 1) % rot.size()];
    }
    std::set<EdgeEnd> seen;
    int faces = 0;
    for (const auto& [e, uv] : g.edges()) {
        for (int side : {0, 1}) {
            EdgeEnd start{e, side};
            if (seen.count(start)) continue;
            ++faces;
            EdgeEnd d = start;
            do {
                seen.insert(d);
                d = succ.at(EdgeEnd{d.edge, 1 - d.side});
            } while (!(d == start));
        }
    }
    const int val = 2 - static_cast<int>(g.vertex_count()) + static_cast<int>(g.edge_count()) -
                    faces;
    if (val < 0 || val % 2 != 0)
        throw internal_error("face trace produced non-integer genus");
    return val / 2;
}

AssociatedSurface associated_surface(const Multigraph& g, const SpanningTree& t,
                                     const RotationSystem& r,
                                     const std::map<int, std::string>& cotree_names,
                                     ExponentRule rule) {
    check_rotation(g, r);
    for (int e : t.tree_edges) {
        if (!g.has_edge(e)) throw input_error("tree edge not in graph");
        if (g.is_loop(e)) throw input_error("tree edge cannot be a loop");
    }
    if (t.tree_edges.size() != g.vertex_count() - 1)
        throw input_error("tree edge count does not match vertex count");

    // symbols in cotree order
    std::map<int, int> symbol_of;
    std::vector<std::string> names;
    for (int e : t.cotree_edges) {
        symbol_of[e] = static_cast<int>(names.size());
        auto it = cotree_names.find(e);
        names.push_back(it != cotree_names.end() ? it->second : "e" + std::to_string(e));
    }

    const int v0 = *g.vertices().begin();
    struct Pos {
        int vertex;
        std::size_t slot;
        bool operator==(const Pos&) const = default;
    };
    const Pos start{v0, 0};
    Pos pos = start;
    std::vector<Letter> letters;
    std::map<EdgeEnd, std::size_t> emit_order; // for the vertex_slot rule
    std::vector<EdgeEnd> emitted_ends;
    const std::size_t max_steps = 2 * g.edge_count() + 1;
    std::size_t steps = 0;
    do {
        if (++steps > max_steps)
            throw input_error("tree and rotation are inconsistent (walk does not close)");
        const auto& rot = r.at(pos.vertex);
        if (rot.empty()) break; // single isolated vertex
        const EdgeEnd end = rot[pos.slot];
        if (t.tree_edges.count(end.edge)) {
            const EdgeEnd back{end.edge, 1 - end.side};
            const int w = end_vertex(g, back);
            const auto& wrot = r.at(w);
            const auto it = std::find(wrot.begin(), wrot.end(), back);
            if (it == wrot.end()) throw input_error("rotation inconsistent with tree");
            pos = {w, (static_cast<std::size_t>(it - wrot.begin()) + 1) % wrot.size()};
        } else {
            emit_order[end] = emitted_ends.size();
            emitted_ends.push_back(end);
            pos = {pos.vertex, (pos.slot + 1) % rot.size()};
        }
    } while (!(pos == start));

    if (emitted_ends.size() != 2 * t.cotree_edges.size())
        throw input_error("boundary walk did not cover every semi-edge");

    // exponents
    std::map<int, int> first_emit; // edge -> order of first occurrence
    for (std::size_t i = 0; i < emitted_ends.size(); ++i) {
        const EdgeEnd& end = emitted_ends[i];
        const int sym = symbol_of.at(end.edge);
        int exp;
        if (rule == ExponentRule::walk_first_positive) {
            auto [it, inserted] = first_emit.try_emplace(end.edge, static_cast<int>(i));
            (void)it;
            exp = inserted ? +1 : -1;
        } else {
            // +1 on the end at the lower (vertex, slot-in-rotation) order
            const EdgeEnd partner{end.edge, 1 - end.side};
            const int v_here = end_vertex(g, end);
            const int v_there = end_vertex(g, partner);
            const auto& rot_here = r.at(v_here);
            const auto& rot_there = r.at(v_there);
            const auto slot_here = std::find(rot_here.begin(), rot_here.end(), end) -
                                   rot_here.begin();
            const auto slot_there = std::find(rot_there.begin(), rot_there.end(), partner) -
                                    rot_there.begin();
            exp = std::pair(v_here, slot_here) < std::pair(v_there, slot_there) ? +1 : -1;
        }
        letters.push_back({sym, exp});
    }

    SurfaceWord word(std::move(letters), std::move(names));
    word.validate();
    return AssociatedSurface{std::move(word)};
}

std::string rotation_to_text(const RotationSystem& r) {
    std::ostringstream out;
    for (const auto& [v, rot] : r) {
        out << v << ':';
        for (const auto& end : rot) out << ' ' << end.edge << '.' << end.side;
        out << '\n';
    }
    return out.str();
}

RotationSystem rotation_from_text(std::istream& in) {
    RotationSystem r;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        int v;
        char colon;
        if (!(row >> v >> colon) || colon != ':')
            throw input_error("malformed rotation line: '" + line + "'");
        std::vector<EdgeEnd> rot;
        std::string tok;
        while (row >> tok) {
            auto dot = tok.find('.');
            if (dot == std::string::npos)
                throw input_error("malformed end token: '" + tok + "'");
            rot.push_back({std::stoi(tok.substr(0, dot)), std::stoi(tok.substr(dot + 1))});
        }
        r[v] = std::move(rot);
    }
    return r;
}

FaceTracer::FaceTracer(const Multigraph& g) {
    n_vertices_ = static_cast<int>(g.vertex_count());
    n_edges_ = static_cast<int>(g.edge_count());
    for (const auto& [e, uv] : g.edges()) {
        edge_dense_[e] = static_cast<int>(edge_ids_.size());
        edge_ids_.push_back(e);
    }
    for (int v : g.vertices()) {
        VertexSlots vs;
        vs.vertex = v;
        for (const auto& end : g.incident_ends(v))
            vs.darts.push_back(2 * edge_dense_.at(end.edge) + end.side);
        const std::size_t d = vs.darts.size();
        vs.radix = d > 1 ? factorial(d - 1) : 1;
        count_ = sat_mul(count_, vs.radix);
        slots_.push_back(std::move(vs));
    }
    bound_ = betti(g) / 2;
    succ_.assign(static_cast<std::size_t>(2 * n_edges_), 0);
    visited_.assign(static_cast<std::size_t>(2 * n_edges_), 0);
}

void FaceTracer::build_succ(std::uint64_t idx) {
    // decode digits from least significant (last vertex) upwards
    static thread_local std::vector<std::uint64_t> digits;
    digits.assign(slots_.size(), 0);
    for (std::size_t i = slots_.size(); i-- > 0;) {
        digits[i] = idx % slots_[i].radix;
        idx /= slots_[i].radix;
    }
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        const auto& darts = slots_[i].darts;
        if (darts.empty()) continue;
        if (darts.size() == 1) {
            succ_[static_cast<std::size_t>(darts[0])] = darts[0];
            continue;
        }
        decode_permutation(digits[i], darts.size() - 1, pool_buf_, perm_buf_);
        int prev = darts[0];
        for (int p : perm_buf_) {
            const int cur = darts[static_cast<std::size_t>(p) + 1];
            succ_[static_cast<std::size_t>(prev)] = cur;
            prev = cur;
        }
        succ_[static_cast<std::size_t>(prev)] = darts[0];
    }
}

int FaceTracer::genus_at(std::uint64_t idx) {
    if (n_edges_ == 0) return 0; // single vertex on the sphere
    build_succ(idx);
    ++epoch_;
    if (epoch_ == 0) { // wrapped
        std::fill(visited_.begin(), visited_.end(), 0);
        epoch_ = 1;
    }
    int faces = 0;
    const int darts = 2 * n_edges_;
    for (int d0 = 0; d0 < darts; ++d0) {
        if (visited_[static_cast<std::size_t>(d0)] == epoch_) continue;
        ++faces;
        int d = d0;
        do {
            visited_[static_cast<std::size_t>(d)] = epoch_;
            d = succ_[static_cast<std::size_t>(d ^ 1)];
        } while (d != d0);
    }
    const int val = 2 - n_vertices_ + n_edges_ - faces;
    if (val < 0 || val % 2 != 0)
        throw internal_error("face trace produced non-integer genus");
    return val / 2;
}

RotationSystem FaceTracer::system_at(std::uint64_t idx) const {
    RotationSystem r;
    std::vector<std::uint64_t> digits(slots_.size(), 0);
    for (std::size_t i = slots_.size(); i-- > 0;) {
        digits[i] = idx % slots_[i].radix;
        idx /= slots_[i].radix;
    }
    std::vector<int> pool, perm;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        const auto& darts = slots_[i].darts;
        std::vector<EdgeEnd> rot;
        if (!darts.empty()) {
            auto to_end = [&](int dart) {
                return EdgeEnd{edge_ids_[static_cast<std::size_t>(dart / 2)], dart % 2};
            };
            rot.push_back(to_end(darts[0]));
            if (darts.size() > 1) {
                decode_permutation(digits[i], darts.size() - 1, pool, perm);
                for (int p : perm) rot.push_back(to_end(darts[static_cast<std::size_t>(p) + 1]));
            }
        }
        r[slots_[i].vertex] = std::move(rot);
    }
    return r;
}

} // namespace mg
