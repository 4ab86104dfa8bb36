#include "maxgenus/critical.hpp"

#include "maxgenus/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

namespace mg {

namespace {

bool connected_after_delete(const Multigraph& g, int v) {
    if (g.vertex_count() <= 1) return false;
    return is_connected(delete_vertex(g, v));
}

// edge multiset as unordered endpoint pairs with multiplicities
std::map<std::pair<int, int>, int> edge_multiset(const Multigraph& g) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& [e, uv] : g.edges())
        ++out[{std::min(uv.first, uv.second), std::max(uv.first, uv.second)}];
    return out;
}

// All Hamiltonian cycles as vertex sequences starting at the lowest id
// (both directions enumerated). fn returns true to stop the search.
bool for_each_hamiltonian_cycle(const Multigraph& g,
                                const std::function<bool(const std::vector<int>&)>& fn) {
    const std::size_t n = g.vertex_count();
    std::vector<int> path{*g.vertices().begin()};
    std::set<int> used{path[0]};
    std::function<bool()> extend = [&]() -> bool {
        if (path.size() == n) {
            for (int w : g.neighbors(path.back()))
                if (w == path[0]) return fn(path);
            return false;
        }
        for (int w : g.neighbors(path.back())) {
            if (used.count(w)) continue;
            used.insert(w);
            path.push_back(w);
            if (extend()) return true;
            path.pop_back();
            used.erase(w);
        }
        return false;
    };
    return extend();
}

std::optional<std::vector<int>> match_cubic_pattern(
    const Multigraph& g,
    const std::function<std::optional<std::vector<int>>(const std::vector<int>&)>& try_cycle) {
    if (g.vertex_count() < 4 || g.vertex_count() % 2 != 0) return std::nullopt;
    if (2 * g.edge_count() != 3 * g.vertex_count()) return std::nullopt;
    for (int v : g.vertices())
        if (g.degree(v) != 3) return std::nullopt;
    for (const auto& [e, uv] : g.edges())
        if (uv.first == uv.second) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;
    std::optional<std::vector<int>> result;
    for_each_hamiltonian_cycle(g, [&](const std::vector<int>& c) {
        result = try_cycle(c);
        return result.has_value();
    });
    return result;
}

} // namespace

std::string kind_name(CriticalFinding::Kind kind) {
    switch (kind) {
    case CriticalFinding::Kind::alpha: return "alpha";
    case CriticalFinding::Kind::beta: return "beta";
    case CriticalFinding::Kind::gamma: return "gamma";
    case CriticalFinding::Kind::delta: return "delta";
    case CriticalFinding::Kind::eta: return "eta";
    case CriticalFinding::Kind::spiral: return "spiral";
    }
    return "?";
}

std::vector<CriticalFinding> detect_alpha(const Multigraph& g) {
    std::vector<CriticalFinding> out;
    for (int v : g.vertices()) {
        const auto edges = g.incident_edges(v);
        if (edges.size() != 2) continue;
        const bool loop0 = g.is_loop(edges[0]), loop1 = g.is_loop(edges[1]);
        if (loop0 == loop1) continue; // need exactly one loop + one link
        out.push_back({CriticalFinding::Kind::alpha, v, {edges[0], edges[1]}});
    }
    return out;
}

std::vector<CriticalFinding> detect_beta(const Multigraph& g) {
    std::vector<CriticalFinding> out;
    for (int v : g.vertices()) {
        if (g.degree(v) != 3) continue;
        for (int u : g.neighbors(v)) {
            if (g.degree(u) != 3) continue;
            std::vector<int> parallel;
            for (int e : g.incident_edges(v))
                if (!g.is_loop(e) && g.other_endpoint(e, v) == u) parallel.push_back(e);
            if (parallel.size() != 2) continue;
            if (!connected_after_delete(g, v)) continue;
            out.push_back({CriticalFinding::Kind::beta, v, parallel});
            break;
        }
    }
    return out;
}

std::vector<CriticalFinding> detect_gamma(const Multigraph& g) {
    std::vector<CriticalFinding> out;
    for (int v : g.vertices()) {
        if (g.degree(v) != 3) continue;
        const auto nv = g.neighbors(v);
        if (nv.size() != 3) continue; // three simple edges, no loops
        bool found = false;
        for (int u : nv) {
            if (found || g.degree(u) != 3) continue;
            const auto nu = g.neighbors(u);
            if (nu.size() != 3) continue;
            // shared neighbors {x, y} = nv \ {u} must equal nu \ {v}
            std::vector<int> xs;
            for (int w : nv)
                if (w != u) xs.push_back(w);
            std::vector<int> ys;
            for (int w : nu)
                if (w != v) ys.push_back(w);
            if (xs != ys) continue;
            if (!connected_after_delete(g, v)) continue;
            out.push_back({CriticalFinding::Kind::gamma, v, {v, u, xs[0], xs[1]}});
            found = true;
        }
    }
    return out;
}

std::optional<std::vector<int>> is_mobius_ladder(const Multigraph& g) {
    const auto edges = edge_multiset(g);
    return match_cubic_pattern(g, [&](const std::vector<int>& c) -> std::optional<std::vector<int>> {
        const std::size_t len = c.size(), half = len / 2;
        std::map<std::pair<int, int>, int> expected;
        for (std::size_t i = 0; i < len; ++i) {
            const int a = c[i], b = c[(i + 1) % len];
            ++expected[{std::min(a, b), std::max(a, b)}];
        }
        for (std::size_t i = 0; i < half; ++i) {
            const int a = c[i], b = c[i + half];
            ++expected[{std::min(a, b), std::max(a, b)}];
        }
        if (expected == edges) return c;
        return std::nullopt;
    });
}

std::optional<std::vector<int>> is_neckband(const Multigraph& g) {
    const auto edges = edge_multiset(g);
    return match_cubic_pattern(g, [&](const std::vector<int>& c) -> std::optional<std::vector<int>> {
        const std::size_t len = c.size();
        // the chord pattern is invariant under rotation by 2; try both classes
        for (std::size_t shift : {0u, 1u}) {
            std::vector<int> lab(len);
            for (std::size_t i = 0; i < len; ++i) lab[i] = c[(i + shift) % len];
            std::map<std::pair<int, int>, int> expected;
            for (std::size_t i = 0; i < len; ++i) {
                const int a = lab[i], b = lab[(i + 1) % len];
                ++expected[{std::min(a, b), std::max(a, b)}];
            }
            // chords (v_{2k+1}, v_{2k+4}) in 1-based labels
            for (std::size_t k = 0; 2 * k < len; ++k) {
                const int a = lab[2 * k], b = lab[(2 * k + 3) % len];
                ++expected[{std::min(a, b), std::max(a, b)}];
            }
            if (expected == edges) return lab;
        }
        return std::nullopt;
    });
}

std::optional<CriticalFinding> find_1_critical(const Multigraph& g) {
    if (auto found = detect_beta(g); !found.empty()) return found.front();
    if (auto found = detect_gamma(g); !found.empty()) return found.front();
    if (auto lab = is_mobius_ladder(g)) {
        CriticalFinding f{CriticalFinding::Kind::delta, lab->front(), *lab};
        f.vertex = *std::min_element(lab->begin(), lab->end());
        return f;
    }
    if (auto lab = is_neckband(g)) {
        CriticalFinding f{CriticalFinding::Kind::eta, lab->front(), *lab};
        f.vertex = *std::min_element(lab->begin(), lab->end());
        return f;
    }
    return std::nullopt;
}

namespace {

void record(ReductionTrace& trace, const CriticalFinding& f, const Multigraph& after,
            bool counted) {
    trace.steps.push_back({f, after.vertex_count(), after.edge_count(), counted});
}

} // namespace

ReductionTrace algorithm_I(const Multigraph& g, const GenusOptions& opts) {
    if (!is_connected(g)) throw input_error("requires a connected graph");
    ReductionTrace trace;
    Multigraph cur = cleanup(g);
    int counted = 0;
    for (;;) {
        if (auto alphas = detect_alpha(cur); !alphas.empty()) {
            const auto& f = alphas.front();
            cur = cleanup(delete_vertex(cur, f.vertex));
            record(trace, f, cur, false);
            continue;
        }
        const auto f = find_1_critical(cur);
        if (!f) break;
        cur = cleanup(delete_vertex(cur, f->vertex));
        record(trace, *f, cur, true);
        ++counted;
    }
    trace.base_graph = cur;
    trace.base_genus = max_genus_exhaustive(cur, opts).max_genus;
    trace.total = trace.base_genus + counted;
    return trace;
}

ReductionTrace algorithm_II(const Multigraph& g) {
    const auto fam = g.attrs.find("family");
    if (fam == g.attrs.end() || (fam->second != "spiral" && fam->second != "extspiral"))
        throw input_error("requires a labeled spiral or extended spiral");
    if (!g.attrs.count("m") || !g.attrs.count("n"))
        throw input_error("family labels are missing m/n");
    const int m = std::stoi(g.attrs.at("m"));
    int n = std::stoi(g.attrs.at("n"));

    ReductionTrace trace;
    Multigraph cur = g;
    int i = 0;

    // gadget phase: each gadget collapses after two gamma deletions
    for (;;) {
        std::optional<CriticalFinding> pick;
        for (const auto& f : detect_gamma(cur)) {
            const auto it = cur.vertex_labels.find(f.vertex);
            if (it == cur.vertex_labels.end() || it->second.rfind("g", 0) != 0) continue;
            if (!pick || f.vertex < pick->vertex) pick = f;
        }
        if (!pick) break;
        cur = cleanup(delete_vertex(cur, pick->vertex));
        record(trace, *pick, cur, true);
        ++i;
    }
    for (const auto& [v, label] : cur.vertex_labels)
        if (label.rfind("g", 0) == 0)
            throw input_error("gadget labels survived the gamma phase; labels corrupted");

    // spiral phase: delete v_{m+2n-2} until the remainder is a cactus
    int j = 0;
    for (;;) {
        const std::string target = "v" + std::to_string(m + 2 * n - 2);
        const int v = cur.find_vertex_by_label(target);
        if (v == -1) throw input_error("missing labeled vertex " + target);
        CriticalFinding f{CriticalFinding::Kind::spiral, v, {v}};
        cur = cleanup(delete_vertex(cur, v));
        record(trace, f, cur, true);
        if (is_cactus(cur)) {
            trace.base_graph = cur;
            trace.base_genus = 0;
            trace.total = i + j + 1;
            return trace;
        }
        ++j;
        n -= 2;
        if (n < 1) throw internal_error("spiral replay ran past its ear count");
    }
}

std::string trace_to_json(const ReductionTrace& trace) {
    nlohmann::ordered_json j;
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : trace.steps) {
        nlohmann::ordered_json step;
        step["kind"] = kind_name(s.finding.kind);
        step["vertex"] = s.finding.vertex;
        step["counted"] = s.counted;
        step["graph_after"] = {{"v", s.vertices_after}, {"e", s.edges_after}};
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    j["base_graph"] = {{"v", trace.base_graph.vertex_count()},
                       {"e", trace.base_graph.edge_count()}};
    j["base_genus"] = trace.base_genus;
    j["total"] = trace.total;
    return j.dump(2);
}

} // namespace mg
