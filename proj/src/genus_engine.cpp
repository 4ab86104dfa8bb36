#include "maxgenus/genus_engine.hpp"

#include "maxgenus/errors.hpp"

#include <json.hpp>

#include <chrono>
#include <exception>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mg {

namespace {

constexpr std::uint64_t kChunk = 8192;

struct Best {
    int genus = -1;
    std::uint64_t index = 0;

    void take(int g, std::uint64_t idx) {
        if (g > genus || (g == genus && idx < index)) {
            genus = g;
            index = idx;
        }
    }
    void merge(const Best& other) {
        if (other.genus >= 0) take(other.genus, other.index);
    }
};

void preflight(const Multigraph& g, const GenusOptions& opts, std::uint64_t total) {
    if (!is_connected(g)) throw input_error("maximum genus requires a connected graph");
    if (opts.budget != 0 && total > opts.budget && !opts.force)
        throw budget_error("rotation systems (" + std::to_string(total) +
                           ") exceed the budget (" + std::to_string(opts.budget) +
                           "); pass force to proceed");
}

void cross_check(const Multigraph& g, const SpanningTree& t, FaceTracer& tracer,
                 std::uint64_t idx, int genus) {
    const RotationSystem r = tracer.system_at(idx);
    const auto surf = associated_surface(g, t, r);
    const int word_genus = genus_by_corner_orbits(surf.word);
    if (word_genus != genus)
        throw internal_error("face trace and associated surface disagree at index " +
                             std::to_string(idx) + " (" + std::to_string(genus) + " vs " +
                             std::to_string(word_genus) + ")");
}

GenusReport finish(const Multigraph& g, const Best& best, std::uint64_t total,
                   std::uint64_t enumerated, int bound,
                   std::chrono::steady_clock::time_point start) {
    GenusReport rep;
    rep.max_genus = best.genus;
    rep.euler_bound = bound;
    rep.betti = betti(g);
    rep.upper_embeddable = best.genus == bound;
    rep.systems_total = total;
    rep.systems_enumerated = enumerated;
    rep.early_exit = enumerated < total;
    rep.witness_index = best.index;
    rep.witness = rotation_from_index(g, best.index);
    rep.vertices = g.vertex_count();
    rep.edges = g.edge_count();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

} // namespace

GenusReport max_genus_serial(const Multigraph& g, const GenusOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t total = rotation_count(g);
    preflight(g, opts, total);
    const int bound = betti(g) / 2;
    const SpanningTree tree = opts.cross_check_every ? spanning_tree(g) : SpanningTree{};

    FaceTracer tracer(g);
    Best best;
    std::uint64_t done = 0;
    while (done < total) {
        const std::uint64_t stop = std::min(total, done + kChunk);
        for (std::uint64_t idx = done; idx < stop; ++idx) {
            const int genus = tracer.genus_at(idx);
            if (opts.cross_check_every && idx % opts.cross_check_every == 0)
                cross_check(g, tree, tracer, idx, genus);
            best.take(genus, idx);
        }
        done = stop;
        if (opts.early_exit && best.genus == bound) break;
    }
    return finish(g, best, total, done, bound, t0);
}

GenusReport max_genus_exhaustive(const Multigraph& g, const GenusOptions& opts) {
#ifndef _OPENMP
    return max_genus_serial(g, opts);
#else
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t total = rotation_count(g);
    preflight(g, opts, total);
    const int bound = betti(g) / 2;
    const SpanningTree tree = opts.cross_check_every ? spanning_tree(g) : SpanningTree{};
    const int jobs = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();

    Best best;
    std::uint64_t done = 0;
    std::exception_ptr failure;
    while (done < total) {
        const std::uint64_t stop = std::min(total, done + kChunk);
#pragma omp parallel num_threads(jobs)
        {
            FaceTracer tracer(g);
            Best local;
#pragma omp for schedule(static)
            for (std::int64_t idx = static_cast<std::int64_t>(done);
                 idx < static_cast<std::int64_t>(stop); ++idx) {
                try {
                    const std::uint64_t u = static_cast<std::uint64_t>(idx);
                    const int genus = tracer.genus_at(u);
                    if (opts.cross_check_every && u % opts.cross_check_every == 0)
                        cross_check(g, tree, tracer, u, genus);
                    local.take(genus, u);
                } catch (...) {
#pragma omp critical(mg_genus_fail)
                    if (!failure) failure = std::current_exception();
                }
            }
#pragma omp critical(mg_genus_merge)
            best.merge(local);
        }
        if (failure) std::rethrow_exception(failure);
        done = stop;
        if (opts.early_exit && best.genus == bound) break;
    }
    return finish(g, best, total, done, bound, t0);
#endif
}

bool is_upper_embeddable(const GenusReport& report) {
    return report.upper_embeddable;
}

std::string report_to_json(const GenusReport& rep, bool include_witness, bool include_timing) {
    nlohmann::ordered_json j;
    j["vertices"] = rep.vertices;
    j["edges"] = rep.edges;
    j["betti"] = rep.betti;
    j["euler_bound"] = rep.euler_bound;
    j["max_genus"] = rep.max_genus;
    j["upper_embeddable"] = rep.upper_embeddable;
    j["systems_total"] = rep.systems_total;
    j["systems_enumerated"] = rep.systems_enumerated;
    j["early_exit"] = rep.early_exit;
    j["witness_index"] = rep.witness_index;
    if (include_witness) {
        auto witness = nlohmann::ordered_json::array();
        for (const auto& [v, rot] : rep.witness) {
            nlohmann::ordered_json row;
            row["vertex"] = v;
            auto order = nlohmann::ordered_json::array();
            for (const auto& end : rot) order.push_back({end.edge, end.side});
            row["order"] = std::move(order);
            witness.push_back(std::move(row));
        }
        j["witness"] = std::move(witness);
    }
    if (include_timing) j["elapsed_ms"] = rep.elapsed_ms;
    return j.dump(2);
}

} // namespace mg
