#include "maxgenus/genus_engine.hpp"

#include "maxgenus/errors.hpp"
#include "maxgenus/families.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace mg;

namespace {

Multigraph k4() { return generate(parse_family_spec("mobius:2")); }

} // namespace

TEST_CASE("K4 has maximum genus 1 and is upper embeddable") {
    for (auto* run : {&max_genus_serial, &max_genus_exhaustive}) {
        GenusOptions opts;
        opts.early_exit = false;
        auto rep = run(k4(), opts);
        CHECK(rep.max_genus == 1);
        CHECK(rep.euler_bound == 1);
        CHECK(rep.betti == 3);
        CHECK(rep.upper_embeddable);
        CHECK(rep.systems_total == 16);
        CHECK(rep.systems_enumerated == 16);
        CHECK(!rep.early_exit);
        CHECK(face_trace_genus(k4(), rep.witness) == 1);
        CHECK(rotation_to_index(k4(), rep.witness) == rep.witness_index);
    }
}

TEST_CASE("cycle and trees sit on the sphere") {
    auto c5 = generate(parse_family_spec("cycle:5"));
    auto rep = max_genus_serial(c5);
    CHECK(rep.max_genus == 0);
    CHECK(rep.euler_bound == 0);
    CHECK(rep.upper_embeddable);

    Multigraph path;
    path.add_vertex(0);
    path.add_vertex(1);
    path.add_edge(0, 1);
    CHECK(max_genus_serial(path).max_genus == 0);

    Multigraph lone;
    lone.add_vertex(0);
    CHECK(max_genus_serial(lone).max_genus == 0);
}

TEST_CASE("C5 with two crossing chords") {
    auto g = generate(parse_family_spec("cycle:5"));
    g.add_edge(1, 3);
    g.add_edge(2, 4);
    GenusOptions opts;
    opts.early_exit = false;
    auto rep = max_genus_serial(g, opts);
    CHECK(rep.systems_total == 16); // four degree-3 vertices, 2!^4
    CHECK(rep.max_genus == 1);
    CHECK(rep.euler_bound == 1);
}

TEST_CASE("serial and parallel agree everywhere it matters") {
    for (const char* spec : {"mobius:3", "neckband:3", "spiral:3,3"}) {
        auto g = generate(parse_family_spec(spec));
        GenusOptions opts;
        opts.early_exit = false;
        auto a = max_genus_serial(g, opts);
        auto b = max_genus_exhaustive(g, opts);
        CAPTURE(spec);
        CHECK(a.max_genus == b.max_genus);
        CHECK(a.witness_index == b.witness_index);
        CHECK(a.systems_enumerated == b.systems_enumerated);
    }
}

TEST_CASE("early exit stops at a chunk boundary deterministically") {
    auto g = generate(parse_family_spec("spiral:5,6")); // 4096 systems
    GenusOptions opts;
    auto a = max_genus_serial(g, opts);
    opts.jobs = 8;
    auto b = max_genus_exhaustive(g, opts);
    CHECK(a.max_genus == 3); // floor(7/2)
    CHECK(a.max_genus == b.max_genus);
    CHECK(a.early_exit == b.early_exit);
    CHECK(a.systems_enumerated == b.systems_enumerated);
    CHECK(a.witness_index == b.witness_index);
    const bool chunk_aligned =
        a.systems_enumerated % 4096 == 0 || a.systems_enumerated == a.systems_total;
    CHECK(chunk_aligned);
}

TEST_CASE("budget guard") {
    auto g = generate(parse_family_spec("mobius:3"));
    GenusOptions opts;
    opts.budget = 10;
    CHECK_THROWS_AS(max_genus_serial(g, opts), budget_error);
    CHECK_THROWS_AS(max_genus_exhaustive(g, opts), budget_error);
    opts.force = true;
    CHECK(max_genus_exhaustive(g, opts).max_genus == 2);
}

TEST_CASE("cross checking the two oracles along the scan") {
    auto g = generate(parse_family_spec("mobius:3"));
    GenusOptions opts;
    opts.early_exit = false;
    opts.cross_check_every = 7;
    CHECK(max_genus_serial(g, opts).max_genus == 2);
    CHECK(max_genus_exhaustive(g, opts).max_genus == 2);
}

TEST_CASE("disconnected input is rejected") {
    Multigraph g;
    g.add_vertex(0);
    g.add_vertex(1);
    CHECK_THROWS_AS(max_genus_serial(g), input_error);
}

TEST_CASE("euler bound is never exceeded") {
    for (const char* spec : {"mobius:2", "mobius:3", "neckband:2", "neckband:3", "spiral:3,2",
                             "spiral:4,3", "spiral:5,2"}) {
        auto g = generate(parse_family_spec(spec));
        auto rep = max_genus_serial(g);
        CAPTURE(spec);
        CHECK(rep.max_genus <= rep.euler_bound);
    }
}

TEST_CASE("JSON report is schema stable and parseable") {
    GenusOptions opts;
    opts.early_exit = false;
    auto rep = max_genus_exhaustive(k4(), opts);
    auto j = nlohmann::json::parse(report_to_json(rep));
    CHECK(j["vertices"] == 4);
    CHECK(j["edges"] == 6);
    CHECK(j["betti"] == 3);
    CHECK(j["max_genus"] == 1);
    CHECK(j["upper_embeddable"] == true);
    CHECK(j["systems_enumerated"] == 16);
    CHECK(j["witness"].size() == 4);
    CHECK(j.contains("elapsed_ms"));

    // identical except for timing when recomputed
    auto a = nlohmann::json::parse(report_to_json(max_genus_exhaustive(k4(), opts)));
    auto b = nlohmann::json::parse(report_to_json(max_genus_serial(k4(), opts)));
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a == b);
}
