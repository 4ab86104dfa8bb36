#include "maxgenus/critical.hpp"

#include "maxgenus/errors.hpp"
#include "maxgenus/families.hpp"

#include <doctest.h>

#include <json.hpp>

#include <random>

using namespace mg;

namespace {

Multigraph k4() { return generate(parse_family_spec("mobius:2")); }

// loop at v hanging off a triangle by a cut edge
Multigraph alpha_fixture() {
    auto g = generate(parse_family_spec("cycle:3"));
    const int v = g.add_vertex();
    g.add_edge(v, v);
    g.add_edge(v, 1);
    return g;
}

// digon u=w, rays from u and w into a K4 so degrees stay 3
Multigraph beta_fixture() {
    auto g = k4();
    // subdivide the edge (3, 4): K4 keeps its genus under subdivision
    int e34 = -1;
    for (const auto& [e, uv] : g.edges())
        if (uv.first == 3 && uv.second == 4) e34 = e;
    REQUIRE(e34 != -1);
    g.remove_edge(e34);
    const int u = g.add_vertex();
    const int w = g.add_vertex();
    g.add_edge(3, u);
    g.add_edge(u, w);
    g.add_edge(u, w);
    g.add_edge(w, 4);
    return g;
}

// diamond v-u over {x, y} hung inside a host cycle
Multigraph gamma_fixture() {
    auto g = generate(parse_family_spec("cycle:4")); // x = 1, y = 3 on the cycle
    const int v = g.add_vertex();
    const int u = g.add_vertex();
    g.add_edge(v, u);
    g.add_edge(v, 1);
    g.add_edge(v, 3);
    g.add_edge(u, 1);
    g.add_edge(u, 3);
    return g;
}

std::mt19937 rng(20240819);

// random connected cubic multigraph on n vertices (perfect matching model)
Multigraph random_cubic(int n) {
    for (;;) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < 3; ++k) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Multigraph g;
        for (int v = 0; v < n; ++v) g.add_vertex(v);
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2)
            g.add_edge(stubs[i], stubs[i + 1]);
        if (is_connected(g)) return g;
    }
}

} // namespace

TEST_CASE("alpha detection") {
    auto g = alpha_fixture();
    auto found = detect_alpha(g);
    REQUIRE(found.size() == 1);
    CHECK(found[0].vertex == 4); // ids 1..3 are the triangle
    CHECK(detect_alpha(k4()).empty());

    // alpha deletion is genus neutral
    auto before = max_genus_exhaustive(g).max_genus;
    auto after = max_genus_exhaustive(cleanup(delete_vertex(g, found[0].vertex))).max_genus;
    CHECK(before == after);
}

TEST_CASE("beta detection and criticality") {
    auto g = beta_fixture();
    auto found = detect_beta(g);
    REQUIRE(found.size() == 2); // both digon endpoints
    CHECK(detect_beta(k4()).empty());

    const int before = max_genus_exhaustive(g).max_genus;
    const int after =
        max_genus_exhaustive(cleanup(delete_vertex(g, found[0].vertex))).max_genus;
    CHECK(after == before - 1);

    // digon whose removal disconnects: two triangles joined by a doubled path
    Multigraph h;
    for (int i = 0; i < 2; ++i) h.add_vertex(i);
    h.add_edge(0, 1);
    h.add_edge(0, 1);
    h.add_edge(0, 0);
    h.add_edge(1, 1);
    // here deleting either endpoint leaves a connected loop vertex; degree is 4 though
    CHECK(detect_beta(h).empty());
}

TEST_CASE("gamma detection and criticality") {
    auto g = gamma_fixture();
    auto found = detect_gamma(g);
    REQUIRE(found.size() == 2); // v and u
    const int before = max_genus_exhaustive(g).max_genus;
    const int after =
        max_genus_exhaustive(cleanup(delete_vertex(g, found[0].vertex))).max_genus;
    CHECK(after == before - 1);

    // every K4 vertex heads a diamond
    auto k4_found = detect_gamma(k4());
    CHECK(k4_found.size() == 4);
}

TEST_CASE("mobius ladder recognition") {
    CHECK(is_mobius_ladder(k4()).has_value()); // M4 = K4
    auto m6 = generate(parse_family_spec("mobius:3"));
    auto lab = is_mobius_ladder(m6);
    REQUIRE(lab.has_value());
    CHECK(lab->size() == 6);
    // N6 is isomorphic to M6 (both are K3,3), so use order 8 to separate
    CHECK(!is_mobius_ladder(generate(parse_family_spec("neckband:4"))).has_value());
    CHECK(!is_mobius_ladder(generate(parse_family_spec("cycle:6"))).has_value());
}

TEST_CASE("neckband recognition") {
    auto n8 = generate(parse_family_spec("neckband:4"));
    auto lab = is_neckband(n8);
    REQUIRE(lab.has_value());
    CHECK(lab->size() == 8);
    // the labeling must satisfy the chord rule against the graph
    auto relabeled = *lab;
    auto has = [&](int a, int b) {
        for (const auto& [e, uv] : n8.edges())
            if ((uv.first == a && uv.second == b) || (uv.first == b && uv.second == a))
                return true;
        return false;
    };
    for (std::size_t k = 0; 2 * k < relabeled.size(); ++k)
        CHECK(has(relabeled[2 * k], relabeled[(2 * k + 3) % relabeled.size()]));

    CHECK(is_neckband(generate(parse_family_spec("neckband:2"))).has_value());
    CHECK(!is_neckband(k4()).has_value());
    CHECK(!is_neckband(generate(parse_family_spec("mobius:4"))).has_value());
}

TEST_CASE("find_1_critical priority and absence") {
    auto m6 = generate(parse_family_spec("mobius:3"));
    auto f = find_1_critical(m6);
    REQUIRE(f.has_value());
    CHECK(f->kind == CriticalFinding::Kind::delta);
    CHECK(f->vertex == 1);

    CHECK(!find_1_critical(generate(parse_family_spec("cycle:5"))).has_value());

    auto n8 = generate(parse_family_spec("neckband:4"));
    auto fe = find_1_critical(n8);
    REQUIRE(fe.has_value());
    CHECK(fe->kind == CriticalFinding::Kind::eta);
}

TEST_CASE("delta and eta deletions drop the genus by one") {
    for (const char* spec : {"mobius:2", "mobius:3", "neckband:2", "neckband:3", "neckband:4"}) {
        auto g = generate(parse_family_spec(spec));
        auto f = find_1_critical(g);
        CAPTURE(spec);
        REQUIRE(f.has_value());
        const int before = max_genus_exhaustive(g).max_genus;
        const int after =
            max_genus_exhaustive(cleanup(delete_vertex(g, f->vertex))).max_genus;
        CHECK(after == before - 1);
    }
}

TEST_CASE("algorithm I on the published fixtures") {
    auto m6 = generate(parse_family_spec("mobius:3"));
    auto t1 = algorithm_I(m6);
    CHECK(t1.total == 2);
    CHECK(t1.total == max_genus_exhaustive(m6).max_genus);

    auto n8 = generate(parse_family_spec("neckband:4"));
    auto t2 = algorithm_I(n8);
    CHECK(t2.total == 2);
    CHECK(t2.total == max_genus_exhaustive(n8).max_genus);

    auto t3 = algorithm_I(k4());
    CHECK(t3.total == 1);

    auto t4 = algorithm_I(beta_fixture());
    CHECK(t4.total == max_genus_exhaustive(beta_fixture()).max_genus);

    auto t5 = algorithm_I(gamma_fixture());
    CHECK(t5.total == max_genus_exhaustive(gamma_fixture()).max_genus);

    auto t6 = algorithm_I(alpha_fixture());
    CHECK(t6.total == max_genus_exhaustive(alpha_fixture()).max_genus);
}

TEST_CASE("algorithm I against the oracle on random cubic graphs") {
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + 2 * static_cast<int>(rng() % 5); // 4..12 vertices
        auto g = random_cubic(n);
        CAPTURE(trial);
        CAPTURE(to_edge_list(g));
        auto trace = algorithm_I(g);
        auto oracle = max_genus_exhaustive(g);
        CHECK(trace.total == oracle.max_genus);
    }
}

TEST_CASE("algorithm II replays plain and extended spirals") {
    auto s56 = generate(parse_family_spec("spiral:5,6"));
    auto t = algorithm_II(s56);
    CHECK(t.total == 3);
    // deletions v15, v11, v7 in order
    REQUIRE(t.steps.size() == 3);
    CHECK(t.steps[0].finding.vertex == 15);
    CHECK(t.steps[1].finding.vertex == 11);
    CHECK(t.steps[2].finding.vertex == 7);

    auto s55 = generate(parse_family_spec("spiral:5,5"));
    auto t5 = algorithm_II(s55);
    CHECK(t5.total == 3);

    auto fig7 = generate(parse_family_spec("extspiral:5,6:13-14"));
    auto t7 = algorithm_II(fig7);
    CHECK(t7.total == 5);
    int gamma_steps = 0;
    for (const auto& s : t7.steps)
        if (s.finding.kind == CriticalFinding::Kind::gamma) ++gamma_steps;
    CHECK(gamma_steps == 2);

    CHECK_THROWS_AS(algorithm_II(k4()), input_error);
}

TEST_CASE("algorithm II agrees with the exhaustive oracle on small instances") {
    for (const char* spec : {"spiral:3,2", "spiral:3,3", "spiral:4,2", "extspiral:3,2:4-5"}) {
        auto g = generate(parse_family_spec(spec));
        CAPTURE(spec);
        auto trace = algorithm_II(g);
        auto oracle = max_genus_exhaustive(g);
        CHECK(trace.total == oracle.max_genus);
        CHECK(oracle.upper_embeddable); // extended spirals stay upper embeddable
    }
}

TEST_CASE("gadget collapse restores the host edge") {
    auto g = generate(parse_family_spec("extspiral:3,1:1-2"));
    // two gamma deletions inside the gadget, cleanups in between
    for (int round = 0; round < 2; ++round) {
        std::optional<CriticalFinding> pick;
        for (const auto& f : detect_gamma(g)) {
            const auto it = g.vertex_labels.find(f.vertex);
            if (it == g.vertex_labels.end() || it->second.rfind("g", 0) != 0) continue;
            if (!pick || f.vertex < pick->vertex) pick = f;
        }
        REQUIRE(pick.has_value());
        g = cleanup(delete_vertex(g, pick->vertex));
    }
    auto host = cleanup(generate(parse_family_spec("spiral:3,1")));
    CHECK(g.vertex_count() == host.vertex_count());
    CHECK(g.edge_count() == host.edge_count());
    CHECK(betti(g) == betti(host));
}

TEST_CASE("trace serialization") {
    auto t = algorithm_I(generate(parse_family_spec("mobius:3")));
    auto j = nlohmann::json::parse(trace_to_json(t));
    CHECK(j["total"] == 2);
    CHECK(j["steps"].size() >= 1);
    CHECK(j["steps"][0].contains("kind"));
    CHECK(j["steps"][0].contains("vertex"));
    CHECK(j.contains("base_genus"));
}
