#include "maxgenus/families.hpp"

#include "maxgenus/errors.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace mg;

TEST_CASE("spec grammar") {
    auto c = parse_family_spec("cycle:5");
    CHECK(c.kind == FamilySpec::Kind::cycle);
    CHECK(c.m == 5);
    auto m = parse_family_spec("mobius:3");
    CHECK(m.kind == FamilySpec::Kind::mobius);
    CHECK(m.n == 3);
    auto s = parse_family_spec("spiral:5,6");
    CHECK(s.m == 5);
    CHECK(s.n == 6);
    auto x = parse_family_spec("extspiral:5,6:13-14,17-18");
    CHECK(x.gadget_edges == std::vector<std::pair<int, int>>{{13, 14}, {17, 18}});

    CHECK_THROWS_AS(parse_family_spec("cycle:2"), input_error);
    CHECK_THROWS_AS(parse_family_spec("mobius:1"), input_error);
    CHECK_THROWS_AS(parse_family_spec("spiral:5"), input_error);
    CHECK_THROWS_AS(parse_family_spec("extspiral:5,6"), input_error);
    CHECK_THROWS_AS(parse_family_spec("blob:3"), input_error);
    CHECK_THROWS_AS(parse_family_spec("cycle:x"), input_error);
}

TEST_CASE("cycle generator") {
    auto g = generate(parse_family_spec("cycle:6"));
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(validate_family(g).regular);
    CHECK(validate_family(g).min_degree == 2);
    CHECK(g.vertex_labels.at(3) == "v3");
}

TEST_CASE("mobius ladder generator") {
    auto g = generate(parse_family_spec("mobius:3")); // M6
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 9);
    auto rep = validate_family(g);
    CHECK(rep.regular);
    CHECK(rep.min_degree == 3);
    CHECK(rep.betti_number == 4);
}

TEST_CASE("neckband generator matches the chord rule") {
    auto g = generate(parse_family_spec("neckband:4")); // N8
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 12);
    CHECK(validate_family(g).regular);
    // chords v1v4, v3v6, v5v8, v7v2
    auto has = [&](int a, int b) {
        for (const auto& [e, uv] : g.edges())
            if ((uv.first == a && uv.second == b) || (uv.first == b && uv.second == a))
                return true;
        return false;
    };
    CHECK(has(1, 4));
    CHECK(has(3, 6));
    CHECK(has(5, 8));
    CHECK(has(7, 2));
}

TEST_CASE("N4 degenerates to a doubled 4-cycle") {
    auto g = generate(parse_family_spec("neckband:2"));
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(validate_family(g).regular);
}

TEST_CASE("spiral generator sizes and ear attachment") {
    auto g = generate(parse_family_spec("spiral:5,6"));
    CHECK(g.vertex_count() == 17); // m + 2n
    CHECK(g.edge_count() == 23);   // m + 3n
    CHECK(validate_family(g).betti_number == 7);
    // ear p5 runs v13 v14 v15 and lands on v6; p6 runs v15 v16 v17 onto v8
    auto has = [&](int a, int b) {
        for (const auto& [e, uv] : g.edges())
            if ((uv.first == a && uv.second == b) || (uv.first == b && uv.second == a))
                return true;
        return false;
    };
    CHECK(has(13, 14));
    CHECK(has(14, 15));
    CHECK(has(15, 6));
    CHECK(has(15, 16));
    CHECK(has(16, 17));
    CHECK(has(17, 8));
    // frontier internals v16, v17 have degree 2
    CHECK(g.degree(16) == 2);
    CHECK(g.degree(17) == 2);
    CHECK(validate_family(g).min_degree == 2);
}

TEST_CASE("extended spiral adds one gadget worth of structure per edge") {
    auto host = generate(parse_family_spec("spiral:5,6"));
    auto g = generate(parse_family_spec("extspiral:5,6:13-14"));
    CHECK(g.vertex_count() == host.vertex_count() + 8);
    CHECK(g.edge_count() == host.edge_count() + 12); // -1 host edge, +13
    CHECK(betti(g) == betti(host) + 4);
    CHECK(g.attrs.at("gadgets") == "13-14");

    auto g2 = generate(parse_family_spec("extspiral:5,6:13-14,16-17"));
    CHECK(betti(g2) == betti(host) + 8);

    CHECK_THROWS_AS(generate(parse_family_spec("extspiral:5,6:1-9")), input_error);
}

TEST_CASE("label sidecar JSON") {
    auto g = generate(parse_family_spec("extspiral:3,2:6-7"));
    auto j = nlohmann::json::parse(labels_to_json(g));
    CHECK(j["vertex_labels"]["1"] == "v1");
    CHECK(j["ears"].size() == 2);
    CHECK(j["gadgets"].size() == 1);
    CHECK(j["gadgets"][0]["edge"] == "6-7");
    CHECK(j["gadgets"][0]["vertices"].size() == 8);
}

TEST_CASE("designated tree fixture for n = 5j") {
    auto fx = theorem31_fixture(5);
    CHECK(fx.case1);
    CHECK(fx.tree.cotree_edges.size() == 6); // n + 1
    CHECK(fx.cotree_names.size() == 6);

    auto fx10 = theorem31_fixture(10);
    CHECK(fx10.case1);
    CHECK(fx10.tree.cotree_edges.size() == 11);

    auto fx7 = theorem31_fixture(7); // fallback tree
    CHECK(!fx7.case1);
    CHECK(fx7.tree.cotree_edges.size() == 8);
}
