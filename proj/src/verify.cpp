#include "maxgenus/verify.hpp"

#include "maxgenus/critical.hpp"
#include "maxgenus/errors.hpp"
#include "maxgenus/families.hpp"
#include "maxgenus/joint_tree.hpp"
#include "maxgenus/surface_word.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace mg {

namespace {

void fail(SuiteResult& res, const std::string& msg) { res.failures.push_back(msg); }

std::pair<int, int> parse_range(const std::string& text, int def_lo, int def_hi) {
    if (text.empty()) return {def_lo, def_hi};
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

SurfaceWord random_word(std::mt19937& rng, int symbols) {
    std::vector<int> positions;
    for (int s = 0; s < symbols; ++s) {
        positions.push_back(s);
        positions.push_back(s);
    }
    std::shuffle(positions.begin(), positions.end(), rng);
    std::vector<int> flip(static_cast<std::size_t>(symbols));
    for (auto& f : flip) f = static_cast<int>(rng() % 2);
    std::vector<int> seen(static_cast<std::size_t>(symbols), 0);
    std::vector<Letter> letters;
    std::vector<std::string> names;
    for (int s = 0; s < symbols; ++s) names.push_back("s" + std::to_string(s + 1));
    for (int s : positions) {
        const bool first = seen[static_cast<std::size_t>(s)]++ == 0;
        letters.push_back({s, first == (flip[static_cast<std::size_t>(s)] == 0) ? +1 : -1});
    }
    return SurfaceWord(std::move(letters), std::move(names));
}

// every orientable word over exactly n symbols
void for_each_word(int n, const std::function<void(const SurfaceWord&)>& fn) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
    std::vector<int> slot(static_cast<std::size_t>(2 * n), -1);
    std::function<void(int)> match = [&](int sym) {
        if (sym == n) {
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::vector<Letter> letters(slot.size());
                std::vector<int> seen(static_cast<std::size_t>(n), 0);
                for (std::size_t i = 0; i < slot.size(); ++i) {
                    const int s = slot[i];
                    const bool first = seen[static_cast<std::size_t>(s)]++ == 0;
                    letters[i] = {s, ((mask >> s) & 1) == (first ? 0 : 1) ? +1 : -1};
                }
                fn(SurfaceWord(letters, names));
            }
            return;
        }
        std::size_t first = 0;
        while (slot[first] != -1) ++first;
        slot[first] = sym;
        for (std::size_t second = first + 1; second < slot.size(); ++second) {
            if (slot[second] != -1) continue;
            slot[second] = sym;
            match(sym + 1);
            slot[second] = -1;
        }
        slot[first] = -1;
    };
    match(0);
}

SuiteResult suite_lemma11(const std::string& range, unsigned seed) {
    SuiteResult res;
    const auto [lo, hi] = parse_range(range, 1000, 1000);
    const int trials = hi > lo ? hi : lo;
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int symbols = 1 + static_cast<int>(rng() % 7);
        SurfaceWord ab = random_word(rng, symbols);
        const int before = genus_by_corner_orbits(ab);
        // insert x ... x^-1 at two arbitrary cut points
        SurfaceWord with = ab;
        const int x = with.fresh_symbol();
        auto& ls = with.mutable_letters();
        const std::size_t i = rng() % (ls.size() + 1);
        ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(i), Letter{x, +1});
        const std::size_t j = rng() % (ls.size() + 1);
        ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(j), Letter{x, -1});
        const int after_oracle = genus_by_corner_orbits(with);
        const int after_reduce = reduce_to_standard(with).genus;
        ++res.checks;
        if (after_reduce != after_oracle)
            fail(res, "oracles disagree on " + with.to_string());
        const int diff = after_oracle - before;
        if (diff != 0 && diff != 1)
            fail(res, "genus step " + std::to_string(diff) + " for " + with.to_string());
    }
    return res;
}

SuiteResult suite_lemma12(const std::string& range) {
    SuiteResult res;
    const auto [lo, hi] = parse_range(range, 3, 4);
    for (int n = lo; n <= hi; ++n) {
        int best = -1;
        for_each_word(n, [&](const SurfaceWord& w) {
            best = std::max(best, genus_by_corner_orbits(w));
        });
        ++res.checks;
        if (best != n / 2)
            fail(res, "census max for n=" + std::to_string(n) + " is " + std::to_string(best));
        // the canonical word a1..an a1^-1..an^-1 attains it
        std::ostringstream w;
        for (int i = 1; i <= n; ++i) w << "a" << i << ' ';
        for (int i = 1; i <= n; ++i) w << "a" << i << "^-1 ";
        ++res.checks;
        if (genus_by_corner_orbits(parse_word(w.str())) != n / 2)
            fail(res, "canonical word misses the maximum for n=" + std::to_string(n));
    }
    return res;
}

SuiteResult suite_lemma13(const std::string& range, const GenusOptions& opts) {
    SuiteResult res;
    std::vector<std::string> fixtures;
    if (range.empty() || range == "all") fixtures = {"k4", "gadgethost"};
    else fixtures = {range};
    for (const auto& name : fixtures) {
        Multigraph g;
        if (name == "k4") g = builtin_graph("k4");
        else if (name == "gadgethost") g = generate(parse_family_spec("extspiral:3,1:1-2"));
        else throw input_error("lemma1.3 range must be k4|gadgethost|all");
        for (const auto& [e, uv] : g.edges()) {
            if (uv.first == uv.second) continue;
            const Multigraph h = contract_edge(g, e);
            if (!is_connected(h)) continue;
            const int merged = std::min(uv.first, uv.second);
            const int deg = h.degree(merged);
            if (deg < 4) continue;
            const int original = max_genus_exhaustive(h, opts).max_genus;
            const int beta_h = betti(h);
            const auto ends = h.incident_ends(merged);
            // all 2-element first blocks; for even degree 4 fix ends[0]
            // in block1 so each unordered 2/2 partition appears once
            std::vector<std::vector<EdgeEnd>> blocks;
            for (std::size_t a = 0; a < ends.size(); ++a)
                for (std::size_t b = a + 1; b < ends.size(); ++b) {
                    if (deg == 4 && a != 0) continue;
                    blocks.push_back({ends[a], ends[b]});
                }
            for (const auto& block : blocks) {
                auto split = split_vertex(h, merged, block);
                ++res.checks;
                if (betti(split.graph) != beta_h) {
                    fail(res, name + ": split changed the Betti number");
                    continue;
                }
                const int got = max_genus_exhaustive(split.graph, opts).max_genus;
                if (got > original)
                    fail(res, name + ": split raised genus " + std::to_string(original) +
                                  " -> " + std::to_string(got));
            }
        }
    }
    return res;
}

SuiteResult suite_correspondence(const std::string& range) {
    SuiteResult res;
    std::vector<std::string> names;
    if (range.empty()) names = {"k4"};
    else {
        std::istringstream in(range);
        std::string tok;
        while (std::getline(in, tok, ',')) names.push_back(tok);
    }
    for (const auto& name : names) {
        const Multigraph g = builtin_graph(name);
        const SpanningTree t = spanning_tree(g);
        const std::uint64_t total = rotation_count(g);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const auto r = rotation_from_index(g, idx);
            const int by_face = face_trace_genus(g, r);
            const auto surf = associated_surface(g, t, r);
            ++res.checks;
            if (genus_by_corner_orbits(surf.word) != by_face ||
                reduce_to_standard(surf.word).genus != by_face)
                fail(res, name + ": mismatch at rotation " + std::to_string(idx));
        }
    }
    return res;
}

int oracle_genus(const Multigraph& g, const GenusOptions& opts) {
    return max_genus_exhaustive(g, opts).max_genus;
}

SuiteResult suite_thm21(const std::string& range, const GenusOptions& opts) {
    SuiteResult res;
    auto drop_check = [&](const std::string& tag, const Multigraph& g, int v, int expect_drop) {
        const Multigraph rest = delete_vertex(g, v);
        ++res.checks;
        if (!is_connected(rest)) {
            fail(res, tag + ": deletion disconnected the graph");
            return;
        }
        const int before = oracle_genus(g, opts);
        const int after = oracle_genus(rest, opts);
        if (before - after != expect_drop)
            fail(res, tag + ": genus " + std::to_string(before) + " -> " +
                          std::to_string(after));
    };

    std::string kind = range.empty() ? "all" : range.substr(0, range.find(':'));
    std::string rest = range.find(':') == std::string::npos ? "" : range.substr(range.find(':') + 1);

    if (kind == "all" || kind == "alpha") {
        auto g = generate(parse_family_spec("cycle:3"));
        const int v = g.add_vertex();
        g.add_edge(v, v);
        g.add_edge(v, 1);
        drop_check("alpha", g, v, 0);
    }
    if (kind == "all" || kind == "beta") {
        auto g = builtin_graph("k4");
        int e34 = -1;
        for (const auto& [e, uv] : g.edges())
            if (uv.first == 3 && uv.second == 4) e34 = e;
        g.remove_edge(e34);
        const int u = g.add_vertex();
        const int w = g.add_vertex();
        g.add_edge(3, u);
        g.add_edge(u, w);
        g.add_edge(u, w);
        g.add_edge(w, 4);
        const auto found = detect_beta(g);
        if (found.empty()) fail(res, "beta: fixture not detected");
        else drop_check("beta", g, found.front().vertex, 1);
    }
    if (kind == "all" || kind == "gamma") {
        auto g = generate(parse_family_spec("cycle:4"));
        const int v = g.add_vertex();
        const int u = g.add_vertex();
        g.add_edge(v, u);
        g.add_edge(v, 1);
        g.add_edge(v, 3);
        g.add_edge(u, 1);
        g.add_edge(u, 3);
        const auto found = detect_gamma(g);
        if (found.empty()) fail(res, "gamma: fixture not detected");
        else drop_check("gamma", g, found.front().vertex, 1);
    }
    if (kind == "all" || kind == "mobius") {
        const auto [lo, hi] = parse_range(kind == "all" ? "" : rest, 2, 3);
        for (int n = lo; n <= hi; ++n)
            drop_check("mobius:" + std::to_string(n),
                       generate(parse_family_spec("mobius:" + std::to_string(n))), 1, 1);
    }
    if (kind == "all" || kind == "neckband") {
        const auto [lo, hi] = parse_range(kind == "all" ? "" : rest, 2, 4);
        for (int n = lo; n <= hi; ++n)
            drop_check("neckband:" + std::to_string(n),
                       generate(parse_family_spec("neckband:" + std::to_string(n))), 1, 1);
    }
    if (res.checks == 0) throw input_error("thm2.1 range: all|alpha|beta|gamma|mobius:a..b|neckband:a..b");
    return res;
}

std::pair<int, std::pair<int, int>> parse_spiral_range(const std::string& range, int def_m,
                                                       int def_lo, int def_hi) {
    if (range.empty()) return {def_m, {def_lo, def_hi}};
    const auto colon = range.find(':');
    if (colon == std::string::npos) return {def_m, parse_range(range, def_lo, def_hi)};
    return {std::stoi(range.substr(0, colon)),
            parse_range(range.substr(colon + 1), def_lo, def_hi)};
}

SuiteResult suite_thm31(const std::string& range, const GenusOptions& opts) {
    SuiteResult res;
    const auto [m, bounds] = parse_spiral_range(range, 5, 1, 7);
    for (int n = bounds.first; n <= bounds.second; ++n) {
        const auto spec = std::to_string(m) + "," + std::to_string(n);
        const auto g = generate(parse_family_spec("spiral:" + spec));
        ++res.checks;
        const auto rep = max_genus_exhaustive(g, opts);
        if (rep.max_genus != (n + 1) / 2 || !rep.upper_embeddable)
            fail(res, "spiral:" + spec + " genus " + std::to_string(rep.max_genus));
    }
    return res;
}

SuiteResult suite_thm32(const std::string& range, const GenusOptions& opts) {
    SuiteResult res;
    const auto [m, bounds] = parse_spiral_range(range, 5, 3, 7);
    for (int n = std::max(3, bounds.first); n <= bounds.second; ++n) {
        const auto spec = std::to_string(m) + "," + std::to_string(n);
        const auto g = generate(parse_family_spec("spiral:" + spec));
        const int v = g.find_vertex_by_label("v" + std::to_string(m + 2 * n - 2));
        ++res.checks;
        if (v == -1) {
            fail(res, "spiral:" + spec + " missing frontier vertex label");
            continue;
        }
        const auto rest = delete_vertex(g, v);
        if (!is_connected(rest)) {
            fail(res, "spiral:" + spec + " deletion disconnected");
            continue;
        }
        const int before = oracle_genus(g, opts);
        const int after = oracle_genus(rest, opts);
        if (after != before - 1)
            fail(res, "spiral:" + spec + " genus " + std::to_string(before) + " -> " +
                          std::to_string(after));
    }
    return res;
}

} // namespace

Multigraph builtin_graph(const std::string& name) {
    if (name == "k4") return generate(parse_family_spec("mobius:2"));
    if (name == "m6") return generate(parse_family_spec("mobius:3"));
    if (name == "n8") return generate(parse_family_spec("neckband:4"));
    if (name == "c5chords") {
        auto g = generate(parse_family_spec("cycle:5"));
        g.add_edge(1, 3);
        g.add_edge(2, 4);
        return g;
    }
    throw input_error("unknown builtin graph '" + name + "'");
}

SuiteResult run_suite(const std::string& suite, const std::string& range, unsigned seed,
                      const GenusOptions& opts) {
    if (suite == "lemma1.1") return suite_lemma11(range, seed);
    if (suite == "lemma1.2") return suite_lemma12(range);
    if (suite == "lemma1.3") return suite_lemma13(range, opts);
    if (suite == "thm2.1") return suite_thm21(range, opts);
    if (suite == "thm3.1") return suite_thm31(range, opts);
    if (suite == "thm3.2") return suite_thm32(range, opts);
    if (suite == "correspondence") return suite_correspondence(range);
    throw input_error("unknown suite '" + suite + "'");
}

} // namespace mg
