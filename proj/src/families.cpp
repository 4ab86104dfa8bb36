#include "maxgenus/families.hpp"

#include "maxgenus/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace mg {

namespace {

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw input_error("expected an integer, got '" + s + "'");
    }
    if (used != s.size()) throw input_error("expected an integer, got '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, sep)) out.push_back(part);
    return out;
}

void add_labeled_cycle(Multigraph& g, int count) {
    for (int i = 1; i <= count; ++i) {
        g.add_vertex(i);
        g.vertex_labels[i] = "v" + std::to_string(i);
    }
    for (int i = 1; i <= count; ++i) g.add_edge(i, i % count + 1);
}

int spiral_ear_endpoint(int m, int i) { return i <= m - 1 ? i : 2 * i - m + 1; }

Multigraph make_spiral(int m, int n) {
    if (m < 3 || n < 1) throw input_error("spiral needs m >= 3, n >= 1");
    Multigraph g;
    add_labeled_cycle(g, m);
    for (int i = 1; i <= n; ++i) {
        const int a = m + 2 * i - 1, b = m + 2 * i;
        g.add_vertex(a);
        g.add_vertex(b);
        g.vertex_labels[a] = "v" + std::to_string(a);
        g.vertex_labels[b] = "v" + std::to_string(b);
        g.add_edge(m + 2 * i - 2, a);
        g.add_edge(a, b);
        const int endpoint = spiral_ear_endpoint(m, i);
        if (endpoint >= m + 2 * i - 2)
            throw input_error("spiral ear endpoint out of range; n too large for m");
        g.add_edge(b, endpoint);
    }
    return g;
}

int find_simple_edge(const Multigraph& g, int u, int v) {
    int found = -1;
    for (const auto& [e, uv] : g.edges()) {
        if ((uv.first == u && uv.second == v) || (uv.first == v && uv.second == u)) {
            if (found != -1) throw input_error("gadget edge is parallel, ambiguous");
            found = e;
        }
    }
    if (found == -1)
        throw input_error("no edge between v" + std::to_string(u) + " and v" + std::to_string(v));
    return found;
}

// Replace edge (x, y) with: path x-A-B-C, diamond C-v1, C-v2, v1-v2,
// v1-D, v2-D, path D-E-F-y, chords A-E and B-F.
void apply_gadget(Multigraph& g, int x, int y, int k) {
    g.remove_edge(find_simple_edge(g, x, y));
    auto fresh = [&](const std::string& part) {
        const int v = g.add_vertex();
        g.vertex_labels[v] = "g" + std::to_string(k) + "." + part;
        return v;
    };
    const int a = fresh("A"), b = fresh("B"), c = fresh("C");
    const int v1 = fresh("v1"), v2 = fresh("v2");
    const int d = fresh("D"), e = fresh("E"), f = fresh("F");
    g.add_edge(x, a);
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(c, v1);
    g.add_edge(c, v2);
    g.add_edge(v1, v2);
    g.add_edge(v1, d);
    g.add_edge(v2, d);
    g.add_edge(d, e);
    g.add_edge(e, f);
    g.add_edge(f, y);
    g.add_edge(a, e);
    g.add_edge(b, f);
}

std::string gadget_attr(const std::vector<std::pair<int, int>>& edges) {
    std::string out;
    for (const auto& [u, v] : edges) {
        if (!out.empty()) out += ',';
        out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
}

} // namespace

FamilySpec parse_family_spec(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() < 2) throw input_error("family spec needs 'kind:params': '" + text + "'");
    FamilySpec spec;
    const std::string& kind = parts[0];
    const auto params = split(parts[1], ',');
    if (kind == "cycle") {
        if (parts.size() != 2 || params.size() != 1)
            throw input_error("cycle spec is 'cycle:M'");
        spec.kind = FamilySpec::Kind::cycle;
        spec.m = parse_int(params[0]);
        if (spec.m < 3) throw input_error("cycle needs m >= 3");
    } else if (kind == "mobius" || kind == "neckband") {
        if (parts.size() != 2 || params.size() != 1)
            throw input_error(kind + " spec is '" + kind + ":N'");
        spec.kind = kind == "mobius" ? FamilySpec::Kind::mobius : FamilySpec::Kind::neckband;
        spec.n = parse_int(params[0]);
        if (spec.n < 2) throw input_error(kind + " needs n >= 2");
    } else if (kind == "spiral" || kind == "extspiral") {
        if (params.size() != 2) throw input_error(kind + " spec needs 'M,N'");
        spec.kind =
            kind == "spiral" ? FamilySpec::Kind::spiral : FamilySpec::Kind::extended_spiral;
        spec.m = parse_int(params[0]);
        spec.n = parse_int(params[1]);
        if (kind == "spiral" && parts.size() != 2)
            throw input_error("spiral spec is 'spiral:M,N'");
        if (kind == "extspiral") {
            if (parts.size() != 3)
                throw input_error("extspiral spec is 'extspiral:M,N:13-14,...'");
            for (const auto& token : split(parts[2], ',')) {
                const auto ends = split(token, '-');
                if (ends.size() != 2)
                    throw input_error("gadget edge must be 'i-j': '" + token + "'");
                spec.gadget_edges.emplace_back(parse_int(ends[0]), parse_int(ends[1]));
            }
            if (spec.gadget_edges.empty())
                throw input_error("extspiral needs at least one gadget edge");
        }
    } else {
        throw input_error("unknown family kind '" + kind + "'");
    }
    return spec;
}

Multigraph generate(const FamilySpec& spec) {
    Multigraph g;
    switch (spec.kind) {
    case FamilySpec::Kind::cycle:
        if (spec.m < 3) throw input_error("cycle needs m >= 3");
        add_labeled_cycle(g, spec.m);
        g.attrs["family"] = "cycle";
        g.attrs["m"] = std::to_string(spec.m);
        break;
    case FamilySpec::Kind::mobius:
        if (spec.n < 2) throw input_error("mobius needs n >= 2");
        add_labeled_cycle(g, 2 * spec.n);
        for (int i = 1; i <= spec.n; ++i) g.add_edge(i, spec.n + i);
        g.attrs["family"] = "mobius";
        g.attrs["n"] = std::to_string(spec.n);
        break;
    case FamilySpec::Kind::neckband:
        if (spec.n < 2) throw input_error("neckband needs n >= 2");
        add_labeled_cycle(g, 2 * spec.n);
        // chord a_i = (v_{2i-1}, v_{2i+2 mod 2n})
        for (int i = 1; i <= spec.n; ++i)
            g.add_edge(2 * i - 1, (2 * i + 2 - 1) % (2 * spec.n) + 1);
        g.attrs["family"] = "neckband";
        g.attrs["n"] = std::to_string(spec.n);
        break;
    case FamilySpec::Kind::spiral:
        g = make_spiral(spec.m, spec.n);
        g.attrs["family"] = "spiral";
        g.attrs["m"] = std::to_string(spec.m);
        g.attrs["n"] = std::to_string(spec.n);
        break;
    case FamilySpec::Kind::extended_spiral: {
        g = make_spiral(spec.m, spec.n);
        int k = 0;
        for (const auto& [u, v] : spec.gadget_edges) apply_gadget(g, u, v, ++k);
        g.attrs["family"] = "extspiral";
        g.attrs["m"] = std::to_string(spec.m);
        g.attrs["n"] = std::to_string(spec.n);
        g.attrs["gadgets"] = gadget_attr(spec.gadget_edges);
        break;
    }
    }
    return g;
}

Theorem31Fixture theorem31_fixture(int n) {
    if (n < 1) throw input_error("spiral ear count must be >= 1");
    Theorem31Fixture fx;
    fx.graph = make_spiral(5, n);
    fx.graph.attrs["family"] = "spiral";
    fx.graph.attrs["m"] = "5";
    fx.graph.attrs["n"] = std::to_string(n);

    if (n % 5 != 0 || n < 5) {
        fx.tree = spanning_tree(fx.graph);
        int next = 1;
        for (int e : fx.tree.cotree_edges)
            fx.cotree_names[e] = "e" + std::to_string(next++);
        return fx;
    }

    // the designated tree for n = 5j: path T1 plus the edge T2
    const int j = n / 5;
    std::vector<int> path{2, 1, 5, 4, 3};
    for (int i = 1; i <= j - 1; ++i) {
        for (int d : {10 * i + 1, 10 * i, 10 * i - 1, 10 * i - 2, 10 * i - 3, 10 * i - 4,
                      10 * i + 5, 10 * i + 4, 10 * i + 3, 10 * i + 2})
            path.push_back(d);
    }
    for (int d : {2 * n + 1, 2 * n, 2 * n - 1, 2 * n - 2, 2 * n - 3, 2 * n - 4, 2 * n + 5,
                  2 * n + 4, 2 * n + 3})
        path.push_back(d);

    std::set<int> tree_edges;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        tree_edges.insert(find_simple_edge(fx.graph, path[i], path[i + 1]));
    tree_edges.insert(find_simple_edge(fx.graph, 2 * n + 1, 2 * n + 2)); // T2
    fx.tree = spanning_tree(fx.graph, tree_edges);

    // cotree names by the published listing
    std::vector<std::pair<int, int>> cotree{{2, 3}, {2, 9}, {1, 7}};
    for (int i = 1; i <= j - 1; ++i) {
        cotree.emplace_back(10 * i - 5, 10 * i - 4); // e_{5i-1}
        cotree.emplace_back(10 * i - 6, 10 * i + 3); // e_{5i}
        cotree.emplace_back(10 * i + 1, 10 * i + 2); // e_{5i+1}
        cotree.emplace_back(10 * i, 10 * i + 9);     // e_{5i+2}
        cotree.emplace_back(10 * i - 2, 10 * i + 7); // e_{5i+3}
    }
    cotree.emplace_back(2 * n - 5, 2 * n - 4); // e_{n-1}
    cotree.emplace_back(2 * n - 6, 2 * n + 3); // e_n
    cotree.emplace_back(2 * n + 2, 2 * n + 3); // e_{n+1}
    if (cotree.size() != static_cast<std::size_t>(n + 1))
        throw internal_error("cotree listing size mismatch");
    for (std::size_t i = 0; i < cotree.size(); ++i) {
        const int e = find_simple_edge(fx.graph, cotree[i].first, cotree[i].second);
        if (tree_edges.count(e)) throw internal_error("listed cotree edge lies in the tree");
        fx.cotree_names[e] = "e" + std::to_string(i + 1);
    }
    fx.case1 = true;
    return fx;
}

FamilyReport validate_family(const Multigraph& g) {
    FamilyReport rep;
    rep.vertices = g.vertex_count();
    rep.edges = g.edge_count();
    rep.betti_number = betti(g);
    bool first = true;
    for (int v : g.vertices()) {
        const int d = g.degree(v);
        rep.min_degree = first ? d : std::min(rep.min_degree, d);
        rep.max_degree = first ? d : std::max(rep.max_degree, d);
        first = false;
    }
    rep.regular = rep.min_degree == rep.max_degree;
    return rep;
}

std::string labels_to_json(const Multigraph& g) {
    nlohmann::ordered_json j;
    auto labels = nlohmann::ordered_json::object();
    for (const auto& [v, label] : g.vertex_labels) labels[std::to_string(v)] = label;
    j["vertex_labels"] = std::move(labels);

    auto ears = nlohmann::ordered_json::array();
    if (g.attrs.count("m") && g.attrs.count("n") &&
        (g.attrs.at("family") == "spiral" || g.attrs.at("family") == "extspiral")) {
        const int m = std::stoi(g.attrs.at("m"));
        const int n = std::stoi(g.attrs.at("n"));
        for (int i = 1; i <= n; ++i) {
            ears.push_back({"v" + std::to_string(m + 2 * i - 2),
                            "v" + std::to_string(m + 2 * i - 1),
                            "v" + std::to_string(m + 2 * i),
                            "v" + std::to_string(spiral_ear_endpoint(m, i))});
        }
    }
    j["ears"] = std::move(ears);

    auto gadgets = nlohmann::ordered_json::array();
    if (auto it = g.attrs.find("gadgets"); it != g.attrs.end() && !it->second.empty()) {
        std::istringstream in(it->second);
        std::string token;
        int k = 0;
        while (std::getline(in, token, ',')) {
            nlohmann::ordered_json gd;
            gd["edge"] = token;
            auto members = nlohmann::ordered_json::array();
            const std::string prefix = "g" + std::to_string(++k) + ".";
            for (const auto& [v, label] : g.vertex_labels)
                if (label.rfind(prefix, 0) == 0) members.push_back(label);
            gd["vertices"] = std::move(members);
            gadgets.push_back(std::move(gd));
        }
    }
    j["gadgets"] = std::move(gadgets);
    return j.dump(2);
}

} // namespace mg
