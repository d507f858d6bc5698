#include "roman/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace roman {

namespace {

void require_size(int s, const char* what) {
    if (s < 1) throw std::invalid_argument(std::string(what) + ": size parameter must be >= 1");
}

}  // namespace

GeneratedGraph generate_path(int n) {
    require_size(n, "path");
    Graph g(n);
    IntervalRepresentation rep;
    for (Vertex v = 0; v < n; ++v) {
        if (v + 1 < n) g.add_edge(v, v + 1);
        rep.intervals.emplace_back(v, v + 1);
    }
    return {std::move(g), std::move(rep)};
}

GeneratedGraph generate_cycle(int n) {
    require_size(n, "cycle");
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    if (n >= 3) g.add_edge(n - 1, 0);
    return {std::move(g), std::nullopt};
}

GeneratedGraph generate_star(int n) {
    require_size(n, "star");
    Graph g(n + 1);
    IntervalRepresentation rep;
    rep.intervals.emplace_back(0.0, 3.0 * n + 1.0);  // center spans all leaves
    for (Vertex leaf = 1; leaf <= n; ++leaf) {
        g.add_edge(0, leaf);
        rep.intervals.emplace_back(3.0 * leaf - 2.0, 3.0 * leaf - 1.0);
    }
    return {std::move(g), std::move(rep)};
}

GeneratedGraph generate_p2_forest(int k) {
    require_size(k, "p2_forest");
    Graph g(2 * k);
    IntervalRepresentation rep;
    for (int i = 0; i < k; ++i) {
        g.add_edge(2 * i, 2 * i + 1);
        rep.intervals.emplace_back(3.0 * i, 3.0 * i + 1.0);
        rep.intervals.emplace_back(3.0 * i + 0.5, 3.0 * i + 1.5);
    }
    return {std::move(g), std::move(rep)};
}

GeneratedGraph generate_split_lb(int k) {
    require_size(k, "split_lb");
    Graph g(2 * k);  // clique 0..k-1, independent k..2k-1
    for (Vertex u = 0; u < k; ++u) {
        for (Vertex v = u + 1; v < k; ++v) g.add_edge(u, v);
        g.add_edge(u, k + u);
    }
    return {std::move(g), std::nullopt};
}

GeneratedGraph generate_cobip_lb(int k) {
    require_size(k, "cobip_lb");
    Graph g(2 * k);  // cliques 0..k-1 and k..2k-1
    for (Vertex u = 0; u < k; ++u) {
        for (Vertex v = u + 1; v < k; ++v) {
            g.add_edge(u, v);
            g.add_edge(k + u, k + v);
        }
        g.add_edge(u, k + u);
    }
    return {std::move(g), std::nullopt};
}

GeneratedGraph generate_family(const std::string& family, int size) {
    if (family == "path") return generate_path(size);
    if (family == "cycle") return generate_cycle(size);
    if (family == "star") return generate_star(size);
    if (family == "p2_forest") return generate_p2_forest(size);
    if (family == "split_lb") return generate_split_lb(size);
    if (family == "cobip_lb") return generate_cobip_lb(size);
    throw std::invalid_argument("unknown family: " + family);
}

Graph random_tree(int n, Rng& rng) {
    require_size(n, "random_tree");
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        g.add_edge(v, pick(rng));
    }
    return g;
}

Graph random_forest(int n, Rng& rng) {
    require_size(n, "random_forest");
    Graph g(n);
    int placed = 0;
    while (placed < n) {
        int remaining = n - placed;
        int size = remaining;
        if (remaining > 3) {
            std::uniform_int_distribution<int> pick(3, std::min(remaining, std::max(3, n / 2)));
            size = pick(rng);
            if (remaining - size > 0 && remaining - size < 3) size = remaining;
        }
        for (Vertex v = 1; v < size; ++v) {
            std::uniform_int_distribution<Vertex> pick(0, v - 1);
            g.add_edge(placed + v, placed + pick(rng));
        }
        placed += size;
    }
    return g;
}

GeneratedGraph random_interval_graph(int n, Rng& rng) {
    require_size(n, "random_interval");
    IntervalRepresentation rep;
    std::uniform_int_distribution<int> left(0, 4 * n);
    std::uniform_int_distribution<int> len(0, n + 2);
    for (int i = 0; i < n; ++i) {
        int l = left(rng);
        rep.intervals.emplace_back(l, l + len(rng));
    }
    Graph g = graph_from_intervals(rep);
    return {std::move(g), std::move(rep)};
}

Graph random_split_graph(int n, Rng& rng) {
    require_size(n, "random_split");
    std::uniform_int_distribution<int> csize(1, n);
    int c = csize(rng);
    Graph g(n);
    std::bernoulli_distribution cross(0.5);
    for (Vertex u = 0; u < c; ++u)
        for (Vertex v = u + 1; v < c; ++v) g.add_edge(u, v);
    for (Vertex i = c; i < n; ++i)
        for (Vertex u = 0; u < c; ++u)
            if (cross(rng)) g.add_edge(i, u);
    return g;
}

Graph random_cobipartite_graph(int n, Rng& rng) {
    require_size(n, "random_cobipartite");
    std::uniform_int_distribution<int> xsize(1, n - 1 >= 1 ? n - 1 : 1);
    int x = n == 1 ? 1 : xsize(rng);
    Graph g(n);
    std::bernoulli_distribution cross(0.5);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            bool same_side = (u < x) == (v < x);
            if (same_side || cross(rng)) g.add_edge(u, v);
        }
    return g;
}

Graph random_chordal_graph(int n, int k, Rng& rng) {
    require_size(n, "random_chordal");
    if (k < 1) throw std::invalid_argument("random_chordal: k must be >= 1");
    Graph g(n);
    // Cliques available as attachment bases; grown like a k-tree with
    // occasional smaller (leaf-like) attachments.
    std::vector<std::vector<Vertex>> cliques;
    int base = std::min(n, k + 1);
    std::vector<Vertex> first;
    for (Vertex v = 0; v < base; ++v) {
        for (Vertex u = 0; u < v; ++u) g.add_edge(u, v);
        first.push_back(v);
    }
    cliques.push_back(first);
    for (Vertex v = base; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick_clique(0, cliques.size() - 1);
        std::vector<Vertex> host = cliques[pick_clique(rng)];
        std::uniform_int_distribution<int> pick_size(1, std::min<int>(k, static_cast<int>(host.size())));
        int s = pick_size(rng);
        std::shuffle(host.begin(), host.end(), rng);
        host.resize(s);
        for (Vertex u : host) g.add_edge(u, v);
        host.push_back(v);
        cliques.push_back(std::move(host));
    }
    return g;
}

Graph random_graph(int n, double edge_probability, Rng& rng) {
    require_size(n, "random_graph");
    Graph g(n);
    std::bernoulli_distribution coin(edge_probability);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace roman
