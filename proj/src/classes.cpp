#include "roman/classes.hpp"

#include <algorithm>
#include <numeric>

namespace roman {

bool is_forest(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int components = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<Vertex> stack{s};
        comp[static_cast<std::size_t>(s)] = components;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = components;
                    stack.push_back(u);
                }
            }
        }
        ++components;
    }
    // Acyclic iff every component is a tree: m = n - #components.
    return g.edge_count() == static_cast<std::size_t>(n - components);
}

namespace {

bool induces_clique(const Graph& g, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool induces_independent(const Graph& g, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) return false;
    return true;
}

}  // namespace

std::optional<SplitPartition> is_split(const Graph& g) {
    const int n = g.order();
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    // Hammer-Simeone: zero splittance at m = max{k : d_k >= k-1}. Degrees can
    // tie at the boundary, so try candidate clique sizes around m and verify.
    int m = 0;
    for (int k = 1; k <= n; ++k)
        if (g.degree(order[static_cast<std::size_t>(k - 1)]) >= k - 1) m = k;
    for (int size : {m, m - 1, m + 1}) {
        if (size < 0 || size > n) continue;
        SplitPartition part;
        part.clique.assign(order.begin(), order.begin() + size);
        part.independent.assign(order.begin() + size, order.end());
        if (induces_clique(g, part.clique) && induces_independent(g, part.independent)) {
            std::sort(part.clique.begin(), part.clique.end());
            std::sort(part.independent.begin(), part.independent.end());
            return part;
        }
    }
    return std::nullopt;
}

std::optional<CobipartitePartition> is_cobipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    // 2-color the complement graph.
    for (Vertex s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex v = queue.back();
            queue.pop_back();
            for (Vertex u = 0; u < n; ++u) {
                if (u == v || g.adjacent(u, v)) continue;  // complement edge v-u
                if (color[static_cast<std::size_t>(u)] < 0) {
                    color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
                    queue.push_back(u);
                } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    CobipartitePartition part;
    for (Vertex v = 0; v < n; ++v)
        (color[static_cast<std::size_t>(v)] == 0 ? part.x : part.y).push_back(v);
    if (!induces_clique(g, part.x) || !induces_clique(g, part.y)) return std::nullopt;
    return part;
}

std::optional<std::vector<Vertex>> is_chordal(const Graph& g) {
    const int n = g.order();
    if (n == 0) return std::vector<Vertex>{};
    // Maximum cardinality search, visiting order v_1..v_n.
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<std::uint8_t> picked(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> visit;
    visit.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!picked[static_cast<std::size_t>(v)] &&
                (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        picked[static_cast<std::size_t>(best)] = 1;
        visit.push_back(best);
        for (Vertex u : g.neighbors(best))
            if (!picked[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
    }
    // Reverse visiting order is the elimination candidate.
    std::vector<Vertex> peo(visit.rbegin(), visit.rend());
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(peo[static_cast<std::size_t>(i)])] = i;
    // Verify: the earliest later neighbor of v must see all other later
    // neighbors of v.
    for (int i = 0; i < n; ++i) {
        Vertex v = peo[static_cast<std::size_t>(i)];
        Vertex first = -1;
        for (Vertex u : g.neighbors(v))
            if (pos[static_cast<std::size_t>(u)] > i &&
                (first < 0 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(first)]))
                first = u;
        if (first < 0) continue;
        for (Vertex u : g.neighbors(v)) {
            if (u == first || pos[static_cast<std::size_t>(u)] <= i) continue;
            if (!g.adjacent(first, u)) return std::nullopt;
        }
    }
    return peo;
}

std::vector<Vertex> simplicial_vertices(const Graph& g, const std::vector<std::uint8_t>& alive) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        std::vector<Vertex> nb;
        for (Vertex u : g.neighbors(v))
            if (alive[static_cast<std::size_t>(u)]) nb.push_back(u);
        if (induces_clique(g, nb)) out.push_back(v);
    }
    return out;
}

}  // namespace roman
