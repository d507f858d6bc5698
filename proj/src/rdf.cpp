#include "roman/rdf.hpp"

#include <algorithm>
#include <stdexcept>

namespace roman {

std::vector<Vertex> RomanFunction::level_set(std::uint8_t value) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v)
        if (values[v] == value) out.push_back(v);
    return out;
}

std::string RomanFunction::to_string() const {
    std::string s(values.size(), '0');
    for (std::size_t i = 0; i < values.size(); ++i) s[i] = static_cast<char>('0' + values[i]);
    return s;
}

RomanFunction RomanFunction::from_string(const std::string& text) {
    RomanFunction f;
    f.values.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '2') throw std::invalid_argument("function text must be over {0,1,2}");
        f.values.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return f;
}

int weight(const RomanFunction& f) {
    int w = 0;
    for (auto v : f.values) w += v;
    return w;
}

bool is_rdf(const Graph& g, const RomanFunction& f) {
    if (f.order() != g.order()) throw std::invalid_argument("function length mismatch");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (f[v] != 0) continue;
        bool dominated = false;
        for (Vertex u : g.neighbors(v))
            if (f[u] == 2) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

std::vector<Vertex> private_neighborhood(const Graph& g, const std::vector<Vertex>& dominators,
                                         Vertex v) {
    if (std::find(dominators.begin(), dominators.end(), v) == dominators.end())
        throw std::invalid_argument("private_neighborhood: v must belong to the dominator set");
    std::vector<std::uint8_t> covered(g.order(), 0);
    for (Vertex d : dominators) {
        if (d == v) continue;
        covered[d] = 1;
        for (Vertex u : g.neighbors(d)) covered[u] = 1;
    }
    std::vector<Vertex> out;
    if (!covered[v]) out.push_back(v);
    for (Vertex u : g.neighbors(v))
        if (!covered[u]) out.push_back(u);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_minimal_rdf(const Graph& g, const RomanFunction& f) {
    if (f.order() != g.order()) throw std::invalid_argument("function length mismatch");
    const int n = g.order();

    // Condition 1: the closed neighborhood of V2 avoids V1 (checked in g).
    for (Vertex v = 0; v < n; ++v) {
        if (f[v] != 2) continue;
        for (Vertex u : g.neighbors(v))
            if (f[u] == 1) return false;
    }

    // cover[u] = number of V2 vertices with u in their closed G'-neighborhood,
    // where G' is induced by the 0- and 2-vertices.
    std::vector<int> cover(n, 0);
    auto in_gprime = [&](Vertex u) { return f[u] != 1; };
    for (Vertex v = 0; v < n; ++v) {
        if (f[v] != 2) continue;
        ++cover[v];
        for (Vertex u : g.neighbors(v))
            if (in_gprime(u)) ++cover[u];
    }

    // Condition 3a: V2 dominates G'.
    for (Vertex u = 0; u < n; ++u)
        if (f[u] == 0 && cover[u] == 0) return false;

    for (Vertex v = 0; v < n; ++v) {
        if (f[v] != 2) continue;
        // cover[u] == 1 with u in N_G'[v] means v is the only dominator of u.
        bool has_private_besides_self = false;
        for (Vertex u : g.neighbors(v)) {
            if (in_gprime(u) && cover[u] == 1) {
                has_private_besides_self = true;
                break;
            }
        }
        // Condition 2: a private vertex besides v itself.
        if (!has_private_besides_self) return false;
        // Condition 3b: N_G'[V2 \ {v}] != V(G'); implied here by condition 2
        // but kept as the textbook criterion.
        bool needed = cover[v] == 1 || has_private_besides_self;
        if (!needed) return false;
    }
    return true;
}

RomanFunction from_v2(const Graph& g, const std::vector<Vertex>& s) {
    RomanFunction f(g.order(), 1);
    for (Vertex v : s) f[v] = 2;
    for (Vertex v : s)
        for (Vertex u : g.neighbors(v))
            if (f[u] != 2) f[u] = 0;
    return f;
}

}  // namespace roman
