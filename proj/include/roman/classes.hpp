#pragma once

#include <optional>
#include <vector>

#include "roman/graph.hpp"

namespace roman {

bool is_forest(const Graph& g);

struct SplitPartition {
    std::vector<Vertex> clique;
    std::vector<Vertex> independent;
};

// Greedy degree-based split test; the returned partition is verified.
std::optional<SplitPartition> is_split(const Graph& g);

struct CobipartitePartition {
    std::vector<Vertex> x;
    std::vector<Vertex> y;
};

// Checks that the complement is bipartite; both sides are cliques in g.
std::optional<CobipartitePartition> is_cobipartite(const Graph& g);

// Maximum cardinality search followed by the standard elimination-order
// verification. The returned order lists vertices so that each one is
// simplicial in the subgraph induced by itself and the later vertices.
std::optional<std::vector<Vertex>> is_chordal(const Graph& g);

// Vertices of `alive` whose alive neighborhood induces a clique, ascending.
std::vector<Vertex> simplicial_vertices(const Graph& g, const std::vector<std::uint8_t>& alive);

}  // namespace roman
