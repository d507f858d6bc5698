#pragma once

#include <optional>
#include <random>
#include <string>

#include "roman/graph.hpp"

namespace roman {

struct GeneratedGraph {
    Graph graph;
    std::optional<IntervalRepresentation> intervals;
};

// Deterministic families. Size is n for path/cycle/star and the number of
// components or matched pairs for p2_forest/split_lb/cobip_lb.
GeneratedGraph generate_path(int n);          // P_n, intervals [i, i+1]
GeneratedGraph generate_cycle(int n);         // C_n (no intervals)
GeneratedGraph generate_star(int n);          // K_{1,n}, center 0, with intervals
GeneratedGraph generate_p2_forest(int k);     // k disjoint edges, with intervals
GeneratedGraph generate_split_lb(int k);      // K_k plus a pendant per clique vertex
GeneratedGraph generate_cobip_lb(int k);      // two K_k joined by a perfect matching

// Dispatch by family name ("path", "cycle", "star", "p2_forest",
// "split_lb", "cobip_lb"); throws std::invalid_argument on unknown names.
GeneratedGraph generate_family(const std::string& family, int size);

using Rng = std::mt19937_64;

Graph random_tree(int n, Rng& rng);
// Union of random trees with component sizes >= 3 (plus one smaller
// remainder component only when n < 3).
Graph random_forest(int n, Rng& rng);
GeneratedGraph random_interval_graph(int n, Rng& rng);
Graph random_split_graph(int n, Rng& rng);
Graph random_cobipartite_graph(int n, Rng& rng);
// Grown by attaching each new vertex to a random existing clique of size
// <= k; every insertion is simplicial, so the result is chordal.
Graph random_chordal_graph(int n, int k, Rng& rng);
Graph random_graph(int n, double edge_probability, Rng& rng);

}  // namespace roman
