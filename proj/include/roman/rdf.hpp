#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roman/graph.hpp"

namespace roman {

// Total assignment V -> {0,1,2} in vertex order.
struct RomanFunction {
    std::vector<std::uint8_t> values;

    RomanFunction() = default;
    explicit RomanFunction(int n, std::uint8_t fill = 0) : values(n, fill) {}

    int order() const { return static_cast<int>(values.size()); }
    std::uint8_t operator[](Vertex v) const { return values[v]; }
    std::uint8_t& operator[](Vertex v) { return values[v]; }

    std::vector<Vertex> level_set(std::uint8_t value) const;

    // Text form: one character per vertex over {0,1,2}, e.g. "0201".
    std::string to_string() const;
    static RomanFunction from_string(const std::string& text);

    auto operator<=>(const RomanFunction&) const = default;
};

// |V1| + 2 |V2|
int weight(const RomanFunction& f);

// Every 0-vertex has a neighbor with value 2.
bool is_rdf(const Graph& g, const RomanFunction& f);

// N[v] \ N[D \ {v}]; requires v in D.
std::vector<Vertex> private_neighborhood(const Graph& g, const std::vector<Vertex>& dominators,
                                         Vertex v);

// The three-condition minimality test on G' = G[V0 u V2]:
//   1. no 1-vertex is in the closed neighborhood of V2,
//   2. each v in V2 keeps a private vertex besides itself in G',
//   3. V2 is a minimal dominating set of G'.
bool is_minimal_rdf(const Graph& g, const RomanFunction& f);

// The unique candidate with V2 = S: 2 on S, 0 on N(S) \ S, 1 elsewhere.
RomanFunction from_v2(const Graph& g, const std::vector<Vertex>& s);

}  // namespace roman
