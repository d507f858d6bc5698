#pragma once

#include "roman/classes.hpp"
#include "roman/engine.hpp"

namespace roman {

// Enumerates all minimal functions of a split graph. The 2-set lies fully in
// the clique or fully in the independent set; clique-side solutions are
// swept per anchor (the smallest 2-vertex), independent-side solutions by
// the degree-driven case analysis. Every leaf passes the minimality filter.
EngineStats enumerate_split(const Graph& g, const SplitPartition& partition,
                            const FunctionSink& sink);

// Cobipartite analogue: single-side sweeps over either clique, the all-1
// function, and the mixed pairs with one 2 per side.
EngineStats enumerate_cobipartite(const Graph& g, const CobipartitePartition& partition,
                                  const FunctionSink& sink);

}  // namespace roman
