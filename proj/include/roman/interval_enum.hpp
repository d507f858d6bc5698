#pragma once

#include "roman/engine.hpp"
#include "roman/graph.hpp"

namespace roman {

// Leftmost-vertex branching over the interval representation with
// weights (1, 0.57). The representation must induce exactly g. Emits every
// minimal function once, in deterministic order.
EngineStats enumerate_interval(const Graph& g, const IntervalRepresentation& rep,
                               const FunctionSink& sink,
                               std::function<void(const BranchState&, Vertex)> on_fallback = {});

}  // namespace roman
