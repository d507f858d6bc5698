#pragma once

#include "roman/engine.hpp"
#include "roman/graph.hpp"

namespace roman {

// Leaf-driven branching over the merged active/not-1 label with weights
// (1, 0.57). Requires an acyclic input. Isolated two-vertex components have
// no dedicated rule and go through the engine's generic fallback split; the
// returned stats count those firings.
EngineStats enumerate_forest(const Graph& g, const FunctionSink& sink,
                             std::function<void(const BranchState&, Vertex)> on_fallback = {});

}  // namespace roman
