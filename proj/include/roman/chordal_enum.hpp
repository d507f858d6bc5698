#pragma once

#include "roman/engine.hpp"
#include "roman/graph.hpp"

namespace roman {

// Simplicial-vertex branching with weights (0.710134, 0.434799). Requires a
// chordal input. A barred vertex whose live neighborhood holds two or more
// pendant not-1 vertices escapes every listed rule; such states go through
// the engine's generic fallback split and are counted in the stats.
EngineStats enumerate_chordal(const Graph& g, const FunctionSink& sink,
                              std::function<void(const BranchState&, Vertex)> on_fallback = {});

}  // namespace roman
