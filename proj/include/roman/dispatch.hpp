#pragma once

#include <optional>
#include <string>

#include "roman/engine.hpp"
#include "roman/graph.hpp"

namespace roman {

enum class GraphClass { Auto, Split, Cobipartite, Interval, Forest, Chordal, Oracle };

std::optional<GraphClass> graph_class_from_name(const std::string& name);
std::string graph_class_name(GraphClass c);

struct ClassMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerateOutcome {
    GraphClass used = GraphClass::Oracle;
    EngineStats stats;
};

// Runs the requested enumerator (Auto probes forest, split, cobipartite,
// chordal in that order and falls back to the subset oracle; the interval
// algorithm is never auto-selected because it needs the representation).
// Throws ClassMismatchError when the input fails the requested recognizer
// and OracleCapExceeded when only the oracle applies and n exceeds the cap.
EnumerateOutcome enumerate_by_class(const Graph& g, const std::optional<IntervalRepresentation>& rep,
                                    GraphClass requested, int oracle_cap, const FunctionSink& sink);

}  // namespace roman
