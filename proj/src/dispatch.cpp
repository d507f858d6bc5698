#include "roman/dispatch.hpp"

#include "roman/chordal_enum.hpp"
#include "roman/classes.hpp"
#include "roman/forest_enum.hpp"
#include "roman/interval_enum.hpp"
#include "roman/oracle.hpp"
#include "roman/split_cobip.hpp"

namespace roman {

std::optional<GraphClass> graph_class_from_name(const std::string& name) {
    if (name == "auto") return GraphClass::Auto;
    if (name == "split") return GraphClass::Split;
    if (name == "cobipartite") return GraphClass::Cobipartite;
    if (name == "interval") return GraphClass::Interval;
    if (name == "forest") return GraphClass::Forest;
    if (name == "chordal") return GraphClass::Chordal;
    if (name == "oracle") return GraphClass::Oracle;
    return std::nullopt;
}

std::string graph_class_name(GraphClass c) {
    switch (c) {
        case GraphClass::Auto: return "auto";
        case GraphClass::Split: return "split";
        case GraphClass::Cobipartite: return "cobipartite";
        case GraphClass::Interval: return "interval";
        case GraphClass::Forest: return "forest";
        case GraphClass::Chordal: return "chordal";
        case GraphClass::Oracle: return "oracle";
    }
    return "?";
}

EnumerateOutcome enumerate_by_class(const Graph& g, const std::optional<IntervalRepresentation>& rep,
                                    GraphClass requested, int oracle_cap, const FunctionSink& sink) {
    EnumerateOutcome outcome;
    switch (requested) {
        case GraphClass::Forest:
            if (!is_forest(g)) throw ClassMismatchError("input has a cycle, not a forest");
            outcome.used = GraphClass::Forest;
            outcome.stats = enumerate_forest(g, sink);
            return outcome;
        case GraphClass::Split: {
            auto part = is_split(g);
            if (!part) throw ClassMismatchError("no clique/independent-set partition found");
            outcome.used = GraphClass::Split;
            outcome.stats = enumerate_split(g, *part, sink);
            return outcome;
        }
        case GraphClass::Cobipartite: {
            auto part = is_cobipartite(g);
            if (!part) throw ClassMismatchError("complement is not bipartite");
            outcome.used = GraphClass::Cobipartite;
            outcome.stats = enumerate_cobipartite(g, *part, sink);
            return outcome;
        }
        case GraphClass::Chordal:
            if (!is_chordal(g)) throw ClassMismatchError("no perfect elimination ordering exists");
            outcome.used = GraphClass::Chordal;
            outcome.stats = enumerate_chordal(g, sink);
            return outcome;
        case GraphClass::Interval: {
            if (!rep) throw ClassMismatchError("interval enumeration needs a representation");
            outcome.used = GraphClass::Interval;
            outcome.stats = enumerate_interval(g, *rep, sink);
            return outcome;
        }
        case GraphClass::Oracle: {
            outcome.used = GraphClass::Oracle;
            oracle_enumerate(g, sink, oracle_cap);
            return outcome;
        }
        case GraphClass::Auto: break;
    }
    if (is_forest(g)) return enumerate_by_class(g, rep, GraphClass::Forest, oracle_cap, sink);
    if (is_split(g)) return enumerate_by_class(g, rep, GraphClass::Split, oracle_cap, sink);
    if (is_cobipartite(g)) return enumerate_by_class(g, rep, GraphClass::Cobipartite, oracle_cap, sink);
    if (is_chordal(g)) return enumerate_by_class(g, rep, GraphClass::Chordal, oracle_cap, sink);
    return enumerate_by_class(g, rep, GraphClass::Oracle, oracle_cap, sink);
}

}  // namespace roman
