#include "roman/split_cobip.hpp"

#include <algorithm>

namespace roman {

namespace {

constexpr std::int8_t kUnset = -1;

class SideSweep {
public:
    // side[v]: 0 = clique side under sweep (K), 1 = opposite side (O),
    // -1 = not part of this sweep (impossible here; kept for clarity).
    SideSweep(const Graph& g, std::vector<std::int8_t> side, const FunctionSink& sink,
              EngineStats& stats)
        : g_(g), side_(std::move(side)), sink_(&sink), stats_(&stats) {}

    // Clique-side sweep: anchor is the smallest 2-vertex; smaller clique
    // vertices can only take 0. Leaves with fewer than two 2s are covered by
    // the singleton pass and skipped.
    void run_clique_case(Vertex anchor, std::vector<std::int8_t> f) {
        f[anchor] = 2;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (side_[v] == 0 && v < anchor && f[v] == kUnset) f[v] = 0;
        for (Vertex u : g_.neighbors(anchor))
            if (side_[u] == 1 && f[u] == kUnset) f[u] = 0;
        descend_clique(std::move(f));
    }

    // Opposite-side case (2s on the independent / opposite side, possibly
    // none at all).
    void run_other_case(std::vector<std::int8_t> f) { descend_other(std::move(f)); }

private:
    int unset_neighbors_on(Vertex v, int side, const std::vector<std::int8_t>& f) const {
        int count = 0;
        for (Vertex u : g_.neighbors(v))
            if (side_[u] == side && f[u] == kUnset) ++count;
        return count;
    }

    Vertex first_unset_neighbor_on(Vertex v, int side, const std::vector<std::int8_t>& f) const {
        for (Vertex u : g_.neighbors(v))
            if (side_[u] == side && f[u] == kUnset) return u;
        return -1;
    }

    void descend_clique(std::vector<std::int8_t> f) {
        ++stats_->nodes;
        // A clique vertex whose opposite-side neighborhood is spent cannot
        // reach a private vertex anymore: it takes 0.
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < g_.order(); ++v)
                if (side_[v] == 0 && f[v] == kUnset && unset_neighbors_on(v, 1, f) == 0) {
                    f[v] = 0;
                    changed = true;
                }
        }
        // Branch on a clique vertex with two or more fresh opposite
        // neighbors.
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (side_[v] != 0 || f[v] != kUnset || unset_neighbors_on(v, 1, f) < 2) continue;
            auto take = f;
            take[v] = 2;
            for (Vertex u : g_.neighbors(v))
                if (side_[u] == 1 && take[u] == kUnset) take[u] = 0;
            descend_clique(std::move(take));
            f[v] = 0;
            descend_clique(std::move(f));
            return;
        }
        // Every remaining clique vertex has exactly one fresh opposite
        // neighbor.
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (side_[v] != 0 || f[v] != kUnset) continue;
            Vertex w = first_unset_neighbor_on(v, 1, f);
            std::vector<Vertex> others;
            for (Vertex x : g_.neighbors(w))
                if (side_[x] == 0 && x != v && f[x] == kUnset) others.push_back(x);
            auto take = f;
            take[v] = 2;
            take[w] = 0;
            for (Vertex x : others) take[x] = 0;  // their only private candidate is spent
            descend_clique(std::move(take));
            if (others.empty()) {
                f[v] = 0;
                f[w] = 1;  // w can never be dominated now
            } else {
                f[v] = 0;
            }
            descend_clique(std::move(f));
            return;
        }
        // Leaf: fresh opposite vertices have no 2-neighbor and take 1.
        for (Vertex v = 0; v < g_.order(); ++v)
            if (f[v] == kUnset) f[v] = 1;
        emit(f, /*required_twos=*/2);
    }

    void descend_other(std::vector<std::int8_t> f) {
        ++stats_->nodes;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < g_.order(); ++v) {
                if (f[v] != kUnset) continue;
                // Opposite vertices cut off from fresh clique vertices take
                // 1; clique vertices cut off from the opposite side do too.
                int other_side = side_[v] == 1 ? 0 : 1;
                if (unset_neighbors_on(v, other_side, f) == 0) {
                    f[v] = 1;
                    changed = true;
                }
            }
        }
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (side_[v] != 1 || f[v] != kUnset || unset_neighbors_on(v, 0, f) < 2) continue;
            auto take = f;
            take[v] = 2;
            for (Vertex u : g_.neighbors(v))
                if (side_[u] == 0 && take[u] == kUnset) take[u] = 0;
            descend_other(std::move(take));
            f[v] = 1;
            descend_other(std::move(f));
            return;
        }
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (side_[v] != 1 || f[v] != kUnset) continue;
            Vertex w = first_unset_neighbor_on(v, 0, f);
            std::vector<Vertex> others;
            for (Vertex x : g_.neighbors(w))
                if (side_[x] == 1 && x != v && f[x] == kUnset) others.push_back(x);
            auto take = f;
            take[v] = 2;
            take[w] = 0;
            for (Vertex x : others) take[x] = 1;  // w is spent as their dominator
            descend_other(std::move(take));
            f[v] = 1;
            if (others.empty()) f[w] = 1;
            descend_other(std::move(f));
            return;
        }
        for (Vertex v = 0; v < g_.order(); ++v)
            if (f[v] == kUnset) f[v] = 1;
        emit(f, /*required_twos=*/0);
    }

    void emit(const std::vector<std::int8_t>& f, int required_twos) {
        ++stats_->leaves;
        RomanFunction out(g_.order());
        int twos = 0;
        for (Vertex v = 0; v < g_.order(); ++v) {
            out[v] = static_cast<std::uint8_t>(f[v]);
            if (f[v] == 2) ++twos;
        }
        if (twos < required_twos) return;
        if (!is_minimal_rdf(g_, out)) return;
        ++stats_->emitted;
        (*sink_)(out);
    }

    const Graph& g_;
    std::vector<std::int8_t> side_;
    const FunctionSink* sink_;
    EngineStats* stats_;
};

std::vector<std::int8_t> side_vector(int n, const std::vector<Vertex>& clique_side,
                                     const std::vector<Vertex>& other_side) {
    std::vector<std::int8_t> side(n, kUnset);
    for (Vertex v : clique_side) side[v] = 0;
    for (Vertex v : other_side) side[v] = 1;
    return side;
}

void validate_cover(int n, std::size_t side_a, std::size_t side_b,
                    const std::vector<std::int8_t>& side, const char* what) {
    if (side_a + side_b != static_cast<std::size_t>(n))
        throw std::invalid_argument(std::string(what) + ": partition sides do not partition V");
    for (Vertex v = 0; v < n; ++v)
        if (side[v] == kUnset)
            throw std::invalid_argument(std::string(what) + ": partition misses vertex " +
                                        std::to_string(v));
}

void check_clique(const Graph& g, const std::vector<Vertex>& vs, const char* what) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j]))
                throw std::invalid_argument(std::string(what) + ": side is not a clique");
}

void check_independent(const Graph& g, const std::vector<Vertex>& vs, const char* what) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j]))
                throw std::invalid_argument(std::string(what) + ": side is not independent");
}

void emit_candidate(const Graph& g, const std::vector<Vertex>& two_set, EngineStats& stats,
                    const FunctionSink& sink) {
    ++stats.leaves;
    RomanFunction f = from_v2(g, two_set);
    if (!is_minimal_rdf(g, f)) return;
    ++stats.emitted;
    sink(f);
}

}  // namespace

EngineStats enumerate_split(const Graph& g, const SplitPartition& partition,
                            const FunctionSink& sink) {
    auto side = side_vector(g.order(), partition.clique, partition.independent);
    validate_cover(g.order(), partition.clique.size(), partition.independent.size(), side,
                   "enumerate_split");
    check_clique(g, partition.clique, "enumerate_split");
    check_independent(g, partition.independent, "enumerate_split");

    EngineStats stats;
    // Exactly one 2 in the clique.
    for (Vertex c : partition.clique) emit_candidate(g, {c}, stats, sink);
    // Two or more 2s in the clique, anchored at the smallest one.
    SideSweep sweep(g, side, sink, stats);
    std::vector<std::int8_t> blank(g.order(), kUnset);
    for (Vertex anchor : partition.clique) sweep.run_clique_case(anchor, blank);
    // All 2s (possibly none) on the independent side.
    sweep.run_other_case(blank);
    return stats;
}

EngineStats enumerate_cobipartite(const Graph& g, const CobipartitePartition& partition,
                                  const FunctionSink& sink) {
    auto side_x = side_vector(g.order(), partition.x, partition.y);
    validate_cover(g.order(), partition.x.size(), partition.y.size(), side_x,
                   "enumerate_cobipartite");
    check_clique(g, partition.x, "enumerate_cobipartite");
    check_clique(g, partition.y, "enumerate_cobipartite");

    EngineStats stats;
    emit_candidate(g, {}, stats, sink);  // the all-1 function
    for (Vertex x : partition.x) emit_candidate(g, {x}, stats, sink);
    for (Vertex y : partition.y) emit_candidate(g, {y}, stats, sink);
    std::vector<std::int8_t> blank(g.order(), kUnset);
    SideSweep sweep_x(g, side_x, sink, stats);
    for (Vertex anchor : partition.x) sweep_x.run_clique_case(anchor, blank);
    auto side_y = side_vector(g.order(), partition.y, partition.x);
    SideSweep sweep_y(g, side_y, sink, stats);
    for (Vertex anchor : partition.y) sweep_y.run_clique_case(anchor, blank);
    for (Vertex x : partition.x)
        for (Vertex y : partition.y) emit_candidate(g, {x, y}, stats, sink);
    return stats;
}

}  // namespace roman
