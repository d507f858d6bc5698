#include "roman/interval_enum.hpp"

#include <algorithm>
#include <cassert>

namespace roman {

namespace {

// Rule indices, aligned with mc::interval_rules().
enum IntervalRule {
    kDominatedVertex = 0,   // leftmost not-1 vertex: skip or take 2
    kNoActiveNeighbor = 1,  // leftmost active vertex with no active neighbor
    kTwoActiveNeighbors = 2,
    kPairWithBarred = 3,
    kPendantOnHub = 4,
    kPathPairPendant = 5,
    kPathTriple = 6,
    kBarredLeftmost = 7,
};

class IntervalSelector {
public:
    IntervalSelector(const Graph& g, const IntervalRepresentation& rep) : g_(g), rep_(rep) {}

    std::optional<RuleFire> operator()(const BranchState& state) const {
        // Dominated vertices first: branch on the leftmost NotOne vertex and
        // the leftmost candidate for its private vertex.
        if (Vertex v = leftmost(state, [&](Vertex x) { return state.mark(x) == Mark::NotOne; });
            v >= 0) {
            Vertex u = leftmost(state, [&](Vertex x) {
                return (state.mark(x) == Mark::Active || state.mark(x) == Mark::NotTwo) &&
                       g_.adjacent(v, x);
            });
            if (u < 0) return std::nullopt;  // unreachable after reduction
            RuleFire fire{kDominatedVertex, 0, {}};
            fire.branches.push_back({{}, {}, {}, {v}});
            fire.branches.push_back({{v}, {}, {}, {u}});
            return fire;
        }

        Vertex v = leftmost(state, [&](Vertex x) { return state.is_live(x); });
        if (v < 0) return std::nullopt;

        if (state.mark(v) == Mark::NotTwo) return barred_leftmost(state, v);

        auto active = state.live_neighbors(v, Mark::Active);
        auto barred = state.live_neighbors(v, Mark::NotTwo);

        if (active.empty()) {
            RuleFire fire{kNoActiveNeighbor, 0, {}};
            fire.branches.push_back({{v}, {}, {}, {}});
            fire.branches.push_back({{}, {}, {}, {v}});
            return fire;
        }
        if (active.size() >= 2) {
            RuleFire fire{kTwoActiveNeighbors, 0, {}};
            fire.branches.push_back({{v}, {}, {}, active});
            fire.branches.push_back({{}, {}, {}, {v}});
            return fire;
        }
        Vertex u = active.front();
        if (!barred.empty()) {
            RuleFire fire{kPairWithBarred, 0, {}};
            fire.branches.push_back({{v}, {}, {}, {u}});
            fire.branches.push_back({{u}, {}, {}, {v}});
            fire.branches.push_back({{}, {}, {}, {v, u}});
            return fire;
        }
        // From here v is active with live neighborhood exactly {u}.
        if (state.count_live_neighbors(u, Mark::Active) >= 3) {
            RuleFire fire{kPendantOnHub, 0, {}};
            BranchActions take{{v}, {}, {}, state.live_neighbors(u)};
            take.exclude_two.erase(std::find(take.exclude_two.begin(), take.exclude_two.end(), v));
            take.exclude_two.push_back(u);
            fire.branches.push_back(std::move(take));
            fire.branches.push_back({{}, {}, {}, {v}});
            return fire;
        }
        auto u_active = state.live_neighbors(u, Mark::Active);  // contains v
        if (u_active.size() == 2) {
            Vertex v3 = u_active[0] == v ? u_active[1] : u_active[0];
            // A pendant hanging off v3 settles the tail.
            Vertex pendant = -1;
            for (Vertex w : state.live_neighbors(v3))
                if (w != u && state.live_degree(w) == 1) {
                    pendant = w;
                    break;
                }
            if (pendant >= 0) {
                RuleFire fire{kPathPairPendant, 0, {}};
                fire.branches.push_back({{v}, {}, {}, {u, v3}});
                fire.branches.push_back({{}, {}, {}, {v, u}});
                fire.branches.push_back({{u}, {}, {}, {v, v3, pendant}});
                fire.branches.push_back({{u, v3}, {}, {}, {v, pendant}});
                return fire;
            }
            if (state.count_live_neighbors(u, Mark::NotTwo) == 0 && state.live_degree(u) == 2) {
                // The helper is the leftmost undecided neighbor of v3: the
                // private-vertex argument needs its right endpoint minimal
                // among v3's candidates, nothing more.
                Vertex next = leftmost(state, [&](Vertex x) {
                    return state.mark(x) == Mark::Active && x != v && x != u && x != v3 &&
                           g_.adjacent(x, v3);
                });
                if (next >= 0 && state.live_degree(next) >= 2) {
                    RuleFire fire{kPathTriple, 0, {}};
                    fire.branches.push_back({{v}, {}, {}, {u, v3}});
                    fire.branches.push_back({{}, {}, {}, {v, u}});
                    fire.branches.push_back({{u}, {}, {}, {v, v3}});
                    BranchActions last{{u, v3}, {}, {}, state.live_neighbors(next)};
                    last.exclude_two.erase(
                        std::find(last.exclude_two.begin(), last.exclude_two.end(), v3));
                    last.exclude_two.push_back(next);
                    last.exclude_two.push_back(v);
                    fire.branches.push_back(std::move(last));
                    return fire;
                }
            }
        }
        return std::nullopt;
    }

    // Stuck states keep an undecided leftmost vertex; split there so that a
    // gap component is consumed before the search moves right.
    Vertex leftmost_open(const BranchState& state) const {
        return leftmost(state, [&](Vertex x) { return state.mark(x) != Mark::NotTwo; });
    }

    // Shape check: constrained vertices inside the closed neighborhood of
    // the leftmost live vertex. The reductions can bar a vertex far to the
    // right (its whole live neighborhood became not-1), so violations are
    // counted rather than fatal.
    bool structural_audit(const BranchState& state, bool fallback_on_path) const {
        if (fallback_on_path) return true;  // the generic split does not keep this shape
        Vertex head = leftmost(state, [&](Vertex x) { return state.is_live(x); });
        if (head < 0) return true;
        for (Vertex x = 0; x < g_.order(); ++x) {
            if (state.mark(x) != Mark::NotOne && state.mark(x) != Mark::NotTwo) continue;
            if (x != head && !g_.adjacent(head, x)) return false;
        }
        return true;
    }

private:
    template <typename Pred>
    Vertex leftmost(const BranchState& state, Pred&& pred) const {
        Vertex best = -1;
        for (Vertex x = 0; x < g_.order(); ++x) {
            if (!state.is_live(x) || !pred(x)) continue;
            if (best < 0 || rep_.leftmost_before(x, best)) best = x;
        }
        return best;
    }

    RuleFire barred_leftmost(const BranchState& state, Vertex v) const {
        auto active = state.live_neighbors(v, Mark::Active);
        auto all = state.live_neighbors(v);
        RuleFire fire{kBarredLeftmost, static_cast<int>(active.size()), {}};
        for (Vertex u : active) {
            BranchActions take{{u}, {}, {}, all};
            take.exclude_two.erase(std::find(take.exclude_two.begin(), take.exclude_two.end(), u));
            fire.branches.push_back(std::move(take));
        }
        fire.branches.push_back({{}, {}, {}, all});
        return fire;
    }

    const Graph& g_;
    const IntervalRepresentation& rep_;
};

}  // namespace

EngineStats enumerate_interval(const Graph& g, const IntervalRepresentation& rep,
                               const FunctionSink& sink,
                               std::function<void(const BranchState&, Vertex)> on_fallback) {
    if (rep.order() != g.order() || graph_from_intervals(rep) != g)
        throw std::invalid_argument("interval representation does not induce the graph");
    IntervalSelector selector(g, rep);
    EngineConfig config;
    config.weights = mc::interval_weights();
    config.audit_rules = &mc::interval_rules();
    config.allow_fallback = true;
    config.on_fallback = std::move(on_fallback);
    config.fallback_pick = [&selector](const BranchState& s) { return selector.leftmost_open(s); };
    config.state_audit = [&selector](const BranchState& s, bool fb) {
        return selector.structural_audit(s, fb);
    };
    return run_branching(BranchState(g), std::cref(selector), config, sink);
}

}  // namespace roman
