#include "roman/chordal_enum.hpp"

#include "roman/classes.hpp"

namespace roman {

namespace {

// Rule indices, aligned with mc::chordal_rules(). Later rules assume every
// earlier rule has been applied exhaustively.
enum ChordalRule {
    kActiveDeg3 = 0,
    kActiveMixedNeighbors = 1,
    kNotOneTwoBarred = 2,
    kNotOneThreeOpen = 3,
    kSimplicialNotOne = 4,
    kBarredWithNotOne = 5,
    kPendantActiveBarredClosed = 6,
    kPendantActiveBarredOpen = 7,
    kPendantActivePair = 8,
    kPendantBarred = 9,
    kPendantNotOne = 10,
    kSimplicialActiveBarred = 11,
    kSimplicialActivePair = 12,
    kSimplicialBarredMixed = 13,
    kSimplicialBarredTwoActive = 14,
    kSimplicialBarredBuried = 15,
    kSemiSimplicial = 16,
};

bool simplicial(const BranchState& s, Vertex v) { return s.live_neighborhood_is_clique(v); }

class ChordalSelector {
public:
    explicit ChordalSelector(const Graph& g) : g_(g) {}

    std::optional<RuleFire> operator()(const BranchState& s) const {
        const int n = g_.order();

        // Active vertex with three or more undecided-or-barred neighbors.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::Active) continue;
            int open = s.count_live_neighbors(v, Mark::Active) +
                       s.count_live_neighbors(v, Mark::NotTwo);
            if (open >= 3) return take_or_bar(kActiveDeg3, v);
        }
        // Active vertex with a barred neighbor and a not-1 neighbor buried
        // in not-1 territory.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::Active) continue;
            for (Vertex w : s.live_neighbors(v, Mark::NotTwo)) {
                std::vector<Vertex> buried;
                for (Vertex u : s.live_neighbors(v, Mark::NotOne)) {
                    bool ok = true;
                    for (Vertex t : s.live_neighbors(u))
                        if (t != v && t != w && s.mark(t) != Mark::NotOne) ok = false;
                    if (ok) buried.push_back(u);
                }
                if (buried.empty()) continue;
                RuleFire fire{kActiveMixedNeighbors, 0, {}};
                BranchActions take{{v}, buried, {}, {}};
                fire.branches.push_back(std::move(take));
                fire.branches.push_back({{}, {}, {}, {v}});
                return fire;
            }
        }
        // Not-1 vertex with two barred neighbors: 2 or 0.
        for (Vertex v = 0; v < n; ++v)
            if (s.mark(v) == Mark::NotOne && s.count_live_neighbors(v, Mark::NotTwo) >= 2)
                return take_or_zero(kNotOneTwoBarred, v);
        // Not-1 vertex with three or more undecided-or-barred neighbors.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::NotOne) continue;
            int open = s.count_live_neighbors(v, Mark::Active) +
                       s.count_live_neighbors(v, Mark::NotTwo);
            if (open >= 3) return take_or_zero(kNotOneThreeOpen, v);
        }
        // Simplicial not-1 vertex of degree two or more: taking 2 zeroes the
        // whole closed neighborhood.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::NotOne || s.live_degree(v) < 2 || !simplicial(s, v)) continue;
            RuleFire fire{kSimplicialNotOne, 0, {}};
            fire.branches.push_back({{v}, s.live_neighbors(v), {}, {}});
            fire.branches.push_back({{}, {v}, {}, {}});
            return fire;
        }
        // Barred vertex whose only non-barred neighbor is a not-1 vertex.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::NotTwo) continue;
            if (s.count_live_neighbors(v, Mark::Active) != 0) continue;
            auto notone = s.live_neighbors(v, Mark::NotOne);
            if (notone.size() != 1) continue;
            Vertex w = notone.front();
            RuleFire fire{kBarredWithNotOne, 0, {}};
            fire.branches.push_back({{w}, {}, {}, {}});
            fire.branches.push_back({{}, {w}, {}, {}});
            return fire;
        }
        // Pendant active vertex on a barred neighbor with only barred company.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::Active || s.live_degree(v) != 1) continue;
            Vertex w = s.live_neighbors(v).front();
            if (s.mark(w) != Mark::NotTwo) continue;
            bool all_barred = true;
            for (Vertex t : s.live_neighbors(w))
                if (t != v && s.mark(t) != Mark::NotTwo) all_barred = false;
            if (!all_barred) continue;
            RuleFire fire{kPendantActiveBarredClosed, 0, {}};
            fire.branches.push_back({{v}, {}, {}, {}});
            fire.branches.push_back({{}, {}, {v}, {}});
            return fire;
        }
        // Pendant active vertex on a barred neighbor with open company.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::Active || s.live_degree(v) != 1) continue;
            Vertex w = s.live_neighbors(v).front();
            if (s.mark(w) != Mark::NotTwo) continue;
            RuleFire fire{kPendantActiveBarredOpen, 0, {}};
            BranchActions take{{v}, {}, {}, s.live_neighbors(w)};
            take.exclude_two.erase(
                std::find(take.exclude_two.begin(), take.exclude_two.end(), v));
            fire.branches.push_back(std::move(take));
            fire.branches.push_back({{}, {}, {v}, {}});
            return fire;
        }
        // Active vertex with one active neighbor and otherwise not-1
        // neighbors: its neighbor is the forced private vertex.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::Active) continue;
            if (s.count_live_neighbors(v, Mark::NotTwo) != 0) continue;
            auto active = s.live_neighbors(v, Mark::Active);
            if (active.size() != 1) continue;
            Vertex w = active.front();
            RuleFire fire{kPendantActivePair, 0, {}};
            BranchActions take{{v}, {w}, {}, s.live_neighbors(w)};
            take.exclude_two.erase(
                std::find(take.exclude_two.begin(), take.exclude_two.end(), v));
            fire.branches.push_back(std::move(take));
            fire.branches.push_back({{}, {}, {}, {v}});
            return fire;
        }
        // Pendant barred vertex on an active neighbor.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::NotTwo || s.live_degree(v) != 1) continue;
            Vertex w = s.live_neighbors(v).front();
            if (s.mark(w) != Mark::Active) continue;
            RuleFire fire{kPendantBarred, 0, {}};
            fire.branches.push_back({{w}, {}, {}, {}});
            fire.branches.push_back({{}, {}, {v}, {w}});
            return fire;
        }
        // Pendant not-1 vertex on an active vertex with two active neighbors.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::NotOne || s.live_degree(v) != 1) continue;
            Vertex w = s.live_neighbors(v).front();
            if (s.mark(w) != Mark::Active) continue;
            if (s.count_live_neighbors(w, Mark::Active) != 2) continue;
            RuleFire fire{kPendantNotOne, 0, {}};
            BranchActions take{{v}, {w}, {}, s.live_neighbors(w)};
            take.exclude_two.erase(
                std::find(take.exclude_two.begin(), take.exclude_two.end(), v));
            fire.branches.push_back(std::move(take));
            fire.branches.push_back({{}, {v}, {}, {}});
            return fire;
        }
        // Simplicial active vertex with only barred neighbors.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::Active || s.live_degree(v) < 2 || !simplicial(s, v)) continue;
            if (s.count_live_neighbors(v, Mark::NotTwo) != s.live_degree(v)) continue;
            RuleFire fire{kSimplicialActiveBarred, 0, {}};
            fire.branches.push_back({{v}, s.live_neighbors(v), {}, {}});
            fire.branches.push_back({{}, {}, {v}, {}});
            return fire;
        }
        // Simplicial active vertex with an active neighbor.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::Active || s.live_degree(v) < 2 || !simplicial(s, v)) continue;
            if (s.count_live_neighbors(v, Mark::Active) < 1) continue;
            RuleFire fire{kSimplicialActivePair, 0, {}};
            fire.branches.push_back({{v}, s.live_neighbors(v), {}, {}});
            fire.branches.push_back({{}, {}, {}, {v}});
            return fire;
        }
        // Simplicial barred vertex of degree two: one active, one barred.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::NotTwo || s.live_degree(v) != 2 || !simplicial(s, v)) continue;
            auto nb = s.live_neighbors(v);
            Vertex w = nb[0], w2 = nb[1];
            if (s.mark(w2) == Mark::Active && s.mark(w) == Mark::NotTwo) std::swap(w, w2);
            if (s.mark(w) != Mark::Active || s.mark(w2) != Mark::NotTwo) continue;
            RuleFire fire{kSimplicialBarredMixed, 0, {}};
            fire.branches.push_back({{w}, {v, w2}, {}, {}});
            fire.branches.push_back({{}, {}, {v}, {w}});
            return fire;
        }
        // Simplicial barred vertex of degree two: both neighbors active.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::NotTwo || s.live_degree(v) != 2 || !simplicial(s, v)) continue;
            auto nb = s.live_neighbors(v);
            Vertex w = std::min(nb[0], nb[1]), w2 = std::max(nb[0], nb[1]);
            if (s.mark(w) != Mark::Active || s.mark(w2) != Mark::Active) continue;
            RuleFire fire{kSimplicialBarredTwoActive, 0, {}};
            fire.branches.push_back({{w}, {v}, {}, {}});
            fire.branches.push_back({{w2}, {w, v}, {}, {}});
            fire.branches.push_back({{}, {}, {v}, {w, w2}});
            return fire;
        }
        // Simplicial barred vertex whose neighbor is buried in not-1
        // territory.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::NotTwo || s.live_degree(v) < 2 || !simplicial(s, v)) continue;
            for (Vertex w : s.live_neighbors(v, Mark::NotOne)) {
                bool buried = true;
                for (Vertex t : s.live_neighbors(w))
                    if (t != v && s.mark(t) != Mark::NotOne) buried = false;
                if (!buried) continue;
                RuleFire fire{kSimplicialBarredBuried, 0, {}};
                BranchActions take{{w}, {}, {}, {}};
                take.set_zero.push_back(v);
                for (Vertex t : s.live_neighbors(v))
                    if (t != w) take.set_zero.push_back(t);
                fire.branches.push_back(std::move(take));
                fire.branches.push_back({{}, {w}, {}, {}});
                return fire;
            }
        }
        // Simplicial barred vertex with nested not-1 neighbors: branch on
        // the vertex that stays simplicial after the other goes.
        for (Vertex v = 0; v < n; ++v) {
            if (s.mark(v) != Mark::NotTwo || s.live_degree(v) < 2 || !simplicial(s, v)) continue;
            auto notone = s.live_neighbors(v, Mark::NotOne);
            for (Vertex w : notone) {
                for (Vertex w2 : notone) {
                    if (w == w2 || !closed_live_subset(s, w, w2)) continue;
                    RuleFire fire{kSemiSimplicial, 0, {}};
                    fire.branches.push_back({{w2}, {v, w}, {}, {}});
                    fire.branches.push_back({{}, {w2}, {}, {}});
                    return fire;
                }
            }
        }
        return std::nullopt;
    }

private:
    RuleFire take_or_bar(int rule, Vertex v) const {
        RuleFire fire{rule, 0, {}};
        fire.branches.push_back({{v}, {}, {}, {}});
        fire.branches.push_back({{}, {}, {}, {v}});
        return fire;
    }
    RuleFire take_or_zero(int rule, Vertex v) const {
        RuleFire fire{rule, 0, {}};
        fire.branches.push_back({{v}, {}, {}, {}});
        fire.branches.push_back({{}, {v}, {}, {}});
        return fire;
    }

    // live N[w] subset of live N[w2]
    bool closed_live_subset(const BranchState& s, Vertex w, Vertex w2) const {
        if (w != w2 && !g_.adjacent(w, w2)) return false;
        for (Vertex t : s.live_neighbors(w))
            if (t != w2 && !g_.adjacent(t, w2)) return false;
        return true;
    }

    const Graph& g_;
};

}  // namespace

EngineStats enumerate_chordal(const Graph& g, const FunctionSink& sink,
                              std::function<void(const BranchState&, Vertex)> on_fallback) {
    if (!is_chordal(g)) throw std::invalid_argument("enumerate_chordal requires a chordal graph");
    ChordalSelector selector(g);
    EngineConfig config;
    config.weights = mc::chordal_weights();
    config.audit_rules = &mc::chordal_rules();
    config.allow_fallback = true;
    config.on_fallback = std::move(on_fallback);
    return run_branching(BranchState(g), std::cref(selector), config, sink);
}

}  // namespace roman
