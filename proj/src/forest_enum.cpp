#include "roman/forest_enum.hpp"

#include "roman/classes.hpp"

namespace roman {

namespace {

// Rule indices, aligned with mc::forest_rules().
enum ForestRule {
    kBarredLeaf = 0,
    kLeafOfBarred = 1,
    kTwinLeaves = 2,
    kTail2Barred = 3,
    kTail2WithLeaf = 4,
    kDoubleTail2 = 5,
    kTail3Barred = 6,
    kTail3WithLeaf = 7,
    kTail3Tail2 = 8,
    kDoubleTail3 = 9,
    kTail4Barred = 10,
    kTail3Inner = 11,
};

// The merged "may still become 2" label.
bool open_mark(const BranchState& s, Vertex v) {
    return s.is_live(v) && s.mark(v) != Mark::NotTwo;
}
bool barred(const BranchState& s, Vertex v) { return s.mark(v) == Mark::NotTwo; }
bool leaf(const BranchState& s, Vertex v) { return s.is_live(v) && s.live_degree(v) == 1; }

class ForestSelector {
public:
    explicit ForestSelector(const Graph& g) : g_(g) {}

    std::optional<RuleFire> operator()(const BranchState& s) const {
        const int n = g_.order();

        // Barred leaf: branch on its only live neighbor.
        for (Vertex v = 0; v < n; ++v) {
            if (!barred(s, v) || !leaf(s, v)) continue;
            for (Vertex u : s.live_neighbors(v)) {
                if (!open_mark(s, u)) continue;
                return two_way(kBarredLeaf, u);
            }
        }
        // Barred vertex with an open leaf neighbor.
        for (Vertex v = 0; v < n; ++v) {
            if (!barred(s, v)) continue;
            for (Vertex u : s.live_neighbors(v))
                if (open_mark(s, u) && leaf(s, u)) return two_way(kLeafOfBarred, u);
        }
        // Two open leaves on a common open vertex.
        for (Vertex v = 0; v < n; ++v) {
            if (!open_mark(s, v)) continue;
            std::vector<Vertex> leaves;
            for (Vertex u : s.live_neighbors(v))
                if (open_mark(s, u) && leaf(s, u)) leaves.push_back(u);
            if (leaves.size() < 2) continue;
            Vertex u = leaves[0], w = leaves[1];
            RuleFire fire{kTwinLeaves, 0, {}};
            fire.branches.push_back({{u}, {}, {}, {v, w}});
            fire.branches.push_back({{w}, {}, {}, {u, v}});
            fire.branches.push_back({{v}, {}, {}, {u, w}});
            fire.branches.push_back({{}, {}, {}, {u, v, w}});
            return fire;
        }
        // Length-2 tail u-w hanging from a barred vertex.
        for (Vertex v = 0; v < n; ++v) {
            if (!barred(s, v)) continue;
            for (Vertex u : s.live_neighbors(v)) {
                if (!open_mark(s, u)) continue;
                Vertex w = sole_open_leaf(s, u);
                if (w < 0 || s.live_degree(u) != 2) continue;
                RuleFire fire{kTail2Barred, 0, {}};
                fire.branches.push_back({{u}, {}, {}, {w}});
                fire.branches.push_back({{w}, {}, {}, {u}});
                fire.branches.push_back({{}, {}, {}, {u, w}});
                return fire;
            }
        }
        // Length-2 tail u-w next to a vertex v that also carries a leaf x.
        for (Vertex v = 0; v < n; ++v) {
            if (!open_mark(s, v)) continue;
            Vertex x = sole_open_leaf(s, v);
            if (x < 0) continue;
            for (Vertex u : s.live_neighbors(v)) {
                if (!open_mark(s, u) || u == x) continue;
                Vertex w = sole_open_leaf(s, u);
                if (w < 0 || w == v || s.live_degree(u) != 2) continue;
                RuleFire fire{kTail2WithLeaf, 0, {}};
                fire.branches.push_back({{v}, {}, {}, {w, x}});
                fire.branches.push_back({{x}, {}, {}, {v, u}});
                fire.branches.push_back({{}, {}, {}, {v, x}});
                return fire;
            }
        }
        // Two length-2 tails meeting in v.
        for (Vertex v = 0; v < n; ++v) {
            if (!open_mark(s, v)) continue;
            std::vector<Vertex> tails;
            for (Vertex u : s.live_neighbors(v))
                if (open_mark(s, u) && s.live_degree(u) == 2 && sole_open_leaf(s, u) >= 0 &&
                    sole_open_leaf(s, u) != v)
                    tails.push_back(u);
            if (tails.size() < 2) continue;
            Vertex u1 = tails[0], u2 = tails[1];
            Vertex w1 = sole_open_leaf(s, u1), w2 = sole_open_leaf(s, u2);
            RuleFire fire{kDoubleTail2, 0, {}};
            fire.branches.push_back({{v, u1, u2}, {}, {}, {w1, w2}});
            fire.branches.push_back({{v, u1}, {}, {}, {u2, w1, w2}});
            fire.branches.push_back({{v, u2}, {}, {}, {u1, w1, w2}});
            fire.branches.push_back({{v}, {}, {}, {u1, u2, w1, w2}});
            fire.branches.push_back({{u1}, {}, {}, {v, w1}});
            fire.branches.push_back({{u2, w1}, {}, {}, {v, u1, w2}});
            fire.branches.push_back({{w2, w1}, {}, {}, {v, u1, u2}});
            fire.branches.push_back({{w1}, {}, {}, {v, u1, u2, w2}});
            fire.branches.push_back({{u2}, {}, {}, {v, u1, w1, w2}});
            fire.branches.push_back({{w2}, {}, {}, {v, u1, u2, w1}});
            fire.branches.push_back({{}, {}, {}, {v, u1, u2, w1, w2}});
            return fire;
        }
        // Length-3 tail u-w-x from a barred vertex.
        for (Vertex v = 0; v < n; ++v) {
            if (!barred(s, v)) continue;
            for (Vertex u : s.live_neighbors(v)) {
                if (!open_mark(s, u) || s.live_degree(u) != 2) continue;
                Vertex w = other_live_neighbor(s, u, v);
                if (!open_mark(s, w) || s.live_degree(w) != 2) continue;
                Vertex x = sole_leaf(s, w);
                if (x < 0 || x == u) continue;
                RuleFire fire{kTail3Barred, 0, {}};
                fire.branches.push_back({{u}, {}, {}, {x}});
                fire.branches.push_back({{w}, {}, {}, {u, x}});
                fire.branches.push_back({{}, {}, {}, {u, w}});
                return fire;
            }
        }
        // Length-3 tail next to a vertex that carries a leaf y.
        for (Vertex v = 0; v < n; ++v) {
            if (!open_mark(s, v)) continue;
            Vertex y = sole_leaf(s, v);
            if (y < 0 || !open_mark(s, y)) continue;
            for (Vertex u : s.live_neighbors(v)) {
                if (!open_mark(s, u) || u == y || s.live_degree(u) != 2) continue;
                Vertex w = other_live_neighbor(s, u, v);
                if (!open_mark(s, w) || s.live_degree(w) != 2) continue;
                Vertex x = sole_leaf(s, w);
                if (x < 0 || x == u || !open_mark(s, x)) continue;
                RuleFire fire{kTail3WithLeaf, 0, {}};
                fire.branches.push_back({{v}, {}, {}, {y}});
                fire.branches.push_back({{u}, {}, {}, {v, x}});
                fire.branches.push_back({{w}, {}, {}, {v, u, x}});
                fire.branches.push_back({{x}, {}, {}, {v, u, w}});
                fire.branches.push_back({{}, {}, {}, {v, u, w, x}});
                return fire;
            }
        }
        // A length-3 tail and a length-2 tail meeting in v.
        for (Vertex v = 0; v < n; ++v) {
            if (!open_mark(s, v)) continue;
            for (Vertex u : s.live_neighbors(v)) {
                if (!open_mark(s, u) || s.live_degree(u) != 2) continue;
                Vertex w = other_live_neighbor(s, u, v);
                if (!open_mark(s, w) || s.live_degree(w) != 2) continue;
                Vertex x = sole_leaf(s, w);
                if (x < 0 || x == u || !open_mark(s, x)) continue;
                for (Vertex y : s.live_neighbors(v)) {
                    if (!open_mark(s, y) || y == u || s.live_degree(y) != 2) continue;
                    Vertex z = sole_leaf(s, y);
                    if (z < 0 || z == v) continue;
                    RuleFire fire{kTail3Tail2, 0, {}};
                    fire.branches.push_back({{v, u}, {}, {}, {w, x, z}});
                    fire.branches.push_back({{v, y}, {}, {}, {u, z}});
                    fire.branches.push_back({{v}, {}, {}, {u, y, z}});
                    fire.branches.push_back({{u, w}, {}, {}, {v, x, y}});
                    fire.branches.push_back({{u}, {}, {}, {v, w, x}});
                    fire.branches.push_back({{w}, {}, {}, {v, u, x}});
                    fire.branches.push_back({{x}, {}, {}, {v, u, w}});
                    fire.branches.push_back({{}, {}, {}, {v, u, w, x}});
                    return fire;
                }
            }
        }
        // Two length-3 tails meeting in v.
        for (Vertex v = 0; v < n; ++v) {
            if (!open_mark(s, v)) continue;
            std::vector<Vertex> tails;
            for (Vertex u : s.live_neighbors(v)) {
                if (!open_mark(s, u) || s.live_degree(u) != 2) continue;
                Vertex w = other_live_neighbor(s, u, v);
                if (!open_mark(s, w) || s.live_degree(w) != 2) continue;
                Vertex x = sole_leaf(s, w);
                if (x >= 0 && x != u && open_mark(s, x)) tails.push_back(u);
            }
            if (tails.size() < 2) continue;
            Vertex u1 = tails[0], u2 = tails[1];
            Vertex w1 = other_live_neighbor(s, u1, v), w2 = other_live_neighbor(s, u2, v);
            Vertex x1 = sole_leaf(s, w1), x2 = sole_leaf(s, w2);
            RuleFire fire{kDoubleTail3, 0, {}};
            fire.branches.push_back({{u1, u2}, {}, {}, {w1, w2, x1, x2}});
            fire.branches.push_back({{u1, w1}, {}, {}, {v, u2, x1}});
            fire.branches.push_back({{u1}, {}, {}, {u2, w1, x1}});
            fire.branches.push_back({{w1}, {}, {}, {u1, x1}});
            fire.branches.push_back({{x1}, {}, {}, {u1, w1}});
            fire.branches.push_back({{}, {}, {}, {u1, w1, x1}});
            return fire;
        }
        // Length-4 tail u-w-x-y from a barred vertex.
        for (Vertex v = 0; v < n; ++v) {
            if (!barred(s, v)) continue;
            for (Vertex u : s.live_neighbors(v)) {
                if (!open_mark(s, u) || s.live_degree(u) != 2) continue;
                Vertex w = other_live_neighbor(s, u, v);
                if (!open_mark(s, w) || s.live_degree(w) != 2) continue;
                Vertex x = other_live_neighbor(s, w, u);
                if (x == v || !open_mark(s, x) || s.live_degree(x) != 2) continue;
                Vertex y = sole_leaf(s, x);
                if (y < 0 || y == w) continue;
                RuleFire fire{kTail4Barred, 0, {}};
                fire.branches.push_back({{u, w}, {}, {}, {x, y}});
                fire.branches.push_back({{u}, {}, {}, {w}});
                fire.branches.push_back({{w, x}, {}, {}, {u, y}});
                fire.branches.push_back({{w}, {}, {}, {u, x, y}});
                fire.branches.push_back({{x}, {}, {}, {u, w, y}});
                fire.branches.push_back({{}, {}, {}, {u, w, x}});
                return fire;
            }
        }
        // Interior path v-u-w-x with a leaf y on x.
        for (Vertex v = 0; v < n; ++v) {
            if (!open_mark(s, v)) continue;
            for (Vertex u : s.live_neighbors(v)) {
                if (!open_mark(s, u) || s.live_degree(u) != 2) continue;
                Vertex w = other_live_neighbor(s, u, v);
                if (!open_mark(s, w) || s.live_degree(w) != 2) continue;
                Vertex x = other_live_neighbor(s, w, u);
                if (x == v || !open_mark(s, x) || s.live_degree(x) != 2) continue;
                Vertex y = sole_leaf(s, x);
                if (y < 0 || y == w || !open_mark(s, y)) continue;
                RuleFire fire{kTail3Inner, 0, {}};
                fire.branches.push_back({{y}, {}, {}, {x, w}});
                fire.branches.push_back({{}, {}, {}, {y, x}});
                fire.branches.push_back({{x}, {}, {}, {y, w}});
                fire.branches.push_back({{x, w}, {}, {}, {y, u, v}});
                return fire;
            }
        }
        return std::nullopt;
    }

private:
    static RuleFire two_way(int rule, Vertex u) {
        RuleFire fire{rule, 0, {}};
        fire.branches.push_back({{u}, {}, {}, {}});
        fire.branches.push_back({{}, {}, {}, {u}});
        return fire;
    }

    // The unique live leaf neighbor, or -1 if there is none or several.
    static Vertex sole_leaf(const BranchState& s, Vertex v) {
        Vertex found = -1;
        for (Vertex u : s.live_neighbors(v)) {
            if (!leaf(s, u)) continue;
            if (found >= 0) return -1;
            found = u;
        }
        return found;
    }

    static Vertex sole_open_leaf(const BranchState& s, Vertex v) {
        Vertex found = -1;
        for (Vertex u : s.live_neighbors(v)) {
            if (!leaf(s, u) || !open_mark(s, u)) continue;
            if (found >= 0) return -1;
            found = u;
        }
        return found;
    }

    static Vertex other_live_neighbor(const BranchState& s, Vertex v, Vertex excluded) {
        for (Vertex u : s.live_neighbors(v))
            if (u != excluded) return u;
        return -1;
    }

    const Graph& g_;
};

}  // namespace

EngineStats enumerate_forest(const Graph& g, const FunctionSink& sink,
                             std::function<void(const BranchState&, Vertex)> on_fallback) {
    if (!is_forest(g)) throw std::invalid_argument("enumerate_forest requires an acyclic graph");
    ForestSelector selector(g);
    EngineConfig config;
    config.weights = mc::forest_weights();
    config.audit_rules = &mc::forest_rules();
    config.allow_fallback = true;
    config.on_fallback = std::move(on_fallback);
    return run_branching(BranchState(g), std::cref(selector), config, sink);
}

}  // namespace roman
