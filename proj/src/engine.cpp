#include "roman/engine.hpp"

#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <set>

namespace roman {

namespace {

struct Runner {
    const RuleSelector& selector;
    const EngineConfig& config;
    const FunctionSink& sink;
    EngineStats stats{};
#ifndef NDEBUG
    std::set<std::vector<std::uint8_t>> seen_two_sets{};
#endif

    void apply(BranchState& state, const BranchActions& actions) {
        for (Vertex v : actions.set_two) state.assign_two(v);
        for (Vertex v : actions.set_zero)
            if (state.is_live(v)) state.assign_zero(v);
        for (Vertex v : actions.set_one)
            if (state.is_live(v)) state.assign_one(v);
        for (Vertex v : actions.exclude_two) state.exclude_two(v);
    }

    // Generic complete split on one vertex: value 2 versus never-2. Used
    // only when no listed rule matches; the final filter keeps it sound.
    // A reduced state always has a live vertex that may still take value 2
    // (a live NotTwo vertex with only NotTwo live neighbors would have been
    // finalized 1 by reduction), so restrict the pick accordingly and take
    // the largest live degree, ties by id.
    RuleFire fallback(const BranchState& state) {
        Vertex pick = config.fallback_pick ? config.fallback_pick(state) : -1;
        if (pick < 0) {
            for (Vertex v = 0; v < state.graph().order(); ++v) {
                if (!state.is_live(v) || state.mark(v) == Mark::NotTwo) continue;
                if (pick < 0 || state.live_degree(v) > state.live_degree(pick)) pick = v;
            }
        }
        if (pick < 0 || !state.is_live(pick) || state.mark(pick) == Mark::NotTwo)
            throw StuckStateError("no two-eligible live vertex: " + state.dump());
        RuleFire fire;
        fire.rule = -1;
        fire.branches.push_back({{pick}, {}, {}, {}});
        fire.branches.push_back({{}, {}, {}, {pick}});
        return fire;
    }

    void walk(BranchState state, bool fallback_on_path) {
        ++stats.nodes;
        state.reduce();
        if (config.state_audit && !config.state_audit(state, fallback_on_path))
            ++stats.structural_violations;
        if (state.live_count() == 0) {
            ++stats.leaves;
            RomanFunction f = state.reconstruct();
            if (is_minimal_rdf(state.graph(), f)) {
#ifndef NDEBUG
                auto two_set = f.values;
                for (auto& x : two_set) x = x == 2 ? 1 : 0;
                assert(seen_two_sets.insert(two_set).second && "duplicate 2-set at leaves");
#endif
                ++stats.emitted;
                sink(f);
            }
            return;
        }
        if (config.prune && !config.prune(state)) return;

        std::optional<RuleFire> fire = selector(state);
        if (!fire) {
            if (!config.allow_fallback) throw StuckStateError(state.dump());
            fire = fallback(state);
            ++stats.fallback_fires;
            if (config.on_fallback) config.on_fallback(state, fire->branches[0].set_two[0]);
            fallback_on_path = true;
        }
#ifndef NDEBUG
        double mu_before = config.audit_rules ? state.measure(config.weights) : 0.0;
#endif
        for (std::size_t i = 0; i < fire->branches.size(); ++i) {
            if (std::getenv("ROMAN_TRACE"))
                std::fprintf(stderr, "fire rule=%d branch=%zu at %s\n", fire->rule, i,
                             state.dump().c_str());
            BranchState child = state;
            apply(child, fire->branches[i]);
            child.reduce();
#ifndef NDEBUG
            if (config.audit_rules && fire->rule >= 0) {
                const auto& rule = (*config.audit_rules)[fire->rule];
                double promised =
                    mc::expected_branch_drop(rule, static_cast<int>(i), fire->family_k,
                                             config.weights);
                double drop = mu_before - child.measure(config.weights);
                if (drop < promised - 1e-9) {
                    fprintf(stderr,
                            "measure audit: rule %s branch %zu dropped %.6f, promised %.6f\n"
                            "  parent: %s\n  child:  %s\n",
                            rule.name.c_str(), i, drop, promised, state.dump().c_str(),
                            child.dump().c_str());
                    assert(false && "branch drop below the rule's vector entry");
                }
            }
#endif
            walk(std::move(child), fallback_on_path);
        }
    }
};

}  // namespace

EngineStats run_branching(BranchState root, const RuleSelector& selector,
                          const EngineConfig& config, const FunctionSink& sink) {
    Runner runner{selector, config, sink};
    runner.walk(std::move(root), false);
    return runner.stats;
}

}  // namespace roman
