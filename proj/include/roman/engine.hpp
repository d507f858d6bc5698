#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "roman/branch.hpp"
#include "roman/oracle.hpp"

namespace roman {

// One child of a branching step. Actions apply in field order; vertices
// consumed by earlier side effects are skipped where that is benign.
struct BranchActions {
    std::vector<Vertex> set_two;
    std::vector<Vertex> set_zero;
    std::vector<Vertex> set_one;
    std::vector<Vertex> exclude_two;  // "put into V-hat-2"
};

struct RuleFire {
    int rule = -1;                      // index into the ruleset table
    int family_k = 0;                   // k for k-parameterized vectors
    std::vector<BranchActions> branches;
};

// Returns the first applicable rule for a reduced state, or nothing.
using RuleSelector = std::function<std::optional<RuleFire>(const BranchState&)>;

struct StuckStateError : std::runtime_error {
    explicit StuckStateError(const std::string& state_dump)
        : std::runtime_error("no branching rule applies; state: " + state_dump) {}
};

struct EngineStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t emitted = 0;
    std::uint64_t fallback_fires = 0;
    // Reduced states where the class-specific shape check did not hold;
    // diagnostic only, never affects the output.
    std::uint64_t structural_violations = 0;
};

struct EngineConfig {
    mc::WeightSet weights;
    // Rule table aligned with the selector's rule indices; enables the
    // debug-mode measure audit (elided in NDEBUG builds).
    const std::vector<mc::RuleVector>* audit_rules = nullptr;
    // Generic two-way branch on a stuck state instead of an error.
    bool allow_fallback = false;
    // Diagnostic callback invoked with each stuck state and the vertex the
    // fallback splits on.
    std::function<void(const BranchState&, Vertex)> on_fallback;
    // Chooses the fallback's branch vertex; must return a live vertex that
    // may still take 2. Default: largest live degree, ties by id.
    std::function<Vertex(const BranchState&)> fallback_pick;
    // Structural shape check: (state, fallback fired on this path) -> holds.
    // Failures are counted in EngineStats::structural_violations.
    std::function<bool(const BranchState&, bool)> state_audit;
    // Extendibility test hook: return false to prune the subtree. Unused by
    // the shipped rulesets; pruning keeps the output a subset.
    std::function<bool(const BranchState&)> prune;
};

// Depth-first branch and reduce: reduce to a fixed point, stop at leaves and
// emit the reconstruction when it is a minimal function, otherwise fire the
// selector's rule (or the fallback). Deterministic emission order.
EngineStats run_branching(BranchState root, const RuleSelector& selector,
                          const EngineConfig& config, const FunctionSink& sink);

}  // namespace roman
