#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace roman::mc {

struct WeightSet {
    double w1 = 1.0;
    double w2 = 0.57;
};

// Throws std::invalid_argument unless both weights lie in [0,1].
void validate_weights(const WeightSet& w);

// Arithmetic over the weights and the family parameter k: numbers, w1, w2
// (w is an alias for w2), k, + - *, min(a,b).
struct Expr {
    enum class Op { Const, W1, W2, K, Add, Sub, Mul, Min };
    Op op = Op::Const;
    double value = 0.0;
    std::shared_ptr<Expr> lhs, rhs;

    double eval(double w1, double w2, double k) const;
};

struct VectorEntry {
    Expr expr;
    bool repeat_k = false;  // entry stands for k copies of expr
    std::string text;
};

// Branching vector, one entry per branch in firing order. A vector with a
// repeated entry is a family parameterized by k >= 1.
struct RuleVector {
    std::string name;
    std::vector<VectorEntry> entries;
    std::string text;

    bool has_family() const;
    // Concrete drops for the given weights (and k for families). Throws on a
    // nonpositive entry.
    std::vector<double> drops(const WeightSet& w, int k = 0) const;
};

struct DslError : std::runtime_error {
    int line;
    DslError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// One rule per line: "name: (entry, entry, ...)"; the name is optional. A
// leading "k*" on an entry denotes k-fold repetition, e.g. "k*(w2+k)".
std::vector<RuleVector> parse_vector_dsl(const std::string& text);

// The unique x > 1 with sum x^(-a_i) = 1, or exactly 1.0 for a single-entry
// vector. Bisection to 1e-9; entries must be positive.
double branching_number(const std::vector<double>& drops);

// Worst branching number of a (possibly k-parameterized) rule, families
// expanded for k = 1..family_cap.
double rule_number(const RuleVector& rule, const WeightSet& w, int family_cap = 64);

// Minimum measure drop promised for one branch of a rule; used by the
// search-tree audit. branch indexes the expanded vector.
double expected_branch_drop(const RuleVector& rule, int branch, int k, const WeightSet& w);

struct RulesetAnalysis {
    struct Row {
        std::string name;
        std::string vector_text;
        double number = 0.0;
    };
    std::vector<Row> rows;
    std::string worst_name;
    double worst = 0.0;
};

RulesetAnalysis analyze_ruleset(const std::vector<RuleVector>& rules, const WeightSet& w,
                                int family_cap = 64);

struct OptimizeResult {
    WeightSet weights;
    double worst = 0.0;
};

// Coarse 0.01 grid over [lo,hi]^2 followed by staged local refinement down
// to step 1e-4; deterministic.
OptimizeResult optimize_weights(const std::vector<RuleVector>& rules, double lo = 0.0,
                                double hi = 1.0, int family_cap = 64);

struct Sqrt3Report {
    bool pass = true;
    int first_violation = 0;            // n of the first failure, 0 if none
    std::vector<double> numbers;        // index n-1
};

// Checks that (w+n, ..., w+n [n times], w+(1-w)n) stays within sqrt(3) for
// n = 1..n_max at w = 0.57, tolerance 1e-9.
Sqrt3Report verify_sqrt3_family(int n_max);

// Built-in rulesets, entries aligned with the enumerators' branch order.
const std::vector<RuleVector>& interval_rules();
const std::vector<RuleVector>& forest_rules();
const std::vector<RuleVector>& chordal_rules();

WeightSet interval_weights();  // (1, 0.57)
WeightSet forest_weights();    // (1, 0.57)
WeightSet chordal_weights();   // (0.710134, 0.434799)

}  // namespace roman::mc
