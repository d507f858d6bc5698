#include "roman/mc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace roman::mc {

void validate_weights(const WeightSet& w) {
    if (!(w.w1 >= 0.0 && w.w1 <= 1.0 && w.w2 >= 0.0 && w.w2 <= 1.0))
        throw std::invalid_argument("weights must lie in [0,1]");
}

double Expr::eval(double w1, double w2, double k) const {
    switch (op) {
        case Op::Const: return value;
        case Op::W1: return w1;
        case Op::W2: return w2;
        case Op::K: return k;
        case Op::Add: return lhs->eval(w1, w2, k) + rhs->eval(w1, w2, k);
        case Op::Sub: return lhs->eval(w1, w2, k) - rhs->eval(w1, w2, k);
        case Op::Mul: return lhs->eval(w1, w2, k) * rhs->eval(w1, w2, k);
        case Op::Min: return std::min(lhs->eval(w1, w2, k), rhs->eval(w1, w2, k));
    }
    return 0.0;
}

bool RuleVector::has_family() const {
    for (const auto& e : entries)
        if (e.repeat_k) return true;
    return false;
}

std::vector<double> RuleVector::drops(const WeightSet& w, int k) const {
    std::vector<double> out;
    for (const auto& e : entries) {
        int copies = e.repeat_k ? k : 1;
        double value = e.expr.eval(w.w1, w.w2, k);
        if (value <= 0.0)
            throw std::invalid_argument("rule " + name + ": nonpositive vector entry " + e.text);
        for (int i = 0; i < copies; ++i) out.push_back(value);
    }
    return out;
}

namespace {

struct Parser {
    const std::string& src;
    std::size_t pos = 0;
    int line;

    explicit Parser(const std::string& s, int line_no) : src(s), line(line_no) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) { throw DslError(line, what); }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        return src.substr(start, pos - start);
    }

    Expr expr() {
        Expr left = term();
        for (;;) {
            if (eat('+')) {
                left = binary(Expr::Op::Add, std::move(left), term());
            } else if (eat('-')) {
                left = binary(Expr::Op::Sub, std::move(left), term());
            } else {
                return left;
            }
        }
    }

    Expr term() {
        Expr left = factor();
        while (eat('*')) left = binary(Expr::Op::Mul, std::move(left), factor());
        return left;
    }

    Expr factor() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of entry");
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t used = 0;
            double v = std::stod(src.substr(pos), &used);
            pos += used;
            Expr e;
            e.op = Expr::Op::Const;
            e.value = v;
            return e;
        }
        if (c == '(') {
            ++pos;
            Expr inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        std::string name = ident();
        if (name == "w1") return leaf(Expr::Op::W1);
        if (name == "w2" || name == "w") return leaf(Expr::Op::W2);
        if (name == "k") return leaf(Expr::Op::K);
        if (name == "min") {
            if (!eat('(')) fail("expected '(' after min");
            Expr a = expr();
            if (!eat(',')) fail("expected ',' in min");
            Expr b = expr();
            if (!eat(')')) fail("expected ')' after min");
            return binary(Expr::Op::Min, std::move(a), std::move(b));
        }
        fail("unexpected token near '" + std::string(1, c) + "'");
    }

    static Expr leaf(Expr::Op op) {
        Expr e;
        e.op = op;
        return e;
    }
    static Expr binary(Expr::Op op, Expr a, Expr b) {
        Expr e;
        e.op = op;
        e.lhs = std::make_shared<Expr>(std::move(a));
        e.rhs = std::make_shared<Expr>(std::move(b));
        return e;
    }
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

VectorEntry parse_entry(const std::string& raw, int line_no) {
    VectorEntry entry;
    entry.text = trim(raw);
    std::string body = entry.text;
    // Leading "k*" marks a k-fold repeated entry.
    if (body.size() > 2 && (body[0] == 'k' || body[0] == 'K')) {
        std::size_t after = body.find_first_not_of(" \t", 1);
        if (after != std::string::npos && body[after] == '*') {
            entry.repeat_k = true;
            body = body.substr(after + 1);
        }
    }
    Parser p(body, line_no);
    entry.expr = p.expr();
    p.skip_ws();
    if (p.pos != body.size()) p.fail("trailing text in entry '" + entry.text + "'");
    return entry;
}

}  // namespace

std::vector<RuleVector> parse_vector_dsl(const std::string& text) {
    std::vector<RuleVector> rules;
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        RuleVector rule;
        std::size_t open = line.find('(');
        if (open == std::string::npos) throw DslError(line_no, "expected '(' in rule line");
        std::string head = trim(line.substr(0, open));
        if (!head.empty()) {
            if (head.back() != ':') throw DslError(line_no, "expected ':' after rule name");
            rule.name = trim(head.substr(0, head.size() - 1));
        }
        if (rule.name.empty()) rule.name = "vector" + std::to_string(rules.size() + 1);
        if (line.back() != ')') throw DslError(line_no, "expected ')' at end of rule line");
        std::string body = line.substr(open + 1, line.size() - open - 2);
        rule.text = "(" + body + ")";

        // Split on commas at paren depth zero.
        int depth = 0;
        std::string current;
        std::vector<std::string> parts;
        for (char c : body) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                parts.push_back(current);
                current.clear();
            } else {
                current.push_back(c);
            }
        }
        parts.push_back(current);
        for (const auto& part : parts) {
            if (trim(part).empty()) throw DslError(line_no, "empty vector entry");
            rule.entries.push_back(parse_entry(part, line_no));
        }
        rules.push_back(std::move(rule));
    }
    return rules;
}

double branching_number(const std::vector<double>& drops) {
    if (drops.empty()) throw std::invalid_argument("empty branching vector");
    for (double d : drops)
        if (d <= 0.0) throw std::invalid_argument("nonpositive branching vector entry");
    if (drops.size() == 1) return 1.0;
    auto excess = [&](double x) {
        double s = 0.0;
        for (double d : drops) s += std::pow(x, -d);
        return s - 1.0;
    };
    double lo = 1.0, hi = 4.0;
    while (excess(hi) > 0.0) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double rule_number(const RuleVector& rule, const WeightSet& w, int family_cap) {
    if (!rule.has_family()) return branching_number(rule.drops(w));
    double worst = 1.0;
    for (int k = 1; k <= family_cap; ++k) worst = std::max(worst, branching_number(rule.drops(w, k)));
    return worst;
}

double expected_branch_drop(const RuleVector& rule, int branch, int k, const WeightSet& w) {
    auto drops = rule.drops(w, k);
    if (branch < 0 || branch >= static_cast<int>(drops.size()))
        throw std::out_of_range("rule " + rule.name + ": branch index " + std::to_string(branch));
    return drops[branch];
}

RulesetAnalysis analyze_ruleset(const std::vector<RuleVector>& rules, const WeightSet& w,
                                int family_cap) {
    validate_weights(w);
    RulesetAnalysis analysis;
    for (const auto& rule : rules) {
        double number = rule_number(rule, w, family_cap);
        analysis.rows.push_back({rule.name, rule.text, number});
        if (number > analysis.worst) {
            analysis.worst = number;
            analysis.worst_name = rule.name;
        }
    }
    return analysis;
}

namespace {

double worst_number(const std::vector<RuleVector>& rules, const WeightSet& w, int family_cap) {
    double worst = 1.0;
    for (const auto& rule : rules) worst = std::max(worst, rule_number(rule, w, family_cap));
    return worst;
}

}  // namespace

OptimizeResult optimize_weights(const std::vector<RuleVector>& rules, double lo, double hi,
                                int family_cap) {
    if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi))
        throw std::invalid_argument("optimizer bounds must satisfy 0 <= lo <= hi <= 1");
    OptimizeResult best;
    best.worst = std::numeric_limits<double>::infinity();
    auto consider = [&](double w1, double w2) {
        WeightSet w{w1, w2};
        double v = worst_number(rules, w, family_cap);
        if (v < best.worst - 1e-15) {
            best.worst = v;
            best.weights = w;
        }
    };
    auto sweep = [&](double c1, double c2, double radius, double step) {
        double lo1 = std::max(lo, c1 - radius), hi1 = std::min(hi, c1 + radius);
        double lo2 = std::max(lo, c2 - radius), hi2 = std::min(hi, c2 + radius);
        for (double w1 = lo1; w1 <= hi1 + 1e-12; w1 += step)
            for (double w2 = lo2; w2 <= hi2 + 1e-12; w2 += step) consider(std::min(w1, hi), std::min(w2, hi));
    };
    sweep(0.5 * (lo + hi), 0.5 * (lo + hi), 0.5 * (hi - lo), 0.01);
    for (double step : {0.001, 0.0001})
        sweep(best.weights.w1, best.weights.w2, step * 10.0, step);
    return best;
}

Sqrt3Report verify_sqrt3_family(int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const double bound = std::sqrt(3.0) + 1e-9;
    const WeightSet w{1.0, 0.57};
    const auto& family = interval_rules().back();  // the k-parameterized rule
    Sqrt3Report report;
    for (int n = 1; n <= n_max; ++n) {
        double number = branching_number(family.drops(w, n));
        report.numbers.push_back(number);
        if (number > bound && report.pass) {
            report.pass = false;
            report.first_violation = n;
        }
    }
    return report;
}

namespace {

std::vector<RuleVector> parse_builtin(const char* text) { return parse_vector_dsl(text); }

}  // namespace

// Branch order matches the enumerators: the entry at index i is the promised
// drop of branch i.
const std::vector<RuleVector>& interval_rules() {
    static const std::vector<RuleVector> rules = parse_builtin(R"(
        dominated_vertex:      (1, 1 + w2)
        no_active_neighbor:    (1 + w2, 1)
        two_active_neighbors:  (3, 1 - w2)
        pair_with_barred:      (2 + w2, 2 + w2, 2 - w2)
        pendant_on_hub:        (2 + 2*(1 - w2), 1 - w2)
        path_pair_pendant:     (3 - w2, 2 - w2, 4, 4)
        path_triple:           (3 - w2, 2 - w2, 3, 5 - w2)
        barred_leftmost:       (k*(w2 + k), w2 + (1 - w2)*k)
    )");
    return rules;
}

const std::vector<RuleVector>& forest_rules() {
    static const std::vector<RuleVector> rules = parse_builtin(R"(
        barred_leaf:     (1 + w2, 1)
        leaf_of_barred:  (1 + w2, 1)
        twin_leaves:     (3, 3, 3, 3 - w2)
        tail2_barred:    (2 + w2, 2, 2)
        tail2_with_leaf: (3 - w2, 3 - w2, 2 - w2)
        double_tail2:    (5, 5, 5, 5, 3, 5, 5 - w2, 5 - w2, 5, 5 - w2, 5 - w2)
        tail3_barred:    (2, 3, 2 - w2)
        tail3_with_leaf: (2, 4 - w2, 4 - w2, 4 - w2, 4 - w2)
        tail3_tail2:     (5 - w2, 4, 4, 5 - w2, 4, 4 - w2, 4 - w2, 4 - w2)
        double_tail3:    (6, 5 - w2, 4 - w2, 3, 3 - w2, 3 - w2)
        tail4_barred:    (4 + w2, 2 + w2, 4, 4, 4, 3 - w2)
        tail3_inner:     (3 - w2, 2 - w2, 3, 5 - w2)
    )");
    return rules;
}

const std::vector<RuleVector>& chordal_rules() {
    static const std::vector<RuleVector> rules = parse_builtin(R"(
        active_deg3:                  (1 + 3*min(1 - w1, w2), 1 - w2)
        active_mixed_neighbors:       (1 + w1 + w2, 1 - w2)
        notone_two_barred:            (w1 + 2*w2, w1)
        notone_three_open:            (w1 + min(1 - w1, w2) + 2*(1 - w1), w1)
        simplicial_notone:            (2*w1 + w2, w1)
        barred_with_notone:           (w1 + w2, w1 + w2)
        pendant_active_barred_closed: (1 + w2, 1 + w2)
        pendant_active_barred_open:   (1 + w2 + min(1 - w2, w1), 1)
        pendant_active_pair:          (2, 1 - w2)
        pendant_barred:               (1 + w2, 1)
        pendant_notone:               (1 + w1 + 2*(1 - w2), w1)
        simplicial_active_barred:     (1 + 2*w2, 1)
        simplicial_active_pair:       (2 + w2, 1 - w2)
        simplicial_barred_mixed:      (1 + 2*w2, 1)
        simplicial_barred_two_active: (2 - w1 + w2, 2 + w2, 2 - w2)
        simplicial_barred_buried:     (2*w1 + w2, w1)
        semi_simplicial:              (2*w1 + w2, w1)
    )");
    return rules;
}

WeightSet interval_weights() { return {1.0, 0.57}; }
WeightSet forest_weights() { return {1.0, 0.57}; }
WeightSet chordal_weights() { return {0.710134, 0.434799}; }

}  // namespace roman::mc
