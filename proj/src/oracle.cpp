#include "roman/oracle.hpp"

namespace roman {

namespace {

// Scratch-buffer variant of from_v2 + is_minimal_rdf so that the 2^n sweep
// does not allocate per subset.
class SubsetChecker {
public:
    explicit SubsetChecker(const Graph& g) : g_(g), f_(g.order(), 1), cover_(g.order(), 0) {}

    // Builds the candidate for the given 2-set and reports minimality.
    bool candidate(std::uint32_t mask, RomanFunction& out) {
        const int n = g_.order();
        std::fill(f_.values.begin(), f_.values.end(), std::uint8_t{1});
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1u) f_[v] = 2;
        for (Vertex v = 0; v < n; ++v) {
            if (f_[v] != 2) continue;
            for (Vertex u : g_.neighbors(v))
                if (f_[u] != 2) f_[u] = 0;
        }
        if (!minimal()) return false;
        out = f_;
        return true;
    }

private:
    bool minimal() {
        const int n = g_.order();
        // Condition 1 holds by construction of the candidate. Cover counts on
        // G' = G[V0 u V2]; V1 vertices never neighbor a 2 here.
        std::fill(cover_.begin(), cover_.end(), 0);
        for (Vertex v = 0; v < n; ++v) {
            if (f_[v] != 2) continue;
            ++cover_[v];
            for (Vertex u : g_.neighbors(v))
                if (f_[u] != 1) ++cover_[u];
        }
        for (Vertex u = 0; u < n; ++u)
            if (f_[u] == 0 && cover_[u] == 0) return false;
        for (Vertex v = 0; v < n; ++v) {
            if (f_[v] != 2) continue;
            bool has_private = false;
            for (Vertex u : g_.neighbors(v)) {
                if (f_[u] != 1 && cover_[u] == 1) {
                    has_private = true;
                    break;
                }
            }
            if (!has_private) return false;
        }
        return true;
    }

    const Graph& g_;
    RomanFunction f_;
    std::vector<int> cover_;
};

}  // namespace

void oracle_enumerate(const Graph& g, const FunctionSink& sink, int cap) {
    const int n = g.order();
    if (n > cap) throw OracleCapExceeded(n, cap);
    SubsetChecker checker(g);
    RomanFunction f;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < end; ++mask)
        if (checker.candidate(static_cast<std::uint32_t>(mask), f)) sink(f);
}

std::uint64_t oracle_count(const Graph& g, int cap) {
    std::uint64_t count = 0;
    oracle_enumerate(g, [&](const RomanFunction&) { ++count; }, cap);
    return count;
}

std::vector<RomanFunction> oracle_collect(const Graph& g, int cap) {
    std::vector<RomanFunction> out;
    oracle_enumerate(g, [&](const RomanFunction& f) { out.push_back(f); }, cap);
    return out;
}

}  // namespace roman
