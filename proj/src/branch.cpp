#include "roman/branch.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace roman {

BranchState::BranchState(const Graph& g)
    : g_(&g),
      mark_(g.order(), Mark::Active),
      value_(g.order(), 0),
      dominated_(g.order(), 0),
      live_degree_(g.order(), 0),
      live_count_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) live_degree_[v] = g.degree(v);
}

int BranchState::count_live_neighbors(Vertex v, Mark m) const {
    int count = 0;
    for (Vertex u : g_->neighbors(v))
        if (mark_[u] == m) ++count;
    return count;
}

std::vector<Vertex> BranchState::live_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex u : g_->neighbors(v))
        if (is_live(u)) out.push_back(u);
    return out;
}

std::vector<Vertex> BranchState::live_neighbors(Vertex v, Mark m) const {
    std::vector<Vertex> out;
    for (Vertex u : g_->neighbors(v))
        if (mark_[u] == m) out.push_back(u);
    return out;
}

bool BranchState::live_neighborhood_is_clique(Vertex v) const {
    auto nb = live_neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g_->adjacent(nb[i], nb[j])) return false;
    return true;
}

void BranchState::remove_from_live(Vertex v) {
    --live_count_;
    for (Vertex u : g_->neighbors(v)) --live_degree_[u];
}

void BranchState::finalize(Vertex v, std::uint8_t value) {
    if (is_live(v)) remove_from_live(v);
    mark_[v] = Mark::Done;
    value_[v] = value;
}

void BranchState::assign_two(Vertex v) {
    if (!is_live(v) || mark_[v] == Mark::NotTwo)
        throw std::logic_error("assign_two on " + std::to_string(v) + " with mark " +
                               std::to_string(static_cast<int>(mark_[v])));
    finalize(v, 2);
    for (Vertex u : g_->neighbors(v)) {
        dominated_[u] = 1;
        switch (mark_[u]) {
            case Mark::Active: mark_[u] = Mark::NotOne; break;
            case Mark::NotTwo: finalize(u, 0); break;
            case Mark::PendingZero: finalize(u, 0); break;
            default: break;  // NotOne keeps its label, Done keeps its value
        }
    }
}

void BranchState::assign_one(Vertex v) {
    if (!is_live(v) || mark_[v] == Mark::NotOne)
        throw std::logic_error("assign_one on " + std::to_string(v) + " with mark " +
                               std::to_string(static_cast<int>(mark_[v])));
    finalize(v, 1);
    for (Vertex u : g_->neighbors(v)) {
        if (mark_[u] == Mark::Active) {
            mark_[u] = Mark::NotTwo;
        } else if (mark_[u] == Mark::NotOne) {
            assert(dominated_[u]);
            finalize(u, 0);
        }
    }
}

void BranchState::assign_zero(Vertex v) {
    if (!is_live(v)) throw std::logic_error("assign_zero on non-live vertex");
    if (dominated_[v]) {
        finalize(v, 0);
    } else {
        remove_from_live(v);
        mark_[v] = Mark::PendingZero;
        value_[v] = 0;
    }
}

void BranchState::exclude_two(Vertex v) {
    switch (mark_[v]) {
        case Mark::Active: mark_[v] = Mark::NotTwo; break;
        case Mark::NotOne: assign_zero(v); break;
        default: break;  // NotTwo already excluded; finalized vertices keep values
    }
}

double BranchState::measure(const mc::WeightSet& w) const {
    double mu = 0.0;
    for (Vertex v = 0; v < g_->order(); ++v) {
        switch (mark_[v]) {
            case Mark::Active: mu += 1.0; break;
            case Mark::NotOne: mu += w.w1; break;
            case Mark::NotTwo: mu += w.w2; break;
            default: break;
        }
    }
    return mu;
}

void BranchState::reduce() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int rule = 1; rule <= 3 && !changed; ++rule) {
            for (Vertex v = 0; v < g_->order() && !changed; ++v) {
                if (!is_live(v)) continue;
                switch (rule) {
                    case 1:
                        if (mark_[v] == Mark::NotTwo &&
                            count_live_neighbors(v, Mark::NotTwo) == live_degree_[v]) {
                            assign_one(v);
                            changed = true;
                        }
                        break;
                    case 2:
                        if (mark_[v] == Mark::NotOne &&
                            count_live_neighbors(v, Mark::NotOne) == live_degree_[v]) {
                            assign_zero(v);
                            changed = true;
                        }
                        break;
                    case 3:
                        if (mark_[v] == Mark::Active &&
                            count_live_neighbors(v, Mark::NotOne) == live_degree_[v]) {
                            mark_[v] = Mark::NotTwo;
                            changed = true;
                        }
                        break;
                }
            }
        }
    }
}

RomanFunction BranchState::reconstruct() const {
    if (live_count_ != 0) throw std::logic_error("reconstruct on a state with live vertices");
    RomanFunction f(g_->order());
    for (Vertex v = 0; v < g_->order(); ++v)
        f[v] = mark_[v] == Mark::Done ? value_[v] : std::uint8_t{0};
    return f;
}

std::string BranchState::dump() const {
    std::ostringstream out;
    static const char* names[] = {"A", "notV1", "notV2", "V0", "done"};
    for (Vertex v = 0; v < g_->order(); ++v) {
        out << v << ':' << names[static_cast<int>(mark_[v])];
        if (mark_[v] == Mark::Done) out << '=' << static_cast<int>(value_[v]);
        out << ' ';
    }
    return out.str();
}

}  // namespace roman
