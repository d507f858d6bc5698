#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roman/mc.hpp"
#include "roman/rdf.hpp"

namespace roman {

// Label of a vertex during the branching search.
enum class Mark : std::uint8_t {
    Active,       // undecided
    NotOne,       // cannot end with value 1; always has a finalized 2-neighbor
    NotTwo,       // cannot end with value 2
    PendingZero,  // assigned 0, waiting for a dominating 2
    Done,         // value finalized, vertex removed from the current graph
};

// Search-tree node: a partition of the vertices into live labels, pending
// zeros and finalized values, with live degrees kept incrementally.
//
// Finalizing a value applies the neighborhood effects immediately: a new 2
// moves Active neighbors to NotOne, turns NotTwo/PendingZero neighbors into
// finalized zeros and marks everyone dominated; a new 1 moves Active
// neighbors to NotTwo and turns NotOne neighbors into zeros.
class BranchState {
public:
    explicit BranchState(const Graph& g);

    const Graph& graph() const { return *g_; }
    Mark mark(Vertex v) const { return mark_[v]; }
    bool is_live(Vertex v) const { return mark_[v] <= Mark::NotTwo; }
    bool dominated(Vertex v) const { return dominated_[v] != 0; }
    int live_degree(Vertex v) const { return live_degree_[v]; }
    int live_count() const { return live_count_; }

    // Live neighbors carrying the given mark.
    int count_live_neighbors(Vertex v, Mark m) const;
    std::vector<Vertex> live_neighbors(Vertex v) const;
    std::vector<Vertex> live_neighbors(Vertex v, Mark m) const;
    bool live_neighborhood_is_clique(Vertex v) const;

    void assign_two(Vertex v);
    void assign_one(Vertex v);
    void assign_zero(Vertex v);
    // "Put v into V-hat-2": Active turns NotTwo, NotOne becomes a zero,
    // NotTwo is left alone.
    void exclude_two(Vertex v);

    double measure(const mc::WeightSet& w) const;

    // Reduction rules, applied in order to a fixed point:
    //   1. NotTwo vertex with every live neighbor NotTwo -> value 1,
    //   2. NotOne vertex with every live neighbor NotOne -> value 0,
    //   3. Active vertex with every live neighbor NotOne -> NotTwo.
    // Never increases the measure.
    void reduce();

    // Requires no live vertices; pending zeros reconstruct as 0.
    RomanFunction reconstruct() const;

    std::string dump() const;

private:
    void finalize(Vertex v, std::uint8_t value);
    void remove_from_live(Vertex v);

    const Graph* g_;
    std::vector<Mark> mark_;
    std::vector<std::uint8_t> value_;
    std::vector<std::uint8_t> dominated_;
    std::vector<int> live_degree_;
    int live_count_;
};

}  // namespace roman
