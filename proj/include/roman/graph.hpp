#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace roman {

using Vertex = int;

// Simple undirected graph on vertices 0..n-1, sorted adjacency lists,
// no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    }

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }

    // Duplicate edges collapse; self-loops and out-of-range ids throw.
    void add_edge(Vertex u, Vertex v);

    std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, sorted

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// Edge-list format: header "n m", then m lines "u v"; '#' starts a comment
// line; blank lines and CRLF line ends are tolerated.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

// Canonical form: "n m" header then one edge "u v" per line with u < v,
// sorted lexicographically.
std::string serialize_edge_list(const Graph& g);

// Closed interval [l, r] per vertex; intersecting intervals are adjacent,
// endpoint touching included.
struct IntervalRepresentation {
    std::vector<std::pair<double, double>> intervals;

    int order() const { return static_cast<int>(intervals.size()); }
    double left(Vertex v) const { return intervals[static_cast<std::size_t>(v)].first; }
    double right(Vertex v) const { return intervals[static_cast<std::size_t>(v)].second; }
    bool intersects(Vertex u, Vertex v) const {
        return std::max(left(u), left(v)) <= std::min(right(u), right(v));
    }
    // Order by right endpoint, then left endpoint, then id.
    bool leftmost_before(Vertex u, Vertex v) const {
        if (right(u) != right(v)) return right(u) < right(v);
        if (left(u) != left(v)) return left(u) < left(v);
        return u < v;
    }
};

// Interval format: header "n", then n lines "l r" (decimal values, l <= r).
IntervalRepresentation parse_intervals(std::istream& in);
IntervalRepresentation parse_intervals(const std::string& text);

Graph graph_from_intervals(const IntervalRepresentation& rep);

}  // namespace roman
