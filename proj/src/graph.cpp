#include "roman/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace roman {

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return twice / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    auto insert_sorted = [](std::vector<Vertex>& nb, Vertex w) {
        auto it = std::lower_bound(nb.begin(), nb.end(), w);
        if (it == nb.end() || *it != w) nb.insert(it, w);
    };
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// Strips comments and the trailing CR, returns false for skippable lines.
bool significant_line(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    return line.find_first_not_of(" \t") != std::string::npos;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    Graph g;
    long long seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!significant_line(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) throw ParseError(line_no, "expected header \"n m\"");
            std::string rest;
            if (ls >> rest) throw ParseError(line_no, "trailing tokens after header");
            g = Graph(static_cast<int>(n));
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError(line_no, "expected edge \"u v\"");
        std::string rest;
        if (ls >> rest) throw ParseError(line_no, "trailing tokens after edge");
        if (u < 0 || u >= n) throw ParseError(line_no, "id " + std::to_string(u) + " out of range");
        if (v < 0 || v >= n) throw ParseError(line_no, "id " + std::to_string(v) + " out of range");
        if (u == v) throw ParseError(line_no, "self-loop at " + std::to_string(u));
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        ++seen;
    }
    if (n < 0) throw ParseError(line_no, "missing header");
    if (seen != m) throw ParseError(line_no, "expected " + std::to_string(m) + " edges, got " + std::to_string(seen));
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

IntervalRepresentation parse_intervals(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1;
    IntervalRepresentation rep;
    while (std::getline(in, line)) {
        ++line_no;
        if (!significant_line(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0) throw ParseError(line_no, "expected header \"n\"");
            rep.intervals.reserve(static_cast<std::size_t>(n));
            continue;
        }
        if (static_cast<long long>(rep.intervals.size()) == n)
            throw ParseError(line_no, "more than " + std::to_string(n) + " intervals");
        double l, r;
        if (!(ls >> l >> r)) throw ParseError(line_no, "expected interval \"l r\"");
        if (l > r) throw ParseError(line_no, "empty interval, l > r");
        rep.intervals.emplace_back(l, r);
    }
    if (n < 0) throw ParseError(line_no, "missing header");
    if (static_cast<long long>(rep.intervals.size()) != n)
        throw ParseError(line_no, "expected " + std::to_string(n) + " intervals, got " +
                                      std::to_string(rep.intervals.size()));
    return rep;
}

IntervalRepresentation parse_intervals(const std::string& text) {
    std::istringstream in(text);
    return parse_intervals(in);
}

Graph graph_from_intervals(const IntervalRepresentation& rep) {
    Graph g(rep.order());
    for (Vertex u = 0; u < rep.order(); ++u)
        for (Vertex v = u + 1; v < rep.order(); ++v)
            if (rep.intersects(u, v)) g.add_edge(u, v);
    return g;
}

}  // namespace roman
