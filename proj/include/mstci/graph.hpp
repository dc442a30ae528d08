#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstci {

// Undirected edge stored as (u, v) with u < v, so edge sets compare
// element-wise without normalization at the call sites.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b)
        : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("self-loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction; adjacency is kept as one 64-bit row per vertex, which caps
// n at 64 (all experiments stay far below that).
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }  // sorted (u, v)

    bool has_edge(int u, int v) const;
    uint64_t adjacency_bits(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const;
    std::vector<int> degrees() const;  // indexed by vertex id

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);   // 0-1-2-...-(n-1)
    static Graph star(int n);   // hub 0

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<uint64_t> adj_;
};

// Spanning tree of a host graph, rooted at vertex 0 for path queries.
// Construction validates that the edges belong to the host and span it.
class SpanningTree {
public:
    SpanningTree(const Graph& host, std::vector<Edge> tree_edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }  // sorted, n-1 entries

    bool contains(int u, int v) const;
    int parent(int v) const { return parent_[static_cast<size_t>(v)]; }
    int depth(int v) const { return depth_[static_cast<size_t>(v)]; }
    // Index into edges() of the edge between v and parent(v); -1 at the root.
    int parent_edge_index(int v) const { return parent_edge_[static_cast<size_t>(v)]; }

    // Edge set of the unique u-v path as a bitmask over edges() indices;
    // zero iff u == v.
    uint64_t path_mask(int u, int v) const;
    // The same path as an ordered edge list walking from u to v.
    std::vector<Edge> path_from(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> parent_, depth_, parent_edge_;
};

bool is_connected(const Graph& g);

// nu = m - n + 1; defined here only for connected graphs, everything else
// is rejected rather than guessing multi-component semantics.
int cyclomatic_number(const Graph& g);

// All vertices of degree n-1, ascending.
std::vector<int> universal_vertices(const Graph& g);

struct GraphQuantities {
    int n = 0;
    int m = 0;
    int nu = 0;
    std::vector<int> degree_sequence;
};
GraphQuantities graph_quantities(const Graph& g);

// Parse errors carry the 1-based line number of the offending input line.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_) : std::runtime_error(what_), line(line_) {}
};

// Edge-list text format: header "n m", then exactly m lines "u v" with
// 0 <= u < v < n, LF line endings.
Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace mstci
