#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mstci/graph.hpp"

namespace mstci {

// Fundamental cycle induced by a non-tree edge: the cycle edge plus the
// tree path between its endpoints. path_mask is over t.edges() indices.
struct TreeCycle {
    Edge cycle_edge;
    std::vector<Edge> path_edges;  // sorted
    uint64_t path_mask = 0;
};

// Edge set of the unique u-v tree path (sorted; empty iff u == v).
std::vector<Edge> tree_path(const SpanningTree& t, int u, int v);

TreeCycle fundamental_cycle(const Graph& g, const SpanningTree& t, const Edge& f);

// All fundamental cycles, in lexicographic cycle-edge order.
std::vector<TreeCycle> fundamental_cycles(const Graph& g, const SpanningTree& t);

// Number of unordered pairs of tree-cycles sharing at least one tree edge.
long long intersection_number_wrt(const Graph& g, const SpanningTree& t);

// All graph edges with one endpoint in each component of t - {e}; always
// contains e itself.
std::vector<Edge> bond(const Graph& g, const SpanningTree& t, const Edge& e);

enum class BondMode { FullBond, NonRedundant };

// Per-tree-edge edge sets, parallel to tree_edges. In non-redundant mode
// the sets partition E; in full mode each set is the complete bond.
struct BondAssignment {
    BondMode mode = BondMode::FullBond;
    std::vector<Edge> tree_edges;
    std::vector<std::vector<Edge>> sets;

    // |set| - 1 per tree edge (phi_e in non-redundant mode).
    std::vector<int> excess_counts() const;
};

BondAssignment full_bonds(const Graph& g, const SpanningTree& t);

// Default rule: each cycle edge joins the set of the first tree edge on
// the path walked from its smaller endpoint. Any rule assigning a cycle
// edge to one tree edge on its path is valid; the override form lets
// property tests exercise other rules.
BondAssignment non_redundant_bond_set(const Graph& g, const SpanningTree& t);
BondAssignment non_redundant_bond_set(const Graph& g, const SpanningTree& t,
                                      const std::vector<std::pair<Edge, Edge>>& cycle_to_tree);

// Sum over tree edges of C(phi_e, 2) under the default rule; never exceeds
// intersection_number_wrt.
long long bond_lower_estimate(const Graph& g, const SpanningTree& t);
long long bond_lower_estimate(const BondAssignment& assignment);

// Sum over tree edges of C(|b_e| - 1, 2) over full bonds; never below
// intersection_number_wrt.
long long bond_upper_estimate(const Graph& g, const SpanningTree& t);

}  // namespace mstci
