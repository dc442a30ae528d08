#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mstci/graph.hpp"

namespace mstci {

namespace detail {

// Union-find with rollback: union by size, no path compression, so undo
// is a constant-time stack pop.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(static_cast<size_t>(n)), size_(static_cast<size_t>(n), 1) {
        for (int v = 0; v < n; ++v) parent_[static_cast<size_t>(v)] = v;
    }

    int find(int x) const {
        while (parent_[static_cast<size_t>(x)] != x) x = parent_[static_cast<size_t>(x)];
        return x;
    }

    size_t mark() const { return log_.size(); }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[static_cast<size_t>(a)] > size_[static_cast<size_t>(b)]) std::swap(a, b);
        parent_[static_cast<size_t>(a)] = b;
        size_[static_cast<size_t>(b)] += size_[static_cast<size_t>(a)];
        log_.push_back({a, b});
        return true;
    }

    void rollback(size_t mark) {
        while (log_.size() > mark) {
            auto [child, root] = log_.back();
            log_.pop_back();
            parent_[static_cast<size_t>(child)] = child;
            size_[static_cast<size_t>(root)] -= size_[static_cast<size_t>(child)];
        }
    }

private:
    std::vector<int> parent_, size_;
    std::vector<std::pair<int, int>> log_;
};

// Contraction/deletion spanning-tree enumerator. Maintains the invariant
// that the included edges plus the not-yet-decided suffix still connect
// the graph, so every recursion branch yields at least one tree. Trees are
// visited in lexicographic order of their sorted edge-index sets.
template <class Visit>
class TreeIndexEnumerator {
public:
    TreeIndexEnumerator(const Graph& g, Visit& visit)
        : g_(g), n_(g.vertex_count()), m_(g.edge_count()), dsu_(g.vertex_count()), visit_(visit),
          scratch_parent_(static_cast<size_t>(g.vertex_count())),
          scratch_stamp_(static_cast<size_t>(g.vertex_count()), 0) {
        chosen_.reserve(static_cast<size_t>(n_ > 0 ? n_ - 1 : 0));
    }

    void run() { recurse(0); }

private:
    int scratch_find(int x) {
        while (true) {
            if (scratch_stamp_[static_cast<size_t>(x)] != stamp_) {
                scratch_stamp_[static_cast<size_t>(x)] = stamp_;
                scratch_parent_[static_cast<size_t>(x)] = x;
                return x;
            }
            int p = scratch_parent_[static_cast<size_t>(x)];
            if (p == x) return x;
            scratch_parent_[static_cast<size_t>(x)] = scratch_parent_[static_cast<size_t>(p)] != p &&
                                                              scratch_stamp_[static_cast<size_t>(p)] == stamp_
                                                          ? scratch_parent_[static_cast<size_t>(p)]
                                                          : p;
            x = p;
        }
    }

    // True iff the included edges plus edges[from..m) connect all vertices.
    bool connected_excluding(int from) {
        ++stamp_;
        int components = n_ - static_cast<int>(chosen_.size());
        if (components == 1) return true;
        const auto& edges = g_.edges();
        for (int j = from; j < m_; ++j) {
            int a = scratch_find(dsu_.find(edges[static_cast<size_t>(j)].u));
            int b = scratch_find(dsu_.find(edges[static_cast<size_t>(j)].v));
            if (a != b) {
                scratch_parent_[static_cast<size_t>(a)] = b;
                if (--components == 1) return true;
            }
        }
        return components == 1;
    }

    void recurse(int i) {
        if (stop_) return;
        if (static_cast<int>(chosen_.size()) == n_ - 1) {
            if (!visit_(std::span<const int>(chosen_))) stop_ = true;
            return;
        }
        const Edge& e = g_.edges()[static_cast<size_t>(i)];
        if (dsu_.find(e.u) != dsu_.find(e.v)) {
            size_t mark = dsu_.mark();
            dsu_.unite(e.u, e.v);
            chosen_.push_back(i);
            recurse(i + 1);
            chosen_.pop_back();
            dsu_.rollback(mark);
            if (stop_) return;
            if (connected_excluding(i + 1)) recurse(i + 1);
        } else {
            recurse(i + 1);  // would close a cycle: forced exclude
        }
    }

    const Graph& g_;
    int n_, m_;
    RollbackDsu dsu_;
    Visit& visit_;
    std::vector<int> chosen_;
    std::vector<int> scratch_parent_;
    std::vector<int> scratch_stamp_;
    int stamp_ = 0;
    bool stop_ = false;
};

}  // namespace detail

// Visits the sorted edge-index set of every spanning tree exactly once, in
// lexicographic order; visit returns false to stop early. Requires a
// connected graph.
template <class Visit>
void for_each_spanning_tree_index_set(const Graph& g, Visit&& visit) {
    if (!is_connected(g)) throw std::invalid_argument("spanning tree enumeration requires a connected graph");
    detail::TreeIndexEnumerator<Visit> enumerator(g, visit);
    enumerator.run();
}

// SpanningTree-typed wrapper over the index enumerator.
void enumerate_spanning_trees(const Graph& g, const std::function<bool(const SpanningTree&)>& visit);

// Kirchhoff count: determinant of a principal (n-1)x(n-1) Laplacian minor,
// in exact integer arithmetic (Bareiss elimination).
mpz_class count_spanning_trees(const Graph& g);

// Lemma-5 closed form: sum over non-hub vertices of C(d(u)-1, 2). The hub
// must be a universal vertex.
long long star_intersection_number(const Graph& g, int hub);

enum class SolveMethod { Enumerated, StarFastPath };
std::string to_string(SolveMethod method);

struct SolveOptions {
    long long tree_budget = 10000000;  // enumerated path only
    bool use_star_fast_path = true;
};

struct BudgetExceeded : std::runtime_error {
    mpz_class tree_count;
    long long budget;
    BudgetExceeded(mpz_class count, long long budget_)
        : std::runtime_error("spanning tree count " + count.get_str() + " exceeds enumeration budget " +
                             std::to_string(budget_) + " (raise the budget to solve by enumeration)"),
          tree_count(std::move(count)), budget(budget_) {}
};

struct MstciSolution {
    SpanningTree best_tree;
    long long intersection_number = 0;
    long long trees_examined = 0;
    SolveMethod method = SolveMethod::Enumerated;
};

// Exact minimum of the intersection number over all spanning trees. Graphs
// with a universal vertex take the star fast path (optimal per the
// universal-vertex theorem); everything else is solved by exhaustive
// enumeration, ties broken by enumeration order.
MstciSolution solve_mstci(const Graph& g, const SolveOptions& options = {});

}  // namespace mstci
