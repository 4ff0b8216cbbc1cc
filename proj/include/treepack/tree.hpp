#ifndef TREEPACK_TREE_HPP
#define TREEPACK_TREE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "treepack/distance_space.hpp"
#include "treepack/errors.hpp"

namespace treepack {

struct WeightedEdge {
    int u;
    int v;
    Distance weight;
};

/// Finite edge-weighted tree on vertices 0..n-1. Validated on construction:
/// connected, acyclic, no self-loops or duplicate edges.
class WeightedTree {
public:
    WeightedTree(int vertex_count, std::vector<WeightedEdge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<WeightedEdge>& edges() const { return edges_; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    // (neighbor, edge weight) pairs, ascending by neighbor label
    const std::vector<std::pair<int, Distance>>& neighbors(int v) const {
        return adj_[v];
    }

    bool is_leaf(int v) const { return degree(v) == 1; }
    // At most one vertex of degree >= 2 and at least one edge.
    bool is_star() const;
    // Lowest-labeled vertex of maximum degree.
    int star_center() const;

private:
    int vertex_count_;
    std::vector<WeightedEdge> edges_;
    std::vector<std::vector<std::pair<int, Distance>>> adj_;
};

inline WeightedTree make_tree(int vertex_count, std::vector<WeightedEdge> edges) {
    return WeightedTree(vertex_count, std::move(edges));
}

// (d1 + 1) * prod_{i>=2} d_i over the descending degree sequence of a
// connected graph; 1 for a single vertex. Defined for any finite nonempty
// connected graph, not only trees.
std::uint64_t stringiness(int vertex_count,
                          std::span<const std::pair<int, int>> edges);
std::uint64_t stringiness(const WeightedTree& tree);

/// The edge-weight multiset of a star K_{1,n}: distinct weights with
/// multiplicities, ascending by weight.
struct StarSpec {
    struct WeightClass {
        Distance weight;
        int multiplicity;
    };
    std::vector<WeightClass> classes;

    int total_leaves() const;
    // Canonical star tree: vertex 0 is the center, leaves 1..n appear
    // class by class in listed order.
    WeightedTree to_tree() const;
};

StarSpec star_spec_of(const WeightedTree& tree);

/// One step of the leaf-peeling decomposition: a non-leaf pivot w whose
/// neighbors are all leaves except one, with some other vertex of degree
/// >= deg(w). Removing the leaf neighbors divides the stringiness by
/// y + 1 where y = deg(w) - 1.
struct PeelStep {
    int pivot;                                       // w, in original labels
    std::vector<std::pair<int, Distance>> peeled;    // (leaf, weight), ascending leaf
    WeightedTree remainder;                          // the tree H, relabeled
    std::vector<int> old_to_new;                     // -1 for peeled vertices
    int pivot_in_remainder;

    int y() const { return static_cast<int>(peeled.size()); }
};

// Stars are the induction base case and get their StarSpec instead of a
// peel step. Pivot tie-break: lowest label among valid candidates.
std::variant<PeelStep, StarSpec> leaf_peel(const WeightedTree& tree);

// One representative per isomorphism class of unlabeled trees with
// edge_count edges (weights all zero). Generated by growing trees one
// leaf at a time with canonical-form deduplication; sorted by canonical
// form, so the order is reproducible.
std::vector<WeightedTree> enumerate_trees(int edge_count, int cap = 9);

// Canonical bracket encoding of the unweighted shape, rooted at the
// tree center; equal strings iff isomorphic.
std::string canonical_form(const WeightedTree& tree);

// Decode a Pruefer sequence over vertices 0..n-1 (length n-2, n >= 2)
// into an edge list.
std::vector<std::pair<int, int>> tree_from_pruefer(std::span<const int> seq);

} // namespace treepack

#endif
