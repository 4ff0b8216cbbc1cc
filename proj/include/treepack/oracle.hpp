#ifndef TREEPACK_ORACLE_HPP
#define TREEPACK_ORACLE_HPP

#include <vector>

#include "treepack/engine.hpp"

namespace treepack {

/// Hard limits for the brute-force oracle. Exceeding any of them is a
/// loud failure, never a truncated answer.
struct OracleBudget {
    int max_points = 12;
    int max_tree_edges = 4;
    long long node_limit = 20'000'000;
};

// Every injective weight-respecting vertex -> point map, by backtracking
// in BFS vertex order; deterministic lexicographic order.
std::vector<Embedding> enumerate_embeddings(const DistanceSpace& space,
                                            std::vector<PointId> E,
                                            const WeightedTree& tree,
                                            const OracleBudget& budget = {});

struct PackingOracle {
    int size;
    std::vector<Embedding> witness;
};

// Exact maximum number of pairwise point-disjoint embeddings.
PackingOracle max_disjoint_packing(const DistanceSpace& space,
                                   std::vector<PointId> E,
                                   const WeightedTree& tree,
                                   const OracleBudget& budget = {});

} // namespace treepack

#endif
