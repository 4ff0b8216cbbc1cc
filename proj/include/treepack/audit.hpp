#ifndef TREEPACK_AUDIT_HPP
#define TREEPACK_AUDIT_HPP

#include <random>
#include <string>
#include <vector>

#include "treepack/engine.hpp"

namespace treepack {

/// Randomized self-audit: runs the packing lemmas and both tree-embedding
/// strategies on random instances and checks every quantitative bound
/// against the supplied surjectivity threshold K. Any violation on a
/// space that really is K-surjective means a defect.
struct AuditConfig {
    int lemma_instances = 1000;
    int tree_instances = 500;
    int max_tree_edges = 4;
    int max_star_leaves = 4;
    unsigned long long seed = 1;
};

struct AuditOutcome {
    std::vector<std::string> violations;
    int lemma_checks = 0;
    int tree_checks = 0;
    int positive_guarantees = 0; // checks where the bound actually bites

    bool ok() const { return violations.empty(); }
};

AuditOutcome audit_bounds(const DistanceSpace& space, long long k,
                          const AuditConfig& config);

// Random tree via a random Pruefer sequence, weights drawn from alphabet.
WeightedTree random_weighted_tree(std::mt19937_64& rng, int max_edges,
                                  const std::vector<Distance>& alphabet);

std::vector<PointId> random_subset(std::mt19937_64& rng,
                                   const DistanceSpace& space);

// Shared validity check: every embedding verifies, images pairwise
// disjoint. Appends violations; returns true when clean.
bool check_packing(const DistanceSpace& space, const WeightedTree& tree,
                   const PackingResult& result, const std::string& context,
                   std::vector<std::string>& violations);

} // namespace treepack

#endif
