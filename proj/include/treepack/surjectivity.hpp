#ifndef TREEPACK_SURJECTIVITY_HPP
#define TREEPACK_SURJECTIVITY_HPP

#include <optional>
#include <vector>

#include "treepack/distance_space.hpp"

namespace treepack {

// How a subset "determines" a distance. DistinctPair counts only pairs
// x != y; Diagonal also lets a point determine d(x,x) by itself.
enum class Convention { DistinctPair, Diagonal };

struct DistanceStat {
    Distance t;
    int alpha;                    // independence number of the distance-t graph
    std::vector<PointId> witness; // maximum t-avoiding set
};

struct SurjectivityReport {
    enum class Method { Exact, Randomized };
    Method method = Method::Exact;
    Convention convention = Convention::DistinctPair;
    std::optional<long long> exact_k;       // 1 + max_t alpha(t)
    std::optional<long long> lower_bound_k; // randomized mode
    std::vector<DistanceStat> per_distance; // alphabet order
};

// Exact K-surjectivity threshold by branch-and-bound independence numbers
// of the per-distance graphs. Rejects spaces above the cap.
SurjectivityReport exact_k(const DistanceSpace& space,
                           Convention convention = Convention::DistinctPair,
                           int cap = 64);

// Maximum subset of X with no pair at distance t (under the convention);
// exact, same cap.
std::vector<PointId> max_distance_avoiding_set(
    const DistanceSpace& space, Distance t,
    Convention convention = Convention::DistinctPair, int cap = 64);

// Randomized lower bound on K: repeated greedy deletion finds large
// distance-avoiding sets. Deterministic for a fixed seed; advisory only.
SurjectivityReport estimate_k(const DistanceSpace& space, int trials,
                              unsigned long long seed,
                              Convention convention = Convention::DistinctPair);

struct IrRow {
    int q;
    int dim;
    long long k;
    bool exact;
    double q_pow; // q^((dim+1)/2)
    double ratio; // k / q_pow
};

// Exact or estimated K alongside q^((d+1)/2) for each (q, dim) pair.
std::vector<IrRow> ir_threshold_table(const std::vector<int>& qs,
                                      const std::vector<int>& dims,
                                      int exact_cap = 64, int trials = 2000,
                                      unsigned long long seed = 1,
                                      long long point_cap = 1'000'000);

// Exact maximum independent set of a graph on <= 64 vertices given as
// adjacency bitmasks. Exposed for tests.
std::vector<int> max_independent_set(const std::vector<std::uint64_t>& adjacency);

} // namespace treepack

#endif
