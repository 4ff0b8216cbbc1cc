#ifndef TREEPACK_ENGINE_HPP
#define TREEPACK_ENGINE_HPP

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "treepack/distance_space.hpp"
#include "treepack/tree.hpp"

namespace treepack {

using Rational = boost::rational<long long>;

/// Injective vertex -> point assignment realizing all edge weights.
struct Embedding {
    std::vector<PointId> vertex_to_point;

    PointId at(int vertex) const { return vertex_to_point[vertex]; }
    std::vector<PointId> image() const; // sorted
};

// K at which the space is assumed K-surjective. Advisory K (e.g. from a
// randomized estimate) produces advisory bound reports, never asserted.
struct KAssumption {
    long long k;
    bool advisory = false;
};

struct BoundReport {
    long long k;
    Rational r;          // |E| / K
    Rational guaranteed; // lower bound on the packing size
    bool met;
    bool advisory;
};

/// A pairwise point-disjoint collection of embeddings plus accounting.
/// consumed covers every point charged to a returned embedding; for the
/// inductive strategies this includes leftover points of partially used
/// sub-embeddings, so residual can undercount what is geometrically free.
struct PackingResult {
    std::vector<Embedding> embeddings;
    std::vector<PointId> consumed; // sorted
    std::vector<PointId> residual; // sorted
    std::optional<BoundReport> bound;
};

enum class Strategy { StarPeel, EdgePeel };

// Maximal disjoint pairs at distance t inside E, greedy in ascending
// point-id order, each point matched to its lowest-id free partner.
// Embeddings are on the single-edge tree (0,1,t). After this call the
// residual contains no pair at distance t.
PackingResult pack_pairs(const DistanceSpace& space, std::vector<PointId> E,
                         Distance t, std::optional<KAssumption> k = {});

// Split E into points with >= s other E-points at distance t (rich) and
// the rest (poor). With exact K, |poor| <= s*K.
std::pair<std::vector<PointId>, std::vector<PointId>>
filter_rich_points(const DistanceSpace& space, const std::vector<PointId>& E,
                   Distance t, int s);

// Maximal disjoint star packings: roots scanned ascending, each weight
// class filled with the lowest-id free neighbors. Embeddings are on
// star.to_tree(). After this call no feasible root remains in the residual.
PackingResult pack_stars(const DistanceSpace& space, std::vector<PointId> E,
                         const StarSpec& star, std::optional<KAssumption> k = {});

// Inductive tree embedding: recursively embed the peeled remainder, then
// pack stars (StarPeel) or pairs (EdgePeel) over the pivot images and
// extend. Deterministic for fixed inputs.
PackingResult embed_tree(const DistanceSpace& space, std::vector<PointId> E,
                         const WeightedTree& tree, Strategy strategy,
                         std::optional<KAssumption> k = {});

struct VerifyResult {
    bool ok;
    std::vector<std::string> violations;
};

// Never throws; reports every collision and wrong-distance edge.
VerifyResult verify_embedding(const DistanceSpace& space, const WeightedTree& tree,
                              const Embedding& embedding);

// Guaranteed packing size with r = e_size / k:
//   StarPeel: (r / sigma(G) - 1) * k
//   EdgePeel: ((r + 1) / 2^n - 1) * k
// May be negative; callers clamp.
Rational guarantee(long long k, long long e_size, const WeightedTree& tree,
                   Strategy strategy);

std::string strategy_name(Strategy s);

} // namespace treepack

#endif
