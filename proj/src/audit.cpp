#include "treepack/audit.hpp"

#include "treepack/io.hpp"

#include <algorithm>
#include <set>

namespace treepack {

WeightedTree random_weighted_tree(std::mt19937_64& rng, int max_edges,
                                  const std::vector<Distance>& alphabet) {
    int n = std::uniform_int_distribution<int>(1, max_edges + 1)(rng);
    if (n == 1) return WeightedTree(1, {});
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = std::uniform_int_distribution<int>(0, n - 1)(rng);
    auto shape = tree_from_pruefer(seq);
    std::vector<WeightedEdge> edges;
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    for (auto [u, v] : shape) edges.push_back({u, v, alphabet[pick(rng)]});
    return WeightedTree(n, std::move(edges));
}

std::vector<PointId> random_subset(std::mt19937_64& rng,
                                   const DistanceSpace& space) {
    std::vector<PointId> pts = space.all_points();
    std::shuffle(pts.begin(), pts.end(), rng);
    int size = std::uniform_int_distribution<int>(1, space.size())(rng);
    pts.resize(size);
    std::sort(pts.begin(), pts.end());
    return pts;
}

bool check_packing(const DistanceSpace& space, const WeightedTree& tree,
                   const PackingResult& result, const std::string& context,
                   std::vector<std::string>& violations) {
    bool clean = true;
    std::set<PointId> taken;
    for (const auto& emb : result.embeddings) {
        auto verdict = verify_embedding(space, tree, emb);
        if (!verdict.ok) {
            clean = false;
            for (const auto& v : verdict.violations)
                violations.push_back(context + ": " + v);
        }
        for (PointId p : emb.vertex_to_point)
            if (!taken.insert(p).second) {
                clean = false;
                violations.push_back(context + ": point " + std::to_string(p) +
                                     " used by two embeddings");
            }
    }
    if (result.bound && !result.bound->met) {
        clean = false;
        violations.push_back(context + ": bound not met, got " +
                             std::to_string(result.embeddings.size()) +
                             " embeddings, guaranteed " +
                             rational_to_string(result.bound->guaranteed));
    }
    return clean;
}

AuditOutcome audit_bounds(const DistanceSpace& space, long long k,
                          const AuditConfig& config) {
    AuditOutcome outcome;
    std::mt19937_64 rng(config.seed);
    const auto& alphabet = space.alphabet();
    KAssumption ka{k, false};

    for (int i = 0; i < config.lemma_instances; ++i) {
        auto E = random_subset(rng, space);
        Distance t = alphabet[std::uniform_int_distribution<size_t>(
            0, alphabet.size() - 1)(rng)];
        std::string tag = "lemma#" + std::to_string(i);

        // pair packing bound (and validity/maximality)
        auto pairs = pack_pairs(space, E, t, ka);
        check_packing(space, WeightedTree(2, {{0, 1, t}}), pairs, tag + " pairs",
                      outcome.violations);
        for (size_t a = 0; a < pairs.residual.size(); ++a)
            for (size_t b = a + 1; b < pairs.residual.size(); ++b)
                if (space.distance(pairs.residual[a], pairs.residual[b]) == t)
                    outcome.violations.push_back(
                        tag + ": pack_pairs residual still contains a t-pair");
        if (pairs.bound && pairs.bound->guaranteed > 0) ++outcome.positive_guarantees;

        // degree filter bound
        int s = std::uniform_int_distribution<int>(1, 3)(rng);
        auto [rich, poor] = filter_rich_points(space, E, t, s);
        if (static_cast<long long>(poor.size()) > static_cast<long long>(s) * k)
            outcome.violations.push_back(
                tag + ": |poor| = " + std::to_string(poor.size()) +
                " exceeds s*K = " + std::to_string(s * k));
        if (rich.size() + poor.size() != E.size())
            outcome.violations.push_back(tag + ": rich/poor do not partition E");

        // star packing bound
        StarSpec spec;
        {
            std::vector<Distance> weights = alphabet;
            std::shuffle(weights.begin(), weights.end(), rng);
            int a = std::uniform_int_distribution<int>(
                1, std::min<int>(3, weights.size()))(rng);
            int leaves_left = config.max_star_leaves;
            for (int c = 0; c < a && leaves_left > 0; ++c) {
                int m = std::uniform_int_distribution<int>(
                    1, std::max(1, leaves_left - (a - c - 1)))(rng);
                spec.classes.push_back({weights[c], m});
                leaves_left -= m;
            }
            std::sort(spec.classes.begin(), spec.classes.end(),
                      [](const auto& x, const auto& y) { return x.weight < y.weight; });
        }
        auto stars = pack_stars(space, E, spec, ka);
        check_packing(space, spec.to_tree(), stars, tag + " stars",
                      outcome.violations);
        if (stars.bound && stars.bound->guaranteed > 0) ++outcome.positive_guarantees;
        ++outcome.lemma_checks;
    }

    for (int i = 0; i < config.tree_instances; ++i) {
        auto tree = random_weighted_tree(rng, config.max_tree_edges, alphabet);
        auto E = random_subset(rng, space);
        std::string tag = "tree#" + std::to_string(i);

        for (Strategy strategy : {Strategy::StarPeel, Strategy::EdgePeel}) {
            auto result = embed_tree(space, E, tree, strategy, ka);
            check_packing(space, tree, result, tag + " " + strategy_name(strategy),
                          outcome.violations);
            if (result.bound && result.bound->guaranteed > 0)
                ++outcome.positive_guarantees;
        }

        // existence threshold: |E| >= 2*sigma*K forces an embedding
        auto sigma = static_cast<long long>(stringiness(tree));
        if (static_cast<long long>(E.size()) >= 2 * sigma * k) {
            auto result = embed_tree(space, E, tree, Strategy::StarPeel, ka);
            if (result.embeddings.empty())
                outcome.violations.push_back(
                    tag + ": |E| >= 2*sigma*K but no embedding found");
        }

        // star_peel can never promise less than edge_peel when both promise.
        // Only from two edges up: for a single edge the pair lemma beats the
        // general formula by K/2 (sigma = 2^n exactly there).
        if (tree.edge_count() >= 2) {
            auto gs = guarantee(k, static_cast<long long>(E.size()), tree,
                                Strategy::StarPeel);
            auto ge = guarantee(k, static_cast<long long>(E.size()), tree,
                                Strategy::EdgePeel);
            if (gs >= 0 && ge >= 0 && gs < ge)
                outcome.violations.push_back(
                    tag + ": star_peel guarantee below edge_peel guarantee");
        }
        ++outcome.tree_checks;
    }
    return outcome;
}

} // namespace treepack
