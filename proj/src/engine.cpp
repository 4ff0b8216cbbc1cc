#include "treepack/engine.hpp"

#include <algorithm>
#include <map>

namespace treepack {

std::vector<PointId> Embedding::image() const {
    std::vector<PointId> img = vertex_to_point;
    std::sort(img.begin(), img.end());
    return img;
}

std::string strategy_name(Strategy s) {
    return s == Strategy::StarPeel ? "star_peel" : "edge_peel";
}

namespace {

std::vector<PointId> normalize_subset(const DistanceSpace& space,
                                      std::vector<PointId> E) {
    for (PointId p : E) space.check_point(p);
    std::sort(E.begin(), E.end());
    E.erase(std::unique(E.begin(), E.end()), E.end());
    return E;
}

std::vector<PointId> set_difference(const std::vector<PointId>& a,
                                    const std::vector<PointId>& b) {
    std::vector<PointId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return out;
}

void finalize(const DistanceSpace& space, PackingResult& result,
              const std::vector<PointId>& E, Rational bound_value,
              const std::optional<KAssumption>& k) {
    (void)space;
    result.residual = set_difference(E, result.consumed);
    if (k) {
        if (k->k < 1) throw ValidationError("bound report: K must be positive");
        BoundReport report;
        report.k = k->k;
        report.r = Rational(static_cast<long long>(E.size()), k->k);
        report.guaranteed = bound_value;
        report.met =
            Rational(static_cast<long long>(result.embeddings.size())) >=
            bound_value;
        report.advisory = k->advisory;
        result.bound = report;
    }
}

} // namespace

PackingResult pack_pairs(const DistanceSpace& space, std::vector<PointId> E,
                         Distance t, std::optional<KAssumption> k) {
    E = normalize_subset(space, E);
    PackingResult result;
    std::vector<char> used(space.size(), 0);

    for (PointId e : E) {
        if (used[e]) continue;
        for (PointId f : E) {
            if (f == e || used[f]) continue;
            if (space.distance(e, f) == t) {
                used[e] = used[f] = 1;
                result.embeddings.push_back(Embedding{{e, f}});
                result.consumed.push_back(e);
                result.consumed.push_back(f);
                break;
            }
        }
    }
    std::sort(result.consumed.begin(), result.consumed.end());

    Rational bound_value;
    if (k && k->k >= 1) {
        Rational r(static_cast<long long>(E.size()), k->k);
        bound_value = (r - 1) / 2 * k->k;
    }
    finalize(space, result, E, bound_value, k);
    return result;
}

std::pair<std::vector<PointId>, std::vector<PointId>>
filter_rich_points(const DistanceSpace& space, const std::vector<PointId>& E,
                   Distance t, int s) {
    if (s < 1) throw ValidationError("filter_rich_points: s must be positive");
    auto pts = normalize_subset(space, E);
    std::vector<PointId> rich, poor;
    for (PointId e : pts) {
        int neighbors = 0;
        for (PointId f : pts)
            if (f != e && space.distance(e, f) == t && ++neighbors >= s) break;
        (neighbors >= s ? rich : poor).push_back(e);
    }
    return {rich, poor};
}

PackingResult pack_stars(const DistanceSpace& space, std::vector<PointId> E,
                         const StarSpec& star, std::optional<KAssumption> k) {
    if (star.classes.empty())
        throw ValidationError("pack_stars: star has no edges");
    for (const auto& c : star.classes)
        if (c.multiplicity < 1)
            throw ValidationError("pack_stars: non-positive multiplicity");

    E = normalize_subset(space, E);
    PackingResult result;
    std::vector<char> used(space.size(), 0);
    const int n = star.total_leaves();

    for (PointId root : E) {
        if (used[root]) continue;

        // weight classes partition candidate leaves (a point has exactly
        // one distance to the root), so per-class counting is enough
        std::vector<std::vector<PointId>> chosen;
        bool feasible = true;
        for (const auto& c : star.classes) {
            std::vector<PointId> leaves;
            for (PointId f : E) {
                if (f == root || used[f]) continue;
                if (space.distance(root, f) == c.weight) {
                    leaves.push_back(f);
                    if (static_cast<int>(leaves.size()) == c.multiplicity) break;
                }
            }
            if (static_cast<int>(leaves.size()) < c.multiplicity) {
                feasible = false;
                break;
            }
            chosen.push_back(std::move(leaves));
        }
        if (!feasible) continue;

        Embedding emb;
        emb.vertex_to_point.push_back(root);
        used[root] = 1;
        result.consumed.push_back(root);
        for (const auto& leaves : chosen)
            for (PointId f : leaves) {
                emb.vertex_to_point.push_back(f);
                used[f] = 1;
                result.consumed.push_back(f);
            }
        result.embeddings.push_back(std::move(emb));
    }
    std::sort(result.consumed.begin(), result.consumed.end());

    Rational bound_value;
    if (k && k->k >= 1) {
        Rational r(static_cast<long long>(E.size()), k->k);
        bound_value = (r - n) / (n + 1) * k->k;
    }
    finalize(space, result, E, bound_value, k);
    return result;
}

namespace {

struct RecEmbedding {
    Embedding emb;
    std::vector<PointId> footprint; // sorted; every point charged to emb
};

std::vector<PointId> merge_sorted(std::vector<PointId> a,
                                  const std::vector<PointId>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

// Leaves of a star tree listed class by class (ascending weight, then
// ascending label), matching StarSpec::to_tree ordering.
std::vector<int> star_leaves_in_spec_order(const WeightedTree& tree, int center) {
    std::vector<std::pair<Distance, int>> leaves;
    for (auto [u, t] : tree.neighbors(center)) leaves.emplace_back(t, u);
    std::sort(leaves.begin(), leaves.end());
    std::vector<int> out;
    for (auto [t, u] : leaves) out.push_back(u);
    return out;
}

std::vector<RecEmbedding> embed_rec(const DistanceSpace& space,
                                    const std::vector<PointId>& E,
                                    const WeightedTree& tree, Strategy strategy) {
    std::vector<RecEmbedding> out;

    if (tree.edge_count() == 0) {
        for (PointId p : E) out.push_back({Embedding{{p}}, {p}});
        return out;
    }

    if (strategy == Strategy::StarPeel && tree.is_star()) {
        const int center = tree.star_center();
        const auto spec = star_spec_of(tree);
        const auto leaves = star_leaves_in_spec_order(tree, center);
        auto packed = pack_stars(space, E, spec);
        for (const auto& se : packed.embeddings) {
            Embedding emb;
            emb.vertex_to_point.assign(tree.vertex_count(), -1);
            emb.vertex_to_point[center] = se.vertex_to_point[0];
            for (size_t i = 0; i < leaves.size(); ++i)
                emb.vertex_to_point[leaves[i]] = se.vertex_to_point[i + 1];
            auto img = emb.image();
            out.push_back({std::move(emb), std::move(img)});
        }
        return out;
    }

    if (strategy == Strategy::StarPeel) {
        auto step = std::get<PeelStep>(leaf_peel(tree));
        auto sub = embed_rec(space, E, step.remainder, strategy);

        std::vector<PointId> pivot_images;
        std::map<PointId, int> owner;
        for (int i = 0; i < static_cast<int>(sub.size()); ++i) {
            PointId p = sub[i].emb.at(step.pivot_in_remainder);
            pivot_images.push_back(p);
            owner[p] = i;
        }
        std::sort(pivot_images.begin(), pivot_images.end());

        // peeled leaves sorted by (weight, label) align with the canonical
        // star leaf order
        std::vector<std::pair<Distance, int>> peeled;
        StarSpec spec;
        {
            std::map<Distance, int> mult;
            for (auto [v, t] : step.peeled) {
                peeled.emplace_back(t, v);
                ++mult[t];
            }
            std::sort(peeled.begin(), peeled.end());
            for (auto [t, m] : mult) spec.classes.push_back({t, m});
        }

        auto packed = pack_stars(space, pivot_images, spec);
        for (const auto& se : packed.embeddings) {
            const RecEmbedding& base = sub[owner.at(se.vertex_to_point[0])];
            Embedding emb;
            emb.vertex_to_point.assign(tree.vertex_count(), -1);
            for (int x = 0; x < tree.vertex_count(); ++x)
                if (step.old_to_new[x] >= 0)
                    emb.vertex_to_point[x] = base.emb.at(step.old_to_new[x]);
            std::vector<PointId> footprint = base.footprint;
            for (size_t i = 0; i < peeled.size(); ++i) {
                PointId leaf_point = se.vertex_to_point[i + 1];
                emb.vertex_to_point[peeled[i].second] = leaf_point;
                footprint = merge_sorted(std::move(footprint),
                                         sub[owner.at(leaf_point)].footprint);
            }
            out.push_back({std::move(emb), std::move(footprint)});
        }
        return out;
    }

    // EdgePeel: remove the lowest-labeled leaf and pair up pivot images
    int leaf = -1;
    for (int v = 0; v < tree.vertex_count() && leaf < 0; ++v)
        if (tree.is_leaf(v)) leaf = v;
    const auto [pivot, weight] = tree.neighbors(leaf)[0];

    std::vector<int> old_to_new(tree.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < tree.vertex_count(); ++v)
        if (v != leaf) old_to_new[v] = next++;
    std::vector<WeightedEdge> rest;
    for (const auto& e : tree.edges())
        if (e.u != leaf && e.v != leaf)
            rest.push_back({old_to_new[e.u], old_to_new[e.v], e.weight});
    WeightedTree remainder(next, std::move(rest));

    auto sub = embed_rec(space, E, remainder, strategy);
    std::vector<PointId> pivot_images;
    std::map<PointId, int> owner;
    for (int i = 0; i < static_cast<int>(sub.size()); ++i) {
        PointId p = sub[i].emb.at(old_to_new[pivot]);
        pivot_images.push_back(p);
        owner[p] = i;
    }
    std::sort(pivot_images.begin(), pivot_images.end());

    auto packed = pack_pairs(space, pivot_images, weight);
    for (const auto& pe : packed.embeddings) {
        const RecEmbedding& base = sub[owner.at(pe.vertex_to_point[0])];
        const RecEmbedding& mate = sub[owner.at(pe.vertex_to_point[1])];
        Embedding emb;
        emb.vertex_to_point.assign(tree.vertex_count(), -1);
        for (int x = 0; x < tree.vertex_count(); ++x)
            if (x != leaf) emb.vertex_to_point[x] = base.emb.at(old_to_new[x]);
        emb.vertex_to_point[leaf] = pe.vertex_to_point[1];
        out.push_back({std::move(emb),
                       merge_sorted(base.footprint, mate.footprint)});
    }
    return out;
}

} // namespace

PackingResult embed_tree(const DistanceSpace& space, std::vector<PointId> E,
                         const WeightedTree& tree, Strategy strategy,
                         std::optional<KAssumption> k) {
    for (const auto& e : tree.edges())
        if (!space.in_alphabet(e.weight))
            throw ValidationError("embed_tree: edge weight " +
                                  std::to_string(e.weight) +
                                  " is not in the space's distance alphabet");
    E = normalize_subset(space, E);

    auto found = embed_rec(space, E, tree, strategy);

    PackingResult result;
    for (auto& re : found) {
        result.consumed = merge_sorted(std::move(result.consumed), re.footprint);
        result.embeddings.push_back(std::move(re.emb));
    }

    Rational bound_value;
    if (k && k->k >= 1)
        bound_value =
            guarantee(k->k, static_cast<long long>(E.size()), tree, strategy);
    finalize(space, result, E, bound_value, k);
    return result;
}

VerifyResult verify_embedding(const DistanceSpace& space, const WeightedTree& tree,
                              const Embedding& embedding) {
    VerifyResult result{true, {}};
    const auto& map = embedding.vertex_to_point;
    if (static_cast<int>(map.size()) != tree.vertex_count()) {
        result.ok = false;
        result.violations.push_back("assignment covers " +
                                    std::to_string(map.size()) + " of " +
                                    std::to_string(tree.vertex_count()) +
                                    " vertices");
        return result;
    }
    for (PointId p : map)
        if (p < 0 || p >= space.size()) {
            result.ok = false;
            result.violations.push_back("point id " + std::to_string(p) +
                                        " outside the space");
            return result;
        }
    for (int u = 0; u < tree.vertex_count(); ++u)
        for (int v = u + 1; v < tree.vertex_count(); ++v)
            if (map[u] == map[v]) {
                result.ok = false;
                result.violations.push_back(
                    "injectivity: vertices " + std::to_string(u) + " and " +
                    std::to_string(v) + " both map to point " +
                    std::to_string(map[u]));
            }
    for (const auto& e : tree.edges()) {
        Distance got = space.distance(map[e.u], map[e.v]);
        if (got != e.weight) {
            result.ok = false;
            result.violations.push_back(
                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                ") wants distance " + std::to_string(e.weight) + " but has " +
                std::to_string(got));
        }
    }
    return result;
}

Rational guarantee(long long k, long long e_size, const WeightedTree& tree,
                   Strategy strategy) {
    if (k < 1) throw ValidationError("guarantee: K must be positive");
    Rational r(e_size, k);
    if (strategy == Strategy::StarPeel) {
        auto sigma = static_cast<long long>(stringiness(tree));
        return (r / sigma - 1) * k;
    }
    long long pow2 = 1LL << tree.edge_count();
    return ((r + 1) / pow2 - 1) * k;
}

} // namespace treepack
