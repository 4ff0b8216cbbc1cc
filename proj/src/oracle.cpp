#include "treepack/oracle.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace treepack {

namespace {

std::vector<PointId> normalize(const DistanceSpace& space, std::vector<PointId> E) {
    for (PointId p : E) space.check_point(p);
    std::sort(E.begin(), E.end());
    E.erase(std::unique(E.begin(), E.end()), E.end());
    return E;
}

void check_budget(const std::vector<PointId>& E, const WeightedTree& tree,
                  const OracleBudget& budget) {
    if (static_cast<int>(E.size()) > budget.max_points)
        throw BudgetError("oracle: |E| = " + std::to_string(E.size()) +
                          " exceeds max_points " +
                          std::to_string(budget.max_points));
    if (tree.edge_count() > budget.max_tree_edges)
        throw BudgetError("oracle: tree has " +
                          std::to_string(tree.edge_count()) +
                          " edges, above max_tree_edges " +
                          std::to_string(budget.max_tree_edges));
}

// BFS order from vertex 0; every non-root vertex appears after its parent.
std::vector<int> bfs_order(const WeightedTree& tree) {
    std::vector<int> order;
    std::vector<char> seen(tree.vertex_count(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (auto [u, t] : tree.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                q.push(u);
            }
    }
    return order;
}

} // namespace

std::vector<Embedding> enumerate_embeddings(const DistanceSpace& space,
                                            std::vector<PointId> E,
                                            const WeightedTree& tree,
                                            const OracleBudget& budget) {
    E = normalize(space, E);
    check_budget(E, tree, budget);

    auto order = bfs_order(tree);
    // parent (in BFS order) and edge weight for each non-root position
    std::vector<int> parent(tree.vertex_count(), -1);
    std::vector<Distance> up_weight(tree.vertex_count(), 0);
    std::vector<int> position(tree.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        position[order[i]] = i;
    for (int v : order)
        for (auto [u, t] : tree.neighbors(v))
            if (position[u] > position[v]) {
                parent[u] = v;
                up_weight[u] = t;
            }

    std::vector<Embedding> out;
    std::vector<PointId> assignment(tree.vertex_count(), -1);
    std::vector<char> used(space.size(), 0);
    long long nodes = 0;

    auto recurse = [&](auto&& self, int depth) -> void {
        if (++nodes > budget.node_limit)
            throw BudgetError("oracle: node limit exceeded");
        if (depth == static_cast<int>(order.size())) {
            out.push_back(Embedding{assignment});
            return;
        }
        int v = order[depth];
        for (PointId p : E) {
            if (used[p]) continue;
            // a tree vertex has exactly one earlier neighbor, its parent
            if (parent[v] >= 0 &&
                space.distance(assignment[parent[v]], p) != up_weight[v])
                continue;
            assignment[v] = p;
            used[p] = 1;
            self(self, depth + 1);
            used[p] = 0;
            assignment[v] = -1;
        }
    };
    recurse(recurse, 0);
    return out;
}

PackingOracle max_disjoint_packing(const DistanceSpace& space,
                                   std::vector<PointId> E,
                                   const WeightedTree& tree,
                                   const OracleBudget& budget) {
    E = normalize(space, E);
    if (E.size() > 64)
        throw BudgetError("oracle: packing search supports at most 64 points");
    auto embeddings = enumerate_embeddings(space, E, tree, budget);

    // conflict masks over E indices
    std::vector<int> index_of(space.size(), -1);
    for (int i = 0; i < static_cast<int>(E.size()); ++i) index_of[E[i]] = i;
    std::vector<std::uint64_t> masks;
    masks.reserve(embeddings.size());
    for (const auto& emb : embeddings) {
        std::uint64_t m = 0;
        for (PointId p : emb.vertex_to_point) m |= 1ULL << index_of[p];
        masks.push_back(m);
    }

    const int vertices = tree.vertex_count();
    const int total = static_cast<int>(embeddings.size());
    long long nodes = 0;

    PackingOracle best{0, {}};
    std::vector<int> chosen;

    auto recurse = [&](auto&& self, int from, std::uint64_t used,
                       int free_points) -> void {
        if (++nodes > budget.node_limit)
            throw BudgetError("oracle: node limit exceeded");
        if (static_cast<int>(chosen.size()) > best.size) {
            best.size = static_cast<int>(chosen.size());
            best.witness.clear();
            for (int i : chosen) best.witness.push_back(embeddings[i]);
        }
        // remaining embeddings each need |V| fresh points
        if (static_cast<int>(chosen.size()) + free_points / vertices <= best.size)
            return;
        for (int i = from; i < total; ++i) {
            if (masks[i] & used) continue;
            chosen.push_back(i);
            self(self, i + 1, used | masks[i], free_points - vertices);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0, 0, static_cast<int>(E.size()));
    return best;
}

} // namespace treepack
