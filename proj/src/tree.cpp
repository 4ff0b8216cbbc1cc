#include "treepack/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace treepack {

WeightedTree::WeightedTree(int vertex_count, std::vector<WeightedEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 1)
        throw ValidationError("tree: vertex count must be positive");

    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
        if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
            throw ValidationError("tree: edge endpoint out of range");
        if (e.u == e.v)
            throw ValidationError("tree: self-loop at vertex " +
                                  std::to_string(e.u));
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            throw ValidationError("tree: duplicate edge (" +
                                  std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
        if (e.weight < 0)
            throw ValidationError("tree: negative edge weight");
    }

    if (static_cast<int>(edges_.size()) > vertex_count_ - 1)
        throw ValidationError("tree: too many edges, the graph contains a cycle");
    if (static_cast<int>(edges_.size()) < vertex_count_ - 1)
        throw ValidationError("tree: too few edges, the graph is disconnected");

    adj_.resize(vertex_count_);
    for (const auto& e : edges_) {
        adj_[e.u].emplace_back(e.v, e.weight);
        adj_[e.v].emplace_back(e.u, e.weight);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());

    // |E| = |V| - 1 and connectivity together make it a tree
    std::vector<char> visited(vertex_count_, 0);
    std::queue<int> bfs;
    bfs.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (auto [w, t] : adj_[v])
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                bfs.push(w);
            }
    }
    if (reached != vertex_count_)
        throw ValidationError("tree: the graph is disconnected");
}

bool WeightedTree::is_star() const {
    if (edge_count() < 1) return false;
    int internal = 0;
    for (int v = 0; v < vertex_count_; ++v)
        if (degree(v) >= 2) ++internal;
    return internal <= 1;
}

int WeightedTree::star_center() const {
    int best = 0;
    for (int v = 1; v < vertex_count_; ++v)
        if (degree(v) > degree(best)) best = v;
    return best;
}

std::uint64_t stringiness(int vertex_count,
                          std::span<const std::pair<int, int>> edges) {
    if (vertex_count < 1)
        throw ValidationError("stringiness: empty graph");

    std::vector<int> degree(vertex_count, 0);
    std::vector<std::vector<int>> adj(vertex_count);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count || u == v)
            throw ValidationError("stringiness: bad edge");
        ++degree[u];
        ++degree[v];
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    std::vector<char> visited(vertex_count, 0);
    std::queue<int> bfs;
    bfs.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w : adj[v])
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                bfs.push(w);
            }
    }
    if (reached != vertex_count)
        throw ValidationError("stringiness: graph is disconnected");

    std::sort(degree.begin(), degree.end(), std::greater<>());
    std::uint64_t result = degree[0] + 1;
    for (int i = 1; i < vertex_count; ++i)
        result *= static_cast<std::uint64_t>(degree[i]);
    return result;
}

std::uint64_t stringiness(const WeightedTree& tree) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(tree.edges().size());
    for (const auto& e : tree.edges()) edges.emplace_back(e.u, e.v);
    return stringiness(tree.vertex_count(), edges);
}

int StarSpec::total_leaves() const {
    int n = 0;
    for (const auto& c : classes) n += c.multiplicity;
    return n;
}

WeightedTree StarSpec::to_tree() const {
    std::vector<WeightedEdge> edges;
    int next = 1;
    for (const auto& c : classes)
        for (int i = 0; i < c.multiplicity; ++i)
            edges.push_back({0, next++, c.weight});
    return WeightedTree(next, std::move(edges));
}

StarSpec star_spec_of(const WeightedTree& tree) {
    if (!tree.is_star())
        throw ValidationError("star_spec_of: tree is not a star");
    int center = tree.star_center();
    std::map<Distance, int> mult;
    for (auto [leaf, t] : tree.neighbors(center)) ++mult[t];
    StarSpec spec;
    for (auto [t, m] : mult) spec.classes.push_back({t, m});
    return spec;
}

std::variant<PeelStep, StarSpec> leaf_peel(const WeightedTree& tree) {
    if (tree.edge_count() < 1)
        throw ValidationError("leaf_peel: tree has no edges");
    if (tree.is_star()) return star_spec_of(tree);

    const int n = tree.vertex_count();
    int max_degree = 0;
    for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, tree.degree(v));

    for (int w = 0; w < n; ++w) {
        if (tree.degree(w) < 2) continue; // condition 1
        int non_leaf_neighbors = 0;
        for (auto [u, t] : tree.neighbors(w))
            if (!tree.is_leaf(u)) ++non_leaf_neighbors;
        if (non_leaf_neighbors != 1) continue; // condition 2
        // condition 3: some other vertex has degree >= deg(w)
        bool dominated = false;
        for (int v = 0; v < n && !dominated; ++v)
            if (v != w && tree.degree(v) >= tree.degree(w)) dominated = true;
        if (!dominated) continue;

        std::vector<std::pair<int, Distance>> peeled;
        for (auto [u, t] : tree.neighbors(w))
            if (tree.is_leaf(u)) peeled.emplace_back(u, t);

        std::vector<char> removed(n, 0);
        for (auto [u, t] : peeled) removed[u] = 1;
        std::vector<int> old_to_new(n, -1);
        int next = 0;
        for (int v = 0; v < n; ++v)
            if (!removed[v]) old_to_new[v] = next++;

        std::vector<WeightedEdge> rest;
        for (const auto& e : tree.edges())
            if (!removed[e.u] && !removed[e.v])
                rest.push_back({old_to_new[e.u], old_to_new[e.v], e.weight});

        int pivot_new = old_to_new[w];
        return PeelStep{w, std::move(peeled), WeightedTree(next, std::move(rest)),
                        std::move(old_to_new), pivot_new};
    }
    throw ValidationError("leaf_peel: no valid pivot (unreachable for a tree)");
}

std::vector<std::pair<int, int>> tree_from_pruefer(std::span<const int> seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(n, 1);
    for (int v : seq) {
        if (v < 0 || v >= n)
            throw ValidationError("tree_from_pruefer: label out of range");
        ++degree[v];
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            while (degree[++ptr] != 1) {}
            leaf = ptr;
        }
    }
    // the last remaining leaf joins vertex n-1
    edges.emplace_back(leaf, n - 1);
    return edges;
}

namespace {

std::string rooted_canonical(const WeightedTree& tree, int root, int parent) {
    std::vector<std::string> parts;
    for (auto [u, t] : tree.neighbors(root))
        if (u != parent) parts.push_back(rooted_canonical(tree, u, root));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

std::vector<int> tree_centers(const WeightedTree& tree) {
    const int n = tree.vertex_count();
    if (n == 1) return {0};
    std::vector<int> degree(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = tree.degree(v);
        if (degree[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    std::vector<int> current = layer;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(current.size());
        for (int v : current)
            for (auto [u, t] : tree.neighbors(v))
                if (--degree[u] == 1) next.push_back(u);
        current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    return current;
}

} // namespace

std::string canonical_form(const WeightedTree& tree) {
    std::string best;
    for (int c : tree_centers(tree)) {
        std::string s = rooted_canonical(tree, c, -1);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

std::vector<WeightedTree> enumerate_trees(int edge_count, int cap) {
    if (edge_count < 0)
        throw ValidationError("enumerate_trees: negative edge count");
    if (edge_count > cap)
        throw BudgetError("enumerate_trees: edge count " +
                          std::to_string(edge_count) + " exceeds cap " +
                          std::to_string(cap));

    // Grow one leaf at a time, deduplicating by canonical form. Every tree
    // with k+1 edges arises by attaching a leaf to one with k edges.
    std::vector<WeightedTree> level;
    level.push_back(WeightedTree(1, {}));
    for (int k = 0; k < edge_count; ++k) {
        std::map<std::string, WeightedTree> next;
        for (const auto& t : level) {
            const int n = t.vertex_count();
            for (int attach = 0; attach < n; ++attach) {
                std::vector<WeightedEdge> edges = t.edges();
                edges.push_back({attach, n, 0});
                WeightedTree grown(n + 1, std::move(edges));
                next.emplace(canonical_form(grown), grown);
            }
        }
        level.clear();
        for (auto& [form, t] : next) level.push_back(std::move(t));
    }
    return level;
}

} // namespace treepack
