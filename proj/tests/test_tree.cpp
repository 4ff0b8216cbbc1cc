#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "treepack/tree.hpp"

using namespace treepack;

namespace {

WeightedTree path(int vertices, Distance w = 0) {
    std::vector<WeightedEdge> edges;
    for (int i = 0; i + 1 < vertices; ++i) edges.push_back({i, i + 1, w});
    return WeightedTree(vertices, std::move(edges));
}

WeightedTree star(int leaves, Distance w = 0) {
    std::vector<WeightedEdge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, w});
    return WeightedTree(leaves + 1, std::move(edges));
}

// Label-permutation-minimal edge set; canonical under isomorphism and
// fully independent of the AHU encoding used by the library.
std::vector<std::pair<int, int>> perm_minimal_edges(
    int n, std::vector<std::pair<int, int>> edges) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> best;
    do {
        std::vector<std::pair<int, int>> mapped;
        for (auto [u, v] : edges)
            mapped.push_back(std::minmax(perm[u], perm[v]));
        std::sort(mapped.begin(), mapped.end());
        if (best.empty() || mapped < best) best = std::move(mapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

TEST_CASE("tree validation rejects each defect distinctly") {
    CHECK_NOTHROW(WeightedTree(2, {{0, 1, 3}}));
    CHECK_THROWS_WITH_AS(WeightedTree(3, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}}),
                         doctest::Contains("cycle"), ValidationError);
    CHECK_THROWS_WITH_AS(WeightedTree(4, {{0, 1, 0}, {2, 3, 0}}),
                         doctest::Contains("disconnected"), ValidationError);
    CHECK_THROWS_WITH_AS(WeightedTree(2, {{1, 1, 0}}),
                         doctest::Contains("self-loop"), ValidationError);
    CHECK_THROWS_WITH_AS(WeightedTree(3, {{0, 1, 0}, {1, 0, 2}}),
                         doctest::Contains("duplicate"), ValidationError);
    // right edge count but still disconnected (forces the reachability check)
    CHECK_THROWS_AS(WeightedTree(4, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}}),
                    ValidationError);
}

TEST_CASE("stringiness of the named graphs") {
    // Petersen: 10 vertices of degree 3
    std::vector<std::pair<int, int>> petersen{
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
        {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
    CHECK(stringiness(10, petersen) == 78732);

    for (int n = 1; n <= 9; ++n) CHECK(stringiness(star(n)) == n + 1u);
    CHECK(stringiness(path(2)) == 2);
    for (int n = 2; n <= 9; ++n)
        CHECK(stringiness(path(n + 1)) == 3ull << (n - 2));
    CHECK(stringiness(WeightedTree(1, {})) == 1);
}

TEST_CASE("stringiness rejects empty and disconnected graphs") {
    CHECK_THROWS_AS(stringiness(0, {}), ValidationError);
    std::vector<std::pair<int, int>> disconnected{{0, 1}};
    CHECK_THROWS_AS(stringiness(3, disconnected), ValidationError);
}

TEST_CASE("stringiness is invariant under relabeling") {
    std::mt19937_64 rng(7);
    for (const auto& tree : enumerate_trees(6)) {
        const int n = tree.vertex_count();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<WeightedEdge> edges;
            for (const auto& e : tree.edges())
                edges.push_back({perm[e.u], perm[e.v], e.weight});
            CHECK(stringiness(WeightedTree(n, std::move(edges))) ==
                  stringiness(tree));
        }
    }
}

TEST_CASE("star specs group weights with multiplicities") {
    WeightedTree k13(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 2}});
    auto spec = star_spec_of(k13);
    REQUIRE(spec.classes.size() == 2);
    CHECK(spec.classes[0].weight == 1);
    CHECK(spec.classes[0].multiplicity == 2);
    CHECK(spec.classes[1].weight == 2);
    CHECK(spec.classes[1].multiplicity == 1);
    CHECK(spec.total_leaves() == 3);

    auto single = star_spec_of(WeightedTree(2, {{0, 1, 9}}));
    REQUIRE(single.classes.size() == 1);
    CHECK(single.classes[0].weight == 9);
    CHECK(single.classes[0].multiplicity == 1);

    auto twin = star_spec_of(WeightedTree(3, {{0, 1, 5}, {0, 2, 5}}));
    REQUIRE(twin.classes.size() == 1);
    CHECK(twin.classes[0].multiplicity == 2);

    CHECK_THROWS_AS(star_spec_of(path(4)), ValidationError);

    // round trip through the canonical star tree
    CHECK(stringiness(spec.to_tree()) == 4);
    CHECK(star_spec_of(spec.to_tree()).classes.size() == 2);
}

TEST_CASE("leaf peel on a path") {
    auto p4 = path(4, 1);
    auto result = leaf_peel(p4);
    REQUIRE(std::holds_alternative<PeelStep>(result));
    const auto& step = std::get<PeelStep>(result);
    CHECK(step.pivot == 1); // lowest valid label wins
    CHECK(step.y() == 1);
    CHECK(step.peeled == std::vector<std::pair<int, Distance>>{{0, 1}});
    CHECK(step.remainder.vertex_count() == 3);
    CHECK(stringiness(p4) == (step.y() + 1) * stringiness(step.remainder));
}

TEST_CASE("leaf peel returns the star spec at the base case") {
    auto result = leaf_peel(star(4, 2));
    REQUIRE(std::holds_alternative<StarSpec>(result));
    const auto& spec = std::get<StarSpec>(result);
    CHECK(spec.total_leaves() == 4);
    REQUIRE(spec.classes.size() == 1);
    CHECK(spec.classes[0].weight == 2);

    CHECK_THROWS_AS(leaf_peel(WeightedTree(1, {})), ValidationError);
}

TEST_CASE("leaf peel on a spider halves the stringiness") {
    // center 0 joined to three paths of length 2
    WeightedTree spider(7, {{0, 1, 0}, {1, 2, 0}, {0, 3, 0}, {3, 4, 0},
                            {0, 5, 0}, {5, 6, 0}});
    auto result = leaf_peel(spider);
    REQUIRE(std::holds_alternative<PeelStep>(result));
    const auto& step = std::get<PeelStep>(result);
    CHECK(step.pivot == 1); // lowest path midpoint
    CHECK(step.y() == 1);
    CHECK(stringiness(step.remainder) == stringiness(spider) / 2);
}

TEST_CASE("peel pivot satisfies the three structural conditions") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& tree : enumerate_trees(n)) {
            if (tree.is_star()) continue;
            auto step = std::get<PeelStep>(leaf_peel(tree));
            CHECK(tree.degree(step.pivot) >= 2);
            int non_leaf = 0;
            for (auto [u, t] : tree.neighbors(step.pivot))
                if (!tree.is_leaf(u)) ++non_leaf;
            CHECK(non_leaf == 1);
            bool dominated = false;
            for (int v = 0; v < tree.vertex_count(); ++v)
                if (v != step.pivot && tree.degree(v) >= tree.degree(step.pivot))
                    dominated = true;
            CHECK(dominated);
            CHECK(step.y() + 1 == tree.degree(step.pivot));
            CHECK(stringiness(tree) ==
                  (step.y() + 1) * stringiness(step.remainder));
        }
    }
}

TEST_CASE("deleting a leaf decreases stringiness") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& tree : enumerate_trees(n)) {
            for (int v = 0; v < tree.vertex_count(); ++v) {
                if (!tree.is_leaf(v)) continue;
                std::vector<int> relabel(tree.vertex_count());
                int next = 0;
                for (int u = 0; u < tree.vertex_count(); ++u)
                    if (u != v) relabel[u] = next++;
                std::vector<WeightedEdge> edges;
                for (const auto& e : tree.edges())
                    if (e.u != v && e.v != v)
                        edges.push_back({relabel[e.u], relabel[e.v], e.weight});
                WeightedTree smaller(tree.vertex_count() - 1, std::move(edges));
                CHECK(stringiness(smaller) < stringiness(tree));
            }
        }
    }
}

TEST_CASE("tree enumeration matches the known unlabeled counts") {
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 0; n <= 9; ++n) {
        auto trees = enumerate_trees(n);
        CHECK(trees.size() == static_cast<size_t>(expected[n]));
        for (const auto& t : trees) {
            CHECK(t.vertex_count() == n + 1);
            CHECK(t.edge_count() == n);
        }
    }
    CHECK_THROWS_AS(enumerate_trees(10), BudgetError);
    CHECK_NOTHROW(enumerate_trees(10, 10));
}

TEST_CASE("enumeration agrees with a Pruefer-sequence oracle") {
    // brute force every labeled tree, reduce by permutation-minimal edge
    // sets, and compare the class inventory
    for (int n = 2; n <= 5; ++n) {
        const int vertices = n + 1;
        std::set<std::vector<std::pair<int, int>>> classes;
        std::vector<int> seq(vertices - 2, 0);
        while (true) {
            classes.insert(perm_minimal_edges(vertices, tree_from_pruefer(seq)));
            int i = 0;
            while (i < static_cast<int>(seq.size()) && seq[i] == vertices - 1)
                seq[i++] = 0;
            if (i == static_cast<int>(seq.size())) break;
            ++seq[i];
        }

        std::set<std::vector<std::pair<int, int>>> ours;
        for (const auto& t : enumerate_trees(n)) {
            std::vector<std::pair<int, int>> edges;
            for (const auto& e : t.edges()) edges.emplace_back(e.u, e.v);
            ours.insert(perm_minimal_edges(vertices, std::move(edges)));
        }
        CHECK(classes == ours); // same classes, each exactly once
    }
}

TEST_CASE("canonical form identifies isomorphic relabelings") {
    std::mt19937_64 rng(3);
    for (const auto& tree : enumerate_trees(7)) {
        const int n = tree.vertex_count();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<WeightedEdge> edges;
        for (const auto& e : tree.edges())
            edges.push_back({perm[e.u], perm[e.v], e.weight});
        CHECK(canonical_form(WeightedTree(n, std::move(edges))) ==
              canonical_form(tree));
    }
    // distinct classes get distinct forms
    std::set<std::string> forms;
    for (const auto& tree : enumerate_trees(7))
        forms.insert(canonical_form(tree));
    CHECK(forms.size() == 23);
}
