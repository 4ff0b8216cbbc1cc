#include <doctest.h>

#include <random>
#include <set>

#include "treepack/audit.hpp"
#include "treepack/oracle.hpp"

using namespace treepack;

namespace {

DistanceSpace all_t_space(int n, Distance t) {
    std::vector<std::vector<Distance>> m(n, std::vector<Distance>(n, t));
    for (int i = 0; i < n; ++i) m[i][i] = 0;
    return DistanceSpace::from_table(std::move(m));
}

DistanceSpace random_table_space(std::mt19937_64& rng, int max_points,
                                 int max_alphabet) {
    int n = std::uniform_int_distribution<int>(2, max_points)(rng);
    int a = std::uniform_int_distribution<int>(1, max_alphabet)(rng);
    std::vector<std::vector<Distance>> m(n, std::vector<Distance>(n, 0));
    std::uniform_int_distribution<Distance> value(0, a - 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m[i][j] = m[j][i] = value(rng);
    return DistanceSpace::from_table(std::move(m));
}

} // namespace

TEST_CASE("enumeration counts labeled maps") {
    auto three = all_t_space(3, 1);
    WeightedTree edge(2, {{0, 1, 1}});
    // 3 * 2 injective maps, both directions counted
    CHECK(enumerate_embeddings(three, three.all_points(), edge).size() == 6);

    WeightedTree absent(2, {{0, 1, 9}});
    CHECK(enumerate_embeddings(three, three.all_points(), absent).empty());

    WeightedTree single(1, {});
    CHECK(enumerate_embeddings(three, three.all_points(), single).size() == 3);
}

TEST_CASE("enumeration order is deterministic lexicographic") {
    auto three = all_t_space(3, 1);
    WeightedTree edge(2, {{0, 1, 1}});
    auto embs = enumerate_embeddings(three, three.all_points(), edge);
    REQUIRE(embs.size() == 6);
    CHECK(embs[0].vertex_to_point == std::vector<PointId>{0, 1});
    CHECK(embs[1].vertex_to_point == std::vector<PointId>{0, 2});
    CHECK(embs[2].vertex_to_point == std::vector<PointId>{1, 0});
}

TEST_CASE("maximum packing on small instances") {
    auto four = all_t_space(4, 1);
    WeightedTree edge(2, {{0, 1, 1}});
    CHECK(max_disjoint_packing(four, four.all_points(), edge).size == 2);

    auto three = all_t_space(3, 1);
    WeightedTree p3(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(max_disjoint_packing(three, three.all_points(), p3).size == 1);

    WeightedTree absent(2, {{0, 1, 9}});
    CHECK(max_disjoint_packing(three, three.all_points(), absent).size == 0);
}

TEST_CASE("witness embeddings are valid and disjoint") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        auto space = random_table_space(rng, 8, 3);
        auto tree = random_weighted_tree(rng, 3, space.alphabet());
        auto result = max_disjoint_packing(space, space.all_points(), tree);
        CHECK(static_cast<int>(result.witness.size()) == result.size);
        std::set<PointId> seen;
        for (const auto& emb : result.witness) {
            CHECK(verify_embedding(space, tree, emb).ok);
            for (PointId p : emb.vertex_to_point) CHECK(seen.insert(p).second);
        }
    }
}

TEST_CASE("reversing a single edge leaves the count unchanged") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 10; ++i) {
        auto space = random_table_space(rng, 7, 3);
        Distance t = space.alphabet()[0];
        WeightedTree forward(2, {{0, 1, t}});
        WeightedTree backward(2, {{1, 0, t}});
        CHECK(enumerate_embeddings(space, space.all_points(), forward).size() ==
              enumerate_embeddings(space, space.all_points(), backward).size());
    }
}

TEST_CASE("budget violations fail loudly") {
    auto big = all_t_space(13, 1);
    WeightedTree edge(2, {{0, 1, 1}});
    CHECK_THROWS_AS(enumerate_embeddings(big, big.all_points(), edge),
                    BudgetError);

    auto three = all_t_space(3, 1);
    WeightedTree wide(6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}});
    CHECK_THROWS_AS(enumerate_embeddings(three, three.all_points(), wide),
                    BudgetError);

    OracleBudget tiny;
    tiny.node_limit = 2;
    CHECK_THROWS_AS(
        enumerate_embeddings(three, three.all_points(), edge, tiny),
        BudgetError);
}

TEST_CASE("greedy containment: every greedy embedding is enumerated, count bounded") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 40; ++i) {
        auto space = random_table_space(rng, 9, 3);
        auto E = random_subset(rng, space);
        auto tree = random_weighted_tree(rng, 3, space.alphabet());
        auto all = enumerate_embeddings(space, E, tree);
        std::set<std::vector<PointId>> known;
        for (const auto& emb : all) known.insert(emb.vertex_to_point);
        auto exact = max_disjoint_packing(space, E, tree);

        for (Strategy s : {Strategy::StarPeel, Strategy::EdgePeel}) {
            auto greedy = embed_tree(space, E, tree, s);
            for (const auto& emb : greedy.embeddings)
                CHECK(known.count(emb.vertex_to_point));
            CHECK(static_cast<int>(greedy.embeddings.size()) <= exact.size);
        }
    }
}
