#include <doctest.h>

#include "treepack/io.hpp"
#include "treepack/surjectivity.hpp"

using namespace treepack;

TEST_CASE("space JSON round trip") {
    auto field = space_from_json(Json{{"kind", "field"}, {"q", 5}, {"dim", 2}});
    CHECK(field.size() == 25);
    auto again = space_from_json(space_to_json(field));
    CHECK(again.size() == field.size());
    for (PointId a = 0; a < field.size(); ++a)
        for (PointId b = 0; b < field.size(); ++b)
            CHECK(field.distance(a, b) == again.distance(a, b));

    auto table = space_from_json(
        Json{{"kind", "table"}, {"matrix", Json::array({{0, 7}, {7, 0}})}});
    CHECK(table.distance(0, 1) == 7);
    auto table2 = space_from_json(space_to_json(table));
    CHECK(table2.distance(0, 1) == 7);

    CHECK_THROWS_AS(space_from_json(Json{{"kind", "sphere"}}), ValidationError);
    CHECK_THROWS_AS(space_from_json(Json::array()), ValidationError);
}

TEST_CASE("tree JSON round trip and graph parsing") {
    Json j{{"vertices", 3}, {"edges", Json::array({{0, 1, 4}, {1, 2, 2}})}};
    auto tree = tree_from_json(j);
    CHECK(tree.vertex_count() == 3);
    CHECK(tree.edges()[1].weight == 2);
    auto again = tree_from_json(tree_to_json(tree));
    CHECK(tree_to_json(again) == tree_to_json(tree));

    // unweighted edges default to weight zero
    auto bare = tree_from_json(
        Json{{"vertices", 2}, {"edges", Json::array({{0, 1}})}});
    CHECK(bare.edges()[0].weight == 0);

    auto [n, edges] = graph_from_json(
        Json{{"vertices", 3},
             {"edges", Json::array({{0, 1}, {1, 2}, {2, 0}})}});
    CHECK(n == 3);
    CHECK(edges.size() == 3); // cycles are fine for plain graphs

    CHECK_THROWS_AS(tree_from_json(Json{{"vertices", 2}}), ValidationError);
}

TEST_CASE("subsets parse as ids or coordinates") {
    auto f5 = DistanceSpace::finite_field(5, 2);
    auto ids = subset_from_json(Json::array({0, 7, 24}), f5);
    CHECK(ids == std::vector<PointId>{0, 7, 24});
    auto coords = subset_from_json(
        Json::array({Json::array({0, 0}), Json::array({1, 2})}), f5);
    CHECK(coords == std::vector<PointId>{0, 7});
    CHECK_THROWS_AS(subset_from_json(Json::array({99}), f5), ValidationError);
    CHECK_THROWS_AS(subset_from_json(Json{{"a", 1}}, f5), ValidationError);
}

TEST_CASE("star spec JSON") {
    auto spec = star_spec_from_json(Json::array({{2, 1}, {1, 2}}));
    REQUIRE(spec.classes.size() == 2);
    CHECK(spec.classes[0].weight == 1); // sorted ascending
    CHECK(spec.classes[0].multiplicity == 2);
    CHECK(star_spec_to_json(spec) == Json::array({{1, 2}, {2, 1}}));
    CHECK_THROWS_AS(star_spec_from_json(Json::array()), ValidationError);
    CHECK_THROWS_AS(star_spec_from_json(Json::array({{1, 2}, {1, 3}})),
                    ValidationError);
}

TEST_CASE("packing JSON carries embeddings, residual, and the bound") {
    auto space = space_from_json(
        Json{{"kind", "table"},
             {"matrix", Json::array({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})}});
    auto r = pack_pairs(space, space.all_points(), 1, KAssumption{2});
    auto j = packing_to_json(r);
    CHECK(j.at("embeddings").size() == 1);
    CHECK(j.at("embeddings")[0].at("0") == 0);
    CHECK(j.at("embeddings")[0].at("1") == 1);
    CHECK(j.at("residual") == Json::array({2}));
    CHECK(j.at("bound").at("K") == 2);
    CHECK(j.at("bound").at("r") == "3/2");
    CHECK(j.at("bound").at("met") == true);
    // emitted artifacts re-parse to the same value
    CHECK(Json::parse(j.dump(2)) == j);
}

TEST_CASE("surjectivity and peel JSON") {
    auto f3 = DistanceSpace::finite_field(3, 1);
    auto j = surjectivity_to_json(exact_k(f3));
    CHECK(j.at("exact_k") == 4); // distances 0 and 2 unrealized on 3 points
    CHECK(j.at("method") == "exact");
    CHECK(j.at("per_distance").size() == 3);

    WeightedTree p4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    auto pj = peel_to_json(leaf_peel(p4));
    CHECK(pj.at("pivot") == 1);
    CHECK(pj.at("y") == 1);

    WeightedTree k12(3, {{0, 1, 5}, {0, 2, 5}});
    auto sj = peel_to_json(leaf_peel(k12));
    CHECK(sj.contains("star"));
}

TEST_CASE("ir table CSV shape") {
    auto rows = ir_threshold_table({3}, {2});
    auto csv = ir_table_csv(rows);
    CHECK(csv.substr(0, 24) == "q,dim,K,q_pow,ratio\n3,2,");
    CHECK(csv.find("5.196152") != std::string::npos); // 3^1.5
}

TEST_CASE("DOT export") {
    WeightedTree p3(3, {{0, 1, 4}, {1, 2, 2}});
    auto dot = tree_to_dot(p3);
    CHECK(dot.find("0 -- 1 [label=\"4\"]") != std::string::npos);
    CHECK(dot.rfind("graph T {", 0) == 0);

    auto space = DistanceSpace::finite_field(3, 1);
    auto packing = pack_pairs(space, space.all_points(), 1);
    auto pd = packing_to_dot(WeightedTree(2, {{0, 1, 1}}), packing);
    CHECK(pd.find("subgraph cluster_0") != std::string::npos);
    CHECK(pd.find("p0 -- p1") != std::string::npos);
}

TEST_CASE("rational formatting") {
    CHECK(rational_to_string(Rational(3, 6)) == "1/2");
    CHECK(rational_to_string(Rational(-5, 2)) == "-5/2");
    CHECK(rational_to_string(Rational(4)) == "4/1");
}
