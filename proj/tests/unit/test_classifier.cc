#include <rainbow_aw/classifier.hh>
#include <rainbow_aw/tree.hh>

#include "oracles.hh"

#include <doctest.h>

#include <random>

using namespace rainbow_aw;

namespace
{
    auto broom() -> Graph
    {
        return parse_edge_list("5\n0 1\n1 2\n2 3\n2 4\n");
    }

    auto catalog(int max_order) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        for (int n = 2; n <= max_order; ++n)
            for (auto & t : enumerate_trees(n))
                out.push_back(t);
        return out;
    }

    auto grid_value(int m, int n) -> int
    {
        if (m > n)
            std::swap(m, n);
        return (m == 2 && n % 2 == 0) || (m == 3 && n % 2 == 1) ? 3 : 4;
    }
}

TEST_CASE("rule examples")
{
    for (int n = 2; n <= 8; n += 2) {
        auto r = aw_tree_product(make_path(2), make_path(n));
        CHECK(r.value == 3);
        CHECK(r.rule == AwRule::p2_factor);
    }
    for (int n = 3; n <= 9; n += 2) {
        auto r = aw_tree_product(make_path(3), make_path(n));
        CHECK(r.value == 3);
        CHECK(r.rule == AwRule::weakly_factor);
        CHECK(r.weakly_witness == 1);
    }

    auto p44 = aw_tree_product(make_path(4), make_path(4));
    CHECK(p44.value == 4);
    CHECK(p44.rule == AwRule::both_strongly);
    REQUIRE(p44.coloring);
    REQUIRE(p44.lemma31);
    CHECK(p44.coloring->is_exact());
    CHECK_FALSE(find_rainbow_3ap(cartesian_product(make_path(4), make_path(4)), *p44.coloring));

    for (auto & t : catalog(6)) {
        auto r = aw_tree_product(make_star(3), t);
        CHECK(r.value == 3);
        CHECK(r.rule == AwRule::three_peripheral_factor);
        CHECK(r.peripheral_triple->vertices == std::vector<Vertex>{1, 2, 3});
        CHECK(r.deciding_factor == Factor::first);
    }

    auto odd = aw_tree_product(make_path(3), make_path(4));
    CHECK(odd.value == 4);
    CHECK(odd.rule == AwRule::odd_product_diameter);
    REQUIRE(odd.coloring);
    REQUIRE(odd.diametral_pair);

    CHECK(aw_tree_product(broom(), make_path(4)).value == 4);

    // P2 x P3: the odd diameter decides; rule 3 is stated for even diameters only.
    auto p23 = aw_tree_product(make_path(2), make_path(3));
    CHECK(p23.value == 4);
    CHECK(p23.rule == AwRule::odd_product_diameter);
    CHECK(applicable_rules(make_path(2), make_path(3)) ==
        std::vector<AwRule>{AwRule::odd_product_diameter});
}

TEST_CASE("rule names and numbers")
{
    CHECK(to_string(AwRule::three_peripheral_factor) == "ThreePeripheralFactor");
    CHECK(to_string(AwRule::odd_product_diameter) == "OddProductDiameter");
    CHECK(to_string(AwRule::p2_factor) == "P2Factor");
    CHECK(to_string(AwRule::weakly_factor) == "WeaklyFactor");
    CHECK(to_string(AwRule::both_strongly) == "BothStrongly");
    CHECK(rule_number(AwRule::three_peripheral_factor) == 1);
    CHECK(rule_number(AwRule::both_strongly) == 5);
}

TEST_CASE("input errors")
{
    CHECK_THROWS_AS(aw_tree_product(make_path(1), make_path(3)), ClassifierError);
    CHECK_THROWS_AS(aw_tree_product(make_path(3), make_path(1)), ClassifierError);
    CHECK_THROWS_AS(aw_tree_product(make_cycle(4), make_path(3)), ClassifierError);
    CHECK_THROWS_AS(aw_tree_product(make_path(3), disjoint_union(make_path(2), make_path(2))), ClassifierError);
}

TEST_CASE("grid table")
{
    for (int m = 2; m <= 8; ++m)
        for (int n = m; n <= 8; ++n) {
            INFO("P", m, " x P", n);
            CHECK(aw_tree_product(make_path(m), make_path(n)).value == grid_value(m, n));
        }
}

TEST_CASE("every pair up to 6 vertices: no fall-through, witnesses verified, symmetric values")
{
    auto trees = catalog(6);
    for (auto & t : trees)
        for (auto & t2 : trees) {
            auto r = aw_tree_product(t, t2);
            CHECK((r.value == 3 || r.value == 4));
            CHECK(r.value == rule_value(r.rule));
            CHECK(r.value == aw_tree_product(t2, t).value);

            if (r.value == 4) {
                REQUIRE(r.coloring);
                auto pg = cartesian_product(t, t2);
                CHECK(r.coloring->is_exact());
                CHECK(r.coloring->palette() == 3);
                std::vector<int> colors(r.coloring->colors().begin(), r.coloring->colors().end());
                CHECK(oracle::naive_rainbow(oracle::floyd_warshall(pg.graph()), colors)[0] == -1);
            }

            // A 3-peripheral factor outranks an odd diameter; no other rules conflict.
            auto rules = applicable_rules(t, t2);
            REQUIRE_FALSE(rules.empty());
            CHECK(rules.front() == r.rule);
            for (auto rule : rules)
                if (rule_value(rule) != r.value)
                    CHECK((r.rule == AwRule::three_peripheral_factor && rule == AwRule::odd_product_diameter));
        }
}

TEST_CASE("forest examples")
{
    auto a = aw_forest_product(disjoint_union(make_path(3), make_path(3)), make_path(3));
    CHECK(a.value == 5);
    CHECK(a.p_count == 2);
    CHECK(a.s_count == 0);
    CHECK(a.components.size() == 2);

    auto b = aw_forest_product(make_path(4), make_path(4));
    CHECK(b.value == 4);
    CHECK(b.value == aw_tree_product(make_path(4), make_path(4)).value);

    auto c = aw_forest_product(disjoint_union(make_path(2), make_path(4)), make_path(4));
    CHECK(c.value == 6);
    CHECK(c.p_count == 1);
    CHECK(c.s_count == 1);
    CHECK(c.components[0].aw == 3);
    CHECK(c.components[1].aw == 4);

    CHECK_THROWS_AS(aw_forest_product(disjoint_union(make_path(1), make_path(3)), make_path(3)), ClassifierError);
    CHECK_THROWS_AS(aw_forest_product(make_cycle(3), make_path(3)), ClassifierError);
    CHECK_THROWS_AS(aw_forest_product(Graph{}, make_path(3)), ClassifierError);
}

TEST_CASE("forest formula on random forests")
{
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> size(2, 5), count(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> o1(count(rng)), o2(count(rng));
        for (auto & x : o1)
            x = size(rng);
        for (auto & x : o2)
            x = size(rng);
        auto f1 = oracle::random_forest(o1, rng), f2 = oracle::random_forest(o2, rng);
        auto r = aw_forest_product(f1, f2);
        CHECK(r.components.size() == o1.size() * o2.size());
        CHECK(r.value == r.disconnected_formula);
        CHECK(r.value == 2 * r.p_count + 3 * r.s_count + 1);
    }
}

TEST_CASE("explanations")
{
    auto e3 = explain(aw_tree_product(make_path(2), make_path(4)));
    CHECK(e3.find("rule 3 (P2Factor)") != std::string::npos);

    auto e5 = explain(aw_tree_product(make_path(5), make_path(5)));
    CHECK(e5.find("rule 5 (BothStrongly)") != std::string::npos);
    CHECK(e5.find("v5,5") != std::string::npos);
    CHECK(e5.find("coloring") != std::string::npos);

    auto e1 = explain(aw_tree_product(make_star(3), make_path(2)));
    CHECK(e1.find("rule 1 (ThreePeripheralFactor)") != std::string::npos);
    CHECK(e1.find("u2, u3, u4") != std::string::npos);

    auto e2 = explain(aw_tree_product(make_path(3), make_path(4)));
    CHECK(e2.find("rule 2 (OddProductDiameter)") != std::string::npos);

    auto e4 = explain(aw_tree_product(make_path(3), make_path(3)));
    CHECK(e4.find("rule 4 (WeaklyFactor)") != std::string::npos);
}
