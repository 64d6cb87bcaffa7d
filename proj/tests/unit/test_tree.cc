#include <rainbow_aw/tree.hh>

#include "oracles.hh"
#include "structural.hh"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace rainbow_aw;

namespace
{
    auto broom() -> Graph
    {
        return parse_edge_list("5\n0 1\n1 2\n2 3\n2 4\n");
    }

    auto isomorphic_to(const Graph & g, const Graph & h) -> bool
    {
        return oracle::isomorphic(g, h);
    }
}

TEST_CASE("n-peripherality")
{
    auto star = all_pairs_distances(make_star(3));
    auto w = is_n_peripheral(star, 3);
    REQUIRE(w);
    CHECK(w->vertices == std::vector<Vertex>{1, 2, 3});

    CHECK_FALSE(is_n_peripheral(all_pairs_distances(broom()), 3));
    for (int m = 2; m <= 9; ++m) {
        CHECK_FALSE(is_n_peripheral(all_pairs_distances(make_path(m)), 3));
        CHECK(is_n_peripheral(all_pairs_distances(make_path(m)), 2));
    }

    CHECK(is_n_peripheral(star, 1)->vertices.size() == 1);
    CHECK_FALSE(is_n_peripheral(star, 4));
    CHECK(is_n_peripheral(all_pairs_distances(make_star(4)), 4));
    CHECK_THROWS_AS(is_n_peripheral(star, 0), std::invalid_argument);
}

TEST_CASE("witness vertices are pairwise diametral and distinct")
{
    for (int n = 2; n <= 8; ++n)
        for (auto & t : enumerate_trees(n)) {
            auto dm = all_pairs_distances(t);
            for (int k = 1; k <= 4; ++k)
                if (auto w = is_n_peripheral(dm, k)) {
                    REQUIRE(w->vertices.size() == static_cast<std::size_t>(k));
                    for (std::size_t a = 0; a < w->vertices.size(); ++a)
                        for (std::size_t b = a + 1; b < w->vertices.size(); ++b)
                            CHECK(dm(w->vertices[a], w->vertices[b]) == dm.diameter());
                }
        }
}

TEST_CASE("minus transform")
{
    SUBCASE("P4 loses its far end")
    {
        auto m = tree_minus(make_path(4), 0);
        CHECK(isomorphic_to(m.graph, make_path(3)));
        CHECK(m.to_parent == std::vector<Vertex>{0, 1, 2});
    }

    SUBCASE("broom minus w4 is a star")
    {
        auto m = tree_minus(broom(), 3);
        CHECK(m.to_parent == std::vector<Vertex>{1, 2, 3, 4});
        CHECK(isomorphic_to(m.graph, make_star(3)));
    }

    SUBCASE("broom minus w1 is P3")
    {
        auto m = tree_minus(broom(), 0);
        CHECK(m.to_parent == std::vector<Vertex>{0, 1, 2});
        CHECK(isomorphic_to(m.graph, make_path(3)));
    }

    SUBCASE("errors")
    {
        CHECK_THROWS_AS(tree_minus(make_path(4), 1), GraphError);
        CHECK_THROWS_AS(tree_minus(make_path(1), 0), GraphError);
        CHECK_THROWS_AS(tree_minus(make_cycle(4), 0), GraphError);
    }

    SUBCASE("the result is an isometric subtree for every tree up to 8 vertices")
    {
        for (int n = 2; n <= 8; ++n)
            for (auto & t : enumerate_trees(n)) {
                auto dm = all_pairs_distances(t);
                for (auto v : center_and_peripheral(dm).peripheral.members()) {
                    auto m = tree_minus(t, v);
                    CHECK(is_tree(m.graph));
                    CHECK(is_isometric_embedding(m.graph, t, m.to_parent));
                }
            }
    }
}

TEST_CASE("plus transform")
{
    CHECK(isomorphic_to(tree_plus(make_path(3), 1), make_star(3)));
    CHECK(isomorphic_to(tree_plus(make_path(2), 0), make_path(3)));
    CHECK(isomorphic_to(tree_plus(make_path(2), 1), make_path(3)));
    CHECK(tree_plus(make_path(1), 0) == make_path(2));
    CHECK_THROWS_AS(tree_plus(make_path(3), 3), GraphError);
    CHECK_THROWS_AS(tree_plus(make_path(3), -1), GraphError);
}

TEST_CASE("classification examples")
{
    auto p3 = classify_tree(make_path(3));
    CHECK(p3.kind == TreeKind::weakly_non3_peripheral);
    CHECK(p3.parity == DiameterParity::even);
    CHECK(p3.witness == 1);

    auto p5 = classify_tree(make_path(5));
    CHECK(p5.kind == TreeKind::strongly_non3_peripheral);
    CHECK(p5.parity == DiameterParity::even);
    CHECK_FALSE(p5.witness);

    auto p4 = classify_tree(make_path(4));
    CHECK(p4.kind == TreeKind::strongly_non3_peripheral);
    CHECK(p4.parity == DiameterParity::odd);
    CHECK(p4.witness == 0);

    auto h = classify_tree(broom());
    CHECK(h.kind == TreeKind::strongly_non3_peripheral);
    CHECK(h.parity == DiameterParity::odd);
    CHECK(h.diameter == 3);
    CHECK(h.witness == 0);

    auto star = classify_tree(make_star(3));
    CHECK(star.kind == TreeKind::three_peripheral);
    CHECK(star.peripheral_triple->vertices == std::vector<Vertex>{1, 2, 3});

    auto p2 = classify_tree(make_path(2));
    CHECK(p2.kind == TreeKind::strongly_non3_peripheral);
    CHECK(p2.is_p2);
    CHECK(p2.parity == DiameterParity::odd);

    auto k1 = classify_tree(make_path(1));
    CHECK(k1.kind == TreeKind::trivial);
    CHECK(k1.parity == DiameterParity::zero);

    CHECK_THROWS_AS(classify_tree(make_cycle(3)), GraphError);
    CHECK(to_string(TreeKind::weakly_non3_peripheral) == "WeaklyNon3Peripheral");
}

TEST_CASE("odd-diameter weakly trees exist and match the for-all-peripheral reading")
{
    // The odd weakly case needs every minus-transform to be 3-peripheral;
    // confirm the classifier against that reading directly.
    int weakly_odd = 0;
    for (int n = 2; n <= 10; ++n)
        for (auto & t : enumerate_trees(n)) {
            auto c = classify_tree(t);
            if (c.kind == TreeKind::three_peripheral || c.parity != DiameterParity::odd)
                continue;
            auto dm = all_pairs_distances(t);
            bool all_three = true;
            for (auto v : center_and_peripheral(dm).peripheral.members())
                all_three = all_three && is_three_peripheral(tree_minus(t, v).graph);
            CHECK((c.kind == TreeKind::weakly_non3_peripheral) == all_three);
            weakly_odd += all_three;
        }
    CHECK(weakly_odd > 0);
}

TEST_CASE("classification invariants on all trees up to 10 vertices")
{
    for (int n = 1; n <= 10; ++n)
        for (auto & t : enumerate_trees(n)) {
            auto c = classify_tree(t);
            CHECK((c.kind == TreeKind::trivial) == (n == 1));
            if (c.kind == TreeKind::three_peripheral)
                CHECK(c.parity == DiameterParity::even);
            if (c.is_p2) {
                CHECK(c.kind == TreeKind::strongly_non3_peripheral);
                CHECK(c.parity == DiameterParity::odd);
            }

            // The even-diameter weakly search, without the distance filter.
            if (c.parity == DiameterParity::even && c.kind != TreeKind::three_peripheral) {
                bool some = false;
                for (Vertex u = 0; u < t.order(); ++u)
                    some = some || is_three_peripheral(tree_plus(t, u));
                CHECK((c.kind == TreeKind::weakly_non3_peripheral) == some);
            }
        }
}

TEST_CASE("structural lemmas on all trees up to 9 vertices")
{
    structural::Report report;
    for (int n = 1; n <= 9; ++n)
        for (auto & t : enumerate_trees(n))
            structural::check_tree(t, report);
    for (std::size_t i = 0; i < structural::names.size(); ++i) {
        INFO(structural::names[i]);
        CHECK(report.counts[i].checked > 0);
        CHECK(report.counts[i].violations == 0);
    }
}

TEST_CASE("canonical encodings")
{
    CHECK(canonical_encoding(make_path(1)) == "()");
    CHECK(canonical_encoding(make_path(2)) == "(())");
    CHECK(canonical_encoding(make_path(3)) == "(()())");
    CHECK(canonical_encoding(make_star(3)) == "(()()())");
    CHECK(canonical_encoding(tree_from_encoding("((())())")) == "((())())");
    CHECK_THROWS_AS(tree_from_encoding("(()"), GraphError);
    CHECK_THROWS_AS(tree_from_encoding("()()"), GraphError);
    CHECK_THROWS_AS(tree_from_encoding("(x)"), GraphError);
    CHECK_THROWS_AS(canonical_encoding(make_cycle(4)), GraphError);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + trial % 9;
        auto a = oracle::random_tree(n, rng), b = oracle::random_tree(n, rng);
        CHECK((canonical_encoding(a) == canonical_encoding(b)) == oracle::isomorphic(a, b));
        CHECK(oracle::isomorphic(tree_from_encoding(canonical_encoding(a)), a));
    }
}

TEST_CASE("tree enumeration")
{
    std::vector<std::size_t> counts;
    for (int n = 1; n <= 10; ++n)
        counts.push_back(enumerate_trees(n).size());
    CHECK(counts == std::vector<std::size_t>{1, 1, 1, 2, 3, 6, 11, 23, 47, 106});

    CHECK(enumerate_trees(2).front() == make_path(2));
    CHECK_THROWS_AS(enumerate_trees(11), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_trees(0), std::invalid_argument);
    CHECK(enumerate_trees(11, 11).size() == 235);

    SUBCASE("agrees with Prufer-sequence dedup up to 8 vertices")
    {
        for (int n = 1; n <= 8; ++n) {
            auto ours = enumerate_trees(n);
            auto reference = oracle::free_trees_by_prufer(n);
            REQUIRE(ours.size() == reference.size());
            for (auto & r : reference)
                CHECK(std::count_if(ours.begin(), ours.end(), [&](auto & t) { return oracle::isomorphic(t, r); }) ==
                    1);
        }
    }
}
