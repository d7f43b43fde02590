#include "bei/fixtures.hpp"
#include "bei/graph.hpp"

#include <doctest.h>

#include <random>

using namespace bei;

TEST_CASE("connected components") {
    Graph p4 = path_graph(4);
    auto comps = connected_components(p4, {2});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{1});
    CHECK(comps[1] == VertexSet{3, 4});

    Graph k5 = complete_graph(5);
    auto all = connected_components(k5, {});
    REQUIRE(all.size() == 1);
    CHECK(all[0] == VertexSet{1, 2, 3, 4, 5});

    CHECK(connected_components(path_graph(2), {1, 2}).empty());
}

TEST_CASE("components of the two-cliques-at-one-vertex fixture") {
    // removing the first and third path vertices leaves six pieces
    Graph g = fixtures::figure_graph(3);
    REQUIRE(g.n == 17);
    auto comps = connected_components(g, {1, 10});
    CHECK(comps.size() == 6);
}

TEST_CASE("component partition invariant") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() % 3 == 0) g.add_edge(i, j);
        VertexSet removed;
        for (int v = 1; v <= n; ++v)
            if (rng() % 4 == 0) removed.push_back(v);
        auto comps = connected_components(g, removed);
        // union equals the complement, components pairwise non-adjacent
        VertexSet uni;
        for (const auto& c : comps) uni.insert(uni.end(), c.begin(), c.end());
        std::sort(uni.begin(), uni.end());
        VertexSet expect;
        for (int v = 1; v <= n; ++v)
            if (!std::binary_search(removed.begin(), removed.end(), v)) expect.push_back(v);
        CHECK(uni == expect);
        for (std::size_t a = 0; a < comps.size(); ++a)
            for (std::size_t b = a + 1; b < comps.size(); ++b)
                for (int u : comps[a])
                    for (int w : comps[b]) CHECK_FALSE(g.has_edge(u, w));
    }
}

TEST_CASE("induced subgraph with relabeling map") {
    Graph k4 = complete_graph(4);
    auto sub = induced_subgraph(k4, {1, 3});
    CHECK(sub.graph == complete_graph(2));
    CHECK(sub.old_to_new[1] == 1);
    CHECK(sub.old_to_new[3] == 2);

    Graph p4 = path_graph(4);
    auto sub2 = induced_subgraph(p4, {1, 3, 4});
    CHECK(sub2.graph.edges == std::vector<std::pair<int, int>>{{2, 3}});

    auto net = net_graph();
    auto tri = induced_subgraph(net, {1, 2, 3});
    CHECK(tri.graph == complete_graph(3));
}

TEST_CASE("distance") {
    CHECK(distance(path_graph(4), 1, 4) == 3);
    CHECK(distance(complete_graph(6), 2, 5) == 1);
    Graph two_edges(4);
    two_edges.add_edge(1, 2);
    two_edges.add_edge(3, 4);
    CHECK(distance(two_edges, 1, 3) == kInfiniteDistance);
    CHECK(distance(path_graph(3), 2, 2) == 0);
}

TEST_CASE("distance triangle inequality") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = path_graph(n);  // connected seed
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() % 4 == 0) g.add_edge(i, j);
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c)
                    CHECK(distance(g, a, c) <= distance(g, a, b) + distance(g, b, c));
    }
}

TEST_CASE("clique joins") {
    Graph p3 = path_graph(3);
    Graph joined = clique_join_vertex(p3, 3, 3);
    CHECK(joined.n == 5);
    CHECK(joined.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});

    // a whisker on K2 gives a path
    Graph whiskered = clique_join_vertex(complete_graph(2), 1, 2);
    CHECK(whiskered.n == 3);
    CHECK(whiskered.edge_count() == 2);

    Graph k4 = clique_join_vertex(Graph(1), 1, 4);
    CHECK(k4 == complete_graph(4));

    CHECK(clique_join_edge(complete_graph(2), {1, 2}, 3) == complete_graph(3));

    Graph via_edge = clique_join_edge(path_graph(3), {1, 2}, 4);
    CHECK(via_edge.n == 5);
    CHECK(via_edge.has_edge(1, 4));
    CHECK(via_edge.has_edge(2, 4));
    CHECK(via_edge.has_edge(1, 5));
    CHECK(via_edge.has_edge(2, 5));
    CHECK(via_edge.has_edge(4, 5));

    CHECK_THROWS_AS(clique_join_edge(path_graph(3), {1, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(clique_join_vertex(path_graph(3), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(clique_join_edge(path_graph(3), {1, 2}, 2), std::invalid_argument);
}

TEST_CASE("clique join edge counts") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = path_graph(n);
        int v = 1 + static_cast<int>(rng() % n);
        int t = 2 + static_cast<int>(rng() % 4);
        Graph jv = clique_join_vertex(g, v, t);
        CHECK(jv.n == g.n + t - 1);
        CHECK(jv.edge_count() == g.edge_count() + (t - 1) + (t - 1) * (t - 2) / 2);

        if (n >= 2) {
            int e = 1 + static_cast<int>(rng() % (n - 1));
            int s = 3 + static_cast<int>(rng() % 3);
            Graph je = clique_join_edge(g, {e, e + 1}, s);
            CHECK(je.n == g.n + s - 2);
            CHECK(je.edge_count() == g.edge_count() + 2 * (s - 2) + (s - 2) * (s - 3) / 2);
        }
    }
}

TEST_CASE("net detection") {
    CHECK(contains_induced_net(net_graph()));
    CHECK_FALSE(contains_induced_net(complete_graph(6)));
    CHECK_FALSE(contains_induced_net(path_graph(6)));

    auto witness = find_induced_net(net_graph());
    REQUIRE(witness.has_value());
    CHECK(*witness == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("net detection survives induced extension") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = net_graph();
        int extra = 1 + static_cast<int>(rng() % 4);
        Graph h(6 + extra);
        for (auto [a, b] : g.edges) h.add_edge(a, b);
        for (int v = 7; v <= h.n; ++v)
            for (int w = 1; w < v; ++w)
                if (rng() % 3 == 0) h.add_edge(w, v);
        CHECK(contains_induced_net(h));  // the original six still induce a net
    }
}

TEST_CASE("closedness") {
    Labeling id6(7);
    for (int v = 1; v <= 6; ++v) id6[v] = v;
    CHECK(is_closed_wrt(complete_graph(6), id6));

    Labeling id4(5);
    for (int v = 1; v <= 4; ++v) id4[v] = v;
    CHECK(is_closed_wrt(path_graph(4), id4));

    // the star K_{1,3} admits no closed labeling: checked against a
    // hand-rolled scan over all 24 labelings
    Graph star(4);
    star.add_edge(1, 2);
    star.add_edge(1, 3);
    star.add_edge(1, 4);
    int closed_count = 0;
    std::vector<int> perm{1, 2, 3, 4};
    do {
        Labeling sigma(5);
        for (int v = 1; v <= 4; ++v) sigma[v] = perm[v - 1];
        if (is_closed_wrt(star, sigma)) ++closed_count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(closed_count == 0);
    CHECK(is_closed(star).status == ClosedSearchStatus::none);

    auto res = is_closed(path_graph(5));
    REQUIRE(res.status == ClosedSearchStatus::found);
    CHECK(is_closed_wrt(path_graph(5), *res.labeling));

    CHECK(is_closed(complete_graph(11)).status == ClosedSearchStatus::unknown);
    CHECK(is_closed(complete_graph(11), 11).status == ClosedSearchStatus::found);
}

TEST_CASE("blocks and cut vertices") {
    Graph p4 = path_graph(4);
    CHECK(cut_vertices(p4) == std::vector<int>{2, 3});
    CHECK(blocks(p4).size() == 3);

    CHECK(cut_vertices(complete_graph(5)).empty());
    CHECK(is_block_graph(complete_graph(5)));
    CHECK(is_block_graph(net_graph()));

    Graph c4(4);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 4);
    c4.add_edge(1, 4);
    CHECK_FALSE(is_block_graph(c4));
    CHECK(cut_vertices(c4).empty());
}
