#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stylofluct/cooc_network.hpp"
#include "support/oracles.hpp"

using namespace stylofluct;

namespace {

TokenStream stream_of(std::vector<std::string> tokens) {
    TokenStream s;
    s.tokens = std::move(tokens);
    s.raw_length = s.tokens.size();
    return s;
}

CoocNetwork from_oracle(const oracles::Graph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < g.n; ++a)
        for (std::size_t b = a + 1; b < g.n; ++b)
            if (g.adj[a][b]) edges.emplace_back(a, b);
    return CoocNetwork::from_edges(g.n, edges);
}

}  // namespace

TEST_CASE("build from token stream") {
    SUBCASE("adjacent tokens connect, repeats collapse, no self-loops") {
        const auto net = CoocNetwork::build(stream_of({"a", "b", "a", "b", "b"}), 1);
        CHECK(net.vocab_size() == 2);
        CHECK(net.edge_count() == 1);  // a-b once, b-b rejected
        CHECK(net.has_edge(net.index_of("a"), net.index_of("b")));
    }
    SUBCASE("single token: one node, no edges") {
        const auto net = CoocNetwork::build(stream_of({"a"}), 1);
        CHECK(net.vocab_size() == 1);
        CHECK(net.edge_count() == 0);
    }
    SUBCASE("empty stream rejected") {
        CHECK_THROWS_AS(CoocNetwork::build(stream_of({}), 1), std::invalid_argument);
    }
    SUBCASE("d=2 connects across one intermediate") {
        const auto net = CoocNetwork::build(stream_of({"a", "b", "c"}), 2);
        CHECK(net.edge_count() == 3);  // a-b, b-c, a-c
    }
    SUBCASE("edge list dump is sorted and tab separated") {
        const auto net = CoocNetwork::build(stream_of({"b", "a", "c"}), 1);
        CHECK(net.edge_list_dump() == "a\tb\na\tc\n");
    }
}

TEST_CASE("clustering") {
    SUBCASE("triangle: all 1") {
        const auto net = CoocNetwork::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
        for (double c : clustering(net)) CHECK(c == doctest::Approx(1.0));
    }
    SUBCASE("star: all 0") {
        const auto net = CoocNetwork::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        for (double c : clustering(net)) CHECK(c == 0.0);
    }
    SUBCASE("4-cycle with one diagonal") {
        // cycle 0-1-2-3-0 plus diagonal 0-2
        const auto net = CoocNetwork::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
        const auto c = clustering(net);
        // diagonal endpoints 0,2 have degree 3; neighbor edge count 2 -> 2*2/(3*2)=2/3
        CHECK(c[0] == doctest::Approx(2.0 / 3.0));
        CHECK(c[2] == doctest::Approx(2.0 / 3.0));
        // nodes 1,3 have degree 2, the neighbors 0,2 are connected -> 1
        CHECK(c[1] == doctest::Approx(1.0));
        CHECK(c[3] == doctest::Approx(1.0));
    }
    SUBCASE("matches brute-force neighbor-edge enumeration on random graphs") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const auto g = oracles::random_connected_graph(5, rng);
            const auto net = from_oracle(g);
            const auto c = clustering(net);
            for (std::size_t i = 0; i < g.n; ++i) {
                const std::size_t k = g.degree(i);
                if (k < 2) {
                    CHECK(c[i] == 0.0);
                    continue;
                }
                std::size_t links = 0;
                for (std::size_t a = 0; a < g.n; ++a)
                    for (std::size_t b = a + 1; b < g.n; ++b)
                        if (g.adj[i][a] && g.adj[i][b] && g.adj[a][b]) ++links;
                CHECK(c[i] == doctest::Approx(2.0 * links / (k * (k - 1.0))).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("shortest paths") {
    SUBCASE("path graph a-b-c") {
        const auto net = CoocNetwork::from_edges(3, {{0, 1}, {1, 2}});
        const auto sp = shortest_paths(net);
        CHECK(sp.dist[0][2] == 2);
        CHECK(sp.mean_dist[1] == doctest::Approx(1.0));
        CHECK(sp.global_mean == doctest::Approx(4.0 / 3.0));
        CHECK(sp.reachable_fraction == doctest::Approx(1.0));
    }
    SUBCASE("complete graph K4") {
        const auto net =
            CoocNetwork::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        CHECK(shortest_paths(net).global_mean == doctest::Approx(1.0));
    }
    SUBCASE("two disjoint edges: reachable pairs only") {
        const auto net = CoocNetwork::from_edges(4, {{0, 1}, {2, 3}});
        const auto sp = shortest_paths(net);
        CHECK(sp.global_mean == doctest::Approx(1.0));
        CHECK(sp.reachable_fraction == doctest::Approx(4.0 / 12.0));
    }
    SUBCASE("isolated node flagged") {
        const auto net = CoocNetwork::from_edges(3, {{0, 1}});
        const auto sp = shortest_paths(net);
        CHECK(sp.isolated[2]);
        CHECK(sp.mean_dist[2] == 0.0);
        CHECK_FALSE(sp.isolated[0]);
    }
    SUBCASE("distance matrix is symmetric with zero diagonal") {
        std::mt19937_64 rng(11);
        const auto g = oracles::random_connected_graph(8, rng);
        const auto sp = shortest_paths(from_oracle(g));
        for (std::size_t i = 0; i < g.n; ++i) {
            CHECK(sp.dist[i][i] == 0);
            for (std::size_t j = 0; j < g.n; ++j) CHECK(sp.dist[i][j] == sp.dist[j][i]);
        }
    }
}

TEST_CASE("betweenness") {
    SUBCASE("path graph: interior vertex 1") {
        const auto net = CoocNetwork::from_edges(3, {{0, 1}, {1, 2}});
        const auto b = betweenness(net);
        CHECK(b[0] == doctest::Approx(0.0));
        CHECK(b[1] == doctest::Approx(1.0));
        CHECK(b[2] == doctest::Approx(0.0));
    }
    SUBCASE("star: center carries all leaf pairs") {
        const std::size_t leaves = 5;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t l = 1; l <= leaves; ++l) edges.emplace_back(0, l);
        const auto b = betweenness(CoocNetwork::from_edges(leaves + 1, edges));
        CHECK(b[0] == doctest::Approx(leaves * (leaves - 1) / 2.0));
        for (std::size_t l = 1; l <= leaves; ++l) CHECK(b[l] == doctest::Approx(0.0));
    }
    SUBCASE("matches path enumeration on random connected graphs") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 60; ++trial) {
            const auto g = oracles::random_connected_graph(8, rng);
            const auto fast = betweenness(from_oracle(g));
            const auto slow = oracles::betweenness_enumeration(g);
            for (std::size_t i = 0; i < g.n; ++i) {
                CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("accessibility") {
    SUBCASE("K4 matches matrix-power oracle at h=2 and h=3") {
        oracles::Graph g(4);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b) g.add_edge(a, b);
        const auto net = from_oracle(g);
        for (std::size_t h : {2, 3}) {
            const auto fast = accessibility(net, h);
            const auto slow = oracles::accessibility_matrix_power(g, h);
            for (std::size_t i = 0; i < 4; ++i)
                CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-12));
        }
    }
    SUBCASE("single edge: two-step walk returns home, alpha = 1") {
        const auto net = CoocNetwork::from_edges(2, {{0, 1}});
        const auto a = accessibility(net, 2);
        CHECK(a[0] == doctest::Approx(1.0));
        CHECK(a[1] == doctest::Approx(1.0));
    }
    SUBCASE("uniform distribution over n targets gives alpha = n") {
        // star center at h=1 reaches each leaf with probability 1/4
        std::vector<std::pair<std::size_t, std::size_t>> edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
        const auto net = CoocNetwork::from_edges(5, edges);
        CHECK(accessibility(net, 1)[0] == doctest::Approx(4.0));
    }
    SUBCASE("alpha at h=1 equals the degree") {
        std::mt19937_64 rng(17);
        const auto g = oracles::random_connected_graph(7, rng);
        const auto net = from_oracle(g);
        const auto a = accessibility(net, 1);
        for (std::size_t i = 0; i < g.n; ++i)
            CHECK(a[i] == doctest::Approx(static_cast<double>(g.degree(i))).epsilon(1e-10));
    }
    SUBCASE("rows of p^h sum to one: checked via oracle entropies on random graphs") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            const auto g = oracles::random_connected_graph(6, rng);
            const auto net = from_oracle(g);
            for (std::size_t h : {2, 3}) {
                const auto fast = accessibility(net, h);
                const auto slow = oracles::accessibility_matrix_power(g, h);
                for (std::size_t i = 0; i < g.n; ++i)
                    CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("adding a disconnected component leaves existing node metrics unchanged") {
    const auto base = CoocNetwork::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
    const auto extended =
        CoocNetwork::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {4, 5}});
    const auto c0 = clustering(base), c1 = clustering(extended);
    const auto b0 = betweenness(base), b1 = betweenness(extended);
    const auto a0 = accessibility(base, 2), a1 = accessibility(extended, 2);
    const auto sp0 = shortest_paths(base), sp1 = shortest_paths(extended);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(c0[i] == c1[i]);
        CHECK(b0[i] == doctest::Approx(b1[i]));
        CHECK(a0[i] == doctest::Approx(a1[i]));
        CHECK(sp0.mean_dist[i] == doctest::Approx(sp1.mean_dist[i]));
    }
}
