#include "scarlab/geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

using namespace scarlab;

namespace {

GeometryDescriptor chain_obc(int L) { return {GeometryDescriptor::Kind::ChainObc, L, 0}; }
GeometryDescriptor chain_pbc(int L) { return {GeometryDescriptor::Kind::ChainPbc, L, 0}; }

// Relabels graph vertices; for comparing constructions up to relabeling.
Graph relabel(const Graph& g, const std::vector<int>& map) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(map[u], map[v]);
    return Graph(g.n_vertices(), std::move(edges));
}

} // namespace

TEST_SUITE("geometry") {

TEST_CASE("chain graphs") {
    const Graph ring = build_geometry(chain_pbc(4)).graph;
    CHECK(ring.n_vertices() == 4);
    CHECK(ring.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    const Graph path = build_geometry(chain_obc(3)).graph;
    CHECK(path.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    // L = 2 ring degenerates to a single deduplicated edge.
    CHECK(build_geometry(chain_pbc(2)).graph.n_edges() == 1);

    CHECK_THROWS_AS(build_geometry(chain_pbc(1)), std::invalid_argument);
}

TEST_CASE("dangler edge set matches the annihilator supports") {
    const Geometry geom = build_geometry({GeometryDescriptor::Kind::Dangler, 3, 0});
    const std::vector<std::pair<int, int>> expected{{0, 1}, {0, 4}, {1, 2}, {3, 4}, {4, 5}};
    CHECK(geom.graph.edges() == expected);
    REQUIRE(geom.pairing.has_value());
    CHECK(geom.pairing->pairs() == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});
}

TEST_CASE("disjoint double") {
    const Graph ring5 = build_geometry(chain_pbc(5)).graph;
    const auto [doubled, pairing] = disjoint_double(ring5);
    CHECK(doubled.n_vertices() == 10);
    CHECK(doubled.n_edges() == 10);
    for (int i = 0; i < 5; ++i) {
        CHECK(pairing.partner(i) == i + 5);
        CHECK(doubled.has_edge(i, (i + 1) % 5));
        CHECK(doubled.has_edge(5 + i, 5 + (i + 1) % 5));
    }

    const auto [two_edges, p2] = disjoint_double(Graph(2, {{0, 1}}));
    CHECK(two_edges.n_vertices() == 4);
    CHECK(two_edges.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

    const auto [chains, p3] = disjoint_double(build_geometry(chain_obc(3)).graph);
    CHECK(chains.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {3, 4}, {4, 5}});
}

TEST_CASE("W moves rebuild the doubled ring") {
    // Two 5-rings into the 10-ring: stitch the copies at one bond, then cut
    // the duplicated intra-system bonds.
    const Graph ring5 = build_geometry(chain_pbc(5)).graph;
    auto [g, pairing] = disjoint_double(ring5);
    g = apply_w(g, pairing, {WMove::Sign::Plus, 0, 6});
    g = apply_w(g, pairing, {WMove::Sign::Plus, 5, 1});
    g = apply_w(g, pairing, {WMove::Sign::Minus, 0, 1});
    g = apply_w(g, pairing, {WMove::Sign::Minus, 5, 6});

    // The rewired graph is a 10-cycle; walking it gives the relabeling onto
    // the canonical ring.
    const std::vector<int> walk{1, 2, 3, 4, 0, 6, 7, 8, 9, 5};
    std::vector<int> map(10);
    for (int pos = 0; pos < 10; ++pos) map[walk[pos]] = pos;
    CHECK(relabel(g, map) == build_geometry(chain_pbc(10)).graph);
}

TEST_CASE("W plus then minus is the identity") {
    auto [g, pairing] = disjoint_double(build_geometry(chain_pbc(4)).graph);
    const Graph added = apply_w(g, pairing, {WMove::Sign::Plus, 0, 5});
    CHECK(added.n_edges() == g.n_edges() + 1);
    const Graph back = apply_w(added, pairing, {WMove::Sign::Minus, 0, 5});
    CHECK(back == g);
}

TEST_CASE("trivial W moves are rejected") {
    auto [g, pairing] = disjoint_double(build_geometry(chain_pbc(4)).graph);
    // (0, 2) has no supporting cross edges.
    CHECK_THROWS_WITH_AS(apply_w(g, pairing, {WMove::Sign::Plus, 0, 2}),
                         doctest::Contains("missing cross edge"), std::invalid_argument);
    // (0, 1) exists, so adding it again is trivial in the other direction.
    CHECK_THROWS_AS(apply_w(g, pairing, {WMove::Sign::Minus, 0, 1}), std::invalid_argument);
}

TEST_CASE("lambda condition on the doubled ring") {
    const Geometry ring = build_geometry({GeometryDescriptor::Kind::RingDoubled, 5, 0});
    REQUIRE(ring.pairing.has_value());
    const auto half = check_lambda_condition(ring.graph, *ring.pairing);
    REQUIRE(half.has_value());
    CHECK(*half == build_geometry(chain_pbc(5)).graph);
}

TEST_CASE("lambda condition on the dangler") {
    const Geometry geom = build_geometry({GeometryDescriptor::Kind::Dangler, 4, 0});
    const auto half = check_lambda_condition(geom.graph, *geom.pairing);
    REQUIRE(half.has_value());
    CHECK(*half == build_geometry(chain_obc(4)).graph);
}

TEST_CASE("open chains host no pairing beyond the four-site exception") {
    for (int L : {3, 4}) {
        const Graph chain = build_geometry(chain_obc(2 * L)).graph;
        CHECK(search_pairings(chain).empty());
    }
    // The four-site open chain is the one exception: the two-site chain is a
    // complete graph, so its double stitches into the open chain.
    const auto found = search_pairings(build_geometry(chain_obc(4)).graph);
    REQUIRE(found.size() == 1);
    CHECK(found[0].first.pairs() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
    CHECK(found[0].second == Graph(2, {{0, 1}}));
}

TEST_CASE("ring pairing found by search") {
    const Graph ring = build_geometry(chain_pbc(8)).graph;
    const auto found = search_pairings(ring);
    const PairingPattern shift({{0, 4}, {1, 5}, {2, 6}, {3, 7}});
    const bool has_shift = std::any_of(found.begin(), found.end(),
                                       [&](const auto& pg) { return pg.first == shift; });
    CHECK(has_shift);
}

TEST_CASE("search respects the vertex limit") {
    const Graph big = build_geometry(chain_pbc(18)).graph;
    CHECK_THROWS(search_pairings(big));
    const Graph odd = build_geometry(chain_obc(5)).graph;
    CHECK_THROWS_AS(search_pairings(odd), std::invalid_argument);
}

TEST_CASE("grid and cylinder constructions certify") {
    for (auto kind : {GeometryDescriptor::Kind::Grid, GeometryDescriptor::Kind::CylinderPbcLadder,
                      GeometryDescriptor::Kind::CylinderMoebius,
                      GeometryDescriptor::Kind::CylinderObcLadder}) {
        const Geometry geom = build_geometry({kind, 6, 2});
        REQUIRE(geom.pairing.has_value());
        CHECK(check_lambda_condition(geom.graph, *geom.pairing).has_value());
    }
    const Geometry grid44 = build_geometry({GeometryDescriptor::Kind::Grid, 4, 4});
    CHECK(check_lambda_condition(grid44.graph, *grid44.pairing).has_value());

    CHECK_THROWS_AS(build_geometry({GeometryDescriptor::Kind::CylinderObcLadder, 6, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_geometry({GeometryDescriptor::Kind::Grid, 4, 3}), std::invalid_argument);
}

TEST_CASE("three distinct certified pairings on the 8x2 cylinder") {
    std::set<std::vector<std::pair<int, int>>> seen;
    for (auto kind : {GeometryDescriptor::Kind::CylinderPbcLadder,
                      GeometryDescriptor::Kind::CylinderMoebius,
                      GeometryDescriptor::Kind::CylinderObcLadder}) {
        const Geometry geom = build_geometry({kind, 8, 2});
        REQUIRE(geom.pairing.has_value());
        CHECK(check_lambda_condition(geom.graph, *geom.pairing).has_value());
        seen.insert(geom.pairing->pairs());
    }
    CHECK(seen.size() == 3);
}

TEST_CASE("round trip: condition recovers the half graph of a double") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 3 == 0) edges.emplace_back(u, v);
            }
        }
        const Graph g_a(n, edges);
        const auto [doubled, pairing] = disjoint_double(g_a);
        const auto half = check_lambda_condition(doubled, pairing);
        REQUIRE(half.has_value());
        CHECK(*half == g_a);
    }
}

TEST_CASE("apply_w changes exactly one edge") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        const int half_n = 3 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < half_n; ++u)
            for (int v = u + 1; v < half_n; ++v)
                if (rng() % 2 == 0) edges.emplace_back(u, v);
        const Graph g_a(half_n, edges);
        const auto [doubled, pairing] = disjoint_double(g_a);
        // Any intra-copy edge supports the corresponding cross move.
        for (const auto& [u, v] : g_a.edges()) {
            const Graph after = apply_w(doubled, pairing, {WMove::Sign::Plus, u, v + half_n});
            CHECK(after.n_vertices() == doubled.n_vertices());
            CHECK(after.n_edges() == doubled.n_edges() + 1);
            break;
        }
    }
}

TEST_CASE("graph and pairing text round trip") {
    const Geometry geom = build_geometry({GeometryDescriptor::Kind::Dangler, 3, 0});
    std::stringstream gs;
    geom.graph.write(gs);
    CHECK(Graph::parse(gs) == geom.graph);

    std::stringstream ps;
    geom.pairing->write(ps);
    CHECK(PairingPattern::parse(ps) == *geom.pairing);
}

TEST_CASE("search output is automorphism covariant on the ring") {
    // Rotating the ring and rotating the found pairings give the same set.
    const Graph ring = build_geometry(chain_pbc(6)).graph;
    const auto found = search_pairings(ring);
    std::set<std::set<std::pair<int, int>>> canonical;
    for (const auto& [pairing, half] : found) {
        std::set<std::pair<int, int>> rotated;
        for (const auto& [a, b] : pairing.pairs()) {
            int ra = (a + 1) % 6, rb = (b + 1) % 6;
            rotated.insert({std::min(ra, rb), std::max(ra, rb)});
        }
        canonical.insert(std::move(rotated));
    }
    std::set<std::set<std::pair<int, int>>> plain;
    for (const auto& [pairing, half] : found) {
        std::set<std::pair<int, int>> s(pairing.pairs().begin(), pairing.pairs().end());
        plain.insert(std::move(s));
    }
    CHECK(canonical == plain);
}

} // TEST_SUITE
