#include "lenz/census.hpp"
#include "lenz/hypergraph.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace lenz;

namespace {

Hypergraph relabel(const Hypergraph& H, std::size_t n, const std::vector<std::uint32_t>& map) {
    Hypergraph out(n, H.uniformity());
    for (const auto& e : H.edges()) {
        Edge m;
        for (auto v : e) m.push_back(map[v]);
        std::sort(m.begin(), m.end());
        out.add_edge(m);
    }
    return out;
}

Hypergraph merge(const Hypergraph& a, const Hypergraph& b) {
    Hypergraph out(std::max(a.vertex_count(), b.vertex_count()), a.uniformity());
    for (const auto& e : a.edges()) out.add_edge(e);
    for (const auto& e : b.edges()) out.add_edge(e);
    return out;
}

CircleConfig even(std::vector<long long> sizes) {
    PartitionVector p{std::move(sizes)};
    return build_even_config(p.n(), static_cast<long long>(p.r()), p);
}

}  // namespace

TEST(HypergraphType, EdgeValidation) {
    Hypergraph h(4, 3);
    EXPECT_TRUE(h.add_edge({2, 0, 1}));
    EXPECT_FALSE(h.add_edge({0, 1, 2}));
    EXPECT_TRUE(h.has_edge({0, 1, 2}));
    EXPECT_THROW(h.add_edge({0, 1}), domain_error);
    EXPECT_THROW(h.add_edge({0, 1, 4}), domain_error);
    EXPECT_THROW(h.add_edge({0, 1, 1}), domain_error);
    EXPECT_EQ(h.edge_count(), 1u);
    EXPECT_EQ(h.degrees(), (std::vector<std::size_t>{1, 1, 1, 0}));
}

TEST(Pattern, VertexAndEdgeCounts) {
    auto a = make_pattern_H(3, 3);
    EXPECT_EQ(a.vertex_count(), 10u);
    EXPECT_EQ(a.edge_count(), 6u);
    auto b = make_pattern_H(4, 3);
    EXPECT_EQ(b.vertex_count(), 15u);
    EXPECT_EQ(b.edge_count(), 10u);
    auto c = make_pattern_H(3, 4);
    EXPECT_EQ(c.vertex_count(), 16u);
    EXPECT_EQ(c.edge_count(), 6u);
    EXPECT_EQ(make_pattern_H(2, 3).edge_count(), 3u);
    EXPECT_THROW(make_pattern_H(1, 3), domain_error);
    EXPECT_THROW(make_pattern_H(3, 2), domain_error);
}

TEST(Pattern, CountFormulaAndStructure) {
    for (std::size_t k = 3; k <= 5; ++k) {
        for (std::size_t r = 2; r <= 7; ++r) {
            auto h = make_pattern_H(r, k);
            const std::size_t pairs = (r + 1) * r / 2;
            EXPECT_EQ(h.vertex_count(), r + 1 + pairs * (k - 2));
            EXPECT_EQ(h.edge_count(), pairs);
            auto deg = h.degrees();
            for (std::size_t v = 0; v <= r; ++v) EXPECT_EQ(deg[v], r);
            for (std::size_t v = r + 1; v < h.vertex_count(); ++v) EXPECT_EQ(deg[v], 1u);
            // every pair of core vertices lies in exactly one edge
            for (const auto& e : h.edges()) {
                std::size_t core = 0;
                for (auto v : e) core += v <= r ? 1 : 0;
                EXPECT_EQ(core, 2u);
            }
        }
    }
}

TEST(Blowup, Examples) {
    Hypergraph single(3, 3);
    single.add_edge({0, 1, 2});
    auto b = blowup(single, 2);
    EXPECT_EQ(b.vertex_count(), 6u);
    EXPECT_EQ(b.edge_count(), 8u);
    EXPECT_EQ(blowup(single, 1).edges(), single.edges());
    auto big = blowup(make_pattern_H(3, 3), 3);
    EXPECT_EQ(big.vertex_count(), 30u);
    EXPECT_EQ(big.edge_count(), 162u);
    EXPECT_THROW(blowup(single, 0), domain_error);
}

TEST(Blowup, ScalingIdentities) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t k = 3 + trial % 2;
        auto H = oracle::random_hypergraph(rng, 6, k, 0.3);
        for (std::size_t t = 1; t <= 3; ++t) {
            auto B = blowup(H, t);
            std::size_t tk = 1;
            for (std::size_t i = 0; i < k; ++i) tk *= t;
            EXPECT_EQ(B.vertex_count(), t * H.vertex_count());
            EXPECT_EQ(B.edge_count(), tk * H.edge_count());
        }
    }
}

TEST(Blowup, ContainsTheOriginal) {
    auto H = make_pattern_H(3, 3);
    EXPECT_TRUE(contains_copy(blowup(H, 2), H));
}

TEST(Containment, TrivialCases) {
    auto H = make_pattern_H(3, 3);
    EXPECT_TRUE(contains_copy(H, H));
    Hypergraph small(5, 3);
    EXPECT_FALSE(contains_copy(small, H));
    Hypergraph four(10, 4);
    EXPECT_THROW(contains_copy(four, H), domain_error);
    Hypergraph empty(3, 3);
    EXPECT_TRUE(contains_copy(H, empty));
}

TEST(Containment, AgreesWithAllInjectionsOracle) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> nh(3, 6), ng(4, 10);
    std::uniform_real_distribution<double> dens(0.1, 0.6);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t k = 3;
        std::size_t h = nh(rng), g = ng(rng);
        if (h > g) std::swap(h, g);
        auto H = oracle::random_hypergraph(rng, h, k, dens(rng));
        auto G = oracle::random_hypergraph(rng, g, k, dens(rng));
        const bool want = oracle::contains_by_all_injections(G, H);
        ASSERT_EQ(contains_copy(G, H), want) << "trial " << trial;
        ASSERT_EQ(oracle::EdgeAssignmentSearch(G, H).run(), want) << "trial " << trial;
        (want ? yes : no)++;
    }
    EXPECT_GT(yes, 50);
    EXPECT_GT(no, 50);
}

TEST(Containment, FindsPlantedCopies) {
    std::mt19937_64 rng(99);
    const auto H = make_pattern_H(3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 14 + trial % 10;
        std::vector<std::uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto planted = relabel(H, n, perm);
        auto noise = oracle::random_hypergraph(rng, n, 3, 0.05);
        EXPECT_TRUE(contains_copy(merge(planted, noise), H)) << "trial " << trial;
    }
}

TEST(Containment, MissingEdgeIsNoticed) {
    auto H = make_pattern_H(3, 3);
    Hypergraph G(H.vertex_count(), 3);
    bool skipped = false;
    for (const auto& e : H.edges()) {
        if (!skipped) {
            skipped = true;
            continue;
        }
        G.add_edge(e);
    }
    EXPECT_FALSE(contains_copy(G, H));
}

TEST(SimplexHypergraph, Examples) {
    auto g = build_simplex_hypergraph(even({1, 1, 1}), 3);
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edge_count(), 1u);

    PointSet dodecagon(2);
    for (int s = 0; s < 12; ++s) dodecagon.push_back(Point{{cos30(s), sin30(s)}});
    auto d = build_simplex_hypergraph(dodecagon, 3);
    EXPECT_EQ(d.vertex_count(), 12u);
    EXPECT_EQ(d.edge_count(), 4u);

    auto full = build_simplex_hypergraph(even({12, 12, 12}), 3);
    EXPECT_EQ(full.vertex_count(), 36u);
    EXPECT_EQ(full.edge_count(), 2604u);
}

TEST(SimplexHypergraph, EdgeCountEqualsCensus) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> sz(0, 14);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<long long> sizes(3 + trial % 2);
        for (auto& s : sizes) s = sz(rng);
        auto cfg = even(sizes);
        for (std::size_t k = 3; k <= std::min<std::size_t>(4, sizes.size()); ++k) {
            const auto total = count_structured(cfg, k).total;
            EXPECT_EQ(BigInt(build_simplex_hypergraph(cfg, k).edge_count()), total);
            if (is_embeddable(cfg)) {
                EXPECT_EQ(BigInt(build_simplex_hypergraph(embed(cfg), k).edge_count()), total);
            }
        }
    }
}

TEST(SimplexHypergraph, TwoDodecagonsAndASingleton) {
    auto cfg = even({12, 12, 1});
    auto G = build_simplex_hypergraph(cfg, 3);
    ASSERT_EQ(G.vertex_count(), 25u);
    EXPECT_EQ(BigInt(G.edge_count()), count_structured(cfg, 3).total);
    auto H = make_pattern_H(3, 3);
    const bool found = contains_copy(G, H);
    EXPECT_EQ(found, oracle::EdgeAssignmentSearch(G, H).run());
    RecordProperty("contains_pattern", found ? "true" : "false");
}
