#include "ncdup/quiver.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace ncdup;

namespace {

Quiver random_quiver(std::mt19937_64& rng, std::size_t max_v, std::size_t max_a) {
    const std::size_t n = 1 + rng() % max_v, k = rng() % (max_a + 1);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < k; ++i) edges.emplace_back(rng() % n, rng() % n);
    return Quiver::from_edges(n, edges);
}

// All arrow sequences of the given length that compose (each arrow starts where the previous ended).
std::vector<std::vector<std::size_t>> all_paths(const Quiver& q, std::size_t len) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void()> rec = [&] {
        if (cur.size() == len) {
            out.push_back(cur);
            return;
        }
        for (std::size_t k = 0; k < q.arrow_count(); ++k)
            if (cur.empty() || q.arrows[cur.back()].dst == q.arrows[k].src) {
                cur.push_back(k);
                rec();
                cur.pop_back();
            }
    };
    rec();
    return out;
}

std::pair<std::size_t, std::size_t> ends(const Quiver& q, const std::vector<std::size_t>& p, std::size_t vertex) {
    if (p.empty()) return {vertex, vertex};
    return {q.arrows[p.front()].src, q.arrows[p.back()].dst};
}

// Rotation orbits of closed walks of length j, split into aperiodic ones and all.
std::pair<std::size_t, std::size_t> brute_circuits(const Quiver& q, std::size_t j) {
    std::set<std::vector<std::size_t>> orbits, proper;
    for (const auto& p : all_paths(q, j)) {
        if (q.arrows[p.back()].dst != q.arrows[p.front()].src) continue;
        std::vector<std::size_t> best = p, rot = p;
        bool aperiodic = true;
        for (std::size_t s = 1; s < j; ++s) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot == p) aperiodic = false;
            best = std::min(best, rot);
        }
        orbits.insert(best);
        if (aperiodic) proper.insert(best);
    }
    return {proper.size(), orbits.size()};
}

Quiver relabel(const Quiver& q, const std::vector<std::size_t>& perm, std::mt19937_64& rng) {
    Quiver r;
    r.vertices.resize(q.vertex_count());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) r.vertices[perm[v]] = q.vertices[v];
    for (const auto& a : q.arrows) r.arrows.push_back({perm[a.src], perm[a.dst], a.label});
    std::shuffle(r.arrows.begin(), r.arrows.end(), rng);
    return r;
}

bool brute_iso(const Quiver& a, const Quiver& b) {
    if (a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count()) return false;
    std::vector<std::size_t> perm(a.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    auto multiset = [](const Quiver& q, const std::vector<std::size_t>& p) {
        std::multiset<std::pair<std::size_t, std::size_t>> s;
        for (const auto& x : q.arrows) s.insert({p[x.src], p[x.dst]});
        return s;
    };
    std::vector<std::size_t> id = perm;
    const auto target = multiset(b, id);
    do {
        if (multiset(a, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST(SetMap, RejectsOutOfRangeValues) {
    EXPECT_THROW(SetMap({0, 2}), std::invalid_argument);
    EXPECT_NO_THROW(SetMap({1, 0}));
}

TEST(SetMap, IndexEncodingCoversEveryMapOnce) {
    std::set<std::vector<std::size_t>> seen;
    for (std::uint64_t c = 0; c < SetMap::count(3); ++c) seen.insert(SetMap::from_index(3, c).values());
    EXPECT_EQ(seen.size(), 27u);
    EXPECT_EQ(SetMap::from_index(3, 0).values(), (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_EQ(SetMap::identity(3).fixed_point_count(), 3u);
}

TEST(Quiver, FromEdgesValidates) {
    EXPECT_THROW(Quiver::from_edges(2, {{0, 2}}), std::invalid_argument);
    Quiver q = Quiver::from_edges(2, {{0, 1}});
    q.arrows.push_back({1, 0, "a0"});
    EXPECT_THROW(q.validate(), std::invalid_argument);
}

TEST(Quiver, ComponentsAndShapes) {
    const Quiver q = Quiver::from_edges(5, {{0, 1}, {1, 0}, {2, 2}, {3, 2}});
    EXPECT_EQ(component_vertex_sets(q).size(), 3u);
    EXPECT_FALSE(is_connected(q));

    EXPECT_TRUE(is_crown(Quiver::from_edges(1, {{0, 0}})));
    EXPECT_TRUE(is_crown(Quiver::from_edges(3, {{0, 1}, {1, 2}, {2, 0}})));
    EXPECT_FALSE(is_crown(Quiver::from_edges(3, {{0, 1}, {1, 2}, {2, 1}})));
    EXPECT_TRUE(is_round_trip(Quiver::from_edges(2, {{0, 1}, {1, 0}})));

    // Tree towards a sink.
    EXPECT_TRUE(is_one_sink_one_valued(Quiver::from_edges(4, {{0, 3}, {1, 3}, {2, 1}})));
    EXPECT_FALSE(is_one_sink_one_valued(Quiver::from_edges(3, {{0, 2}, {1, 0}, {1, 2}})));
    EXPECT_FALSE(is_one_sink_one_valued(Quiver::from_edges(2, {{0, 1}, {1, 0}})));
}

TEST(Quiver, ProperCycleOfOneValuedComponent) {
    const Quiver q = Quiver::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {4, 0}});
    const Circuit c = proper_cycle_of_component(q);
    EXPECT_EQ(c.length, 3u);
    EXPECT_THROW(proper_cycle_of_component(Quiver::from_edges(2, {{0, 1}})), std::invalid_argument);
}

TEST(Quiver, OrientedCycles) {
    EXPECT_TRUE(has_oriented_cycle(Quiver::from_edges(1, {{0, 0}})));
    EXPECT_FALSE(has_oriented_cycle(Quiver::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})));
    EXPECT_TRUE(has_oriented_cycle(Quiver::from_edges(3, {{0, 1}, {1, 2}, {2, 0}})));
}

TEST(QuiverCounts, ParallelPathsMatchEnumeration) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const Quiver q = random_quiver(rng, 4, 5);
        for (std::size_t n = 0; n <= 3; ++n)
            for (std::size_t m = 0; m <= 3; ++m) {
                std::uint64_t brute = 0;
                auto pn = all_paths(q, n), pm = all_paths(q, m);
                // Length-zero paths are the vertices.
                const std::size_t cn = n == 0 ? q.vertex_count() : pn.size(), cm = m == 0 ? q.vertex_count() : pm.size();
                for (std::size_t i = 0; i < cn; ++i)
                    for (std::size_t j = 0; j < cm; ++j)
                        brute += ends(q, n ? pn[i] : std::vector<std::size_t>{}, i) ==
                                 ends(q, m ? pm[j] : std::vector<std::size_t>{}, j);
                EXPECT_EQ(paths_parallel_count(q, n, m), brute) << "n=" << n << " m=" << m;
            }
    }
}

TEST(QuiverCounts, CircuitsMatchEnumeration) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        const Quiver q = random_quiver(rng, 4, 5);
        for (std::size_t j = 1; j <= 5; ++j) {
            const auto [proper, all] = brute_circuits(q, j);
            EXPECT_EQ(proper_circuits_count(q, j), proper);
            EXPECT_EQ(circuits_count(q, j), all);
        }
    }
    EXPECT_THROW(proper_circuits_count(Quiver::from_edges(1, {}), 0), std::invalid_argument);
}

TEST(QuiverCounts, OverflowIsReported) {
    // 40 parallel loops: 40^12 still fits in 64 bits, 40^13 does not.
    std::vector<std::pair<std::size_t, std::size_t>> loops(40, {0, 0});
    const Quiver q = Quiver::from_edges(1, loops);
    EXPECT_EQ(closed_walk_count(q, 12), 16777216000000000000ull);
    EXPECT_THROW(closed_walk_count(q, 13), std::overflow_error);
    EXPECT_EQ(closed_walk_count(q, 2), 1600u);
}

TEST(Canonical, InvariantUnderRelabellingAndComplete) {
    std::mt19937_64 rng(23);
    std::vector<Quiver> sample;
    for (int trial = 0; trial < 80; ++trial) {
        const Quiver q = random_quiver(rng, 5, 6);
        std::vector<std::size_t> perm(q.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_form(q), canonical_form(relabel(q, perm, rng)));
        const Quiver back = quiver_from_canonical(canonical_form(q));
        EXPECT_TRUE(brute_iso(q, back));
        sample.push_back(q);
    }
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = i + 1; j < sample.size(); ++j)
            EXPECT_EQ(quiver_iso(sample[i], sample[j]), brute_iso(sample[i], sample[j]));
}

TEST(Canonical, DistinguishesOrientation) {
    // Same underlying graph, different orientation: source with two arrows vs sink with two arrows.
    const Quiver out = Quiver::from_edges(3, {{0, 1}, {0, 2}});
    const Quiver in = Quiver::from_edges(3, {{1, 0}, {2, 0}});
    EXPECT_FALSE(quiver_iso(out, in));
    EXPECT_TRUE(quiver_iso(in, opposite(out)));
}
