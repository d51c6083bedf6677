#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "signet/clustering.hpp"
#include "signet/errors.hpp"
#include "signet/generate.hpp"

using namespace signet;

namespace {

SyntheticSpec erdos_spec(NodeId n, double p, double bias, std::uint64_t seed) {
    SyntheticSpec s;
    s.model = "erdos_signed";
    s.n = n;
    s.p = p;
    s.sign_bias = bias;
    s.seed = seed;
    return s;
}

}  // namespace

TEST_CASE("generation is deterministic and labels are decimal indices") {
    SyntheticSpec spec = erdos_spec(25, 0.2, 0.7, 99);
    const auto a = generate(spec);
    const auto b = generate(spec);
    CHECK(a.n() == 25);
    CHECK(a.m() == b.m());
    const auto ea = a.edges();
    const auto eb = b.edges();
    REQUIRE(ea.size() == eb.size());
    for (std::size_t i = 0; i < ea.size(); ++i) {
        CHECK(ea[i].src == eb[i].src);
        CHECK(ea[i].dst == eb[i].dst);
        CHECK(ea[i].sign == eb[i].sign);
    }
    for (NodeId u = 0; u < a.n(); ++u) CHECK(a.label(u) == std::to_string(u));

    SyntheticSpec other = spec;
    other.seed = 100;
    CHECK(generate(other).m() != a.m());  // verified distinct draw for these parameters
}

TEST_CASE("erdos at p=1 is the complete digraph; sign_bias=1 makes it all positive") {
    const auto g = generate(erdos_spec(9, 1.0, 1.0, 1));
    CHECK(g.m() == 9 * 8);
    CHECK(g.m_neg() == 0);
    for (NodeId u = 0; u < g.n(); ++u) CHECK(g.out_degree(u) == 8);
}

TEST_CASE("erdos at p=0 yields an empty edge set") {
    const auto g = generate(erdos_spec(5, 0.0, 0.5, 1));
    CHECK(g.n() == 5);
    CHECK(g.m() == 0);
}

TEST_CASE("erdos edge count and sign ratio stay inside binomial bounds") {
    // n(n-1) = 1560 ordered pairs at p = 0.2: mean 312, sigma ~ 15.8.
    for (const std::uint64_t seed : {0ull, 1ull, 2ull, 3ull, 4ull}) {
        const auto g = generate(erdos_spec(40, 0.2, 0.8, seed));
        CHECK(g.m() > 312 - 5 * 16);
        CHECK(g.m() < 312 + 5 * 16);
        const double pos_rate = static_cast<double>(g.m_pos()) / static_cast<double>(g.m());
        CHECK(pos_rate > 0.8 - 0.12);
        CHECK(pos_rate < 0.8 + 0.12);
    }
}

TEST_CASE("noiseless planted balance has only balanced triangles") {
    SyntheticSpec spec;
    spec.model = "planted_balance";
    spec.n = 24;
    spec.seed = 2;
    spec.groups = 2;
    spec.p_in = 0.5;
    spec.p_out = 0.5;
    spec.noise = 0.0;
    const auto g = generate(spec);
    const auto r = clustering_coefficients(g);
    REQUIRE(r.c.has_value());
    CHECK(r.num_undirected == r.num_undirected_signed);
    CHECK(*r.s == doctest::Approx(1.0));

    // noise = 1 flips every sign: triangles remain balanced (even flips per
    // triangle product), but intra-group edges are now all negative.
    SyntheticSpec flipped = spec;
    flipped.noise = 1.0;
    const auto h = generate(flipped);
    bool saw_intra = false;
    for (const auto& e : h.edges()) {
        const bool same = (e.src < 12) == (e.dst < 12);
        CHECK(e.sign == (same ? -1 : 1));
        saw_intra = saw_intra || same;
    }
    CHECK(saw_intra);
}

TEST_CASE("planted balance group sizes differ by at most one") {
    SyntheticSpec spec;
    spec.model = "planted_balance";
    spec.n = 10;
    spec.seed = 3;
    spec.groups = 3;
    spec.p_in = 1.0;
    spec.p_out = 0.0;
    spec.noise = 0.0;
    const auto g = generate(spec);
    // With p_in=1 and p_out=0 each group is a complete positive sub-digraph,
    // so m = sum over groups of size*(size-1). Sizes must come out 4/3/3.
    CHECK(g.m() == 4 * 3 + 3 * 2 + 3 * 2);
    CHECK(g.m_neg() == 0);
}

TEST_CASE("planted trolls: structure of attacks, background and fans") {
    SyntheticSpec spec;
    spec.model = "planted_trolls";
    spec.n = 100;
    spec.seed = 4;
    spec.n_trolls = 8;
    spec.p_attack = 0.3;
    spec.p_background = 0.1;
    spec.p_background_neg = 0.1;
    const auto g = generate(spec);
    const NodeId first_troll = 92;
    std::int64_t attacks = 0;
    std::int64_t troll_fans = 0;
    for (const auto& e : g.edges()) {
        const bool src_troll = e.src >= first_troll;
        const bool dst_troll = e.dst >= first_troll;
        CHECK(!(src_troll && dst_troll));  // trolls never link each other
        if (!src_troll && dst_troll) {
            if (e.sign < 0)
                ++attacks;
            else
                ++troll_fans;
        }
    }
    // Attacks dominate normal->troll pairs; background still gives trolls fans.
    CHECK(attacks > 8 * 92 * 0.3 * 0.5);
    CHECK(troll_fans > 0);
    // Some background negativity exists among normals.
    std::int64_t normal_neg = 0;
    for (const auto& e : g.edges())
        if (e.dst < first_troll && e.sign < 0) ++normal_neg;
    CHECK(normal_neg > 0);
}

TEST_CASE("parameter validation") {
    SyntheticSpec bad = erdos_spec(10, 1.5, 0.5, 0);
    CHECK_THROWS_AS(generate(bad), DataError);
    bad = erdos_spec(10, 0.5, -0.1, 0);
    CHECK_THROWS_AS(generate(bad), DataError);
    bad = erdos_spec(0, 0.5, 0.5, 0);
    CHECK_THROWS_AS(generate(bad), DataError);

    SyntheticSpec trolls;
    trolls.model = "planted_trolls";
    trolls.n = 10;
    trolls.n_trolls = 11;
    CHECK_THROWS_AS(generate(trolls), DataError);
    trolls.n_trolls = 2;
    trolls.p_attack = 2.0;
    CHECK_THROWS_AS(generate(trolls), DataError);

    SyntheticSpec groups;
    groups.model = "planted_balance";
    groups.n = 10;
    groups.groups = 0;
    CHECK_THROWS_AS(generate(groups), DataError);

    SyntheticSpec unknown;
    unknown.model = "barabasi";
    unknown.n = 10;
    CHECK_THROWS_AS(generate(unknown), UsageError);
}
