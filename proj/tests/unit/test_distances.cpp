#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "signet/distances.hpp"

using namespace signet;

namespace {

constexpr int kInf = 1 << 20;

// Independent Floyd-Warshall over the symmetrized unsigned simple graph.
struct DenseDistances {
    std::vector<std::vector<int>> d;
    std::vector<NodeId> component;  // largest component, by size then smallest index
    std::int64_t component_edges = 0;
    std::int64_t component_count = 0;
    std::int64_t diameter = 0;
    std::int64_t radius = 0;
    double average = 0.0;
};

DenseDistances floyd_warshall(const SignedDigraph& g) {
    const auto n = static_cast<std::size_t>(g.n());
    DenseDistances out;
    out.d.assign(n, std::vector<int>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) out.d[i][i] = 0;
    for (NodeId u = 0; u < g.n(); ++u)
        for (const NodeId v : g.out_neighbors(u)) {
            out.d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
            out.d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out.d[i][j] = std::min(out.d[i][j], out.d[i][k] + out.d[k][j]);

    // Components from the distance matrix itself.
    std::vector<int> comp(n, -1);
    int comps = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (out.d[i][j] < kInf) comp[j] = comps;
        ++comps;
    }
    out.component_count = comps;
    std::vector<std::int64_t> size(static_cast<std::size_t>(comps), 0);
    for (std::size_t i = 0; i < n; ++i) ++size[static_cast<std::size_t>(comp[i])];
    const int best = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
    for (std::size_t i = 0; i < n; ++i)
        if (comp[i] == best) out.component.push_back(static_cast<NodeId>(i));

    std::int64_t total = 0;
    std::int64_t pairs = 0;
    std::int64_t diameter = 0;
    std::int64_t radius = kInf;
    for (const NodeId a : out.component) {
        std::int64_t ecc = 0;
        for (const NodeId b : out.component) {
            if (a == b) continue;
            const int dist = out.d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            total += dist;
            ++pairs;
            ecc = std::max<std::int64_t>(ecc, dist);
        }
        diameter = std::max(diameter, ecc);
        radius = std::min(radius, ecc);
        for (const NodeId b : out.component)
            if (b > a && out.d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 1) ++out.component_edges;
    }
    out.diameter = diameter;
    out.radius = out.component.size() > 1 ? radius : 0;
    out.average = pairs > 0 ? static_cast<double>(total) / static_cast<double>(pairs) : 0.0;
    return out;
}

}  // namespace

TEST_CASE("path a-b-c: diameter 2, radius 1, average 4/3") {
    const auto g = t::from_tsv("a b 1\nb c -1\n");
    const auto r = distance_stats(g);
    CHECK(r.total_nodes == 3);
    CHECK(r.component_nodes == 3);
    CHECK(r.component_edges == 2);
    CHECK(r.component_count == 1);
    CHECK(r.diameter == 2);
    CHECK(r.radius == 1);
    CHECK(r.average_distance == doctest::Approx(4.0 / 3.0));
    CHECK(!r.sampled);
    CHECK(r.sources_used == 3);
    CHECK(r.mean_degree == doctest::Approx(4.0 / 3.0));
    CHECK(r.c_rand == doctest::Approx((4.0 / 3.0) / 3.0));
    CHECK(r.l_rand == doctest::Approx(std::log(3.0) / std::log(4.0 / 3.0)));
}

TEST_CASE("exact stats match a Floyd-Warshall oracle on random graphs") {
    for (const std::uint64_t seed : {5ull, 6ull, 7ull}) {
        const auto g = t::erdos(30, 0.08, 0.6, seed);
        const auto ref = floyd_warshall(g);
        const auto r = distance_stats(g);
        CHECK(r.component_nodes == static_cast<NodeId>(ref.component.size()));
        CHECK(r.component_edges == ref.component_edges);
        CHECK(r.component_count == ref.component_count);
        CHECK(r.diameter == ref.diameter);
        CHECK(r.radius == ref.radius);
        CHECK(r.average_distance == doctest::Approx(ref.average).epsilon(1e-12));
    }
}

TEST_CASE("metric sanity: radius <= diameter <= 2 radius, 1 <= avg <= diameter") {
    for (const std::uint64_t seed : {8ull, 9ull, 10ull, 11ull}) {
        const auto g = t::erdos(40, 0.1, 0.5, seed);
        const auto r = distance_stats(g);
        if (r.component_nodes < 2) continue;
        CHECK(r.radius <= r.diameter);
        CHECK(r.diameter <= 2 * r.radius);
        CHECK(r.average_distance >= 1.0);
        CHECK(r.average_distance <= static_cast<double>(r.diameter));
    }
}

TEST_CASE("edges to other components are excluded from the component counts") {
    // Two components: a 3-path and a separate mutual pair.
    const auto g = t::from_tsv("a b 1\nb c 1\nx y -1\ny x 1\n");
    const auto r = distance_stats(g);
    CHECK(r.total_nodes == 5);
    CHECK(r.component_count == 2);
    CHECK(r.component_nodes == 3);
    CHECK(r.component_edges == 2);  // reciprocal pair counts once, and sits outside anyway
    CHECK(r.diameter == 2);
}

TEST_CASE("sampling reports bounds and stays consistent with the exact run") {
    const auto g = t::erdos(60, 0.08, 0.6, 12);
    const auto exact = distance_stats(g);
    DistanceOptions opt;
    opt.sample_sources = 5;
    opt.seed = 3;
    const auto s = distance_stats(g, opt);
    CHECK(s.sampled);
    CHECK(s.sources_used == 5);
    CHECK(s.diameter_is_lower_bound);
    CHECK(s.radius_is_upper_bound);
    CHECK(s.diameter <= exact.diameter);
    CHECK(s.radius >= exact.radius);
    CHECK(s.average_distance <= static_cast<double>(exact.diameter));
    CHECK(s.component_nodes == exact.component_nodes);

    // Asking for at least as many sources as the component has collapses back
    // to the exact sweep.
    DistanceOptions all;
    all.sample_sources = static_cast<int>(exact.component_nodes);
    const auto full = distance_stats(g, all);
    CHECK(!full.sampled);
    CHECK(!full.diameter_is_lower_bound);
    CHECK(full.diameter == exact.diameter);
    CHECK(full.radius == exact.radius);
    CHECK(full.average_distance == doctest::Approx(exact.average_distance));
}

TEST_CASE("sampled runs are reproducible per seed and thread count does not matter") {
    const auto g = t::erdos(50, 0.1, 0.5, 13);
    DistanceOptions a;
    a.sample_sources = 7;
    a.seed = 11;
    a.threads = 1;
    DistanceOptions b = a;
    b.threads = 4;
    const auto ra = distance_stats(g, a);
    const auto rb = distance_stats(g, b);
    CHECK(ra.diameter == rb.diameter);
    CHECK(ra.radius == rb.radius);
    CHECK(ra.average_distance == doctest::Approx(rb.average_distance).epsilon(1e-15));

    DistanceOptions c = a;
    c.seed = 12;
    const auto rc = distance_stats(g, c);
    // A different seed may pick different sources; the exact component data
    // stays fixed regardless.
    CHECK(rc.component_nodes == ra.component_nodes);
    CHECK(rc.component_edges == ra.component_edges);
}

TEST_CASE("a single isolated pair is its own component") {
    const auto g = t::from_tsv("a b 1\n");
    const auto r = distance_stats(g);
    CHECK(r.component_nodes == 2);
    CHECK(r.diameter == 1);
    CHECK(r.radius == 1);
    CHECK(r.average_distance == doctest::Approx(1.0));
}
