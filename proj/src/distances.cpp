#include "signet/distances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "signet/errors.hpp"
#include "signet/util.hpp"

namespace signet {

namespace {

struct UnionGraph {
    std::vector<std::size_t> offsets;
    std::vector<NodeId> neighbors;

    std::span<const NodeId> row(NodeId u) const {
        return {neighbors.data() + offsets[static_cast<std::size_t>(u)],
                offsets[static_cast<std::size_t>(u) + 1] - offsets[static_cast<std::size_t>(u)]};
    }
};

// Symmetrized simple graph: v is adjacent to u when any edge joins them in
// either direction, regardless of sign.
UnionGraph symmetrize(const SignedDigraph& g) {
    const NodeId n = g.n();
    UnionGraph u;
    u.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int pass = 0; pass < 2; ++pass) {
        for (NodeId w = 0; w < n; ++w) {
            const auto on = g.out_neighbors(w);
            const auto in = g.in_neighbors(w);
            std::size_t i = 0, j = 0, count = 0;
            while (i < on.size() || j < in.size()) {
                NodeId v;
                if (j >= in.size() || (i < on.size() && on[i] < in[j])) {
                    v = on[i];
                    ++i;
                } else if (i >= on.size() || in[j] < on[i]) {
                    v = in[j];
                    ++j;
                } else {
                    v = on[i];
                    ++i;
                    ++j;
                }
                if (pass == 0) {
                    ++count;
                } else {
                    u.neighbors[u.offsets[static_cast<std::size_t>(w)] + count++] = v;
                }
            }
            if (pass == 0) u.offsets[static_cast<std::size_t>(w) + 1] = count;
        }
        if (pass == 0) {
            for (std::size_t w = 0; w < static_cast<std::size_t>(n); ++w) u.offsets[w + 1] += u.offsets[w];
            u.neighbors.resize(u.offsets.back());
        }
    }
    return u;
}

}  // namespace

DistanceReport distance_stats(const SignedDigraph& g, const DistanceOptions& options) {
    const NodeId n = g.n();
    const UnionGraph adj = symmetrize(g);

    // Largest connected component (ties resolved toward the lowest root index,
    // which BFS order produces naturally).
    std::vector<NodeId> component(static_cast<std::size_t>(n), -1);
    std::vector<NodeId> queue;
    NodeId component_count = 0;
    NodeId best_component = -1;
    std::int64_t best_size = 0;
    for (NodeId root = 0; root < n; ++root) {
        if (component[static_cast<std::size_t>(root)] >= 0) continue;
        const NodeId id = component_count++;
        std::int64_t size = 0;
        queue.assign(1, root);
        component[static_cast<std::size_t>(root)] = id;
        while (!queue.empty()) {
            const NodeId u = queue.back();
            queue.pop_back();
            ++size;
            for (const NodeId v : adj.row(u)) {
                if (component[static_cast<std::size_t>(v)] < 0) {
                    component[static_cast<std::size_t>(v)] = id;
                    queue.push_back(v);
                }
            }
        }
        if (size > best_size) {
            best_size = size;
            best_component = id;
        }
    }

    std::vector<NodeId> members;
    members.reserve(static_cast<std::size_t>(best_size));
    for (NodeId u = 0; u < n; ++u)
        if (component[static_cast<std::size_t>(u)] == best_component) members.push_back(u);

    DistanceReport r;
    r.total_nodes = n;
    r.component_count = component_count;
    r.component_nodes = static_cast<NodeId>(members.size());
    for (const NodeId u : members) r.component_edges += static_cast<std::int64_t>(adj.row(u).size());
    r.component_edges /= 2;

    const auto nc = static_cast<double>(r.component_nodes);
    r.mean_degree = nc > 0 ? 2.0 * static_cast<double>(r.component_edges) / nc : 0.0;
    r.l_rand = (r.mean_degree > 1.0 && nc > 1.0) ? std::log(nc) / std::log(r.mean_degree) : 0.0;
    r.c_rand = nc > 0 ? r.mean_degree / nc : 0.0;

    // Source set: everything (exact) or a seeded sample without replacement.
    std::vector<NodeId> sources = members;
    if (options.sample_sources) {
        const int want = *options.sample_sources;
        if (want < 1) throw UsageError("sample source count must be >= 1");
        if (static_cast<std::size_t>(want) < sources.size()) {
            Rng rng(options.seed);
            for (int i = 0; i < want; ++i) {
                const auto j = static_cast<std::size_t>(i) +
                               static_cast<std::size_t>(rng.uniform_int(sources.size() - static_cast<std::size_t>(i)));
                std::swap(sources[static_cast<std::size_t>(i)], sources[j]);
            }
            sources.resize(static_cast<std::size_t>(want));
            r.sampled = true;
            r.diameter_is_lower_bound = true;
            r.radius_is_upper_bound = true;
        }
    }
    r.sources_used = static_cast<int>(sources.size());

    if (members.size() < 2) {
        return r;  // no pairs: distances are all trivially zero
    }

    const int threads = resolve_threads(options.threads);
    struct Partial {
        std::int64_t ecc_max = 0;
        std::int64_t ecc_min = std::numeric_limits<std::int64_t>::max();
        std::int64_t dist_sum = 0;
    };
    std::vector<Partial> partials(static_cast<std::size_t>(threads));

    parallel_chunks(sources.size(), threads, [&](std::size_t lo, std::size_t hi, int t) {
        Partial p;
        std::vector<std::int32_t> dist(static_cast<std::size_t>(n));
        std::vector<NodeId> frontier, next;
        for (std::size_t s = lo; s < hi; ++s) {
            const NodeId src = sources[s];
            std::fill(dist.begin(), dist.end(), -1);
            dist[static_cast<std::size_t>(src)] = 0;
            frontier.assign(1, src);
            std::int32_t level = 0;
            std::int64_t reached = 1;
            while (!frontier.empty()) {
                ++level;
                next.clear();
                for (const NodeId u : frontier) {
                    for (const NodeId v : adj.row(u)) {
                        if (dist[static_cast<std::size_t>(v)] < 0) {
                            dist[static_cast<std::size_t>(v)] = level;
                            p.dist_sum += level;
                            ++reached;
                            next.push_back(v);
                        }
                    }
                }
                frontier.swap(next);
            }
            const std::int64_t ecc = level - 1;
            p.ecc_max = std::max(p.ecc_max, ecc);
            p.ecc_min = std::min(p.ecc_min, ecc);
            (void)reached;
        }
        partials[static_cast<std::size_t>(t)] = p;
    });

    std::int64_t dist_total = 0;
    std::int64_t ecc_max = 0;
    std::int64_t ecc_min = std::numeric_limits<std::int64_t>::max();
    for (const Partial& p : partials) {
        dist_total += p.dist_sum;
        ecc_max = std::max(ecc_max, p.ecc_max);
        ecc_min = std::min(ecc_min, p.ecc_min);
    }
    r.diameter = ecc_max;
    r.radius = ecc_min;
    r.average_distance =
        static_cast<double>(dist_total) /
        (static_cast<double>(sources.size()) * (static_cast<double>(members.size()) - 1.0));
    return r;
}

}  // namespace signet
