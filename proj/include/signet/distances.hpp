#pragma once

#include <cstdint>
#include <optional>

#include "signet/graph.hpp"

namespace signet {

struct DistanceOptions {
    // Exact mode runs a BFS from every node of the largest component; sampled
    // mode draws this many distinct sources instead and reports bounds.
    std::optional<int> sample_sources;
    std::uint64_t seed = 0;
    int threads = 0;
};

// All distances are measured on the symmetrized, unsigned, simple graph
// restricted to its largest connected component.
struct DistanceReport {
    NodeId total_nodes = 0;
    NodeId component_nodes = 0;
    std::int64_t component_edges = 0;  // undirected simple edges within the component
    std::int64_t component_count = 0;

    std::int64_t diameter = 0;
    std::int64_t radius = 0;
    double average_distance = 0.0;  // mean over ordered pairs u≠v

    bool sampled = false;
    int sources_used = 0;
    bool diameter_is_lower_bound = false;
    bool radius_is_upper_bound = false;

    double mean_degree = 0.0;  // k̄ = 2·(component edges)/component nodes
    double l_rand = 0.0;       // ln n / ln k̄
    double c_rand = 0.0;       // k̄ / n
};

DistanceReport distance_stats(const SignedDigraph& g, const DistanceOptions& options = {});

}  // namespace signet
