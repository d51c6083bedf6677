#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "signet/graph.hpp"

namespace signet {

struct ClusteringOptions {
    // The literal denominator ‖Ā²‖₊ includes diagonal closed-walk terms, which
    // makes a positive triangle score 0.5. Default follows the standard
    // transitivity semantics and drops them (so a triangle scores 1).
    bool include_diagonal = false;
    int threads = 0;  // 0 → all cores
};

// All numerators/denominators are exact edge-sign sums, so they are reported
// as integers alongside the ratios. Coefficients are null (not 0) when the
// graph has no wedges of the respective kind.
struct ClusteringReport {
    std::int64_t num_undirected = 0, num_undirected_signed = 0, den_undirected = 0;
    std::int64_t num_directed = 0, num_directed_signed = 0, den_directed = 0;
    std::optional<double> c, c_s, s;
    std::optional<double> c_dir, c_s_dir, s_dir;
    double c_rand = 0.0;       // k̄/n of the symmetrized simple graph
    double mean_degree = 0.0;  // k̄
    bool include_diagonal = false;
};

ClusteringReport clustering_coefficients(const SignedDigraph& g, const ClusteringOptions& options = {});

// Cross-checks the sparse enumeration against the dense algebraic formulas
// (n ≤ 64). Returns true on exact agreement; otherwise false with a
// human-readable diff.
bool clustering_oracle_check(const SignedDigraph& g, std::string* diff = nullptr);

}  // namespace signet
