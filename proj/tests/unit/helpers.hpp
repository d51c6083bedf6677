#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "signet/generate.hpp"
#include "signet/graph.hpp"
#include "signet/matrix_view.hpp"
#include "signet/oracle.hpp"

namespace t {

inline signet::SignedDigraph from_tsv(const std::string& text, const signet::LoadOptions& opt = {}) {
    std::istringstream in(text);
    return signet::load_edge_list(in, opt);
}

inline signet::SignedDigraph erdos(signet::NodeId n, double p, double sign_bias, std::uint64_t seed) {
    signet::SyntheticSpec spec;
    spec.model = "erdos_signed";
    spec.n = n;
    spec.p = p;
    spec.sign_bias = sign_bias;
    spec.seed = seed;
    return signet::generate(spec);
}

// Mutual (both directions) edges with one sign per unordered pair.
inline signet::SignedDigraph mutual_graph(signet::NodeId n,
                                          const std::vector<std::tuple<int, int, int>>& pairs) {
    std::vector<std::string> labels;
    for (signet::NodeId i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<signet::Edge> edges;
    for (const auto& [u, v, s] : pairs) {
        edges.push_back({static_cast<signet::NodeId>(u), static_cast<signet::NodeId>(v),
                         static_cast<std::int8_t>(s)});
        edges.push_back({static_cast<signet::NodeId>(v), static_cast<signet::NodeId>(u),
                         static_cast<std::int8_t>(s)});
    }
    return signet::SignedDigraph::from_edges(std::move(labels), edges);
}

inline signet::SignedDigraph directed_graph(signet::NodeId n,
                                            const std::vector<std::tuple<int, int, int>>& triples) {
    std::vector<std::string> labels;
    for (signet::NodeId i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<signet::Edge> edges;
    for (const auto& [u, v, s] : triples)
        edges.push_back({static_cast<signet::NodeId>(u), static_cast<signet::NodeId>(v),
                         static_cast<std::int8_t>(s)});
    return signet::SignedDigraph::from_edges(std::move(labels), edges);
}

inline double max_abs_diff(const signet::oracle::DenseMatrix& a, const signet::oracle::DenseMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
    return worst;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace t
