#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

enum class Measure { FreaksNegated, Fmf, PageRank, SignedSpectral, SignedSymmetric, NegativeRank };

Measure measure_from_string(const std::string& s);
std::string to_string(Measure m);

struct RankVector {
    Measure measure = Measure::Fmf;
    std::vector<double> scores;          // one per node index
    std::string normalization = "raw";   // raw | unit_euclidean
    double alpha = 0.0;
    double beta = 0.0;
};

struct RankOptions {
    double alpha = 0.15;
    double beta = 1.0;
    double tol = 1e-12;
    int max_iter = 100000;
    // SSR stochasticizes B with Ē and the usual teleportation by default; the
    // plain dominant eigenvector of B is available as an alternative.
    bool ssr_plain_b = false;
};

RankVector fans_minus_freaks(const SignedDigraph& g);
RankVector freaks_negated(const SignedDigraph& g);
RankVector pagerank(const SignedDigraph& g, const RankOptions& options = {});
RankVector signed_spectral_rank(const SignedDigraph& g, const RankOptions& options = {});
RankVector signed_symmetric_rank(const SignedDigraph& g, const RankOptions& options = {});
RankVector negative_rank(const SignedDigraph& g, const RankOptions& options = {});
RankVector compute_measure(const SignedDigraph& g, Measure measure, const RankOptions& options = {});

struct TrollBenchmark {
    std::string marker_label;
    NodeId marker = -1;
    std::int64_t min_incident = 20;
    std::vector<NodeId> trolls;     // ascending node indices
    EdgeIdx excluded_edges = 0;
};

// Troll ground truth: targets of the marker's negative out-edges that still
// have at least `min_incident` incident edges once every edge touching the
// marker is removed. Returns the benchmark together with that reduced graph.
std::pair<TrollBenchmark, SignedDigraph> build_troll_benchmark(
    const SignedDigraph& g, const std::string& marker_label, std::int64_t min_incident = 20,
    const std::function<void(const std::string&)>& warn = {});

// Candidates ranked ascending by score (most unpopular first), ties broken by
// ascending node index.
std::vector<NodeId> rank_ascending(const std::vector<double>& scores, const std::vector<NodeId>& candidates);

// AP = mean over relevant items of the precision at each one's rank.
double mean_average_precision(const std::vector<NodeId>& ranked_list, const std::unordered_set<NodeId>& relevant);

// Exact expectation of AP under a uniformly random ranking of `total` items
// containing `relevant` relevant ones.
double expected_random_ap(std::int64_t total, std::int64_t relevant);

struct TrollEvalEntry {
    Measure measure;
    double map = 0.0;
};

struct TrollEvalReport {
    TrollBenchmark benchmark;
    std::int64_t candidates = 0;
    std::vector<TrollEvalEntry> entries;
    double random_map = 0.0;
    std::vector<std::pair<double, double>> beta_curve;  // (β, MAP of negative_rank)
};

TrollEvalReport evaluate_troll_prediction(const SignedDigraph& g, const std::string& marker_label,
                                          const std::vector<Measure>& measures, const RankOptions& options = {},
                                          std::int64_t min_incident = 20,
                                          const std::vector<double>& beta_sweep = {});

}  // namespace signet
