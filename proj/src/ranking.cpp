#include "signet/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "signet/errors.hpp"
#include "signet/matrix_view.hpp"
#include "signet/spectral.hpp"

namespace signet {

Measure measure_from_string(const std::string& s) {
    if (s == "freaks_negated") return Measure::FreaksNegated;
    if (s == "fmf" || s == "fans_minus_freaks") return Measure::Fmf;
    if (s == "pagerank" || s == "pr") return Measure::PageRank;
    if (s == "signed_spectral" || s == "sr") return Measure::SignedSpectral;
    if (s == "signed_symmetric" || s == "ssr") return Measure::SignedSymmetric;
    if (s == "negative_rank" || s == "nr") return Measure::NegativeRank;
    throw UsageError("unknown measure '" + s +
                     "' (expected freaks_negated|fmf|pagerank|signed_spectral|signed_symmetric|negative_rank)");
}

std::string to_string(Measure m) {
    switch (m) {
        case Measure::FreaksNegated: return "freaks_negated";
        case Measure::Fmf: return "fmf";
        case Measure::PageRank: return "pagerank";
        case Measure::SignedSpectral: return "signed_spectral";
        case Measure::SignedSymmetric: return "signed_symmetric";
        case Measure::NegativeRank: return "negative_rank";
    }
    return "?";
}

RankVector fans_minus_freaks(const SignedDigraph& g) {
    RankVector r;
    r.measure = Measure::Fmf;
    r.scores.resize(static_cast<std::size_t>(g.n()));
    for (NodeId v = 0; v < g.n(); ++v)
        r.scores[static_cast<std::size_t>(v)] = static_cast<double>(g.fan_count(v) - g.freak_count(v));
    return r;
}

RankVector freaks_negated(const SignedDigraph& g) {
    RankVector r;
    r.measure = Measure::FreaksNegated;
    r.scores.resize(static_cast<std::size_t>(g.n()));
    for (NodeId v = 0; v < g.n(); ++v)
        r.scores[static_cast<std::size_t>(v)] = 0.0 - static_cast<double>(g.freak_count(v));
    return r;
}

namespace {

RankVector spectral_measure(const SignedDigraph& g, Measure measure, ViewKind kind, const RankOptions& options) {
    const MatrixView view(g, kind);
    RankVector r;
    r.measure = measure;
    r.alpha = options.alpha;
    r.normalization = "unit_euclidean";
    r.scores = dominant_left_eigenvector(view, options.alpha, options.tol, options.max_iter);
    return r;
}

// Plain dominant left eigenvector of B (no stochasticization, no
// teleportation): power iteration with the same normalization conventions.
RankVector plain_b_rank(const SignedDigraph& g, const RankOptions& options) {
    const MatrixView view(g, ViewKind::B);
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<double> x(n, 1.0 / static_cast<double>(n)), y(n, 0.0);
    double delta = 0.0;
    for (int it = 0; it < options.max_iter; ++it) {
        view.apply_transpose(x, y);
        double l1 = 0.0;
        for (const double v : y) l1 += std::abs(v);
        if (l1 == 0.0) throw ConvergenceError("plain symmetric rank: iterate vanished", 0.0);
        for (double& v : y) v /= l1;
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += x[i] * y[i];
        if (dot < 0.0)
            for (double& v : y) v = -v;
        delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) delta += std::abs(y[i] - x[i]);
        x = y;
        if (delta < options.tol) {
            double sum = 0.0, l2 = 0.0;
            for (const double v : x) {
                sum += v;
                l2 += v * v;
            }
            l2 = std::sqrt(l2);
            const double flip = sum < 0.0 ? -1.0 : 1.0;
            for (double& v : x) v = flip * v / l2;
            RankVector r;
            r.measure = Measure::SignedSymmetric;
            r.alpha = options.alpha;
            r.normalization = "unit_euclidean";
            r.scores = std::move(x);
            return r;
        }
    }
    throw ConvergenceError("plain symmetric rank did not converge", delta);
}

}  // namespace

RankVector pagerank(const SignedDigraph& g, const RankOptions& options) {
    return spectral_measure(g, Measure::PageRank, ViewKind::RowStochasticUnsigned, options);
}

RankVector signed_spectral_rank(const SignedDigraph& g, const RankOptions& options) {
    return spectral_measure(g, Measure::SignedSpectral, ViewKind::RowStochasticSigned, options);
}

RankVector signed_symmetric_rank(const SignedDigraph& g, const RankOptions& options) {
    if (options.ssr_plain_b) return plain_b_rank(g, options);
    return spectral_measure(g, Measure::SignedSymmetric, ViewKind::RowStochasticSymmetric, options);
}

RankVector negative_rank(const SignedDigraph& g, const RankOptions& options) {
    if (options.beta < 0.0) throw UsageError("beta must be >= 0");
    const RankVector sr = signed_spectral_rank(g, options);
    const RankVector pr = pagerank(g, options);
    RankVector r;
    r.measure = Measure::NegativeRank;
    r.alpha = options.alpha;
    r.beta = options.beta;
    r.normalization = "raw";  // differences of unit vectors are meaningful as-is
    r.scores.resize(sr.scores.size());
    for (std::size_t i = 0; i < r.scores.size(); ++i)
        r.scores[i] = sr.scores[i] - options.beta * pr.scores[i];
    return r;
}

RankVector compute_measure(const SignedDigraph& g, Measure measure, const RankOptions& options) {
    switch (measure) {
        case Measure::FreaksNegated: return freaks_negated(g);
        case Measure::Fmf: return fans_minus_freaks(g);
        case Measure::PageRank: return pagerank(g, options);
        case Measure::SignedSpectral: return signed_spectral_rank(g, options);
        case Measure::SignedSymmetric: return signed_symmetric_rank(g, options);
        case Measure::NegativeRank: return negative_rank(g, options);
    }
    throw UsageError("unknown measure");
}

std::pair<TrollBenchmark, SignedDigraph> build_troll_benchmark(const SignedDigraph& g,
                                                               const std::string& marker_label,
                                                               std::int64_t min_incident,
                                                               const std::function<void(const std::string&)>& warn) {
    const auto marker = g.index_of(marker_label);
    if (!marker) throw DataError("marker node '" + marker_label + "' not found");

    SignedDigraph excluded = g.remove_incident(*marker);

    TrollBenchmark bench;
    bench.marker_label = marker_label;
    bench.marker = *marker;
    bench.min_incident = min_incident;
    bench.excluded_edges = g.m() - excluded.m();

    const auto nbrs = g.out_neighbors(*marker);
    const auto sgns = g.out_signs(*marker);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (sgns[i] >= 0) continue;
        const NodeId foe = nbrs[i];
        const std::int64_t incident = excluded.in_degree(foe) + excluded.out_degree(foe);
        if (incident >= min_incident) bench.trolls.push_back(foe);
    }
    std::sort(bench.trolls.begin(), bench.trolls.end());
    if (bench.trolls.empty() && warn) warn("marker '" + marker_label + "' yields an empty troll set");
    return {std::move(bench), std::move(excluded)};
}

std::vector<NodeId> rank_ascending(const std::vector<double>& scores, const std::vector<NodeId>& candidates) {
    std::vector<NodeId> ranked = candidates;
    std::sort(ranked.begin(), ranked.end(), [&](NodeId a, NodeId b) {
        const double sa = scores[static_cast<std::size_t>(a)];
        const double sb = scores[static_cast<std::size_t>(b)];
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return ranked;
}

double mean_average_precision(const std::vector<NodeId>& ranked_list, const std::unordered_set<NodeId>& relevant) {
    if (relevant.empty()) throw DataError("relevant set is empty");
    std::int64_t hits = 0;
    double ap = 0.0;
    for (std::size_t pos = 0; pos < ranked_list.size(); ++pos) {
        if (relevant.count(ranked_list[pos]) == 0) continue;
        ++hits;
        ap += static_cast<double>(hits) / static_cast<double>(pos + 1);
    }
    if (hits == 0) throw DataError("no relevant item appears in the ranked list");
    return ap / static_cast<double>(hits);
}

double expected_random_ap(std::int64_t total, std::int64_t relevant) {
    if (relevant < 1 || total < relevant) throw UsageError("expected_random_ap: need 1 <= relevant <= total");
    // E[AP] = (1/R) Σ_j Σ_p (j/p)·P(j-th relevant item lands at rank p), with
    // the hypergeometric placement probability C(p−1,j−1)C(N−p,R−j)/C(N,R).
    const auto lchoose = [](std::int64_t a, std::int64_t b) {
        return std::lgamma(static_cast<double>(a) + 1.0) - std::lgamma(static_cast<double>(b) + 1.0) -
               std::lgamma(static_cast<double>(a - b) + 1.0);
    };
    const double log_total = lchoose(total, relevant);
    double sum = 0.0;
    for (std::int64_t j = 1; j <= relevant; ++j) {
        for (std::int64_t p = j; p <= total - relevant + j; ++p) {
            const double logp = lchoose(p - 1, j - 1) + lchoose(total - p, relevant - j) - log_total;
            sum += static_cast<double>(j) / static_cast<double>(p) * std::exp(logp);
        }
    }
    return sum / static_cast<double>(relevant);
}

TrollEvalReport evaluate_troll_prediction(const SignedDigraph& g, const std::string& marker_label,
                                          const std::vector<Measure>& measures, const RankOptions& options,
                                          std::int64_t min_incident, const std::vector<double>& beta_sweep) {
    auto [bench, excluded] = build_troll_benchmark(g, marker_label, min_incident);
    if (bench.trolls.empty()) throw DataError("troll benchmark is empty — nothing to evaluate");

    std::vector<NodeId> candidates;
    candidates.reserve(static_cast<std::size_t>(g.n()) - 1);
    for (NodeId v = 0; v < g.n(); ++v)
        if (v != bench.marker) candidates.push_back(v);
    const std::unordered_set<NodeId> relevant(bench.trolls.begin(), bench.trolls.end());

    TrollEvalReport report;
    report.candidates = static_cast<std::int64_t>(candidates.size());
    report.random_map = expected_random_ap(static_cast<std::int64_t>(candidates.size()),
                                           static_cast<std::int64_t>(bench.trolls.size()));

    for (const Measure m : measures) {
        const RankVector rv = compute_measure(excluded, m, options);
        const double map = mean_average_precision(rank_ascending(rv.scores, candidates), relevant);
        report.entries.push_back({m, map});
    }

    if (!beta_sweep.empty()) {
        // SR and PR are β-independent; sweep reuses them.
        const RankVector sr = signed_spectral_rank(excluded, options);
        const RankVector pr = pagerank(excluded, options);
        std::vector<double> nr(sr.scores.size());
        for (const double beta : beta_sweep) {
            for (std::size_t i = 0; i < nr.size(); ++i) nr[i] = sr.scores[i] - beta * pr.scores[i];
            const double map = mean_average_precision(rank_ascending(nr, candidates), relevant);
            report.beta_curve.emplace_back(beta, map);
        }
    }
    report.benchmark = std::move(bench);
    return report;
}

}  // namespace signet
