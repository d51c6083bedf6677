#include "signet/generate.hpp"

#include <cmath>
#include <vector>

#include "signet/errors.hpp"
#include "signet/util.hpp"

namespace signet {

namespace {

void check_prob(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) throw DataError(std::string(name) + " must lie in [0,1]");
}

std::vector<std::string> decimal_labels(NodeId n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (NodeId i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

// Skip-sampling over the linear index space of the n(n−1) ordered pairs:
// geometric gaps between successes make the cost proportional to the number of
// edges rather than n².
SignedDigraph gen_erdos(const SyntheticSpec& spec) {
    check_prob(spec.p, "p");
    check_prob(spec.sign_bias, "sign_bias");
    const auto n = static_cast<std::uint64_t>(spec.n);
    const std::uint64_t total = n * (n - 1);
    Rng rng(spec.seed);
    std::vector<Edge> edges;
    if (spec.p >= 1.0) {
        for (std::uint64_t t = 0; t < total; ++t) {
            const auto u = static_cast<NodeId>(t / (n - 1));
            const auto r = static_cast<NodeId>(t % (n - 1));
            const NodeId v = r < u ? r : r + 1;
            edges.push_back({u, v, rng.uniform() < spec.sign_bias ? std::int8_t{1} : std::int8_t{-1}});
        }
    } else if (spec.p > 0.0) {
        const double log1mp = std::log1p(-spec.p);
        double t = -1.0;
        while (true) {
            const double u01 = rng.uniform();
            t += 1.0 + std::floor(std::log1p(-u01) / log1mp);
            if (t >= static_cast<double>(total)) break;
            const auto idx = static_cast<std::uint64_t>(t);
            const auto u = static_cast<NodeId>(idx / (n - 1));
            const auto r = static_cast<NodeId>(idx % (n - 1));
            const NodeId v = r < u ? r : r + 1;
            edges.push_back({u, v, rng.uniform() < spec.sign_bias ? std::int8_t{1} : std::int8_t{-1}});
        }
    }
    return SignedDigraph::from_edges(decimal_labels(spec.n), edges);
}

SignedDigraph gen_planted_balance(const SyntheticSpec& spec) {
    check_prob(spec.p_in, "p_in");
    check_prob(spec.p_out, "p_out");
    check_prob(spec.noise, "noise");
    if (spec.groups < 1) throw DataError("groups must be >= 1");
    const NodeId n = spec.n;
    auto group_of = [&](NodeId i) {
        return static_cast<int>((static_cast<std::int64_t>(i) * spec.groups) / n);
    };
    Rng rng(spec.seed);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = 0; v < n; ++v) {
            if (u == v) continue;
            const bool same = group_of(u) == group_of(v);
            const double p = same ? spec.p_in : spec.p_out;
            if (rng.uniform() >= p) continue;
            std::int8_t sign = same ? 1 : -1;
            if (spec.noise > 0.0 && rng.uniform() < spec.noise) sign = static_cast<std::int8_t>(-sign);
            edges.push_back({u, v, sign});
        }
    }
    return SignedDigraph::from_edges(decimal_labels(n), edges);
}

SignedDigraph gen_planted_trolls(const SyntheticSpec& spec) {
    check_prob(spec.p_attack, "p_attack");
    check_prob(spec.p_background, "p_background");
    check_prob(spec.p_background_neg, "p_background_neg");
    const NodeId n = spec.n;
    if (spec.n_trolls < 0 || spec.n_trolls > n) throw DataError("n_trolls must lie in [0, n]");
    const NodeId first_troll = n - spec.n_trolls;
    Rng rng(spec.seed);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = 0; v < n; ++v) {
            if (u == v) continue;
            const bool u_troll = u >= first_troll;
            const bool v_troll = v >= first_troll;
            if (u_troll && v_troll) continue;
            if (!u_troll && v_troll && rng.uniform() < spec.p_attack) {
                edges.push_back({u, v, -1});
                continue;
            }
            if (rng.uniform() < spec.p_background) {
                std::int8_t sign = 1;
                if (spec.p_background_neg > 0.0 && rng.uniform() < spec.p_background_neg) sign = -1;
                edges.push_back({u, v, sign});
            }
        }
    }
    return SignedDigraph::from_edges(decimal_labels(n), edges);
}

}  // namespace

SignedDigraph generate(const SyntheticSpec& spec) {
    if (spec.n < 1) throw DataError("n must be >= 1");
    if (spec.model == "erdos_signed") return gen_erdos(spec);
    if (spec.model == "planted_balance") return gen_planted_balance(spec);
    if (spec.model == "planted_trolls") return gen_planted_trolls(spec);
    throw UsageError("unknown synthetic model '" + spec.model +
                     "' (expected erdos_signed|planted_balance|planted_trolls)");
}

}  // namespace signet
