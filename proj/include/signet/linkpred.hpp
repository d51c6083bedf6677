#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "signet/graph.hpp"
#include "signet/spectral.hpp"

namespace signet {

struct EdgeSplit {
    SignedDigraph train;      // same node set and labels as the input graph
    std::vector<Edge> test;   // held-out edges with their true signs
    double fraction = 0.3;
    std::uint64_t seed = 0;
};

// Uniform hold-out of round(fraction·m) directed edges, without replacement.
EdgeSplit split_edges(const SignedDigraph& g, double fraction = 0.3, std::uint64_t seed = 0);

enum class PredictMethod { AlwaysPositive, Transpose, Square, Svd, Sym, Exp, SymExp, Laplacian };

PredictMethod predict_method_from_string(const std::string& s);
std::string to_string(PredictMethod method);
bool is_spectral(PredictMethod method);

// A sign predictor over ordered node pairs of the train graph. Baselines read
// the graph directly; spectral methods own a transformed kernel.
class Predictor {
public:
    Predictor(const SignedDigraph& train, PredictMethod method, std::optional<TransformedKernel> kernel, int k);

    double score(NodeId u, NodeId v) const;
    int predict_sign(NodeId u, NodeId v) const {  // score 0 ties break to +1
        return score(u, v) < 0.0 ? -1 : 1;
    }
    PredictMethod method() const { return method_; }
    int k() const { return k_; }

private:
    const SignedDigraph* train_;
    PredictMethod method_;
    std::optional<TransformedKernel> kernel_;
    int k_ = 0;
};

Predictor make_predictor(const SignedDigraph& train, PredictMethod method, int k = 0, double tol = 1e-8,
                         std::uint64_t seed = 0, int max_iter = 10000);

// The (matrix view, solver, spectrum end, transform) recipe behind each
// spectral method, exposed so callers can cache or reuse the decomposition.
// Throws UsageError for the non-spectral baselines.
struct KernelPlan {
    ViewKind view = ViewKind::A;
    SpectralKind kind = SpectralKind::Svd;
    Which which = Which::LargestMagnitude;
    Transform transform = Transform::Identity;
};

KernelPlan kernel_plan(PredictMethod method);

// The decomposition step behind `make_predictor`; combine with
// `spectral_transform(dec, plan.transform)` to obtain the kernel.
SpectralDecomposition compute_plan(const SignedDigraph& train, const KernelPlan& plan, int k, double tol,
                                   std::uint64_t seed, int max_iter = 10000);

struct AccuracyReport {
    std::string method;
    int k = 0;
    double accuracy = 0.0;  // (correct − wrong) / total ∈ [−1, +1]
    std::int64_t correct = 0;
    std::int64_t wrong = 0;
    std::int64_t ties = 0;  // zero scores, predicted +1 and counted above
    std::int64_t test_size = 0;
};

AccuracyReport evaluate_accuracy(const Predictor& predictor, const std::vector<Edge>& test, int threads = 0);

// One report per (method, k); each spectral method factorizes once at max(k)
// and truncates, so the sweep is self-consistent.
std::vector<AccuracyReport> sweep_k(const SignedDigraph& train, const std::vector<Edge>& test,
                                    const std::vector<PredictMethod>& methods, const std::vector<int>& k_values,
                                    double tol = 1e-8, std::uint64_t seed = 0, int threads = 0);

}  // namespace signet
