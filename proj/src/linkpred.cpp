#include "signet/linkpred.hpp"

#include <algorithm>
#include <cmath>

#include "signet/errors.hpp"
#include "signet/matrix_view.hpp"
#include "signet/util.hpp"

namespace signet {

EdgeSplit split_edges(const SignedDigraph& g, double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction < 1.0)) throw UsageError("test fraction must lie in (0,1)");
    std::vector<Edge> edges = g.edges();
    const auto m = static_cast<std::size_t>(edges.size());
    const auto t = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(m)));
    if (t == 0 || t >= m) throw DataError("split leaves an empty test or train set");

    // Partial Fisher–Yates over the canonical edge order: the first t slots
    // become the held-out sample.
    Rng rng(seed);
    for (std::size_t i = 0; i < t; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.uniform_int(m - i));
        std::swap(edges[i], edges[j]);
    }

    EdgeSplit split;
    split.fraction = fraction;
    split.seed = seed;
    split.test.assign(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(t));
    std::sort(split.test.begin(), split.test.end(),
              [](const Edge& a, const Edge& b) { return a.src != b.src ? a.src < b.src : a.dst < b.dst; });

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(g.n()));
    for (NodeId v = 0; v < g.n(); ++v) labels.push_back(g.label(v));
    split.train = SignedDigraph::from_edges(
        std::move(labels), std::vector<Edge>(edges.begin() + static_cast<std::ptrdiff_t>(t), edges.end()));
    return split;
}

PredictMethod predict_method_from_string(const std::string& s) {
    if (s == "always_positive") return PredictMethod::AlwaysPositive;
    if (s == "transpose") return PredictMethod::Transpose;
    if (s == "square") return PredictMethod::Square;
    if (s == "svd") return PredictMethod::Svd;
    if (s == "sym") return PredictMethod::Sym;
    if (s == "exp") return PredictMethod::Exp;
    if (s == "sym_exp") return PredictMethod::SymExp;
    if (s == "laplacian") return PredictMethod::Laplacian;
    throw UsageError("unknown prediction method '" + s +
                     "' (expected always_positive|transpose|square|svd|sym|exp|sym_exp|laplacian)");
}

std::string to_string(PredictMethod method) {
    switch (method) {
        case PredictMethod::AlwaysPositive: return "always_positive";
        case PredictMethod::Transpose: return "transpose";
        case PredictMethod::Square: return "square";
        case PredictMethod::Svd: return "svd";
        case PredictMethod::Sym: return "sym";
        case PredictMethod::Exp: return "exp";
        case PredictMethod::SymExp: return "sym_exp";
        case PredictMethod::Laplacian: return "laplacian";
    }
    return "?";
}

bool is_spectral(PredictMethod method) {
    switch (method) {
        case PredictMethod::Svd:
        case PredictMethod::Sym:
        case PredictMethod::Exp:
        case PredictMethod::SymExp:
        case PredictMethod::Laplacian:
            return true;
        default:
            return false;
    }
}

Predictor::Predictor(const SignedDigraph& train, PredictMethod method, std::optional<TransformedKernel> kernel,
                     int k)
    : train_(&train), method_(method), kernel_(std::move(kernel)), k_(k) {}

double Predictor::score(NodeId u, NodeId v) const {
    if (u < 0 || v < 0 || u >= train_->n() || v >= train_->n())
        throw UsageError("predictor: node index out of range");
    switch (method_) {
        case PredictMethod::AlwaysPositive:
            return 1.0;
        case PredictMethod::Transpose: {
            const int rev = train_->edge_sign(v, u);
            return rev != 0 ? static_cast<double>(rev) : 1.0;
        }
        case PredictMethod::Square: {
            const std::pair<NodeId, NodeId> pair{u, v};
            return signed_two_paths(*train_, std::span<const std::pair<NodeId, NodeId>>(&pair, 1))[0];
        }
        default:
            return kernel_->score(u, v);
    }
}

KernelPlan kernel_plan(PredictMethod method) {
    switch (method) {
        case PredictMethod::Svd:
            return {ViewKind::A, SpectralKind::Svd, Which::LargestMagnitude, Transform::Identity};
        case PredictMethod::Exp:
            return {ViewKind::A, SpectralKind::Svd, Which::LargestMagnitude, Transform::Exponential};
        case PredictMethod::Sym:
            return {ViewKind::B, SpectralKind::SymmetricEig, Which::LargestMagnitude, Transform::Identity};
        case PredictMethod::SymExp:
            return {ViewKind::B, SpectralKind::SymmetricEig, Which::LargestMagnitude, Transform::Exponential};
        case PredictMethod::Laplacian:
            // The pseudoinverse weights small eigenvalues most, so the
            // truncation keeps the smallest-algebraic end of Ē−B.
            return {ViewKind::Laplacian, SpectralKind::SymmetricEig, Which::SmallestAlgebraic,
                    Transform::Pseudoinverse};
        default:
            throw UsageError("method '" + to_string(method) + "' has no kernel");
    }
}

SpectralDecomposition compute_plan(const SignedDigraph& train, const KernelPlan& plan, int k, double tol,
                                   std::uint64_t seed, int max_iter) {
    SpectralOptions o;
    o.k = k;
    o.tol = tol;
    o.seed = seed;
    o.max_iter = max_iter;
    o.which = plan.which;
    const MatrixView view(train, plan.view);
    return plan.kind == SpectralKind::Svd ? truncated_svd(view, o) : truncated_eig_sym(view, o);
}

namespace {

TransformedKernel build_kernel(const SignedDigraph& train, PredictMethod method, int k, double tol,
                               std::uint64_t seed, int max_iter) {
    const KernelPlan plan = kernel_plan(method);
    return spectral_transform(compute_plan(train, plan, k, tol, seed, max_iter), plan.transform);
}

}  // namespace

Predictor make_predictor(const SignedDigraph& train, PredictMethod method, int k, double tol, std::uint64_t seed,
                         int max_iter) {
    if (!is_spectral(method)) return Predictor(train, method, std::nullopt, 0);
    if (k < 1) throw UsageError("spectral prediction methods require k >= 1");
    return Predictor(train, method, build_kernel(train, method, k, tol, seed, max_iter), k);
}

AccuracyReport evaluate_accuracy(const Predictor& predictor, const std::vector<Edge>& test, int threads) {
    if (test.empty()) throw DataError("empty test set");
    const int nthreads = resolve_threads(threads);
    struct Counts {
        std::int64_t correct = 0, wrong = 0, ties = 0;
    };
    std::vector<Counts> partial(static_cast<std::size_t>(nthreads));
    parallel_chunks(test.size(), nthreads, [&](std::size_t lo, std::size_t hi, int t) {
        Counts c;
        for (std::size_t i = lo; i < hi; ++i) {
            const Edge& e = test[i];
            const double s = predictor.score(e.src, e.dst);
            if (s == 0.0) ++c.ties;
            const int pred = s < 0.0 ? -1 : 1;
            if (pred == e.sign)
                ++c.correct;
            else
                ++c.wrong;
        }
        partial[static_cast<std::size_t>(t)] = c;
    });

    AccuracyReport r;
    r.method = to_string(predictor.method());
    r.k = predictor.k();
    r.test_size = static_cast<std::int64_t>(test.size());
    for (const Counts& c : partial) {
        r.correct += c.correct;
        r.wrong += c.wrong;
        r.ties += c.ties;
    }
    r.accuracy = static_cast<double>(r.correct - r.wrong) / static_cast<double>(r.test_size);
    return r;
}

std::vector<AccuracyReport> sweep_k(const SignedDigraph& train, const std::vector<Edge>& test,
                                    const std::vector<PredictMethod>& methods, const std::vector<int>& k_values,
                                    double tol, std::uint64_t seed, int threads) {
    if (k_values.empty()) throw UsageError("sweep_k: no k values given");
    int k_max = 0;
    for (const int k : k_values) {
        if (k < 1) throw UsageError("sweep_k: k values must be >= 1");
        k_max = std::max(k_max, k);
    }
    std::vector<int> ks = k_values;
    std::sort(ks.begin(), ks.end());

    std::vector<AccuracyReport> reports;
    for (const PredictMethod method : methods) {
        if (!is_spectral(method)) throw UsageError("sweep_k supports spectral methods only");
        const TransformedKernel full = build_kernel(train, method, k_max, tol, seed, 10000);
        for (const int k : ks) {
            // Prefixes of the one big factorization; the transform is rebuilt
            // on the truncated spectrum so relative cutoffs (pseudoinverse)
            // see exactly the retained values.
            TransformedKernel kernel =
                k == k_max ? full : spectral_transform(truncate(full.dec, k), full.transform);
            const Predictor p(train, method, std::move(kernel), k);
            reports.push_back(evaluate_accuracy(p, test, threads));
        }
    }
    return reports;
}

}  // namespace signet
