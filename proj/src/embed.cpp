#include "signet/embed.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "signet/cache.hpp"
#include "signet/errors.hpp"
#include "signet/matrix_view.hpp"
#include "signet/spectral.hpp"

namespace signet {

namespace {

SpectralDecomposition cached_decomposition(const EmbedOptions& options, const SignedDigraph& g, ViewKind view,
                                           SpectralKind kind, const SpectralOptions& sopt) {
    const bool use_cache = !options.cache_dir.empty() && !options.input_digest.empty();
    std::string key;
    if (use_cache) {
        key = cache_key(options.input_digest, view, kind, sopt.which, sopt.k, sopt.tol, sopt.seed);
        if (auto hit = cache_load(options.cache_dir, key)) return *std::move(hit);
    }
    const MatrixView mview(g, view);
    SpectralDecomposition dec =
        kind == SpectralKind::Svd ? truncated_svd(mview, sopt) : truncated_eig_sym(mview, sopt);
    if (use_cache) cache_store(options.cache_dir, key, dec);
    return dec;
}

}  // namespace

EmbedMethod embed_method_from_string(const std::string& s) {
    if (s == "laplacian") return EmbedMethod::Laplacian;
    if (s == "svd_given") return EmbedMethod::SvdGiven;
    if (s == "svd_received") return EmbedMethod::SvdReceived;
    throw UsageError("unknown embed method '" + s + "' (expected laplacian|svd_given|svd_received)");
}

std::string to_string(EmbedMethod method) {
    switch (method) {
        case EmbedMethod::Laplacian: return "laplacian";
        case EmbedMethod::SvdGiven: return "svd_given";
        case EmbedMethod::SvdReceived: return "svd_received";
    }
    return "?";
}

Embedding embed(const SignedDigraph& g, const EmbedOptions& options) {
    const NodeId n = g.n();
    if (options.dims < 1) throw UsageError("dims must be >= 1");
    if (n <= options.dims) throw DataError("graph too small to embed: need n > dims");
    int k = options.k > 0 ? options.k : std::max(options.dims + 2, 8);
    k = std::min<int>(k, n);
    if (k < options.dims) throw UsageError("k must be >= dims");

    SpectralOptions sopt;
    sopt.k = k;
    sopt.tol = options.tol;
    sopt.seed = options.seed;
    sopt.max_iter = options.max_iter;

    Embedding e;
    e.method = options.method;
    e.labels.reserve(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) e.labels.push_back(g.label(v));
    e.coords.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(options.dims), 0.0));

    if (options.method == EmbedMethod::Laplacian) {
        sopt.which = Which::SmallestAlgebraic;
        const TransformedKernel kernel = spectral_transform(
            cached_decomposition(options, g, ViewKind::Laplacian, SpectralKind::SymmetricEig, sopt),
            Transform::Pseudoinverse);
        // Dominant kernel eigenvalues: largest 1/λ first, i.e. the smallest
        // nonzero Laplacian eigenvalues.
        std::vector<int> order(static_cast<std::size_t>(kernel.fd.size()));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (kernel.fd[a] != kernel.fd[b]) return kernel.fd[a] > kernel.fd[b];
            return a < b;
        });
        for (int d = 0; d < options.dims; ++d) {
            const int col = order[static_cast<std::size_t>(d)];
            const double w = std::sqrt(std::max(kernel.fd[col], 0.0));
            e.axis_weights.push_back(kernel.fd[col]);
            for (NodeId v = 0; v < n; ++v)
                e.coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)] = kernel.dec.u(v, col) * w;
        }
        return e;
    }

    const SpectralDecomposition dec = cached_decomposition(options, g, ViewKind::A, SpectralKind::Svd, sopt);
    const bool given = options.method == EmbedMethod::SvdGiven;
    for (int d = 0; d < options.dims; ++d) {
        e.axis_weights.push_back(dec.d[d]);
        for (NodeId v = 0; v < n; ++v)
            e.coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)] =
                (given ? dec.u(v, d) : dec.v(v, d)) * dec.d[d];
    }
    return e;
}

}  // namespace signet
