#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "signet/graph.hpp"
#include "signet/matrix_view.hpp"

namespace signet {

enum class SpectralKind { SymmetricEig, Svd };
enum class Which { LargestMagnitude, SmallestAlgebraic };
enum class Transform { Identity, Exponential, Pseudoinverse };

Transform transform_from_string(const std::string& s);
std::string to_string(SpectralKind kind);
std::string to_string(Which which);
std::string to_string(Transform t);

struct SpectralOptions {
    int k = 8;
    double tol = 1e-8;
    int max_iter = 10000;  // restart cycles
    std::uint64_t seed = 0;
    Which which = Which::LargestMagnitude;
};

// Truncated basis pair U_k D_k V_kᵀ. For symmetric decompositions V is the
// same matrix as U. Columns are orthonormal; each column's largest-magnitude
// entry is positive (joint U/V flip for SVD).
struct SpectralDecomposition {
    Eigen::MatrixXd u;            // n×k left basis
    Eigen::MatrixXd v;            // n×k right basis
    Eigen::VectorXd d;            // spectrum, in report order
    std::vector<double> residuals;  // true residual norm per component
    SpectralKind kind = SpectralKind::SymmetricEig;
    ViewKind view = ViewKind::B;
    Which which = Which::LargestMagnitude;
    double tol = 1e-8;
    std::uint64_t seed = 0;

    int k() const { return static_cast<int>(d.size()); }
    NodeId n() const { return static_cast<NodeId>(u.rows()); }
};

// Lanczos with thick restarts and full reorthogonalization. `which` selects
// largest-magnitude eigenpairs (default) or the smallest algebraic ones
// (implemented by iterating on σI − M with a Gershgorin σ). k = n is allowed
// and degenerates into a full tridiagonalization.
SpectralDecomposition truncated_eig_sym(const MatrixView& view, const SpectralOptions& options);

// Golub–Kahan–Lanczos bidiagonalization with thick restarts; top-k singular
// triplets of any view kind.
SpectralDecomposition truncated_svd(const MatrixView& view, const SpectralOptions& options);

// Leading-k prefix of an existing decomposition (components are already in
// report order, so sweeps can reuse one large factorization).
SpectralDecomposition truncate(const SpectralDecomposition& dec, int k);

// Dominant left eigenvector of G = (1−α)·M + (α/n)·J over a row-stochastic
// view. The teleportation term is a rank-one update applied implicitly.
// Returns a unit-Euclidean vector whose sum is non-negative.
std::vector<double> dominant_left_eigenvector(const MatrixView& view, double alpha, double tol = 1e-12,
                                              int max_iter = 100000,
                                              const std::vector<double>* start = nullptr);

// Kernel f(M) in factored form: score(u,v) = Σ_i U_ui · f(d_i) · V_vi.
struct TransformedKernel {
    SpectralDecomposition dec;
    Transform transform = Transform::Identity;
    Eigen::VectorXd fd;

    double score(NodeId u, NodeId v) const;
    std::vector<double> score_batch(std::span<const std::pair<NodeId, NodeId>> pairs) const;
};

TransformedKernel spectral_transform(SpectralDecomposition dec, Transform transform);

// (A²)_{uv} per query pair via sorted out-row/in-row intersection; never forms
// the squared matrix.
std::vector<double> signed_two_paths(const SignedDigraph& g, std::span<const std::pair<NodeId, NodeId>> pairs);

}  // namespace signet
