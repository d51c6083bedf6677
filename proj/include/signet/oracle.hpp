#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "signet/graph.hpp"
#include "signet/matrix_view.hpp"

namespace signet::oracle {

// Brute-force dense reference implementations. Everything in this namespace is
// written independently of the sparse production code paths — straightforward
// O(n³) textbook algorithms used only by tests and `self-check`. Size caps keep
// runtimes sub-second.

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    static DenseMatrix identity(std::size_t n);

    double& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    DenseMatrix transposed() const;
    double frobenius() const;
    double norm1() const;  // max column sum of absolute values

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

// Exact dense image of a sparse view, built by applying it to basis vectors.
DenseMatrix densify(const MatrixView& view);  // n ≤ 256

// The same matrices built straight from the edge list with nested loops —
// deliberately sharing nothing with MatrixView::apply.
DenseMatrix dense_from_graph(const SignedDigraph& g, ViewKind kind);  // n ≤ 256

DenseMatrix matrix_square(const DenseMatrix& m);  // n ≤ 256

// Cyclic Jacobi eigendecomposition of a symmetric matrix; eigenpairs returned
// in ascending algebraic order, eigenvectors as columns.
struct EigResult {
    std::vector<double> values;
    DenseMatrix vectors;
};
EigResult jacobi_eig(const DenseMatrix& sym);  // n ≤ 64

// One-sided Jacobi SVD of a square matrix; singular values descending.
struct SvdResult {
    DenseMatrix u;
    std::vector<double> s;
    DenseMatrix v;
};
SvdResult jacobi_svd(const DenseMatrix& m);  // n ≤ 64

// Matrix exponential via 30-term Taylor series with scaling-and-squaring
// (s chosen so ‖M/2^s‖₁ ≤ 0.5).
DenseMatrix exp_taylor(const DenseMatrix& m);  // n ≤ 64

// Moore–Penrose pseudoinverse of a symmetric matrix via jacobi_eig; eigenvalues
// with |d| ≤ 1e−6·max|d| are treated as zero.
DenseMatrix pinv(const DenseMatrix& sym);  // n ≤ 64

// Resistance-distance matrix R_uv = K_uu + K_vv − 2K_uv with K = (Ē−B)⁺.
DenseMatrix resistance_distance(const SignedDigraph& g);  // n ≤ 64

// Dense power iteration on the explicit Google matrix
// G = (1−α)·M + (α/n)·J over a dense row-stochastic M. Returns the dominant
// left eigenvector, unit Euclidean length, sign fixed so the sum is ≥ 0.
std::vector<double> dense_google_rank(const DenseMatrix& row_stochastic, double alpha, double tol = 1e-12,
                                      int max_iter = 100000);  // n ≤ 64

// All six clustering coefficients from the literal dense formulas.
struct DenseClustering {
    std::int64_t num_undirected = 0, num_undirected_signed = 0, den_undirected = 0;
    std::int64_t num_directed = 0, num_directed_signed = 0, den_directed = 0;
    std::optional<double> c, c_s, s, c_dir, c_s_dir, s_dir;
};
DenseClustering dense_clustering(const SignedDigraph& g, bool include_diagonal = false);  // n ≤ 64

}  // namespace signet::oracle
