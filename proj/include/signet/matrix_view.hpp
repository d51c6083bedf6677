#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

// Matrix lenses over a SignedDigraph. A is the signed adjacency matrix,
// A_abs its entrywise absolute value, B = A + Aᵀ the symmetric signed matrix,
// B_abs = Ā + Āᵀ its unsigned counterpart. The stochastic kinds divide rows by
// the degree diagonals D̄ (out-degrees) and Ē (Ē_ii = Σ_j |B_ij|); rows whose
// diagonal is zero are replaced by the uniform row 1/n so the matrix stays
// stochastic. Laplacian is Ē − B.
enum class ViewKind {
    A,
    AAbs,
    ATranspose,
    B,
    BAbs,
    RowStochasticUnsigned,
    RowStochasticSigned,
    RowStochasticSymmetric,
    Laplacian,
};

ViewKind view_kind_from_string(const std::string& s);
std::string to_string(ViewKind kind);

// Matrix-free operator: supports only y = M·x and y = Mᵀ·x. Never materializes
// a dense (or even sparse-explicit) matrix beyond the graph's own CSR arrays.
class MatrixView {
public:
    MatrixView(const SignedDigraph& g, ViewKind kind);

    NodeId n() const { return g_->n(); }
    ViewKind kind() const { return kind_; }
    const SignedDigraph& graph() const { return *g_; }
    bool symmetric() const {
        return kind_ == ViewKind::B || kind_ == ViewKind::BAbs || kind_ == ViewKind::Laplacian;
    }

    void apply(std::span<const double> x, std::span<double> y) const;
    void apply_transpose(std::span<const double> x, std::span<double> y) const;

    // Ē diagonal (defined for every kind; only computed for the kinds that use
    // it). Exposed for the Gershgorin shift and the SSR stochasticization.
    const std::vector<std::int64_t>& ebar_diag() const { return ebar_; }

    // Upper bound on the largest eigenvalue of the Laplacian kind
    // (Gershgorin: row i sums to at most 2·Ē_ii).
    double gershgorin_bound() const;

private:
    void apply_a(std::span<const double> x, std::span<double> y, bool signs, bool transpose) const;
    void apply_b(std::span<const double> x, std::span<double> y, bool signs) const;

    const SignedDigraph* g_;
    ViewKind kind_;
    std::vector<std::int64_t> ebar_;      // Ē_ii = Σ_j |B_ij|
    std::vector<NodeId> zero_rows_;       // rows replaced by the uniform 1/n row
};

}  // namespace signet
