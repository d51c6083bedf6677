#include "signet/matrix_view.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "signet/errors.hpp"

namespace signet {

ViewKind view_kind_from_string(const std::string& s) {
    if (s == "A") return ViewKind::A;
    if (s == "A_abs") return ViewKind::AAbs;
    if (s == "A_transpose") return ViewKind::ATranspose;
    if (s == "B") return ViewKind::B;
    if (s == "B_abs") return ViewKind::BAbs;
    if (s == "row_stochastic_unsigned") return ViewKind::RowStochasticUnsigned;
    if (s == "row_stochastic_signed") return ViewKind::RowStochasticSigned;
    if (s == "row_stochastic_symmetric") return ViewKind::RowStochasticSymmetric;
    if (s == "laplacian") return ViewKind::Laplacian;
    throw UsageError("unknown matrix view kind '" + s + "'");
}

std::string to_string(ViewKind kind) {
    switch (kind) {
        case ViewKind::A: return "A";
        case ViewKind::AAbs: return "A_abs";
        case ViewKind::ATranspose: return "A_transpose";
        case ViewKind::B: return "B";
        case ViewKind::BAbs: return "B_abs";
        case ViewKind::RowStochasticUnsigned: return "row_stochastic_unsigned";
        case ViewKind::RowStochasticSigned: return "row_stochastic_signed";
        case ViewKind::RowStochasticSymmetric: return "row_stochastic_symmetric";
        case ViewKind::Laplacian: return "laplacian";
    }
    return "?";
}

MatrixView::MatrixView(const SignedDigraph& g, ViewKind kind) : g_(&g), kind_(kind) {
    const NodeId n = g.n();
    if (kind == ViewKind::RowStochasticSymmetric || kind == ViewKind::Laplacian) {
        // Ē_ii = Σ_j |A_ij + A_ji|: merge the sorted out- and in-rows of i so a
        // +1/−1 reciprocal pair cancels to 0 exactly as the definition demands.
        ebar_.assign(static_cast<std::size_t>(n), 0);
        for (NodeId u = 0; u < n; ++u) {
            const auto on = g.out_neighbors(u);
            const auto os = g.out_signs(u);
            const auto in = g.in_neighbors(u);
            const auto is = g.in_signs(u);
            std::size_t i = 0, j = 0;
            std::int64_t total = 0;
            while (i < on.size() || j < in.size()) {
                if (j >= in.size() || (i < on.size() && on[i] < in[j])) {
                    total += 1;  // |±1|
                    ++i;
                } else if (i >= on.size() || in[j] < on[i]) {
                    total += 1;
                    ++j;
                } else {
                    total += std::abs(static_cast<int>(os[i]) + static_cast<int>(is[j]));
                    ++i;
                    ++j;
                }
            }
            ebar_[static_cast<std::size_t>(u)] = total;
        }
    }
    if (kind == ViewKind::RowStochasticUnsigned || kind == ViewKind::RowStochasticSigned) {
        for (NodeId u = 0; u < n; ++u)
            if (g.out_degree(u) == 0) zero_rows_.push_back(u);
    } else if (kind == ViewKind::RowStochasticSymmetric) {
        for (NodeId u = 0; u < n; ++u)
            if (ebar_[static_cast<std::size_t>(u)] == 0) zero_rows_.push_back(u);
    }
}

double MatrixView::gershgorin_bound() const {
    if (kind_ != ViewKind::Laplacian) throw UsageError("gershgorin_bound requires the laplacian kind");
    std::int64_t mx = 0;
    for (const std::int64_t e : ebar_) mx = std::max(mx, e);
    return 2.0 * static_cast<double>(mx);
}

// y = A·x (or Ā·x / Aᵀ·x / Āᵀ·x). The transpose traverses the in-adjacency so
// both directions stream rows sequentially.
void MatrixView::apply_a(std::span<const double> x, std::span<double> y, bool signs, bool transpose) const {
    const NodeId n = g_->n();
    for (NodeId u = 0; u < n; ++u) {
        const auto nbrs = transpose ? g_->in_neighbors(u) : g_->out_neighbors(u);
        const auto sgns = transpose ? g_->in_signs(u) : g_->out_signs(u);
        double acc = 0.0;
        if (signs) {
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                acc += static_cast<double>(sgns[i]) * x[static_cast<std::size_t>(nbrs[i])];
        } else {
            for (const NodeId v : nbrs) acc += x[static_cast<std::size_t>(v)];
        }
        y[static_cast<std::size_t>(u)] = acc;
    }
}

// y = (A + Aᵀ)x or (Ā + Āᵀ)x. Linearity lets us sum the two passes without
// forming B's (possibly cancelling) entries.
void MatrixView::apply_b(std::span<const double> x, std::span<double> y, bool signs) const {
    const NodeId n = g_->n();
    for (NodeId u = 0; u < n; ++u) {
        const auto on = g_->out_neighbors(u);
        const auto os = g_->out_signs(u);
        const auto in = g_->in_neighbors(u);
        const auto is = g_->in_signs(u);
        double acc = 0.0;
        if (signs) {
            for (std::size_t i = 0; i < on.size(); ++i)
                acc += static_cast<double>(os[i]) * x[static_cast<std::size_t>(on[i])];
            for (std::size_t i = 0; i < in.size(); ++i)
                acc += static_cast<double>(is[i]) * x[static_cast<std::size_t>(in[i])];
        } else {
            for (const NodeId v : on) acc += x[static_cast<std::size_t>(v)];
            for (const NodeId v : in) acc += x[static_cast<std::size_t>(v)];
        }
        y[static_cast<std::size_t>(u)] = acc;
    }
}

void MatrixView::apply(std::span<const double> x, std::span<double> y) const {
    const auto n = static_cast<std::size_t>(g_->n());
    if (x.size() != n || y.size() != n) throw UsageError("matrix view apply: vector length mismatch");
    switch (kind_) {
        case ViewKind::A:
            apply_a(x, y, true, false);
            return;
        case ViewKind::AAbs:
            apply_a(x, y, false, false);
            return;
        case ViewKind::ATranspose:
            apply_a(x, y, true, true);
            return;
        case ViewKind::B:
            apply_b(x, y, true);
            return;
        case ViewKind::BAbs:
            apply_b(x, y, false);
            return;
        case ViewKind::RowStochasticUnsigned:
        case ViewKind::RowStochasticSigned: {
            apply_a(x, y, kind_ == ViewKind::RowStochasticSigned, false);
            const double uniform =
                zero_rows_.empty() ? 0.0 : std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
            for (std::size_t u = 0; u < n; ++u) {
                const auto d = g_->out_degree(static_cast<NodeId>(u));
                y[u] = d > 0 ? y[u] / static_cast<double>(d) : uniform;
            }
            return;
        }
        case ViewKind::RowStochasticSymmetric: {
            apply_b(x, y, true);
            const double uniform =
                zero_rows_.empty() ? 0.0 : std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
            for (std::size_t u = 0; u < n; ++u) {
                const auto e = ebar_[u];
                y[u] = e > 0 ? y[u] / static_cast<double>(e) : uniform;
            }
            return;
        }
        case ViewKind::Laplacian: {
            apply_b(x, y, true);
            for (std::size_t u = 0; u < n; ++u) y[u] = static_cast<double>(ebar_[u]) * x[u] - y[u];
            return;
        }
    }
}

void MatrixView::apply_transpose(std::span<const double> x, std::span<double> y) const {
    const auto n = static_cast<std::size_t>(g_->n());
    if (x.size() != n || y.size() != n) throw UsageError("matrix view apply: vector length mismatch");
    switch (kind_) {
        case ViewKind::A:
            apply_a(x, y, true, true);
            return;
        case ViewKind::AAbs:
            apply_a(x, y, false, true);
            return;
        case ViewKind::ATranspose:
            apply_a(x, y, true, false);
            return;
        case ViewKind::B:
        case ViewKind::BAbs:
        case ViewKind::Laplacian:
            apply(x, y);
            return;
        case ViewKind::RowStochasticUnsigned:
        case ViewKind::RowStochasticSigned: {
            // (D̄⁻¹A)ᵀ x = Aᵀ (D̄⁻¹x), plus the uniform rows' mass spread evenly.
            std::vector<double> scaled(n, 0.0);
            for (std::size_t u = 0; u < n; ++u) {
                const auto d = g_->out_degree(static_cast<NodeId>(u));
                if (d > 0) scaled[u] = x[u] / static_cast<double>(d);
            }
            apply_a(scaled, y, kind_ == ViewKind::RowStochasticSigned, true);
            double dangling_mass = 0.0;
            for (const NodeId u : zero_rows_) dangling_mass += x[static_cast<std::size_t>(u)];
            if (dangling_mass != 0.0) {
                const double c = dangling_mass / static_cast<double>(n);
                for (std::size_t u = 0; u < n; ++u) y[u] += c;
            }
            return;
        }
        case ViewKind::RowStochasticSymmetric: {
            std::vector<double> scaled(n, 0.0);
            for (std::size_t u = 0; u < n; ++u)
                if (ebar_[u] > 0) scaled[u] = x[u] / static_cast<double>(ebar_[u]);
            apply_b(scaled, y, true);
            double dangling_mass = 0.0;
            for (const NodeId u : zero_rows_) dangling_mass += x[static_cast<std::size_t>(u)];
            if (dangling_mass != 0.0) {
                const double c = dangling_mass / static_cast<double>(n);
                for (std::size_t u = 0; u < n; ++u) y[u] += c;
            }
            return;
        }
    }
}

}  // namespace signet
