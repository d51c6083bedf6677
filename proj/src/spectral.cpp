#include "signet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "signet/errors.hpp"
#include "signet/util.hpp"

namespace signet {

namespace {

void apply_view(const MatrixView& view, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    view.apply(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())),
               std::span<double>(y.data(), static_cast<std::size_t>(y.size())));
}

void apply_view_t(const MatrixView& view, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    view.apply_transpose(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())),
                         std::span<double>(y.data(), static_cast<std::size_t>(y.size())));
}

// Two passes of classical Gram–Schmidt against the first `cols` basis columns.
// With the second pass this is numerically equivalent to full
// reorthogonalization for our purposes.
void reortho(const Eigen::MatrixXd& basis, int cols, Eigen::VectorXd& w) {
    if (cols <= 0) return;
    for (int pass = 0; pass < 2; ++pass) {
        const Eigen::VectorXd c = basis.leftCols(cols).transpose() * w;
        w.noalias() -= basis.leftCols(cols) * c;
    }
}

// Deterministic replacement direction after a Lanczos breakdown. Returns false
// when the existing columns already span the whole space.
bool random_orthogonal(Rng& rng, const Eigen::MatrixXd& basis, int cols, Eigen::VectorXd& out) {
    const auto n = basis.rows();
    for (int attempt = 0; attempt < 5; ++attempt) {
        for (Eigen::Index i = 0; i < n; ++i) out[i] = rng.normal();
        const double before = out.norm();
        reortho(basis, cols, out);
        const double after = out.norm();
        if (after > 1e-8 * before) {
            out /= after;
            return true;
        }
    }
    return false;
}

// Ritz-value ordering for symmetric problems: by descending magnitude, ties by
// descending value, then by index for bitwise stability.
std::vector<int> magnitude_order(const Eigen::VectorXd& theta) {
    std::vector<int> order(static_cast<std::size_t>(theta.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double ma = std::abs(theta[a]), mb = std::abs(theta[b]);
        if (ma != mb) return ma > mb;
        if (theta[a] != theta[b]) return theta[a] > theta[b];
        return a < b;
    });
    return order;
}

// Largest-magnitude entry of each column made positive; for SVD kinds the
// right column flips jointly so the product U D Vᵀ is unchanged.
void fix_column_signs(Eigen::MatrixXd& u, Eigen::MatrixXd* v) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        Eigen::Index arg = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < u.rows(); ++i) {
            const double a = std::abs(u(i, j));
            if (a > best) {
                best = a;
                arg = i;
            }
        }
        if (u(arg, j) < 0.0) {
            u.col(j) = -u.col(j);
            if (v) v->col(j) = -v->col(j);
        }
    }
}

int subspace_size(NodeId n, int k) {
    return std::min<int>(n, std::max(2 * k + 8, 24));
}

}  // namespace

Transform transform_from_string(const std::string& s) {
    if (s == "identity") return Transform::Identity;
    if (s == "exponential" || s == "exp") return Transform::Exponential;
    if (s == "pseudoinverse" || s == "pinv") return Transform::Pseudoinverse;
    throw UsageError("unknown transform '" + s + "' (expected identity|exponential|pseudoinverse)");
}

std::string to_string(SpectralKind kind) {
    return kind == SpectralKind::SymmetricEig ? "symmetric_eig" : "svd";
}

std::string to_string(Which which) {
    return which == Which::LargestMagnitude ? "largest_magnitude" : "smallest_algebraic";
}

std::string to_string(Transform t) {
    switch (t) {
        case Transform::Identity: return "identity";
        case Transform::Exponential: return "exponential";
        case Transform::Pseudoinverse: return "pseudoinverse";
    }
    return "?";
}

SpectralDecomposition truncated_eig_sym(const MatrixView& view, const SpectralOptions& options) {
    if (!view.symmetric())
        throw UsageError("truncated_eig_sym requires a symmetric view kind (B, B_abs, laplacian)");
    const NodeId n = view.n();
    const int k = options.k;
    if (k < 1 || k > n) throw UsageError("truncated_eig_sym: k must satisfy 1 <= k <= n");

    // smallest_algebraic iterates on σI − M (σ a Gershgorin upper bound on
    // the spectrum) so the wanted end becomes the dominant one.
    const bool shifted = options.which == Which::SmallestAlgebraic;
    double sigma = 0.0;
    if (shifted) {
        sigma = view.kind() == ViewKind::Laplacian ? view.gershgorin_bound()
                                                   : 2.0 * static_cast<double>(view.graph().m());
    }
    auto op = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
        apply_view(view, x, y);
        if (shifted) y = sigma * x - y;
    };

    const int m = subspace_size(n, k);
    Eigen::MatrixXd basis(n, m + 1);
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd w(n), continuation(n);
    Rng rng(options.seed);

    int kept = 0;                 // locked Ritz columns carried across restarts
    Eigen::VectorXd couplings;    // their couplings to the continuation vector
    {
        Eigen::VectorXd v0(n);
        for (Eigen::Index i = 0; i < n; ++i) v0[i] = rng.normal();
        basis.col(0) = v0 / v0.norm();
    }

    double scale = 0.0;
    std::vector<double> best_residuals;
    for (int cycle = 0; cycle < options.max_iter; ++cycle) {
        int cols = kept + 1;  // valid basis columns: kept Ritz vectors + continuation
        int m_eff = m;
        double beta_res = 0.0;
        bool exhausted = false;

        for (int j = kept; j < m_eff; ++j) {
            op(basis.col(j), w);
            const double norm_before = std::max(w.norm(), 1.0);
            const double alpha = basis.col(j).dot(w);
            t(j, j) = alpha;
            w.noalias() -= alpha * basis.col(j);
            if (j == kept) {
                for (int i = 0; i < kept; ++i) w.noalias() -= couplings[i] * basis.col(i);
            } else if (t(j, j - 1) != 0.0) {
                w.noalias() -= t(j, j - 1) * basis.col(j - 1);
            }
            reortho(basis, cols, w);
            double beta = w.norm();
            if (beta <= 1e-10 * norm_before) {
                Eigen::VectorXd repl(n);
                if (!random_orthogonal(rng, basis, cols, repl)) {
                    m_eff = j + 1;
                    exhausted = true;
                    break;
                }
                w = repl;
                beta = 0.0;
            } else {
                w /= beta;
            }
            if (j + 1 < m_eff) {
                t(j, j + 1) = beta;
                t(j + 1, j) = beta;
                basis.col(j + 1) = w;
                ++cols;
            } else {
                beta_res = beta;
                continuation = w;
            }
        }
        if (exhausted) beta_res = 0.0;

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t.topLeftCorner(m_eff, m_eff));
        if (es.info() != Eigen::Success) throw ConvergenceError("projected eigensolver failed", 0.0);
        const Eigen::VectorXd theta = es.eigenvalues();
        const Eigen::MatrixXd y = es.eigenvectors();
        const std::vector<int> order = magnitude_order(theta);
        for (int i = 0; i < m_eff; ++i) scale = std::max(scale, std::abs(theta[i]));

        std::vector<double> est(static_cast<std::size_t>(k));
        bool converged = true;
        for (int i = 0; i < k && i < m_eff; ++i) {
            est[static_cast<std::size_t>(i)] = std::abs(beta_res * y(m_eff - 1, order[static_cast<std::size_t>(i)]));
            if (est[static_cast<std::size_t>(i)] > 0.25 * options.tol * scale) converged = false;
        }
        if (m_eff < k && !exhausted) converged = false;
        best_residuals = est;

        if (converged || exhausted || cycle + 1 == options.max_iter) {
            const int k_avail = std::min(k, m_eff);
            Eigen::MatrixXd ysel(m_eff, k_avail);
            Eigen::VectorXd dsel(k_avail);
            for (int i = 0; i < k_avail; ++i) {
                ysel.col(i) = y.col(order[static_cast<std::size_t>(i)]);
                const double th = theta[order[static_cast<std::size_t>(i)]];
                dsel[i] = shifted ? sigma - th : th;
            }
            SpectralDecomposition dec;
            dec.u = basis.leftCols(m_eff) * ysel;
            dec.kind = SpectralKind::SymmetricEig;
            dec.view = view.kind();
            dec.which = options.which;
            dec.tol = options.tol;
            dec.seed = options.seed;
            dec.d = dsel;

            // Verify with true residuals on the unshifted operator.
            dec.residuals.resize(static_cast<std::size_t>(k_avail));
            bool ok = k_avail == k;
            for (int i = 0; i < k_avail; ++i) {
                Eigen::VectorXd col = dec.u.col(i);
                apply_view(view, col, w);
                const double r = (w - dsel[i] * col).norm();
                dec.residuals[static_cast<std::size_t>(i)] = r;
                if (r > options.tol * std::max(scale, 1e-300)) ok = false;
            }
            if (ok) {
                fix_column_signs(dec.u, nullptr);
                dec.v = dec.u;
                return dec;
            }
            if (exhausted || cycle + 1 == options.max_iter)
                throw ConvergenceError("truncated_eig_sym did not reach the residual tolerance", beta_res,
                                       dec.residuals);
        }

        // Thick restart: keep the leading Ritz vectors plus the residual
        // direction, then extend the subspace again.
        const int keep = std::clamp(std::min(k + 8, m_eff - 2), 1, m_eff - 1);
        Eigen::MatrixXd ykeep(m_eff, keep);
        Eigen::VectorXd dkeep(keep);
        for (int i = 0; i < keep; ++i) {
            ykeep.col(i) = y.col(order[static_cast<std::size_t>(i)]);
            dkeep[i] = theta[order[static_cast<std::size_t>(i)]];
        }
        const Eigen::MatrixXd q = basis.leftCols(m_eff) * ykeep;
        basis.leftCols(keep) = q;
        basis.col(keep) = continuation;
        t.setZero();
        couplings.resize(keep);
        for (int i = 0; i < keep; ++i) {
            t(i, i) = dkeep[i];
            couplings[i] = beta_res * ykeep(m_eff - 1, i);
            t(i, keep) = couplings[i];
            t(keep, i) = couplings[i];
        }
        kept = keep;
    }
    throw ConvergenceError("truncated_eig_sym did not converge", 0.0, best_residuals);
}

SpectralDecomposition truncated_svd(const MatrixView& view, const SpectralOptions& options) {
    const NodeId n = view.n();
    const int k = options.k;
    if (k < 1 || k > n) throw UsageError("truncated_svd: k must satisfy 1 <= k <= n");

    const int m = subspace_size(n, k);
    Eigen::MatrixXd ub(n, m);       // left Lanczos vectors
    Eigen::MatrixXd vb(n, m + 1);   // right Lanczos vectors (+ residual slot)
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd w(n), z(n), continuation(n);
    Rng rng(options.seed);

    int kept = 0;
    Eigen::VectorXd couplings;
    {
        Eigen::VectorXd v0(n);
        for (Eigen::Index i = 0; i < n; ++i) v0[i] = rng.normal();
        vb.col(0) = v0 / v0.norm();
    }

    double scale = 0.0;
    std::vector<double> best_residuals;
    for (int cycle = 0; cycle < options.max_iter; ++cycle) {
        int ucols = kept;
        int vcols = kept + 1;
        int m_eff = m;
        double beta_res = 0.0;
        bool exhausted = false;

        for (int j = kept; j < m_eff; ++j) {
            // Left step: w = A v_j minus couplings, normalized into u_j.
            apply_view(view, vb.col(j), w);
            double norm_before = std::max(w.norm(), 1.0);
            if (j == kept) {
                for (int i = 0; i < kept; ++i) w.noalias() -= couplings[i] * ub.col(i);
            } else if (b(j - 1, j) != 0.0) {
                w.noalias() -= b(j - 1, j) * ub.col(j - 1);
            }
            reortho(ub, ucols, w);
            double alpha = w.norm();
            if (alpha <= 1e-10 * norm_before) {
                Eigen::VectorXd repl(n);
                if (!random_orthogonal(rng, ub, ucols, repl)) {
                    m_eff = j;
                    exhausted = true;
                    break;
                }
                w = repl;
                alpha = 0.0;
            } else {
                w /= alpha;
            }
            b(j, j) = alpha;
            ub.col(j) = w;
            ++ucols;

            // Right step: z = Aᵀ u_j − α v_j, normalized into v_{j+1}.
            apply_view_t(view, ub.col(j), z);
            norm_before = std::max(z.norm(), 1.0);
            if (alpha != 0.0) z.noalias() -= alpha * vb.col(j);
            reortho(vb, vcols, z);
            double beta = z.norm();
            if (beta <= 1e-10 * norm_before) {
                Eigen::VectorXd repl(n);
                if (!random_orthogonal(rng, vb, vcols, repl)) {
                    m_eff = j + 1;
                    exhausted = true;
                    break;
                }
                z = repl;
                beta = 0.0;
            } else {
                z /= beta;
            }
            if (j + 1 < m_eff) {
                b(j, j + 1) = beta;
                vb.col(j + 1) = z;
                ++vcols;
            } else {
                beta_res = beta;
                continuation = z;
            }
        }
        if (exhausted) beta_res = 0.0;

        Eigen::JacobiSVD<Eigen::MatrixXd> svd(b.topLeftCorner(m_eff, m_eff),
                                              Eigen::ComputeFullU | Eigen::ComputeFullV);
        const Eigen::VectorXd sig = svd.singularValues();  // descending
        if (m_eff > 0) scale = std::max(scale, sig[0]);

        std::vector<double> est(static_cast<std::size_t>(k));
        bool converged = true;
        for (int i = 0; i < k && i < m_eff; ++i) {
            est[static_cast<std::size_t>(i)] = std::abs(beta_res * svd.matrixU()(m_eff - 1, i));
            if (est[static_cast<std::size_t>(i)] > 0.25 * options.tol * scale) converged = false;
        }
        if (m_eff < k && !exhausted) converged = false;
        best_residuals = est;

        if (converged || exhausted || cycle + 1 == options.max_iter) {
            const int k_avail = std::min(k, m_eff);
            SpectralDecomposition dec;
            dec.u = ub.leftCols(m_eff) * svd.matrixU().leftCols(k_avail);
            dec.v = vb.leftCols(m_eff) * svd.matrixV().leftCols(k_avail);
            dec.d = sig.head(k_avail);
            dec.kind = SpectralKind::Svd;
            dec.view = view.kind();
            dec.which = Which::LargestMagnitude;
            dec.tol = options.tol;
            dec.seed = options.seed;

            dec.residuals.resize(static_cast<std::size_t>(k_avail));
            bool ok = k_avail == k;
            const double bound = options.tol * std::max(scale, 1e-300);
            for (int i = 0; i < k_avail; ++i) {
                Eigen::VectorXd uc = dec.u.col(i), vc = dec.v.col(i);
                apply_view(view, vc, w);
                const double r1 = (w - dec.d[i] * uc).norm();
                apply_view_t(view, uc, z);
                const double r2 = (z - dec.d[i] * vc).norm();
                dec.residuals[static_cast<std::size_t>(i)] = std::max(r1, r2);
                if (dec.residuals[static_cast<std::size_t>(i)] > bound) ok = false;
            }
            if (ok) {
                fix_column_signs(dec.u, &dec.v);
                return dec;
            }
            if (exhausted || cycle + 1 == options.max_iter)
                throw ConvergenceError("truncated_svd did not reach the residual tolerance", beta_res,
                                       dec.residuals);
        }

        const int keep = std::clamp(std::min(k + 8, m_eff - 2), 1, m_eff - 1);
        const Eigen::MatrixXd qu = ub.leftCols(m_eff) * svd.matrixU().leftCols(keep);
        const Eigen::MatrixXd qv = vb.leftCols(m_eff) * svd.matrixV().leftCols(keep);
        ub.leftCols(keep) = qu;
        vb.leftCols(keep) = qv;
        vb.col(keep) = continuation;
        b.setZero();
        couplings.resize(keep);
        for (int i = 0; i < keep; ++i) {
            b(i, i) = sig[i];
            couplings[i] = beta_res * svd.matrixU()(m_eff - 1, i);
            b(i, keep) = couplings[i];  // Aᵀũ_i has a ρ_i component on the continuation vector
        }
        kept = keep;
    }
    throw ConvergenceError("truncated_svd did not converge", 0.0, best_residuals);
}

SpectralDecomposition truncate(const SpectralDecomposition& dec, int k) {
    if (k < 1 || k > dec.k()) throw UsageError("truncate: k out of range");
    SpectralDecomposition out = dec;
    out.u = dec.u.leftCols(k);
    out.v = dec.v.leftCols(k);
    out.d = dec.d.head(k);
    out.residuals.assign(dec.residuals.begin(), dec.residuals.begin() + k);
    return out;
}

std::vector<double> dominant_left_eigenvector(const MatrixView& view, double alpha, double tol, int max_iter,
                                              const std::vector<double>* start) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("alpha must lie in (0,1)");
    const auto n = static_cast<std::size_t>(view.n());
    Eigen::VectorXd x(static_cast<Eigen::Index>(n));
    if (start) {
        if (start->size() != n) throw UsageError("start vector length mismatch");
        for (std::size_t i = 0; i < n; ++i) x[static_cast<Eigen::Index>(i)] = (*start)[i];
        const double l1 = x.lpNorm<1>();
        if (l1 == 0.0) throw UsageError("start vector must be nonzero");
        x /= l1;
    } else {
        x.setConstant(1.0 / static_cast<double>(n));
    }

    Eigen::VectorXd y(static_cast<Eigen::Index>(n));
    double delta = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        apply_view_t(view, x, y);
        const double mass = x.sum();
        y = (1.0 - alpha) * y;
        y.array() += alpha * mass / static_cast<double>(n);
        const double l1 = y.lpNorm<1>();
        if (l1 == 0.0) throw ConvergenceError("power iteration: iterate vanished", 0.0);
        y /= l1;
        if (x.dot(y) < 0.0) y = -y;
        delta = (y - x).lpNorm<1>();
        x = y;
        if (delta < tol) {
            const double flip = x.sum() < 0.0 ? -1.0 : 1.0;
            x = flip * x / x.norm();
            return std::vector<double>(x.data(), x.data() + x.size());
        }
    }
    throw ConvergenceError("power iteration did not converge", delta);
}

double TransformedKernel::score(NodeId u, NodeId v) const {
    if (u < 0 || v < 0 || u >= dec.n() || v >= dec.n()) throw UsageError("kernel_score: node index out of range");
    double acc = 0.0;
    for (int i = 0; i < dec.k(); ++i) acc += dec.u(u, i) * fd[i] * dec.v(v, i);
    return acc;
}

std::vector<double> TransformedKernel::score_batch(std::span<const std::pair<NodeId, NodeId>> pairs) const {
    std::vector<double> out;
    out.reserve(pairs.size());
    for (const auto& [u, v] : pairs) out.push_back(score(u, v));
    return out;
}

TransformedKernel spectral_transform(SpectralDecomposition dec, Transform transform) {
    TransformedKernel kernel;
    kernel.transform = transform;
    kernel.fd = dec.d;
    switch (transform) {
        case Transform::Identity:
            break;
        case Transform::Exponential:
            for (Eigen::Index i = 0; i < kernel.fd.size(); ++i) kernel.fd[i] = std::exp(kernel.fd[i]);
            break;
        case Transform::Pseudoinverse: {
            double max_abs = 0.0;
            for (Eigen::Index i = 0; i < dec.d.size(); ++i) max_abs = std::max(max_abs, std::abs(dec.d[i]));
            const double cutoff = 1e-6 * max_abs;
            for (Eigen::Index i = 0; i < kernel.fd.size(); ++i)
                kernel.fd[i] = std::abs(dec.d[i]) <= cutoff ? 0.0 : 1.0 / dec.d[i];
            break;
        }
    }
    kernel.dec = std::move(dec);
    return kernel;
}

std::vector<double> signed_two_paths(const SignedDigraph& g, std::span<const std::pair<NodeId, NodeId>> pairs) {
    std::vector<double> out;
    out.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw UsageError("signed_two_paths: node index out of range");
        const auto un = g.out_neighbors(u);
        const auto us = g.out_signs(u);
        const auto vn = g.in_neighbors(v);
        const auto vs = g.in_signs(v);
        std::int64_t acc = 0;
        std::size_t i = 0, j = 0;
        while (i < un.size() && j < vn.size()) {
            if (un[i] < vn[j]) {
                ++i;
            } else if (vn[j] < un[i]) {
                ++j;
            } else {
                acc += static_cast<std::int64_t>(us[i]) * static_cast<std::int64_t>(vs[j]);
                ++i;
                ++j;
            }
        }
        out.push_back(static_cast<double>(acc));
    }
    return out;
}

}  // namespace signet
