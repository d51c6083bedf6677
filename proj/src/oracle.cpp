#include "signet/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "signet/errors.hpp"

namespace signet::oracle {

namespace {

void require_cap(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap)
        throw DataError(std::string(what) + ": size " + std::to_string(n) + " exceeds oracle cap " +
                        std::to_string(cap));
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

double DenseMatrix::frobenius() const {
    double s = 0.0;
    for (const double x : a_) s += x * x;
    return std::sqrt(s);
}

double DenseMatrix::norm1() const {
    double best = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) col += std::abs(at(i, j));
        best = std::max(best, col);
    }
    return best;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DataError("matmul: dimension mismatch");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

DenseMatrix densify(const MatrixView& view) {
    const auto n = static_cast<std::size_t>(view.n());
    require_cap(n, 256, "densify");
    DenseMatrix m(n, n);
    std::vector<double> e(n, 0.0), col(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        view.apply(e, col);
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
        e[j] = 0.0;
    }
    return m;
}

DenseMatrix dense_from_graph(const SignedDigraph& g, ViewKind kind) {
    const auto n = static_cast<std::size_t>(g.n());
    require_cap(n, 256, "dense_from_graph");
    DenseMatrix a(n, n);
    for (const Edge& e : g.edges())
        a.at(static_cast<std::size_t>(e.src), static_cast<std::size_t>(e.dst)) = static_cast<double>(e.sign);

    auto abs_of = [&](const DenseMatrix& m) {
        DenseMatrix r(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r.at(i, j) = std::abs(m.at(i, j));
        return r;
    };
    auto add = [&](const DenseMatrix& x, const DenseMatrix& y) {
        DenseMatrix r(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r.at(i, j) = x.at(i, j) + y.at(i, j);
        return r;
    };
    auto row_stochastic = [&](const DenseMatrix& m, const std::vector<double>& diag) {
        DenseMatrix r(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (diag[i] > 0.0) {
                for (std::size_t j = 0; j < n; ++j) r.at(i, j) = m.at(i, j) / diag[i];
            } else {
                for (std::size_t j = 0; j < n; ++j) r.at(i, j) = 1.0 / static_cast<double>(n);
            }
        }
        return r;
    };
    auto abs_row_sums = [&](const DenseMatrix& m) {
        std::vector<double> d(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i] += std::abs(m.at(i, j));
        return d;
    };

    switch (kind) {
        case ViewKind::A: return a;
        case ViewKind::AAbs: return abs_of(a);
        case ViewKind::ATranspose: return a.transposed();
        case ViewKind::B: return add(a, a.transposed());
        case ViewKind::BAbs: return add(abs_of(a), abs_of(a).transposed());
        case ViewKind::RowStochasticUnsigned: return row_stochastic(abs_of(a), abs_row_sums(a));
        case ViewKind::RowStochasticSigned: return row_stochastic(a, abs_row_sums(a));
        case ViewKind::RowStochasticSymmetric: {
            const DenseMatrix b = add(a, a.transposed());
            return row_stochastic(b, abs_row_sums(b));
        }
        case ViewKind::Laplacian: {
            const DenseMatrix b = add(a, a.transposed());
            const std::vector<double> e = abs_row_sums(b);
            DenseMatrix l(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) l.at(i, j) = (i == j ? e[i] : 0.0) - b.at(i, j);
            return l;
        }
    }
    throw DataError("dense_from_graph: unknown kind");
}

DenseMatrix matrix_square(const DenseMatrix& m) {
    require_cap(m.rows(), 256, "matrix_square");
    return matmul(m, m);
}

EigResult jacobi_eig(const DenseMatrix& sym) {
    const std::size_t n = sym.rows();
    require_cap(n, 64, "jacobi_eig");
    if (sym.cols() != n) throw DataError("jacobi_eig: matrix not square");
    DenseMatrix a = sym;
    DenseMatrix q = DenseMatrix::identity(n);
    const double fro = std::max(a.frobenius(), 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a.at(i, j) * a.at(i, j);
        if (std::sqrt(off) <= 1e-14 * fro) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                const double apr = a.at(p, r);
                if (std::abs(apr) <= 1e-300) continue;
                const double theta = (a.at(r, r) - a.at(p, p)) / (2.0 * apr);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a.at(k, p), akr = a.at(k, r);
                    a.at(k, p) = c * akp - s * akr;
                    a.at(k, r) = s * akp + c * akr;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a.at(p, k), ark = a.at(r, k);
                    a.at(p, k) = c * apk - s * ark;
                    a.at(r, k) = s * apk + c * ark;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double qkp = q.at(k, p), qkr = q.at(k, r);
                    q.at(k, p) = c * qkp - s * qkr;
                    q.at(k, r) = s * qkp + c * qkr;
                }
            }
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a.at(x, x) < a.at(y, y); });
    EigResult res;
    res.values.resize(n);
    res.vectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        res.values[j] = a.at(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) res.vectors.at(i, j) = q.at(i, order[j]);
    }
    return res;
}

SvdResult jacobi_svd(const DenseMatrix& m) {
    const std::size_t n = m.rows();
    require_cap(n, 64, "jacobi_svd");
    if (m.cols() != n) throw DataError("jacobi_svd: matrix not square");
    DenseMatrix u = m;  // columns rotated in place (one-sided Hestenes)
    DenseMatrix v = DenseMatrix::identity(n);
    for (int sweep = 0; sweep < 100; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                double app = 0.0, arr = 0.0, apr = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    app += u.at(k, p) * u.at(k, p);
                    arr += u.at(k, r) * u.at(k, r);
                    apr += u.at(k, p) * u.at(k, r);
                }
                if (std::abs(apr) <= 1e-15 * std::sqrt(app * arr) || apr == 0.0) continue;
                rotated = true;
                const double zeta = (arr - app) / (2.0 * apr);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double ukp = u.at(k, p), ukr = u.at(k, r);
                    u.at(k, p) = c * ukp - s * ukr;
                    u.at(k, r) = s * ukp + c * ukr;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v.at(k, p), vkr = v.at(k, r);
                    v.at(k, p) = c * vkp - s * vkr;
                    v.at(k, r) = s * vkp + c * vkr;
                }
            }
        }
        if (!rotated) break;
    }
    SvdResult res;
    res.s.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        double norm = 0.0;
        for (std::size_t k = 0; k < n; ++k) norm += u.at(k, j) * u.at(k, j);
        res.s[j] = std::sqrt(norm);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return res.s[x] > res.s[y]; });
    SvdResult out;
    out.s.resize(n);
    out.u = DenseMatrix(n, n);
    out.v = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.s[j] = res.s[src];
        for (std::size_t i = 0; i < n; ++i) out.v.at(i, j) = v.at(i, src);
        if (res.s[src] > 1e-300) {
            for (std::size_t i = 0; i < n; ++i) out.u.at(i, j) = u.at(i, src) / res.s[src];
        }
    }
    // Null-space columns of U (zero singular values) get completed to an
    // orthonormal basis so reconstruction tests can rely on UᵀU = I.
    for (std::size_t j = 0; j < n; ++j) {
        if (out.s[j] > 1e-300) continue;
        for (std::size_t basis = 0; basis < n; ++basis) {
            std::vector<double> cand(n, 0.0);
            cand[basis] = 1.0;
            for (std::size_t prev = 0; prev < n; ++prev) {
                if (prev == j || (out.s[prev] <= 1e-300 && prev > j)) continue;
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += cand[i] * out.u.at(i, prev);
                for (std::size_t i = 0; i < n; ++i) cand[i] -= dot * out.u.at(i, prev);
            }
            double norm = 0.0;
            for (const double x : cand) norm += x * x;
            norm = std::sqrt(norm);
            if (norm > 1e-6) {
                for (std::size_t i = 0; i < n; ++i) out.u.at(i, j) = cand[i] / norm;
                break;
            }
        }
    }
    return out;
}

DenseMatrix exp_taylor(const DenseMatrix& m) {
    const std::size_t n = m.rows();
    require_cap(n, 64, "exp_taylor");
    int s = 0;
    double norm = m.norm1();
    while (norm > 0.5 && s < 60) {
        norm /= 2.0;
        ++s;
    }
    const double scale = std::ldexp(1.0, -s);
    DenseMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x.at(i, j) = m.at(i, j) * scale;
    DenseMatrix sum = DenseMatrix::identity(n);
    DenseMatrix term = DenseMatrix::identity(n);
    for (int i = 1; i <= 30; ++i) {
        term = matmul(term, x);
        const double inv = 1.0 / static_cast<double>(i);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                term.at(r, c) *= inv;
                sum.at(r, c) += term.at(r, c);
            }
    }
    for (int i = 0; i < s; ++i) sum = matmul(sum, sum);
    return sum;
}

DenseMatrix pinv(const DenseMatrix& sym) {
    const std::size_t n = sym.rows();
    require_cap(n, 64, "pinv");
    const EigResult eig = jacobi_eig(sym);
    double max_abs = 0.0;
    for (const double d : eig.values) max_abs = std::max(max_abs, std::abs(d));
    const double cutoff = 1e-6 * max_abs;
    DenseMatrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(eig.values[k]) <= cutoff) continue;
        const double inv = 1.0 / eig.values[k];
        for (std::size_t i = 0; i < n; ++i) {
            const double uik = eig.vectors.at(i, k);
            if (uik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) r.at(i, j) += inv * uik * eig.vectors.at(j, k);
        }
    }
    return r;
}

DenseMatrix resistance_distance(const SignedDigraph& g) {
    const auto n = static_cast<std::size_t>(g.n());
    require_cap(n, 64, "resistance_distance");
    const DenseMatrix k = pinv(dense_from_graph(g, ViewKind::Laplacian));
    DenseMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = k.at(i, i) + k.at(j, j) - 2.0 * k.at(i, j);
    return r;
}

std::vector<double> dense_google_rank(const DenseMatrix& row_stochastic, double alpha, double tol, int max_iter) {
    const std::size_t n = row_stochastic.rows();
    require_cap(n, 64, "dense_google_rank");
    DenseMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.at(i, j) = (1.0 - alpha) * row_stochastic.at(i, j) + alpha / static_cast<double>(n);

    std::vector<double> x(n, 1.0 / static_cast<double>(n)), y(n, 0.0);
    double delta = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) acc += x[i] * g.at(i, j);
            y[j] = acc;
        }
        double l1 = 0.0;
        for (const double v : y) l1 += std::abs(v);
        if (l1 == 0.0) throw ConvergenceError("dense google rank: iterate vanished", 0.0);
        for (double& v : y) v /= l1;
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += x[i] * y[i];
        if (dot < 0.0)
            for (double& v : y) v = -v;
        delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) delta += std::abs(y[i] - x[i]);
        x = y;
        if (delta < tol) {
            double sum = 0.0, l2 = 0.0;
            for (const double v : x) {
                sum += v;
                l2 += v * v;
            }
            l2 = std::sqrt(l2);
            const double flip = sum < 0.0 ? -1.0 : 1.0;
            for (double& v : x) v = flip * v / l2;
            return x;
        }
    }
    throw ConvergenceError("dense google rank did not converge", delta);
}

DenseClustering dense_clustering(const SignedDigraph& g, bool include_diagonal) {
    const auto n = static_cast<std::size_t>(g.n());
    require_cap(n, 64, "dense_clustering");
    // Exact integer arithmetic throughout: entries are small ints, so we carry
    // them in int64 dense arrays.
    std::vector<std::int64_t> a(n * n, 0);
    for (const Edge& e : g.edges())
        a[static_cast<std::size_t>(e.src) * n + static_cast<std::size_t>(e.dst)] = e.sign;

    auto run = [&](const std::vector<std::int64_t>& s) {
        std::vector<std::int64_t> sq(n * n, 0);
        std::vector<std::int64_t> sq_abs(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const std::int64_t sik = s[i * n + k];
                if (sik == 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    sq[i * n + j] += sik * s[k * n + j];
                    sq_abs[i * n + j] += std::abs(sik) * std::abs(s[k * n + j]);
                }
            }
        std::int64_t num_signed = 0, num_unsigned = 0, den = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!include_diagonal && i == j) continue;
                num_signed += s[i * n + j] * sq[i * n + j];
                num_unsigned += std::abs(s[i * n + j]) * sq_abs[i * n + j];
                den += sq_abs[i * n + j];
            }
        return std::array<std::int64_t, 3>{num_unsigned, num_signed, den};
    };

    DenseClustering r;
    const auto dir = run(a);
    r.num_directed = dir[0];
    r.num_directed_signed = dir[1];
    r.den_directed = dir[2];

    std::vector<std::int64_t> u(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t b = a[i * n + j] + a[j * n + i];
            u[i * n + j] = b > 0 ? 1 : (b < 0 ? -1 : 0);
        }
    const auto und = run(u);
    r.num_undirected = und[0];
    r.num_undirected_signed = und[1];
    r.den_undirected = und[2];

    if (r.den_undirected > 0) {
        r.c = static_cast<double>(r.num_undirected) / static_cast<double>(r.den_undirected);
        r.c_s = static_cast<double>(r.num_undirected_signed) / static_cast<double>(r.den_undirected);
        if (*r.c != 0.0) r.s = *r.c_s / *r.c;
    }
    if (r.den_directed > 0) {
        r.c_dir = static_cast<double>(r.num_directed) / static_cast<double>(r.den_directed);
        r.c_s_dir = static_cast<double>(r.num_directed_signed) / static_cast<double>(r.den_directed);
        if (*r.c_dir != 0.0) r.s_dir = *r.c_s_dir / *r.c_dir;
    }
    return r;
}

}  // namespace signet::oracle
