#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "signet/errors.hpp"
#include "signet/matrix_view.hpp"
#include "signet/oracle.hpp"
#include "signet/spectral.hpp"
#include "signet/util.hpp"

using namespace signet;

namespace {

SpectralOptions opts(int k, double tol = 1e-10, Which which = Which::LargestMagnitude) {
    SpectralOptions o;
    o.k = k;
    o.tol = tol;
    o.which = which;
    return o;
}

oracle::DenseMatrix kernel_matrix(const TransformedKernel& kernel, NodeId n) {
    oracle::DenseMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = kernel.score(i, j);
    return m;
}

SignedDigraph negated(const SignedDigraph& g) {
    std::vector<std::string> labels;
    for (NodeId u = 0; u < g.n(); ++u) labels.push_back(g.label(u));
    auto edges = g.edges();
    for (auto& e : edges) e.sign = static_cast<std::int8_t>(-e.sign);
    return SignedDigraph::from_edges(std::move(labels), edges);
}

double residual_eig(const MatrixView& view, const SpectralDecomposition& dec, int i) {
    const auto n = static_cast<std::size_t>(dec.n());
    std::vector<double> x(n), y(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = dec.u(static_cast<Eigen::Index>(r), i);
    view.apply(x, y);
    double nrm = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        const double d = y[r] - dec.d(i) * x[r];
        nrm += d * d;
    }
    return std::sqrt(nrm);
}

}  // namespace

TEST_CASE("single-edge B: the eigenvalue pair is {+1, -1}") {
    const auto g = t::from_tsv("a b 1\n");
    const auto dec = truncated_eig_sym(MatrixView(g, ViewKind::B), opts(2));
    REQUIRE(dec.k() == 2);
    std::vector<double> d{dec.d(0), dec.d(1)};
    std::sort(d.begin(), d.end());
    CHECK(d[0] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(d[1] == doctest::Approx(1.0).epsilon(1e-10));
    for (int i = 0; i < 2; ++i)
        for (int r = 0; r < 2; ++r) CHECK(std::abs(dec.u(r, i)) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("single-edge Laplacian: smallest eigenpair is (0, (1,1)/sqrt(2))") {
    const auto g = t::from_tsv("a b 1\n");
    const auto dec = truncated_eig_sym(MatrixView(g, ViewKind::Laplacian), opts(1, 1e-10, Which::SmallestAlgebraic));
    REQUIRE(dec.k() == 1);
    CHECK(std::abs(dec.d(0)) <= 1e-9);
    // Sign convention: the largest-magnitude entry is positive.
    CHECK(dec.u(0, 0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
    CHECK(dec.u(1, 0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
}

TEST_CASE("single-edge SVD: sigma=1 with u=e_a, v=e_b") {
    const auto g = t::from_tsv("a b 1\n");
    const auto dec = truncated_svd(MatrixView(g, ViewKind::A), opts(1));
    REQUIRE(dec.k() == 1);
    CHECK(dec.d(0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(dec.u(0, 0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(dec.u(1, 0)) <= 1e-8);
    CHECK(dec.v(1, 0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(dec.v(0, 0)) <= 1e-8);
}

TEST_CASE("truncated eigenvalues match the dense oracle spectrum") {
    const auto g = t::erdos(24, 0.2, 0.6, 51);
    const MatrixView view(g, ViewKind::B);
    const auto dec = truncated_eig_sym(view, opts(6));
    auto oracle_vals = oracle::jacobi_eig(oracle::densify(view)).values;
    std::sort(oracle_vals.begin(), oracle_vals.end(),
              [](double a, double b) { return std::abs(a) > std::abs(b); });
    for (int i = 0; i < dec.k(); ++i) CHECK(dec.d(i) == doctest::Approx(oracle_vals[static_cast<std::size_t>(i)]).epsilon(1e-8));
    // Report order is by descending magnitude, residuals are true and small.
    for (int i = 1; i < dec.k(); ++i) CHECK(std::abs(dec.d(i - 1)) >= std::abs(dec.d(i)) - 1e-12);
    double top = 0.0;
    for (int i = 0; i < dec.k(); ++i) top = std::max(top, std::abs(dec.d(i)));
    for (int i = 0; i < dec.k(); ++i) {
        CHECK(dec.residuals[static_cast<std::size_t>(i)] <= dec.tol * top * 1.0000001);
        CHECK(residual_eig(view, dec, i) == doctest::Approx(dec.residuals[static_cast<std::size_t>(i)]).epsilon(1e-6));
    }
}

TEST_CASE("truncated singular values match the dense oracle") {
    const auto g = t::erdos(24, 0.2, 0.55, 52);
    const MatrixView view(g, ViewKind::A);
    const auto dec = truncated_svd(view, opts(4));
    const auto oracle_svd = oracle::jacobi_svd(oracle::densify(view));
    for (int i = 0; i < dec.k(); ++i) CHECK(dec.d(i) == doctest::Approx(oracle_svd.s[static_cast<std::size_t>(i)]).epsilon(1e-8));
    for (int i = 1; i < dec.k(); ++i) CHECK(dec.d(i - 1) >= dec.d(i) - 1e-12);
}

TEST_CASE("full-rank decompositions reconstruct the matrix") {
    SUBCASE("SVD of A at k=n") {
        const auto g = t::erdos(12, 0.3, 0.6, 53);
        const MatrixView view(g, ViewKind::A);
        const auto dec = truncated_svd(view, opts(12));
        const auto dense = oracle::densify(view);
        double worst = 0.0;
        for (int i = 0; i < 12; ++i)
            for (int j = 0; j < 12; ++j) {
                double s = 0.0;
                for (int c = 0; c < dec.k(); ++c) s += dec.u(i, c) * dec.d(c) * dec.v(j, c);
                worst = std::max(worst, std::abs(s - dense.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))));
            }
        CHECK(worst <= 1e-8);
    }
    SUBCASE("eig of B at k=n") {
        const auto g = t::erdos(16, 0.25, 0.5, 54);
        const MatrixView view(g, ViewKind::B);
        const auto dec = truncated_eig_sym(view, opts(16));
        const auto dense = oracle::densify(view);
        double worst = 0.0;
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j) {
                double s = 0.0;
                for (int c = 0; c < dec.k(); ++c) s += dec.u(i, c) * dec.d(c) * dec.u(j, c);
                worst = std::max(worst, std::abs(s - dense.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))));
            }
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("negating every sign leaves the singular spectrum unchanged") {
    const auto g = t::erdos(18, 0.25, 0.6, 55);
    const auto neg = negated(g);
    const auto d1 = truncated_svd(MatrixView(g, ViewKind::A), opts(5));
    const auto d2 = truncated_svd(MatrixView(neg, ViewKind::A), opts(5));
    for (int i = 0; i < 5; ++i) CHECK(d1.d(i) == doctest::Approx(d2.d(i)).epsilon(1e-10));
}

TEST_CASE("basis columns are orthonormal") {
    const auto g = t::erdos(24, 0.2, 0.5, 56);
    const auto dec = truncated_eig_sym(MatrixView(g, ViewKind::B), opts(10));
    const Eigen::MatrixXd gram = dec.u.transpose() * dec.u;
    CHECK((gram - Eigen::MatrixXd::Identity(10, 10)).cwiseAbs().maxCoeff() <= 1e-8);
    const auto svd = truncated_svd(MatrixView(g, ViewKind::A), opts(10));
    CHECK((svd.u.transpose() * svd.u - Eigen::MatrixXd::Identity(10, 10)).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK((svd.v.transpose() * svd.v - Eigen::MatrixXd::Identity(10, 10)).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("captured spectrum mass grows with k and truncate takes a prefix") {
    const auto g = t::erdos(20, 0.25, 0.6, 57);
    const MatrixView view(g, ViewKind::A);
    const auto big = truncated_svd(view, opts(12));
    double prev = -1.0;
    for (const int k : {4, 8, 12}) {
        const auto part = truncate(big, k);
        REQUIRE(part.k() == k);
        double mass = 0.0;
        for (int i = 0; i < k; ++i) mass += part.d(i);
        CHECK(mass >= prev);
        prev = mass;
        // Prefix semantics, bitwise.
        CHECK((part.u - big.u.leftCols(k)).cwiseAbs().maxCoeff() == 0.0);
        CHECK((part.v - big.v.leftCols(k)).cwiseAbs().maxCoeff() == 0.0);
    }
    CHECK_THROWS_AS(truncate(big, 13), UsageError);
}

TEST_CASE("identical options give bitwise identical decompositions") {
    const auto g = t::erdos(30, 0.15, 0.6, 58);
    const auto a = truncated_svd(MatrixView(g, ViewKind::A), opts(6));
    const auto b = truncated_svd(MatrixView(g, ViewKind::A), opts(6));
    CHECK((a.u - b.u).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.v - b.v).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.d - b.d).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("invalid spectral requests raise UsageError") {
    const auto g = t::erdos(10, 0.3, 0.5, 59);
    CHECK_THROWS_AS(truncated_eig_sym(MatrixView(g, ViewKind::B), opts(11)), UsageError);
    CHECK_THROWS_AS(truncated_eig_sym(MatrixView(g, ViewKind::B), opts(0)), UsageError);
    CHECK_THROWS_AS(truncated_svd(MatrixView(g, ViewKind::A), opts(11)), UsageError);
    // The symmetric solver refuses non-symmetric views.
    CHECK_THROWS_AS(truncated_eig_sym(MatrixView(g, ViewKind::A), opts(2)), UsageError);
    CHECK_THROWS_AS(truncated_eig_sym(MatrixView(g, ViewKind::RowStochasticSigned), opts(2)), UsageError);
}

TEST_CASE("dominant left eigenvector: uniform 0.5 on the 4-clique for any damping") {
    const auto g = t::mutual_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    for (const double alpha : {0.15, 0.5, 0.85}) {
        const auto r = dominant_left_eigenvector(MatrixView(g, ViewKind::RowStochasticUnsigned), alpha);
        for (const double v : r) CHECK(v == doctest::Approx(0.5).epsilon(1e-10));
    }
}

TEST_CASE("dominant left eigenvector matches the dense Google oracle") {
    for (const std::uint64_t seed : {61ull, 62ull, 63ull}) {
        const auto g = t::erdos(10, 0.3, 0.7, seed);
        const MatrixView view(g, ViewKind::RowStochasticUnsigned);
        const auto mine = dominant_left_eigenvector(view, 0.15);
        const auto ref = oracle::dense_google_rank(oracle::densify(view), 0.15);
        CHECK(t::max_abs_diff(mine, ref) <= 1e-8);
        double norm = 0.0, sum = 0.0;
        for (const double v : mine) {
            norm += v * v;
            sum += v;
        }
        CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(sum >= 0.0);
    }
}

TEST_CASE("signed and unsigned walks coincide on an all-positive graph") {
    const auto g = t::erdos(12, 0.3, 1.0, 64);
    const auto s = dominant_left_eigenvector(MatrixView(g, ViewKind::RowStochasticSigned), 0.15);
    const auto u = dominant_left_eigenvector(MatrixView(g, ViewKind::RowStochasticUnsigned), 0.15);
    CHECK(t::max_abs_diff(s, u) <= 1e-12);
}

TEST_CASE("the power iteration limit does not depend on the start vector") {
    const auto g = t::erdos(14, 0.3, 0.8, 65);
    const MatrixView view(g, ViewKind::RowStochasticUnsigned);
    const auto from_default = dominant_left_eigenvector(view, 0.15);
    Rng rng(99);
    std::vector<double> start(14);
    for (auto& v : start) v = rng.uniform() + 0.1;
    const auto from_custom = dominant_left_eigenvector(view, 0.15, 1e-12, 100000, &start);
    CHECK(t::max_abs_diff(from_default, from_custom) <= 1e-8);
}

TEST_CASE("power iteration that cannot finish raises ConvergenceError with its last delta") {
    const auto g = t::erdos(10, 0.3, 0.7, 66);
    try {
        dominant_left_eigenvector(MatrixView(g, ViewKind::RowStochasticUnsigned), 0.15, 1e-12, 2);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.last_delta > 0.0);
    }
}

TEST_CASE("identity kernel on a single edge scores 1 forward, 0 backward") {
    const auto g = t::from_tsv("a b 1\n");
    const auto kernel =
        spectral_transform(truncated_svd(MatrixView(g, ViewKind::A), opts(1)), Transform::Identity);
    CHECK(kernel.score(0, 1) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(kernel.score(1, 0)) <= 1e-8);
}

TEST_CASE("exponential kernel at k=n matches the Taylor oracle") {
    const auto g = t::erdos(12, 0.3, 0.6, 67);
    const MatrixView view(g, ViewKind::B);
    const auto kernel = spectral_transform(truncated_eig_sym(view, opts(12)), Transform::Exponential);
    const auto ref = oracle::exp_taylor(oracle::densify(view));
    CHECK(t::max_abs_diff(kernel_matrix(kernel, 12), ref) <= 1e-6);
}

TEST_CASE("pseudoinverse kernel at k=n matches the dense pinv oracle") {
    const auto g = t::erdos(10, 0.35, 0.6, 68);
    const MatrixView view(g, ViewKind::Laplacian);
    const auto kernel = spectral_transform(
        truncated_eig_sym(view, opts(10, 1e-12, Which::SmallestAlgebraic)), Transform::Pseudoinverse);
    const auto ref = oracle::pinv(oracle::densify(view));
    CHECK(t::max_abs_diff(kernel_matrix(kernel, 10), ref) <= 1e-6);
}

TEST_CASE("pseudoinverse transform uses a relative cutoff and is an involution above it") {
    SpectralDecomposition dec;
    dec.u = Eigen::MatrixXd::Identity(3, 3);
    dec.v = dec.u;
    dec.d = Eigen::VectorXd(3);
    dec.d << 2.0, 0.5, 1e-9;
    dec.residuals = {0.0, 0.0, 0.0};
    const auto once = spectral_transform(dec, Transform::Pseudoinverse);
    CHECK(once.fd(0) == doctest::Approx(0.5));
    CHECK(once.fd(1) == doctest::Approx(2.0));
    CHECK(once.fd(2) == 0.0);  // below 1e-6 * max|d|, treated as zero

    SpectralDecomposition again = dec;
    again.d = once.fd;
    const auto twice = spectral_transform(again, Transform::Pseudoinverse);
    CHECK(std::abs(twice.fd(0) - 2.0) <= 1e-10);
    CHECK(std::abs(twice.fd(1) - 0.5) <= 1e-10);
    CHECK(twice.fd(2) == 0.0);
}

TEST_CASE("kernels over symmetric views are symmetric and score_batch agrees with score") {
    const auto g = t::erdos(14, 0.25, 0.5, 69);
    const auto kernel =
        spectral_transform(truncated_eig_sym(MatrixView(g, ViewKind::B), opts(6)), Transform::Exponential);
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId i = 0; i < 14; ++i)
        for (NodeId j = 0; j < 14; ++j) pairs.emplace_back(i, j);
    const auto batch = kernel.score_batch(pairs);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        CHECK(batch[p] == doctest::Approx(kernel.score(pairs[p].first, pairs[p].second)).epsilon(1e-12));
        CHECK(kernel.score(pairs[p].first, pairs[p].second) ==
              doctest::Approx(kernel.score(pairs[p].second, pairs[p].first)).epsilon(1e-10));
    }
}

TEST_CASE("signed_two_paths: hand chain and dense oracle") {
    SUBCASE("a->b->c with signs +,- gives (A^2)_ac = -1 and 0 backwards") {
        const auto g = t::directed_graph(3, {{0, 1, 1}, {1, 2, -1}});
        std::vector<std::pair<NodeId, NodeId>> pairs{{0, 2}, {2, 0}, {0, 1}};
        const auto got = signed_two_paths(g, pairs);
        CHECK(got[0] == doctest::Approx(-1.0));
        CHECK(got[1] == doctest::Approx(0.0));
        CHECK(got[2] == doctest::Approx(0.0));
    }
    SUBCASE("random graph against the dense square") {
        const auto g = t::erdos(20, 0.25, 0.6, 70);
        const auto sq = oracle::matrix_square(oracle::dense_from_graph(g, ViewKind::A));
        std::vector<std::pair<NodeId, NodeId>> pairs;
        Rng rng(7);
        for (int i = 0; i < 60; ++i)
            pairs.emplace_back(static_cast<NodeId>(rng.uniform_int(20)), static_cast<NodeId>(rng.uniform_int(20)));
        const auto got = signed_two_paths(g, pairs);
        for (std::size_t p = 0; p < pairs.size(); ++p)
            CHECK(got[p] == doctest::Approx(sq.at(static_cast<std::size_t>(pairs[p].first),
                                                  static_cast<std::size_t>(pairs[p].second))).epsilon(1e-12));
    }
}

TEST_CASE("transform names round-trip") {
    for (const auto tr : {Transform::Identity, Transform::Exponential, Transform::Pseudoinverse})
        CHECK(transform_from_string(to_string(tr)) == tr);
    CHECK_THROWS_AS(transform_from_string("log"), UsageError);
}
