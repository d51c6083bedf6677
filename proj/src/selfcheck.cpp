#include "signet/selfcheck.hpp"

#include <cmath>
#include <string>
#include <tuple>
#include <vector>

#include "signet/clustering.hpp"
#include "signet/errors.hpp"
#include "signet/generate.hpp"
#include "signet/graph.hpp"
#include "signet/linkpred.hpp"
#include "signet/matrix_view.hpp"
#include "signet/oracle.hpp"
#include "signet/ranking.hpp"
#include "signet/spectral.hpp"

namespace signet {

namespace {

SignedDigraph tiny(std::vector<std::string> labels, const std::vector<std::tuple<int, int, int>>& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [u, v, s] : edges)
        es.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), static_cast<std::int8_t>(s)});
    return SignedDigraph::from_edges(std::move(labels), es);
}

double max_abs_diff(const oracle::DenseMatrix& a, const oracle::DenseMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
    return worst;
}

}  // namespace

int run_self_check(std::ostream& log) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        if (ok) {
            log << "ok   " << name << "\n";
        } else {
            ++failures;
            log << "FAIL " << name << (detail.empty() ? "" : " — " + detail) << "\n";
        }
    };
    const auto near = [](double a, double b, double tol) { return std::abs(a - b) <= tol; };

    // --- analytic clustering fixed points -------------------------------
    {
        const auto tri = tiny({"a", "b", "c"}, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}, {0, 2, 1}, {2, 0, 1}});
        const auto r = clustering_coefficients(tri);
        check("positive triangle C=C_s=S=1",
              r.c && near(*r.c, 1.0, 0.0) && r.c_s && near(*r.c_s, 1.0, 0.0) && r.s && near(*r.s, 1.0, 0.0));
        const auto rd = clustering_coefficients(tri, {.include_diagonal = true});
        check("positive triangle, literal diagonal rule C=0.5", rd.c && near(*rd.c, 0.5, 0.0));

        const auto neg =
            tiny({"a", "b", "c"}, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}, {0, 2, -1}, {2, 0, -1}});
        const auto rn = clustering_coefficients(neg);
        check("one-negative triangle C=1, C_s=−1, S=−1",
              rn.c && near(*rn.c, 1.0, 0.0) && rn.c_s && near(*rn.c_s, -1.0, 0.0) && rn.s && near(*rn.s, -1.0, 0.0));

        const auto cyc = tiny({"a", "b", "c"}, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
        const auto rc = clustering_coefficients(cyc);
        check("directed positive 3-cycle C_dir=0", rc.c_dir && *rc.c_dir == 0.0);
    }

    // --- clustering enumeration vs dense formulas ------------------------
    {
        bool all_ok = true;
        std::string diff;
        for (std::uint64_t seed = 0; seed < 10 && all_ok; ++seed) {
            SyntheticSpec spec;
            spec.model = "erdos_signed";
            spec.n = 12 + static_cast<NodeId>(4 * seed);
            spec.p = 0.15;
            spec.sign_bias = 0.6;
            spec.seed = seed;
            all_ok = clustering_oracle_check(generate(spec), &diff);
        }
        check("clustering enumeration equals dense formulas (10 random graphs)", all_ok, diff);
    }

    // --- matrix views against independent dense builds -------------------
    {
        double worst = 0.0;
        SyntheticSpec spec;
        spec.model = "erdos_signed";
        spec.n = 24;
        spec.p = 0.2;
        spec.sign_bias = 0.55;
        spec.seed = 7;
        const SignedDigraph g = generate(spec);
        for (const ViewKind kind :
             {ViewKind::A, ViewKind::AAbs, ViewKind::ATranspose, ViewKind::B, ViewKind::BAbs,
              ViewKind::RowStochasticUnsigned, ViewKind::RowStochasticSigned, ViewKind::RowStochasticSymmetric,
              ViewKind::Laplacian}) {
            const MatrixView view(g, kind);
            worst = std::max(worst, max_abs_diff(oracle::densify(view), oracle::dense_from_graph(g, kind)));
        }
        check("all matrix view kinds equal dense construction", worst <= 1e-12,
              "max deviation " + std::to_string(worst));

        const auto pair_graph = tiny({"a", "b"}, {{0, 1, 1}});
        const auto lap = oracle::densify(MatrixView(pair_graph, ViewKind::Laplacian));
        check("laplacian of single positive edge is [[1,−1],[−1,1]]",
              lap.at(0, 0) == 1.0 && lap.at(0, 1) == -1.0 && lap.at(1, 0) == -1.0 && lap.at(1, 1) == 1.0);
    }

    // --- dense oracle fixed points ---------------------------------------
    {
        oracle::DenseMatrix zero(5, 5);
        const auto e = oracle::exp_taylor(zero);
        check("exp_taylor(0) = I", max_abs_diff(e, oracle::DenseMatrix::identity(5)) == 0.0);

        oracle::DenseMatrix lap(2, 2);
        lap.at(0, 0) = 1.0;
        lap.at(0, 1) = -1.0;
        lap.at(1, 0) = -1.0;
        lap.at(1, 1) = 1.0;
        const auto k = oracle::pinv(lap);
        const bool ok = near(k.at(0, 0), 0.25, 1e-12) && near(k.at(0, 1), -0.25, 1e-12) &&
                        near(k.at(1, 0), -0.25, 1e-12) && near(k.at(1, 1), 0.25, 1e-12);
        check("pinv([[1,−1],[−1,1]]) = ±0.25 matrix", ok);
    }

    // --- spectral ranking vs dense power iteration -----------------------
    {
        double worst = 0.0;
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            SyntheticSpec spec;
            spec.model = "erdos_signed";
            spec.n = 10 + static_cast<NodeId>(6 * seed);
            spec.p = 0.25;
            spec.sign_bias = 0.75;
            spec.seed = seed;
            const SignedDigraph g = generate(spec);
            const RankOptions opt{.alpha = 0.15, .tol = 1e-13};
            const struct {
                ViewKind kind;
                RankVector rv;
            } cases[] = {
                {ViewKind::RowStochasticUnsigned, pagerank(g, opt)},
                {ViewKind::RowStochasticSigned, signed_spectral_rank(g, opt)},
                {ViewKind::RowStochasticSymmetric, signed_symmetric_rank(g, opt)},
            };
            for (const auto& c : cases) {
                const auto ref =
                    oracle::dense_google_rank(oracle::dense_from_graph(g, c.kind), 0.15, 1e-13, 200000);
                for (std::size_t i = 0; i < ref.size(); ++i)
                    worst = std::max(worst, std::abs(ref[i] - c.rv.scores[i]));
            }
        }
        check("PR/SR/SSR match dense google-matrix oracle", worst <= 1e-8, "max deviation " + std::to_string(worst));
    }

    // --- full-rank decompositions reconstruct the matrix -----------------
    {
        SyntheticSpec spec;
        spec.model = "erdos_signed";
        spec.n = 16;
        spec.p = 0.25;
        spec.sign_bias = 0.6;
        spec.seed = 11;
        const SignedDigraph g = generate(spec);
        const auto n = static_cast<std::size_t>(g.n());

        SpectralOptions sopt;
        sopt.k = static_cast<int>(n);
        sopt.tol = 1e-10;
        const MatrixView b(g, ViewKind::B);
        const auto eig = truncated_eig_sym(b, sopt);
        oracle::DenseMatrix recon(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int c = 0; c < eig.k(); ++c)
                    acc += eig.u(static_cast<Eigen::Index>(i), c) * eig.d[c] * eig.u(static_cast<Eigen::Index>(j), c);
                recon.at(i, j) = acc;
            }
        const double worst_eig = max_abs_diff(recon, oracle::dense_from_graph(g, ViewKind::B));
        check("full-rank eig reconstructs B", worst_eig <= 1e-8, "max deviation " + std::to_string(worst_eig));

        const MatrixView a(g, ViewKind::A);
        const auto svd = truncated_svd(a, sopt);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int c = 0; c < svd.k(); ++c)
                    acc += svd.u(static_cast<Eigen::Index>(i), c) * svd.d[c] * svd.v(static_cast<Eigen::Index>(j), c);
                recon.at(i, j) = acc;
            }
        const double worst_svd = max_abs_diff(recon, oracle::dense_from_graph(g, ViewKind::A));
        check("full-rank svd reconstructs A", worst_svd <= 1e-8, "max deviation " + std::to_string(worst_svd));

        // exp kernel on B vs the Taylor-series oracle
        const auto exp_kernel = spectral_transform(eig, Transform::Exponential);
        const auto exp_ref = oracle::exp_taylor(oracle::dense_from_graph(g, ViewKind::B));
        double worst_exp = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                worst_exp = std::max(worst_exp, std::abs(exp_kernel.score(static_cast<NodeId>(i),
                                                                          static_cast<NodeId>(j)) -
                                                         exp_ref.at(i, j)));
        check("exp kernel matches Taylor oracle", worst_exp <= 1e-6, "max deviation " + std::to_string(worst_exp));

        // laplacian pseudoinverse kernel vs dense pinv
        SpectralOptions lopt = sopt;
        lopt.which = Which::SmallestAlgebraic;
        const MatrixView l(g, ViewKind::Laplacian);
        const auto lap_kernel = spectral_transform(truncated_eig_sym(l, lopt), Transform::Pseudoinverse);
        const auto pinv_ref = oracle::pinv(oracle::dense_from_graph(g, ViewKind::Laplacian));
        double worst_lap = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                worst_lap = std::max(worst_lap, std::abs(lap_kernel.score(static_cast<NodeId>(i),
                                                                          static_cast<NodeId>(j)) -
                                                         pinv_ref.at(i, j)));
        check("laplacian kernel matches dense pseudoinverse", worst_lap <= 1e-6,
              "max deviation " + std::to_string(worst_lap));
    }

    // --- signed two-paths vs dense square ---------------------------------
    {
        SyntheticSpec spec;
        spec.model = "erdos_signed";
        spec.n = 20;
        spec.p = 0.2;
        spec.sign_bias = 0.5;
        spec.seed = 3;
        const SignedDigraph g = generate(spec);
        const auto sq = oracle::matrix_square(oracle::dense_from_graph(g, ViewKind::A));
        std::vector<std::pair<NodeId, NodeId>> pairs;
        for (NodeId u = 0; u < g.n(); ++u)
            for (NodeId v = 0; v < g.n(); ++v) pairs.emplace_back(u, v);
        const auto got = signed_two_paths(g, pairs);
        bool ok = true;
        for (std::size_t i = 0; i < pairs.size() && ok; ++i)
            ok = got[i] == sq.at(static_cast<std::size_t>(pairs[i].first), static_cast<std::size_t>(pairs[i].second));
        check("signed_two_paths equals dense A²", ok);
    }

    // --- ranking metric sanity --------------------------------------------
    {
        check("expected random AP (N=2, R=1) = 0.75", near(expected_random_ap(2, 1), 0.75, 1e-12));
        const std::vector<NodeId> ranked{4, 2, 7, 1};
        check("AP with relevant items at ranks 1,2 is 1.0",
              near(mean_average_precision(ranked, {4, 2}), 1.0, 0.0));
        check("AP with single relevant item at rank 2 is 0.5",
              near(mean_average_precision(ranked, {2}), 0.5, 0.0));
    }

    // --- split + generators ------------------------------------------------
    {
        SyntheticSpec spec;
        spec.model = "planted_balance";
        spec.n = 40;
        spec.groups = 2;
        spec.p_in = 0.4;
        spec.p_out = 0.4;
        spec.noise = 0.0;
        spec.seed = 5;
        const SignedDigraph g = generate(spec);
        const auto r = clustering_coefficients(g);
        check("planted_balance(noise=0) is perfectly balanced (S=1)", r.s && near(*r.s, 1.0, 0.0));

        const EdgeSplit split = split_edges(g, 0.3, 9);
        const auto expected = static_cast<std::int64_t>(std::llround(0.3 * static_cast<double>(g.m())));
        check("split holds out round(0.3·m) edges",
              static_cast<std::int64_t>(split.test.size()) == expected &&
                  split.train.m() + static_cast<EdgeIdx>(split.test.size()) == g.m());

        SyntheticSpec trolls;
        trolls.model = "planted_trolls";
        trolls.n = 60;
        trolls.n_trolls = 6;
        trolls.p_attack = 1.0;
        trolls.p_background = 0.2;
        trolls.p_background_neg = 0.0;
        trolls.seed = 2;
        const SignedDigraph tg = generate(trolls);
        const RankVector fr = freaks_negated(tg);
        std::vector<NodeId> candidates;
        for (NodeId v = 0; v < tg.n(); ++v) candidates.push_back(v);
        std::unordered_set<NodeId> relevant;
        for (NodeId v = tg.n() - 6; v < tg.n(); ++v) relevant.insert(v);
        const double map = mean_average_precision(rank_ascending(fr.scores, candidates), relevant);
        check("planted trolls recovered by freak count (MAP=1)", near(map, 1.0, 0.0));
    }

    return failures;
}

}  // namespace signet
