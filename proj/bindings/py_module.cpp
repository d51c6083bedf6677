// _signet — Python bindings for the main toolkit operations.
//
// The module mirrors the CLI surface: graph I/O and generation, clustering
// coefficients, distance statistics, ranking measures, troll retrieval,
// link-sign prediction, embeddings, and the oracle self-check. Reports are
// plain dicts/lists so callers need no wrapper types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "signet/clustering.hpp"
#include "signet/distances.hpp"
#include "signet/embed.hpp"
#include "signet/errors.hpp"
#include "signet/generate.hpp"
#include "signet/graph.hpp"
#include "signet/io.hpp"
#include "signet/linkpred.hpp"
#include "signet/ranking.hpp"
#include "signet/selfcheck.hpp"
#include "signet/spectral.hpp"

namespace py = pybind11;

namespace {

using signet::SignedDigraph;

std::optional<double> opt(const std::optional<double>& x) { return x; }

py::dict clustering_dict(const signet::ClusteringReport& r) {
    py::dict d;
    d["c"] = opt(r.c);
    d["c_s"] = opt(r.c_s);
    d["s"] = opt(r.s);
    d["c_dir"] = opt(r.c_dir);
    d["c_s_dir"] = opt(r.c_s_dir);
    d["s_dir"] = opt(r.s_dir);
    d["num_undirected"] = r.num_undirected;
    d["num_undirected_signed"] = r.num_undirected_signed;
    d["den_undirected"] = r.den_undirected;
    d["num_directed"] = r.num_directed;
    d["num_directed_signed"] = r.num_directed_signed;
    d["den_directed"] = r.den_directed;
    d["mean_degree"] = r.mean_degree;
    d["c_rand"] = r.c_rand;
    d["include_diagonal"] = r.include_diagonal;
    return d;
}

py::dict accuracy_dict(const signet::AccuracyReport& a) {
    py::dict d;
    d["method"] = a.method;
    d["k"] = a.k;
    d["accuracy"] = a.accuracy;
    d["correct"] = a.correct;
    d["wrong"] = a.wrong;
    d["ties"] = a.ties;
    d["test_size"] = a.test_size;
    return d;
}

}  // namespace

PYBIND11_MODULE(_signet, m) {
    m.doc() = "Signed social network analysis: clustering, spectral ranking, link-sign prediction";

    py::register_exception<signet::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    py::class_<SignedDigraph>(m, "Graph", "Immutable signed directed graph")
        .def_property_readonly("n", &SignedDigraph::n)
        .def_property_readonly("m", &SignedDigraph::m)
        .def_property_readonly("m_pos", &SignedDigraph::m_pos)
        .def_property_readonly("m_neg", &SignedDigraph::m_neg)
        .def("label", &SignedDigraph::label, py::arg("node"))
        .def("index_of", &SignedDigraph::index_of, py::arg("label"))
        .def("edge_sign", &SignedDigraph::edge_sign, py::arg("src"), py::arg("dst"))
        .def("out_degree", &SignedDigraph::out_degree, py::arg("node"))
        .def("in_degree", &SignedDigraph::in_degree, py::arg("node"))
        .def("friend_count", &SignedDigraph::friend_count, py::arg("node"))
        .def("foe_count", &SignedDigraph::foe_count, py::arg("node"))
        .def("fan_count", &SignedDigraph::fan_count, py::arg("node"))
        .def("freak_count", &SignedDigraph::freak_count, py::arg("node"))
        .def("edges",
             [](const SignedDigraph& g) {
                 std::vector<std::tuple<std::string, std::string, int>> out;
                 out.reserve(static_cast<std::size_t>(g.m()));
                 for (const signet::Edge& e : g.edges())
                     out.emplace_back(g.label(e.src), g.label(e.dst), static_cast<int>(e.sign));
                 return out;
             })
        .def("__repr__", [](const SignedDigraph& g) {
            std::ostringstream os;
            os << "Graph(n=" << g.n() << ", m=" << g.m() << ", m_pos=" << g.m_pos() << ", m_neg=" << g.m_neg()
               << ")";
            return os.str();
        });

    m.def(
        "load",
        [](const std::string& path) { return signet::load_edge_list_file(path); },
        py::arg("path"), "Parse a (optionally gzip-compressed) signed TSV edge list");

    m.def(
        "loads",
        [](const std::string& text) {
            std::istringstream in(text);
            return signet::load_edge_list(in);
        },
        py::arg("text"), "Parse a signed TSV edge list from a string");

    m.def(
        "dumps",
        [](const SignedDigraph& g) {
            std::ostringstream os;
            signet::serialize_edge_list(g, os);
            return os.str();
        },
        py::arg("graph"), "Serialize a graph as the canonical TSV edge list");

    m.def(
        "from_edges",
        [](std::vector<std::string> labels, const std::vector<std::tuple<int, int, int>>& edges) {
            std::vector<signet::Edge> es;
            es.reserve(edges.size());
            for (const auto& [u, v, s] : edges)
                es.push_back({static_cast<signet::NodeId>(u), static_cast<signet::NodeId>(v),
                              static_cast<std::int8_t>(s)});
            return SignedDigraph::from_edges(std::move(labels), es);
        },
        py::arg("labels"), py::arg("edges"), "Build a graph from (src, dst, sign) index triples");

    m.def(
        "generate",
        [](const std::string& model, signet::NodeId n, std::uint64_t seed, double p, double sign_bias, int groups,
           double p_in, double p_out, double noise, signet::NodeId n_trolls, double p_attack, double p_background,
           double p_background_neg) {
            signet::SyntheticSpec spec;
            spec.model = model;
            spec.n = n;
            spec.seed = seed;
            spec.p = p;
            spec.sign_bias = sign_bias;
            spec.groups = groups;
            spec.p_in = p_in;
            spec.p_out = p_out;
            spec.noise = noise;
            spec.n_trolls = n_trolls;
            spec.p_attack = p_attack;
            spec.p_background = p_background;
            spec.p_background_neg = p_background_neg;
            return signet::generate(spec);
        },
        py::arg("model"), py::arg("n"), py::arg("seed") = 0, py::arg("p") = 0.01, py::arg("sign_bias") = 0.8,
        py::arg("groups") = 2, py::arg("p_in") = 0.1, py::arg("p_out") = 0.1, py::arg("noise") = 0.0,
        py::arg("n_trolls") = 0, py::arg("p_attack") = 0.05, py::arg("p_background") = 0.01,
        py::arg("p_background_neg") = 0.0,
        "Deterministic synthetic graph (erdos_signed | planted_balance | planted_trolls)");

    m.def(
        "stats",
        [](const SignedDigraph& g) {
            const signet::StatsReport s = signet::basic_stats(g);
            py::dict d;
            d["users"] = s.users;
            d["links"] = s.links;
            d["friend_links"] = s.friend_links;
            d["foe_links"] = s.foe_links;
            d["sparsity"] = s.sparsity;
            d["mean_link_count"] = s.mean_link_count;
            d["mean_friend_fan_count"] = s.mean_friend_fan_count;
            d["mean_foe_freak_count"] = s.mean_foe_freak_count;
            d["median_links"] = s.median_links;
            d["median_friends"] = s.median_friends;
            d["median_foes"] = s.median_foes;
            d["median_fans"] = s.median_fans;
            d["median_freaks"] = s.median_freaks;
            return d;
        },
        py::arg("graph"), "Corpus-level summary statistics");

    m.def(
        "clustering",
        [](const SignedDigraph& g, bool include_diagonal, int threads) {
            signet::ClusteringOptions o;
            o.include_diagonal = include_diagonal;
            o.threads = threads;
            return clustering_dict(signet::clustering_coefficients(g, o));
        },
        py::arg("graph"), py::arg("include_diagonal") = false, py::arg("threads") = 0,
        "Signed and unsigned clustering coefficients");

    m.def(
        "distances",
        [](const SignedDigraph& g, std::optional<int> sample, std::uint64_t seed, int threads) {
            signet::DistanceOptions o;
            o.sample_sources = sample;
            o.seed = seed;
            o.threads = threads;
            const signet::DistanceReport r = signet::distance_stats(g, o);
            py::dict d;
            d["total_nodes"] = r.total_nodes;
            d["component_count"] = r.component_count;
            d["component_nodes"] = r.component_nodes;
            d["component_edges"] = r.component_edges;
            d["diameter"] = r.diameter;
            d["radius"] = r.radius;
            d["average_distance"] = r.average_distance;
            d["sampled"] = r.sampled;
            d["sources_used"] = r.sources_used;
            d["diameter_is_lower_bound"] = r.diameter_is_lower_bound;
            d["radius_is_upper_bound"] = r.radius_is_upper_bound;
            d["mean_degree"] = r.mean_degree;
            d["l_rand"] = r.l_rand;
            d["c_rand"] = r.c_rand;
            return d;
        },
        py::arg("graph"), py::arg("sample") = std::nullopt, py::arg("seed") = 0, py::arg("threads") = 0,
        "Distance statistics of the largest connected component");

    m.def(
        "rank",
        [](const SignedDigraph& g, const std::string& measure, double alpha, double beta, double tol) {
            signet::RankOptions o;
            o.alpha = alpha;
            o.beta = beta;
            o.tol = tol;
            const signet::RankVector rv = signet::compute_measure(g, signet::measure_from_string(measure), o);
            py::dict d;
            d["measure"] = to_string(rv.measure);
            d["normalization"] = rv.normalization;
            d["scores"] = rv.scores;
            return d;
        },
        py::arg("graph"), py::arg("measure"), py::arg("alpha") = 0.15, py::arg("beta") = 1.0,
        py::arg("tol") = 1e-12, "Per-node scores for one ranking measure, in node-index order");

    m.def(
        "troll_eval",
        [](const SignedDigraph& g, const std::string& marker, std::int64_t min_incident, double alpha, double beta,
           double tol, const std::vector<double>& beta_sweep) {
            signet::RankOptions o;
            o.alpha = alpha;
            o.beta = beta;
            o.tol = tol;
            const std::vector<signet::Measure> measures = {
                signet::Measure::FreaksNegated,   signet::Measure::Fmf,
                signet::Measure::PageRank,        signet::Measure::SignedSpectral,
                signet::Measure::SignedSymmetric, signet::Measure::NegativeRank,
            };
            const signet::TrollEvalReport r =
                signet::evaluate_troll_prediction(g, marker, measures, o, min_incident, beta_sweep);
            py::dict d;
            d["marker"] = r.benchmark.marker_label;
            d["min_incident"] = r.benchmark.min_incident;
            d["trolls"] = r.benchmark.trolls.size();
            d["excluded_edges"] = r.benchmark.excluded_edges;
            d["candidates"] = r.candidates;
            d["random_map"] = r.random_map;
            py::dict maps;
            for (const signet::TrollEvalEntry& e : r.entries) maps[to_string(e.measure).c_str()] = e.map;
            d["map"] = maps;
            d["beta_sweep"] = r.beta_curve;
            return d;
        },
        py::arg("graph"), py::arg("marker"), py::arg("min_incident") = 20, py::arg("alpha") = 0.15,
        py::arg("beta") = 1.0, py::arg("tol") = 1e-12, py::arg("beta_sweep") = std::vector<double>{},
        "MAP of every ranking measure on the marker-account troll benchmark");

    m.def(
        "predict",
        [](const SignedDigraph& g, const std::string& method, int k, double test_fraction, std::uint64_t seed,
           double tol, int threads) {
            const signet::EdgeSplit split = signet::split_edges(g, test_fraction, seed);
            const signet::Predictor p =
                signet::make_predictor(split.train, signet::predict_method_from_string(method), k, tol, seed);
            py::dict d = accuracy_dict(signet::evaluate_accuracy(p, split.test, threads));
            d["train_edges"] = split.train.m();
            d["test_fraction"] = test_fraction;
            d["seed"] = seed;
            return d;
        },
        py::arg("graph"), py::arg("method"), py::arg("k") = 0, py::arg("test_fraction") = 0.3, py::arg("seed") = 0,
        py::arg("tol") = 1e-8, py::arg("threads") = 0, "Hold-out link-sign prediction accuracy");

    m.def(
        "sweep_k",
        [](const SignedDigraph& g, const std::string& method, const std::vector<int>& k_values,
           double test_fraction, std::uint64_t seed, double tol, int threads) {
            const signet::EdgeSplit split = signet::split_edges(g, test_fraction, seed);
            const auto reports = signet::sweep_k(split.train, split.test,
                                                 {signet::predict_method_from_string(method)}, k_values, tol, seed,
                                                 threads);
            py::list out;
            for (const signet::AccuracyReport& a : reports) out.append(accuracy_dict(a));
            return out;
        },
        py::arg("graph"), py::arg("method"), py::arg("k_values"), py::arg("test_fraction") = 0.3,
        py::arg("seed") = 0, py::arg("tol") = 1e-8, py::arg("threads") = 0,
        "Accuracy of one spectral method across truncation ranks (one factorization)");

    m.def(
        "embed",
        [](const SignedDigraph& g, const std::string& method, int dims, double tol, std::uint64_t seed) {
            signet::EmbedOptions o;
            o.method = signet::embed_method_from_string(method);
            o.dims = dims;
            o.tol = tol;
            o.seed = seed;
            const signet::Embedding e = signet::embed(g, o);
            py::dict d;
            d["method"] = to_string(e.method);
            d["labels"] = e.labels;
            d["coords"] = e.coords;
            d["axis_weights"] = e.axis_weights;
            return d;
        },
        py::arg("graph"), py::arg("method") = "laplacian", py::arg("dims") = 2, py::arg("tol") = 1e-8,
        py::arg("seed") = 0, "Low-dimensional node coordinates from a spectral decomposition");

    m.def(
        "signed_two_paths",
        [](const SignedDigraph& g, const std::vector<std::pair<signet::NodeId, signet::NodeId>>& pairs) {
            return signet::signed_two_paths(g, pairs);
        },
        py::arg("graph"), py::arg("pairs"), "(A²)_{uv} for each query pair, without forming A²");

    m.def(
        "self_check",
        []() {
            std::ostringstream log;
            const int failures = signet::run_self_check(log);
            return py::make_tuple(failures, log.str());
        },
        "Run every production-vs-oracle cross-check; returns (failures, log)");

#ifdef SIGNET_VERSION
    m.attr("__version__") = SIGNET_VERSION;
#else
    m.attr("__version__") = "0.0.0";
#endif
}
