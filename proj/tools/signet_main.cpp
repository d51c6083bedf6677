// signet — command-line front end for the signed-network toolkit.
//
// Every subcommand loads its input, runs one library operation, and emits a
// report (JSON by default) that embeds the fully resolved configuration plus
// a digest of the input bytes, so any published number can be traced back to
// the exact invocation that produced it. With --no-timestamp the output is
// byte-identical across repeated runs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "signet/cache.hpp"
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
#include "signet/util.hpp"

#ifndef SIGNET_VERSION
#define SIGNET_VERSION "0.0.0"
#endif
#ifndef SIGNET_BUILD_DIGEST
#define SIGNET_BUILD_DIGEST "unknown"
#endif

namespace {

using json = nlohmann::ordered_json;

std::string version_string() { return std::string(SIGNET_VERSION) + "+" + SIGNET_BUILD_DIGEST; }

// All numbers in reports carry at most 12 significant digits (frozen output
// contract); non-finite values serialize as null.
json jnum(double x) {
    if (!std::isfinite(x)) return nullptr;
    if (x == 0.0) return 0.0;  // canonicalize -0.0
    return signet::round_sig(x, 12);
}

json jopt(const std::optional<double>& x) { return x ? jnum(*x) : json(nullptr); }

std::string fmt_num(double x) { return jnum(x).dump(); }

std::string iso_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct RunConfig {
    std::string subcommand;
    std::string input;  // empty for gen / self-check
    std::string input_digest;
    std::string output = "-";
    std::string format;  // resolved: json | tsv | table
    double tol = 1e-8;
    std::uint64_t seed = 0;
    int threads = 0;  // 0 → all cores
    std::string cache_dir;
    bool no_timestamp = false;
};

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty() || cfg.output == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw signet::DataError("cannot open output file '" + cfg.output + "'");
    out << text;
    out.flush();
    if (!out) throw signet::DataError("failed writing output file '" + cfg.output + "'");
}

json base_config(const RunConfig& cfg) {
    json c;
    c["subcommand"] = cfg.subcommand;
    c["input"] = cfg.input.empty() ? json(nullptr) : json(cfg.input);
    c["input_digest"] = cfg.input_digest.empty() ? json(nullptr) : json(cfg.input_digest);
    c["output"] = cfg.output.empty() ? "-" : cfg.output;
    c["format"] = cfg.format;
    return c;
}

// The trailing, subcommand-independent part of the config header.
void append_common_config(json& c, const RunConfig& cfg) {
    c["tol"] = jnum(cfg.tol);
    c["seed"] = cfg.seed;
    c["threads"] = cfg.threads;
    c["threads_resolved"] = signet::resolve_threads(cfg.threads);
    c["cache"] = cfg.cache_dir.empty() ? json(nullptr) : json(cfg.cache_dir);
    c["no_timestamp"] = cfg.no_timestamp;
}

std::string json_envelope(const RunConfig& cfg, const json& config, const json& report) {
    json env;
    env["tool"] = "signet";
    env["version"] = version_string();
    if (!cfg.no_timestamp) env["timestamp"] = iso_timestamp();
    env["config"] = config;
    env["report"] = report;
    return env.dump(2) + "\n";
}

std::string header_comments(const RunConfig& cfg, const json& config) {
    std::string s = "# signet " + version_string() + "\n";
    if (!cfg.no_timestamp) s += "# timestamp: " + iso_timestamp() + "\n";
    s += "# config: " + config.dump() + "\n";
    return s;
}

std::string plain_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) flatten(v, prefix + "." + std::to_string(i++), rows);
    } else {
        rows.emplace_back(prefix, plain_value(j));
    }
}

std::string render_columns(const RunConfig& cfg, const std::vector<std::string>& columns,
                           const std::vector<std::vector<std::string>>& rows) {
    std::string s;
    if (cfg.format == "tsv") {
        s += "# columns:";
        for (const std::string& c : columns) s += (s.back() == ':' ? " " : "\t") + c;
        s += "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "\t" : "") + row[i];
            s += "\n";
        }
        return s;
    }
    // table: pad every column to its widest cell
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    const auto emit_row = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line.append(width[i] - row[i].size() + 2, ' ');
        }
        s += line + "\n";
    };
    emit_row(columns);
    for (const auto& row : rows) emit_row(row);
    return s;
}

// json: full envelope; tsv/table: config header comments + key/value listing.
void emit_scalar(const RunConfig& cfg, const json& config, const json& report) {
    if (cfg.format == "json") {
        write_output(cfg, json_envelope(cfg, config, report));
        return;
    }
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(report, "", kv);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(kv.size());
    for (auto& [k, v] : kv) rows.push_back({k, v});
    write_output(cfg, header_comments(cfg, config) + render_columns(cfg, {"key", "value"}, rows));
}

// json: envelope around `report`; tsv/table: the given tabular rows.
void emit_table(const RunConfig& cfg, const json& config, const json& report,
                const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows) {
    if (cfg.format == "json") {
        write_output(cfg, json_envelope(cfg, config, report));
        return;
    }
    write_output(cfg, header_comments(cfg, config) + render_columns(cfg, columns, rows));
}

signet::SignedDigraph load_input(RunConfig& cfg) {
    const std::string bytes = signet::read_text_file(cfg.input);
    cfg.input_digest = signet::digest_bytes(bytes);
    std::istringstream in(bytes);
    return signet::load_edge_list(in);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw signet::UsageError("bad integer list entry '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// "start:end:step" → inclusive arithmetic progression.
std::vector<double> parse_sweep(const std::string& s) {
    if (s.empty() || s == "none") return {};
    double field[3];
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t colon = s.find(':', pos);
        if ((colon == std::string::npos) != (i == 2))
            throw signet::UsageError("sweep must be start:end:step, got '" + s + "'");
        const std::string tok = s.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos);
        try {
            std::size_t used = 0;
            field[i] = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw signet::UsageError("bad sweep value '" + tok + "'");
        }
        pos = colon + 1;
    }
    const double start = field[0], end = field[1], step = field[2];
    if (!(step > 0.0)) throw signet::UsageError("sweep step must be positive");
    if (end < start) throw signet::UsageError("sweep end must be >= start");
    const double count = (end - start) / step;
    if (count > 100000.0) throw signet::UsageError("sweep has too many points");
    const int steps = static_cast<int>(std::floor(count + 1e-9));
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) values.push_back(signet::round_sig(start + i * step, 12));
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"signed social network analysis: clustering, spectral ranking, link-sign prediction"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version_string());

    RunConfig cfg;
    std::string format_flag;
    app.add_option("-o,--output", cfg.output, "write the report to this file instead of stdout");
    app.add_option("--format", format_flag, "report format (default: json; tsv for rank/degree-histogram/embed)")
        ->check(CLI::IsMember({"json", "tsv", "table"}));
    auto* tol_opt =
        app.add_option("--tol", cfg.tol, "solver tolerance (default 1e-8; 1e-12 for rank/trolls)");
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--threads", cfg.threads, "worker threads, 0 = all cores")->capture_default_str();
    app.add_option("--cache", cfg.cache_dir, "directory for the decomposition cache");
    app.add_flag("--no-timestamp", cfg.no_timestamp, "omit the timestamp so output is byte-reproducible");

    // Resolves per-subcommand defaults; called at the top of every callback.
    const auto resolve = [&](const char* sub, const char* fmt_default, double tol_default) {
        cfg.subcommand = sub;
        cfg.format = format_flag.empty() ? fmt_default : format_flag;
        if (tol_opt->count() == 0) cfg.tol = tol_default;
    };

    std::string input_path;
    int exit_code = 0;

    // --- stats -----------------------------------------------------------
    auto* stats_cmd = app.add_subcommand("stats", "node/edge counts, sign balance, degree medians");
    stats_cmd->fallthrough();
    stats_cmd->add_option("input", input_path, "signed edge list (.tsv, .tsv.gz)")->required();
    stats_cmd->callback([&] {
        resolve("stats", "json", 1e-8);
        cfg.input = input_path;
        const signet::SignedDigraph g = load_input(cfg);
        const signet::StatsReport s = signet::basic_stats(g);
        json config = base_config(cfg);
        append_common_config(config, cfg);
        json r;
        r["users"] = s.users;
        r["links"] = s.links;
        r["friend_links"] = s.friend_links;
        r["foe_links"] = s.foe_links;
        r["sparsity"] = jnum(s.sparsity);
        r["mean_link_count"] = jnum(s.mean_link_count);
        r["mean_friend_fan_count"] = jnum(s.mean_friend_fan_count);
        r["mean_foe_freak_count"] = jnum(s.mean_foe_freak_count);
        r["median_links"] = s.median_links;
        r["median_friends"] = s.median_friends;
        r["median_foes"] = s.median_foes;
        r["median_fans"] = s.median_fans;
        r["median_freaks"] = s.median_freaks;
        emit_scalar(cfg, config, r);
    });

    // --- distances ---------------------------------------------------------
    auto* dist_cmd = app.add_subcommand("distances", "diameter, radius, average distance of the largest component");
    dist_cmd->fallthrough();
    dist_cmd->add_option("input", input_path, "signed edge list")->required();
    int sample_sources = 0;
    dist_cmd->add_option("--sample", sample_sources, "BFS source sample size (0 = exact)")
        ->check(CLI::NonNegativeNumber);
    dist_cmd->callback([&] {
        resolve("distances", "json", 1e-8);
        cfg.input = input_path;
        const signet::SignedDigraph g = load_input(cfg);
        signet::DistanceOptions o;
        if (sample_sources > 0) o.sample_sources = sample_sources;
        o.seed = cfg.seed;
        o.threads = cfg.threads;
        const signet::DistanceReport d = signet::distance_stats(g, o);
        json config = base_config(cfg);
        config["sample"] = sample_sources > 0 ? json(sample_sources) : json(nullptr);
        append_common_config(config, cfg);
        json r;
        r["total_nodes"] = d.total_nodes;
        r["component_count"] = d.component_count;
        r["component_nodes"] = d.component_nodes;
        r["component_edges"] = d.component_edges;
        r["diameter"] = d.diameter;
        r["radius"] = d.radius;
        r["average_distance"] = jnum(d.average_distance);
        r["sampled"] = d.sampled;
        r["sources_used"] = d.sources_used;
        r["diameter_is_lower_bound"] = d.diameter_is_lower_bound;
        r["radius_is_upper_bound"] = d.radius_is_upper_bound;
        r["mean_degree"] = jnum(d.mean_degree);
        r["l_rand"] = jnum(d.l_rand);
        r["c_rand"] = jnum(d.c_rand);
        emit_scalar(cfg, config, r);
    });

    // --- degree-histogram ---------------------------------------------------
    auto* hist_cmd = app.add_subcommand("degree-histogram", "per-node degree distribution for one degree mode");
    hist_cmd->fallthrough();
    hist_cmd->add_option("input", input_path, "signed edge list")->required();
    std::string degree_mode = "total";
    hist_cmd->add_option("--mode", degree_mode, "in|out|total|friend|foe|fan|freak")->capture_default_str();
    hist_cmd->callback([&] {
        resolve("degree-histogram", "tsv", 1e-8);
        cfg.input = input_path;
        const signet::SignedDigraph g = load_input(cfg);
        const signet::DegreeMode mode = signet::degree_mode_from_string(degree_mode);
        const auto hist = signet::degree_histogram(g, mode);
        json config = base_config(cfg);
        config["mode"] = to_string(mode);
        append_common_config(config, cfg);
        json r;
        r["mode"] = to_string(mode);
        r["nodes"] = g.n();
        json bins = json::array();
        std::vector<std::vector<std::string>> rows;
        rows.reserve(hist.size());
        for (const auto& [degree, count] : hist) {
            bins.push_back(json::array({degree, count}));
            rows.push_back({std::to_string(degree), std::to_string(count)});
        }
        r["histogram"] = std::move(bins);
        emit_table(cfg, config, r, {"degree", "count"}, rows);
    });

    // --- clustering ----------------------------------------------------------
    auto* clus_cmd = app.add_subcommand("clustering", "signed and unsigned clustering coefficients");
    clus_cmd->fallthrough();
    clus_cmd->add_option("input", input_path, "signed edge list")->required();
    bool include_diagonal = false;
    clus_cmd->add_flag("--include-diagonal", include_diagonal,
                       "keep the closed-walk diagonal terms of the literal denominator");
    clus_cmd->callback([&] {
        resolve("clustering", "json", 1e-8);
        cfg.input = input_path;
        const signet::SignedDigraph g = load_input(cfg);
        signet::ClusteringOptions o;
        o.include_diagonal = include_diagonal;
        o.threads = cfg.threads;
        const signet::ClusteringReport rep = signet::clustering_coefficients(g, o);
        json config = base_config(cfg);
        config["include_diagonal"] = include_diagonal;
        append_common_config(config, cfg);
        json r;
        r["c"] = jopt(rep.c);
        r["c_s"] = jopt(rep.c_s);
        r["s"] = jopt(rep.s);
        r["c_dir"] = jopt(rep.c_dir);
        r["c_s_dir"] = jopt(rep.c_s_dir);
        r["s_dir"] = jopt(rep.s_dir);
        r["num_undirected"] = rep.num_undirected;
        r["num_undirected_signed"] = rep.num_undirected_signed;
        r["den_undirected"] = rep.den_undirected;
        r["num_directed"] = rep.num_directed;
        r["num_directed_signed"] = rep.num_directed_signed;
        r["den_directed"] = rep.den_directed;
        r["mean_degree"] = jnum(rep.mean_degree);
        r["c_rand"] = jnum(rep.c_rand);
        r["include_diagonal"] = rep.include_diagonal;
        emit_scalar(cfg, config, r);
    });

    // --- rank -----------------------------------------------------------------
    auto* rank_cmd = app.add_subcommand("rank", "popularity scores for one ranking measure");
    rank_cmd->fallthrough();
    rank_cmd->add_option("input", input_path, "signed edge list")->required();
    std::string measure_name;
    double alpha = 0.15, beta = 1.0;
    int top_n = 10, bottom_n = 0;
    rank_cmd->add_option("--measure", measure_name,
                         "freaks_negated|fmf|pagerank|signed_spectral|signed_symmetric|negative_rank")
        ->required();
    rank_cmd->add_option("--alpha", alpha, "teleportation probability")->capture_default_str();
    rank_cmd->add_option("--beta", beta, "negative-rank mixing weight")->capture_default_str();
    rank_cmd->add_option("--top", top_n, "list the N highest-scoring users")->capture_default_str();
    auto* bottom_opt = rank_cmd->add_option("--bottom", bottom_n, "also list the N lowest-scoring users");
    rank_cmd->callback([&] {
        resolve("rank", "tsv", 1e-12);
        cfg.input = input_path;
        const signet::SignedDigraph g = load_input(cfg);
        const signet::Measure measure = signet::measure_from_string(measure_name);
        signet::RankOptions ro;
        ro.alpha = alpha;
        ro.beta = beta;
        ro.tol = cfg.tol;
        const signet::RankVector rv = signet::compute_measure(g, measure, ro);

        std::vector<signet::NodeId> order(static_cast<std::size_t>(g.n()));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](signet::NodeId a, signet::NodeId b) {
            const double sa = rv.scores[static_cast<std::size_t>(a)], sb = rv.scores[static_cast<std::size_t>(b)];
            if (sa != sb) return sa > sb;
            return a < b;
        });
        const int top_count = std::min<int>(std::max(top_n, 0), g.n());
        const bool want_bottom = bottom_opt->count() > 0;
        const int bottom_count = want_bottom ? std::min<int>(std::max(bottom_n, 0), g.n()) : 0;

        json config = base_config(cfg);
        config["measure"] = to_string(measure);
        config["alpha"] = jnum(alpha);
        config["beta"] = jnum(beta);
        config["top"] = top_count;
        config["bottom"] = want_bottom ? json(bottom_count) : json(nullptr);
        append_common_config(config, cfg);

        json r;
        r["measure"] = to_string(measure);
        r["normalization"] = rv.normalization;
        r["nodes"] = g.n();
        json top_list = json::array();
        for (int i = 0; i < top_count; ++i) {
            const signet::NodeId v = order[static_cast<std::size_t>(i)];
            top_list.push_back(json{{"label", g.label(v)}, {"score", jnum(rv.scores[static_cast<std::size_t>(v)])}});
        }
        r["top"] = std::move(top_list);
        if (want_bottom) {
            json bottom_list = json::array();
            std::vector<signet::NodeId> asc(order.rbegin(), order.rend());
            std::sort(asc.begin(), asc.end(), [&](signet::NodeId a, signet::NodeId b) {
                const double sa = rv.scores[static_cast<std::size_t>(a)],
                             sb = rv.scores[static_cast<std::size_t>(b)];
                if (sa != sb) return sa < sb;
                return a < b;
            });
            for (int i = 0; i < bottom_count; ++i) {
                const signet::NodeId v = asc[static_cast<std::size_t>(i)];
                bottom_list.push_back(
                    json{{"label", g.label(v)}, {"score", jnum(rv.scores[static_cast<std::size_t>(v)])}});
            }
            r["bottom"] = std::move(bottom_list);
        }

        if (cfg.format == "json") {
            write_output(cfg, json_envelope(cfg, config, r));
            return;
        }
        std::string body = header_comments(cfg, config);
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i < top_count; ++i) {
            const signet::NodeId v = order[static_cast<std::size_t>(i)];
            rows.push_back({g.label(v), fmt_num(rv.scores[static_cast<std::size_t>(v)])});
        }
        body += "# top " + std::to_string(top_count) + "\n";
        body += render_columns(cfg, {"label", "score"}, rows);
        if (want_bottom) {
            rows.clear();
            for (const auto& item : r["bottom"])
                rows.push_back({item["label"].get<std::string>(), plain_value(item["score"])});
            body += "# bottom " + std::to_string(bottom_count) + "\n";
            body += render_columns(cfg, {"label", "score"}, rows);
        }
        write_output(cfg, body);
    });

    // --- trolls ------------------------------------------------------------------
    auto* troll_cmd = app.add_subcommand("trolls", "troll retrieval benchmark against a marker account");
    troll_cmd->fallthrough();
    troll_cmd->add_option("input", input_path, "signed edge list")->required();
    std::string marker_label;
    std::int64_t min_incident = 20;
    std::string beta_sweep = "0:2:0.1";
    troll_cmd->add_option("--marker", marker_label, "label of the marker account whose foes are ground truth")
        ->required();
    troll_cmd->add_option("--min-incident", min_incident, "minimum incident edges for a troll to count")->capture_default_str();
    troll_cmd
        ->add_option("--beta-sweep", beta_sweep, "negative-rank beta sweep start:end:step ('none' disables)")
        ->capture_default_str();
    troll_cmd->add_option("--alpha", alpha, "teleportation probability")->capture_default_str();
    troll_cmd->add_option("--beta", beta, "beta for the headline negative_rank entry")->capture_default_str();
    troll_cmd->callback([&] {
        resolve("trolls", "json", 1e-12);
        cfg.input = input_path;
        const signet::SignedDigraph g = load_input(cfg);
        signet::RankOptions ro;
        ro.alpha = alpha;
        ro.beta = beta;
        ro.tol = cfg.tol;
        const std::vector<double> sweep = parse_sweep(beta_sweep);
        const std::vector<signet::Measure> measures = {
            signet::Measure::FreaksNegated,   signet::Measure::Fmf,
            signet::Measure::PageRank,        signet::Measure::SignedSpectral,
            signet::Measure::SignedSymmetric, signet::Measure::NegativeRank,
        };
        const signet::TrollEvalReport rep =
            signet::evaluate_troll_prediction(g, marker_label, measures, ro, min_incident, sweep);

        json config = base_config(cfg);
        config["marker"] = marker_label;
        config["min_incident"] = min_incident;
        config["beta_sweep"] = sweep.empty() ? json(nullptr) : json(beta_sweep);
        config["alpha"] = jnum(alpha);
        config["beta"] = jnum(beta);
        append_common_config(config, cfg);

        json r;
        r["marker"] = rep.benchmark.marker_label;
        r["min_incident"] = rep.benchmark.min_incident;
        r["trolls"] = rep.benchmark.trolls.size();
        r["excluded_edges"] = rep.benchmark.excluded_edges;
        r["candidates"] = rep.candidates;
        r["random_map"] = jnum(rep.random_map);
        json maps;
        for (const signet::TrollEvalEntry& e : rep.entries) maps[to_string(e.measure)] = jnum(e.map);
        r["map"] = std::move(maps);
        json curve = json::array();
        for (const auto& [b, m] : rep.beta_curve) curve.push_back(json{{"beta", jnum(b)}, {"map", jnum(m)}});
        r["beta_sweep"] = std::move(curve);
        emit_scalar(cfg, config, r);
    });

    // --- predict ---------------------------------------------------------------
    auto* pred_cmd = app.add_subcommand("predict", "hold-out link-sign prediction accuracy");
    pred_cmd->fallthrough();
    pred_cmd->add_option("input", input_path, "signed edge list")->required();
    std::string method_name;
    int pred_k = 0;
    double test_fraction = 0.3;
    std::string sweep_k_list;
    pred_cmd->add_option("--method", method_name,
                         "always_positive|transpose|square|svd|sym|exp|sym_exp|laplacian")
        ->required();
    pred_cmd->add_option("--k", pred_k, "truncation rank for spectral methods")->capture_default_str();
    pred_cmd->add_option("--test-fraction", test_fraction, "held-out fraction of edges")->capture_default_str();
    pred_cmd->add_option("--sweep-k", sweep_k_list, "comma-separated k values; factorizes once at max(k)");
    pred_cmd->callback([&] {
        resolve("predict", "json", 1e-8);
        cfg.input = input_path;
        const signet::SignedDigraph g = load_input(cfg);
        const signet::PredictMethod method = signet::predict_method_from_string(method_name);
        const signet::EdgeSplit split = signet::split_edges(g, test_fraction, cfg.seed);

        std::vector<signet::AccuracyReport> results;
        if (!sweep_k_list.empty()) {
            const std::vector<int> ks = parse_int_list(sweep_k_list);
            results = signet::sweep_k(split.train, split.test, {method}, ks, cfg.tol, cfg.seed, cfg.threads);
        } else if (signet::is_spectral(method) && !cfg.cache_dir.empty()) {
            if (pred_k < 1) throw signet::UsageError("spectral prediction methods require k >= 1");
            const signet::KernelPlan plan = signet::kernel_plan(method);
            std::ostringstream train_bytes;
            signet::serialize_edge_list(split.train, train_bytes);
            const std::string key = signet::cache_key(signet::digest_bytes(train_bytes.str()), plan.view,
                                                      plan.kind, plan.which, pred_k, cfg.tol, cfg.seed);
            signet::SpectralDecomposition dec;
            if (auto hit = signet::cache_load(cfg.cache_dir, key)) {
                dec = *std::move(hit);
            } else {
                dec = signet::compute_plan(split.train, plan, pred_k, cfg.tol, cfg.seed);
                signet::cache_store(cfg.cache_dir, key, dec);
            }
            const signet::Predictor p(split.train, method,
                                      signet::spectral_transform(std::move(dec), plan.transform), pred_k);
            results.push_back(signet::evaluate_accuracy(p, split.test, cfg.threads));
        } else {
            const signet::Predictor p = signet::make_predictor(split.train, method, pred_k, cfg.tol, cfg.seed);
            results.push_back(signet::evaluate_accuracy(p, split.test, cfg.threads));
        }

        json config = base_config(cfg);
        config["method"] = to_string(method);
        config["k"] = pred_k;
        config["test_fraction"] = jnum(test_fraction);
        config["sweep_k"] = sweep_k_list.empty() ? json(nullptr) : json(sweep_k_list);
        append_common_config(config, cfg);

        json r;
        r["method"] = to_string(method);
        r["train_edges"] = split.train.m();
        r["test_edges"] = static_cast<std::int64_t>(split.test.size());
        json list = json::array();
        std::vector<std::vector<std::string>> rows;
        for (const signet::AccuracyReport& a : results) {
            list.push_back(json{{"method", a.method},
                                {"k", a.k},
                                {"accuracy", jnum(a.accuracy)},
                                {"correct", a.correct},
                                {"wrong", a.wrong},
                                {"ties", a.ties},
                                {"test_size", a.test_size}});
            rows.push_back({std::to_string(a.k), fmt_num(a.accuracy)});
        }
        r["results"] = std::move(list);
        emit_table(cfg, config, r, {"k", "accuracy"}, rows);
    });

    // --- embed -----------------------------------------------------------------
    auto* embed_cmd = app.add_subcommand("embed", "low-dimensional node coordinates from a decomposition");
    embed_cmd->fallthrough();
    embed_cmd->add_option("input", input_path, "signed edge list")->required();
    std::string embed_method = "laplacian";
    int embed_dims = 2;
    embed_cmd->add_option("--method", embed_method, "laplacian|svd_given|svd_received")->capture_default_str();
    embed_cmd->add_option("--k", embed_dims, "number of embedding dimensions")->capture_default_str();
    embed_cmd->callback([&] {
        resolve("embed", "tsv", 1e-8);
        cfg.input = input_path;
        const signet::SignedDigraph g = load_input(cfg);
        signet::EmbedOptions eo;
        eo.method = signet::embed_method_from_string(embed_method);
        eo.dims = embed_dims;
        eo.tol = cfg.tol;
        eo.seed = cfg.seed;
        eo.cache_dir = cfg.cache_dir;
        eo.input_digest = cfg.input_digest;
        const signet::Embedding emb = signet::embed(g, eo);

        json config = base_config(cfg);
        config["method"] = to_string(eo.method);
        config["k"] = embed_dims;
        append_common_config(config, cfg);

        json r;
        r["method"] = to_string(emb.method);
        r["dims"] = embed_dims;
        json weights = json::array();
        for (const double w : emb.axis_weights) weights.push_back(jnum(w));
        r["axis_weights"] = std::move(weights);
        json points = json::array();
        std::vector<std::string> columns = {"label"};
        for (int d = 0; d < embed_dims; ++d) columns.push_back("c" + std::to_string(d));
        std::vector<std::vector<std::string>> rows;
        rows.reserve(emb.labels.size());
        for (std::size_t v = 0; v < emb.labels.size(); ++v) {
            json coords = json::array();
            std::vector<std::string> row = {emb.labels[v]};
            for (const double c : emb.coords[v]) {
                coords.push_back(jnum(c));
                row.push_back(fmt_num(c));
            }
            points.push_back(json{{"label", emb.labels[v]}, {"coords", std::move(coords)}});
            rows.push_back(std::move(row));
        }
        r["points"] = std::move(points);
        emit_table(cfg, config, r, columns, rows);
    });

    // --- gen -------------------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("gen", "write a synthetic signed graph as a TSV edge list");
    gen_cmd->fallthrough();
    signet::SyntheticSpec spec;
    std::string gen_output;
    gen_cmd->add_option("--model", spec.model, "erdos_signed|planted_balance|planted_trolls")->required();
    gen_cmd->add_option("--n", spec.n, "number of nodes")->required();
    gen_cmd->add_option("-o,--output", gen_output, "edge list destination")->required();
    gen_cmd->add_option("--p", spec.p, "edge probability (erdos_signed)")->capture_default_str();
    gen_cmd->add_option("--sign-bias", spec.sign_bias, "probability that an edge is positive (erdos_signed)")->capture_default_str();
    gen_cmd->add_option("--groups", spec.groups, "number of planted groups (planted_balance)")->capture_default_str();
    gen_cmd->add_option("--p-in", spec.p_in, "intra-group edge probability (planted_balance)")->capture_default_str();
    gen_cmd->add_option("--p-out", spec.p_out, "inter-group edge probability (planted_balance)")->capture_default_str();
    gen_cmd->add_option("--noise", spec.noise, "sign flip probability (planted_balance)")->capture_default_str();
    gen_cmd->add_option("--n-trolls", spec.n_trolls, "number of trolls (planted_trolls)")->capture_default_str();
    gen_cmd->add_option("--p-attack", spec.p_attack, "normal→troll attack probability (planted_trolls)")->capture_default_str();
    gen_cmd->add_option("--p-background", spec.p_background, "background edge probability (planted_trolls)")->capture_default_str();
    gen_cmd->add_option("--p-background-neg", spec.p_background_neg,
                        "background negative-sign probability (planted_trolls)")->capture_default_str();
    gen_cmd->callback([&] {
        resolve("gen", "json", 1e-8);
        spec.seed = cfg.seed;
        const signet::SignedDigraph g = signet::generate(spec);
        std::ostringstream bytes;
        signet::serialize_edge_list(g, bytes);
        const std::string text = bytes.str();
        {
            std::ofstream out(gen_output, std::ios::binary);
            if (!out) throw signet::DataError("cannot open output file '" + gen_output + "'");
            out << text;
            out.flush();
            if (!out) throw signet::DataError("failed writing output file '" + gen_output + "'");
        }

        json config = base_config(cfg);
        config["model"] = spec.model;
        config["n"] = spec.n;
        if (spec.model == "erdos_signed") {
            config["p"] = jnum(spec.p);
            config["sign_bias"] = jnum(spec.sign_bias);
        } else if (spec.model == "planted_balance") {
            config["groups"] = spec.groups;
            config["p_in"] = jnum(spec.p_in);
            config["p_out"] = jnum(spec.p_out);
            config["noise"] = jnum(spec.noise);
        } else if (spec.model == "planted_trolls") {
            config["n_trolls"] = spec.n_trolls;
            config["p_attack"] = jnum(spec.p_attack);
            config["p_background"] = jnum(spec.p_background);
            config["p_background_neg"] = jnum(spec.p_background_neg);
        }
        append_common_config(config, cfg);

        json r;
        r["path"] = gen_output;
        r["digest"] = signet::digest_bytes(text);
        r["nodes"] = g.n();
        r["edges"] = g.m();
        r["positive"] = g.m_pos();
        r["negative"] = g.m_neg();
        emit_scalar(cfg, config, r);
    });

    // --- self-check ---------------------------------------------------------
    auto* check_cmd = app.add_subcommand("self-check", "run every production-vs-oracle cross-check");
    check_cmd->fallthrough();
    check_cmd->callback([&] {
        resolve("self-check", "json", 1e-8);
        std::ostringstream log;
        const int failures = signet::run_self_check(log);
        std::string text = log.str();
        const std::size_t checks = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
        text += "self-check: " + std::to_string(checks - static_cast<std::size_t>(failures)) + "/" +
                std::to_string(checks) + " checks passed\n";
        write_output(cfg, text);
        if (failures > 0) {
            std::cerr << "self-check failed: " << failures << " check(s)\n";
            exit_code = 2;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const signet::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const signet::ConvergenceError& e) {
        std::cerr << "did not converge: " << e.what() << '\n';
        return 3;
    } catch (const signet::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return exit_code;
}
