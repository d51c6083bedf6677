#include "signet/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <istream>
#include <ostream>
#include <sstream>

#include "signet/errors.hpp"
#include "signet/io.hpp"
#include "signet/util.hpp"

namespace signet {

namespace {

// Packed ordered-pair key for the dedup map.
inline std::uint64_t pair_key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
}

}  // namespace

SignedDigraph SignedDigraph::from_edges(std::vector<std::string> labels, const std::vector<Edge>& edges) {
    SignedDigraph g;
    g.labels_ = std::move(labels);
    const auto n = static_cast<std::size_t>(g.labels_.size());
    g.index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = g.index_.emplace(g.labels_[i], static_cast<NodeId>(i));
        if (!inserted) throw DataError("duplicate node label: " + g.labels_[i]);
    }

    g.m_ = static_cast<EdgeIdx>(edges.size());
    g.out_off_.assign(n + 1, 0);
    g.in_off_.assign(n + 1, 0);
    g.pos_out_.assign(n, 0);
    g.pos_in_.assign(n, 0);
    for (const Edge& e : edges) {
        if (e.src < 0 || e.dst < 0 || static_cast<std::size_t>(e.src) >= n || static_cast<std::size_t>(e.dst) >= n)
            throw DataError("edge endpoint out of range");
        if (e.src == e.dst) throw DataError("self-loop in edge set");
        if (e.sign != 1 && e.sign != -1) throw DataError("edge weight must be -1 or +1");
        ++g.out_off_[static_cast<std::size_t>(e.src) + 1];
        ++g.in_off_[static_cast<std::size_t>(e.dst) + 1];
        if (e.sign > 0) {
            ++g.m_pos_;
            ++g.pos_out_[static_cast<std::size_t>(e.src)];
            ++g.pos_in_[static_cast<std::size_t>(e.dst)];
        } else {
            ++g.m_neg_;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        g.out_off_[i + 1] += g.out_off_[i];
        g.in_off_[i + 1] += g.in_off_[i];
    }

    g.out_nbr_.resize(static_cast<std::size_t>(g.m_));
    g.out_sign_.resize(static_cast<std::size_t>(g.m_));
    g.in_nbr_.resize(static_cast<std::size_t>(g.m_));
    g.in_sign_.resize(static_cast<std::size_t>(g.m_));
    std::vector<EdgeIdx> out_pos(g.out_off_.begin(), g.out_off_.end() - 1);
    std::vector<EdgeIdx> in_pos(g.in_off_.begin(), g.in_off_.end() - 1);
    for (const Edge& e : edges) {
        const auto po = static_cast<std::size_t>(out_pos[static_cast<std::size_t>(e.src)]++);
        g.out_nbr_[po] = e.dst;
        g.out_sign_[po] = e.sign;
        const auto pi = static_cast<std::size_t>(in_pos[static_cast<std::size_t>(e.dst)]++);
        g.in_nbr_[pi] = e.src;
        g.in_sign_[pi] = e.sign;
    }

    // Sort each adjacency row by target and reject duplicate ordered pairs.
    auto sort_rows = [](const std::vector<EdgeIdx>& off, std::vector<NodeId>& nbr, std::vector<std::int8_t>& sgn) {
        std::vector<std::pair<NodeId, std::int8_t>> row;
        for (std::size_t u = 0; u + 1 < off.size(); ++u) {
            const auto lo = static_cast<std::size_t>(off[u]);
            const auto hi = static_cast<std::size_t>(off[u + 1]);
            row.clear();
            for (std::size_t i = lo; i < hi; ++i) row.emplace_back(nbr[i], sgn[i]);
            std::sort(row.begin(), row.end());
            for (std::size_t i = 1; i < row.size(); ++i)
                if (row[i].first == row[i - 1].first) throw DataError("duplicate ordered pair in edge set");
            for (std::size_t i = lo; i < hi; ++i) {
                nbr[i] = row[i - lo].first;
                sgn[i] = row[i - lo].second;
            }
        }
    };
    sort_rows(g.out_off_, g.out_nbr_, g.out_sign_);
    sort_rows(g.in_off_, g.in_nbr_, g.in_sign_);
    return g;
}

std::optional<NodeId> SignedDigraph::index_of(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int SignedDigraph::edge_sign(NodeId u, NodeId v) const {
    const auto nbrs = out_neighbors(u);
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    if (it == nbrs.end() || *it != v) return 0;
    return out_signs(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

SignedDigraph SignedDigraph::remove_incident(NodeId node) const {
    std::vector<Edge> kept;
    kept.reserve(static_cast<std::size_t>(m_));
    for (NodeId u = 0; u < n(); ++u) {
        if (u == node) continue;
        const auto nbrs = out_neighbors(u);
        const auto sgns = out_signs(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (nbrs[i] == node) continue;
            kept.push_back({u, nbrs[i], sgns[i]});
        }
    }
    return from_edges(labels_, kept);
}

std::vector<Edge> SignedDigraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (NodeId u = 0; u < n(); ++u) {
        const auto nbrs = out_neighbors(u);
        const auto sgns = out_signs(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) out.push_back({u, nbrs[i], sgns[i]});
    }
    return out;
}

namespace {

// Splits on runs of tabs/spaces. KONECT-style files use either.
int split_fields(const std::string& line, std::string out[3]) {
    int count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == '\t' || line[i] == ' ' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != '\t' && line[j] != ' ' && line[j] != '\r') ++j;
        if (count < 3) out[count] = line.substr(i, j - i);
        ++count;
        i = j;
    }
    return count;
}

bool parse_sign(const std::string& s, std::int8_t& sign) {
    if (s == "1" || s == "+1") {
        sign = 1;
        return true;
    }
    if (s == "-1") {
        sign = -1;
        return true;
    }
    return false;
}

}  // namespace

SignedDigraph load_edge_list(std::istream& in, const LoadOptions& options) {
    auto warn = options.warn ? options.warn : [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; };

    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    auto intern = [&](const std::string& s) -> NodeId {
        const auto it = index.find(s);
        if (it != index.end()) return it->second;
        const auto id = static_cast<NodeId>(labels.size());
        labels.push_back(s);
        index.emplace(s, id);
        return id;
    };

    // Ordered-pair -> slot in `records`; duplicate policy applied per pair.
    std::vector<Edge> records;
    std::unordered_map<std::uint64_t, std::size_t> slot;

    std::string line;
    std::string fields[3];
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#' || line[0] == '%') continue;
        const int nf = split_fields(line, fields);
        if (nf == 0) continue;  // whitespace-only
        if (nf != 3) throw ParseError(line_no, "expected 3 fields, got " + std::to_string(nf));
        std::int8_t sign = 0;
        if (!parse_sign(fields[2], sign))
            throw ParseError(line_no, "weight must be -1 or +1, got '" + fields[2] + "'");
        const NodeId u = intern(fields[0]);
        const NodeId v = intern(fields[1]);
        if (u == v) {
            if (options.on_self_loop == SelfLoopPolicy::Error)
                throw ParseError(line_no, "self-loop " + fields[0]);
            warn("line " + std::to_string(line_no) + ": dropping self-loop " + fields[0]);
            continue;
        }
        const auto key = pair_key(u, v);
        const auto it = slot.find(key);
        if (it == slot.end()) {
            slot.emplace(key, records.size());
            records.push_back({u, v, sign});
        } else {
            switch (options.on_duplicate) {
                case DuplicatePolicy::KeepLast:
                    records[it->second].sign = sign;
                    break;
                case DuplicatePolicy::KeepFirst:
                    break;
                case DuplicatePolicy::Error:
                    throw ParseError(line_no, "duplicate edge " + fields[0] + " -> " + fields[1]);
            }
        }
    }
    if (records.empty()) throw DataError("empty input: no edges parsed");
    return SignedDigraph::from_edges(std::move(labels), records);
}

SignedDigraph load_edge_list_file(const std::string& path, const LoadOptions& options) {
    std::istringstream in(read_text_file(path));
    return load_edge_list(in, options);
}

void serialize_edge_list(const SignedDigraph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.n(); ++u) {
        const auto nbrs = g.out_neighbors(u);
        const auto sgns = g.out_signs(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            out << g.label(u) << '\t' << g.label(nbrs[i]) << '\t' << (sgns[i] > 0 ? "+1" : "-1") << '\n';
    }
}

StatsReport basic_stats(const SignedDigraph& g) {
    if (g.n() == 0) throw DataError("empty graph");
    StatsReport r;
    r.users = g.n();
    r.links = g.m();
    r.friend_links = g.m_pos();
    r.foe_links = g.m_neg();
    const double n = static_cast<double>(g.n());
    r.sparsity = static_cast<double>(g.m()) / (n * n);
    r.mean_link_count = static_cast<double>(g.m()) / n;
    r.mean_friend_fan_count = static_cast<double>(g.m_pos()) / n;
    r.mean_foe_freak_count = static_cast<double>(g.m_neg()) / n;

    std::vector<std::int64_t> links, friends, foes, fans, freaks;
    links.reserve(static_cast<std::size_t>(g.n()));
    for (NodeId u = 0; u < g.n(); ++u) {
        links.push_back(g.in_degree(u) + g.out_degree(u));
        friends.push_back(g.friend_count(u));
        foes.push_back(g.foe_count(u));
        fans.push_back(g.fan_count(u));
        freaks.push_back(g.freak_count(u));
    }
    r.median_links = lower_median(std::move(links));
    r.median_friends = lower_median(std::move(friends));
    r.median_foes = lower_median(std::move(foes));
    r.median_fans = lower_median(std::move(fans));
    r.median_freaks = lower_median(std::move(freaks));
    return r;
}

DegreeMode degree_mode_from_string(const std::string& s) {
    if (s == "in") return DegreeMode::In;
    if (s == "out") return DegreeMode::Out;
    if (s == "total") return DegreeMode::Total;
    if (s == "friend") return DegreeMode::Friend;
    if (s == "foe") return DegreeMode::Foe;
    if (s == "fan") return DegreeMode::Fan;
    if (s == "freak") return DegreeMode::Freak;
    throw UsageError("unknown degree mode '" + s + "' (expected in|out|total|friend|foe|fan|freak)");
}

std::string to_string(DegreeMode mode) {
    switch (mode) {
        case DegreeMode::In: return "in";
        case DegreeMode::Out: return "out";
        case DegreeMode::Total: return "total";
        case DegreeMode::Friend: return "friend";
        case DegreeMode::Foe: return "foe";
        case DegreeMode::Fan: return "fan";
        case DegreeMode::Freak: return "freak";
    }
    return "?";
}

std::vector<std::pair<std::int64_t, std::int64_t>> degree_histogram(const SignedDigraph& g, DegreeMode mode) {
    std::unordered_map<std::int64_t, std::int64_t> counts;
    for (NodeId u = 0; u < g.n(); ++u) {
        std::int64_t d = 0;
        switch (mode) {
            case DegreeMode::In: d = g.in_degree(u); break;
            case DegreeMode::Out: d = g.out_degree(u); break;
            case DegreeMode::Total: d = g.in_degree(u) + g.out_degree(u); break;
            case DegreeMode::Friend: d = g.friend_count(u); break;
            case DegreeMode::Foe: d = g.foe_count(u); break;
            case DegreeMode::Fan: d = g.fan_count(u); break;
            case DegreeMode::Freak: d = g.freak_count(u); break;
        }
        ++counts[d];
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> hist(counts.begin(), counts.end());
    std::sort(hist.begin(), hist.end());
    return hist;
}

std::vector<std::pair<std::int64_t, std::int64_t>> degree_scatter(const SignedDigraph& g) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    pairs.reserve(static_cast<std::size_t>(g.n()));
    for (NodeId u = 0; u < g.n(); ++u) pairs.emplace_back(g.in_degree(u), g.out_degree(u));
    return pairs;
}

}  // namespace signet
