#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace signet {

using NodeId = std::int32_t;
using EdgeIdx = std::int64_t;

/// One directed signed edge, in dense-index space.
struct Edge {
    NodeId src;
    NodeId dst;
    std::int8_t sign;  // -1 or +1
};

/// Immutable sparse directed graph with edge weights in {-1,+1}.
///
/// Both the out-adjacency (CSR) and the in-adjacency (CSR of the reversed
/// graph) are stored, with neighbor lists sorted by target index. Weights
/// are exactly -1 or +1, there are no self-loops, and at most one edge per
/// ordered pair. Safe to share across threads after construction.
class SignedDigraph {
public:
    SignedDigraph() = default;

    /// Build from deduplicated loop-free triples over a fixed label set.
    /// Labels define the dense index order. Throws DataError on violated
    /// invariants (duplicate pair, self-loop, bad sign, bad index).
    static SignedDigraph from_edges(std::vector<std::string> labels, const std::vector<Edge>& edges);

    NodeId n() const { return static_cast<NodeId>(labels_.size()); }
    EdgeIdx m() const { return m_; }
    EdgeIdx m_pos() const { return m_pos_; }
    EdgeIdx m_neg() const { return m_neg_; }

    const std::string& label(NodeId u) const { return labels_[static_cast<std::size_t>(u)]; }
    std::optional<NodeId> index_of(const std::string& label) const;

    std::span<const NodeId> out_neighbors(NodeId u) const {
        return {out_nbr_.data() + out_off_[static_cast<std::size_t>(u)],
                static_cast<std::size_t>(out_off_[static_cast<std::size_t>(u) + 1] - out_off_[static_cast<std::size_t>(u)])};
    }
    std::span<const std::int8_t> out_signs(NodeId u) const {
        return {out_sign_.data() + out_off_[static_cast<std::size_t>(u)],
                static_cast<std::size_t>(out_off_[static_cast<std::size_t>(u) + 1] - out_off_[static_cast<std::size_t>(u)])};
    }
    std::span<const NodeId> in_neighbors(NodeId v) const {
        return {in_nbr_.data() + in_off_[static_cast<std::size_t>(v)],
                static_cast<std::size_t>(in_off_[static_cast<std::size_t>(v) + 1] - in_off_[static_cast<std::size_t>(v)])};
    }
    std::span<const std::int8_t> in_signs(NodeId v) const {
        return {in_sign_.data() + in_off_[static_cast<std::size_t>(v)],
                static_cast<std::size_t>(in_off_[static_cast<std::size_t>(v) + 1] - in_off_[static_cast<std::size_t>(v)])};
    }

    std::int64_t out_degree(NodeId u) const {
        return out_off_[static_cast<std::size_t>(u) + 1] - out_off_[static_cast<std::size_t>(u)];
    }
    std::int64_t in_degree(NodeId v) const {
        return in_off_[static_cast<std::size_t>(v) + 1] - in_off_[static_cast<std::size_t>(v)];
    }
    std::int64_t friend_count(NodeId u) const { return pos_out_[static_cast<std::size_t>(u)]; }
    std::int64_t foe_count(NodeId u) const { return out_degree(u) - pos_out_[static_cast<std::size_t>(u)]; }
    std::int64_t fan_count(NodeId v) const { return pos_in_[static_cast<std::size_t>(v)]; }
    std::int64_t freak_count(NodeId v) const { return in_degree(v) - pos_in_[static_cast<std::size_t>(v)]; }

    /// Sign of edge u->v, or 0 when absent. Binary search in the sorted row.
    int edge_sign(NodeId u, NodeId v) const;

    /// Copy of the graph with every edge incident to `node` removed; node
    /// set and dense indices are preserved.
    SignedDigraph remove_incident(NodeId node) const;

    /// All edges in canonical CSR order (src asc, dst asc).
    std::vector<Edge> edges() const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<EdgeIdx> out_off_, in_off_;
    std::vector<NodeId> out_nbr_, in_nbr_;
    std::vector<std::int8_t> out_sign_, in_sign_;
    std::vector<std::int32_t> pos_out_, pos_in_;
    EdgeIdx m_ = 0, m_pos_ = 0, m_neg_ = 0;
};

enum class DuplicatePolicy { KeepLast, KeepFirst, Error };
enum class SelfLoopPolicy { DropWarn, Error };

struct LoadOptions {
    DuplicatePolicy on_duplicate = DuplicatePolicy::KeepLast;
    SelfLoopPolicy on_self_loop = SelfLoopPolicy::DropWarn;
    /// Warning sink; defaults to stderr when unset.
    std::function<void(const std::string&)> warn;
};

/// Parse a TSV edge-list stream: `src dst weight` per line, weight in
/// {-1,+1}, fields separated by tabs or spaces, lines starting with '#' or
/// '%' are comments. Throws ParseError with line number on malformed input
/// and DataError when no edges remain.
SignedDigraph load_edge_list(std::istream& in, const LoadOptions& options = {});

/// Open `path` (gzip-decompressing when it ends in .gz) and parse it.
SignedDigraph load_edge_list_file(const std::string& path, const LoadOptions& options = {});

/// Write the canonical edge multiset as TSV: one `label label sign` line
/// per edge, in canonical CSR order. load(serialize(g)) == g.
void serialize_edge_list(const SignedDigraph& g, std::ostream& out);

/// Table 1-style corpus statistics.
struct StatsReport {
    std::int64_t users = 0;
    std::int64_t links = 0;
    std::int64_t friend_links = 0;
    std::int64_t foe_links = 0;
    double sparsity = 0.0;             // m / n^2
    double mean_link_count = 0.0;      // m / n
    double mean_friend_fan_count = 0.0;
    double mean_foe_freak_count = 0.0;
    // Lower medians over all n nodes; "links" counts incident edges (in+out).
    std::int64_t median_links = 0;
    std::int64_t median_friends = 0;
    std::int64_t median_foes = 0;
    std::int64_t median_fans = 0;
    std::int64_t median_freaks = 0;
};

StatsReport basic_stats(const SignedDigraph& g);

enum class DegreeMode { In, Out, Total, Friend, Foe, Fan, Freak };

DegreeMode degree_mode_from_string(const std::string& s);
std::string to_string(DegreeMode mode);

/// Histogram of per-node degrees for one mode: (degree, node count) pairs
/// sorted by degree; counts sum to n.
std::vector<std::pair<std::int64_t, std::int64_t>> degree_histogram(const SignedDigraph& g, DegreeMode mode);

/// Per-node (in-degree, out-degree) pairs in index order, for scatter plots.
std::vector<std::pair<std::int64_t, std::int64_t>> degree_scatter(const SignedDigraph& g);

}  // namespace signet
