#include <doctest.h>
#include <zlib.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "helpers.hpp"
#include "signet/errors.hpp"
#include "signet/io.hpp"

using namespace signet;

TEST_CASE("three-line edge list populates counts, labels and adjacency") {
    const auto g = t::from_tsv("alice\tbob\t+1\nbob\tcarol\t-1\ncarol\talice\t1\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 3);
    CHECK(g.m_pos() == 2);
    CHECK(g.m_neg() == 1);
    // Label order is first appearance.
    CHECK(g.label(0) == "alice");
    CHECK(g.label(1) == "bob");
    CHECK(g.label(2) == "carol");
    CHECK(g.index_of("carol") == 2);
    CHECK(!g.index_of("nobody").has_value());
    CHECK(g.edge_sign(0, 1) == 1);
    CHECK(g.edge_sign(1, 2) == -1);
    CHECK(g.edge_sign(2, 0) == 1);
    CHECK(g.edge_sign(1, 0) == 0);
    CHECK(g.out_degree(0) == 1);
    CHECK(g.in_degree(0) == 1);
    CHECK(g.friend_count(0) == 1);
    CHECK(g.foe_count(1) == 1);
    CHECK(g.fan_count(0) == 1);
    CHECK(g.freak_count(2) == 1);
}

TEST_CASE("comments, blank lines and space separation are tolerated") {
    const auto g = t::from_tsv("# header\n% konect style\n\n  a   b   1\nb\tc\t-1\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.m_neg() == 1);
}

TEST_CASE("malformed lines raise ParseError with the 1-based line number") {
    SUBCASE("missing weight") {
        try {
            t::from_tsv("a b 1\nb c\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line_no == 2);
        }
    }
    SUBCASE("weight outside {-1,+1}") {
        try {
            t::from_tsv("a b 1\n# fine\nb c 2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line_no == 3);
        }
    }
    SUBCASE("non-numeric weight") {
        CHECK_THROWS_AS(t::from_tsv("a b x\n"), ParseError);
    }
}

TEST_CASE("empty input and comment-only input are data errors") {
    CHECK_THROWS_AS(t::from_tsv(""), DataError);
    CHECK_THROWS_AS(t::from_tsv("# nothing\n% here\n"), DataError);
}

TEST_CASE("self-loops drop with a warning by default and can be made fatal") {
    std::vector<std::string> warnings;
    LoadOptions opt;
    opt.warn = [&](const std::string& w) { warnings.push_back(w); };
    const auto g = t::from_tsv("a a 1\na b 1\n", opt);
    CHECK(g.m() == 1);
    CHECK(g.n() == 2);  // the looping node is still registered
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("self-loop") != std::string::npos);

    LoadOptions strict;
    strict.on_self_loop = SelfLoopPolicy::Error;
    CHECK_THROWS_AS(t::from_tsv("a a 1\na b 1\n", strict), DataError);
}

TEST_CASE("duplicate ordered pairs follow the configured policy") {
    const std::string text = "a b 1\na b -1\n";
    std::vector<std::string> warnings;
    LoadOptions keep_last;
    keep_last.warn = [&](const std::string& w) { warnings.push_back(w); };
    const auto last = t::from_tsv(text, keep_last);
    CHECK(last.m() == 1);
    CHECK(last.edge_sign(0, 1) == -1);
    CHECK(warnings.empty());  // the policy applies silently; only self-loops warn

    LoadOptions keep_first;
    keep_first.on_duplicate = DuplicatePolicy::KeepFirst;
    const auto first = t::from_tsv(text, keep_first);
    CHECK(first.m() == 1);
    CHECK(first.edge_sign(0, 1) == 1);

    LoadOptions strict;
    strict.on_duplicate = DuplicatePolicy::Error;
    CHECK_THROWS_AS(t::from_tsv(text, strict), DataError);
}

TEST_CASE("from_edges rejects invariant violations") {
    std::vector<std::string> labels{"a", "b"};
    CHECK_THROWS_AS(SignedDigraph::from_edges(labels, {{0, 0, 1}}), DataError);
    CHECK_THROWS_AS(SignedDigraph::from_edges(labels, {{0, 1, 1}, {0, 1, 1}}), DataError);
    CHECK_THROWS_AS(SignedDigraph::from_edges(labels, {{0, 1, 0}}), DataError);
    CHECK_THROWS_AS(SignedDigraph::from_edges(labels, {{0, 2, 1}}), DataError);
}

TEST_CASE("serialize then load reproduces the graph up to index relabeling") {
    // Reloading assigns indices by first appearance in the stream, so node
    // indices may permute; the labeled edge set must survive exactly.
    const auto g = t::erdos(30, 0.15, 0.7, 42);
    std::ostringstream out;
    serialize_edge_list(g, out);
    const auto h = t::from_tsv(out.str());
    REQUIRE(h.n() == g.n());
    REQUIRE(h.m() == g.m());
    CHECK(h.m_pos() == g.m_pos());
    CHECK(h.m_neg() == g.m_neg());
    auto labeled_edges = [](const SignedDigraph& graph) {
        std::vector<std::tuple<std::string, std::string, int>> out_edges;
        for (const auto& e : graph.edges())
            out_edges.emplace_back(graph.label(e.src), graph.label(e.dst), static_cast<int>(e.sign));
        std::sort(out_edges.begin(), out_edges.end());
        return out_edges;
    };
    CHECK(labeled_edges(g) == labeled_edges(h));
}

TEST_CASE("adjacency spans are sorted and signs line up with edge_sign") {
    const auto g = t::erdos(25, 0.2, 0.6, 7);
    for (NodeId u = 0; u < g.n(); ++u) {
        const auto nbr = g.out_neighbors(u);
        const auto sgn = g.out_signs(u);
        REQUIRE(nbr.size() == sgn.size());
        CHECK(std::is_sorted(nbr.begin(), nbr.end()));
        for (std::size_t i = 0; i < nbr.size(); ++i) CHECK(g.edge_sign(u, nbr[i]) == sgn[i]);
        const auto in = g.in_neighbors(u);
        const auto in_sgn = g.in_signs(u);
        CHECK(std::is_sorted(in.begin(), in.end()));
        for (std::size_t i = 0; i < in.size(); ++i) CHECK(g.edge_sign(in[i], u) == in_sgn[i]);
    }
}

TEST_CASE("degree sums tie out against the global edge counters") {
    const auto g = t::erdos(40, 0.12, 0.75, 3);
    std::int64_t out_sum = 0, in_sum = 0, friends = 0, foes = 0, fans = 0, freaks = 0;
    for (NodeId u = 0; u < g.n(); ++u) {
        out_sum += g.out_degree(u);
        in_sum += g.in_degree(u);
        friends += g.friend_count(u);
        foes += g.foe_count(u);
        fans += g.fan_count(u);
        freaks += g.freak_count(u);
    }
    CHECK(out_sum == g.m());
    CHECK(in_sum == g.m());
    CHECK(friends == g.m_pos());
    CHECK(fans == g.m_pos());
    CHECK(foes == g.m_neg());
    CHECK(freaks == g.m_neg());
}

TEST_CASE("single edge stats: sparsity, means and medians") {
    const auto g = t::from_tsv("u v +1\n");
    const auto s = basic_stats(g);
    CHECK(s.users == 2);
    CHECK(s.links == 1);
    CHECK(s.friend_links == 1);
    CHECK(s.foe_links == 0);
    CHECK(s.sparsity == doctest::Approx(0.25));
    CHECK(s.mean_link_count == doctest::Approx(0.5));
    CHECK(s.mean_friend_fan_count == doctest::Approx(0.5));
    CHECK(s.mean_foe_freak_count == doctest::Approx(0.0));
    // Lower medians over the two nodes: incident counts are {1,1}, friends {0,1}, fans {0,1}.
    CHECK(s.median_links == 1);
    CHECK(s.median_friends == 0);
    CHECK(s.median_fans == 0);
    CHECK(s.median_foes == 0);
    CHECK(s.median_freaks == 0);
}

TEST_CASE("medians agree with a sort-based oracle on random graphs") {
    for (const std::uint64_t seed : {1ull, 2ull, 3ull}) {
        for (const NodeId n : {10, 11}) {
            const auto g = t::erdos(n, 0.3, 0.6, seed);
            const auto s = basic_stats(g);
            std::vector<std::int64_t> links, friends, foes, fans, freaks;
            for (NodeId u = 0; u < g.n(); ++u) {
                links.push_back(g.in_degree(u) + g.out_degree(u));
                friends.push_back(g.friend_count(u));
                foes.push_back(g.foe_count(u));
                fans.push_back(g.fan_count(u));
                freaks.push_back(g.freak_count(u));
            }
            auto med = [](std::vector<std::int64_t> v) {
                std::sort(v.begin(), v.end());
                return v[(v.size() - 1) / 2];
            };
            CHECK(s.median_links == med(links));
            CHECK(s.median_friends == med(friends));
            CHECK(s.median_foes == med(foes));
            CHECK(s.median_fans == med(fans));
            CHECK(s.median_freaks == med(freaks));
        }
    }
}

TEST_CASE("degree histogram covers every node and every mode") {
    // Star: hub 0 points at five leaves, all positive except one foe.
    const auto g = t::directed_graph(6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, -1}});
    const auto out = degree_histogram(g, DegreeMode::Out);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == std::pair<std::int64_t, std::int64_t>{0, 5});
    CHECK(out[1] == std::pair<std::int64_t, std::int64_t>{5, 1});
    const auto in = degree_histogram(g, DegreeMode::In);
    REQUIRE(in.size() == 2);
    CHECK(in[0] == std::pair<std::int64_t, std::int64_t>{0, 1});
    CHECK(in[1] == std::pair<std::int64_t, std::int64_t>{1, 5});
    const auto total = degree_histogram(g, DegreeMode::Total);
    REQUIRE(total.size() == 2);
    CHECK(total[0] == std::pair<std::int64_t, std::int64_t>{1, 5});
    CHECK(total[1] == std::pair<std::int64_t, std::int64_t>{5, 1});
    const auto foe = degree_histogram(g, DegreeMode::Foe);
    REQUIRE(foe.size() == 2);
    CHECK(foe[1] == std::pair<std::int64_t, std::int64_t>{1, 1});

    for (const auto mode : {DegreeMode::In, DegreeMode::Out, DegreeMode::Total, DegreeMode::Friend,
                            DegreeMode::Foe, DegreeMode::Fan, DegreeMode::Freak}) {
        const auto hist = degree_histogram(g, mode);
        std::int64_t nodes = 0;
        std::int64_t prev = -1;
        for (const auto& [deg, cnt] : hist) {
            CHECK(deg > prev);
            prev = deg;
            nodes += cnt;
        }
        CHECK(nodes == g.n());
    }
}

TEST_CASE("degree mode names round-trip") {
    for (const auto mode : {DegreeMode::In, DegreeMode::Out, DegreeMode::Total, DegreeMode::Friend,
                            DegreeMode::Foe, DegreeMode::Fan, DegreeMode::Freak})
        CHECK(degree_mode_from_string(to_string(mode)) == mode);
    CHECK_THROWS_AS(degree_mode_from_string("sideways"), UsageError);
}

TEST_CASE("degree_scatter lists (in, out) pairs in index order") {
    const auto g = t::from_tsv("a b 1\nc a -1\n");
    const auto sc = degree_scatter(g);
    REQUIRE(sc.size() == 3);
    CHECK(sc[0] == std::pair<std::int64_t, std::int64_t>{1, 1});  // a
    CHECK(sc[1] == std::pair<std::int64_t, std::int64_t>{1, 0});  // b
    CHECK(sc[2] == std::pair<std::int64_t, std::int64_t>{0, 1});  // c
}

TEST_CASE("remove_incident drops every touching edge but keeps the node set") {
    const auto g = t::from_tsv("a b 1\nb c -1\nc a 1\nb d 1\n");
    const auto m = g.index_of("b").value();
    const auto h = g.remove_incident(m);
    CHECK(h.n() == g.n());
    CHECK(h.label(m) == "b");
    CHECK(h.m() == 1);  // only c -> a survives
    CHECK(h.edge_sign(g.index_of("c").value(), g.index_of("a").value()) == 1);
    CHECK(h.out_degree(m) == 0);
    CHECK(h.in_degree(m) == 0);
}

TEST_CASE("gzipped files load transparently and digest the decompressed bytes") {
    const auto g = t::erdos(12, 0.3, 0.5, 9);
    std::ostringstream plain;
    serialize_edge_list(g, plain);
    const std::string bytes = plain.str();

    const std::string dir = "test_graph_tmp";
    std::filesystem::create_directories(dir);
    const std::string plain_path = dir + "/edges.tsv";
    const std::string gz_path = dir + "/edges.tsv.gz";
    {
        std::ofstream out(plain_path, std::ios::binary);
        out << bytes;
    }
    {
        gzFile gz = gzopen(gz_path.c_str(), "wb");
        REQUIRE(gz != nullptr);
        REQUIRE(gzwrite(gz, bytes.data(), static_cast<unsigned>(bytes.size())) ==
                static_cast<int>(bytes.size()));
        gzclose(gz);
    }

    const auto from_plain = load_edge_list_file(plain_path);
    const auto from_gz = load_edge_list_file(gz_path);
    CHECK(from_gz.n() == from_plain.n());
    CHECK(from_gz.m() == from_plain.m());
    CHECK(from_gz.m_neg() == from_plain.m_neg());
    CHECK(file_digest(gz_path) == file_digest(plain_path));
    CHECK(file_digest(plain_path) == digest_bytes(bytes));

    CHECK_THROWS_AS(load_edge_list_file(dir + "/missing.tsv"), DataError);
    std::filesystem::remove_all(dir);
}
