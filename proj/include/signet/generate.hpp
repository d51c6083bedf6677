#pragma once

#include <cstdint>
#include <string>

#include "signet/graph.hpp"

namespace signet {

// Deterministic synthetic graph models. Node labels are the decimal strings
// "0".."n−1"; every model draws from a single seeded stream in a fixed pair
// order, so a spec fully determines the graph.
struct SyntheticSpec {
    std::string model;  // erdos_signed | planted_balance | planted_trolls
    NodeId n = 0;
    std::uint64_t seed = 0;

    // erdos_signed: each ordered pair gets an edge with probability p, sign +1
    // with probability sign_bias.
    double p = 0.01;
    double sign_bias = 0.8;

    // planted_balance: `groups` contiguous equal blocks; intra-group pairs get
    // +1 edges with probability p_in, inter-group pairs −1 edges with
    // probability p_out; every realized sign flips independently with
    // probability noise.
    int groups = 2;
    double p_in = 0.1;
    double p_out = 0.1;
    double noise = 0.0;

    // planted_trolls: the last n_trolls indices are trolls. Every normal user
    // attacks every troll with probability p_attack (a −1 edge). Every ordered
    // pair except troll→troll and the pairs already realized as attacks gains a
    // background edge with probability p_background, positive except for an
    // independent flip with probability p_background_neg. Trolls therefore also
    // collect positive fans, so popularity alone cannot separate them.
    NodeId n_trolls = 0;
    double p_attack = 0.05;
    double p_background = 0.01;
    double p_background_neg = 0.0;
};

SignedDigraph generate(const SyntheticSpec& spec);

}  // namespace signet
