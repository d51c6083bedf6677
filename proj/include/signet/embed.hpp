#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

enum class EmbedMethod { Laplacian, SvdGiven, SvdReceived };

EmbedMethod embed_method_from_string(const std::string& s);
std::string to_string(EmbedMethod method);

struct EmbedOptions {
    EmbedMethod method = EmbedMethod::Laplacian;
    int dims = 2;
    int k = 0;  // 0 → max(dims + 2, 8), capped at n
    double tol = 1e-8;
    std::uint64_t seed = 0;
    int max_iter = 10000;
    // When both are set, the decomposition is looked up in / stored to the
    // on-disk cache under this digest of the input graph.
    std::string cache_dir;
    std::string input_digest;
};

struct Embedding {
    std::vector<std::string> labels;      // one per node
    std::vector<std::vector<double>> coords;  // coords[node][dim]
    std::vector<double> axis_weights;     // spectrum values behind each axis
    EmbedMethod method = EmbedMethod::Laplacian;
};

// laplacian: the dims dominant-eigenvalue columns of the kernel (Ē−B)⁺,
// scaled by the square root of the eigenvalue, so squared point distances
// approach the signed resistance distance as k → n.
// svd_given / svd_received: rows of U_k / V_k scaled by singular values —
// users as the ratings they give, respectively receive.
Embedding embed(const SignedDigraph& g, const EmbedOptions& options = {});

}  // namespace signet
