#pragma once

#include <optional>
#include <string>

#include "signet/spectral.hpp"

namespace signet {

// On-disk cache for decompositions, keyed by the input digest and every
// parameter that shapes the result. Misses are silent; corrupt or mismatched
// files are ignored (recomputed and overwritten).
std::string cache_key(const std::string& input_digest, ViewKind view, SpectralKind kind, Which which, int k,
                      double tol, std::uint64_t seed);

std::optional<SpectralDecomposition> cache_load(const std::string& dir, const std::string& key);

void cache_store(const std::string& dir, const std::string& key, const SpectralDecomposition& dec);

}  // namespace signet
