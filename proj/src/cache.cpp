#include "signet/cache.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "signet/util.hpp"

namespace signet {

namespace {

constexpr char kMagic[8] = {'S', 'G', 'N', 'T', 'D', 'E', 'C', '1'};

template <typename T>
void put(std::ostream& out, const T& value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <typename T>
bool get(std::istream& in, T& value) {
    in.read(reinterpret_cast<char*>(&value), sizeof value);
    return static_cast<bool>(in);
}

}  // namespace

std::string cache_key(const std::string& input_digest, ViewKind view, SpectralKind kind, Which which, int k,
                      double tol, std::uint64_t seed) {
    std::ostringstream ss;
    ss << input_digest << '|' << to_string(view) << '|' << to_string(kind) << '|' << to_string(which) << '|' << k
       << '|' << tol << '|' << seed;
    const std::string text = ss.str();
    return to_hex(fnv1a64(text.data(), text.size()));
}

std::optional<SpectralDecomposition> cache_load(const std::string& dir, const std::string& key) {
    const std::filesystem::path path = std::filesystem::path(dir) / (key + ".sgnt");
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;

    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0) return std::nullopt;

    std::int32_t kind = 0, view = 0, which = 0, k = 0;
    std::int64_t n = 0;
    double tol = 0.0;
    std::uint64_t seed = 0;
    if (!get(in, kind) || !get(in, view) || !get(in, which) || !get(in, n) || !get(in, k) || !get(in, tol) ||
        !get(in, seed))
        return std::nullopt;
    if (n < 0 || k < 0 || k > n) return std::nullopt;

    SpectralDecomposition dec;
    dec.kind = static_cast<SpectralKind>(kind);
    dec.view = static_cast<ViewKind>(view);
    dec.which = static_cast<Which>(which);
    dec.tol = tol;
    dec.seed = seed;
    dec.d.resize(k);
    dec.u.resize(n, k);
    dec.v.resize(n, k);
    dec.residuals.resize(static_cast<std::size_t>(k));
    in.read(reinterpret_cast<char*>(dec.d.data()), static_cast<std::streamsize>(sizeof(double) * k));
    in.read(reinterpret_cast<char*>(dec.residuals.data()), static_cast<std::streamsize>(sizeof(double) * k));
    in.read(reinterpret_cast<char*>(dec.u.data()), static_cast<std::streamsize>(sizeof(double) * n * k));
    in.read(reinterpret_cast<char*>(dec.v.data()), static_cast<std::streamsize>(sizeof(double) * n * k));
    if (!in) return std::nullopt;
    return dec;
}

void cache_store(const std::string& dir, const std::string& key, const SpectralDecomposition& dec) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path path = std::filesystem::path(dir) / (key + ".sgnt");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return;  // cache is best-effort
    out.write(kMagic, sizeof kMagic);
    put(out, static_cast<std::int32_t>(dec.kind));
    put(out, static_cast<std::int32_t>(dec.view));
    put(out, static_cast<std::int32_t>(dec.which));
    put(out, static_cast<std::int64_t>(dec.n()));
    put(out, static_cast<std::int32_t>(dec.k()));
    put(out, dec.tol);
    put(out, dec.seed);
    const auto k = static_cast<std::streamsize>(dec.k());
    const auto n = static_cast<std::streamsize>(dec.n());
    out.write(reinterpret_cast<const char*>(dec.d.data()), static_cast<std::streamsize>(sizeof(double)) * k);
    out.write(reinterpret_cast<const char*>(dec.residuals.data()), static_cast<std::streamsize>(sizeof(double)) * k);
    out.write(reinterpret_cast<const char*>(dec.u.data()), static_cast<std::streamsize>(sizeof(double)) * n * k);
    out.write(reinterpret_cast<const char*>(dec.v.data()), static_cast<std::streamsize>(sizeof(double)) * n * k);
}

}  // namespace signet
