#include "signet/io.hpp"

#include <zlib.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "signet/errors.hpp"
#include "signet/util.hpp"

namespace signet {

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_gz(const std::string& path) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) throw DataError("cannot open file: " + path);
    std::string out;
    char buf[1 << 16];
    int got = 0;
    while ((got = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(got));
    if (got < 0) {
        int errnum = 0;
        const char* msg = gzerror(f, &errnum);
        std::string detail = msg ? msg : "gzread failed";
        gzclose(f);
        throw DataError("error decompressing " + path + ": " + detail);
    }
    gzclose(f);
    return out;
}

std::string read_plain(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw DataError("error reading " + path);
    return ss.str();
}

}  // namespace

std::string read_text_file(const std::string& path) {
    return has_suffix(path, ".gz") ? read_gz(path) : read_plain(path);
}

std::string digest_bytes(const std::string& bytes) {
    return to_hex(fnv1a64(bytes.data(), bytes.size()));
}

std::string file_digest(const std::string& path) {
    return digest_bytes(read_text_file(path));
}

}  // namespace signet
