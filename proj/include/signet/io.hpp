#pragma once

#include <cstdint>
#include <string>

namespace signet {

// Reads a whole file into memory. Paths ending in ".gz" are decompressed
// transparently with zlib; anything else is read verbatim.
std::string read_text_file(const std::string& path);

// FNV-1a 64 digest of the raw (already decompressed) file bytes, as 16 lowercase
// hex digits. Used to key caches and to stamp reports with their input.
std::string file_digest(const std::string& path);

std::string digest_bytes(const std::string& bytes);

}  // namespace signet
