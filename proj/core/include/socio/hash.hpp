#pragma once

// FNV-1a content hashing for manifest integrity and vocabulary fingerprints.

#include <cstdint>
#include <string>
#include <string_view>

namespace socio {

inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hash_hex(std::uint64_t h);

// Streaming hash of a file's bytes; throws IoError if unreadable.
std::string hash_file(const std::string& path);

}  // namespace socio
