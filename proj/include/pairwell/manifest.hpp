#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace pairwell {

/// FNV-1a 64-bit hash of a byte string, hex encoded. Cheap, stable content
/// fingerprint for the run manifest.
std::string fnv1a64_hex(const std::string& bytes);

struct ManifestEntry {
    std::size_t bytes = 0;
    std::string checksum;
};

/// Writes <dir>/manifest.json recording the resolved configuration, code
/// version, optional seed and per-file checksums. Written after all other
/// products; deliberately carries no timestamps or host data so reruns are
/// byte-identical.
void write_manifest(const std::string& dir, const nlohmann::json& resolved_config,
                    const std::map<std::string, ManifestEntry>& outputs,
                    std::optional<long> seed);

}  // namespace pairwell
