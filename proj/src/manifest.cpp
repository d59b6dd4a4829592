#include "pairwell/manifest.hpp"

#include <cstdio>

#include "pairwell/csv.hpp"
#include "pairwell/version.hpp"

namespace pairwell {

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= static_cast<std::uint64_t>(c);
        hash *= 0x100000001b3ULL;
    }
    char buffer[20];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

void write_manifest(const std::string& dir, const nlohmann::json& resolved_config,
                    const std::map<std::string, ManifestEntry>& outputs,
                    std::optional<long> seed) {
    nlohmann::json manifest;
    manifest["version"] = kVersion;
    manifest["checksum_algorithm"] = "fnv1a64";
    manifest["inputs"] = resolved_config;
    manifest["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    nlohmann::json files;
    for (const auto& [name, entry] : outputs)
        files[name] = {{"bytes", entry.bytes}, {"fnv1a64", entry.checksum}};
    manifest["outputs"] = files;
    csv::write_file(dir + "/manifest.json", manifest.dump(2) + "\n");
}

}  // namespace pairwell
