#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hodgewalk {

/// Format a double with 12 significant digits (the library-wide CSV/JSON
/// convention, so cross-run diffs are meaningful).
std::string format_double(double v);

/// Write content to path atomically (temp file in the same directory, then
/// rename).
void atomic_write(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

/// FNV-1a 64-bit digest, hex-encoded; recorded in run manifests as
/// "fnv1a64:<hex>".
std::string fnv1a64_hex(const std::string& data);

/// JSON run manifest accompanying every CLI output: command, parameters,
/// seed, versions, input digests.
std::string run_manifest_json(
    const std::string& command,
    const std::vector<std::pair<std::string, std::string>>& parameters,
    std::uint64_t seed,
    const std::vector<std::pair<std::string, std::string>>& input_digests);

}  // namespace hodgewalk
