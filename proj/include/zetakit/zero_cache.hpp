#pragma once

// Persistent list of located critical-line zeros.
//
// Format: CSV with header `index,t,residual`, one row per zero, sorted by t,
// index 1-based in t order; t carries at least 12 significant digits and every
// real is written as its shortest round-trip decimal or longer.

#include <filesystem>
#include <string>
#include <vector>

#include "zetakit/zeta.hpp"

namespace zetakit::zeta {

/// Two records closer than this in t are the same zero.
inline constexpr double kZeroMergeTolerance = 1e-8;

std::string format_zero_csv(const std::vector<ZeroRecord>& records);
std::vector<ZeroRecord> parse_zero_csv(const std::string& text);

/// Missing file reads as an empty cache. Throws IoError on unreadable or malformed files.
std::vector<ZeroRecord> read_zero_cache(const std::filesystem::path& path);
/// Throws IoError when the file cannot be written.
void write_zero_cache(const std::filesystem::path& path, const std::vector<ZeroRecord>& records);

/// Union of both lists sorted by t and reindexed. Existing records win over
/// new ones within kZeroMergeTolerance, so re-scanning never perturbs the file.
std::vector<ZeroRecord> merge_zero_records(const std::vector<ZeroRecord>& existing,
                                           const std::vector<ZeroRecord>& found);

}  // namespace zetakit::zeta
