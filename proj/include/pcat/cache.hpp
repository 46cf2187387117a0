#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "pcat/enumeration.hpp"

namespace pcat {

// On-disk cache of exact P values, one text file per generator count:
//
//   pcat-cache v1 s=<s>
//   1 <P_1>
//   2 <P_2>
//   ...
//
// Lines are ascending in n, starting at 1, with no gaps.

std::filesystem::path cache_file(const std::filesystem::path& dir, std::int64_t s);

// nullopt when no cache file exists for s. Throws CacheIOError if the file
// cannot be read and CacheIntegrityError if it is malformed or fails the
// table invariants.
std::optional<PeriTable> load_cache(const std::filesystem::path& dir, std::int64_t s);

// Writes to a temporary file and renames it into place.
void save_cache(const std::filesystem::path& dir, const PeriTable& table);

// The --cache-dir flag wins; otherwise PCAT_CACHE_DIR; otherwise no caching.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

}  // namespace pcat
