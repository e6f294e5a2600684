#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "hser/ratfunc.hpp"

namespace hser {

// On-disk result cache.  HSER_CACHE_DIR overrides the location (set it to the
// empty string to disable caching entirely); the default .hser-cache under
// the current directory keeps sweeps self-contained.
std::filesystem::path cache_dir();

// Keys look like "covariant:1+3:2".  Entries are "HSER1", then the num and
// den coefficient lists (length line followed by one decimal integer per
// line).  Corrupt or unreadable entries read as misses... except that a
// well-formed entry with wrong numbers is exactly what cmd_verify exists to
// catch, so no checksum is kept here.
std::optional<RatFunc> cache_load(const std::string& key);

// atomic write-rename; concurrent writers of the same key are safe
void cache_store(const std::string& key, const RatFunc& f);

}  // namespace hser
