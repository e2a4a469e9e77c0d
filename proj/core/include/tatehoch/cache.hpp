#pragma once

// Content-addressed result cache: keys are hashes of the algebra spec
// text plus computation parameters.  The directory comes from CACHE_DIR
// or defaults to .tatehoch-cache in the working directory.

#include <cstdint>
#include <optional>
#include <string>

namespace tatehoch {

std::string cache_dir();
std::string content_hash(const std::string& data);
std::optional<std::string> cache_get(const std::string& key);
void cache_put(const std::string& key, const std::string& value);
void cache_clear();

struct CacheStats {
  int entries{0};
  std::uintmax_t bytes{0};
};
CacheStats cache_stats();

}  // namespace tatehoch
