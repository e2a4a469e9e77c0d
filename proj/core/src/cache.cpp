#include "tatehoch/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tatehoch {

namespace fs = std::filesystem;

std::string cache_dir() {
  if (const char* env = std::getenv("CACHE_DIR")) return env;
  return ".tatehoch-cache";
}

std::string content_hash(const std::string& data) {
  // two FNV-1a passes with different offsets, hex-joined
  auto fnv = [&](std::uint64_t h) {
    for (unsigned char c : data) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  };
  std::ostringstream os;
  os << std::hex << fnv(14695981039346656037ull) << fnv(0x9e3779b97f4a7c15ull);
  return os.str();
}

static fs::path key_path(const std::string& key) {
  return fs::path(cache_dir()) / (key + ".json");
}

std::optional<std::string> cache_get(const std::string& key) {
  std::ifstream in(key_path(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void cache_put(const std::string& key, const std::string& value) {
  std::error_code ec;
  fs::create_directories(cache_dir(), ec);
  std::ofstream out(key_path(key), std::ios::binary | std::ios::trunc);
  out << value;
}

void cache_clear() {
  std::error_code ec;
  fs::remove_all(cache_dir(), ec);
}

CacheStats cache_stats() {
  CacheStats st;
  std::error_code ec;
  if (!fs::exists(cache_dir(), ec)) return st;
  for (const auto& e : fs::directory_iterator(cache_dir(), ec)) {
    if (!e.is_regular_file()) continue;
    ++st.entries;
    st.bytes += e.file_size(ec);
  }
  return st;
}

}  // namespace tatehoch
