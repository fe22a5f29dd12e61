#include "cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace graphflow::cli {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  const std::string h = sha256_hex(key);
  return dir_ / h.substr(0, 2) / (h + ".json");
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void ResultCache::store(const std::string& key, const std::string& document) const {
  if (!enabled_) return;
  const auto path = path_for(key);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) return;  // an unwritable cache only costs recomputation
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << document;
  }
  std::filesystem::rename(tmp, path, ec);
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("GRAPHFLOW_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "graphflow";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "graphflow";
  return ".graphflow-cache";
}

}  // namespace graphflow::cli
