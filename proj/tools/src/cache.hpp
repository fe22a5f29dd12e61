#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace graphflow::cli {

std::string sha256_hex(const std::string& data);

/// One JSON document per result, stored under <dir>/<aa>/<sha256>.json.
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& document) const;

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
  bool enabled_;
};

/// $GRAPHFLOW_CACHE_DIR, else $XDG_CACHE_HOME/graphflow, else ~/.cache/graphflow.
std::filesystem::path default_cache_dir();

}  // namespace graphflow::cli
