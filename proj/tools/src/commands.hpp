#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <graphflow/io.hpp>

namespace graphflow::cli {

/// Everything that determines a run. Emitted verbatim with every result.
struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string flavor = "knot";
  int order = 2;
  int degree = 0;
  bool all_graphs = false;  // include disconnected graphs in enumerate
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  std::size_t grid = 1024;
  int workers = 1;
  int directions = 3;
  std::optional<std::array<double, 3>> direction;
  double eps_reg = 1e-6;
  double eps_emb = 1e-3;
  std::string cache_dir;
  bool use_cache = true;
};

Json config_to_json(const RunConfig& c);

/// Accepts integers written as "1000000", "1e7" or "2.5e6".
std::uint64_t parse_count(const std::string& text);

std::string read_file(const std::string& path);

Json graphs_enumerate(const RunConfig& c);
Json graphs_delta(const RunConfig& c);
Json graphs_cocycles(const RunConfig& c);

Json knot_sln(const RunConfig& c);
Json knot_a2(const RunConfig& c);
Json knot_v2(const RunConfig& c);
Json knot_lk(const RunConfig& c);
Json knot_agamma(const RunConfig& c);

/// Cache key for a knot command: op, parameters and the content of every input.
std::string cache_key(const RunConfig& c);

}  // namespace graphflow::cli
