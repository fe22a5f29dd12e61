#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <graphflow/cocycle_solver.hpp>
#include <graphflow/error.hpp>
#include <graphflow/io.hpp>

#include "data.hpp"

using namespace graphflow;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path make_scratch() {
  std::random_device rd;
  auto p = fs::temp_directory_path() / ("graphflow-cli-" + std::to_string(rd()));
  fs::create_directories(p);
  return p;
}

const fs::path kScratch = make_scratch();

struct RemoveScratch {
  ~RemoveScratch() {
    std::error_code ec;
    fs::remove_all(kScratch, ec);
  }
} remove_scratch;

fs::path scratch_dir() { return kScratch; }

Run run(const std::string& args) {
  const fs::path err_file = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string(GRAPHFLOW_CLI_PATH) + " " + args + " 2>" + err_file.string();
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = oracle::read_text(err_file.string());
  return r;
}

std::string curve(const std::string& name) { return "--curve " + oracle::data_path("curves/" + name); }

std::string cache_flag() { return " --cache-dir " + (scratch_dir() / "cache").string(); }

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("graphs cocycles contains the reference cocycle") {
  const auto r = run("graphs cocycles --flavor manifold --order 2");
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  std::vector<DecoratedGraph> domain;
  for (const auto& g : j.at("domain")) domain.push_back(graph_from_json(g));
  const auto& cocycles = j.at("cocycles");
  RationalMatrix m(domain.size(), cocycles.size() + 1);
  for (std::size_t c = 0; c < cocycles.size(); ++c) {
    const auto v = coordinates(domain, graph_sum_from_json(cocycles[c]));
    for (std::size_t r = 0; r < domain.size(); ++r) m(r, c) = v[r];
  }
  const auto target = coordinates(domain, reference::manifold_order2_cocycle());
  for (std::size_t r = 0; r < domain.size(); ++r) m(r, cocycles.size()) = target[r];
  CHECK(rank(m) == cocycles.size());
  CHECK(j.at("config").at("order") == 2);
  CHECK(j.contains("version"));
}

TEST_CASE("graphs delta and enumerate") {
  const auto d = run("graphs delta --graph " + oracle::data_path("graphs/theta.txt"));
  REQUIRE(d.code == 0);
  CHECK(Json::parse(d.out).at("delta") == Json::array());

  const auto a = run("graphs enumerate --flavor knot --order 1");
  const auto b = run("graphs enumerate --flavor knot --order 1");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out).at("count").get<int>() >= 1);
}

TEST_CASE("knot commands") {
  const auto a2 = run("knot a2 " + curve("trefoil.json") + " --no-cache");
  REQUIRE(a2.code == 0);
  CHECK(Json::parse(a2.out).at("a2") == 1);

  const auto sln = run("knot sln " + curve("circle.json") + " --no-cache");
  REQUIRE(sln.code == 0);
  CHECK(std::abs(Json::parse(sln.out).at("value").get<double>()) <= 1e-6);

  const auto lk = run("knot lk " + curve("hopf.json") + " --grid 256 --no-cache");
  REQUIRE(lk.code == 0);
  CHECK(Json::parse(lk.out).at("value").get<double>() == doctest::Approx(1).epsilon(1e-3));
}

TEST_CASE("repeated v2 runs are byte-identical, with and without the cache") {
  const std::string args = "knot v2 " + curve("trefoil.json") + " --samples 1e5 --seed 42";
  const auto a = run(args + " --no-cache");
  const auto b = run(args + " --no-cache --workers 2");
  REQUIRE(a.code == 0);
  const auto ja = Json::parse(a.out);
  const auto jb = Json::parse(b.out);
  CHECK(ja.at("value") == jb.at("value"));
  CHECK(ja.at("std_error") == jb.at("std_error"));
  CHECK(ja.at("config").at("samples") == 100000);
  CHECK(ja.at("config").at("seed") == 42);

  const auto first = run(args + " --no-cache");
  CHECK(first.out == a.out);

  const auto stored = run(args + cache_flag());
  const auto replay = run(args + cache_flag());
  REQUIRE(stored.code == 0);
  CHECK(replay.out == stored.out);
  CHECK(Json::parse(stored.out).at("value") == ja.at("value"));
}

TEST_CASE("exit codes and error reports") {
  const auto bad = write_file("bad.json", "{\"type\": \"fourier\", ");
  const auto parse = run("knot sln --curve " + bad.string() + " --no-cache");
  CHECK(parse.code == 2);
  CHECK(parse.out.empty());
  CHECK(Json::parse(parse.err).at("error") == to_string(ErrorCode::Parse));

  const auto usage = run("graphs enumerate --order");
  CHECK(usage.code == 2);

  const auto limit = run("graphs enumerate --flavor manifold --order 4");
  CHECK(limit.code == 3);
  CHECK(Json::parse(limit.err).at("error") == to_string(ErrorCode::ResourceLimit));

  const auto eight = write_file(
      "planar_eight.json",
      R"({"type":"fourier","harmonics":[[[0,1],[0,0]],[[0,0],[0,0,1]],[[0],[0]]]})");
  const auto invalid = run("knot sln --curve " + eight.string() + " --no-cache");
  CHECK(invalid.code == 4);
  const auto err = Json::parse(invalid.err);
  CHECK(err.at("error") == to_string(ErrorCode::Validation));
  CHECK(err.at("message").get<std::string>().find("embedded") != std::string::npos);
}
