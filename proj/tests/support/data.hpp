#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <graphflow/io.hpp>
#include <graphflow/knot_curve.hpp>

namespace oracle {

inline std::string data_path(const std::string& relative) { return std::string(GRAPHFLOW_TEST_DATA_DIR) + "/" + relative; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline graphflow::KnotCurve load_curve(const std::string& name) {
  return graphflow::curve_from_json(graphflow::parse_json(read_text(data_path("curves/" + name))));
}

inline std::vector<graphflow::KnotCurve> load_link(const std::string& name) {
  return graphflow::curves_from_json(graphflow::parse_json(read_text(data_path("curves/" + name))));
}

}  // namespace oracle
