#pragma once

#include "regsynth/core/spec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rs::testing {

inline std::string specs_path(const std::string& name) { return std::string(REGSYNTH_SPECS_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline OneSidedSpec load_spec(const std::string& name) { return parse_spec(read_text(specs_path(name))); }

}  // namespace rs::testing
