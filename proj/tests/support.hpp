#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "envrad/commands.hpp"
#include "envrad/session.hpp"

namespace envrad::testing {

inline Session header(const std::string& vars, std::size_t rank) {
  return parse_session("ring Q[" + vars + "]; free " + std::to_string(rank) + ";");
}

inline Submodule sub(const Session& s, const std::vector<std::string>& gens) {
  std::vector<ModuleVector> vs;
  for (const auto& g : gens) vs.push_back(s.parse_vector(g));
  return Submodule(s.module(), vs);
}

inline Ideal ideal(const Session& s, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(s.parse_polynomial(g));
  return Ideal(s.ring(), ps);
}

inline std::string data_path(const std::string& name) {
  return std::string(ENVRAD_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Session load(const std::string& name) { return parse_session(slurp(data_path(name))); }

}  // namespace envrad::testing
