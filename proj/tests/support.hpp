#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ddl/parser.hpp"

namespace ddl::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(DDL_FIXTURES) + "/" + name;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline KnowledgeBase load_fixture(const std::string& name) {
  return parse_kb(read_text(fixture_path(name)));
}

inline Concept atom(const std::string& n) { return Concept::atom(n); }
inline Concept neg(const Concept& c) { return Concept::negation(c); }

}  // namespace ddl::test
