#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "khow/model.hpp"

inline std::string fixture_path(const std::string& name) { return std::string(KHOW_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline khow::Model fixture_model(const std::string& name) { return khow::parse_model(read_fixture(name)); }
