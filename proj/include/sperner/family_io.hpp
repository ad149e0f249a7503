#pragma once

// Family text files:
//
//   # optional comments
//   n=4
//   {1,2}
//   34
//
// The header must precede the first set. Blank lines are ignored.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sperner/family.hpp"

namespace sperner {

inline Family read_family(std::istream &in) {
  std::optional<GroundSize> ground;
  std::vector<SetMask> sets;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string t = line.substr(b, e - b + 1);
    try {
      if (!ground) {
        if (t.rfind("n=", 0) != 0)
          throw std::invalid_argument("expected header 'n=<int>'");
        std::size_t used = 0;
        const int n = std::stoi(t.substr(2), &used);
        if (used != t.size() - 2) throw std::invalid_argument("bad header '" + t + "'");
        ground.emplace(n);
        continue;
      }
      sets.push_back(parse_set(t, *ground));
    } catch (const std::exception &ex) {
      throw std::invalid_argument("sperner: family file line " + std::to_string(line_no) +
                                  ": " + ex.what());
    }
  }
  if (!ground) throw std::invalid_argument("sperner: family file has no 'n=' header");
  return Family(*ground, std::move(sets));
}

inline Family read_family_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("sperner: cannot open family file '" + path + "'");
  return read_family(in);
}

inline Family parse_family(const std::string &text) {
  std::istringstream in(text);
  return read_family(in);
}

inline void write_family(std::ostream &out, const Family &f) {
  out << "n=" << f.ground().n() << '\n';
  for (SetMask x : f) out << format_set(x) << '\n';
}

/// "{{1,2},{3,4}}".
inline std::string format_family(const Family &f) {
  std::string s = "{";
  bool first = true;
  for (SetMask x : f) {
    if (!first) s += ',';
    s += format_set(x);
    first = false;
  }
  return s + "}";
}

/// Compact listing "134, 234"; "-" for the empty family.
inline std::string format_family_compact(const Family &f) {
  if (f.empty()) return "-";
  std::string s;
  for (SetMask x : f) {
    if (!s.empty()) s += ", ";
    s += format_compact(x);
  }
  return s;
}

}  // namespace sperner
