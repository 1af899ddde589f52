#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "minuscule/errors.hpp"
#include "minuscule/poset.hpp"

namespace minuscule {

// Text format, one poset per stream:
//   poset <n>
//   cover <i> <j>        (i covered by j)
//   label <i> <string>   (optional)
// Lines starting with '#' and blank lines are ignored.
inline Poset read_poset(std::istream& in) {
  int n = -1;
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels;
  bool any_label = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    if (tok == "poset") {
      if (n >= 0) fail("duplicate poset line");
      if (!(ls >> n) || n < 0) fail("bad element count");
      labels.assign(static_cast<std::size_t>(n), "");
    } else if (tok == "cover") {
      if (n < 0) fail("cover before poset line");
      int a, b;
      if (!(ls >> a >> b)) fail("bad cover line");
      covers.emplace_back(a, b);
    } else if (tok == "label") {
      if (n < 0) fail("label before poset line");
      int a;
      std::string s;
      if (!(ls >> a >> s)) fail("bad label line");
      if (a < 0 || a >= n) fail("label element out of range");
      labels[static_cast<std::size_t>(a)] = s;
      any_label = true;
    } else {
      fail("unknown directive '" + tok + "'");
    }
  }
  if (n < 0) throw ParseError("missing poset line");
  return Poset::from_covers(n, covers, any_label ? std::move(labels) : std::vector<std::string>{});
}

inline Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_poset(in);
}

inline void write_poset(std::ostream& out, const Poset& p) {
  out << "poset " << p.size() << "\n";
  for (auto [a, b] : p.covers()) out << "cover " << a << " " << b << "\n";
  if (p.has_labels())
    for (int x = 0; x < p.size(); ++x)
      if (!p.label(x).empty()) out << "label " << x << " " << p.label(x) << "\n";
}

inline std::string to_poset_text(const Poset& p) {
  std::ostringstream out;
  write_poset(out, p);
  return out.str();
}

// Hasse diagram, minimal elements at the bottom.
inline std::string to_dot(const Poset& p, const std::string& name = "poset") {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int x = 0; x < p.size(); ++x) {
    out << "  n" << x << " [label=\"";
    out << (p.label(x).empty() ? std::to_string(x) : p.label(x));
    out << "\"];\n";
  }
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace minuscule
