#include "arr/io.hpp"

#include <fstream>
#include <sstream>

#include "arr/error.hpp"

namespace arr {

IdealFile read_ideal_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  IdealFile out;
  bool have_ring = false;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (!have_ring) {
      if (line.rfind("ring:", 0) != 0)
        throw Error("ideal file must start with a 'ring: ...' line");
      std::istringstream rs(line.substr(5));
      std::vector<std::string> names;
      std::string name;
      while (rs >> name) names.push_back(name);
      out.ring = make_ring(std::move(names));
      have_ring = true;
      continue;
    }
    out.polys.push_back(parse_poly(line, out.ring));
  }
  if (!have_ring) throw Error("ideal file has no ring line");
  return out;
}

IdealFile read_ideal_path(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return read_ideal_text(buf.str());
}

std::string write_ideal_text(const Ring& ring, const std::vector<Polynomial>& polys) {
  std::string s = "ring:";
  for (const std::string& n : ring->names()) s += " " + n;
  s += "\n";
  for (const Polynomial& p : polys) s += to_string(p) + "\n";
  return s;
}

}  // namespace arr
