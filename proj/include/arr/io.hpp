#pragma once

#include <string>
#include <vector>

#include "arr/ideal.hpp"
#include "arr/polynomial.hpp"

namespace arr {

// Ideal file format: UTF-8 text, '#' comments, first non-comment line
// "ring: x0 x1 ... xn", then one polynomial per line in the text grammar.
struct IdealFile {
  Ring ring;
  std::vector<Polynomial> polys;

  Ideal ideal() const { return Ideal(ring, polys); }
};

IdealFile read_ideal_text(const std::string& text);
IdealFile read_ideal_path(const std::string& path);
std::string write_ideal_text(const Ring& ring, const std::vector<Polynomial>& polys);

}  // namespace arr
