#pragma once

#include <array>
#include <map>
#include <vector>

#include "arr/ideal.hpp"
#include "arr/linalg.hpp"
#include "arr/polynomial.hpp"
#include "arr/report.hpp"

namespace arr {

// Supporting halfspace of a skew-dodecahedron facet: an affine form in
// x1..x3 (inside the ring Q[x0..x3]) with the facet side being form >= 0.
struct HalfSpace {
  Polynomial form;
};

// The 12 facet halfspaces; opposite facets are (1,7),(2,8),...,(6,12) and
// have proportional linear parts.
std::vector<HalfSpace> dodeca_planes();

// Projective closure of an edge-supporting line: the two homogenized facet
// planes that span it, plus three rational points on it.
struct ProjLine {
  std::array<int, 2> facets;  // 1-based plane indices
  std::vector<Polynomial> ideal_forms;
  std::vector<QVec> points;
};

// Of the 60 non-parallel plane pairs, exactly the 30 whose intersection line
// meets the polytope in a segment of positive length (the edges). Throws if
// the count is not 30.
std::vector<ProjLine> edge_lines();

// Exhaustive search over k-subsets of facets covering all 30 edge lines; a
// facet covers the lines it is incident to. Subset enumeration is the
// parallel kernel.
std::vector<std::vector<int>> cover_search(int k, ExecMode mode = exec_mode());

struct DodecaIdeal {
  Ideal ideal;
  bool complete = false;
  int lines_folded = 0;
  // minimal generator counts per degree (graded Nakayama rank deficits)
  std::map<int, long> beta0;
};

// Left fold of the 30 line ideals (sorted by facet pair) with a step budget;
// on budget exhaustion the partial accumulator is returned with
// complete = false. When complete, reports the minimal-generator profile up
// to degree 8.
DodecaIdeal dodeca_ideal(ExecMode mode = exec_mode(), StepBudget* budget = nullptr);

// Full section-5 reproduction: plane data, incidence combinatorics, cover
// search at k = 8 and 9, and the 30-line ideal profile.
VerificationReport dodeca_report(ExecMode mode = exec_mode(), StepBudget* budget = nullptr,
                                 bool include_ideal = true);

}  // namespace arr
