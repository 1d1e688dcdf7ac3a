#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arr/ideal.hpp"
#include "arr/report.hpp"

namespace arr {

// Graded Betti numbers of an ideal: entries[(i, j)] is the rank of the i-th
// syzygy module of I in internal degree j (so (0, j) counts minimal
// generators of degree j).
struct BettiTable {
  std::map<std::pair<int, int>, long> entries;
  Ring ring;
  int maxdeg = 0;

  long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
};

// Betti numbers via Koszul homology on the variables: graded pieces are
// realized on standard-monomial bases modulo the canonical-order GB, the
// differentials are multiplication-then-normal-form matrices, and ranks use
// exact fraction-free elimination. When the ideal is monomial (or all of its
// generators are parity-homogeneous) the pieces split into multidegree (or
// parity) blocks whose ranks are computed independently, which is the
// parallel kernel here.
BettiTable betti_table(const Ideal& I, int maxdeg, ExecMode mode = exec_mode(),
                       StepBudget* budget = nullptr);

// The ordered degree list when each homological index carries exactly one
// internal degree; nullopt otherwise.
std::optional<std::vector<int>> pure_type(const BettiTable& b);

// Castelnuovo-Mumford regularity: max (j - i) over nonzero entries.
int regularity(const BettiTable& b);

// The unique rank vector solving the Herzog-Kuhl equations for a pure type
// of length codim, normalized by beta_0(S/I) = 1 and validated against the
// degree identity. Result lists the ranks of the ideal's resolution, i.e.
// beta_i(I) at degree type[i].
std::vector<long long> herzog_kuhl(const std::vector<int>& type, int codim,
                                   long long degree);

// Checks that the Betti table of the cube p-skeleton ideal equals both the
// doubled table of the squarefree monomial ideal it substitutes from and the
// table of the squares monomial ideal.
VerificationReport transport_check(int n, int p, ExecMode mode = exec_mode(),
                                   StepBudget* budget = nullptr);

std::string betti_staircase(const BettiTable& b);
nlohmann::json betti_json(const BettiTable& b);

}  // namespace arr
