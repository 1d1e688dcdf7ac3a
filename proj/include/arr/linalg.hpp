#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "arr/parallel.hpp"

namespace arr {

// Dense exact linear algebra at small sizes (subspace bookkeeping,
// Herzog-Kuhl systems, rank probes at points).
using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

int rank_dense(QMat m);

// Reduced row echelon form with zero rows dropped; canonical for a row space.
QMat rref(QMat m);

// Basis of {x : m x = 0}, each vector scaled to coprime integers with the
// first nonzero entry positive.
std::vector<QVec> nullspace(const QMat& m, int ncols);

// Solves a nonsingular square system; throws on singular input.
QVec solve_square(QMat a, QVec b);

// Sparse exact rank over the rationals via fraction-free integer elimination
// (rows stay integer, content stripped after each update). The row-update
// loop is the OpenMP kernel; Serial mode runs the identical loop sequentially
// and both modes give the same rank and the same intermediate rows.
struct SparseRow {
  // sorted by column index
  std::vector<std::pair<int, mpz_class>> v;
};

long rank_sparse(std::vector<SparseRow> rows, ExecMode mode = exec_mode());

}  // namespace arr
