#include "arr/linalg.hpp"

#include <algorithm>

#include "arr/error.hpp"

namespace arr {

int rank_dense(QMat m) { return static_cast<int>(rref(std::move(m)).size()); }

QMat rref(QMat m) {
  if (m.empty()) return m;
  std::size_t ncols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    mpq_class inv = 1 / m[row][col];
    for (std::size_t c = col; c < ncols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  m.resize(row);
  return m;
}

std::vector<QVec> nullspace(const QMat& m, int ncols) {
  QMat r = rref(m);
  std::size_t nc = static_cast<std::size_t>(ncols);
  std::vector<int> pivot_of_col(nc, -1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::size_t c = 0;
    while (c < nc && r[i][c] == 0) ++c;
    pivot_of_col[c] = static_cast<int>(i);
  }
  std::vector<QVec> basis;
  for (std::size_t free_col = 0; free_col < nc; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    QVec v(nc, 0);
    v[free_col] = 1;
    for (std::size_t c = 0; c < nc; ++c) {
      int pr = pivot_of_col[c];
      if (pr >= 0) v[c] = -r[static_cast<std::size_t>(pr)][free_col];
    }
    // scale to coprime integers, first nonzero entry positive
    mpz_class den_lcm = 1;
    for (const mpq_class& x : v)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class g = 0;
    for (mpq_class& x : v) {
      x *= den_lcm;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (g != 0)
      for (mpq_class& x : v) x /= g;
    for (const mpq_class& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (mpq_class& y : v) y = -y;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

QVec solve_square(QMat a, QVec b) {
  std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error("singular system");
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

namespace {

const mpz_class* row_entry(const SparseRow& r, int col) {
  auto it = std::lower_bound(
      r.v.begin(), r.v.end(), col,
      [](const std::pair<int, mpz_class>& e, int c) { return e.first < c; });
  if (it != r.v.end() && it->first == col) return &it->second;
  return nullptr;
}

void strip_content(SparseRow& r) {
  mpz_class g = 0;
  for (const auto& e : r.v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& e : r.v) e.second /= g;
}

// target := (a * target - b * pivot), merged by column, then content-stripped
void eliminate_into(SparseRow& target, const SparseRow& pivot, const mpz_class& a,
                    const mpz_class& b) {
  std::vector<std::pair<int, mpz_class>> out;
  out.reserve(target.v.size() + pivot.v.size());
  std::size_t i = 0, j = 0;
  while (i < target.v.size() && j < pivot.v.size()) {
    if (target.v[i].first < pivot.v[j].first) {
      out.emplace_back(target.v[i].first, a * target.v[i].second);
      ++i;
    } else if (target.v[i].first > pivot.v[j].first) {
      out.emplace_back(pivot.v[j].first, -b * pivot.v[j].second);
      ++j;
    } else {
      mpz_class val = a * target.v[i].second - b * pivot.v[j].second;
      if (val != 0) out.emplace_back(target.v[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  for (; i < target.v.size(); ++i) out.emplace_back(target.v[i].first, a * target.v[i].second);
  for (; j < pivot.v.size(); ++j) out.emplace_back(pivot.v[j].first, -b * pivot.v[j].second);
  target.v = std::move(out);
  strip_content(target);
}

}  // namespace

long rank_sparse(std::vector<SparseRow> rows, ExecMode mode) {
  std::vector<std::size_t> active;
  int ncols = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    strip_content(rows[i]);
    if (!rows[i].v.empty()) {
      active.push_back(i);
      ncols = std::max(ncols, rows[i].v.back().first + 1);
    }
  }
  std::vector<long> col_count(static_cast<std::size_t>(ncols), 0);
  for (std::size_t i : active)
    for (const auto& e : rows[i].v) ++col_count[static_cast<std::size_t>(e.first)];

  long rank = 0;
  while (!active.empty()) {
    // pivot row: fewest entries, ties by index
    std::size_t best = active.front();
    for (std::size_t i : active)
      if (rows[i].v.size() < rows[best].v.size()) best = i;
    const SparseRow& pivot = rows[best];
    // pivot column: prefer unit entries, then sparsest column
    int pcol = -1;
    bool punit = false;
    long pcount = 0;
    for (const auto& e : pivot.v) {
      bool unit = e.second == 1 || e.second == -1;
      long cnt = col_count[static_cast<std::size_t>(e.first)];
      if (pcol < 0 || (unit && !punit) || (unit == punit && cnt < pcount)) {
        pcol = e.first;
        punit = unit;
        pcount = cnt;
      }
    }
    const mpz_class& pval = *row_entry(pivot, pcol);

    std::vector<std::size_t> touched;
    for (std::size_t i : active)
      if (i != best && row_entry(rows[i], pcol) != nullptr) touched.push_back(i);
    for (std::size_t i : touched)
      for (const auto& e : rows[i].v) --col_count[static_cast<std::size_t>(e.first)];

    if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long k = 0; k < static_cast<long>(touched.size()); ++k) {
        SparseRow& r = rows[touched[static_cast<std::size_t>(k)]];
        mpz_class rv = *row_entry(r, pcol);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), pval.get_mpz_t(), rv.get_mpz_t());
        eliminate_into(r, pivot, pval / g, rv / g);
      }
    } else {
      for (std::size_t i : touched) {
        SparseRow& r = rows[i];
        mpz_class rv = *row_entry(r, pcol);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), pval.get_mpz_t(), rv.get_mpz_t());
        eliminate_into(r, pivot, pval / g, rv / g);
      }
    }

    for (std::size_t i : touched)
      for (const auto& e : rows[i].v) ++col_count[static_cast<std::size_t>(e.first)];
    for (const auto& e : pivot.v) --col_count[static_cast<std::size_t>(e.first)];

    ++rank;
    std::vector<std::size_t> next;
    next.reserve(active.size());
    for (std::size_t i : active)
      if (i != best && !rows[i].v.empty()) next.push_back(i);
    active = std::move(next);
  }
  return rank;
}

}  // namespace arr
