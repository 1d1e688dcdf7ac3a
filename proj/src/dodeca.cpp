#include "arr/dodeca.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <unordered_map>

#include "arr/error.hpp"
#include "arr/groebner.hpp"
#include "arr/hilbert.hpp"
#include "arr/partitions.hpp"

namespace arr {

namespace {

Ring dodeca_ring() {
  static Ring r = ring_x0(3);
  return r;
}

const char* const kPlaneText[12] = {
    "5-3*x2-2*x3", "6+3*x2-2*x3", "5-2*x1-3*x3", "4-2*x1+3*x3",
    "5-3*x1-2*x2", "5+3*x1-2*x2", "6+3*x2+2*x3", "5-3*x2+2*x3",
    "6+2*x1+3*x3", "5+2*x1-3*x3", "4+3*x1+2*x2", "6-3*x1+2*x2"};

// constant and x1..x3 coefficients of an affine form
struct AffineForm {
  mpq_class c;
  std::array<mpq_class, 3> n;
};

AffineForm affine_of(const Polynomial& p) {
  AffineForm a;
  a.c = 0;
  const Ring& r = p.ring();
  for (const Term& t : p.terms()) {
    if (t.mono.deg == 0) {
      a.c = t.coeff;
    } else {
      for (int v = 1; v <= 3; ++v)
        if (t.mono[r->index_of("x" + std::to_string(v))] == 1)
          a.n[static_cast<std::size_t>(v - 1)] = t.coeff;
    }
  }
  return a;
}

std::array<mpq_class, 3> cross(const std::array<mpq_class, 3>& a,
                               const std::array<mpq_class, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

mpq_class dot(const std::array<mpq_class, 3>& a, const std::array<mpq_class, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// a point on the affine intersection of two planes
std::array<mpq_class, 3> particular_point(const AffineForm& f, const AffineForm& g) {
  // pick a nonsingular 2x2 column pair, set the remaining coordinate to 0
  for (int drop = 2; drop >= 0; --drop) {
    int c0 = drop == 0 ? 1 : 0;
    int c1 = drop == 2 ? 1 : 2;
    mpq_class det = f.n[static_cast<std::size_t>(c0)] * g.n[static_cast<std::size_t>(c1)] -
                    f.n[static_cast<std::size_t>(c1)] * g.n[static_cast<std::size_t>(c0)];
    if (det == 0) continue;
    mpq_class b0 = -f.c, b1 = -g.c;
    std::array<mpq_class, 3> q = {0, 0, 0};
    q[static_cast<std::size_t>(c0)] =
        (b0 * g.n[static_cast<std::size_t>(c1)] - b1 * f.n[static_cast<std::size_t>(c1)]) / det;
    q[static_cast<std::size_t>(c1)] =
        (b1 * f.n[static_cast<std::size_t>(c0)] - b0 * g.n[static_cast<std::size_t>(c0)]) / det;
    return q;
  }
  throw Error("planes do not meet in a line");
}

}  // namespace

std::vector<HalfSpace> dodeca_planes() {
  Ring r = dodeca_ring();
  std::vector<HalfSpace> planes;
  planes.reserve(12);
  for (const char* text : kPlaneText) planes.push_back(HalfSpace{parse_poly(text, r)});
  return planes;
}

std::vector<ProjLine> edge_lines() {
  Ring r = dodeca_ring();
  std::vector<HalfSpace> planes = dodeca_planes();
  std::vector<AffineForm> forms;
  forms.reserve(12);
  for (const HalfSpace& h : planes) forms.push_back(affine_of(h.form));
  int x0 = r->index_of("x0");

  std::vector<ProjLine> lines;
  for (int i = 0; i < 12; ++i) {
    for (int j = i + 1; j < 12; ++j) {
      std::array<mpq_class, 3> dir = cross(forms[i].n, forms[j].n);
      if (dir[0] == 0 && dir[1] == 0 && dir[2] == 0) continue;  // parallel pair
      std::array<mpq_class, 3> q = particular_point(forms[static_cast<std::size_t>(i)],
                                                    forms[static_cast<std::size_t>(j)]);
      // parameter interval of the segment inside all halfspaces
      std::optional<mpq_class> lo, hi;
      bool empty = false;
      for (int k = 0; k < 12 && !empty; ++k) {
        mpq_class a = forms[static_cast<std::size_t>(k)].c +
                      dot(forms[static_cast<std::size_t>(k)].n, q);
        mpq_class b = dot(forms[static_cast<std::size_t>(k)].n, dir);
        if (b == 0) {
          if (a < 0) empty = true;
        } else if (b > 0) {
          mpq_class bound = -a / b;
          if (!lo || bound > *lo) lo = bound;
        } else {
          mpq_class bound = -a / b;
          if (!hi || bound < *hi) hi = bound;
        }
      }
      if (empty || !lo || !hi || !(*lo < *hi)) continue;

      ProjLine line;
      line.facets = {i + 1, j + 1};
      line.ideal_forms = {homogenize(planes[static_cast<std::size_t>(i)].form, x0),
                          homogenize(planes[static_cast<std::size_t>(j)].form, x0)};
      QMat m;
      for (const Polynomial& f : line.ideal_forms) {
        QVec row(4, 0);
        for (const Term& t : f.terms())
          for (int v = 0; v < 4; ++v)
            if (t.mono[v] == 1) row[static_cast<std::size_t>(v)] = t.coeff;
        m.push_back(std::move(row));
      }
      std::vector<QVec> basis = nullspace(m, 4);
      if (basis.size() != 2) throw Error("edge line has no 2-dimensional cone");
      QVec sum(4, 0);
      for (std::size_t v = 0; v < 4; ++v) sum[v] = basis[0][v] + basis[1][v];
      line.points = {basis[0], basis[1], sum};
      lines.push_back(std::move(line));
    }
  }
  if (lines.size() != 30)
    throw Error("expected 30 edge lines, found " + std::to_string(lines.size()));
  return lines;
}

std::vector<std::vector<int>> cover_search(int k, ExecMode mode) {
  if (k < 0 || k > 12) throw Error("cover_search: k out of range");
  std::vector<ProjLine> lines = edge_lines();
  std::array<std::uint32_t, 13> facet_mask{};  // 1-based facets -> 30-bit line set
  for (std::size_t l = 0; l < lines.size(); ++l) {
    facet_mask[static_cast<std::size_t>(lines[l].facets[0])] |= 1u << l;
    facet_mask[static_cast<std::size_t>(lines[l].facets[1])] |= 1u << l;
  }
  const std::uint32_t all = (1u << 30) - 1;
  std::vector<std::vector<int>> cands = subsets(12, k);
  std::vector<char> covers(cands.size(), 0);
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
    for (long c = 0; c < static_cast<long>(cands.size()); ++c) {
      std::uint32_t m = 0;
      for (int f : cands[static_cast<std::size_t>(c)])
        m |= facet_mask[static_cast<std::size_t>(f)];
      covers[static_cast<std::size_t>(c)] = (m == all);
    }
  } else {
    for (std::size_t c = 0; c < cands.size(); ++c) {
      std::uint32_t m = 0;
      for (int f : cands[c]) m |= facet_mask[static_cast<std::size_t>(f)];
      covers[c] = (m == all);
    }
  }
  std::vector<std::vector<int>> out;
  for (std::size_t c = 0; c < cands.size(); ++c)
    if (covers[c]) out.push_back(cands[c]);
  return out;
}

DodecaIdeal dodeca_ideal(ExecMode mode, StepBudget* budget) {
  Ring r = dodeca_ring();
  std::vector<ProjLine> lines = edge_lines();
  DodecaIdeal out{Ideal(r, lines.front().ideal_forms), false, 1, {}};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    try {
      out.ideal = intersect(out.ideal, Ideal(r, lines[k].ideal_forms), mode, budget);
      out.lines_folded = static_cast<int>(k) + 1;
    } catch (const BudgetExceeded&) {
      return out;  // partial accumulator retained
    }
  }
  out.complete = true;

  // minimal generator profile by degree-by-degree rank deficits
  const MonomialOrder canon = canonical_order(r);
  const std::vector<Polynomial>& gb = out.ideal.basis(canon, mode, budget);
  std::vector<long long> hf = hf_values(out.ideal, canon, 8, mode, budget);
  for (int j = 1; j <= 8; ++j) {
    long long dim_ij = binomial(j + 3, 3) - hf[static_cast<std::size_t>(j)];
    // span of S_1 * I_{j-1}: all degree-j multiples of GB elements of lower degree
    std::unordered_map<Monomial, int, MonomialHash> index;
    {
      std::vector<Monomial> mons = monomials_of_degree(4, j);
      for (std::size_t k = 0; k < mons.size(); ++k) index[mons[k]] = static_cast<int>(k);
    }
    std::vector<SparseRow> rows;
    for (const Polynomial& g : gb) {
      long dg = g.total_degree();
      if (dg > j - 1) continue;
      Polynomial gp = primitive_part(g);
      for (const Monomial& nu : monomials_of_degree(4, static_cast<int>(j - dg))) {
        SparseRow row;
        for (const Term& t : gp.terms())
          row.v.emplace_back(index.at(t.mono * nu), mpz_class(t.coeff.get_num()));
        std::sort(row.v.begin(), row.v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
      }
    }
    long below = rank_sparse(std::move(rows), mode);
    out.beta0[j] = dim_ij - below;
  }
  return out;
}

VerificationReport dodeca_report(ExecMode mode, StepBudget* budget, bool include_ideal) {
  VerificationReport rep;
  rep.subject = "dodecahedron line arrangement";
  Ring r = dodeca_ring();
  std::vector<HalfSpace> planes = dodeca_planes();

  {
    nlohmann::json jplanes = nlohmann::json::array();
    for (const HalfSpace& h : planes) jplanes.push_back(to_string(h.form));
    rep.extra["planes"] = jplanes;
    // the reading of "the 30 lines": edge-supporting intersection lines only
    rep.extra["line_selection"] = "edge-supporting";
  }

  // opposite facets have proportional linear parts
  bool parallel_ok = true;
  for (int i = 0; i < 6; ++i) {
    AffineForm a = affine_of(planes[static_cast<std::size_t>(i)].form);
    AffineForm b = affine_of(planes[static_cast<std::size_t>(i) + 6].form);
    for (int v = 0; v < 3; ++v)
      if (a.n[static_cast<std::size_t>(v)] != -b.n[static_cast<std::size_t>(v)])
        parallel_ok = false;
  }
  rep.check(parallel_ok, "opposite-facets-parallel");

  bool interior_ok = true;
  for (const HalfSpace& h : planes)
    if (evaluate(h.form, QVec(4, 0)) <= 0) interior_ok = false;
  rep.check(interior_ok, "origin-interior");

  std::vector<ProjLine> lines;
  {
    PhaseTimer t(rep, "edge-lines");
    lines = edge_lines();
  }
  rep.check(lines.size() == 30, "edge-line-count", std::to_string(lines.size()));

  std::vector<std::vector<int>> incidence(13);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    incidence[static_cast<std::size_t>(lines[l].facets[0])].push_back(static_cast<int>(l));
    incidence[static_cast<std::size_t>(lines[l].facets[1])].push_back(static_cast<int>(l));
  }
  bool five_regular = true;
  for (int f = 1; f <= 12; ++f)
    if (incidence[static_cast<std::size_t>(f)].size() != 5) five_regular = false;
  rep.check(five_regular, "facet-incidence-5-regular");

  // shared-line counts: opposite facets share none, adjacent share one
  bool shares_ok = true;
  for (int f = 1; f <= 12 && shares_ok; ++f) {
    int adjacent = 0;
    int opposite = f <= 6 ? f + 6 : f - 6;
    for (int g = 1; g <= 12; ++g) {
      if (g == f) continue;
      int shared = 0;
      for (const ProjLine& l : lines)
        if ((l.facets[0] == f && l.facets[1] == g) || (l.facets[0] == g && l.facets[1] == f))
          ++shared;
      if (shared > 1) shares_ok = false;
      if (g == opposite && shared != 0) shares_ok = false;
      adjacent += shared;
    }
    if (adjacent != 5) shares_ok = false;
  }
  rep.check(shares_ok, "facet-adjacency-structure");

  {
    nlohmann::json jinc = nlohmann::json::array();
    for (const ProjLine& l : lines)
      jinc.push_back(nlohmann::json::array({l.facets[0], l.facets[1]}));
    rep.extra["incidence"] = jinc;
  }

  std::vector<std::vector<int>> cover8, cover9;
  {
    PhaseTimer t(rep, "cover-search");
    cover8 = cover_search(8, mode);
    cover9 = cover_search(9, mode);
  }
  rep.check(cover8.empty(), "no-8-facet-cover", std::to_string(cover8.size()) + " covers");
  rep.check(!cover9.empty(), "9-facet-cover-exists", std::to_string(cover9.size()) + " covers");
  rep.extra["cover_counts"] = {{"k8", cover8.size()}, {"k9", cover9.size()}};

  // excluded facets force all five neighbors into every minimal cover
  bool neighbor_rule = true;
  std::vector<std::vector<int>> neighbors(13);
  for (const ProjLine& l : lines) {
    neighbors[static_cast<std::size_t>(l.facets[0])].push_back(l.facets[1]);
    neighbors[static_cast<std::size_t>(l.facets[1])].push_back(l.facets[0]);
  }
  for (const std::vector<int>& cover : cover9) {
    for (int f = 1; f <= 12; ++f) {
      if (std::find(cover.begin(), cover.end(), f) != cover.end()) continue;
      for (int g : neighbors[static_cast<std::size_t>(f)])
        if (std::find(cover.begin(), cover.end(), g) == cover.end()) neighbor_rule = false;
    }
  }
  rep.check(neighbor_rule, "excluded-facet-forces-neighbors");

  if (!include_ideal) {
    rep.skip("line-ideal", "skipped on request");
    return rep;
  }

  DodecaIdeal di{Ideal(r, {}), false, 0, {}};
  {
    PhaseTimer t(rep, "ideal-fold");
    di = dodeca_ideal(mode, budget);
  }
  rep.extra["lines_folded"] = di.lines_folded;
  if (!di.complete) {
    rep.fail("line-ideal-fold",
             "budget exhausted after " + std::to_string(di.lines_folded) + " lines");
    return rep;
  }
  rep.pass("line-ideal-fold", "30 lines folded");

  {
    PhaseTimer t(rep, "ideal-checks");
    const MonomialOrder canon = canonical_order(r);
    HilbertData h = hilbert(di.ideal, canon, mode, budget);
    rep.check(h.dim == 2 && h.degree == 30, "ideal-dim-2-degree-30",
              "dim=" + std::to_string(h.dim) + " deg=" + std::to_string(h.degree));

    nlohmann::json jprof = nlohmann::json::object();
    bool profile_ok = true;
    for (const auto& [deg, count] : di.beta0) {
      jprof[std::to_string(deg)] = count;
      if (deg < 8 && count != 0) profile_ok = false;
      if (deg == 8 && count != 10) profile_ok = false;
    }
    rep.extra["generator_profile"] = jprof;
    rep.check(profile_ok, "minimal-generators-10-octics");

    const std::vector<Polynomial>& gb = di.ideal.basis(canon, mode, budget);
    bool vanish = true;
    for (const ProjLine& l : lines)
      for (const QVec& pt : l.points)
        for (const Polynomial& g : gb)
          if (evaluate(g, pt) != 0) vanish = false;
    rep.check(vanish, "generators-vanish-on-all-lines");

    // no product of 8 homogenized planes lies in the ideal
    std::mt19937_64 rng(20240916u);
    int x0 = r->index_of("x0");
    bool none_member = true;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> picks(12);
      for (int i = 0; i < 12; ++i) picks[static_cast<std::size_t>(i)] = i;
      std::shuffle(picks.begin(), picks.end(), rng);
      Polynomial prod = Polynomial::constant(r, 1);
      for (int i = 0; i < 8; ++i)
        prod = prod * homogenize(planes[static_cast<std::size_t>(picks[static_cast<std::size_t>(i)])].form, x0);
      if (member(prod, di.ideal, canon, mode, budget)) none_member = false;
    }
    rep.check(none_member, "no-8-plane-product-in-ideal");
  }
  return rep;
}

}  // namespace arr
