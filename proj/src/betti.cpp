#include "arr/betti.hpp"

#include <algorithm>
#include <unordered_map>

#include "arr/error.hpp"
#include "arr/families.hpp"
#include "arr/groebner.hpp"
#include "arr/hilbert.hpp"
#include "arr/linalg.hpp"
#include "arr/partitions.hpp"

namespace arr {

namespace {

enum class Grading { Multidegree, Parity, None };

Grading detect_grading(const std::vector<Polynomial>& gens) {
  bool all_mono = true;
  bool all_parity = true;
  for (const Polynomial& g : gens) {
    if (g.terms().size() != 1) all_mono = false;
    for (const Term& t : g.terms()) {
      for (int i = 0; i < Monomial::kMaxVars; ++i)
        if ((t.mono[i] & 1) != (g.terms().front().mono[i] & 1)) all_parity = false;
    }
  }
  if (all_mono) return Grading::Multidegree;
  if (all_parity) return Grading::Parity;
  return Grading::None;
}

std::string class_key(const Monomial& m, int nvars, Grading g) {
  switch (g) {
    case Grading::Multidegree: return monomial_key(m, nvars);
    case Grading::Parity: {
      std::string s(static_cast<std::size_t>(nvars), '0');
      for (int i = 0; i < nvars; ++i) s[static_cast<std::size_t>(i)] = char('0' + (m[i] & 1));
      return s;
    }
    case Grading::None: return "";
  }
  return "";
}

// all monomials of the given degree avoiding the leading-term ideal
std::vector<Monomial> standard_monomials(int nvars, int degree,
                                         const std::vector<Monomial>& lms) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(remaining);
      cur.deg = static_cast<std::uint32_t>(degree);
      for (const Monomial& l : lms)
        if (divides(l, cur)) {
          cur.e[static_cast<std::size_t>(var)] = 0;
          return;
        }
      out.push_back(cur);
      cur.e[static_cast<std::size_t>(var)] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e);
      self(self, var + 1, remaining - e);
    }
    cur.e[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

// 0-based k-subsets of {0..n-1}, lexicographic
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(cur.size())); ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::uint32_t comb_mask(const std::vector<int>& c) {
  std::uint32_t m = 0;
  for (int v : c) m |= 1u << v;
  return m;
}

struct KoszulContext {
  Ring ring;
  int nvars = 0;
  int maxdeg = 0;
  Grading grading = Grading::None;
  std::vector<Polynomial> gb;
  std::vector<Monomial> lms;
  std::vector<std::vector<Monomial>> std_mons;  // per degree 0..maxdeg+? (maxdeg suffices)
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> std_index;
  // normal form of x_l * m over standard monomials of degree deg(m)+1
  std::unordered_map<Monomial, std::vector<std::pair<int, mpq_class>>, MonomialHash>
      mult_cache[Monomial::kMaxVars];
  MonomialOrder order;

  explicit KoszulContext(const Ring& r) : ring(r), order(canonical_order(r)) {}

  const std::vector<std::pair<int, mpq_class>>& mult(int l, const Monomial& m) {
    auto& cache = mult_cache[l];
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    Monomial prod = m * Monomial::var(l);
    std::vector<std::pair<int, mpq_class>> entry;
    bool standard = true;
    for (const Monomial& lm : lms)
      if (divides(lm, prod)) {
        standard = false;
        break;
      }
    const auto& idx = std_index[prod.deg];
    if (standard) {
      entry.emplace_back(idx.at(prod), mpq_class(1));
    } else if (!gb.empty()) {
      Polynomial nf =
          normal_form(Polynomial(ring, {Term{mpq_class(1), prod}}), gb, order);
      for (const Term& t : nf.terms()) entry.emplace_back(idx.at(t.mono), t.coeff);
    }
    return cache.emplace(m, std::move(entry)).first->second;
  }
};

// rank of the Koszul differential (Lambda^i tensor (S/I)_{j-i}) ->
// (Lambda^(i-1) tensor (S/I)_{j-i+1}), block-decomposed by grading class
long koszul_rank(KoszulContext& ctx, int i, int j, ExecMode mode) {
  int sd = j - i;
  if (i < 1 || i > ctx.nvars || sd < 0 || sd > ctx.maxdeg) return 0;
  const std::vector<Monomial>& src = ctx.std_mons[static_cast<std::size_t>(sd)];
  if (src.empty()) return 0;
  std::vector<std::vector<int>> sigma = combinations(ctx.nvars, i);
  std::vector<std::vector<int>> tau = combinations(ctx.nvars, i - 1);
  std::unordered_map<std::uint32_t, int> tau_index;
  for (std::size_t k = 0; k < tau.size(); ++k)
    tau_index[comb_mask(tau[k])] = static_cast<int>(k);
  std::size_t tgt_block = ctx.std_mons[static_cast<std::size_t>(sd + 1)].size();

  // group source elements by grading class; the differential preserves the
  // class, so the matrix is block diagonal across groups
  std::map<std::string, std::vector<SparseRow>> groups;
  for (const std::vector<int>& s : sigma) {
    Monomial smono;
    for (int v : s) smono = smono * Monomial::var(v);
    std::uint32_t smask = comb_mask(s);
    for (const Monomial& m : src) {
      SparseRow row;
      std::map<int, mpq_class> acc;
      for (std::size_t k = 0; k < s.size(); ++k) {
        int l = s[k];
        int t = tau_index.at(smask & ~(1u << l));
        int sign = (k % 2 == 0) ? 1 : -1;
        for (const auto& [col, coeff] : ctx.mult(l, m)) {
          mpq_class v = coeff * sign;
          acc[t * static_cast<int>(tgt_block) + col] += v;
        }
      }
      mpz_class den = 1;
      for (const auto& [col, v] : acc)
        if (v != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
      for (const auto& [col, v] : acc) {
        if (v == 0) continue;
        mpq_class scaled = v * den;
        row.v.emplace_back(col, mpz_class(scaled.get_num()));
      }
      if (!row.v.empty())
        groups[class_key(smono * m, ctx.nvars, ctx.grading)].push_back(std::move(row));
    }
  }

  std::vector<std::vector<SparseRow>> blocks;
  blocks.reserve(groups.size());
  for (auto& [key, rows] : groups) blocks.push_back(std::move(rows));
  std::vector<long> ranks(blocks.size(), 0);
  if (mode == ExecMode::Parallel && blocks.size() > 1) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(blocks.size()); ++k)
      ranks[static_cast<std::size_t>(k)] =
          rank_sparse(std::move(blocks[static_cast<std::size_t>(k)]), ExecMode::Serial);
  } else {
    for (std::size_t k = 0; k < blocks.size(); ++k)
      ranks[k] = rank_sparse(std::move(blocks[k]), mode);
  }
  long total = 0;
  for (long r : ranks) total += r;
  return total;
}

}  // namespace

BettiTable betti_table(const Ideal& I, int maxdeg, ExecMode mode, StepBudget* budget) {
  const Ring& r = I.ring();
  int nvars = r->count();
  if (nvars > 5) throw Error("betti_table: rings are limited to 5 variables");
  if (maxdeg > 2 * nvars + 2) throw Error("betti_table: maxdeg exceeds 2*vars+2");
  for (const Polynomial& g : I.gens())
    if (!g.is_homogeneous()) throw Error("betti_table: non-homogeneous ideal");

  KoszulContext ctx(r);
  ctx.nvars = nvars;
  ctx.maxdeg = maxdeg;
  ctx.gb = I.basis(ctx.order, mode, budget);
  ctx.lms = minimalize_monomials(initial_monomials(ctx.gb, ctx.order));
  ctx.grading = detect_grading(ctx.gb);
  ctx.std_mons.resize(static_cast<std::size_t>(maxdeg) + 2);
  ctx.std_index.resize(static_cast<std::size_t>(maxdeg) + 2);
  for (int d = 0; d <= maxdeg + 1; ++d) {
    ctx.std_mons[static_cast<std::size_t>(d)] = standard_monomials(nvars, d, ctx.lms);
    auto& idx = ctx.std_index[static_cast<std::size_t>(d)];
    for (std::size_t k = 0; k < ctx.std_mons[static_cast<std::size_t>(d)].size(); ++k)
      idx[ctx.std_mons[static_cast<std::size_t>(d)][k]] = static_cast<int>(k);
  }

  std::vector<long long> hf =
      hf_from_k(k_polynomial(ctx.lms, nvars), nvars, maxdeg);

  // rank[i][j] of the i-th differential in internal degree j
  std::vector<std::vector<long>> rank(
      static_cast<std::size_t>(nvars) + 2,
      std::vector<long>(static_cast<std::size_t>(maxdeg) + 1, 0));
  for (int i = 1; i <= nvars; ++i)
    for (int j = i; j <= maxdeg; ++j)
      rank[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          koszul_rank(ctx, i, j, mode);

  BettiTable table;
  table.ring = r;
  table.maxdeg = maxdeg;
  for (int i = 1; i <= nvars; ++i) {
    for (int j = 0; j <= maxdeg; ++j) {
      long dim = j - i >= 0 ? binomial(nvars, i) * hf[static_cast<std::size_t>(j - i)] : 0;
      long beta = dim - rank[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                  (i + 1 <= nvars + 1
                       ? rank[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j)]
                       : 0);
      if (beta != 0) table.entries[{i - 1, j}] = beta;  // beta_{i,j}(I) = beta_{i+1,j}(S/I)
    }
  }
  return table;
}

std::optional<std::vector<int>> pure_type(const BettiTable& b) {
  if (b.entries.empty()) return std::vector<int>{};
  int top = 0;
  for (const auto& [ij, rank] : b.entries) top = std::max(top, ij.first);
  std::vector<int> type;
  for (int i = 0; i <= top; ++i) {
    std::vector<int> degs;
    for (const auto& [ij, rank] : b.entries)
      if (ij.first == i && rank != 0) degs.push_back(ij.second);
    if (degs.size() != 1) return std::nullopt;
    type.push_back(degs.front());
  }
  return type;
}

int regularity(const BettiTable& b) {
  if (b.entries.empty()) throw Error("regularity of an empty table");
  int r = 0;
  for (const auto& [ij, rank] : b.entries) r = std::max(r, ij.second - ij.first);
  return r;
}

std::vector<long long> herzog_kuhl(const std::vector<int>& type, int codim,
                                   long long degree) {
  if (codim < 1 || static_cast<int>(type.size()) != codim)
    throw Error("herzog_kuhl: type length must equal codim");
  for (int i = 1; i < codim; ++i)
    if (type[static_cast<std::size_t>(i)] <= type[static_cast<std::size_t>(i) - 1])
      throw Error("herzog_kuhl: type must be strictly increasing");
  // Sum_{i=0..c} (-1)^i beta_i d_i^k = 0 for k < c, with d_0 = 0, beta_0 = 1
  QMat a(static_cast<std::size_t>(codim), QVec(static_cast<std::size_t>(codim), 0));
  QVec rhs(static_cast<std::size_t>(codim), 0);
  for (int k = 0; k < codim; ++k) {
    for (int i = 1; i <= codim; ++i) {
      mpq_class dk = 1;
      for (int t = 0; t < k; ++t) dk *= type[static_cast<std::size_t>(i) - 1];
      a[static_cast<std::size_t>(k)][static_cast<std::size_t>(i) - 1] =
          (i % 2 == 0) ? dk : mpq_class(-dk);
    }
    rhs[static_cast<std::size_t>(k)] = (k == 0) ? mpq_class(-1) : mpq_class(0);
  }
  QVec sol = solve_square(std::move(a), std::move(rhs));
  std::vector<long long> beta;
  for (const mpq_class& x : sol) {
    if (x.get_den() != 1 || x <= 0)
      throw Error("herzog_kuhl: system has no positive integral solution");
    beta.push_back(static_cast<long long>(x.get_num().get_si()));
  }
  // degree identity: sum (-1)^i beta_i d_i^c = (-1)^c c! deg
  mpz_class lhs = 0;
  for (int i = 1; i <= codim; ++i) {
    mpz_class dk = 1;
    for (int t = 0; t < codim; ++t) dk *= type[static_cast<std::size_t>(i) - 1];
    mpz_class bi(static_cast<long>(beta[static_cast<std::size_t>(i) - 1]));
    lhs += (i % 2 == 0 ? dk : mpz_class(-dk)) * bi;
  }
  mpz_class want(static_cast<long>(degree));
  for (int t = 2; t <= codim; ++t) want *= t;
  if (codim % 2 == 1) want = -want;
  if (lhs != want) throw Error("herzog_kuhl: type is inconsistent with the degree");
  return beta;
}

namespace {

BettiTable doubled(const BettiTable& b) {
  BettiTable out;
  out.ring = b.ring;
  out.maxdeg = 2 * b.maxdeg;
  for (const auto& [ij, rank] : b.entries) out.entries[{ij.first, 2 * ij.second}] = rank;
  return out;
}

std::string table_text(const BettiTable& b) {
  std::string s;
  for (const auto& [ij, rank] : b.entries)
    s += "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")=" +
         std::to_string(rank) + " ";
  return s;
}

}  // namespace

VerificationReport transport_check(int n, int p, ExecMode mode, StepBudget* budget) {
  VerificationReport rep;
  rep.subject = "betti-transport n=" + std::to_string(n) + " p=" + std::to_string(p);
  Ring s = ring_x0(n);

  FamilySpec skel(Family::Skeleton, n, p);
  Ideal skeleton_ideal(s, family_generators(skel));

  std::vector<Polynomial> delta_gens, squares_gens;
  for (const std::vector<int>& sigma : subsets(n, p + 1)) {
    Polynomial g1 = Polynomial::constant(s, 1);
    Polynomial g2 = Polynomial::constant(s, 1);
    for (int i : sigma) {
      g1 = g1 * Polynomial::variable(s, i);
      g2 = g2 * Polynomial::variable(s, i, 2);
    }
    delta_gens.push_back(std::move(g1));
    squares_gens.push_back(std::move(g2));
  }
  Ideal delta(s, delta_gens);
  Ideal squares(s, squares_gens);

  BettiTable b_skel, b_delta, b_squares;
  {
    PhaseTimer t(rep, "koszul-skeleton");
    b_skel = betti_table(skeleton_ideal, 2 * n + 2, mode, budget);
  }
  {
    PhaseTimer t(rep, "koszul-monomial");
    b_delta = betti_table(delta, n + 1, mode, budget);
    b_squares = betti_table(squares, 2 * n + 2, mode, budget);
  }

  BettiTable b2 = doubled(b_delta);
  rep.check(b_skel.entries == b2.entries, "skeleton-table-is-doubled-squarefree-table",
            b_skel.entries == b2.entries
                ? table_text(b_skel)
                : table_text(b_skel) + "vs " + table_text(b2));
  rep.check(b_squares.entries == b2.entries, "squares-table-is-doubled-squarefree-table",
            b_squares.entries == b2.entries
                ? table_text(b_squares)
                : table_text(b_squares) + "vs " + table_text(b2));
  return rep;
}

std::string betti_staircase(const BettiTable& b) {
  if (b.entries.empty()) return "(empty table)\n";
  int imax = 0, smin = 0, smax = 0;
  bool first = true;
  for (const auto& [ij, rank] : b.entries) {
    imax = std::max(imax, ij.first);
    int strand = ij.second - ij.first;
    if (first) {
      smin = smax = strand;
      first = false;
    }
    smin = std::min(smin, strand);
    smax = std::max(smax, strand);
  }
  std::string s = "      ";
  for (int i = 0; i <= imax; ++i) s += std::to_string(i) + "\t";
  s += "\n";
  for (int strand = smin; strand <= smax; ++strand) {
    s += std::to_string(strand) + ":    ";
    for (int i = 0; i <= imax; ++i) {
      long v = b.at(i, strand + i);
      s += (v == 0 ? "." : std::to_string(v)) + "\t";
    }
    s += "\n";
  }
  return s;
}

nlohmann::json betti_json(const BettiTable& b) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [ij, rank] : b.entries) {
    nlohmann::json e;
    e["i"] = ij.first;
    e["j"] = ij.second;
    e["rank"] = rank;
    arr.push_back(e);
  }
  return arr;
}

}  // namespace arr
