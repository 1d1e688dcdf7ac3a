#include "arr/hilbert.hpp"

#include <algorithm>
#include <unordered_map>

#include "arr/error.hpp"

namespace arr {

namespace {

using ZPoly = std::vector<long long>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a + t^d * b
ZPoly add_shifted(const ZPoly& a, const ZPoly& b, std::size_t d) {
  ZPoly r(std::max(a.size(), b.size() + d), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + d] += b[i];
  trim(r);
  return r;
}

// a * (1 - t^d)
ZPoly mul_one_minus(const ZPoly& a, std::size_t d) {
  ZPoly r(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] += a[i];
    r[i + d] -= a[i];
  }
  trim(r);
  return r;
}

long long eval_at_one(const ZPoly& a) {
  long long s = 0;
  for (long long c : a) s += c;
  return s;
}

bool mono_before(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg;
  for (int i = 0; i < Monomial::kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

struct KMemo {
  std::unordered_map<std::string, ZPoly> table;
};

ZPoly k_rec(std::vector<Monomial> gens, int nvars, KMemo& memo) {
  if (gens.empty()) return {1};
  for (const Monomial& g : gens)
    if (g.deg == 0) return {};  // unit ideal
  // occurrence counts pick the pivot
  std::vector<int> occ(static_cast<std::size_t>(nvars), 0);
  for (const Monomial& g : gens)
    for (int i = 0; i < nvars; ++i)
      if (g[i] > 0) ++occ[static_cast<std::size_t>(i)];
  int pivot = 0;
  for (int i = 1; i < nvars; ++i)
    if (occ[static_cast<std::size_t>(i)] > occ[static_cast<std::size_t>(pivot)]) pivot = i;
  if (occ[static_cast<std::size_t>(pivot)] <= 1) {
    // pairwise coprime: product of (1 - t^deg)
    ZPoly r = {1};
    for (const Monomial& g : gens) r = mul_one_minus(r, g.deg);
    return r;
  }

  std::string key;
  key.reserve(gens.size() * static_cast<std::size_t>(nvars) * 2);
  for (const Monomial& g : gens) key += monomial_key(g, nvars);
  auto it = memo.table.find(key);
  if (it != memo.table.end()) return it->second;

  // K(I) = K(I + <x>) + t * K(I : x)
  std::vector<Monomial> plus;
  for (const Monomial& g : gens)
    if (g[pivot] == 0) plus.push_back(g);
  plus.push_back(Monomial::var(pivot));
  std::sort(plus.begin(), plus.end(), mono_before);

  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (Monomial g : gens) {
    if (g[pivot] > 0) {
      --g.e[static_cast<std::size_t>(pivot)];
      --g.deg;
    }
    colon.push_back(g);
  }
  colon = minimalize_monomials(std::move(colon));

  ZPoly r = add_shifted(k_rec(std::move(plus), nvars, memo),
                        k_rec(std::move(colon), nvars, memo), 1);
  memo.table.emplace(std::move(key), r);
  return r;
}

}  // namespace

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), mono_before);
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : out)
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(remaining);
      cur.deg = static_cast<std::uint32_t>(degree);
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

std::vector<long long> k_polynomial(std::vector<Monomial> gens, int nvars) {
  KMemo memo;
  return k_rec(minimalize_monomials(std::move(gens)), nvars, memo);
}

std::vector<long long> hf_from_k(const std::vector<long long>& k, int nvars, int maxdeg) {
  std::vector<long long> a(static_cast<std::size_t>(maxdeg) + 1, 0);
  for (std::size_t i = 0; i < k.size() && i < a.size(); ++i) a[i] = k[i];
  for (int pass = 0; pass < nvars; ++pass)
    for (std::size_t i = 1; i < a.size(); ++i) a[i] += a[i - 1];
  return a;
}

HilbertData hilbert_from_monomials(std::vector<Monomial> gens, int nvars) {
  HilbertData h;
  h.numerator = k_polynomial(std::move(gens), nvars);
  ZPoly q = h.numerator;
  if (q.empty()) {
    h.dim = -1;  // unit ideal
    h.degree = 0;
    return h;
  }
  int cancelled = 0;
  while (eval_at_one(q) == 0) {
    // divide by (1 - t): prefix sums, top coefficient cancels
    ZPoly next(q.size() - 1, 0);
    long long run = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      run += q[i];
      next[i] = run;
    }
    trim(next);
    q = std::move(next);
    ++cancelled;
  }
  h.dim = nvars - cancelled;
  h.degree = std::abs(eval_at_one(q));
  return h;
}

namespace {

std::vector<Monomial> initial_ideal_of(const Ideal& I, const MonomialOrder& order,
                                       ExecMode mode, StepBudget* budget) {
  for (const Polynomial& g : I.gens())
    if (!g.is_homogeneous()) throw Error("hilbert: non-homogeneous ideal");
  return initial_monomials(I.basis(order, mode, budget), order);
}

}  // namespace

HilbertData hilbert(const Ideal& I, const MonomialOrder& order, ExecMode mode,
                    StepBudget* budget) {
  return hilbert_from_monomials(initial_ideal_of(I, order, mode, budget), I.ring()->count());
}

std::vector<long long> hf_values(const Ideal& I, const MonomialOrder& order, int maxdeg,
                                 ExecMode mode, StepBudget* budget) {
  return hf_from_k(k_polynomial(initial_ideal_of(I, order, mode, budget), I.ring()->count()),
                   I.ring()->count(), maxdeg);
}

}  // namespace arr
