#include "arr/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <utility>

#include "arr/error.hpp"

namespace arr {

namespace {

// Working polynomial inside the completion loop: terms sorted descending
// under the active order, coefficients kept as coprime integers with a
// positive leading coefficient. Sugar is the phantom homogenized degree.
struct WPoly {
  std::vector<Term> t;
  long sugar = 0;

  bool zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().mono; }
  const mpq_class& lc() const { return t.front().coeff; }
};

void strip_content(WPoly& w) {
  if (w.t.empty()) return;
  mpz_class den_lcm = 1;
  for (const Term& t : w.t)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  mpz_class g = 0;
  for (const Term& t : w.t) {
    mpz_class num = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    if (g == 1 && den_lcm == 1) break;
  }
  mpq_class f(den_lcm, g == 0 ? 1 : g);
  f.canonicalize();
  if (w.t.front().coeff < 0) f = -f;
  if (f != 1)
    for (Term& t : w.t) t.coeff *= f;
}

WPoly make_wpoly(const Polynomial& p, const MonomialOrder& ord) {
  WPoly w;
  w.t = p.terms();
  std::sort(w.t.begin(), w.t.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  w.sugar = p.total_degree();
  strip_content(w);
  return w;
}

Polynomial to_poly(const Ring& r, const WPoly& w) { return Polynomial(r, w.t); }

// out := a*f - b*(q * g), merged along the active order
std::vector<Term> combine(const std::vector<Term>& f, const mpq_class& a,
                          const std::vector<Term>& g, const mpq_class& b,
                          const Monomial& q, const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].mono * q;
    int c = ord.compare(f[i].mono, gm);
    if (c > 0) {
      out.push_back(Term{f[i].coeff * a, f[i].mono});
      ++i;
    } else if (c < 0) {
      out.push_back(Term{g[j].coeff * -b, gm});
      ++j;
    } else {
      mpq_class v = f[i].coeff * a - g[j].coeff * b;
      if (v != 0) out.push_back(Term{std::move(v), f[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(Term{f[i].coeff * a, f[i].mono});
  for (; j < g.size(); ++j) out.push_back(Term{g[j].coeff * -b, g[j].mono * q});
  return out;
}

// Full normal form in the scaled-integer arithmetic (the remainder is only
// meaningful up to a positive rational factor, which completion never needs).
WPoly reduce_scaled(WPoly h, const std::vector<WPoly>& basis, const MonomialOrder& ord,
                    StepBudget* budget) {
  std::size_t done = 0;
  while (done < h.t.size()) {
    const Monomial& m = h.t[done].mono;
    const WPoly* g = nullptr;
    for (const WPoly& b : basis) {
      if (divides(b.lm(), m)) {
        g = &b;
        break;
      }
    }
    if (!g) {
      ++done;
      continue;
    }
    if (budget && !budget->charge()) throw BudgetExceeded("reduction step budget exhausted");
    Monomial q = quotient(m, g->lm());
    h.t = combine(h.t, g->lc(), g->t, h.t[done].coeff, q, ord);
    h.sugar = std::max(h.sugar, static_cast<long>(q.deg) + g->sugar);
    strip_content(h);
  }
  return h;
}

WPoly spoly_scaled(const WPoly& f, const WPoly& g, const MonomialOrder& ord) {
  Monomial l = lcm(f.lm(), g.lm());
  Monomial qf = quotient(l, f.lm());
  Monomial qg = quotient(l, g.lm());
  WPoly s;
  // g.lc() * qf * f - f.lc() * qg * g
  std::vector<Term> shifted;
  shifted.reserve(f.t.size());
  for (const Term& t : f.t) shifted.push_back(Term{t.coeff, t.mono * qf});
  s.t = combine(shifted, g.lc(), g.t, f.lc(), qg, ord);
  s.sugar = std::max(f.sugar + static_cast<long>(qf.deg), g.sugar + static_cast<long>(qg.deg));
  strip_content(s);
  return s;
}

struct Pair {
  int i, j;
  Monomial l;
  long sugar;
};

// Gebauer-Moller pair update on appending basis element t.
void update_pairs(std::vector<Pair>& pairs, const std::vector<WPoly>& basis, int t) {
  const Monomial& lmt = basis[static_cast<std::size_t>(t)].lm();
  // chain-prune existing pairs
  pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                             [&](const Pair& p) {
                               if (!divides(lmt, p.l)) return false;
                               Monomial li = lcm(basis[static_cast<std::size_t>(p.i)].lm(), lmt);
                               Monomial lj = lcm(basis[static_cast<std::size_t>(p.j)].lm(), lmt);
                               return li != p.l && lj != p.l;
                             }),
              pairs.end());
  // candidate pairs (i, t)
  struct Cand {
    int i;
    Monomial l;
    bool coprime;
  };
  std::vector<Cand> cand;
  cand.reserve(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    const Monomial& lmi = basis[static_cast<std::size_t>(i)].lm();
    cand.push_back(Cand{i, lcm(lmi, lmt), coprime(lmi, lmt)});
  }
  // drop candidates whose lcm is a proper multiple of another candidate lcm
  std::vector<bool> dead(cand.size(), false);
  for (std::size_t a = 0; a < cand.size(); ++a) {
    if (dead[a]) continue;
    for (std::size_t b = 0; b < cand.size(); ++b) {
      if (a == b || dead[a]) continue;
      if (cand[b].l != cand[a].l && divides(cand[b].l, cand[a].l)) dead[a] = true;
    }
  }
  // among equal lcms keep one representative, none if any member is coprime
  for (std::size_t a = 0; a < cand.size(); ++a) {
    if (dead[a]) continue;
    bool any_coprime = cand[a].coprime;
    for (std::size_t b = a + 1; b < cand.size(); ++b) {
      if (dead[b] || cand[b].l != cand[a].l) continue;
      dead[b] = true;
      any_coprime = any_coprime || cand[b].coprime;
    }
    if (any_coprime) dead[a] = true;
  }
  for (std::size_t a = 0; a < cand.size(); ++a) {
    if (dead[a]) continue;
    long sugar = std::max(
        basis[static_cast<std::size_t>(cand[a].i)].sugar +
            static_cast<long>(quotient(cand[a].l, basis[static_cast<std::size_t>(cand[a].i)].lm()).deg),
        basis[static_cast<std::size_t>(t)].sugar +
            static_cast<long>(quotient(cand[a].l, lmt).deg));
    pairs.push_back(Pair{cand[a].i, t, cand[a].l, sugar});
  }
}

// True for the pair that should be processed first.
bool pair_before(const Pair& a, const Pair& b, const MonomialOrder& ord) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  int c = ord.compare(a.l, b.l);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

void commit(std::vector<WPoly>& basis, std::vector<Pair>& pairs, WPoly w) {
  basis.push_back(std::move(w));
  update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1);
}

// Minimalize + tail-reduce + monic + sort ascending by leading monomial.
std::vector<Polynomial> reduce_basis(const Ring& ring, std::vector<WPoly> basis,
                                     const MonomialOrder& ord) {
  std::sort(basis.begin(), basis.end(),
            [&](const WPoly& a, const WPoly& b) { return ord.compare(a.lm(), b.lm()) < 0; });
  std::vector<WPoly> minimal;
  for (WPoly& w : basis) {
    bool redundant = false;
    for (const WPoly& k : minimal)
      if (divides(k.lm(), w.lm())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(w));
  }
  // tail reduction; leading monomials are pairwise indivisible so they survive
  std::vector<WPoly> reduced = minimal;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<WPoly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced[i] = reduce_scaled(std::move(reduced[i]), others, ord, nullptr);
  }
  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (const WPoly& w : reduced) {
    Polynomial p = to_poly(ring, w);
    out.push_back(monic(p, ord));
  }
  return out;
}

std::vector<WPoly> ingest(const std::vector<Polynomial>& gens, const Ring& ring,
                          const MonomialOrder& ord, std::vector<Pair>& pairs,
                          StepBudget* budget) {
  std::vector<WPoly> basis;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring)) throw Error("ring mismatch among generators");
    WPoly w = reduce_scaled(make_wpoly(g, ord), basis, ord, budget);
    if (!w.zero()) commit(basis, pairs, std::move(w));
  }
  return basis;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  auto desc = [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; };
  std::vector<std::vector<Term>> sorted(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].is_zero()) throw Error("zero polynomial in division basis");
    if (!same_ring(basis[k].ring(), f.ring())) throw Error("ring mismatch");
    sorted[k] = basis[k].terms();
    std::sort(sorted[k].begin(), sorted[k].end(), desc);
  }
  std::vector<Term> h = f.terms();
  std::sort(h.begin(), h.end(), desc);
  std::size_t done = 0;
  while (done < h.size()) {
    const Monomial& m = h[done].mono;
    std::size_t gi = basis.size();
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (divides(sorted[k].front().mono, m)) {
        gi = k;
        break;
      }
    }
    if (gi == basis.size()) {
      ++done;
      continue;
    }
    // h -= (c / lc) * q * g, exact rational arithmetic
    Monomial q = quotient(m, sorted[gi].front().mono);
    mpq_class c = h[done].coeff / sorted[gi].front().coeff;
    h = combine(h, mpq_class(1), sorted[gi], c, q, order);
  }
  return Polynomial(f.ring(), std::move(h));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw Error("s-polynomial of zero");
  Term tf = leading_term(f, order);
  Term tg = leading_term(g, order);
  Monomial l = lcm(tf.mono, tg.mono);
  Polynomial a = mul_term(f, mpq_class(1) / tf.coeff, quotient(l, tf.mono));
  Polynomial b = mul_term(g, mpq_class(1) / tg.coeff, quotient(l, tg.mono));
  return a - b;
}

namespace {

std::vector<Polynomial> buchberger_impl(const std::vector<Polynomial>& gens,
                                        const MonomialOrder& order, ExecMode mode,
                                        StepBudget* budget, bool batched) {
  if (gens.empty()) return {};
  const Ring& ring = gens.front().ring();
  std::vector<Pair> pairs;
  std::vector<WPoly> basis = ingest(gens, ring, order, pairs, budget);

  while (!pairs.empty()) {
    long smin = pairs.front().sugar;
    for (const Pair& p : pairs) smin = std::min(smin, p.sugar);
    std::vector<Pair> batch;
    if (batched) {
      auto keep = pairs.begin();
      for (auto it = pairs.begin(); it != pairs.end(); ++it) {
        if (it->sugar == smin)
          batch.push_back(*it);
        else
          *keep++ = *it;
      }
      pairs.erase(keep, pairs.end());
    } else {
      auto best = pairs.begin();
      for (auto it = pairs.begin(); it != pairs.end(); ++it)
        if (pair_before(*it, *best, order)) best = it;
      batch.push_back(*best);
      pairs.erase(best);
    }
    std::sort(batch.begin(), batch.end(),
              [&](const Pair& a, const Pair& b) { return pair_before(a, b, order); });

    std::vector<WPoly> red(batch.size());
    std::atomic<bool> over{false};
    if (mode == ExecMode::Parallel && batch.size() > 1) {
#pragma omp parallel for schedule(dynamic)
      for (long k = 0; k < static_cast<long>(batch.size()); ++k) {
        if (over.load(std::memory_order_relaxed)) continue;
        const Pair& p = batch[static_cast<std::size_t>(k)];
        try {
          red[static_cast<std::size_t>(k)] =
              reduce_scaled(spoly_scaled(basis[static_cast<std::size_t>(p.i)],
                                         basis[static_cast<std::size_t>(p.j)], order),
                            basis, order, budget);
        } catch (const BudgetExceeded&) {
          over.store(true, std::memory_order_relaxed);
        }
      }
    } else {
      for (std::size_t k = 0; k < batch.size(); ++k) {
        const Pair& p = batch[k];
        red[k] = reduce_scaled(spoly_scaled(basis[static_cast<std::size_t>(p.i)],
                                            basis[static_cast<std::size_t>(p.j)], order),
                               basis, order, budget);
      }
    }
    if (over.load()) throw BudgetExceeded("reduction step budget exhausted");

    std::size_t snapshot = basis.size();
    for (WPoly& r : red) {
      if (r.zero()) continue;
      if (basis.size() > snapshot) r = reduce_scaled(std::move(r), basis, order, budget);
      if (!r.zero()) commit(basis, pairs, std::move(r));
    }
  }
  return reduce_basis(ring, std::move(basis), order);
}

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order, ExecMode mode,
                                   StepBudget* budget) {
  return buchberger_impl(gens, order, mode, budget, true);
}

std::vector<Polynomial> buchberger_reference(const std::vector<Polynomial>& gens,
                                             const MonomialOrder& order, StepBudget* budget) {
  return buchberger_impl(gens, order, ExecMode::Serial, budget, false);
}

bool is_groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) return true;
  const Ring& ring = gens.front().ring();
  std::vector<WPoly> ws;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) throw Error("zero generator");
    if (!same_ring(g.ring(), ring)) throw Error("ring mismatch");
    ws.push_back(make_wpoly(g, order));
  }
  int n = static_cast<int>(ws.size());
  struct PairInfo {
    int i, j;
    Monomial l;
  };
  std::vector<PairInfo> todo;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      todo.push_back(PairInfo{i, j, lcm(ws[static_cast<std::size_t>(i)].lm(),
                                        ws[static_cast<std::size_t>(j)].lm())});
  std::sort(todo.begin(), todo.end(), [&](const PairInfo& a, const PairInfo& b) {
    if (a.l.deg != b.l.deg) return a.l.deg < b.l.deg;
    int c = order.compare(a.l, b.l);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::set<std::pair<int, int>> done;
  for (const PairInfo& p : todo) {
    const Monomial& lmi = ws[static_cast<std::size_t>(p.i)].lm();
    const Monomial& lmj = ws[static_cast<std::size_t>(p.j)].lm();
    if (coprime(lmi, lmj)) {
      done.insert({p.i, p.j});
      continue;
    }
    bool chain = false;
    for (int k = 0; k < n && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!divides(ws[static_cast<std::size_t>(k)].lm(), p.l)) continue;
      auto ik = std::minmax(p.i, k);
      auto kj = std::minmax(k, p.j);
      if (done.count({ik.first, ik.second}) && done.count({kj.first, kj.second})) chain = true;
    }
    if (chain) {
      done.insert({p.i, p.j});
      continue;
    }
    WPoly s = spoly_scaled(ws[static_cast<std::size_t>(p.i)], ws[static_cast<std::size_t>(p.j)],
                           order);
    if (!reduce_scaled(std::move(s), ws, order, nullptr).zero()) return false;
    done.insert({p.i, p.j});
  }
  return true;
}

bool member(const Polynomial& f, const Ideal& I, const MonomialOrder& order, ExecMode mode,
            StepBudget* budget) {
  if (!same_ring(f.ring(), I.ring())) throw Error("ring mismatch");
  if (f.is_zero()) return true;
  const std::vector<Polynomial>& gb = I.basis(order, mode, budget);
  if (gb.empty()) return false;
  return normal_form(f, gb, order).is_zero();
}

namespace {

Polynomial lift(const Polynomial& p, const Ring& big, int offset) {
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    Monomial m;
    for (int i = 0; i < p.ring()->count(); ++i)
      m.e[static_cast<std::size_t>(i + offset)] = t.mono.e[static_cast<std::size_t>(i)];
    m.deg = t.mono.deg;
    out.push_back(Term{t.coeff, m});
  }
  return Polynomial(big, std::move(out));
}

Polynomial project_down(const Polynomial& p, const Ring& small, int offset) {
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    Monomial m;
    for (int i = 0; i < small->count(); ++i)
      m.e[static_cast<std::size_t>(i)] = t.mono.e[static_cast<std::size_t>(i + offset)];
    m.deg = t.mono.deg;
    out.push_back(Term{t.coeff, m});
  }
  return Polynomial(small, std::move(out));
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<int>& vars, ExecMode mode,
                StepBudget* budget) {
  std::vector<int> lead = vars;
  std::sort(lead.begin(), lead.end());
  lead.erase(std::unique(lead.begin(), lead.end()), lead.end());
  for (int v : lead)
    if (v < 0 || v >= I.ring()->count()) throw Error("eliminate: variable index out of range");
  if (lead.empty()) {
    Ideal out(I.ring(), I.basis(canonical_order(I.ring()), mode, budget));
    out.prime_cache(canonical_order(I.ring()), out.gens());
    return out;
  }
  MonomialOrder ord = MonomialOrder::elimination(I.ring(), lead);
  const std::vector<Polynomial>& gb = I.basis(ord, mode, budget);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb) {
    bool uses = false;
    for (int v : lead) uses = uses || g.uses_var(v);
    if (!uses) kept.push_back(g);
  }
  // The kept polynomials are the reduced GB of the elimination ideal, and on
  // tag-free monomials the block-tail grevlex agrees with the canonical
  // order, so the canonical cache can be primed directly.
  Ideal out(I.ring(), kept);
  out.prime_cache(canonical_order(I.ring()), kept);
  return out;
}

Ideal intersect(const Ideal& I, const Ideal& J, ExecMode mode, StepBudget* budget) {
  if (!same_ring(I.ring(), J.ring())) throw Error("ring mismatch");
  const Ring& r = I.ring();
  std::string tag = "t";
  while (r->index_of(tag) >= 0) tag += "_";
  std::vector<std::string> names;
  names.push_back(tag);
  for (const std::string& n : r->names()) names.push_back(n);
  Ring ext = make_ring(std::move(names));

  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  const MonomialOrder canon = canonical_order(r);
  const std::vector<Polynomial>& gi = I.has_cached(canon) ? I.basis(canon) : I.gens();
  const std::vector<Polynomial>& gj = J.has_cached(canon) ? J.basis(canon) : J.gens();
  for (const Polynomial& g : gi) gens.push_back(t * lift(g, ext, 1));
  for (const Polynomial& g : gj) gens.push_back(one_minus_t * lift(g, ext, 1));

  MonomialOrder ord = MonomialOrder::elimination(ext, {0});
  std::vector<Polynomial> gb = buchberger(gens, ord, mode, budget);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb)
    if (!g.uses_var(0)) kept.push_back(project_down(g, r, 1));
  Ideal out(r, kept);
  out.prime_cache(canon, kept);
  return out;
}

Ideal intersect_all(const std::vector<Ideal>& ideals, ExecMode mode, StepBudget* budget) {
  if (ideals.empty()) throw Error("intersect_all needs at least one ideal");
  Ideal acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k)
    acc = intersect(acc, ideals[k], mode, budget);
  return acc;
}

bool ideals_equal(const Ideal& I, const Ideal& J, const MonomialOrder& order, ExecMode mode,
                  StepBudget* budget) {
  if (!same_ring(I.ring(), J.ring())) return false;
  const std::vector<Polynomial>& a = I.basis(order, mode, budget);
  const std::vector<Polynomial>& b = J.basis(order, mode, budget);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::vector<Monomial> initial_monomials(const std::vector<Polynomial>& basis,
                                        const MonomialOrder& order) {
  std::vector<Monomial> out;
  out.reserve(basis.size());
  for (const Polynomial& g : basis) out.push_back(leading_term(g, order).mono);
  return out;
}

}  // namespace arr
