// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every check is an exact rational identity; tolerance is zero.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "arr/betti.hpp"
#include "arr/dodeca.hpp"
#include "arr/families.hpp"
#include "arr/groebner.hpp"
#include "arr/hilbert.hpp"
#include "arr/linalg.hpp"
#include "arr/partitions.hpp"
#include "arr/polynomial.hpp"

using namespace arr;
using clk = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const char* name, bool ok, double secs, const std::string& note = "") {
  std::printf("[%s] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name, secs,
              note.empty() ? "" : " :: ", note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double secs_since(clk::time_point t0) {
  return std::chrono::duration<double>(clk::now() - t0).count();
}

std::vector<Polynomial> squares_ideal_gens(const Ring& s, int n, int p) {
  std::vector<Polynomial> gens;
  for (const std::vector<int>& sigma : subsets(n, p + 1)) {
    Polynomial q = Polynomial::constant(s, 1);
    for (int i : sigma) q = q * Polynomial::variable(s, i, 2);
    gens.push_back(q);
  }
  return gens;
}

// A1: the reflection-arrangement family identities
void family_identities() {
  auto t0 = clk::now();
  bool ok = true;
  std::string note;
  auto run = [&](const FamilySpec& spec) {
    VerificationReport rep = verify_family(spec);
    if (!rep.ok()) {
      ok = false;
      if (note.empty()) note = spec.to_string();
    }
  };
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m <= 2; ++m) {
      for (int p = 2; p <= n; ++p) run(FamilySpec(Family::LiLi, n, p, m));
      for (int p = 1; p < n; ++p) run(FamilySpec(Family::KL, n, p, m));
    }
  for (int n = 2; n <= 3; ++n) {
    for (int p = 2; p <= n; ++p) run(FamilySpec(Family::LiLi, n, p, 3));
    for (int p = 1; p < n; ++p) run(FamilySpec(Family::KL, n, p, 3));
  }
  report("A1 family ideal identities (n<=4, m<=2; rational route m=3, n<=3)", ok,
         secs_since(t0), note);
}

// A2: the skeleton generators are a universal-enough Groebner basis
void skeleton_groebner() {
  auto t0 = clk::now();
  bool ok = true;
  std::string note;
  const std::uint64_t seed = 2024;
  for (int n = 2; n <= 4 && ok; ++n) {
    for (int p = 0; p < n && ok; ++p) {
      FamilySpec spec(Family::Skeleton, n, p);
      Ring s = spec.ring();
      std::vector<Polynomial> pi = family_generators(spec);
      if (!is_groebner(pi, canonical_order(s)) || !is_groebner(pi, lex_x0_least(s))) {
        ok = false;
        note = spec.to_string() + " named orders";
        break;
      }
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<long> dist(1, 100);
      for (int k = 0; k < 20; ++k) {
        std::vector<long> w(static_cast<std::size_t>(s->count()));
        for (long& x : w) x = dist(rng);
        w[static_cast<std::size_t>(s->index_of("x0"))] = 1;
        if (!is_groebner(pi, MonomialOrder::weight_order(s, std::move(w)))) {
          ok = false;
          note = spec.to_string() + " weight order " + std::to_string(k);
          break;
        }
      }
      if (!ok) break;
      auto comps = components(spec);
      long long expected = binomial(n, p);
      for (int i = 0; i < n - p; ++i) expected *= 2;
      if (static_cast<long long>(comps.size()) != expected) {
        ok = false;
        note = spec.to_string() + " component count";
        break;
      }
      if (!ideals_equal(Ideal(s, pi), brute_force_ideal(comps), canonical_order(s))) {
        ok = false;
        note = spec.to_string() + " oracle equality";
      }
    }
  }
  report("A2 skeleton Groebner property under x0-least orders + component oracle", ok,
         secs_since(t0), note);
}

// A3: initial-ideal Hilbert functions match the squares ideal
void hilbert_argument() {
  auto t0 = clk::now();
  bool ok = true;
  std::string note;
  for (int n = 2; n <= 4; ++n) {
    for (int p = 0; p < n; ++p) {
      FamilySpec spec(Family::Skeleton, n, p);
      Ring s = spec.ring();
      std::vector<int> x0_first;
      x0_first.push_back(s->index_of("x0"));
      for (int i = 0; i < s->count(); ++i)
        if (i != x0_first[0]) x0_first.push_back(i);
      auto hf_skel = hf_values(Ideal(s, family_generators(spec)),
                               MonomialOrder::grevlex(s, x0_first), 2 * n + 2);
      auto hf_squares =
          hf_values(Ideal(s, squares_ideal_gens(s, n, p)), canonical_order(s), 2 * n + 2);
      if (hf_skel != hf_squares) {
        ok = false;
        if (note.empty()) note = spec.to_string();
      }
    }
  }
  report("A3 Hilbert functions of skeleton and squares ideals agree to 2n+2", ok,
         secs_since(t0), note);
}

// A4: pure resolutions, Herzog-Kuhl ranks, transport, regularity
void pure_type_regularity() {
  auto t0 = clk::now();
  bool ok = true;
  std::string note;
  for (int n = 2; n <= 4; ++n) {
    for (int p = 0; p < n; ++p) {
      FamilySpec spec(Family::Skeleton, n, p);
      Ring s = spec.ring();
      BettiTable b = betti_table(Ideal(s, family_generators(spec)), 2 * n + 2);
      std::vector<int> want;
      for (int d = p + 1; d <= n; ++d) want.push_back(2 * d);
      auto type = pure_type(b);
      if (!type || *type != want) {
        ok = false;
        if (note.empty()) note = spec.to_string() + " type";
        continue;
      }
      long long degree = binomial(n, p);
      for (int i = 0; i < n - p; ++i) degree *= 2;
      std::vector<long long> predicted = herzog_kuhl(want, n - p, degree);
      for (int i = 0; i < n - p; ++i)
        if (b.at(i, want[static_cast<std::size_t>(i)]) != predicted[static_cast<std::size_t>(i)]) {
          ok = false;
          if (note.empty()) note = spec.to_string() + " ranks";
        }
      if (regularity(b) != n + p + 1) {
        ok = false;
        if (note.empty()) note = spec.to_string() + " regularity";
      }
      if (!transport_check(n, p).ok()) {
        ok = false;
        if (note.empty()) note = spec.to_string() + " transport";
      }
    }
  }
  report("A4 pure type (2(p+1)..2n), Herzog-Kuhl ranks, transport, regularity n+p+1", ok,
         secs_since(t0), note);
}

// A5: the 0-skeleton of the square vs the truncation of the closure
void square_example() {
  auto t0 = clk::now();
  bool ok = true;
  std::string note;
  FamilySpec spec(Family::Skeleton, 2, 0);
  auto comps = components(spec);
  if (comps.size() != 4) {
    ok = false;
    note = "component count";
  }
  auto gens = family_generators(spec);
  auto pts = cube_truncation_points_n2();
  if (pts.size() != 6) {
    ok = false;
    note = "truncation point count " + std::to_string(pts.size());
  }
  std::set<std::string> keys;
  int extra = 0;
  for (const auto& pt : pts) {
    std::string key;
    for (const mpq_class& x : pt) key += x.get_str() + ":";
    keys.insert(key);
    bool on_variety = true;
    for (const Polynomial& g : gens)
      if (evaluate(g, pt) != 0) on_variety = false;
    if (!on_variety) ++extra;
  }
  if (!keys.count("0:0:1:") || !keys.count("0:1:0:")) {
    ok = false;
    note = "expected points at infinity missing";
  }
  if (extra != 2) {
    ok = false;
    note = "extra-point count " + std::to_string(extra);
  }
  report("A5 four vertices vs six truncation points, two off the variety", ok,
         secs_since(t0), note);
}

// A6: the power-matrix rank counterexample at (0,0,z)
void truncation_example() {
  auto t0 = clk::now();
  bool ok = true;
  Ring r3 = ring_x(3);
  QVec pt = {0, 0, 1};
  ok = ok && evaluate(parse_poly("x1", r3), pt) == 0 &&
       evaluate(parse_poly("x2", r3), pt) == 0;
  ok = ok && !truncation_rank_test(3, 2, 1, pt);
  FamilySpec kl(Family::KL, 3, 1, 2);
  ok = ok && evaluate(family_generators(kl)[1], pt) == -1;
  report("A6 truncation point (0,0,1) defeats the rank test and a KL generator", ok,
         secs_since(t0));
}

// A7: the dodecahedron edge arrangement
void dodecahedron() {
  auto t0 = clk::now();
  bool ok = true;
  std::string note;
  if (binomial(12, 8) != 495) ok = false;
  auto cover8 = cover_search(8);
  auto cover9 = cover_search(9);
  if (!cover8.empty()) {
    ok = false;
    note = "unexpected 8-cover";
  }
  if (cover9.empty()) {
    ok = false;
    note = "no 9-cover";
  }
  auto lines = edge_lines();
  if (lines.size() != 30) {
    ok = false;
    note = "line count";
  }
  int counts[13] = {0};
  for (const ProjLine& l : lines) {
    ++counts[l.facets[0]];
    ++counts[l.facets[1]];
  }
  for (int f = 1; f <= 12; ++f)
    if (counts[f] != 5) {
      ok = false;
      note = "incidence not 5-regular";
    }
  StepBudget budget(200000000);
  DodecaIdeal di = dodeca_ideal(exec_mode(), &budget);
  if (!di.complete) {
    ok = false;
    note = "fold budget exhausted after " + std::to_string(di.lines_folded) + " lines";
  } else {
    for (const auto& [deg, count] : di.beta0) {
      if (deg < 8 && count != 0) {
        ok = false;
        note = "generator below degree 8";
      }
      if (deg == 8 && count != 10) {
        ok = false;
        note = "degree-8 generator count " + std::to_string(count);
      }
    }
    HilbertData h = hilbert(di.ideal, canonical_order(di.ideal.ring()));
    if (h.dim != 2 || h.degree != 30) {
      ok = false;
      note = "dim/degree " + std::to_string(h.dim) + "/" + std::to_string(h.degree);
    }
  }
  report("A7 dodecahedron: no 8-cover of 495, 9-cover exists, 10 octic generators", ok,
         secs_since(t0), note);
}

// A8: kernel property suite
void kernel_properties() {
  auto t0 = clk::now();
  bool ok = true;
  std::string note;

  // reduced-GB uniqueness under 100 generator shuffles, 5 fixed ideals
  {
    std::vector<std::vector<Polynomial>> fixed;
    fixed.push_back(family_generators(FamilySpec(Family::Skeleton, 3, 1)));
    fixed.push_back(family_generators(FamilySpec(Family::Skeleton, 4, 2)));
    fixed.push_back(family_generators(FamilySpec(Family::KL, 4, 2, 2)));
    Ring r = ring_x0(3);
    fixed.push_back({parse_poly("x1^2-x0*x2", r), parse_poly("x1*x2-x0*x3", r),
                     parse_poly("x2^2-x1*x3", r)});
    fixed.push_back({parse_poly("x1^3-x0^2*x2", r), parse_poly("x2^2-x0*x1", r),
                     parse_poly("x1*x2*x3-x0^3", r)});
    std::mt19937_64 rng(404);
    for (std::vector<Polynomial>& gens : fixed) {
      MonomialOrder ord = canonical_order(gens.front().ring());
      auto reference = buchberger(gens, ord);
      for (int k = 0; k < 100; ++k) {
        std::shuffle(gens.begin(), gens.end(), rng);
        if (buchberger(gens, ord) != reference) {
          ok = false;
          note = "shuffle changed a reduced basis";
        }
      }
    }
  }

  // order axioms on 1000 random triples
  {
    Ring r = ring_x0(3);
    std::vector<MonomialOrder> orders = {canonical_order(r), lex_x0_least(r),
                                         MonomialOrder::weight_order(r, {5, 2, 9, 1}),
                                         MonomialOrder::elimination(r, {2})};
    std::mt19937_64 rng(505);
    std::uniform_int_distribution<int> d(0, 5);
    Monomial one;
    for (int k = 0; k < 1000 && ok; ++k) {
      Monomial u, v, w;
      for (int i = 0; i < 4; ++i) {
        int eu = d(rng), ev = d(rng), ew = d(rng);
        u.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(eu);
        u.deg += static_cast<std::uint32_t>(eu);
        v.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(ev);
        v.deg += static_cast<std::uint32_t>(ev);
        w.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(ew);
        w.deg += static_cast<std::uint32_t>(ew);
      }
      for (const MonomialOrder& ord : orders) {
        int c = ord.compare(u, v);
        if (c != -ord.compare(v, u)) ok = false;
        if ((c == 0) != (u == v)) ok = false;
        if (c < 0 && !ord.less(u * w, v * w)) ok = false;
        if (!(u == one) && !ord.greater(u, one)) ok = false;
      }
      if (!ok) note = "order axiom violation";
    }
  }

  // intersect/member equivalence on 50 random low-degree polynomials
  {
    Ring r = ring_x(3);
    MonomialOrder g = canonical_order(r);
    Ideal A(r, {parse_poly("x1-x2", r), parse_poly("x2^2-x3^2", r)});
    Ideal B(r, {parse_poly("x1+x3", r)});
    Ideal C = intersect(A, B);
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 2);
    for (int k = 0; k < 50; ++k) {
      std::vector<Term> ts;
      for (int t = 0; t < 4; ++t) {
        Monomial m;
        for (int i = 0; i < 3; ++i) {
          int e = expo(rng);
          m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
          m.deg += static_cast<std::uint32_t>(e);
        }
        ts.push_back(Term{mpq_class(coeff(rng)), m});
      }
      Polynomial f(r, std::move(ts));
      if (member(f, C, g) != (member(f, A, g) && member(f, B, g))) {
        ok = false;
        note = "intersect/member mismatch";
      }
    }
  }

  // substitution functoriality on random pairs
  {
    Ring r = ring_x(2);
    std::vector<Polynomial> images = {parse_poly("x1^2-x2", r), parse_poly("x2^2+x1", r)};
    std::mt19937_64 rng(707);
    std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 2);
    auto rand_poly = [&]() {
      std::vector<Term> ts;
      for (int t = 0; t < 4; ++t) {
        Monomial m;
        for (int i = 0; i < 2; ++i) {
          int e = expo(rng);
          m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
          m.deg += static_cast<std::uint32_t>(e);
        }
        ts.push_back(Term{mpq_class(coeff(rng)), m});
      }
      return Polynomial(r, std::move(ts));
    };
    for (int k = 0; k < 30; ++k) {
      Polynomial a = rand_poly(), b = rand_poly();
      if (substitute(a * b, images) != substitute(a, images) * substitute(b, images) ||
          substitute(a + b, images) != substitute(a, images) + substitute(b, images)) {
        ok = false;
        note = "substitution functoriality";
      }
    }
  }

  // Macaulay: HF of the ideal equals HF of its initial ideal, cross-checked
  // by exact rank in degrees <= 6, on 5 fixed ideals
  {
    std::vector<Ideal> fixed;
    Ring r3 = ring_x(3);
    fixed.emplace_back(r3, std::vector<Polynomial>{parse_poly("x1^2-x2^2", r3),
                                                   parse_poly("x1^2-x3^2", r3)});
    fixed.emplace_back(r3, std::vector<Polynomial>{parse_poly("x1*x2", r3),
                                                   parse_poly("x1*x3", r3),
                                                   parse_poly("x2*x3", r3)});
    FamilySpec s31(Family::Skeleton, 3, 1);
    fixed.emplace_back(s31.ring(), family_generators(s31));
    FamilySpec s20(Family::Skeleton, 2, 0);
    fixed.emplace_back(s20.ring(), family_generators(s20));
    fixed.emplace_back(r3, std::vector<Polynomial>{parse_poly("x1^3-x2^3", r3),
                                                   parse_poly("x1*x2-x3^2", r3)});
    for (const Ideal& I : fixed) {
      const Ring& r = I.ring();
      int nv = r->count();
      MonomialOrder g = canonical_order(r);
      auto hf = hf_values(I, g, 6);
      // the initial ideal has the same Hilbert function
      std::vector<Polynomial> in_gens;
      for (const Monomial& m : initial_monomials(I.basis(g), g))
        in_gens.push_back(Polynomial(r, {Term{mpq_class(1), m}}));
      if (hf != hf_values(Ideal(r, in_gens), g, 6)) {
        ok = false;
        note = "initial-ideal HF mismatch";
      }
      // rank of the degree-d multiplication span equals binomial count - HF
      for (int d = 0; d <= 6; ++d) {
        std::vector<Monomial> mons = monomials_of_degree(nv, d);
        std::unordered_map<Monomial, int, MonomialHash> index;
        for (std::size_t k = 0; k < mons.size(); ++k) index[mons[k]] = static_cast<int>(k);
        std::vector<SparseRow> rows;
        for (const Polynomial& gen : I.gens()) {
          long dg = gen.total_degree();
          if (dg > d) continue;
          Polynomial gp = primitive_part(gen);
          for (const Monomial& nu : monomials_of_degree(nv, static_cast<int>(d - dg))) {
            SparseRow row;
            for (const Term& t : gp.terms())
              row.v.emplace_back(index.at(t.mono * nu), mpz_class(t.coeff.get_num()));
            std::sort(row.v.begin(), row.v.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(row));
          }
        }
        long long span = rank_sparse(std::move(rows));
        if (hf[static_cast<std::size_t>(d)] != binomial(nv + d - 1, d) - span) {
          ok = false;
          note = "rank cross-check at degree " + std::to_string(d);
        }
      }
    }
  }

  report("A8 kernel properties: GB uniqueness, order axioms, intersect/member, "
         "substitution, Macaulay HF",
         ok, secs_since(t0), note);
}

}  // namespace

int main() {
  auto t0 = clk::now();
  family_identities();
  skeleton_groebner();
  hilbert_argument();
  pure_type_regularity();
  square_example();
  truncation_example();
  dodecahedron();
  kernel_properties();
  std::printf("acceptance total: %.2fs, %d failure(s)\n", secs_since(t0), failures);
  return failures == 0 ? 0 : 1;
}
