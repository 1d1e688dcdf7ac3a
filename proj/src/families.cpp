#include "arr/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "arr/error.hpp"
#include "arr/hilbert.hpp"
#include "arr/partitions.hpp"

namespace arr {

std::string family_name(Family f) {
  switch (f) {
    case Family::LiLi: return "LiLi";
    case Family::KL: return "KL";
    case Family::Skeleton: return "Skeleton";
    case Family::StanleyReisner: return "StanleyReisner";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "LiLi") return Family::LiLi;
  if (s == "KL") return Family::KL;
  if (s == "Skeleton") return Family::Skeleton;
  if (s == "StanleyReisner") return Family::StanleyReisner;
  throw Error("unknown family: " + s);
}

FamilySpec::FamilySpec(Family f, int n_, int p_, int m_) : family(f), n(n_), p(p_), m(m_) {
  if (n < 1) throw Error("family spec: n must be >= 1");
  switch (family) {
    case Family::LiLi:
      if (p < 2 || p > n) throw Error("LiLi requires 2 <= p <= n");
      break;
    case Family::KL:
      if (p < 1 || p >= n) throw Error("KL requires 1 <= p < n");
      break;
    case Family::Skeleton:
      if (p < 0 || p >= n) throw Error("Skeleton requires 0 <= p < n");
      m = 2;  // squares against x0
      break;
    case Family::StanleyReisner:
      if (p < 0 || p >= n) throw Error("StanleyReisner requires 0 <= p < n");
      m = 1;
      break;
  }
  if (m < 1) throw Error("family spec: m must be >= 1");
}

Ring FamilySpec::ring() const {
  return family == Family::Skeleton ? ring_x0(n) : ring_x(n);
}

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  os << "family=" << family_name(family) << " n=" << n << " p=" << p << " m=" << m;
  return os.str();
}

FamilySpec FamilySpec::parse(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  std::map<std::string, std::string> kv;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error("family spec token without '=': " + tok);
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  if (!kv.count("family") || !kv.count("n") || !kv.count("p"))
    throw Error("family spec needs family=, n=, p=");
  int m = kv.count("m") ? std::stoi(kv["m"]) : 1;
  return FamilySpec(family_from_name(kv["family"]), std::stoi(kv["n"]), std::stoi(kv["p"]), m);
}

namespace {

// coefficient row of a homogeneous linear form
QVec linear_row(const Polynomial& form) {
  QVec row(static_cast<std::size_t>(form.ring()->count()), 0);
  for (const Term& t : form.terms()) {
    if (t.mono.deg != 1) throw Error("expected a homogeneous linear form: " + to_string(form));
    for (int i = 0; i < form.ring()->count(); ++i)
      if (t.mono[i] == 1) row[static_cast<std::size_t>(i)] = t.coeff;
  }
  return row;
}

QMat forms_matrix(const std::vector<Polynomial>& forms) {
  QMat m;
  for (const Polynomial& f : forms) m.push_back(linear_row(f));
  return m;
}

std::string rref_key(const QMat& m) {
  QMat r = rref(m);
  std::string key;
  for (const QVec& row : r) {
    for (const mpq_class& x : row) key += x.get_str() + ",";
    key += ";";
  }
  return key;
}

// x_a^m - x_b^m
Polynomial power_diff(const Ring& r, int a, int b, int m) {
  return Polynomial::variable(r, a, static_cast<std::uint16_t>(m)) -
         Polynomial::variable(r, b, static_cast<std::uint16_t>(m));
}

// iterate sign vectors (+1 first) over `slots` free positions
template <typename F>
void for_each_signs(int slots, F&& f) {
  for (long s = 0; s < (1L << slots); ++s) {
    std::vector<int> signs(static_cast<std::size_t>(slots));
    for (int i = 0; i < slots; ++i) signs[static_cast<std::size_t>(i)] = (s >> i) & 1 ? -1 : 1;
    f(signs);
  }
}

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

LinearSubspace make_subspace(const Ring& r, std::vector<Polynomial> forms) {
  for (const Polynomial& f : forms) {
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 1)
      throw Error("subspace forms must be nonzero homogeneous linear");
    if (!same_ring(f.ring(), r)) throw Error("subspace form ring mismatch");
  }
  QMat m = forms_matrix(forms);
  if (rank_dense(m) != static_cast<int>(forms.size()))
    throw Error("subspace forms are linearly dependent");
  LinearSubspace s;
  s.ring = r;
  s.forms = std::move(forms);
  s.params = nullspace(m, r->count());
  return s;
}

std::vector<Polynomial> family_generators(const FamilySpec& spec) {
  Ring r = spec.ring();
  std::vector<Polynomial> gens;
  auto var_of = [&](int element) {
    // elements of [n] are 1-based; Skeleton's ring has x0 in front
    return spec.family == Family::Skeleton ? element : element - 1;
  };
  switch (spec.family) {
    case Family::LiLi: {
      for (const SetPartition& lam : partitions(spec.n, spec.p - 1)) {
        Polynomial g = Polynomial::constant(r, 1);
        for (const auto& b : lam.blocks)
          for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
              g = g * power_diff(r, var_of(b[i]), var_of(b[j]), spec.m);
        gens.push_back(std::move(g));
      }
      break;
    }
    case Family::KL: {
      for (const SetPartition& lam : unique_block_partitions(spec.n, spec.p + 1)) {
        Polynomial g = Polynomial::constant(r, 1);
        for (const auto& b : lam.blocks) {
          if (b.size() < 2) continue;
          for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
              g = g * power_diff(r, var_of(b[i]), var_of(b[j]), spec.m);
        }
        gens.push_back(std::move(g));
      }
      break;
    }
    case Family::Skeleton: {
      int x0 = r->index_of("x0");
      for (const std::vector<int>& sigma : subsets(spec.n, spec.p + 1)) {
        Polynomial g = Polynomial::constant(r, 1);
        for (int i : sigma)
          g = g * (Polynomial::variable(r, var_of(i), 2) - Polynomial::variable(r, x0, 2));
        gens.push_back(std::move(g));
      }
      break;
    }
    case Family::StanleyReisner: {
      for (const std::vector<int>& sigma : subsets(spec.n, spec.p + 1)) {
        Polynomial g = Polynomial::constant(r, 1);
        for (int i : sigma) g = g * Polynomial::variable(r, var_of(i));
        gens.push_back(std::move(g));
      }
      break;
    }
  }
  return gens;
}

std::vector<LinearSubspace> components(const FamilySpec& spec) {
  if (spec.m > 2)
    throw Error("components with m >= 3 have cyclotomic coefficients; "
                "verify through the rational power identity instead");
  Ring r = spec.ring();
  std::vector<LinearSubspace> comps;
  auto var_of = [&](int element) {
    return spec.family == Family::Skeleton ? element : element - 1;
  };
  switch (spec.family) {
    case Family::LiLi: {
      // points with (m-th powers of) p coordinates equal
      for (const std::vector<int>& sigma : subsets(spec.n, spec.p)) {
        if (spec.m == 1) {
          std::vector<Polynomial> forms;
          for (std::size_t k = 0; k + 1 < sigma.size(); ++k)
            forms.push_back(power_diff(r, var_of(sigma[k]), var_of(sigma[k + 1]), 1));
          comps.push_back(make_subspace(r, std::move(forms)));
        } else {
          // x_sigma[k] = eps_k * x_sigma[0], global sign quotiented away
          for_each_signs(spec.p - 1, [&](const std::vector<int>& signs) {
            std::vector<Polynomial> forms;
            for (std::size_t k = 1; k < sigma.size(); ++k) {
              Polynomial f = Polynomial::variable(r, var_of(sigma[k])) -
                             scale(Polynomial::variable(r, var_of(sigma[0])),
                                   mpq_class(signs[k - 1]));
              forms.push_back(std::move(f));
            }
            comps.push_back(make_subspace(r, std::move(forms)));
          });
        }
      }
      break;
    }
    case Family::KL: {
      // points whose (m-th powers of) coordinates take at most p values
      for (const SetPartition& lam : partitions(spec.n, spec.p)) {
        int slots = 0;
        for (const auto& b : lam.blocks) slots += static_cast<int>(b.size()) - 1;
        if (spec.m == 1) {
          std::vector<Polynomial> forms;
          for (const auto& b : lam.blocks)
            for (std::size_t k = 0; k + 1 < b.size(); ++k)
              forms.push_back(power_diff(r, var_of(b[k]), var_of(b[k + 1]), 1));
          if (forms.empty()) {
            // the all-singleton partition cuts nothing: whole space
            comps.push_back(LinearSubspace{r, {}, nullspace(QMat{}, r->count())});
          } else {
            comps.push_back(make_subspace(r, std::move(forms)));
          }
        } else {
          for_each_signs(slots, [&](const std::vector<int>& signs) {
            std::vector<Polynomial> forms;
            int slot = 0;
            for (const auto& b : lam.blocks)
              for (std::size_t k = 1; k < b.size(); ++k) {
                Polynomial f = Polynomial::variable(r, var_of(b[k])) -
                               scale(Polynomial::variable(r, var_of(b[0])),
                                     mpq_class(signs[static_cast<std::size_t>(slot)]));
                ++slot;
                forms.push_back(std::move(f));
              }
            if (forms.empty())
              comps.push_back(LinearSubspace{r, {}, nullspace(QMat{}, r->count())});
            else
              comps.push_back(make_subspace(r, std::move(forms)));
          });
        }
      }
      break;
    }
    case Family::Skeleton: {
      int x0 = r->index_of("x0");
      for (const std::vector<int>& sigma : subsets(spec.n, spec.n - spec.p)) {
        for_each_signs(static_cast<int>(sigma.size()), [&](const std::vector<int>& signs) {
          std::vector<Polynomial> forms;
          for (std::size_t k = 0; k < sigma.size(); ++k) {
            Polynomial f = Polynomial::variable(r, var_of(sigma[k])) -
                           scale(Polynomial::variable(r, x0), mpq_class(signs[k]));
            forms.push_back(std::move(f));
          }
          comps.push_back(make_subspace(r, std::move(forms)));
        });
      }
      break;
    }
    case Family::StanleyReisner: {
      for (const std::vector<int>& sigma : subsets(spec.n, spec.n - spec.p)) {
        std::vector<Polynomial> forms;
        for (int i : sigma) forms.push_back(Polynomial::variable(r, var_of(i)));
        comps.push_back(make_subspace(r, std::move(forms)));
      }
      break;
    }
  }
  return comps;
}

Ideal brute_force_ideal(const std::vector<LinearSubspace>& comps, ExecMode mode,
                        StepBudget* budget) {
  if (comps.empty()) throw Error("brute_force_ideal: no components");
  std::vector<Ideal> ideals;
  ideals.reserve(comps.size());
  for (const LinearSubspace& c : comps) ideals.push_back(c.ideal());
  return intersect_all(ideals, mode, budget);
}

namespace {

// sigma-wise power ideals of the substitution identity, per family
struct SigmaIdeals {
  std::vector<Ideal> ideals;
  // expected complete intersection data per ideal
  std::vector<int> codims;
  std::vector<long long> degrees;
};

SigmaIdeals sigma_power_ideals(const FamilySpec& spec) {
  Ring r = spec.ring();
  SigmaIdeals out;
  auto var_of = [&](int element) {
    return spec.family == Family::Skeleton ? element : element - 1;
  };
  switch (spec.family) {
    case Family::LiLi:
      for (const std::vector<int>& sigma : subsets(spec.n, spec.p)) {
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < sigma.size(); ++i)
          for (std::size_t j = i + 1; j < sigma.size(); ++j)
            gens.push_back(power_diff(r, var_of(sigma[i]), var_of(sigma[j]), spec.m));
        out.ideals.emplace_back(r, std::move(gens));
        out.codims.push_back(spec.p - 1);
        out.degrees.push_back(ipow(spec.m, spec.p - 1));
      }
      break;
    case Family::KL:
      for (const SetPartition& lam : partitions(spec.n, spec.p)) {
        std::vector<Polynomial> gens;
        for (const auto& b : lam.blocks)
          for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
              gens.push_back(power_diff(r, var_of(b[i]), var_of(b[j]), spec.m));
        out.ideals.emplace_back(r, std::move(gens));
        out.codims.push_back(spec.n - spec.p);
        out.degrees.push_back(ipow(spec.m, spec.n - spec.p));
      }
      break;
    case Family::Skeleton: {
      int x0 = r->index_of("x0");
      for (const std::vector<int>& sigma : subsets(spec.n, spec.n - spec.p)) {
        std::vector<Polynomial> gens;
        for (int i : sigma)
          gens.push_back(Polynomial::variable(r, x0, 2) -
                         Polynomial::variable(r, var_of(i), 2));
        out.ideals.emplace_back(r, std::move(gens));
        out.codims.push_back(spec.n - spec.p);
        out.degrees.push_back(ipow(2, spec.n - spec.p));
      }
      break;
    }
    case Family::StanleyReisner:
      for (const std::vector<int>& sigma : subsets(spec.n, spec.n - spec.p)) {
        std::vector<Polynomial> gens;
        for (int i : sigma) gens.push_back(Polynomial::variable(r, var_of(i)));
        out.ideals.emplace_back(r, std::move(gens));
        out.codims.push_back(spec.n - spec.p);
        out.degrees.push_back(1);
      }
      break;
  }
  return out;
}

long long expected_generator_count(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::LiLi: return stirling2(spec.n, spec.p - 1);
    case Family::KL:
    case Family::Skeleton:
    case Family::StanleyReisner: return binomial(spec.n, spec.p + 1);
  }
  return -1;
}

long long expected_component_count(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::LiLi:
      return spec.m == 1 ? binomial(spec.n, spec.p)
                         : binomial(spec.n, spec.p) * ipow(2, spec.p - 1);
    case Family::KL:
      return spec.m == 1 ? stirling2(spec.n, spec.p)
                         : stirling2(spec.n, spec.p) * ipow(2, spec.n - spec.p);
    case Family::Skeleton:
      return ipow(2, spec.n - spec.p) * binomial(spec.n, spec.p);
    case Family::StanleyReisner:
      return binomial(spec.n, spec.p);
  }
  return -1;
}

}  // namespace

VerificationReport verify_family(const FamilySpec& spec, ExecMode mode, StepBudget* budget) {
  VerificationReport rep;
  rep.subject = spec.to_string();
  Ring r = spec.ring();
  const MonomialOrder canon = canonical_order(r);

  std::vector<Polynomial> gens = family_generators(spec);
  rep.check(static_cast<long long>(gens.size()) == expected_generator_count(spec),
            "generator-count", std::to_string(gens.size()));

  // degree profile by construction
  {
    bool ok = true;
    std::string bad;
    for (const Polynomial& g : gens) {
      long expected = -1;
      switch (spec.family) {
        case Family::LiLi: break;  // varies per partition, checked below
        case Family::KL: expected = spec.m * ((spec.p + 1) * spec.p / 2); break;
        case Family::Skeleton: expected = 2 * (spec.p + 1); break;
        case Family::StanleyReisner: expected = spec.p + 1; break;
      }
      if (expected >= 0 && g.total_degree() != expected) {
        ok = false;
        bad = to_string(g);
      }
      if (!g.is_homogeneous()) {
        ok = false;
        bad = to_string(g);
      }
    }
    if (spec.family == Family::LiLi) {
      auto parts = partitions(spec.n, spec.p - 1);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        long expected = 0;
        for (const auto& b : parts[i].blocks)
          expected += spec.m * static_cast<long>(b.size() * (b.size() - 1) / 2);
        if (gens[i].total_degree() != expected) {
          ok = false;
          bad = to_string(gens[i]);
        }
      }
    }
    rep.check(ok, "generator-degrees", bad);
  }

  Ideal I(r, gens);

  if (spec.m <= 2) {
    PhaseTimer timer(rep, "component-oracle");
    std::vector<LinearSubspace> comps = components(spec);
    rep.check(static_cast<long long>(comps.size()) == expected_component_count(spec),
              "component-count", std::to_string(comps.size()));
    bool vanish = true;
    std::string witness;
    for (const LinearSubspace& c : comps) {
      for (const QVec& pt : sample_points(c, 5)) {
        for (const Polynomial& g : gens) {
          if (evaluate(g, pt) != 0) {
            vanish = false;
            witness = to_string(g);
          }
        }
      }
    }
    rep.check(vanish, "generators-vanish-on-components", witness);
    Ideal oracle = brute_force_ideal(comps, mode, budget);
    bool eq = ideals_equal(I, oracle, canon, mode, budget);
    rep.check(eq, "ideal-equals-component-intersection",
              eq ? "" : "reduced bases differ under the canonical order");
  } else {
    rep.skip("ideal-equals-component-intersection",
             "components are cyclotomic for m >= 3; rational identity checked instead");
  }

  {
    PhaseTimer timer(rep, "power-identity");
    SigmaIdeals si = sigma_power_ideals(spec);
    Ideal folded = intersect_all(si.ideals, mode, budget);
    bool eq = ideals_equal(I, folded, canon, mode, budget);
    rep.check(eq, "power-substitution-identity",
              eq ? "" : "reduced bases differ under the canonical order");

    bool ci_ok = true;
    std::string witness;
    for (std::size_t k = 0; k < si.ideals.size(); ++k) {
      HilbertData h = hilbert(si.ideals[k], canon, mode, budget);
      int codim = r->count() - h.dim;
      if (codim != si.codims[k] || h.degree != si.degrees[k]) {
        ci_ok = false;
        witness = "ideal " + std::to_string(k) + ": codim " + std::to_string(codim) +
                  " degree " + std::to_string(h.degree);
      }
    }
    rep.check(ci_ok, "sigma-ideal-codim-degree", witness);
  }

  return rep;
}

std::vector<LinearSubspace> ci_decomposition(
    const std::vector<std::pair<Polynomial, std::vector<Polynomial>>>& qs, ExecMode mode,
    StepBudget* budget) {
  if (qs.empty()) throw Error("ci_decomposition: empty input");
  Ring r = qs.front().first.ring();
  long long total = 1;
  for (const auto& [q, factors] : qs) {
    if (factors.empty()) throw Error("ci_decomposition: generator without factors");
    Polynomial prod = Polynomial::constant(r, 1);
    for (const Polynomial& f : factors) {
      if (f.is_zero() || f.total_degree() != 1 || !f.is_homogeneous())
        throw Error("ci_decomposition: factors must be homogeneous linear forms");
      prod = prod * f;
    }
    if (prod != q)
      throw Error("ci_decomposition: factor product differs from generator " + to_string(q));
    total *= static_cast<long long>(factors.size());
    if (total > 4096) throw Error("ci_decomposition: too many factor choices");
  }

  std::vector<LinearSubspace> out;
  std::map<std::string, std::size_t> seen;
  std::vector<std::size_t> idx(qs.size(), 0);
  for (;;) {
    std::vector<Polynomial> forms;
    for (std::size_t k = 0; k < qs.size(); ++k) forms.push_back(qs[k].second[idx[k]]);
    LinearSubspace s = make_subspace(r, std::move(forms));
    std::string key = rref_key(forms_matrix(s.forms));
    if (!seen.emplace(key, out.size()).second)
      throw Error("ci_decomposition: duplicate choice ideal (hypothesis violation)");
    out.push_back(std::move(s));
    // advance the mixed-radix counter
    std::size_t k = 0;
    while (k < qs.size() && ++idx[k] == qs[k].second.size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == qs.size()) break;
  }

  if (total <= 64) {
    std::vector<Polynomial> qgens;
    for (const auto& [q, factors] : qs) qgens.push_back(q);
    Ideal I(r, qgens);
    if (!ideals_equal(I, brute_force_ideal(out, mode, budget), canonical_order(r), mode, budget))
      throw Error("ci_decomposition: decomposed intersection differs from the input ideal");
  }
  return out;
}

bool truncation_rank_test(int n, int m, int p, const QVec& point) {
  if (static_cast<int>(point.size()) != n) throw Error("point length must be n");
  QMat mat;
  for (int i = 0; i < n; ++i) {
    QVec row;
    mpq_class xm = 1;
    for (int k = 0; k < m; ++k) xm *= point[static_cast<std::size_t>(i)];
    mpq_class v = 1;
    for (int j = 0; j <= p; ++j) {
      row.push_back(v);
      v *= xm;
    }
    mat.push_back(std::move(row));
  }
  return rank_dense(std::move(mat)) <= p;
}

std::vector<QVec> sample_points(const LinearSubspace& c, int count) {
  static const long kCoeffPool[5] = {1, 2, 3, 5, 7};
  std::vector<QVec> pts;
  if (count <= 0) return pts;
  std::size_t nv = static_cast<std::size_t>(c.ring->count());
  if (c.params.empty()) {
    pts.assign(static_cast<std::size_t>(count), QVec(nv, 0));
    return pts;
  }
  for (int j = 0; j < count; ++j) {
    long mult = 11 * (j / 5) + 1;
    QVec pt(nv, 0);
    for (std::size_t i = 0; i < c.params.size(); ++i) {
      long coeff = kCoeffPool[(i + static_cast<std::size_t>(j)) % 5] * mult;
      for (std::size_t v = 0; v < nv; ++v) pt[v] += coeff * c.params[i][v];
    }
    for (const Polynomial& f : c.forms)
      if (evaluate(f, pt) != 0) throw Error("sample point misses the subspace");
    pts.push_back(std::move(pt));
  }
  return pts;
}

std::vector<QVec> cube_truncation_points_n2() {
  Ring s = ring_x0(2);
  std::vector<Polynomial> lines = {
      parse_poly("x1-x0", s), parse_poly("x1+x0", s), parse_poly("x2-x0", s),
      parse_poly("x2+x0", s)};
  std::vector<QVec> pts;
  std::map<std::string, bool> seen;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      QMat m = forms_matrix({lines[i], lines[j]});
      std::vector<QVec> ns = nullspace(m, s->count());
      if (ns.size() != 1) continue;
      std::string key;
      for (const mpq_class& x : ns[0]) key += x.get_str() + ",";
      if (seen.emplace(key, true).second) pts.push_back(ns[0]);
    }
  return pts;
}

}  // namespace arr
