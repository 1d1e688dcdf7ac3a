#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "arr/betti.hpp"
#include "arr/dodeca.hpp"
#include "arr/error.hpp"
#include "arr/families.hpp"
#include "arr/groebner.hpp"
#include "arr/hilbert.hpp"
#include "arr/io.hpp"
#include "arr/partitions.hpp"
#include "arr/polynomial.hpp"

using namespace arr;

namespace {

// exit codes: 0 pass, 1 verification fail, 2 usage/parse error, 3 budget
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

// --order grammar: grevlex | lex | grevlex@x1,x2,x0 | lex@... | weight:3,1,2
MonomialOrder parse_order(const std::string& text, const Ring& r) {
  if (text.empty() || text == "grevlex") return canonical_order(r);
  if (text == "lex") return lex_x0_least(r);
  auto names_to_perm = [&](const std::string& list) {
    std::vector<int> perm;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
      int idx = r->index_of(name);
      if (idx < 0) throw Error("order names unknown variable " + name);
      perm.push_back(idx);
    }
    return perm;
  };
  if (text.rfind("grevlex@", 0) == 0)
    return MonomialOrder::grevlex(r, names_to_perm(text.substr(8)));
  if (text.rfind("lex@", 0) == 0)
    return MonomialOrder::lex(r, names_to_perm(text.substr(4)));
  if (text.rfind("weight:", 0) == 0) {
    std::vector<long> w;
    std::stringstream ss(text.substr(7));
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(std::stol(tok));
    return MonomialOrder::weight_order(r, std::move(w));
  }
  throw Error("unrecognized order: " + text);
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void emit_polys(const Ring& ring, const std::vector<Polynomial>& polys, bool json) {
  if (json) {
    nlohmann::json j;
    j["ring"] = ring->names();
    j["polynomials"] = nlohmann::json::array();
    for (const Polynomial& p : polys) j["polynomials"].push_back(to_string(p));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << write_ideal_text(ring, polys);
  }
}

int emit_report(const VerificationReport& rep, bool json) {
  if (json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
  return rep.ok() ? kOk : kVerifyFail;
}

// skeleton-only invariants stacked on top of verify_family
void skeleton_invariants(VerificationReport& rep, const FamilySpec& spec, int sample_orders,
                         std::uint64_t seed, ExecMode mode, StepBudget* budget) {
  Ring s = spec.ring();
  std::vector<Polynomial> gens = family_generators(spec);
  const int n = spec.n, p = spec.p;

  {
    PhaseTimer t(rep, "groebner-orders");
    bool gb_ok = is_groebner(gens, canonical_order(s)) && is_groebner(gens, lex_x0_least(s));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(1, 100);
    for (int k = 0; k < sample_orders && gb_ok; ++k) {
      std::vector<long> w(static_cast<std::size_t>(s->count()));
      for (long& x : w) x = dist(rng);
      w[static_cast<std::size_t>(s->index_of("x0"))] = 1;  // least weight for x0
      gb_ok = is_groebner(gens, MonomialOrder::weight_order(s, std::move(w)));
    }
    rep.check(gb_ok, "groebner-under-x0-least-orders",
              "grevlex, lex, " + std::to_string(sample_orders) +
                  " weight orders (seed " + std::to_string(seed) + ")");
  }

  {
    PhaseTimer t(rep, "hilbert-argument");
    // compare against the squares monomial ideal through an unrelated order
    std::vector<int> x0_first;
    x0_first.push_back(s->index_of("x0"));
    for (int i = 0; i < s->count(); ++i)
      if (i != s->index_of("x0")) x0_first.push_back(i);
    std::vector<Polynomial> squares;
    for (const std::vector<int>& sigma : subsets(n, p + 1)) {
      Polynomial q = Polynomial::constant(s, 1);
      for (int i : sigma) q = q * Polynomial::variable(s, i, 2);
      squares.push_back(q);
    }
    auto hf1 = hf_values(Ideal(s, gens), MonomialOrder::grevlex(s, x0_first), 2 * n + 2,
                         mode, budget);
    auto hf2 = hf_values(Ideal(s, squares), canonical_order(s), 2 * n + 2, mode, budget);
    rep.check(hf1 == hf2, "hilbert-function-matches-squares-ideal");
  }

  {
    PhaseTimer t(rep, "betti-invariants");
    BettiTable b = betti_table(Ideal(s, gens), 2 * n + 2, mode, budget);
    std::vector<int> want_type;
    for (int d = p + 1; d <= n; ++d) want_type.push_back(2 * d);
    auto type = pure_type(b);
    rep.check(type.has_value() && *type == want_type, "pure-type",
              type ? betti_staircase(b) : "not pure");
    long long degree = 1;
    for (int i = 0; i < n - p; ++i) degree *= 2;
    degree *= binomial(n, p);
    bool hk_ok = false;
    if (type) {
      std::vector<long long> predicted = herzog_kuhl(want_type, n - p, degree);
      hk_ok = true;
      for (int i = 0; i < n - p; ++i)
        if (b.at(i, want_type[static_cast<std::size_t>(i)]) !=
            predicted[static_cast<std::size_t>(i)])
          hk_ok = false;
    }
    rep.check(hk_ok, "herzog-kuhl-ranks");
    rep.check(regularity(b) == n + p + 1, "regularity-n-plus-p-plus-1",
              std::to_string(regularity(b)));
  }

  rep.merge(transport_check(n, p, mode, budget));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact subspace-arrangement ideal toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  bool serial = false;
  long long max_steps = -1;
  app.add_flag("--json", json, "emit machine-readable JSON reports");
  app.add_flag("--serial", serial, "run the data-parallel kernels sequentially");
  app.add_option("--max-steps", max_steps, "reduction step budget (default unlimited)");

  std::string family_s, ideal_path, poly_text, order_s, out_path;
  int n = 0, p = 0, m = 1, maxdeg = -1, sample_orders = 20;
  std::uint64_t seed = 1;
  std::vector<std::string> ideal_paths;
  bool skip_ideal = false;

  CLI::App* construct = app.add_subcommand("construct", "print family generators");
  construct->add_option("--family", family_s)->required();
  construct->add_option("--n", n)->required();
  construct->add_option("--p", p)->required();
  construct->add_option("--m", m);

  CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
  gb->add_option("--ideal", ideal_path)->required();
  gb->add_option("--order", order_s);

  CLI::App* memb = app.add_subcommand("member", "test membership of a polynomial");
  memb->add_option("--ideal", ideal_path)->required();
  memb->add_option("--poly", poly_text)->required();
  memb->add_option("--order", order_s);

  CLI::App* inter = app.add_subcommand("intersect", "fold intersection of ideal files");
  inter->add_option("--ideal", ideal_paths)->required()->expected(-1);

  CLI::App* hilb = app.add_subcommand("hilbert", "Hilbert numerator, dimension, degree");
  hilb->add_option("--ideal", ideal_path)->required();
  hilb->add_option("--order", order_s);
  hilb->add_option("--maxdeg", maxdeg);

  CLI::App* betti = app.add_subcommand("betti", "graded Betti table via Koszul homology");
  betti->add_option("--ideal", ideal_path)->required();
  betti->add_option("--maxdeg", maxdeg);

  CLI::App* verify = app.add_subcommand("verify-family", "verify a family instance");
  verify->add_option("--family", family_s)->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--p", p)->required();
  verify->add_option("--m", m);
  verify->add_option("--sample-orders", sample_orders);
  verify->add_option("--seed", seed);

  CLI::App* trunc = app.add_subcommand(
      "verify-trunc-example", "power-truncation counterexample at (0,0,z)");

  CLI::App* dodeca = app.add_subcommand("dodeca", "skew-dodecahedron line arrangement");
  dodeca->add_flag("--skip-ideal", skip_ideal, "combinatorics only, no 30-line fold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  ExecMode mode = serial ? ExecMode::Serial : ExecMode::Parallel;
  set_exec_mode(mode);
  StepBudget budget(max_steps);
  StepBudget* bp = max_steps >= 0 ? &budget : nullptr;

  try {
    if (construct->parsed()) {
      FamilySpec spec(family_from_name(family_s), n, p, m);
      emit_polys(spec.ring(), family_generators(spec), json);
      return kOk;
    }
    if (gb->parsed()) {
      IdealFile f = read_ideal_text(slurp(ideal_path));
      MonomialOrder ord = parse_order(order_s, f.ring);
      emit_polys(f.ring, f.ideal().basis(ord, mode, bp), json);
      return kOk;
    }
    if (memb->parsed()) {
      IdealFile f = read_ideal_text(slurp(ideal_path));
      MonomialOrder ord = parse_order(order_s, f.ring);
      Polynomial q = parse_poly(poly_text, f.ring);
      bool in = member(q, f.ideal(), ord, mode, bp);
      VerificationReport rep;
      rep.subject = "membership of " + to_string(q);
      rep.check(in, "polynomial-in-ideal", to_string(normal_form(q, f.ideal().basis(ord, mode, bp), ord)));
      return emit_report(rep, json);
    }
    if (inter->parsed()) {
      std::vector<Ideal> ideals;
      Ring ring;
      for (const std::string& path : ideal_paths) {
        IdealFile f = read_ideal_text(slurp(path));
        if (ring && !same_ring(ring, f.ring)) throw Error("ideal files use different rings");
        ring = f.ring;
        ideals.push_back(f.ideal());
      }
      Ideal folded = intersect_all(ideals, mode, bp);
      emit_polys(ring, folded.basis(canonical_order(ring), mode, bp), json);
      return kOk;
    }
    if (hilb->parsed()) {
      IdealFile f = read_ideal_text(slurp(ideal_path));
      MonomialOrder ord = parse_order(order_s, f.ring);
      HilbertData h = hilbert(f.ideal(), ord, mode, bp);
      int top = maxdeg >= 0 ? maxdeg : 2 * f.ring->count();
      std::vector<long long> hf = hf_values(f.ideal(), ord, top, mode, bp);
      nlohmann::json j;
      j["numerator"] = h.numerator;
      j["dim"] = h.dim;
      j["degree"] = h.degree;
      j["hf"] = hf;
      if (json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "dim " << h.dim << ", degree " << h.degree << "\nK-numerator:";
        for (long long c : h.numerator) std::cout << " " << c;
        std::cout << "\nHF(0.." << top << "):";
        for (long long v : hf) std::cout << " " << v;
        std::cout << "\n";
      }
      return kOk;
    }
    if (betti->parsed()) {
      IdealFile f = read_ideal_text(slurp(ideal_path));
      int top = maxdeg >= 0 ? maxdeg : 2 * f.ring->count() + 2;
      BettiTable b = betti_table(f.ideal(), top, mode, bp);
      if (json)
        std::cout << betti_json(b).dump(2) << "\n";
      else
        std::cout << betti_staircase(b);
      return kOk;
    }
    if (verify->parsed()) {
      FamilySpec spec(family_from_name(family_s), n, p, m);
      VerificationReport rep = verify_family(spec, mode, bp);
      if (spec.family == Family::Skeleton)
        skeleton_invariants(rep, spec, sample_orders, seed, mode, bp);
      return emit_report(rep, json);
    }
    if (trunc->parsed()) {
      VerificationReport rep;
      rep.subject = "power truncation example n=3 m=2 p=1";
      QVec pt = {0, 0, 1};
      Ring r3 = ring_x(3);
      // (0,0,z) lies on the codimension-2 truncation component V(x1, x2)
      rep.check(evaluate(parse_poly("x1", r3), pt) == 0 &&
                    evaluate(parse_poly("x2", r3), pt) == 0,
                "point-on-truncation-component");
      rep.check(!truncation_rank_test(3, 2, 1, pt), "power-matrix-keeps-rank");
      FamilySpec kl(Family::KL, 3, 1, 2);
      mpq_class v = evaluate(family_generators(kl)[1], pt);
      rep.check(v == -1, "kl-generator-value-minus-one", v.get_str());
      rep.check(truncation_rank_test(3, 2, 1, {1, 1, 1}), "diagonal-point-drops-rank");
      rep.check(truncation_rank_test(3, 2, 1, {2, -2, 2}), "sign-pattern-point-drops-rank");
      return emit_report(rep, json);
    }
    if (dodeca->parsed()) {
      VerificationReport rep = dodeca_report(mode, bp, !skip_ideal);
      int rc = emit_report(rep, json);
      if (rc != kOk)
        for (const Check& c : rep.checks)
          if (c.status == Check::Status::Fail && c.name == "line-ideal-fold") return kBudget;
      return rc;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
