#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "arr/error.hpp"
#include "arr/families.hpp"
#include "arr/groebner.hpp"
#include "arr/partitions.hpp"

using namespace arr;

TEST_CASE("family spec validation and tokens") {
  CHECK_THROWS_AS(FamilySpec(Family::LiLi, 3, 1, 1), Error);
  CHECK_THROWS_AS(FamilySpec(Family::KL, 3, 3, 1), Error);
  CHECK_THROWS_AS(FamilySpec(Family::Skeleton, 3, 3), Error);
  FamilySpec sr(Family::StanleyReisner, 3, 1, 5);
  CHECK(sr.m == 1);  // forced
  FamilySpec sk(Family::Skeleton, 3, 1, 1);
  CHECK(sk.m == 2);  // forced

  FamilySpec parsed = FamilySpec::parse("family=LiLi n=3 p=2 m=2");
  CHECK(parsed.to_string() == "family=LiLi n=3 p=2 m=2");
  CHECK(parsed.ring()->count() == 3);
  CHECK(FamilySpec::parse("family=Skeleton n=4 p=1").ring()->count() == 5);
}

TEST_CASE("generators") {
  FamilySpec lili(Family::LiLi, 3, 2, 1);
  auto g = family_generators(lili);
  REQUIRE(g.size() == 1);
  CHECK(g[0] == parse_poly("(x1-x2)*(x1-x3)*(x2-x3)", lili.ring()));

  FamilySpec skel(Family::Skeleton, 2, 0);
  auto pi0 = family_generators(skel);
  REQUIRE(pi0.size() == 2);
  CHECK(pi0[0] == parse_poly("x1^2-x0^2", skel.ring()));
  CHECK(pi0[1] == parse_poly("x2^2-x0^2", skel.ring()));

  FamilySpec kl(Family::KL, 4, 2, 2);
  auto gk = family_generators(kl);
  REQUIRE(gk.size() == 4);
  for (const Polynomial& q : gk) CHECK(q.total_degree() == 6);

  FamilySpec big(Family::LiLi, 4, 3, 1);
  CHECK(family_generators(big).size() == 7);

  FamilySpec sr(Family::StanleyReisner, 3, 1);
  auto gs = family_generators(sr);
  REQUIRE(gs.size() == 3);
  CHECK(gs[0] == parse_poly("x1*x2", sr.ring()));
}

TEST_CASE("components") {
  FamilySpec skel20(Family::Skeleton, 2, 0);
  auto c20 = components(skel20);
  REQUIRE(c20.size() == 4);
  std::set<std::string> pts;
  for (const LinearSubspace& c : c20) {
    CHECK(c.codim() == 2);
    REQUIRE(c.params.size() == 1);
    std::string s;
    for (const mpq_class& x : c.params[0]) s += x.get_str() + ":";
    pts.insert(s);
  }
  CHECK(pts == std::set<std::string>{"1:1:1:", "1:1:-1:", "1:-1:1:", "1:-1:-1:"});

  CHECK(components(FamilySpec(Family::Skeleton, 3, 1)).size() == 12);
  CHECK(components(FamilySpec(Family::LiLi, 3, 3, 1)).size() == 1);
  CHECK(components(FamilySpec(Family::LiLi, 3, 2, 2)).size() == 6);
  CHECK(components(FamilySpec(Family::KL, 3, 2, 2)).size() == 6);
  CHECK_THROWS_AS(components(FamilySpec(Family::LiLi, 3, 2, 3)), Error);

  // counting identity for the cube skeleta at n <= 5
  for (int n = 2; n <= 5; ++n)
    for (int p = 0; p < n; ++p) {
      long long expected = binomial(n, p);
      for (int i = 0; i < n - p; ++i) expected *= 2;
      CHECK(static_cast<long long>(components(FamilySpec(Family::Skeleton, n, p)).size()) ==
            expected);
    }
}

TEST_CASE("generators vanish on all components at n <= 5") {
  std::vector<FamilySpec> specs;
  for (int n = 2; n <= 5; ++n) {
    for (int p = 0; p < n; ++p) specs.emplace_back(Family::Skeleton, n, p);
    for (int p = 2; p <= n; ++p)
      for (int m = 1; m <= 2; ++m) specs.emplace_back(Family::LiLi, n, p, m);
    for (int p = 1; p < n; ++p)
      for (int m = 1; m <= 2; ++m) specs.emplace_back(Family::KL, n, p, m);
    for (int p = 0; p < n; ++p) specs.emplace_back(Family::StanleyReisner, n, p);
  }
  for (const FamilySpec& spec : specs) {
    auto gens = family_generators(spec);
    for (const LinearSubspace& c : components(spec))
      for (const auto& pt : sample_points(c, 5))
        for (const Polynomial& g : gens) CHECK(evaluate(g, pt) == 0);
  }
}

TEST_CASE("brute force oracle") {
  FamilySpec skel20(Family::Skeleton, 2, 0);
  Ideal oracle = brute_force_ideal(components(skel20));
  Ideal pi0(skel20.ring(), family_generators(skel20));
  CHECK(ideals_equal(oracle, pi0, canonical_order(skel20.ring())));

  // one subspace folds to its own ideal
  auto comps = components(skel20);
  Ideal single = brute_force_ideal({comps[0]});
  CHECK(ideals_equal(single, comps[0].ideal(), canonical_order(skel20.ring())));
}

TEST_CASE("verify_family instances") {
  CHECK(verify_family(FamilySpec(Family::LiLi, 3, 2, 2)).ok());
  CHECK(verify_family(FamilySpec(Family::KL, 3, 1, 2)).ok());
  CHECK(verify_family(FamilySpec(Family::LiLi, 4, 3, 1)).ok());
  CHECK(verify_family(FamilySpec(Family::StanleyReisner, 4, 1)).ok());
  CHECK(verify_family(FamilySpec(Family::LiLi, 3, 2, 3)).ok());  // rational route only

  // the KL(3,1,2) ideal is exactly the three pairwise square differences
  FamilySpec kl(Family::KL, 3, 1, 2);
  Ring r3 = kl.ring();
  auto gens = family_generators(kl);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == parse_poly("x1^2-x2^2", r3));
  CHECK(gens[1] == parse_poly("x1^2-x3^2", r3));
  CHECK(gens[2] == parse_poly("x2^2-x3^2", r3));
}

TEST_CASE("oracle equality for every rational spec at n <= 4") {
  std::vector<FamilySpec> specs;
  for (int n = 2; n <= 4; ++n) {
    for (int p = 0; p < n; ++p) {
      specs.emplace_back(Family::Skeleton, n, p);
      specs.emplace_back(Family::StanleyReisner, n, p);
    }
    for (int m = 1; m <= 2; ++m) {
      for (int p = 2; p <= n; ++p) specs.emplace_back(Family::LiLi, n, p, m);
      for (int p = 1; p < n; ++p) specs.emplace_back(Family::KL, n, p, m);
    }
  }
  for (const FamilySpec& spec : specs) {
    Ideal I(spec.ring(), family_generators(spec));
    Ideal oracle = brute_force_ideal(components(spec));
    CHECK_MESSAGE(ideals_equal(I, oracle, canonical_order(spec.ring())), spec.to_string());
  }
}

TEST_CASE("power generators are the substitution images of the linear ones") {
  for (int m : {2, 3}) {
    for (auto [n, p] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
      FamilySpec base(Family::LiLi, n, p, 1);
      FamilySpec powered(Family::LiLi, n, p, m);
      Ring r = base.ring();
      std::vector<Polynomial> images;
      for (int i = 0; i < n; ++i)
        images.push_back(Polynomial::variable(r, i, static_cast<std::uint16_t>(m)));
      auto lin = family_generators(base);
      auto pow = family_generators(powered);
      REQUIRE(lin.size() == pow.size());
      for (std::size_t k = 0; k < lin.size(); ++k)
        CHECK(substitute(lin[k], images) == pow[k]);
    }
  }
}

TEST_CASE("ci decomposition") {
  Ring s = ring_x0(2);
  std::vector<std::pair<Polynomial, std::vector<Polynomial>>> qs = {
      {parse_poly("x1^2-x0^2", s), {parse_poly("x1-x0", s), parse_poly("x1+x0", s)}},
      {parse_poly("x2^2-x0^2", s), {parse_poly("x2-x0", s), parse_poly("x2+x0", s)}},
  };
  auto subs = ci_decomposition(qs);
  CHECK(subs.size() == 4);
  for (const LinearSubspace& c : subs) CHECK(c.codim() == 2);

  Ring r = ring_x(2);
  auto single = ci_decomposition({{parse_poly("x1-x2", r), {parse_poly("x1-x2", r)}}});
  CHECK(single.size() == 1);

  Ring r3 = ring_x(3);
  std::vector<std::pair<Polynomial, std::vector<Polynomial>>> q2 = {
      {parse_poly("x1^2-x2^2", r3), {parse_poly("x1-x2", r3), parse_poly("x1+x2", r3)}},
      {parse_poly("x1^2-x3^2", r3), {parse_poly("x1-x3", r3), parse_poly("x1+x3", r3)}},
  };
  CHECK(ci_decomposition(q2).size() == 4);

  // duplicate choice ideals violate the hypothesis
  std::vector<std::pair<Polynomial, std::vector<Polynomial>>> dup = {
      {parse_poly("x1^2", r3), {parse_poly("x1", r3), parse_poly("x1", r3)}}};
  CHECK_THROWS_AS(ci_decomposition(dup), Error);

  // factor product must reproduce the generator
  std::vector<std::pair<Polynomial, std::vector<Polynomial>>> wrong = {
      {parse_poly("x1^2-x2^2", r3), {parse_poly("x1-x2", r3), parse_poly("x1-x2", r3)}}};
  CHECK_THROWS_AS(ci_decomposition(wrong), Error);
}

TEST_CASE("truncation rank test") {
  CHECK_FALSE(truncation_rank_test(3, 2, 1, {0, 0, 1}));
  CHECK(truncation_rank_test(3, 2, 1, {1, 1, 1}));
  CHECK(truncation_rank_test(3, 2, 1, {2, -2, 2}));
  CHECK_THROWS_AS(truncation_rank_test(3, 2, 1, {1, 1}), Error);
}

TEST_CASE("sample points") {
  FamilySpec skel20(Family::Skeleton, 2, 0);
  auto comps = components(skel20);
  auto pts = sample_points(comps[0], 1);
  REQUIRE(pts.size() == 1);
  for (const Polynomial& f : comps[0].forms) CHECK(evaluate(f, pts[0]) == 0);

  CHECK(sample_points(comps[0], 0).empty());

  // a line in 4 variables: several distinct samples all on the line
  Ring r4 = ring_x(4);
  LinearSubspace line = make_subspace(
      r4, {parse_poly("x1-x2", r4), parse_poly("x2+x3", r4)});
  auto many = sample_points(line, 7);
  std::set<std::string> distinct;
  for (const auto& pt : many) {
    std::string key;
    for (const mpq_class& x : pt) key += x.get_str() + ",";
    distinct.insert(key);
    for (const Polynomial& f : line.forms) CHECK(evaluate(f, pt) == 0);
  }
  CHECK(distinct.size() == 7);
}

TEST_CASE("cube closure truncation has two extra points") {
  FamilySpec skel20(Family::Skeleton, 2, 0);
  auto gens = family_generators(skel20);
  auto pts = cube_truncation_points_n2();
  REQUIRE(pts.size() == 6);
  int off_variety = 0;
  std::set<std::string> keys;
  for (const auto& pt : pts) {
    std::string key;
    for (const mpq_class& x : pt) key += x.get_str() + ":";
    keys.insert(key);
    bool vanishes_all = true;
    for (const Polynomial& g : gens)
      if (evaluate(g, pt) != 0) vanishes_all = false;
    if (!vanishes_all) ++off_variety;
  }
  CHECK(off_variety == 2);
  CHECK(keys.count("0:0:1:") == 1);
  CHECK(keys.count("0:1:0:") == 1);
}
