#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arr/error.hpp"
#include "arr/polynomial.hpp"

using namespace arr;

namespace {

Monomial random_monomial(std::mt19937_64& rng, int nvars, int maxexp) {
  std::uniform_int_distribution<int> d(0, maxexp);
  Monomial m;
  for (int i = 0; i < nvars; ++i) {
    int e = d(rng);
    m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
    m.deg += static_cast<std::uint32_t>(e);
  }
  return m;
}

Polynomial random_poly(std::mt19937_64& rng, const Ring& r, int terms, int maxexp) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k)
    ts.push_back(Term{mpq_class(c(rng)), random_monomial(rng, r->count(), maxexp)});
  return Polynomial(r, std::move(ts));
}

}  // namespace

TEST_CASE("parse and canonical print") {
  Ring r = ring_x0(2);
  Polynomial f1 = parse_poly("x1^2-x0^2", r);
  CHECK(to_string(f1) == "x1^2 - x0^2");
  CHECK(f1.is_homogeneous());
  CHECK(f1.total_degree() == 2);

  CHECK(parse_poly("0", r).is_zero());
  CHECK(to_string(Polynomial(r)) == "0");

  // the canonical text form is bit-exact and reparses to the same value
  Polynomial prod = f1 * parse_poly("x2^2-x0^2", r);
  CHECK(to_string(prod) == "x1^2*x2^2 - x0^2*x1^2 - x0^2*x2^2 + x0^4");
  CHECK(parse_poly(to_string(prod), r) == prod);

  Ring r3 = ring_x(3);
  Polynomial tri = parse_poly("(x1-x2)*(x1-x3)*(x2-x3)", r3);
  CHECK(tri.size() == 6);
  CHECK(tri.total_degree() == 3);
  CHECK(parse_poly(to_string(tri), r3) == tri);

  CHECK(to_string(parse_poly("1/2*x1 - 2/4*x2 + 3", r3)) == "1/2*x1 - 1/2*x2 + 3");
}

TEST_CASE("parse errors carry positions") {
  Ring r = ring_x(2);
  CHECK_THROWS_AS(parse_poly("x1 + y", r), ParseError);
  CHECK_THROWS_AS(parse_poly("2x1", r), ParseError);      // implicit product rejected
  CHECK_THROWS_AS(parse_poly("x1*(x2", r), ParseError);
  CHECK_THROWS_AS(parse_poly("x1^", r), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0", r), ParseError);
  try {
    parse_poly("x1 + zz", r);
  } catch (const ParseError& e) {
    CHECK(e.pos == 5);
  }
}

TEST_CASE("ring arithmetic") {
  Ring r = ring_x(3);
  Polynomial a = parse_poly("x1-x2", r);
  CHECK((a + parse_poly("x2-x1", r)).is_zero());
  CHECK(a * parse_poly("x1+x2", r) == parse_poly("x1^2-x2^2", r));
  CHECK(-(-a) == a);
  CHECK_THROWS_AS(a + parse_poly("x1", ring_x(2)), Error);

  // product of the three pair differences expands to the printed form
  Polynomial p = parse_poly("x1-x2", r) * parse_poly("x1-x3", r) * parse_poly("x2-x3", r);
  CHECK(p == parse_poly("x1^2*x2 - x1*x2^2 - x1^2*x3 + x2^2*x3 + x1*x3^2 - x2*x3^2", r));
}

TEST_CASE("monomial order examples") {
  Ring r = ring_x0(2);
  MonomialOrder g = canonical_order(r);  // grevlex with x0 least
  int x0 = r->index_of("x0"), x1 = r->index_of("x1");
  CHECK(g.greater(Monomial::var(x0, 2), Monomial::var(x1)));  // degree first
  CHECK(g.less(Monomial::var(x0), Monomial::var(x1)));        // x0 least at equal degree

  Ring r3 = ring_x(3);
  MonomialOrder lx = MonomialOrder::lex(r3, {0, 1, 2});
  CHECK(lx.greater(Monomial::var(0), Monomial::var(1, 3)));  // x1 > x2^3 under lex
}

TEST_CASE("weight order with unit weights equals grevlex") {
  Ring r = ring_x(4);
  MonomialOrder g = canonical_order(r);
  MonomialOrder w = MonomialOrder::weight_order(r, {1, 1, 1, 1});
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    Monomial u = random_monomial(rng, 4, 6), v = random_monomial(rng, 4, 6);
    CHECK(g.compare(u, v) == w.compare(u, v));
  }
}

TEST_CASE("order axioms on random triples") {
  Ring r = ring_x0(3);
  std::vector<MonomialOrder> orders = {
      canonical_order(r), lex_x0_least(r),
      MonomialOrder::weight_order(r, {3, 1, 4, 2}),
      MonomialOrder::elimination(r, {1})};
  std::mt19937_64 rng(13);
  Monomial one;
  for (const MonomialOrder& ord : orders) {
    for (int k = 0; k < 1000; ++k) {
      Monomial u = random_monomial(rng, 4, 5);
      Monomial v = random_monomial(rng, 4, 5);
      Monomial w = random_monomial(rng, 4, 5);
      // trichotomy
      int c = ord.compare(u, v);
      CHECK(c == -ord.compare(v, u));
      CHECK((c == 0) == (u == v));
      // multiplicativity
      if (c < 0) CHECK(ord.less(u * w, v * w));
      // 1 is the minimum
      if (!(u == one)) CHECK(ord.greater(u, one));
    }
  }
}

TEST_CASE("leading terms") {
  Ring r = ring_x0(2);
  MonomialOrder g = canonical_order(r);
  Polynomial f1 = parse_poly("x1^2-x0^2", r);
  CHECK(leading_term(f1, g).mono == Monomial::var(r->index_of("x1"), 2));

  CHECK(leading_term(parse_poly("5", r), g).coeff == 5);
  CHECK_THROWS_AS(leading_term(Polynomial(r), g), Error);

  Polynomial q12 = f1 * parse_poly("x2^2-x0^2", r);
  Monomial want = Monomial::var(r->index_of("x1"), 2) * Monomial::var(r->index_of("x2"), 2);
  CHECK(leading_term(q12, g).mono == want);
  CHECK(leading_term(q12, lex_x0_least(r)).mono == want);
}

TEST_CASE("substitution is a ring homomorphism") {
  Ring r = ring_x(2);
  Ring target = ring_x(2);
  std::vector<Polynomial> powers = {parse_poly("x1^3", target), parse_poly("x2^3", target)};
  Polynomial diff = parse_poly("x1-x2", r);
  CHECK(substitute(diff, powers) == parse_poly("x1^3-x2^3", target));

  std::vector<Polynomial> id = {parse_poly("x1", r), parse_poly("x2", r)};
  std::mt19937_64 rng(29);
  for (int k = 0; k < 25; ++k) {
    Polynomial a = random_poly(rng, r, 4, 3);
    Polynomial b = random_poly(rng, r, 4, 3);
    CHECK(substitute(a, id) == a);
    CHECK(substitute(a * b, powers) == substitute(a, powers) * substitute(b, powers));
    CHECK(substitute(a + b, powers) == substitute(a, powers) + substitute(b, powers));
  }

  std::map<std::string, Polynomial> missing = {{"x1", parse_poly("x1", r)}};
  CHECK_THROWS_AS(substitute(diff, missing), Error);
}

TEST_CASE("substituting cube face quadrics turns squarefree monomials into products") {
  Ring s = ring_x0(2);
  // x_i -> x0^2 - x_i^2 sends x1*x2 to the degree-4 product up to sign
  std::vector<Polynomial> images = {parse_poly("x0^2", s), parse_poly("x0^2-x1^2", s),
                                    parse_poly("x0^2-x2^2", s)};
  Polynomial image = substitute(parse_poly("x1*x2", s), images);
  Polynomial q12 = parse_poly("(x1^2-x0^2)*(x2^2-x0^2)", s);
  CHECK(image == q12);
}

TEST_CASE("evaluation") {
  Ring r = ring_x0(2);
  Polynomial f1 = parse_poly("x1^2-x0^2", r);
  CHECK(evaluate(f1, {1, -1, 7}) == 0);

  Ring r3 = ring_x(3);
  CHECK(evaluate(parse_poly("x1^2-x3^2", r3), {0, 0, 1}) == -1);
  CHECK_THROWS_AS(evaluate(f1, {1, 2}), Error);

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int k = 0; k < 25; ++k) {
    Polynomial a = random_poly(rng, r3, 4, 3);
    Polynomial b = random_poly(rng, r3, 4, 3);
    mpq_class third(d(rng), 3);
    third.canonicalize();
    std::vector<mpq_class> pt = {mpq_class(d(rng)), third, mpq_class(d(rng))};
    CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
    CHECK(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
  }
}

TEST_CASE("homogenization") {
  Ring r = ring_x0(3);
  int x0 = r->index_of("x0");
  Polynomial l1 = parse_poly("5-3*x2-2*x3", r);
  CHECK(homogenize(l1, x0) == parse_poly("5*x0-3*x2-2*x3", r));
  CHECK(dehomogenize(homogenize(l1, x0), x0) == l1);

  Polynomial lin = parse_poly("x1-x2", r);
  CHECK(homogenize(lin, x0) == lin);

  CHECK(homogenize(parse_poly("x1^2-1", r), x0) == parse_poly("x1^2-x0^2", r));
  CHECK_THROWS_AS(homogenize(parse_poly("x0+x1", r), x0), Error);
}
