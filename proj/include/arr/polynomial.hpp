#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "arr/monomial.hpp"
#include "arr/order.hpp"
#include "arr/varring.hpp"

namespace arr {

struct Term {
  mpq_class coeff;
  Monomial mono;
};

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// stored strictly descending under the ring's canonical grevlex order, with
// no zero coefficients; the zero polynomial has an empty term list.
class Polynomial {
 public:
  explicit Polynomial(Ring r) : ring_(std::move(r)) {}
  Polynomial(Ring r, std::vector<Term> terms);

  static Polynomial constant(const Ring& r, const mpq_class& c);
  static Polynomial variable(const Ring& r, int i, std::uint16_t power = 1);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Max total degree over terms; -1 for the zero polynomial.
  long total_degree() const;
  bool is_homogeneous() const;
  bool uses_var(int i) const;
  bool is_constant() const;

  Polynomial operator-() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;

  void normalize();
  // Trusts the caller to pass canonically sorted, zero-free terms.
  static Polynomial from_sorted(Ring r, std::vector<Term> terms);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial scale(const Polynomial& p, const mpq_class& c);
  friend Polynomial mul_term(const Polynomial& p, const mpq_class& c, const Monomial& m);
};

bool operator==(const Polynomial& a, const Polynomial& b);
inline bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

Polynomial scale(const Polynomial& p, const mpq_class& c);
// c * m * p; preserves the canonical sort, so this is a cheap linear pass.
Polynomial mul_term(const Polynomial& p, const mpq_class& c, const Monomial& m);
Polynomial poly_pow(const Polynomial& p, unsigned k);

// Unique maximal term under the given order; throws on the zero polynomial.
Term leading_term(const Polynomial& p, const MonomialOrder& order);

// Scales to coprime integer coefficients with positive canonical-leading
// coefficient. Zero maps to zero.
Polynomial primitive_part(const Polynomial& p);
// Divides by the leading coefficient under the given order.
Polynomial monic(const Polynomial& p, const MonomialOrder& order);

// Ring homomorphism determined by variable images; images[i] is the image of
// variable i and all images must live in one common target ring.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);
// Name-keyed variant; throws if any ring variable is missing an image.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images);

mpq_class evaluate(const Polynomial& p, const std::vector<mpq_class>& point);

// Multiplies each term by homvar^(d - deg) where d = total degree. The
// variable must not occur in p; dehomogenize(homvar -> 1) recovers p.
Polynomial homogenize(const Polynomial& p, int homvar);
Polynomial dehomogenize(const Polynomial& p, int homvar);

// Grammar: + - * ^ ( ), integer and rational literals a/b, explicit '*'
// required between factors. parse_poly(to_string(p), ring) == p.
Polynomial parse_poly(const std::string& text, const Ring& r);
std::string to_string(const Polynomial& p);

}  // namespace arr
