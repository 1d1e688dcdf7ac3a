#include "arr/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "arr/error.hpp"

namespace arr {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw Error("ring mismatch");
}

}  // namespace

Polynomial::Polynomial(Ring r, std::vector<Term> terms)
    : ring_(std::move(r)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  const std::vector<int>& perm = ring_->canon_perm();
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return grevlex_cmp(perm, a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::from_sorted(Ring r, std::vector<Term> terms) {
  Polynomial p(std::move(r));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(const Ring& r, const mpq_class& c) {
  Polynomial p(r);
  if (c != 0) return Polynomial(r, {Term{c, Monomial::one()}});
  return p;
}

Polynomial Polynomial::variable(const Ring& r, int i, std::uint16_t power) {
  if (i < 0 || i >= r->count()) throw Error("variable index out of range");
  if (power == 0) return constant(r, 1);
  return Polynomial(r, {Term{mpq_class(1), Monomial::var(i, power)}});
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const Term& t : terms_) d = std::max(d, static_cast<long>(t.mono.deg));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const Term& t : terms_)
    if (t.mono.deg != terms_.front().mono.deg) return false;
  return true;
}

bool Polynomial::uses_var(int i) const {
  for (const Term& t : terms_)
    if (t.mono[i] != 0) return true;
  return false;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = -t.coeff;
  return from_sorted(ring_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  if (a.terms().size() != b.terms().size()) return false;
  for (std::size_t i = 0; i < a.terms().size(); ++i)
    if (a.terms()[i].mono != b.terms()[i].mono || a.terms()[i].coeff != b.terms()[i].coeff)
      return false;
  return true;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const std::vector<int>& perm = a.ring()->canon_perm();
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::size_t i = 0, j = 0;
  while (i < a.terms().size() && j < b.terms().size()) {
    int c = grevlex_cmp(perm, a.terms()[i].mono, b.terms()[j].mono);
    if (c > 0) {
      out.push_back(a.terms()[i++]);
    } else if (c < 0) {
      out.push_back(b.terms()[j++]);
    } else {
      mpq_class s = a.terms()[i].coeff + b.terms()[j].coeff;
      if (s != 0) out.push_back(Term{std::move(s), a.terms()[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms().size(); ++i) out.push_back(a.terms()[i]);
  for (; j < b.terms().size(); ++j) out.push_back(b.terms()[j]);
  return Polynomial::from_sorted(a.ring(), std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
  if (b.terms().size() == 1)
    return mul_term(a, b.terms().front().coeff, b.terms().front().mono);
  if (a.terms().size() == 1)
    return mul_term(b, a.terms().front().coeff, a.terms().front().mono);
  std::vector<Term> prod;
  prod.reserve(a.terms().size() * b.terms().size());
  for (const Term& s : a.terms())
    for (const Term& t : b.terms())
      prod.push_back(Term{s.coeff * t.coeff, s.mono * t.mono});
  return Polynomial(a.ring(), std::move(prod));
}

Polynomial scale(const Polynomial& p, const mpq_class& c) {
  if (c == 0) return Polynomial(p.ring());
  std::vector<Term> out = p.terms();
  for (Term& t : out) t.coeff *= c;
  return Polynomial::from_sorted(p.ring(), std::move(out));
}

Polynomial mul_term(const Polynomial& p, const mpq_class& c, const Monomial& m) {
  if (c == 0) return Polynomial(p.ring());
  std::vector<Term> out = p.terms();
  for (Term& t : out) {
    t.coeff *= c;
    t.mono = t.mono * m;
  }
  return Polynomial::from_sorted(p.ring(), std::move(out));
}

Polynomial poly_pow(const Polynomial& p, unsigned k) {
  Polynomial acc = Polynomial::constant(p.ring(), 1);
  for (unsigned i = 0; i < k; ++i) acc = acc * p;
  return acc;
}

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error("leading term of the zero polynomial");
  const Term* best = &p.terms().front();
  for (const Term& t : p.terms())
    if (order.greater(t.mono, best->mono)) best = &t;
  return *best;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  for (const Term& t : p.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  mpz_class g = 0;
  for (const Term& t : p.terms()) {
    mpz_class num = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    if (g == 1) break;
  }
  mpq_class f(den_lcm, g == 0 ? 1 : g);
  f.canonicalize();
  if (p.terms().front().coeff < 0) f = -f;
  return scale(p, f);
}

Polynomial monic(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  mpq_class lc = leading_term(p, order).coeff;
  return scale(p, mpq_class(1) / lc);
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (static_cast<int>(images.size()) != p.ring()->count())
    throw Error("missing image: substitution needs one image per ring variable");
  for (const Polynomial& im : images)
    if (!same_ring(im.ring(), images.front().ring()))
      throw Error("substitution images must share one target ring");
  const Ring& target = images.front().ring();
  // lazily extended power cache per variable
  std::vector<std::vector<Polynomial>> pw(images.size());
  auto power = [&](std::size_t i, std::uint16_t k) -> const Polynomial& {
    auto& cache = pw[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial acc(target);
  for (const Term& t : p.terms()) {
    Polynomial piece = Polynomial::constant(target, t.coeff);
    for (int i = 0; i < p.ring()->count(); ++i)
      if (t.mono[i] != 0) piece = piece * power(static_cast<std::size_t>(i), t.mono[i]);
    acc = acc + piece;
  }
  return acc;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images) {
  std::vector<Polynomial> vec;
  vec.reserve(static_cast<std::size_t>(p.ring()->count()));
  for (int i = 0; i < p.ring()->count(); ++i) {
    auto it = images.find(p.ring()->name(i));
    if (it == images.end()) throw Error("missing image for variable " + p.ring()->name(i));
    vec.push_back(it->second);
  }
  return substitute(p, vec);
}

mpq_class evaluate(const Polynomial& p, const std::vector<mpq_class>& point) {
  if (static_cast<int>(point.size()) != p.ring()->count())
    throw Error("point length must equal the variable count");
  mpq_class acc = 0;
  for (const Term& t : p.terms()) {
    mpq_class v = t.coeff;
    for (int i = 0; i < p.ring()->count(); ++i) {
      for (std::uint16_t k = 0; k < t.mono[i]; ++k) v *= point[static_cast<std::size_t>(i)];
    }
    acc += v;
  }
  return acc;
}

Polynomial homogenize(const Polynomial& p, int homvar) {
  if (homvar < 0 || homvar >= p.ring()->count()) throw Error("homvar index out of range");
  if (p.uses_var(homvar))
    throw Error("homogenization variable already occurs in the polynomial");
  if (p.is_zero()) return p;
  std::uint32_t d = static_cast<std::uint32_t>(p.total_degree());
  std::vector<Term> out = p.terms();
  for (Term& t : out) {
    std::uint16_t k = static_cast<std::uint16_t>(d - t.mono.deg);
    t.mono.e[static_cast<std::size_t>(homvar)] = k;
    t.mono.deg = d;
  }
  return Polynomial(p.ring(), std::move(out));
}

Polynomial dehomogenize(const Polynomial& p, int homvar) {
  std::vector<Term> out = p.terms();
  for (Term& t : out) {
    t.mono.deg -= t.mono[homvar];
    t.mono.e[static_cast<std::size_t>(homvar)] = 0;
  }
  return Polynomial(p.ring(), std::move(out));
}

// ---------------------------------------------------------------------------
// text form

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : p.terms()) {
    bool neg = t.coeff < 0;
    mpq_class a = neg ? mpq_class(-t.coeff) : t.coeff;
    std::string mono;
    for (int i = 0; i < p.ring()->count(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.ring()->name(i);
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    std::string piece;
    if (mono.empty())
      piece = a.get_str();
    else if (a == 1)
      piece = mono;
    else
      piece = a.get_str() + "*" + mono;
    if (first)
      s += (neg ? "-" : "") + piece;
    else
      s += (neg ? " - " : " + ") + piece;
    first = false;
  }
  return s;
}

namespace {

struct Parser {
  const std::string& text;
  const Ring& ring;
  std::size_t pos = 0;

  Parser(const std::string& t, const Ring& r) : text(t), ring(r) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  mpz_class read_digits() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected digits", start);
    return mpz_class(text.substr(start, pos - start));
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Polynomial e = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = read_digits();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t dpos = pos;
        mpz_class den = read_digits();
        if (den == 0) throw ParseError("zero denominator", dpos);
        mpq_class q(num, den);
        q.canonicalize();
        return Polynomial::constant(ring, q);
      }
      return Polynomial::constant(ring, mpq_class(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      int idx = ring->index_of(name);
      if (idx < 0) throw ParseError("unknown variable name '" + name + "'", start);
      return Polynomial::variable(ring, idx);
    }
    throw ParseError("unexpected character", pos);
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (peek() == '^') {
      ++pos;
      skip_ws();
      std::size_t epos = pos;
      mpz_class k = read_digits();
      if (!k.fits_uint_p() || k > 64) throw ParseError("exponent out of range", epos);
      return poly_pow(base, static_cast<unsigned>(k.get_ui()));
    }
    return base;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek() == '*') {
      ++pos;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial expr() {
    bool neg = false;
    if (peek() == '-') {
      ++pos;
      neg = true;
    } else if (peek() == '+') {
      ++pos;
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc = acc + term();
      } else if (c == '-') {
        ++pos;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

Polynomial parse_poly(const std::string& text, const Ring& r) {
  Parser parser(text, r);
  Polynomial p = parser.expr();
  parser.skip_ws();
  if (parser.pos != text.size())
    throw ParseError("unexpected trailing input", parser.pos);
  return p;
}

}  // namespace arr
