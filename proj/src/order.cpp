#include "arr/order.hpp"

#include <algorithm>

#include "arr/error.hpp"

namespace arr {

namespace {

int lex_cmp(const std::vector<int>& perm, const Monomial& u, const Monomial& v) {
  for (int i : perm) {
    std::uint16_t a = u[i], b = v[i];
    if (a != b) return a > b ? 1 : -1;
  }
  return 0;
}

// Grevlex restricted to a contiguous slice of the precedence list.
int grevlex_slice_cmp(const std::vector<int>& perm, std::size_t lo, std::size_t hi,
                      const Monomial& u, const Monomial& v) {
  long du = 0, dv = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    du += u[perm[k]];
    dv += v[perm[k]];
  }
  if (du != dv) return du > dv ? 1 : -1;
  for (std::size_t k = hi; k-- > lo;) {
    std::uint16_t a = u[perm[k]], b = v[perm[k]];
    if (a != b) return a < b ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  if (u == v) return 0;
  switch (kind) {
    case Kind::Lex:
      return lex_cmp(perm, u, v);
    case Kind::Grevlex:
      return grevlex_cmp(perm, u, v);
    case Kind::Weight: {
      long wu = 0, wv = 0;
      for (std::size_t i = 0; i < weights.size(); ++i) {
        wu += weights[i] * u[static_cast<int>(i)];
        wv += weights[i] * v[static_cast<int>(i)];
      }
      if (wu != wv) return wu > wv ? 1 : -1;
      return grevlex_cmp(perm, u, v);
    }
    case Kind::Block: {
      int c = grevlex_slice_cmp(perm, 0, static_cast<std::size_t>(block), u, v);
      if (c != 0) return c;
      return grevlex_slice_cmp(perm, static_cast<std::size_t>(block), perm.size(), u, v);
    }
  }
  return 0;
}

std::string MonomialOrder::key() const {
  std::string s;
  switch (kind) {
    case Kind::Lex: s = "lex"; break;
    case Kind::Grevlex: s = "grevlex"; break;
    case Kind::Weight: s = "weight"; break;
    case Kind::Block: s = "block" + std::to_string(block); break;
  }
  s += "@";
  for (int i : perm) s += std::to_string(i) + ",";
  if (kind == Kind::Weight) {
    s += "w:";
    for (long w : weights) s += std::to_string(w) + ",";
  }
  return s;
}

void check_precedence(const Ring& r, const std::vector<int>& perm) {
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < r->count(); ++i)
    if (i >= static_cast<int>(sorted.size()) || sorted[static_cast<std::size_t>(i)] != i)
      throw Error("precedence list is not a permutation of the ring variables");
  if (static_cast<int>(perm.size()) != r->count())
    throw Error("precedence list is not a permutation of the ring variables");
}

MonomialOrder MonomialOrder::grevlex(const Ring& r) {
  return grevlex(r, r->canon_perm());
}

MonomialOrder MonomialOrder::grevlex(const Ring& r, std::vector<int> precedence) {
  check_precedence(r, precedence);
  MonomialOrder o;
  o.kind = Kind::Grevlex;
  o.perm = std::move(precedence);
  return o;
}

MonomialOrder MonomialOrder::lex(const Ring& r) { return lex(r, r->canon_perm()); }

MonomialOrder MonomialOrder::lex(const Ring& r, std::vector<int> precedence) {
  check_precedence(r, precedence);
  MonomialOrder o;
  o.kind = Kind::Lex;
  o.perm = std::move(precedence);
  return o;
}

MonomialOrder MonomialOrder::weight_order(const Ring& r, std::vector<long> w) {
  return weight_order(r, std::move(w), r->canon_perm());
}

MonomialOrder MonomialOrder::weight_order(const Ring& r, std::vector<long> w,
                                          std::vector<int> precedence) {
  check_precedence(r, precedence);
  if (static_cast<int>(w.size()) != r->count())
    throw Error("weight vector length must equal the variable count");
  for (long wi : w)
    if (wi < 1) throw Error("weights must be >= 1 to give a global order");
  MonomialOrder o;
  o.kind = Kind::Weight;
  o.perm = std::move(precedence);
  o.weights = std::move(w);
  return o;
}

MonomialOrder MonomialOrder::elimination(const Ring& r, const std::vector<int>& lead) {
  MonomialOrder o;
  o.kind = Kind::Block;
  o.block = static_cast<int>(lead.size());
  o.perm = lead;
  for (int i : r->canon_perm())
    if (std::find(lead.begin(), lead.end(), i) == lead.end()) o.perm.push_back(i);
  check_precedence(r, o.perm);
  return o;
}

MonomialOrder canonical_order(const Ring& r) { return MonomialOrder::grevlex(r); }

MonomialOrder lex_x0_least(const Ring& r) { return MonomialOrder::lex(r, r->canon_perm()); }

}  // namespace arr
