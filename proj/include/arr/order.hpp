#pragma once

#include <string>
#include <vector>

#include "arr/monomial.hpp"
#include "arr/varring.hpp"

namespace arr {

// A multiplicative well-order on exponent vectors. perm is the precedence
// list, most significant variable first; every kind respects it. All kinds
// are global orders: 1 is the unique minimum and u < v implies uw < vw.
struct MonomialOrder {
  enum class Kind { Lex, Grevlex, Weight, Block };

  Kind kind = Kind::Grevlex;
  std::vector<int> perm;
  // Kind::Weight only; indexed by variable, all >= 1, grevlex(perm) tiebreak.
  std::vector<long> weights;
  // Kind::Block only; perm[0..block) forms the leading elimination block.
  int block = 0;

  int compare(const Monomial& u, const Monomial& v) const;
  bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

  // Serialization used as the ideal GB-cache key.
  std::string key() const;

  static MonomialOrder grevlex(const Ring& r);
  static MonomialOrder grevlex(const Ring& r, std::vector<int> precedence);
  static MonomialOrder lex(const Ring& r);
  static MonomialOrder lex(const Ring& r, std::vector<int> precedence);
  static MonomialOrder weight_order(const Ring& r, std::vector<long> w);
  static MonomialOrder weight_order(const Ring& r, std::vector<long> w,
                                    std::vector<int> precedence);
  // Elimination order whose leading block is the given variables (in the
  // listed order); remaining variables follow in canonical precedence.
  static MonomialOrder elimination(const Ring& r, const std::vector<int>& lead);
};

// Grevlex along the ring's canonical precedence (x0 demoted to least when
// present). This is both the storage order of Polynomial and the default
// order of every CLI subcommand.
MonomialOrder canonical_order(const Ring& r);

// Lex with the same precedence convention as canonical_order.
MonomialOrder lex_x0_least(const Ring& r);

// Validates that perm is a permutation of 0..count-1 (throws otherwise).
void check_precedence(const Ring& r, const std::vector<int>& perm);

}  // namespace arr
