#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace arr {

// Exponent vector with cached total degree. Rings are capped at kMaxVars
// variables (desk scale is <= 6, one more for an elimination tag).
struct Monomial {
  static constexpr int kMaxVars = 16;

  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  static Monomial one() { return {}; }

  static Monomial var(int i, std::uint16_t k = 1) {
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = k;
    m.deg = k;
    return m;
  }

  bool is_one() const { return deg == 0; }
  std::uint16_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < Monomial::kMaxVars; ++i)
    r.e[static_cast<std::size_t>(i)] =
        static_cast<std::uint16_t>(a.e[static_cast<std::size_t>(i)] + b.e[static_cast<std::size_t>(i)]);
  r.deg = a.deg + b.deg;
  return r;
}

// True iff a divides b componentwise.
inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < Monomial::kMaxVars; ++i)
    if (a.e[static_cast<std::size_t>(i)] > b.e[static_cast<std::size_t>(i)]) return false;
  return true;
}

// b / a, caller guarantees divisibility.
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < Monomial::kMaxVars; ++i)
    r.e[static_cast<std::size_t>(i)] =
        static_cast<std::uint16_t>(b.e[static_cast<std::size_t>(i)] - a.e[static_cast<std::size_t>(i)]);
  r.deg = b.deg - a.deg;
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::uint32_t d = 0;
  for (int i = 0; i < Monomial::kMaxVars; ++i) {
    std::uint16_t m = a.e[static_cast<std::size_t>(i)] > b.e[static_cast<std::size_t>(i)]
                          ? a.e[static_cast<std::size_t>(i)]
                          : b.e[static_cast<std::size_t>(i)];
    r.e[static_cast<std::size_t>(i)] = m;
    d += m;
  }
  r.deg = d;
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < Monomial::kMaxVars; ++i)
    if (a.e[static_cast<std::size_t>(i)] != 0 && b.e[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < Monomial::kMaxVars; ++i) {
      h ^= m.e[static_cast<std::size_t>(i)];
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Compact byte key, usable as a map key for memoization.
inline std::string monomial_key(const Monomial& m, int nvars) {
  std::string s;
  s.reserve(static_cast<std::size_t>(nvars) * 2);
  for (int i = 0; i < nvars; ++i) {
    s.push_back(static_cast<char>(m[i] & 0xff));
    s.push_back(static_cast<char>((m[i] >> 8) & 0xff));
  }
  return s;
}

}  // namespace arr
