#pragma once

#include <vector>

#include "arr/groebner.hpp"
#include "arr/ideal.hpp"

namespace arr {

// Numerator of the Hilbert series of S/I over (1-t)^N together with the
// Krull dimension and degree read off from the cancelled form.
struct HilbertData {
  std::vector<long long> numerator;  // K-polynomial, index = power of t
  int dim = 0;
  long long degree = 0;
};

// K-polynomial of a monomial ideal by the pivot-variable recursion: split on
// the variable occurring in the most minimal generators, memoized on the
// minimal generator set. Base case: pairwise coprime generators.
std::vector<long long> k_polynomial(std::vector<Monomial> gens, int nvars);

// Hilbert function values of S/I in degrees 0..maxdeg from a K-polynomial.
std::vector<long long> hf_from_k(const std::vector<long long>& k, int nvars, int maxdeg);

HilbertData hilbert_from_monomials(std::vector<Monomial> gens, int nvars);

// Requires a homogeneous ideal; works on the initial ideal of the reduced GB
// under the given order (the Hilbert function is order-independent).
HilbertData hilbert(const Ideal& I, const MonomialOrder& order,
                    ExecMode mode = exec_mode(), StepBudget* budget = nullptr);

std::vector<long long> hf_values(const Ideal& I, const MonomialOrder& order, int maxdeg,
                                 ExecMode mode = exec_mode(), StepBudget* budget = nullptr);

// Minimal elements under componentwise divisibility, sorted canonically.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

// All monomials of the given total degree in nvars variables.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace arr
