#pragma once

#include <vector>

#include "arr/ideal.hpp"
#include "arr/order.hpp"
#include "arr/parallel.hpp"
#include "arr/polynomial.hpp"

namespace arr {

// Remainder of full multivariate division: f - r lies in <basis> and no
// monomial of r is divisible by a leading monomial of basis. Deterministic
// for a fixed basis order (first matching divisor wins).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

// Reduced Groebner basis via Buchberger completion: sugar-ordered normal
// selection, Gebauer-Moller pair pruning (coprime and chain criteria).
// S-pairs sharing the minimal sugar degree are reduced as one batch against a
// basis snapshot (the OpenMP kernel) and committed in selection order, so
// Serial and Parallel modes produce the identical basis sequence.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order,
                                   ExecMode mode = exec_mode(),
                                   StepBudget* budget = nullptr);

// Classic one-pair-at-a-time completion, kept as the reference
// implementation for testing and benchmarks.
std::vector<Polynomial> buchberger_reference(const std::vector<Polynomial>& gens,
                                             const MonomialOrder& order,
                                             StepBudget* budget = nullptr);

// Buchberger criterion: every S-polynomial reduces to zero against gens, with
// the coprime and chain criteria applied only as skips.
bool is_groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order);

bool member(const Polynomial& f, const Ideal& I, const MonomialOrder& order,
            ExecMode mode = exec_mode(), StepBudget* budget = nullptr);

// Generators of I intersected with the subring excluding vars, via a block
// order with vars in the leading block. The result ideal lives in the same
// ring and its canonical-order GB cache is primed.
Ideal eliminate(const Ideal& I, const std::vector<int>& vars,
                ExecMode mode = exec_mode(), StepBudget* budget = nullptr);

// I cap J via the tag construction t*I + (1-t)*J and elimination of t.
Ideal intersect(const Ideal& I, const Ideal& J, ExecMode mode = exec_mode(),
                StepBudget* budget = nullptr);

// Left fold of intersect over the list.
Ideal intersect_all(const std::vector<Ideal>& ideals, ExecMode mode = exec_mode(),
                    StepBudget* budget = nullptr);

// Equality through reduced-GB uniqueness under the given order.
bool ideals_equal(const Ideal& I, const Ideal& J, const MonomialOrder& order,
                  ExecMode mode = exec_mode(), StepBudget* budget = nullptr);

// Leading monomials of a basis (used to pass initial ideals around).
std::vector<Monomial> initial_monomials(const std::vector<Polynomial>& basis,
                                        const MonomialOrder& order);

}  // namespace arr
