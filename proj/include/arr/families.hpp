#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arr/groebner.hpp"
#include "arr/ideal.hpp"
#include "arr/linalg.hpp"
#include "arr/polynomial.hpp"
#include "arr/report.hpp"

namespace arr {

enum class Family { LiLi, KL, Skeleton, StanleyReisner };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Which arrangement family with parameters (n, p, m). StanleyReisner forces
// m = 1; Skeleton squares against x0 and forces m = 2. LiLi/KL/StanleyReisner
// live in k[x1..xn], Skeleton in k[x0..xn].
struct FamilySpec {
  Family family;
  int n;
  int p;
  int m;

  FamilySpec(Family f, int n_, int p_, int m_ = 1);

  Ring ring() const;
  std::string to_string() const;
  // Parses the "family=LiLi n=3 p=2 m=2" token form.
  static FamilySpec parse(const std::string& text);
};

// A linear subspace given by its defining ideal (independent homogeneous
// linear forms) together with a rational parametric description (an
// integer-scaled basis of the solution space).
struct LinearSubspace {
  Ring ring;
  std::vector<Polynomial> forms;
  std::vector<QVec> params;

  int codim() const { return static_cast<int>(forms.size()); }
  Ideal ideal() const { return Ideal(ring, forms); }
};

LinearSubspace make_subspace(const Ring& r, std::vector<Polynomial> forms);

// The displayed generator products of each family.
std::vector<Polynomial> family_generators(const FamilySpec& spec);

// Irreducible components as linear subspaces; rational only, so m <= 2.
std::vector<LinearSubspace> components(const FamilySpec& spec);

// The oracle: the vanishing ideal of a union of linear subspaces is the left
// fold of pairwise intersections of the component ideals.
Ideal brute_force_ideal(const std::vector<LinearSubspace>& comps,
                        ExecMode mode = exec_mode(), StepBudget* budget = nullptr);

// Exact verification of a family instance: generator structure, component
// vanishing, the ideal identity against the component oracle (m <= 2), the
// power-substitution identity over the rationals (any m), and the complete
// intersection codimension/degree counts.
VerificationReport verify_family(const FamilySpec& spec, ExecMode mode = exec_mode(),
                                 StepBudget* budget = nullptr);

// All choice ideals of a regular sequence of products of linear forms; each
// generator is supplied with its linear factorization. Checks the decomposed
// intersection against the input ideal at desk scale.
std::vector<LinearSubspace> ci_decomposition(
    const std::vector<std::pair<Polynomial, std::vector<Polynomial>>>& qs,
    ExecMode mode = exec_mode(), StepBudget* budget = nullptr);

// True iff the n x (p+1) matrix with i-th row (1, x_i^m, ..., x_i^pm)
// evaluated at the point has rank <= p.
bool truncation_rank_test(int n, int m, int p, const QVec& point);

// Deterministic rational points on the subspace: integer combinations of the
// kernel basis with coefficients cycling through {1,2,3,5,7}.
std::vector<QVec> sample_points(const LinearSubspace& c, int count);

// The six pairwise intersection points of the four projective lines bounding
// the 2-cube closure (the 2-truncation of that line arrangement), in
// homogeneous coordinates (x0, x1, x2) with first nonzero entry positive.
std::vector<QVec> cube_truncation_points_n2();

}  // namespace arr
