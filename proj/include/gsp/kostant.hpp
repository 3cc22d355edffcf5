#pragma once

#include <map>
#include <vector>

#include "gsp/root_data.hpp"

namespace gsp {

struct CohomologyPiece {
  int degree = 0;
  SignedPermutation omega;
  Weight highest;         // lambda
  Weight kostant_weight;  // omega(lambda + rho) - rho
  ParabolicIndex rep_of;
  long long dimension = 0;
  bool kept_by_truncation = true;
};

// H^*(Lie(N_S), V_lambda) as a sum of irreducible M_S-modules, sorted by (degree, omega)
std::vector<CohomologyPiece> kostant_cohomology(const ParabolicIndex& S, const Weight& lambda);

enum class Direction { above, below };

// keeps a piece iff <omega(lambda + rho + lambda0), varpi_s> is > 0 (above) or < 0
// (below) for all s in S. lambda0 must be the central character of lambda, written
// as a multiple of c.
std::vector<CohomologyPiece> truncate(std::vector<CohomologyPiece> pieces, const Weight& lambda0,
                                      const ParabolicIndex& S, Direction dir);
Weight central_character(const Weight& lambda);

// value of an integral weight at the torus element
// gamma = diag(t_1..t_n, nu/t_n..nu/t_1), given by its 2n diagonal entries
Q evaluate_character(const Weight& x, const std::vector<Q>& gamma);

// Weyl character formula as a sum over Omega of eps(w) (w(lambda+rho)-rho)(gamma)
// divided by prod_{alpha>0} (1 - alpha^{-1}(gamma))
Q weyl_character_trace(const Weight& lambda, const std::vector<Q>& gamma);
// the same value as a sum over Borel subgroups containing T
Q weyl_character_trace_borels(const Weight& lambda, const std::vector<Q>& gamma);

// Freudenthal multiplicities of the irreducible module with the given highest
// weight for the reductive subgroup with these positive and simple roots
std::map<Weight, long long> weight_multiplicities(const std::vector<Weight>& positive,
                                                  const std::vector<Weight>& simple,
                                                  const Weight& highest);
std::vector<Weight> levi_simple_roots(const ParabolicIndex& S);
// sum of mult(mu) mu(gamma)
Q character_by_multiplicities(const Weight& lambda, const std::vector<Q>& gamma);

// torus weights of H^i, grouped by degree, predicted by the pieces
std::vector<std::map<Weight, long long>> graded_weights(const std::vector<CohomologyPiece>& pieces,
                                                        int max_degree);

}  // namespace gsp
