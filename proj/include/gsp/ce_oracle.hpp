#pragma once

#include <map>
#include <vector>

#include "gsp/root_data.hpp"

namespace gsp {

struct CEDegree {
  int degree = 0;
  std::map<Weight, long long> weights;  // torus weight -> dim of that weight space of H^degree
  long long dim() const;
};

// torus weights of V_lambda, realized inside Sym(W) x Sym(Lambda^2 W) for the
// standard module W of Sp_{2n}, n <= 2
std::map<Weight, long long> explicit_module_weights(const Weight& lambda, long long max_dim = 10000);

// H^*(Lie(N_S), V_lambda) from the cochain complex Hom(Lambda^k n, V) with exact ranks
// computed weight by weight
std::vector<CEDegree> chevalley_eilenberg_oracle(const ParabolicIndex& S, const Weight& lambda,
                                                 long long max_dim = 10000);

}  // namespace gsp
