#pragma once

#include <array>
#include <string>
#include <vector>

#include "gsp/endoscopy.hpp"
#include "gsp/laurent.hpp"

namespace gsp {

// p^{a n(n+1)/2} X^{-1} sum_{I} prod_{i in I} X_i
Laurent satake_phi(int n, int a);
// p^{a n(n+1)/2} X^{-a} sum_{I} (-1)^{|I cap K|} prod_{i in I} X_i^a, K 1-based
Laurent satake_transfer(int n, int a, const std::vector<int>& K);

struct SatakeFamily {
  LeviDatum M;
  GTriple g;
  int a = 1;
  std::vector<int> K, K_prime;  // 1-based
  Laurent phi, phi_M, phi_upper_M, f_H, f_H_M_H, psi_M_prime, f_M_prime;
  // psi^{M'} with X_i rather than X_i^a, exactly as displayed
  Laurent psi_M_prime_literal;
  // factors: psi_I for I inside {1..r} (indexed by bit mask), psi_j^{(0,1,2)}, psi_h
  std::vector<Laurent> psi_I;
  std::vector<std::array<Laurent, 3>> psi_j;
  Laurent psi_h;
};

SatakeFamily build_family(const LeviDatum& M, const GTriple& g, int a);

struct FactorizationReport {
  bool f_M_prime = false;
  bool psi_M_prime = false;
  bool f_H_M_H = false;
  // the displayed forms: psi^{M'} with X_i and the minus sign on every GL_2 factor
  bool psi_M_prime_literal = false;
  bool f_H_M_H_literal = false;
  bool all() const { return f_M_prime && psi_M_prime && f_H_M_H; }
};
FactorizationReport verify_factorizations(const SatakeFamily& fam);

// Weyl group of H = G(Sp x SO) inside that of G: signed permutations of the
// complement of K times signed permutations of K with an even number of sign changes
std::vector<SignedPermutation> endoscopic_weyl_group(int n, const std::vector<int>& K);

}  // namespace gsp
