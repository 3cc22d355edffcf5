#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gsp/rational.hpp"

namespace gsp {

// a_c c + sum a_i e_i, stored as (2a_c, 2a_1, ..., 2a_n).
// With et_i = e_i - c/2 the same weight is (a_c + sum a_i / 2) c + sum a_i et_i;
// the roots are the +-et_i +- et_j and +-2 et_i, so every root has zero c-part
// in the (c, et) basis.
struct Weight {
  std::vector<long long> doubled;

  Weight() = default;
  explicit Weight(std::vector<long long> d) : doubled(std::move(d)) {}

  static Weight zero(int n) { return Weight(std::vector<long long>(n + 1, 0)); }
  static Weight from_coeffs(const Q& ac, const std::vector<Q>& a);
  static Weight from_tilde(const Q& cpart, const std::vector<Q>& a);
  static Weight c(int n);
  static Weight e(int n, int i);  // 1-based

  int rank() const { return static_cast<int>(doubled.size()) - 1; }
  Q coeff_c() const { return make_q(doubled[0], 2); }
  Q coeff(int i) const { return make_q(doubled[i], 2); }
  // coefficient of c once the e_i are rewritten as et_i + c/2
  Q central_part() const;
  std::vector<Q> tilde() const;
  bool is_integral() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(long long k) const;
  bool operator==(const Weight& o) const { return doubled == o.doubled; }
  bool operator<(const Weight& o) const { return doubled < o.doubled; }

  std::string str() const;
};

// coefficients in the dual basis (c^v, e^_1..e^_n); <c,c^v>=1, <e_i,e^_j>=delta_ij,
// <c,e^_j>=<e_i,c^v>=0
struct Coweight {
  std::vector<long long> coeffs;
  int rank() const { return static_cast<int>(coeffs.size()) - 1; }
};

Q pairing(const Weight& x, const Coweight& y);

Weight rho(int n);
// mu(z) = diag(z I_n, I_n)
Coweight mu_cocharacter(int n);
// sum_{i<=s} e^_i
Coweight varpi(int n, int s);
Coweight coroot(const Weight& alpha);

std::vector<Weight> roots(int n);
std::vector<Weight> positive_roots(int n);
std::vector<Weight> simple_roots(int n);
bool is_root(const Weight& x);
bool is_positive_root(const Weight& alpha);
bool is_dominant(const Weight& x);

// w(et_i) = signs[i] et_{perm[i]}, w(c) = c; perm is 0-based internally
struct SignedPermutation {
  std::vector<int> signs;
  std::vector<int> perm;

  static SignedPermutation identity(int n);
  int rank() const { return static_cast<int>(perm.size()); }
  SignedPermutation operator*(const SignedPermutation& o) const;  // this after o
  SignedPermutation inverse() const;
  bool operator==(const SignedPermutation& o) const {
    return signs == o.signs && perm == o.perm;
  }
  bool operator<(const SignedPermutation& o) const {
    return perm != o.perm ? perm < o.perm : signs < o.signs;
  }
  std::string str() const;
};

std::vector<SignedPermutation> weyl_group(int n);
void for_each_weyl(int n, const std::function<void(const SignedPermutation&)>& f);

Weight act(const SignedPermutation& w, const Weight& x);
std::vector<Weight> inversion_set(const SignedPermutation& w);
int length(const SignedPermutation& w);
int weyl_sign(const SignedPermutation& w);
// reflection in the root alpha
SignedPermutation reflection(const Weight& alpha);

// standard parabolic P_S; Levi GL_{r_1} x ... x GL_{r_k} x GSp_{2(n-r)}
struct ParabolicIndex {
  int n = 0;
  std::vector<int> S;  // sorted, 1-based

  ParabolicIndex() = default;
  ParabolicIndex(int n_, std::vector<int> s);
  int r() const { return S.empty() ? 0 : S.back(); }
  std::vector<int> gl_blocks() const;
  bool in_levi(const Weight& alpha) const;
  std::vector<Weight> levi_positive_roots() const;
  std::vector<Weight> nilradical_roots() const;
  long long levi_weyl_order() const;
  std::string str() const;
};

std::vector<ParabolicIndex> all_parabolics(int n);
std::vector<SignedPermutation> kostant_representatives(const ParabolicIndex& P);

// exact Weyl dimension formula for the subsystem with the given positive roots
Q weyl_dimension(const std::vector<Weight>& positive, const Weight& highest);

}  // namespace gsp
