#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gsp/rational.hpp"

namespace gsp {

// H = G(Sp_{2 n1} x SO_{2 n2}), an elliptic endoscopic group of GSp_{2n}
struct EndoscopicDatum {
  int n1 = 0, n2 = 0;
  int n() const { return n1 + n2; }
  int lambda_order() const { return n2 == 0 ? 1 : 2; }
  std::string label() const;
};

std::vector<EndoscopicDatum> elliptic_data(int n);
int tamagawa(int n1, int n2);
int tamagawa(const EndoscopicDatum& d);
long long k_constant(int n1, int n2);  // n2 even
Q iota(int n, const EndoscopicDatum& d);
// size of the discrete series L-packets of GSp_{2n}: |Omega| / |<-1, S_n>|
long long d_G(int n);

// G_m^r x GL_2^t x GSp_{2m}
struct LeviDatum {
  int r = 0, t = 0, m = 0;
  int n() const { return r + 2 * t + m; }
  bool operator==(const LeviDatum& o) const = default;
  std::string label() const;
};

std::vector<LeviDatum> cuspidal_levis(int n);
long long n_M_G(const LeviDatum& M);
long long k_levi(const LeviDatum& M);
int tau_levi(const LeviDatum& M);

// type of G_m^{r1+r2} x GL_2^{t1+t2} x G(Sp_{2 m1} x SO_{2 m2}) as a Levi of H:
// index 1 for the Sp side, 2 for the SO side
struct LeviKey {
  int r1 = 0, t1 = 0, m1 = 0, r2 = 0, t2 = 0, m2 = 0;
  auto operator<=>(const LeviKey&) const = default;
  std::string str() const;
};

struct GTriple {
  LeviDatum M;
  std::vector<int> A, B;  // 1-based subsets of {1..r}, {1..t}
  int m1 = 0, m2 = 0;
  int r1() const { return M.r - static_cast<int>(A.size()); }
  int r2() const { return static_cast<int>(A.size()); }
  int t1() const { return M.t - static_cast<int>(B.size()); }
  int t2() const { return static_cast<int>(B.size()); }
  int n1() const { return r1() + 2 * t1() + m1; }
  int n2() const { return r2() + 2 * t2() + m2; }
  EndoscopicDatum H() const { return {n1(), n2()}; }
  LeviKey key() const { return {r1(), t1(), m1, r2(), t2(), m2}; }
  std::string M_prime_label() const;
  long long n_Mp_H() const;  // 2^{r+t} r1! t1! r2! t2!
  // |Lambda_G(M')| as stated: the order of Lambda(H) when M = G, 1 otherwise
  int lambda_order_paper() const;
  // order that balances the double counting: 2 whenever the SO_{2 m2} factor is
  // nontrivial (m2 >= 2), 1 otherwise
  int lambda_order_corrected() const;
  bool cuspidal() const { return m2 % 2 == 0 && A.size() % 2 == 0; }
  bool ell0() const { return n2() % 2 == 0; }
};

struct TripleFilters {
  bool require_n2_ne_1 = true;
  bool cuspidal_only = false;
  bool ell0_only = false;
};

std::vector<GTriple> g_triples(const LeviDatum& M, const TripleFilters& f = {});

// k and tau of M' = G_m^r x GL_2^t x G(Sp_{2 m1} x SO_{2 m2})
long long k_M_prime(const GTriple& g);
int tau_M_prime(const GTriple& g);
bool k_tau_identity(const LeviDatum& M, const GTriple& g);

// Conjugacy classes of cuspidal Levi subgroups of H found by brute force on the
// root system C_{n1} x D_{n2}: W_H-orbits of Levi subsystems, with the order of
// Stab_{W_H}(Phi_M) / W_M.
struct HLeviClass {
  LeviKey key;
  long long normalizer = 0;
  std::vector<std::vector<int>> roots;  // a representative Phi_M
};
std::vector<HLeviClass> h_cuspidal_levi_classes(const EndoscopicDatum& H);

using LeviFunction = std::function<Q(const EndoscopicDatum&, const LeviKey&)>;

// lhs: sum over Ell(G) and over Levi(H); rhs: sum over Levi(G) and Ell_G(M).
// phi is evaluated only at cuspidal pairs.
Sides double_counting_check(int n, const LeviFunction& phi, bool literal_lambda = false);

}  // namespace gsp
