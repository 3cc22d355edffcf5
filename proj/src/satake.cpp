#include "gsp/satake.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gsp {

namespace {

// X^{-xa} sum over I inside idx of (-1)^{|I cap K|} prod X_i^{ea}
Laurent subset_sum(int n, const std::vector<int>& idx, const std::vector<int>& K, long long xa, long long ea) {
  Laurent f = Laurent::X(n, -xa);
  for (int i : idx) {
    bool neg = std::find(K.begin(), K.end(), i) != K.end();
    f = f * (Laurent::constant(n, Q(1)) + Laurent::Xi(n, i, ea) * Q(neg ? -1 : 1));
  }
  return f;
}

std::vector<int> range(int lo, int hi) {  // lo..hi inclusive
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

Laurent satake_phi(int n, int a) {
  if (n < 0 || a < 1) throw std::invalid_argument("need n >= 0, a >= 1");
  return subset_sum(n, range(1, n), {}, 1, 1) * Laurent::p(n, static_cast<long long>(a) * n * (n + 1) / 2);
}

Laurent satake_transfer(int n, int a, const std::vector<int>& K) {
  if (n < 0 || a < 1) throw std::invalid_argument("need n >= 0, a >= 1");
  for (int k : K)
    if (k < 1 || k > n) throw std::invalid_argument("K must lie in {1..n}");
  return subset_sum(n, range(1, n), K, a, a) * Laurent::p(n, static_cast<long long>(a) * n * (n + 1) / 2);
}

SatakeFamily build_family(const LeviDatum& M, const GTriple& g, int a) {
  if (!(g.M == M)) throw std::invalid_argument("triple belongs to another Levi");
  if (a < 1) throw std::invalid_argument("need a >= 1");
  int n = M.n(), r = M.r, t = M.t, m = M.m;
  SatakeFamily F;
  F.M = M;
  F.g = g;
  F.a = a;
  F.K_prime = range(r + 2 * t + g.m1 + 1, n);
  F.K = g.A;
  for (int j : g.B) {
    F.K.push_back(r + 2 * j - 1);
    F.K.push_back(r + 2 * j);
  }
  F.K.insert(F.K.end(), F.K_prime.begin(), F.K_prime.end());
  std::sort(F.K.begin(), F.K.end());

  long long pn = static_cast<long long>(a) * n * (n + 1) / 2;
  long long pm = static_cast<long long>(a) * m * (m + 1) / 2;
  auto high = range(r + 2 * t + 1, n);
  F.phi = satake_phi(n, a);
  F.phi_M = F.phi;
  F.phi_upper_M = subset_sum(n, high, {}, 1, 1) * Laurent::p(n, pm);
  F.f_M_prime = subset_sum(n, high, F.K_prime, a, a) * Laurent::p(n, pm);
  F.f_H = satake_transfer(n, a, F.K);
  F.f_H_M_H = F.f_H;
  F.psi_M_prime = subset_sum(n, range(1, n), F.K_prime, a, a) * Laurent::p(n, pn);
  F.psi_M_prime_literal = subset_sum(n, range(1, n), F.K_prime, a, 1) * Laurent::p(n, pn);

  for (unsigned I = 0; I < (1u << r); ++I) {
    Laurent x = Laurent::constant(n, Q(1));
    for (int i = 0; i < r; ++i)
      if ((I >> i) & 1) x = x * Laurent::Xi(n, i + 1, a);
    F.psi_I.push_back(x);
  }
  for (int j = 1; j <= t; ++j) {
    auto u = Laurent::Xi(n, r + 2 * j - 1, a), v = Laurent::Xi(n, r + 2 * j, a);
    F.psi_j.push_back({Laurent::constant(n, Q(1)), u + v, u * v});
  }
  F.psi_h = subset_sum(n, high, F.K_prime, a, a);
  return F;
}

FactorizationReport verify_factorizations(const SatakeFamily& F) {
  int n = F.M.n(), r = F.M.r, t = F.M.t, m = F.M.m;
  long long pn = static_cast<long long>(F.a) * n * (n + 1) / 2;
  long long pm = static_cast<long long>(F.a) * m * (m + 1) / 2;
  FactorizationReport rep;

  Laurent lhs1 = Laurent::p(n, pm) * F.psi_I[0];
  for (const auto& pj : F.psi_j) lhs1 = lhs1 * pj[0];
  rep.f_M_prime = lhs1 * F.psi_h == F.f_M_prime;

  Laurent sum_I(n), signed_I(n);
  for (unsigned I = 0; I < (1u << r); ++I) {
    sum_I += F.psi_I[I];
    int inA = 0;
    for (int i : F.g.A) inA += (I >> (i - 1)) & 1;
    signed_I += F.psi_I[I] * Q(inA % 2 ? -1 : 1);
  }
  Laurent plus = Laurent::constant(n, Q(1)), twisted = plus, all_minus = plus;
  for (int j = 1; j <= t; ++j) {
    const auto& pj = F.psi_j[j - 1];
    Laurent pp = pj[0] + pj[1] + pj[2], mm = pj[0] - pj[1] + pj[2];
    bool inB = std::find(F.g.B.begin(), F.g.B.end(), j) != F.g.B.end();
    plus = plus * pp;
    twisted = twisted * (inB ? mm : pp);
    all_minus = all_minus * mm;
  }
  Laurent psi = Laurent::p(n, pn) * sum_I * plus * F.psi_h;
  rep.psi_M_prime = psi == F.psi_M_prime;
  rep.psi_M_prime_literal = psi == F.psi_M_prime_literal;
  rep.f_H_M_H = Laurent::p(n, pn) * signed_I * twisted * F.psi_h == F.f_H_M_H;
  rep.f_H_M_H_literal = Laurent::p(n, pn) * signed_I * all_minus * F.psi_h == F.f_H_M_H;
  return rep;
}

std::vector<SignedPermutation> endoscopic_weyl_group(int n, const std::vector<int>& K) {
  std::vector<bool> inK(n, false);
  for (int k : K) inK.at(k - 1) = true;
  std::vector<SignedPermutation> out;
  for_each_weyl(n, [&](const SignedPermutation& w) {
    int flips = 0;
    for (int i = 0; i < n; ++i) {
      if (inK[i] != inK[w.perm[i]]) return;
      if (inK[i] && w.signs[i] < 0) ++flips;
    }
    if (flips % 2 == 0) out.push_back(w);
  });
  return out;
}

}  // namespace gsp
