#include "gsp/appendix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gsp {

namespace {

int sgn_pow(int k) { return k % 2 ? -1 : 1; }

Q sum_of(const std::vector<Q>& v) {
  Q s = 0;
  for (const auto& x : v) s += x;
  return s;
}

// sum over Par0_{<=2}(X) of eps(p) c(p, lambda)
long long herb_sum(Mask X, const ScaledVector& lam) {
  long long s = 0;
  for_each_set_partition(singleton_atoms(X), [&](const OrderedPartition& p) {
    if (!in_par0_le2(p)) return;
    long long c = c_of(p, lam);
    if (c) s += eps(p) * c;
  });
  return s;
}

bool is_prefix_union(const OrderedPartition& P, Mask J, int* r = nullptr) {
  Mask acc = 0;
  for (int i = 0; i < P.size(); ++i) {
    acc |= P.blocks[i];
    if (acc == J) {
      if (r) *r = i + 1;
      return true;
    }
    if (acc & ~J) return false;
  }
  return J == 0;
}

bool is_block_union(const OrderedPartition& p, Mask J) {
  for (Mask b : p.blocks)
    if ((b & J) && (b & ~J)) return false;
  return true;
}

}  // namespace

SignSystem sign_system(int which) {
  switch (which) {
    case 1:
      return {"trivial", [](Mask, Mask, Mask) { return 1LL; },
              [](Mask, const OrderedPartition&) { return 1LL; }};
    case 2:
      return {"eps_prime", [](Mask, Mask, Mask) { return 1LL; },
              [](Mask, const OrderedPartition& P) { return static_cast<long long>(eps_prime(P)); }};
    case 3:
      return {"eps", [](Mask, Mask J, Mask K) { return static_cast<long long>(eps_split(J, K)); },
              [](Mask, const OrderedPartition& P) { return static_cast<long long>(eps(P)); }};
    case 4:
      return {"eps_eps_prime",
              [](Mask, Mask J, Mask K) { return static_cast<long long>(eps_split(J, K)); },
              [](Mask, const OrderedPartition& P) {
                return static_cast<long long>(eps(P) * eps_prime(P));
              }};
    default:
      throw std::invalid_argument("sign systems are numbered 1..4");
  }
}

SignSystem product(const SignSystem& x, const SignSystem& y) {
  return {x.name + "*" + y.name,
          [x, y](Mask Ip, Mask J, Mask K) { return x.a(Ip, J, K) * y.a(Ip, J, K); },
          [x, y](Mask Ip, const OrderedPartition& P) { return x.c(Ip, P) * y.c(Ip, P); }};
}

SignSystem split_system(const SignSystem& x, const SignSystem& y, Mask Iplus, Mask Iminus) {
  if (Iplus & Iminus) throw std::invalid_argument("split sets must be disjoint");
  return {"split(" + x.name + "," + y.name + ")",
          [=](Mask Ip, Mask J, Mask K) {
            return x.a(Ip & Iplus, J & Iplus, K & Iplus) * y.a(Ip & Iminus, J & Iminus, K & Iminus);
          },
          [=](Mask Ip, const OrderedPartition& P) {
            return x.c(Ip & Iplus, restrict_to(P, Iplus)) * y.c(Ip & Iminus, restrict_to(P, Iminus));
          }};
}

bool validate_multiplicativity(const SignSystem& s, Mask I) {
  if (popcount(I) > 7) throw std::length_error("validation limited to |I| <= 7");
  bool ok = true;
  for (Mask Ip = I;; Ip = (Ip - 1) & I) {
    for_each_ordered(singleton_atoms(Ip), [&](const OrderedPartition& P) {
      if (!ok) return;
      long long whole = s.c(Ip, P);
      Mask J = 0;
      for (int k = 0; k < P.size(); ++k) {
        J |= P.blocks[k];
        Mask K = Ip & ~J;
        if (whole != s.a(Ip, J, K) * s.c(J, restrict_to(P, J)) * s.c(K, restrict_to(P, K))) {
          ok = false;
          return;
        }
      }
    });
    if (!ok || !Ip) break;
  }
  return ok;
}

Sides check_prop_A1(const SignSystem& C, const SignSystem& D, const std::vector<Q>& lambda,
                    Mask Iplus) {
  auto lam = scale(lambda);
  Mask I = full_mask(lam.n());
  if (Iplus & ~I) throw std::invalid_argument("I+ outside the index set");
  Mask Iminus = I & ~Iplus;
  long long lhs = 0;
  for_each_ordered_positive(singleton_atoms(I), lam, false, [&](const OrderedPartition& P) {
    lhs += sgn_pow(P.size()) * C.c(Iplus, restrict_to(P, Iplus)) * D.c(Iminus, restrict_to(P, Iminus));
  });
  long long sp = 0, sm = 0;
  for_each_ordered_positive(singleton_atoms(Iplus), lam, false,
                            [&](const OrderedPartition& P) { sp += sgn_pow(P.size()) * C.c(Iplus, P); });
  for_each_ordered_positive(singleton_atoms(Iminus), lam, false,
                            [&](const OrderedPartition& P) { sm += sgn_pow(P.size()) * D.c(Iminus, P); });
  return {Q(static_cast<long>(lhs)), Q(static_cast<long>(sp * sm))};
}

Q cor_A2_sum(const std::vector<Q>& lambda) {
  auto lam = scale(lambda);
  long long s = 0;
  for_each_ordered_positive(singleton_atoms(full_mask(lam.n())), lam, false,
                            [&](const OrderedPartition& P) { s += sgn_pow(P.size()); });
  return Q(static_cast<long>(s));
}

Q cor_A2_closed_form(const std::vector<Q>& lambda) {
  for (const auto& x : lambda)
    if (x <= 0) return Q(0);
  return Q(sgn_pow(static_cast<int>(lambda.size())));
}

Sides check_prop_A3(const std::vector<Q>& lambda) {
  auto lam = scale(lambda);
  Mask I = full_mask(lam.n());
  long long lhs = 0;
  for_each_ordered_positive(singleton_atoms(I), lam, false, [&](const OrderedPartition& P) {
    lhs += sgn_pow(P.size()) * eps(P) * eps_prime(P);
  });
  long long rhs = sgn_pow(lam.n()) * herb_sum(I, lam);
  return {Q(static_cast<long>(lhs)), Q(static_cast<long>(rhs))};
}

Sides check_cor_A4(int n, int m, const std::vector<Q>& lambda, Mask Iplus) {
  if (n < 0 || m < 0 || static_cast<int>(lambda.size()) != n + 2 * m)
    throw std::invalid_argument("lambda must have length n + 2m");
  Mask In = full_mask(n);
  if (Iplus & ~In) throw std::invalid_argument("I+ must lie in {1..n}");
  Mask Iminus = In & ~Iplus;
  auto lam = scale(lambda);
  long long lhs = 0;
  for_each_ordered_positive(paired_atoms(n, m), lam, false, [&](const OrderedPartition& P) {
    auto Pp = restrict_to(P, Iplus), Pm = restrict_to(P, Iminus);
    lhs += sgn_pow(P.size()) * eps(Pp) * eps(Pm) * eps_prime(Pp) * eps_prime(Pm);
  });
  long long rhs = sgn_pow(n + m);
  for (int i = 0; i < m; ++i) rhs *= c1(lam.v[n + 2 * i] + lam.v[n + 2 * i + 1]);
  if (rhs) rhs *= herb_sum(Iplus, lam) * herb_sum(Iminus, lam);
  return {Q(static_cast<long>(lhs)), Q(static_cast<long>(rhs))};
}

Q herb_c(const std::vector<Q>& mu, Mask Iplus, const std::vector<Q>& nu) {
  Mask I = full_mask(static_cast<int>(mu.size()));
  if (Iplus & ~I) throw std::invalid_argument("I+ outside the index set");
  long long c = 1;
  for (const auto& x : nu) c *= c1(x);
  if (!c) return Q(0);
  auto lam = scale(mu);
  return Q(static_cast<long>(herb_sum(Iplus, lam) * herb_sum(I & ~Iplus, lam)));
}

std::optional<Q> delta(const std::vector<Q>& lambda) {
  auto lam = scale(lambda);
  Q L(denominator_lcm(lambda));
  std::optional<std::pair<long long, int>> best;
  for (Mask J = 1; J < (Mask(1) << lam.n()); ++J) {
    long long s = lam.s(J);
    if (s <= 0) continue;
    int k = popcount(J);
    if (!best || s * best->second < best->first * k) best = {s, k};
  }
  if (!best) return std::nullopt;
  return Q(static_cast<long>(best->first)) / (Q(best->second) * L);
}

int N_of(const std::vector<Q>& lambda) {
  auto d = delta(lambda);
  if (!d) throw std::domain_error("N(lambda) undefined: delta is -infinity");
  if (*d <= 0) throw std::domain_error("N(lambda) undefined");
  int best = 1 << 30;
  for (Mask J = 1; J < (Mask(1) << lambda.size()); ++J) {
    Q s = 0;
    for (int i : elements(J)) s += lambda[i];
    if (s == *d * popcount(J)) best = std::min(best, popcount(J));
  }
  return best;
}

Mask least_delta_subset(const std::vector<Q>& lambda) {
  auto d = delta(lambda);
  int N = N_of(lambda);
  std::optional<std::vector<int>> best;
  Mask bestJ = 0;
  for (Mask J = 1; J < (Mask(1) << lambda.size()); ++J) {
    if (popcount(J) != N) continue;
    Q s = 0;
    for (int i : elements(J)) s += lambda[i];
    if (s != *d * N) continue;
    auto e = elements(J);
    if (!best || e < *best) {
      best = e;
      bestJ = J;
    }
  }
  return bestJ;
}

bool has_positive_bipartition(const std::vector<Q>& lambda) {
  auto lam = scale(lambda);
  Mask I = full_mask(lam.n());
  for (Mask J = 1; J < I; ++J)
    if (lam.s(J) > 0 && lam.s(I & ~J) > 0) return true;
  return false;
}

RotationResult rotation_lemma(const std::vector<Q>& lambda) {
  int n = static_cast<int>(lambda.size());
  if (n == 0 || sum_of(lambda) <= 0) throw std::domain_error("rotation lemma needs a positive sum");
  auto lam = scale(lambda);
  auto& v = lam.v;
  RotationResult res;
  std::vector<long long> pre(n + 1, 0);
  for (int i = 0; i < n; ++i) pre[i + 1] = pre[i] + v[i];
  long long mn = *std::min_element(pre.begin() + 1, pre.end());
  for (int l = 1; l <= n; ++l)
    if (pre[l] == mn) res.k = l;

  auto rotation_positive = [&](int k) {
    long long acc = 0;
    for (int i = 0; i < n; ++i) {
      acc += v[(k + i) % n];
      if (acc <= 0) return false;
    }
    return true;
  };
  res.rotation_positive = rotation_positive(res.k % n);

  auto remark = [&](int k) {
    for (int l = k + 1; l <= n; ++l)
      if (pre[l] - pre[k] <= 0) return false;
    for (int l = 2; l <= k; ++l)
      if (pre[k] - pre[l - 1] > 0) return false;
    return true;
  };
  int hits = 0;
  bool mine = remark(res.k);
  for (int k = 1; k <= n; ++k) hits += remark(k);
  res.remark_conditions = mine && hits == 1;

  int pos_rot = 0;
  for (int k = 0; k < n; ++k) pos_rot += rotation_positive(k);
  res.unique_mod_n = pos_rot == 1;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    long long acc = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      acc += v[perm[i]];
      ok = acc > 0;
    }
    res.count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

DeltaReduction delta_reduction(const std::vector<Q>& lambda, Mask J) {
  int n = static_cast<int>(lambda.size());
  if (sum_of(lambda) <= 0) throw std::domain_error("delta reduction needs a positive sum");
  auto d = delta(lambda);
  int N = N_of(lambda);
  Q sJ = 0;
  for (int i : elements(J)) sJ += lambda.at(i);
  if (!J || popcount(J) != N || sJ != *d * N) throw std::invalid_argument("invalid J");

  DeltaReduction R;
  R.J = J;
  R.lambda_prime = lambda;
  for (int i : elements(J)) R.lambda_prime[i] -= *d;
  Mask I = full_mask(n), K = I & ~J;
  for (int i : elements(J)) R.mu.push_back(lambda[i]);
  for (int i : elements(K)) R.nu.push_back(lambda[i]);

  auto lam = scale(lambda), lp = scale(R.lambda_prime);

  R.i_ok = true;
  for (Mask S = 0; S <= I; ++S) {
    if (S != J && ((lam.s(S) > 0) != (lp.s(S) > 0))) R.i_ok = false;
    if (S == I) break;
  }

  // ordered statements (ii), (iii), (iv) by one pass over Par_ord(n)
  long long n_lam = 0, n_lp = 0, n_prime_pos = 0;
  R.ii_ord_ok = R.iii_ok = R.iv_ord_ok = true;
  int e0 = eps_split(J, K);
  for_each_ordered(singleton_atoms(I), [&](const OrderedPartition& P) {
    bool pl = is_positive(P, lam), pp = is_positive(P, lp);
    int r = 0;
    bool prime = is_prefix_union(P, J, &r);
    n_lam += pl;
    n_lp += pp;
    if (pp && !pl) R.ii_ord_ok = false;
    if (pl && (pp == prime)) R.ii_ord_ok = false;
    if (prime) {
      OrderedPartition P1{{P.blocks.begin(), P.blocks.begin() + r}};
      OrderedPartition P2{{P.blocks.begin() + r, P.blocks.end()}};
      if (eps(P) != e0 * eps(P1) * eps(P2) || eps_prime(P) != eps_prime(P1) * eps_prime(P2))
        R.iii_ok = false;
      bool split_pos = is_positive(P1, lam) && is_positive(P2, lam);
      if (pl != split_pos) R.iv_ord_ok = false;
      n_prime_pos += pl;
    }
  });
  long long n_mu = 0, n_nu = 0;
  for_each_ordered_positive(singleton_atoms(J), lam, false, [&](const OrderedPartition&) { ++n_mu; });
  for_each_ordered_positive(singleton_atoms(K), lam, false, [&](const OrderedPartition&) { ++n_nu; });
  if (n_prime_pos != n_mu * n_nu) R.iv_ord_ok = false;

  long long u_lam = 0, u_lp = 0, u_prime_pos = 0;
  R.ii_unord_ok = R.iv_unord_ok = true;
  for_each_set_partition(singleton_atoms(I), [&](const OrderedPartition& p) {
    bool pl = blocks_positive(p, lam), pp = blocks_positive(p, lp);
    bool prime = is_block_union(p, J);
    u_lam += pl;
    u_lp += pp;
    if (pp && !pl) R.ii_unord_ok = false;
    if (pl && (pp == prime)) R.ii_unord_ok = false;
    if (prime) {
      bool split_pos = blocks_positive(restrict_to(p, J), lam) && blocks_positive(restrict_to(p, K), lam);
      if (pl != split_pos) R.iv_unord_ok = false;
      u_prime_pos += pl;
    }
  });
  long long m_mu = 0, m_nu = 0;
  for_each_set_partition(singleton_atoms(J), [&](const OrderedPartition& p) { m_mu += blocks_positive(p, lam); });
  for_each_set_partition(singleton_atoms(K), [&](const OrderedPartition& p) { m_nu += blocks_positive(p, lam); });
  if (u_prime_pos != m_mu * m_nu) R.iv_unord_ok = false;

  R.strict_decrease = n_lp < n_lam && u_lp < u_lam;
  return R;
}

bool is_bloc(const std::vector<Mask>& Qb, int center, const ScaledVector& lam) {
  int r = static_cast<int>(Qb.size());
  if (center < 0 || center >= r) return false;
  long long acc = 0;
  for (int i = 0; i < center; ++i) {
    acc += lam.s(Qb[i]);
    if (acc <= 0) return false;
  }
  acc = 0;
  for (int j = r - 1; j > center; --j) {
    acc += lam.s(Qb[j]);
    if (acc > 0) return false;
  }
  return true;
}

std::vector<BlockDecomposition> block_decompositions(const OrderedPartition& P,
                                                     const std::vector<int>& centers,
                                                     const std::vector<Q>& lambda) {
  auto lam = scale(lambda);
  int k = static_cast<int>(centers.size());
  if (!k) throw std::invalid_argument("at least one center");
  for (int l = 0; l < k; ++l)
    if (centers[l] < 0 || centers[l] >= P.size() || (l && centers[l] <= centers[l - 1]))
      throw std::invalid_argument("centers must be increasing block indices");
  std::vector<BlockDecomposition> out;
  std::vector<int> cut(k + 1);
  cut[0] = 0;
  cut[k] = P.size();
  std::function<void(int)> rec = [&](int l) {
    if (l == k) {
      BlockDecomposition D;
      for (int q = 0; q < k; ++q) {
        std::vector<Mask> seg(P.blocks.begin() + cut[q], P.blocks.begin() + cut[q + 1]);
        if (!is_bloc(seg, centers[q] - cut[q], lam)) return;
        Mask s = 0;
        for (Mask b : seg) s |= b;
        D.positive.push_back(lam.s(s) > 0);
        D.blocks.push_back(std::move(seg));
      }
      out.push_back(std::move(D));
      return;
    }
    for (int c = centers[l - 1] + 1; c <= centers[l]; ++c) {
      cut[l] = c;
      rec(l + 1);
    }
  };
  rec(1);
  return out;
}

std::vector<int> positive_rotations(const OrderedPartition& P, const std::vector<Q>& lambda) {
  auto lam = scale(lambda);
  std::vector<int> out;
  int r = P.size();
  for (int s = 0; s < r; ++s) {
    OrderedPartition R;
    for (int i = 0; i < r; ++i) R.blocks.push_back(P.blocks[(s + i) % r]);
    if (is_positive(R, lam)) out.push_back(s);
  }
  return out;
}

BlockReport block_ops(const std::vector<Q>& lambda) {
  BlockReport rep;
  auto lam = scale(lambda);
  int n = lam.n();
  Mask I = full_mask(n);

  // (ii): every decomposition into blocs of every P in Par_ord(lambda)
  for_each_ordered_positive(singleton_atoms(I), lam, false, [&](const OrderedPartition& P) {
    int r = P.size();
    for (unsigned cuts = 0; cuts < (1u << (r - 1)); ++cuts) {
      std::vector<std::vector<Mask>> segs(1);
      for (int i = 0; i < r; ++i) {
        segs.back().push_back(P.blocks[i]);
        if (i < r - 1 && ((cuts >> i) & 1)) segs.emplace_back();
      }
      bool all_blocs = true;
      std::vector<bool> pos;
      std::vector<int> sizes;
      for (auto& s : segs) {
        bool b = false;
        for (int c = 0; c < static_cast<int>(s.size()) && !b; ++c) b = is_bloc(s, c, lam);
        all_blocs = all_blocs && b;
        Mask u = 0;
        for (Mask x : s) u |= x;
        pos.push_back(lam.s(u) > 0);
        sizes.push_back(popcount(u));
      }
      if (!all_blocs) continue;
      for (size_t l = 0; l + 1 < segs.size(); ++l) {
        if (pos[l] && !pos[l + 1]) continue;
        OrderedPartition P2;
        for (size_t q = 0; q < segs.size(); ++q) {
          size_t src = q == l ? l + 1 : q == l + 1 ? l : q;
          for (Mask x : segs[src]) P2.blocks.push_back(x);
        }
        ++rep.cases;
        if (!is_positive(P2, lam) || P2.size() != P.size() ||
            eps(P2) != sgn_pow(sizes[l] * sizes[l + 1]) * eps(P))
          rep.swap_ok = false;
      }
    }
  });

  Q total = 0;
  for (const auto& x : lambda) total += x;
  if (total <= 0 || N_of(lambda) != n) return rep;

  // (iii) and (iv)
  for_each_ordered_positive(singleton_atoms(I), lam, false, [&](const OrderedPartition& P) {
    int r = P.size();
    for (unsigned cm = 1; cm < (1u << r); ++cm) {
      std::vector<int> centers;
      for (int i = 0; i < r; ++i)
        if ((cm >> i) & 1) centers.push_back(i);
      auto ds = block_decompositions(P, centers, lambda);
      ++rep.cases;
      if (ds.size() != 1) {
        rep.unique_decomp = false;
        continue;
      }
      const auto& D = ds[0];
      if (!D.positive.front() || (D.blocks.size() >= 2 && D.positive.back())) rep.end_signs = false;
      // every block rotation Q_l..Q_k Q_1..Q_{l-1}: exactly one returns to Par_ord(lambda),
      // and from each of them the unique positive rotation is a block rotation
      std::vector<int> starts;
      int acc = 0;
      for (const auto& q : D.blocks) {
        starts.push_back(acc);
        acc += static_cast<int>(q.size());
      }
      for (int st : starts) {
        OrderedPartition Rot;
        for (int i = 0; i < r; ++i) Rot.blocks.push_back(P.blocks[(st + i) % r]);
        auto pr = positive_rotations(Rot, lambda);
        if (pr.size() != 1) {
          rep.unique_rotation = false;
          continue;
        }
        int back = (st + pr[0]) % r;
        if (std::find(starts.begin(), starts.end(), back) == starts.end()) rep.unique_rotation = false;
      }
    }
  });
  return rep;
}

Q gsp_pair_lhs(const std::vector<Q>& lambda, bool weak) {
  auto lam = scale(lambda);
  long long s = 0;
  for_each_ordered_positive(singleton_atoms(full_mask(lam.n())), lam, weak,
                            [&](const OrderedPartition& P) {
                              if (in_par_k(P, 0)) s += sgn_pow(P.size()) * eps(P) * eps_prime(P);
                            });
  return Q(static_cast<long>(s));
}

Q gsp_pair_rhs(const std::vector<Q>& lambda, bool weak) {
  auto lam = scale(lambda);
  long long s = 0;
  for_each_set_partition(singleton_atoms(full_mask(lam.n())), [&](const OrderedPartition& p) {
    if (in_par0_le2(p) && blocks_positive(p, lam, weak)) s += eps(p);
  });
  return Q(static_cast<long>(sgn_pow(lam.n()) * s));
}

Q eta_for(const std::vector<Q>& lambda) {
  Q L(denominator_lcm(lambda));
  return Q(1) / (Q(2) * L * Q(static_cast<long>(lambda.size() + 1)));
}

Q par_k_sum(const std::vector<Q>& lambda, int k) {
  auto lam = scale(lambda);
  long long s = 0;
  for_each_ordered_positive(singleton_atoms(full_mask(lam.n())), lam, false,
                            [&](const OrderedPartition& P) {
                              if (in_par_k(P, k)) s += sgn_pow(P.size()) * eps(P) * eps_prime(P);
                            });
  return Q(static_cast<long>(s));
}

bool ParityReport::ok() const {
  for (const auto* s : {&gsp_pair, &gsp_pair_weak, &gsp_pair_eta})
    if (*s && !(*s)->equal()) return false;
  if (sous_pair && *sous_pair != 0) return false;
  for (const auto& q : sous_impair)
    if (q != 0) return false;
  return true;
}

ParityReport check_parity_lemmas(const std::vector<Q>& lambda) {
  ParityReport rep;
  int n = static_cast<int>(lambda.size());
  rep.gsp_pair = Sides{gsp_pair_lhs(lambda, false), gsp_pair_rhs(lambda, false)};
  rep.gsp_pair_weak = Sides{gsp_pair_lhs(lambda, true), gsp_pair_rhs(lambda, true)};
  auto shifted = lambda;
  Q eta = eta_for(lambda);
  for (auto& x : shifted) x += eta;
  rep.gsp_pair_eta = Sides{gsp_pair_lhs(lambda, true), gsp_pair_lhs(shifted, false)};
  if (n < 3) {
    rep.skipped = "n < 3";
    return rep;
  }
  if (sum_of(lambda) <= 0) {
    rep.skipped = "sum <= 0";
    return rep;
  }
  if (N_of(lambda) != n) {
    rep.skipped = "N(lambda) < n";
    return rep;
  }
  rep.sous_pair = par_k_sum(lambda, 0);
  for (int k = 1; 2 * k <= n; ++k) rep.sous_impair.push_back(par_k_sum(lambda, k));
  return rep;
}

Q sous_sous_sum(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 3");
  long long s = 0;
  for_each_set_partition(singleton_atoms(full_mask(n)), [&](const OrderedPartition& p) {
    int odd = 0, odd_size = 0;
    for (Mask b : p.blocks) {
      int c = popcount(b);
      if (c % 2) {
        ++odd;
        odd_size = c;
      } else if (c != 2) {
        return;
      }
    }
    if (odd != 1) return;
    s += eps(p) * sgn_pow((odd_size - 1) / 2);
  });
  return Q(static_cast<long>(s));
}

bool eps_prime_constant_on_par_k(int n) {
  bool ok = true;
  int m = n / 2;
  for_each_set_partition(singleton_atoms(full_mask(n)), [&](const OrderedPartition& p) {
    int k = odd_block_count(p) / 2;
    if (eps_prime(p) != sgn_pow(m - k)) ok = false;
  });
  return ok;
}

std::vector<Q> y_mu(const Q& c_coeff, const std::vector<Q>& e_coeffs, int len) {
  int n = static_cast<int>(e_coeffs.size());
  if (len > n) throw std::invalid_argument("y_mu longer than the rank");
  auto pair = [&](int i) {
    // varpi_i has coefficient 0 on c^v
    const auto& w = varpi(n, i).coeffs;
    Q s = c_coeff * make_q(w[0]);
    for (int j = 1; j <= n; ++j) s += e_coeffs[j - 1] * make_q(w[j]);
    return s;
  };
  std::vector<Q> y;
  Q prev = 0;
  for (int i = 1; i <= len; ++i) {
    Q cur = pair(i);
    y.push_back(cur - prev);
    prev = cur;
  }
  return y;
}

Sides verify_prop331_core(int r, int t, const Q& c_coeff, const std::vector<Q>& e_coeffs, Mask Iplus) {
  if (r < 0 || t < 0 || static_cast<int>(e_coeffs.size()) < r + 2 * t)
    throw std::invalid_argument("rank too small for (r, t)");
  auto s = check_cor_A4(r, t, y_mu(c_coeff, e_coeffs, r + 2 * t), Iplus);
  // c(x, p(mu)) against (-1)^{r+t} times the signed sum
  Q sg = (r + t) % 2 ? -1 : 1;
  return {sg * s.rhs, sg * s.lhs};
}

Sides verify_prop331_core(int r, int t, const Weight& mu, Mask Iplus) {
  std::vector<Q> e;
  for (int i = 1; i <= mu.rank(); ++i) e.push_back(mu.coeff(i));
  return verify_prop331_core(r, t, mu.coeff_c(), e, Iplus);
}

}  // namespace gsp
