#include "gsp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gsp/appendix.hpp"
#include "gsp/ce_oracle.hpp"
#include "gsp/endoscopy.hpp"
#include "gsp/kostant.hpp"
#include "gsp/satake.hpp"

namespace gsp {

namespace {

using Verdict = std::optional<std::string>;  // nullopt = pass, otherwise the counterexample
using Rng = std::mt19937_64;

std::string vec_str(const std::vector<Q>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string mask_str(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if ((m >> i) & 1) {
      s += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

std::string sides_str(const Sides& s) { return "lhs=" + to_string(s.lhs) + " rhs=" + to_string(s.rhs); }

// entries k/2 with k in -3..3
std::vector<std::vector<Q>> tie_grid(int n) {
  std::vector<std::vector<Q>> out;
  std::vector<int> k(n, -3);
  while (true) {
    std::vector<Q> v;
    for (int x : k) v.push_back(make_q(x, 2));
    out.push_back(v);
    int i = 0;
    while (i < n && k[i] == 3) k[i++] = -3;
    if (i == n) break;
    ++k[i];
  }
  return out;
}

Q random_rational(Rng& rng) {
  long long num = static_cast<long long>(rng() % 13) - 6;
  long long den = static_cast<long long>(rng() % 3) + 1;
  return make_q(num, den);
}

std::vector<Q> random_rationals(Rng& rng, int n) {
  std::vector<Q> v;
  for (int i = 0; i < n; ++i) v.push_back(random_rational(rng));
  return v;
}

Q total(const std::vector<Q>& v) { return std::accumulate(v.begin(), v.end(), Q(0)); }

// deterministic map to a vector with positive sum
std::vector<Q> make_positive(std::vector<Q> v) {
  Q s = total(v);
  if (s < 0)
    for (auto& x : v) x = -x;
  else if (s == 0)
    v[0] += 1;
  return v;
}

std::uint64_t salt(const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : id) h = (h ^ c) * 1099511628211ULL;
  return h;
}

class Check {
 public:
  Check(std::vector<CheckRecord>& out, std::string id, std::string loc, std::uint64_t seed)
      : out_(out), rng(seed ^ salt(id)), start_(std::chrono::steady_clock::now()) {
    rec_.id = std::move(id);
    rec_.paper_location = std::move(loc);
  }
  ~Check() {
    rec_.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    out_.push_back(rec_);
  }
  void run(const std::function<Verdict()>& f) {
    ++rec_.cases_run;
    try {
      auto v = f();
      if (!v) {
        ++rec_.cases_passed;
        return;
      }
      if (!rec_.first_counterexample) rec_.first_counterexample = *v;
    } catch (const std::exception& e) {
      if (!rec_.first_counterexample) rec_.first_counterexample = std::string("error: ") + e.what();
    }
  }

 private:
  std::vector<CheckRecord>& out_;
  CheckRecord rec_;

 public:
  Rng rng;

 private:
  std::chrono::steady_clock::time_point start_;
};

Verdict expect(bool ok, const std::function<std::string()>& what) {
  if (ok) return std::nullopt;
  return what();
}

// ---------------- appendix ----------------

std::vector<SignSystem> all_sign_systems() {
  std::vector<SignSystem> s;
  for (int i = 1; i <= 4; ++i) s.push_back(sign_system(i));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) s.push_back(product(sign_system(i), sign_system(j)));
  return s;
}

// the exhaustive corpus for n <= min(4, n_max) followed by `samples` random vectors
// with n cycling through 1..n_max
template <class F>
void corpus(Check& c, const VerifyConfig& cfg, int min_n, F&& per) {
  for (int n = std::max(1, min_n); n <= std::min(4, cfg.n_max); ++n) {
    auto g = tie_grid(n);
    for (size_t i = 0; i < g.size(); ++i) per(g[i], i);
  }
  int span = cfg.n_max - std::max(1, min_n) + 1;
  if (span <= 0) return;
  for (long long k = 0; k < cfg.samples; ++k) {
    int n = std::max(1, min_n) + static_cast<int>(k % span);
    per(random_rationals(c.rng, n), static_cast<size_t>(c.rng() >> 1));
  }
}

void appendix_suite(const VerifyConfig& cfg, std::vector<CheckRecord>& out) {
  auto sys = all_sign_systems();
  {
    Check c(out, "appendix.prop_A1", "Prop. A.1", cfg.seed);
    corpus(c, cfg, 1, [&](const std::vector<Q>& lam, size_t i) {
      int n = static_cast<int>(lam.size());
      Mask full = full_mask(n);
      // deterministic sweep of system pairs and I+ over the corpus
      for (size_t j = 0; j < sys.size(); ++j) {
        const auto& C = sys[j];
        const auto& D = sys[(j + i) % sys.size()];
        Mask Ip = static_cast<Mask>((i + j * 7) & full);
        c.run([&] {
          auto s = check_prop_A1(C, D, lam, Ip);
          return expect(s.equal(), [&] {
            return C.name + "/" + D.name + " lambda=" + vec_str(lam) + " I+=" + mask_str(Ip) + " " + sides_str(s);
          });
        });
      }
    });
  }
  {
    Check c(out, "appendix.sign_systems", "Prop. A.1 sign systems", cfg.seed);
    auto all = sys;
    all.push_back(split_system(sign_system(3), sign_system(4), 0b00101, 0b11010));
    all.push_back(split_system(sign_system(2), sign_system(4), 0b01100, 0b10011));
    for (const auto& s : all)
      for (int k = 1; k <= std::min(5, std::max(1, cfg.n_max)); ++k)
        c.run([&] { return expect(validate_multiplicativity(s, full_mask(k)), [&] { return s.name + " on {1.." + std::to_string(k) + "}"; }); });
  }
  {
    Check c(out, "appendix.cor_A2", "Cor. A.2", cfg.seed);
    corpus(c, cfg, 1, [&](const std::vector<Q>& lam, size_t) {
      c.run([&] {
        Q a = cor_A2_sum(lam), b = cor_A2_closed_form(lam);
        return expect(a == b, [&] { return "lambda=" + vec_str(lam) + " lhs=" + to_string(a) + " rhs=" + to_string(b); });
      });
    });
  }
  {
    Check c(out, "appendix.prop_A3", "Prop. A.3", cfg.seed);
    corpus(c, cfg, 1, [&](const std::vector<Q>& lam, size_t) {
      c.run([&] {
        auto s = check_prop_A3(lam);
        return expect(s.equal(), [&] { return "lambda=" + vec_str(lam) + " " + sides_str(s); });
      });
    });
  }
  {
    Check c(out, "appendix.cor_A4", "Cor. A.4", cfg.seed);
    auto one = [&](int n, int m, const std::vector<Q>& lam, Mask Ip) {
      c.run([&] {
        auto s = check_cor_A4(n, m, lam, Ip);
        return expect(s.equal(), [&] {
          return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " lambda=" + vec_str(lam) + " I+=" +
                 mask_str(Ip) + " " + sides_str(s);
        });
      });
    };
    int lim = std::min(4, cfg.n_max);
    for (int m = 0; 2 * m <= lim; ++m)
      for (int n = 0; n + 2 * m <= lim; ++n) {
        if (n + 2 * m == 0) continue;
        for (const auto& lam : tie_grid(n + 2 * m))
          for (Mask Ip = 0; Ip < (Mask(1) << n); ++Ip) one(n, m, lam, Ip);
      }
    std::vector<std::pair<int, int>> shapes;
    for (int m = 0; 2 * m <= cfg.n_max + 1; ++m)
      for (int n = 0; n + 2 * m <= cfg.n_max + 1; ++n)
        if (n + 2 * m > 0) shapes.push_back({n, m});
    for (long long k = 0; k < cfg.samples; ++k) {
      auto [n, m] = shapes[k % shapes.size()];
      auto lam = random_rationals(c.rng, n + 2 * m);
      one(n, m, lam, static_cast<Mask>(c.rng() & full_mask(n)));
    }
  }
  {
    Check c(out, "appendix.parity_lemmas", "Lemmas LCI_GSp_pair, sous_LCI_GSp_pair, sous_LCI_GSp_impair", cfg.seed);
    corpus(c, cfg, 1, [&](const std::vector<Q>& lam, size_t) {
      c.run([&] {
        auto p = check_parity_lemmas(lam);
        return expect(p.ok(), [&] { return "lambda=" + vec_str(lam); });
      });
    });
  }
  {
    Check c(out, "appendix.sous_sous", "Lemma sous_sous_LCI_GSp_impair", cfg.seed);
    for (int n = 3; n <= std::max(3, cfg.n_max + 1); n += 2)
      c.run([&] {
        Q s = sous_sous_sum(n);
        return expect(s == 0, [&] { return "n=" + std::to_string(n) + " sum=" + to_string(s); });
      });
  }
  {
    Check c(out, "appendix.eps_prime_constant", "eps' on Par^k(n)", cfg.seed);
    for (int n = 1; n <= 8; ++n)
      c.run([&] { return expect(eps_prime_constant_on_par_k(n), [&] { return "n=" + std::to_string(n); }); });
  }
  {
    Check c(out, "appendix.rotation_lemma", "Lemmas LCI_de_base, LCI_de_base2 and remark", cfg.seed);
    corpus(c, cfg, 1, [&](const std::vector<Q>& raw, size_t) {
      auto lam = make_positive(raw);
      long long fact = 1;
      for (size_t i = 2; i < lam.size(); ++i) fact *= static_cast<long long>(i);
      c.run([&] {
        auto r = rotation_lemma(lam);
        bool ok = r.rotation_positive && r.remark_conditions;
        if (!has_positive_bipartition(lam)) ok = ok && r.count == fact && r.unique_mod_n;
        return expect(ok, [&] { return "lambda=" + vec_str(lam) + " k=" + std::to_string(r.k) + " count=" + std::to_string(r.count); });
      });
    });
  }
  {
    Check c(out, "appendix.delta_reduction", "Lemma delta reduction (i)-(iv)", cfg.seed);
    corpus(c, cfg, 1, [&](const std::vector<Q>& raw, size_t) {
      auto lam = make_positive(raw);
      c.run([&]() -> Verdict {
        int n = static_cast<int>(lam.size());
        Q d = *delta(lam);
        int N = N_of(lam);
        for (Mask J = 1; J < (Mask(1) << n); ++J) {
          if (popcount(J) != N) continue;
          Q s = 0;
          for (int i : elements(J)) s += lam[i];
          if (s != d * N) continue;
          auto r = delta_reduction(lam, J);
          if (!r.all()) return "lambda=" + vec_str(lam) + " J=" + mask_str(J);
        }
        return std::nullopt;
      });
    });
  }
  {
    Check c(out, "appendix.block_ops", "Lemma blocks (ii)-(iv)", cfg.seed);
    corpus(c, cfg, 1, [&](const std::vector<Q>& raw, size_t) {
      auto lam = make_positive(raw);
      c.run([&] {
        auto b = block_ops(lam);
        return expect(b.swap_ok && b.unique_decomp && b.end_signs && b.unique_rotation,
                      [&] { return "lambda=" + vec_str(lam); });
      });
    });
  }
  {
    Check c(out, "appendix.prop331_core", "Prop. 3.3.1 proof, reduction to Cor. A.4", cfg.seed);
    int lim = std::min(5, cfg.n_max);
    auto one = [&](int r, int t, const Q& cc, const std::vector<Q>& e, Mask Ip) {
      c.run([&] {
        auto s = verify_prop331_core(r, t, cc, e, Ip);
        return expect(s.equal(), [&] {
          return "r=" + std::to_string(r) + " t=" + std::to_string(t) + " mu_e=" + vec_str(e) + " I+=" + mask_str(Ip) +
                 " " + sides_str(s);
        });
      });
    };
    for (int t = 0; 2 * t <= lim; ++t)
      for (int r = 0; r + 2 * t <= lim; ++r) {
        int len = r + 2 * t;
        auto g = tie_grid(len);
        for (size_t i = 0; i < g.size(); ++i) {
          // mu on GSp_{2(len+1)}: the grid point, one more coordinate and a c-part
          auto e = g[i];
          e.push_back(make_q(static_cast<long long>(i % 5) - 2, 2));
          Q cc = make_q(static_cast<long long>(i % 3) - 1, 2);
          Mask full = full_mask(r);
          Mask Ip = static_cast<Mask>(i) & full;
          one(r, t, cc, e, Ip);
          if (r > 0) one(r, t, cc, e, full & ~Ip);
        }
        for (long long k = 0; k < cfg.samples; ++k) {
          auto e = random_rationals(c.rng, len + 1);
          Q cc = random_rational(c.rng);
          one(r, t, cc, e, static_cast<Mask>(c.rng() & full_mask(r)));
        }
      }
  }
}

// ---------------- endoscopy ----------------

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// |N_W(M) / W_M| by brute force on the root system of the standard Levi
long long brute_n_M_G(const LeviDatum& M) {
  int n = M.n();
  std::set<Weight> phi;
  for (const auto& a : roots(n)) {
    auto t = a.tilde();
    std::vector<int> sup;
    for (int i = 0; i < n; ++i)
      if (t[i] != 0) sup.push_back(i);
    bool in = sup.front() >= M.r + 2 * M.t;
    if (sup.size() == 2 && sup[0] < M.r + 2 * M.t && sup[0] >= M.r && (sup[0] - M.r) % 2 == 0 &&
        sup[1] == sup[0] + 1 && t[sup[0]] == -t[sup[1]])
      in = true;
    if (in) phi.insert(a);
  }
  long long stab = 0;
  for_each_weyl(n, [&](const SignedPermutation& w) {
    for (const auto& a : phi)
      if (!phi.count(act(w, a))) return;
    ++stab;
  });
  long long wm = (1LL << M.t) * (1LL << M.m) * factorial(M.m);
  return stab / wm;
}

void endoscopy_suite(const VerifyConfig& cfg, std::vector<CheckRecord>& out) {
  int nmax = std::max(1, cfg.n_max);
  {
    Check c(out, "endoscopy.constants.tau", "§2.1 Lemma (ii)", cfg.seed);
    for (int n = 1; n <= nmax; ++n)
      for (const auto& d : elliptic_data(n))
        c.run([&] {
          int v = tamagawa(d);
          return expect(v == (d.n2 == 0 ? 1 : 2), [&] { return d.label() + " tau=" + std::to_string(v); });
        });
    c.run([&]() -> Verdict {
      try {
        tamagawa(2, 1);
      } catch (const std::invalid_argument&) {
        return std::nullopt;
      }
      return "n2 = 1 accepted";
    });
  }
  {
    Check c(out, "endoscopy.constants.k_table", "§5.1 Lemma", cfg.seed);
    for (int n = 0; n <= nmax; ++n)
      for (int n2 = 0; n2 <= n; n2 += 2)
        c.run([&] {
          long long v = k_constant(n - n2, n2);
          long long e = n == 0 ? 1 : (n2 == 0 ? 1LL << (n - 1) : 1LL << (n - 2));
          return expect(v == e, [&] {
            return "n1=" + std::to_string(n - n2) + " n2=" + std::to_string(n2) + " k=" + std::to_string(v);
          });
        });
  }
  {
    Check c(out, "endoscopy.constants.iota", "§6", cfg.seed);
    std::vector<std::pair<int, EndoscopicDatum>> pinned{{2, {0, 2}}, {3, {1, 2}}};
    for (const auto& [n, d] : pinned)
      c.run([&] {
        Q v = iota(n, d);
        return expect(v == make_q(1, 4), [&] { return d.label() + " iota=" + to_string(v); });
      });
    for (int n = 1; n <= nmax; ++n)
      c.run([&] {
        Q v = iota(n, {n, 0});
        return expect(v == 1, [&] { return "H=G n=" + std::to_string(n) + " iota=" + to_string(v); });
      });
  }
  {
    Check c(out, "endoscopy.constants.n_M_G", "§2.2, n_M^G = 2^r r! 2^t t!", cfg.seed);
    for (int n = 1; n <= std::min(nmax, 5); ++n)
      for (const auto& M : cuspidal_levis(n))
        c.run([&] {
          long long b = brute_n_M_G(M), f = (1LL << (M.r + M.t)) * factorial(M.r) * factorial(M.t);
          return expect(b == f && n_M_G(M) == f, [&] {
            return M.label() + " brute=" + std::to_string(b) + " formula=" + std::to_string(f);
          });
        });
  }
  {
    Check c(out, "endoscopy.constants.n_Mp_H", "§2.2, n_{M'}^H", cfg.seed);
    for (int n = 1; n <= nmax; ++n)
      for (const auto& M : cuspidal_levis(n))
        for (const auto& g : g_triples(M))
          c.run([&] {
            long long f = (1LL << (M.r + M.t)) * factorial(g.r1()) * factorial(g.t1()) * factorial(g.r2()) *
                          factorial(g.t2());
            return expect(g.n_Mp_H() == f, [&] { return g.M_prime_label() + " value=" + std::to_string(g.n_Mp_H()); });
          });
  }
  {
    Check c(out, "endoscopy.constants.d_G", "§3.1, d(G) = 2^{n-1}", cfg.seed);
    for (int n = 1; n <= std::min(nmax, 6); ++n)
      c.run([&] {
        long long v = d_G(n);
        return expect(v == (1LL << (n - 1)), [&] { return "n=" + std::to_string(n) + " d=" + std::to_string(v); });
      });
  }
  {
    // asserted literally; the pairing is n(n+1)/4 and n(n+1)/2 is <2 rho, mu>
    Check c(out, "endoscopy.constants.rho_mu", "<rho, mu> = n(n+1)/2", cfg.seed);
    for (int n = 1; n <= 6; ++n)
      c.run([&] {
        Q v = pairing(rho(n), mu_cocharacter(n));
        return expect(v == make_q(n * (n + 1), 2), [&] {
          return "n=" + std::to_string(n) + " <rho,mu>=" + to_string(v) + " expected " + to_string(make_q(n * (n + 1), 2));
        });
      });
  }
  {
    Check c(out, "endoscopy.enumeration", "§2.1 elliptic data, cuspidal Levis", cfg.seed);
    for (int n = 1; n <= nmax; ++n)
      c.run([&] {
        size_t e = elliptic_data(n).size(), l = cuspidal_levis(n).size();
        size_t le = 0;
        for (int t = 0; 2 * t <= n; ++t) le += n - 2 * t + 1;
        size_t ee = n >= 2 ? static_cast<size_t>(n) : 1;
        return expect(e == ee && l == le, [&] {
          return "n=" + std::to_string(n) + " elliptic=" + std::to_string(e) + " levis=" + std::to_string(l);
        });
      });
  }
  {
    Check c(out, "endoscopy.k_tau_identity", "§5.1 Lemma, k/tau identity", cfg.seed);
    for (int n = 1; n <= nmax; ++n)
      for (const auto& M : cuspidal_levis(n))
        for (const auto& g : g_triples(M, {true, true, true}))
          c.run([&] { return expect(k_tau_identity(M, g), [&] { return g.M_prime_label() + " in " + M.label(); }); });
  }
  {
    Check c(out, "endoscopy.double_counting", "§2.2 Lemma", cfg.seed);
    for (int n = 2; n <= std::min(4, nmax); ++n)
      for (int trial = 0; trial < 50; ++trial) {
        std::map<std::pair<std::string, LeviKey>, Q> memo;
        LeviFunction phi = [&](const EndoscopicDatum& H, const LeviKey& k) {
          auto key = std::make_pair(H.label(), k);
          auto it = memo.find(key);
          if (it != memo.end()) return it->second;
          Q v = random_rational(c.rng);
          memo.emplace(key, v);
          return v;
        };
        c.run([&] {
          auto s = double_counting_check(n, phi);
          return expect(s.equal(), [&] { return "n=" + std::to_string(n) + " trial=" + std::to_string(trial) + " " + sides_str(s); });
        });
      }
  }
}

// ---------------- satake ----------------

Laurent expand_transfer(int n, int a, const std::vector<int>& K) {
  Laurent f(n);
  for (unsigned I = 0; I < (1u << n); ++I) {
    std::vector<long long> e(n, 0);
    int sign = 1;
    for (int i = 0; i < n; ++i)
      if ((I >> i) & 1) {
        e[i] = a;
        if (std::find(K.begin(), K.end(), i + 1) != K.end()) sign = -sign;
      }
    f += Laurent::monomial(n, Q(sign), -a, e, static_cast<long long>(a) * n * (n + 1) / 2);
  }
  return f;
}

std::vector<int> mask_to_list(unsigned K, int n) {
  std::vector<int> k;
  for (int i = 0; i < n; ++i)
    if ((K >> i) & 1) k.push_back(i + 1);
  return k;
}

void satake_suite(const VerifyConfig& cfg, std::vector<CheckRecord>& out) {
  int lim = std::min(4, std::max(1, cfg.n_max));
  std::vector<std::pair<SatakeFamily, FactorizationReport>> fams;
  {
    for (int n = 1; n <= lim; ++n)
      for (const auto& L : cuspidal_levis(n))
        for (const auto& g : g_triples(L))
          for (int a = 1; a <= 2; ++a) {
            auto F = build_family(L, g, a);
            auto r = verify_factorizations(F);
            fams.emplace_back(std::move(F), r);
          }
  }
  auto fam_str = [](const SatakeFamily& F) {
    std::string s = "M=" + F.M.label() + " M'=" + F.g.M_prime_label() + " A=";
    for (int x : F.g.A) s += std::to_string(x);
    s += " B=";
    for (int x : F.g.B) s += std::to_string(x);
    return s + " a=" + std::to_string(F.a);
  };
  auto fact_check = [&](const std::string& id, const std::string& loc, bool FactorizationReport::*field) {
    Check c(out, id, loc, cfg.seed);
    for (const auto& [F, r] : fams) c.run([&] { return expect(r.*field, [&] { return fam_str(F); }); });
  };
  fact_check("satake.f_H_M_H", "§4 factorization of f^H_{M_H}", &FactorizationReport::f_H_M_H);
  fact_check("satake.f_M_prime", "§4 factorization of f^{M'}", &FactorizationReport::f_M_prime);
  fact_check("satake.psi_M_prime", "§4 factorization of psi^{M'}", &FactorizationReport::psi_M_prime);
  {
    Check c(out, "satake.transfer_expansion", "§4 transfer formula", cfg.seed);
    for (int n = 0; n <= lim; ++n)
      for (int a = 1; a <= 2; ++a)
        for (unsigned K = 0; K < (1u << n); ++K)
          c.run([&] {
            auto k = mask_to_list(K, n);
            return expect(satake_transfer(n, a, k) == expand_transfer(n, a, k), [&] {
              return "n=" + std::to_string(n) + " a=" + std::to_string(a) + " K=" + mask_str(K);
            });
          });
  }
  {
    Check c(out, "satake.weyl_invariance", "§4 Weyl invariance", cfg.seed);
    for (int n = 1; n <= lim; ++n)
      for (int a = 1; a <= 2; ++a) {
        auto f = satake_phi(n, a);
        c.run([&]() -> Verdict {
          std::optional<std::string> bad;
          for_each_weyl(n, [&](const SignedPermutation& w) {
            if (!bad && !(weyl_act_poly(w, f) == f)) bad = "phi n=" + std::to_string(n) + " w=" + w.str();
          });
          return bad;
        });
        for (unsigned K = 1; K < (1u << n); ++K) {
          auto k = mask_to_list(K, n);
          if (k.size() == 1) continue;
          auto t = satake_transfer(n, a, k);
          c.run([&]() -> Verdict {
            for (const auto& w : endoscopic_weyl_group(n, k))
              if (!(weyl_act_poly(w, t) == t))
                return "transfer n=" + std::to_string(n) + " K=" + mask_str(K) + " w=" + w.str();
            return std::nullopt;
          });
        }
      }
  }
}

// ---------------- kostant ----------------

std::vector<Q> random_torus(Rng& rng, int n) {
  auto nz = [&] {
    Q q = 0;
    while (q == 0) q = random_rational(rng);
    return q;
  };
  Q nu = nz();
  std::vector<Q> t;
  for (int i = 0; i < n; ++i) t.push_back(nz());
  std::vector<Q> g = t;
  for (int i = n - 1; i >= 0; --i) g.push_back(nu / t[i]);
  return g;
}

bool regular(const std::vector<Q>& g, int n) {
  for (const auto& a : positive_roots(n))
    if (evaluate_character(a, g) == 1) return false;
  return true;
}

void kostant_suite(const VerifyConfig& cfg, std::vector<CheckRecord>& out) {
  int lim = std::min(2, std::max(1, cfg.n_max));
  // dominant integral weights with dim <= 200; the c-part cycles to vary the central character
  std::vector<Weight> lambdas;
  for (int n = 1; n <= lim; ++n) {
    int idx = 0;
    for (long long a = 0; a < 200; ++a)
      for (long long b = 0; b <= (n == 2 ? a : 0); ++b) {
        std::vector<Q> t{Q(static_cast<long>(a))};
        if (n == 2) t.push_back(Q(static_cast<long>(b)));
        Q z = make_q(a + b, 2) + (idx++ % 3 - 1);
        Weight w = Weight::from_tilde(z, t);
        if (weyl_dimension(positive_roots(n), w) <= 200) lambdas.push_back(w);
      }
  }
  {
    Check ce(out, "kostant.ce_oracle", "§3.3 proof, Kostant's theorem", cfg.seed);
    std::vector<std::tuple<ParabolicIndex, Weight, long long>> euler;
    for (const auto& lam : lambdas)
      for (const auto& S : all_parabolics(lam.rank())) {
        ce.run([&]() -> Verdict {
          auto o = chevalley_eilenberg_oracle(S, lam);
          auto pieces = kostant_cohomology(S, lam);
          auto k = graded_weights(pieces, static_cast<int>(o.size()) - 1);
          long long chi = 0;
          for (size_t i = 0; i < o.size(); ++i) chi += (i % 2 ? -1 : 1) * o[i].dim();
          euler.emplace_back(S, lam, chi);
          for (size_t i = 0; i < o.size(); ++i)
            if (o[i].weights != k[i])
              return "S=" + S.str() + " lambda=" + lam.str() + " degree " + std::to_string(i);
          return std::nullopt;
        });
      }
    Check eu(out, "kostant.euler_characteristic", "Euler characteristic of the nilradical complex", cfg.seed);
    for (const auto& [S, lam, chi] : euler) {
      if (S.nilradical_roots().empty()) continue;
      eu.run([&, chi = chi] {
        return expect(chi == 0, [&] { return "S=" + S.str() + " lambda=" + lam.str() + " chi=" + std::to_string(chi); });
      });
    }
  }
  {
    Check c(out, "kostant.piece_count", "|Omega'_Q| = |Omega| / |Omega_{M_Q}|", cfg.seed);
    for (int n = 1; n <= std::min(4, std::max(1, cfg.n_max)); ++n) {
      long long W = 1;
      for (int i = 1; i <= n; ++i) W *= 2 * i;
      for (const auto& S : all_parabolics(n))
        c.run([&] {
          auto p = kostant_cohomology(S, Weight::zero(n));
          long long alt = 0;
          for (const auto& x : p) alt += (x.degree % 2 ? -1 : 1) * x.dimension;
          bool ok = static_cast<long long>(p.size()) * S.levi_weyl_order() == W &&
                    (S.nilradical_roots().empty() || alt == 0);
          return expect(ok, [&] { return "S=" + S.str(); });
        });
    }
  }
  {
    Check c(out, "kostant.character", "§3.1 Weyl character formula", cfg.seed);
    int cn = std::min(3, std::max(1, cfg.n_max));
    for (long long k = 0; k < cfg.samples; ++k) {
      int n = 1 + static_cast<int>(k % cn);
      std::vector<Q> t;
      long long prev = 2 + static_cast<long long>(c.rng() % 2);
      for (int i = 0; i < n; ++i) {
        prev = static_cast<long long>(c.rng() % (prev + 1));
        t.push_back(Q(static_cast<long>(prev)));
      }
      std::sort(t.rbegin(), t.rend());
      Q z = 0;
      for (auto& x : t) z += x;
      z = z / 2 + make_q(static_cast<long long>(c.rng() % 3) - 1);
      Weight lam = Weight::from_tilde(z, t);
      auto g = random_torus(c.rng, n);
      while (!regular(g, n)) g = random_torus(c.rng, n);
      c.run([&] {
        Q a = weyl_character_trace(lam, g), b = weyl_character_trace_borels(lam, g), m = character_by_multiplicities(lam, g);
        return expect(a == b && a == m, [&] {
          return "lambda=" + lam.str() + " gamma=" + vec_str(g) + " omega=" + to_string(a) + " borel=" + to_string(b) +
                 " mult=" + to_string(m);
        });
      });
    }
  }
  {
    Check c(out, "kostant.truncation", "§3.3 proof, truncation", cfg.seed);
    for (int n = 1; n <= std::min(3, std::max(1, cfg.n_max)); ++n)
      for (const auto& S : all_parabolics(n)) {
        Weight lam = Weight::e(n, 1) * 2 + Weight::c(n);
        c.run([&] {
          auto pieces = kostant_cohomology(S, lam);
          auto up = truncate(pieces, central_character(lam), S, Direction::above);
          auto dn = truncate(pieces, central_character(lam), S, Direction::below);
          bool ok = true;
          for (size_t i = 0; i < pieces.size(); ++i) {
            if (S.S.empty()) {
              ok = ok && up[i].kept_by_truncation && dn[i].kept_by_truncation;
              continue;
            }
            ok = ok && !(up[i].kept_by_truncation && dn[i].kept_by_truncation);
            Q v = pairing(pieces[i].kostant_weight + rho(n), varpi(n, S.S[0]));
            if (S.S.size() == 1 && v != 0) ok = ok && up[i].kept_by_truncation != dn[i].kept_by_truncation;
          }
          return expect(ok, [&] { return "S=" + S.str(); });
        });
      }
  }
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.passed(); });
}

const CheckRecord* Report::find(const std::string& id) const {
  for (const auto& r : records)
    if (r.id == id) return &r;
  return nullptr;
}

bool valid_suite(const std::string& s) {
  return s == "appendix" || s == "endoscopy" || s == "satake" || s == "kostant" || s == "all";
}

Report run_verify(const VerifyConfig& cfg) {
  if (!valid_suite(cfg.suite)) throw std::invalid_argument("unknown suite " + cfg.suite);
  if (cfg.n_max < 1 || cfg.n_max > 7) throw std::invalid_argument("n-max must be in 1..7");
  if (cfg.samples < 0) throw std::invalid_argument("samples must be nonnegative");
  Report r;
  r.config = cfg;
  bool all = cfg.suite == "all";
  if (all || cfg.suite == "appendix") appendix_suite(cfg, r.records);
  if (all || cfg.suite == "endoscopy") endoscopy_suite(cfg, r.records);
  if (all || cfg.suite == "satake") satake_suite(cfg, r.records);
  if (all || cfg.suite == "kostant") kostant_suite(cfg, r.records);
  std::sort(r.records.begin(), r.records.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return r;
}

std::string report_json(const Report& r, bool with_time) {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["config"] = {{"suite", r.config.suite},
                 {"n_max", r.config.n_max},
                 {"samples", r.config.samples},
                 {"seed", r.config.seed}};
  auto recs = nlohmann::ordered_json::array();
  for (const auto& c : r.records) {
    nlohmann::ordered_json x;
    x["id"] = c.id;
    x["paper_location"] = c.paper_location;
    x["cases_run"] = c.cases_run;
    x["cases_passed"] = c.cases_passed;
    x["first_counterexample"] = c.first_counterexample ? nlohmann::ordered_json(*c.first_counterexample) : nullptr;
    if (with_time) {
      std::ostringstream os;
      os << std::fixed << std::setprecision(3) << c.wall_time;
      x["wall_time"] = std::stod(os.str());
    }
    recs.push_back(x);
  }
  j["records"] = recs;
  j["all_pass"] = r.all_pass();
  return j.dump(2) + "\n";
}

std::string report_table(const Report& r, bool color) {
  size_t w = 2;
  for (const auto& c : r.records) w = std::max(w, c.id.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w)) << "id" << "  " << std::right << std::setw(9) << "run"
     << std::setw(9) << "passed" << "  status  " << std::setw(8) << "time" << "\n";
  for (const auto& c : r.records) {
    bool ok = c.passed();
    std::string st = ok ? "PASS" : "FAIL";
    if (color) st = (ok ? "\x1b[32m" : "\x1b[31m") + st + "\x1b[0m";
    os << std::left << std::setw(static_cast<int>(w)) << c.id << "  " << std::right << std::setw(9) << c.cases_run
       << std::setw(9) << c.cases_passed << "  " << st << "    " << std::setw(7) << std::fixed
       << std::setprecision(2) << c.wall_time << "s\n";
    if (c.first_counterexample) os << "    counterexample: " << *c.first_counterexample << "\n";
  }
  os << (r.all_pass() ? "all checks passed" : "some checks failed") << "\n";
  return os.str();
}

}  // namespace gsp
