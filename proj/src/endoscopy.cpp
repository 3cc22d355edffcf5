#include "gsp/endoscopy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gsp/root_data.hpp"

namespace gsp {

namespace {

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::string sp_so(int a, int b) {
  if (b == 0) return "GSp_" + std::to_string(2 * a);
  if (a == 0) return "GSO_" + std::to_string(2 * b);
  return "G(Sp_" + std::to_string(2 * a) + "xSO_" + std::to_string(2 * b) + ")";
}

std::string levi_prefix(int r, int t) {
  std::string s;
  if (r) s += "G_m^" + std::to_string(r) + "x";
  if (t) s += "GL_2^" + std::to_string(t) + "x";
  return s;
}

}  // namespace

std::string EndoscopicDatum::label() const { return sp_so(n1, n2); }

std::vector<EndoscopicDatum> elliptic_data(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<EndoscopicDatum> out;
  for (int n1 = n; n1 >= 0; --n1)
    if (n1 != n - 1) out.push_back({n1, n - n1});
  return out;
}

int tamagawa(int n1, int n2) {
  if (n1 < 0 || n2 < 0 || n2 == 1) throw std::invalid_argument("not an elliptic datum");
  return n2 == 0 ? 1 : 2;
}

int tamagawa(const EndoscopicDatum& d) { return tamagawa(d.n1, d.n2); }

long long k_constant(int n1, int n2) {
  if (n1 < 0 || n2 < 0 || n2 % 2) throw std::invalid_argument("k needs n2 even");
  int n = n1 + n2;
  if (n == 0) return 1;
  return n2 == 0 ? 1LL << (n - 1) : 1LL << (n - 2);
}

Q iota(int n, const EndoscopicDatum& d) {
  if (d.n() != n) throw std::invalid_argument("datum rank mismatch");
  return Q(tamagawa(n, 0)) / Q(tamagawa(d) * d.lambda_order());
}

long long d_G(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  long long all = 0, real = 0;
  for_each_weyl(n, [&](const SignedPermutation& w) {
    ++all;
    if (std::all_of(w.signs.begin(), w.signs.end(), [&](int s) { return s == w.signs[0]; })) ++real;
  });
  return all / real;
}

std::string LeviDatum::label() const { return levi_prefix(r, t) + sp_so(m, 0); }

std::vector<LeviDatum> cuspidal_levis(int n) {
  std::vector<LeviDatum> out;
  for (int t = 0; 2 * t <= n; ++t)
    for (int r = 0; r + 2 * t <= n; ++r) out.push_back({r, t, n - r - 2 * t});
  std::sort(out.begin(), out.end(), [](const LeviDatum& a, const LeviDatum& b) {
    return std::tie(a.r, a.t, a.m) < std::tie(b.r, b.t, b.m);
  });
  return out;
}

long long n_M_G(const LeviDatum& M) {
  return (1LL << (M.r + M.t)) * factorial(M.r) * factorial(M.t);
}

long long k_levi(const LeviDatum& M) { return k_constant(M.m, 0); }
int tau_levi(const LeviDatum& M) { return tamagawa(M.m, 0); }

std::string LeviKey::str() const {
  std::ostringstream os;
  os << "(" << r1 << "," << t1 << "," << m1 << "," << r2 << "," << t2 << "," << m2 << ")";
  return os.str();
}

std::string GTriple::M_prime_label() const { return levi_prefix(M.r, M.t) + sp_so(m1, m2); }

long long GTriple::n_Mp_H() const {
  return (1LL << (M.r + M.t)) * factorial(r1()) * factorial(t1()) * factorial(r2()) * factorial(t2());
}

int GTriple::lambda_order_paper() const {
  bool is_G = M.r == 0 && M.t == 0;
  return is_G ? H().lambda_order() : 1;
}

int GTriple::lambda_order_corrected() const { return m2 >= 2 ? 2 : 1; }

std::vector<GTriple> g_triples(const LeviDatum& M, const TripleFilters& f) {
  std::vector<GTriple> out;
  for (unsigned a = 0; a < (1u << M.r); ++a)
    for (unsigned b = 0; b < (1u << M.t); ++b)
      for (int m2 = 0; m2 <= M.m; ++m2) {
        if (m2 == 1) continue;
        GTriple g;
        g.M = M;
        for (int i = 0; i < M.r; ++i)
          if ((a >> i) & 1) g.A.push_back(i + 1);
        for (int i = 0; i < M.t; ++i)
          if ((b >> i) & 1) g.B.push_back(i + 1);
        g.m1 = M.m - m2;
        g.m2 = m2;
        if (f.require_n2_ne_1 && g.n2() == 1) continue;
        if (f.cuspidal_only && !g.cuspidal()) continue;
        if (f.ell0_only && !g.ell0()) continue;
        out.push_back(std::move(g));
      }
  return out;
}

long long k_M_prime(const GTriple& g) { return k_constant(g.m1, g.m2); }
int tau_M_prime(const GTriple& g) { return tamagawa(g.m1, g.m2); }

bool k_tau_identity(const LeviDatum& M, const GTriple& g) {
  if (!(g.M == M)) throw std::invalid_argument("triple belongs to another Levi");
  if (!g.cuspidal() || g.n2() % 2) throw std::invalid_argument("k/tau identity needs cuspidal M', H");
  auto H = g.H();
  int n = M.n();
  Q lhs = Q(tamagawa(n, 0)) / Q(tamagawa(H)) * Q(tau_M_prime(g)) / Q(tau_levi(M));
  Q rhs = Q(static_cast<long>(k_constant(H.n1, H.n2))) / Q(static_cast<long>(k_constant(n, 0))) *
          Q(static_cast<long>(k_levi(M))) / Q(static_cast<long>(k_M_prime(g)));
  return lhs == rhs;
}

// ---- brute force on C_{n1} x D_{n2} ----

namespace {

using Vec = std::vector<int>;

struct SignedPerm {
  std::vector<int> perm, sign;
  Vec apply(const Vec& v) const {
    Vec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[perm[i]] = sign[i] * v[i];
    return w;
  }
};

std::vector<SignedPerm> signed_perms(int k, bool even_only) {
  std::vector<SignedPerm> out;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    for (unsigned s = 0; s < (1u << k); ++s) {
      if (even_only && __builtin_popcount(s) % 2) continue;
      SignedPerm w;
      w.perm = p;
      for (int i = 0; i < k; ++i) w.sign.push_back((s >> i) & 1 ? -1 : 1);
      out.push_back(w);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int rank_of(std::vector<std::vector<Q>> m) {
  int rank = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (size_t r = 0; r < m.size(); ++r)
      if (r != static_cast<size_t>(rank) && m[r][c] != 0) {
        Q f = m[r][c] / m[rank][c];
        for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
      }
    ++rank;
  }
  return rank;
}

struct HRootSystem {
  int n1, n2, n;
  std::vector<Vec> roots;  // sorted
  std::vector<Vec> simple;
  std::vector<SignedPerm> W;  // acting on all n coordinates

  HRootSystem(int a, int b) : n1(a), n2(b), n(a + b) {
    auto add_pairs = [&](int lo, int hi) {
      for (int i = lo; i < hi; ++i)
        for (int j = i + 1; j < hi; ++j)
          for (int si : {-1, 1})
            for (int sj : {-1, 1}) {
              Vec v(n, 0);
              v[i] = si;
              v[j] = sj;
              roots.push_back(v);
            }
    };
    add_pairs(0, n1);
    for (int i = 0; i < n1; ++i)
      for (int s : {-2, 2}) {
        Vec v(n, 0);
        v[i] = s;
        roots.push_back(v);
      }
    add_pairs(n1, n);
    std::sort(roots.begin(), roots.end());

    for (int i = 0; i + 1 < n1; ++i) {
      Vec v(n, 0);
      v[i] = 1;
      v[i + 1] = -1;
      simple.push_back(v);
    }
    if (n1) {
      Vec v(n, 0);
      v[n1 - 1] = 2;
      simple.push_back(v);
    }
    if (n2 >= 2) {
      for (int i = n1; i + 1 < n; ++i) {
        Vec v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        simple.push_back(v);
      }
      Vec v(n, 0);
      v[n - 2] = 1;
      v[n - 1] = 1;
      simple.push_back(v);
    }

    auto WC = signed_perms(n1, false);
    auto WD = signed_perms(n2, true);
    for (const auto& c : WC)
      for (const auto& d : WD) {
        SignedPerm w;
        w.perm = c.perm;
        w.sign = c.sign;
        for (int i = 0; i < n2; ++i) {
          w.perm.push_back(n1 + d.perm[i]);
          w.sign.push_back(d.sign[i]);
        }
        W.push_back(w);
      }
  }

  int index(const Vec& v) const {
    auto it = std::lower_bound(roots.begin(), roots.end(), v);
    if (it == roots.end() || *it != v) throw std::logic_error("not a root");
    return static_cast<int>(it - roots.begin());
  }

  std::vector<int> standard_levi(unsigned S) const {
    std::vector<std::vector<Q>> base;
    for (size_t i = 0; i < simple.size(); ++i)
      if ((S >> i) & 1) base.emplace_back(simple[i].begin(), simple[i].end());
    int r = rank_of(base);
    std::vector<int> out;
    for (size_t k = 0; k < roots.size(); ++k) {
      auto m = base;
      m.emplace_back(roots[k].begin(), roots[k].end());
      if (rank_of(m) == r) out.push_back(static_cast<int>(k));
    }
    return out;
  }

  std::vector<int> image(const SignedPerm& w, const std::vector<int>& sys) const {
    std::vector<int> out;
    for (int k : sys) out.push_back(index(w.apply(roots[k])));
    std::sort(out.begin(), out.end());
    return out;
  }

  // type of a Levi subsystem; ok = false when some component is not cuspidal
  bool classify(const std::vector<int>& sys, LeviKey& key, long long& weyl_order) const {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int k : sys) {
      int first = -1;
      for (int i = 0; i < n; ++i)
        if (roots[k][i]) {
          if (first < 0) first = i;
          else parent[find(i)] = find(first);
        }
    }
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) blocks[find(i)].push_back(i);
    key = {};
    weyl_order = 1;
    bool ok = true;
    for (const auto& [root_of_block, coords] : blocks) {
      (void)root_of_block;
      int s = static_cast<int>(coords.size());
      bool in_C = coords[0] < n1;
      long long count = 0;
      bool has_long = false;
      for (int k : sys)
        if (find(std::find_if(roots[k].begin(), roots[k].end(), [](int x) { return x != 0; }) -
                 roots[k].begin()) == find(coords[0])) {
          ++count;
          for (int x : roots[k]) has_long = has_long || x == 2 || x == -2;
        }
      if (count == 0) {
        (in_C ? key.r1 : key.r2) += 1;
      } else if (in_C && has_long) {
        if (count != 2LL * s * s) ok = false;
        key.m1 += s;
        weyl_order *= (1LL << s) * factorial(s);
      } else if (!in_C && s >= 2 && count == 2LL * s * (s - 1)) {
        if (s % 2) ok = false;
        key.m2 += s;
        weyl_order *= (1LL << (s - 1)) * factorial(s);
      } else if (s == 2 && count == 2) {
        (in_C ? key.t1 : key.t2) += 1;
        weyl_order *= 2;
      } else {
        ok = false;
        weyl_order *= factorial(s);
      }
    }
    return ok;
  }
};

}  // namespace

std::vector<HLeviClass> h_cuspidal_levi_classes(const EndoscopicDatum& H) {
  if (H.n2 == 1) throw std::invalid_argument("not an elliptic datum");
  HRootSystem R(H.n1, H.n2);
  std::map<std::vector<int>, std::vector<int>> classes;  // canonical form -> representative
  std::map<std::vector<int>, long long> orbit_size;
  for (unsigned S = 0; S < (1u << R.simple.size()); ++S) {
    auto sys = R.standard_levi(S);
    std::set<std::vector<int>> orbit;
    for (const auto& w : R.W) orbit.insert(R.image(w, sys));
    const auto& canon = *orbit.begin();
    if (classes.count(canon)) continue;
    classes[canon] = sys;
    orbit_size[canon] = static_cast<long long>(orbit.size());
  }
  std::vector<HLeviClass> out;
  for (const auto& [canon, sys] : classes) {
    HLeviClass c;
    long long wm = 0;
    if (!R.classify(sys, c.key, wm)) continue;
    long long stab = static_cast<long long>(R.W.size()) / orbit_size[canon];
    if (stab % wm) throw std::logic_error("W_M does not divide the stabilizer");
    c.normalizer = stab / wm;
    for (int k : sys) c.roots.push_back(R.roots[k]);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const HLeviClass& a, const HLeviClass& b) {
    return std::tie(a.key, a.roots) < std::tie(b.key, b.roots);
  });
  return out;
}

Sides double_counting_check(int n, const LeviFunction& phi, bool literal_lambda) {
  Sides s{Q(0), Q(0)};
  for (const auto& H : elliptic_data(n))
    for (const auto& c : h_cuspidal_levi_classes(H))
      s.lhs += phi(H, c.key) / Q(static_cast<long>(H.lambda_order() * c.normalizer));
  for (const auto& M : cuspidal_levis(n))
    for (const auto& g : g_triples(M)) {
      if (g.m2 % 2) continue;  // SO_{2 m2} with m2 odd: M' is not cuspidal
      int lam = literal_lambda ? g.lambda_order_paper() : g.lambda_order_corrected();
      s.rhs += phi(g.H(), g.key()) / Q(static_cast<long>(n_M_G(M) * lam));
    }
  return s;
}

}  // namespace gsp
