#include "gsp/ce_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "gsp/linalg.hpp"

namespace gsp {

long long CEDegree::dim() const {
  long long s = 0;
  for (const auto& [w, m] : weights) s += m;
  return s;
}

namespace {

using Mono = std::vector<int>;
using Poly = std::map<Mono, Q>;
using Mat = std::vector<std::vector<Q>>;

void add_to(Poly& p, const Mono& m, const Q& c) {
  if (c == 0) return;
  auto [it, ins] = p.emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// Sp_{2n} on W = Q^{2n}; w_a has weight et_{a+1} for a < n and -et_{2n-a} otherwise
struct Realization {
  int n, N;
  std::vector<std::vector<int>> wt;          // tilde weight of each variable
  std::vector<std::pair<int, int>> pairs;    // variables N.. are w_a ^ w_b, a < b

  explicit Realization(int n_) : n(n_), N(2 * n_) {
    for (int a = 0; a < N; ++a) wt.push_back(basis_weight(a));
    if (n >= 2)
      for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
          pairs.push_back({a, b});
          std::vector<int> w(n);
          for (int i = 0; i < n; ++i) w[i] = wt[a][i] + wt[b][i];
          wt.push_back(w);
        }
  }
  std::vector<int> basis_weight(int a) const {
    std::vector<int> w(n, 0);
    if (a < n) w[a] = 1;
    else w[N - 1 - a] = -1;
    return w;
  }
  int nvars() const { return static_cast<int>(wt.size()); }
  int pair_index(int a, int b) const {
    for (size_t k = 0; k < pairs.size(); ++k)
      if (pairs[k] == std::make_pair(a, b)) return N + static_cast<int>(k);
    throw std::logic_error("pair");
  }

  Mat J() const {
    Mat j(N, std::vector<Q>(N, Q(0)));
    for (int a = 0; a < N; ++a) j[a][N - 1 - a] = a < n ? 1 : -1;
    return j;
  }

  // root vector: projection of an elementary matrix of weight alpha onto sp
  Mat root_vector(const std::vector<int>& alpha) const {
    Mat j = J();
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        bool match = true;
        for (int i = 0; i < n; ++i) match = match && wt[a][i] - wt[b][i] == alpha[i];
        if (!match) continue;
        // X + J X^T J is fixed by the involution defining sp
        Mat x(N, std::vector<Q>(N, Q(0)));
        x[a][b] += 1;
        for (int p = 0; p < N; ++p)
          for (int q = 0; q < N; ++q) x[p][q] += j[p][b] * j[a][q];
        bool nz = false;
        for (auto& row : x)
          for (auto& v : row) nz = nz || v != 0;
        if (nz) return x;
      }
    throw std::logic_error("no root vector");
  }

  // X acting on the variable v, as a linear form in the variables
  std::vector<std::pair<int, Q>> act_var(const Mat& X, int v) const {
    std::vector<std::pair<int, Q>> out;
    if (v < N) {
      for (int a = 0; a < N; ++a)
        if (X[a][v] != 0) out.push_back({a, X[a][v]});
      return out;
    }
    auto [a, b] = pairs[v - N];
    auto wedge = [&](int c, int d, const Q& coef) {
      if (c == d || coef == 0) return;
      if (c < d) out.push_back({pair_index(c, d), coef});
      else out.push_back({pair_index(d, c), -coef});
    };
    for (int c = 0; c < N; ++c) {
      wedge(c, b, X[c][a]);
      wedge(a, c, X[c][b]);
    }
    return out;
  }

  Poly act(const Mat& X, const Poly& p) const {
    Poly out;
    for (const auto& [m, c] : p)
      for (int v = 0; v < nvars(); ++v) {
        if (!m[v]) continue;
        for (const auto& [u, coef] : act_var(X, v)) {
          Mono m2 = m;
          m2[v] -= 1;
          m2[u] += 1;
          add_to(out, m2, c * coef * m[v]);
        }
      }
    return out;
  }
};

std::vector<int> tilde_int(const Weight& a) {
  std::vector<int> t;
  for (int i = 1; i <= a.rank(); ++i) {
    if (a.doubled[i] % 2) throw std::invalid_argument("non-integral tilde coordinate");
    t.push_back(static_cast<int>(a.doubled[i] / 2));
  }
  return t;
}

// sparse echelon rows; rows are reduced against earlier rows at insertion time
struct WeightSpace {
  std::vector<Poly> rows;
  std::vector<Mono> pivots;
  std::vector<int> global;  // index of each row in the basis of V

  // subtracts rows, recording coefficients; returns the remainder
  Poly reduce(Poly v, std::vector<Q>* coords) const {
    if (coords) coords->assign(rows.size(), Q(0));
    for (size_t k = 0; k < rows.size(); ++k) {
      auto it = v.find(pivots[k]);
      if (it == v.end()) continue;
      Q f = it->second / rows[k].at(pivots[k]);
      if (coords) (*coords)[k] = f;
      for (const auto& [m, c] : rows[k]) add_to(v, m, -f * c);
    }
    return v;
  }
};

struct Module {
  int n = 0;
  Q central;
  Realization R{0};
  std::map<std::vector<int>, WeightSpace> spaces;
  std::vector<std::vector<int>> basis_weight;  // tilde weight of each basis vector
  std::vector<const Poly*> basis;

  Weight full_weight(const std::vector<int>& t) const {
    std::vector<Q> a;
    for (int v : t) a.emplace_back(v);
    return Weight::from_tilde(central, a);
  }

  // coordinates of X v_j in the basis of V
  std::vector<std::pair<int, Q>> apply(const Mat& X, const std::vector<int>& alpha, int j) const {
    Poly img = R.act(X, *basis[j]);
    std::vector<std::pair<int, Q>> out;
    if (img.empty()) return out;
    std::vector<int> w = basis_weight[j];
    for (int i = 0; i < n; ++i) w[i] += alpha[i];
    auto it = spaces.find(w);
    if (it == spaces.end()) throw std::logic_error("image outside the module");
    std::vector<Q> coords;
    Poly rest = it->second.reduce(img, &coords);
    if (!rest.empty()) throw std::logic_error("image outside the module");
    for (size_t k = 0; k < coords.size(); ++k)
      if (coords[k] != 0) out.push_back({it->second.global[k], coords[k]});
    return out;
  }
};

Module build_module(const Weight& lambda, long long max_dim) {
  int n = lambda.rank();
  if (n > 2) throw std::invalid_argument("the explicit oracle supports n <= 2");
  if (!is_dominant(lambda) || !lambda.is_integral()) throw std::invalid_argument("weight is not dominant integral");
  Module M;
  M.n = n;
  M.central = lambda.central_part();
  M.R = Realization(n);
  auto t = tilde_int(lambda);
  Mono top(M.R.nvars(), 0);
  if (n >= 1) top[0] = n == 1 ? t[0] : t[0] - t[1];
  if (n == 2) top[M.R.pair_index(0, 1)] = t[1];
  std::vector<Mat> lower;
  std::vector<std::vector<int>> lower_wt;
  for (const auto& a : simple_roots(n)) {
    auto ta = tilde_int(a);
    for (auto& x : ta) x = -x;
    lower.push_back(M.R.root_vector(ta));
    lower_wt.push_back(ta);
  }
  std::vector<std::pair<std::vector<int>, size_t>> queue;
  auto insert = [&](const std::vector<int>& w, const Poly& p) {
    auto& ws = M.spaces[w];
    Poly r = ws.reduce(p, nullptr);
    if (r.empty()) return;
    ws.pivots.push_back(r.begin()->first);
    ws.rows.push_back(std::move(r));
    ws.global.push_back(static_cast<int>(M.basis_weight.size()));
    M.basis_weight.push_back(w);
    M.basis.push_back(nullptr);
    queue.push_back({w, ws.rows.size() - 1});
    if (static_cast<long long>(M.basis_weight.size()) > max_dim) throw std::length_error("module too large");
  };
  insert(t, Poly{{top, Q(1)}});
  for (size_t q = 0; q < queue.size(); ++q) {
    auto [w, k] = queue[q];
    Poly v = M.spaces[w].rows[k];
    for (size_t i = 0; i < lower.size(); ++i) {
      Poly img = M.R.act(lower[i], v);
      if (img.empty()) continue;
      std::vector<int> w2 = w;
      for (int j = 0; j < n; ++j) w2[j] += lower_wt[i][j];
      insert(w2, img);
    }
  }
  // rows are stable now, so pointers into them are safe
  for (auto& [w, ws] : M.spaces)
    for (size_t k = 0; k < ws.rows.size(); ++k) M.basis[ws.global[k]] = &ws.rows[k];
  return M;
}

int popcount(unsigned x) { return __builtin_popcount(x); }

}  // namespace

std::map<Weight, long long> explicit_module_weights(const Weight& lambda, long long max_dim) {
  auto M = build_module(lambda, max_dim);
  std::map<Weight, long long> out;
  for (const auto& w : M.basis_weight) out[M.full_weight(w)] += 1;
  return out;
}

std::vector<CEDegree> chevalley_eilenberg_oracle(const ParabolicIndex& S, const Weight& lambda,
                                                 long long max_dim) {
  if (lambda.rank() != S.n) throw std::invalid_argument("rank mismatch");
  int n = S.n;
  auto M = build_module(lambda, max_dim);
  int dimV = static_cast<int>(M.basis.size());
  auto nil = S.nilradical_roots();
  int d = static_cast<int>(nil.size());
  std::vector<std::vector<int>> nwt;
  std::vector<Mat> E;
  for (const auto& a : nil) {
    nwt.push_back(tilde_int(a));
    E.push_back(M.R.root_vector(nwt.back()));
  }
  long long total = 0;
  for (int k = 0; k <= d; ++k) {
    long long binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (d - i) / (i + 1);
    total += binom * dimV;
  }
  if (total > max_dim) throw std::length_error("cochain complex too large");

  // [E_a, E_b] = c E_g
  int N = 2 * n;
  auto commutator = [&](const Mat& x, const Mat& y) {
    Mat z(N, std::vector<Q>(N, Q(0)));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        for (int l = 0; l < N; ++l) z[i][j] += x[i][l] * y[l][j] - y[i][l] * x[l][j];
    return z;
  };
  struct Bracket { int a, b; Q c; };
  std::vector<std::vector<Bracket>> into(d);  // brackets landing on each root
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      Mat z = commutator(E[a], E[b]);
      std::vector<int> s(n);
      for (int i = 0; i < n; ++i) s[i] = nwt[a][i] + nwt[b][i];
      int g = static_cast<int>(std::find(nwt.begin(), nwt.end(), s) - nwt.begin());
      bool zero = true;
      for (auto& row : z)
        for (auto& v : row) zero = zero && v == 0;
      if (g == d) {
        if (!zero) throw std::logic_error("nilradical not closed");
        continue;
      }
      Q c = 0;
      for (int i = 0; i < N && c == 0; ++i)
        for (int j = 0; j < N && c == 0; ++j)
          if (E[g][i][j] != 0) c = z[i][j] / E[g][i][j];
      into[g].push_back({a, b, c});
    }

  // action of each E_a on the basis of V
  std::vector<std::vector<std::vector<std::pair<int, Q>>>> act(d);
  for (int a = 0; a < d; ++a)
    for (int j = 0; j < dimV; ++j) act[a].push_back(M.apply(E[a], nwt[a], j));

  auto cochain_weight = [&](unsigned T, int j) {
    std::vector<int> w = M.basis_weight[j];
    for (int r = 0; r < d; ++r)
      if ((T >> r) & 1)
        for (int i = 0; i < n; ++i) w[i] -= nwt[r][i];
    return w;
  };
  auto pos_in = [](unsigned T, int r) { return popcount(T & ((1u << r) - 1)); };

  // ranks of d^k restricted to each weight
  using Key = std::pair<unsigned, int>;
  std::vector<std::map<std::vector<int>, int>> rk(d + 1), cdim(d + 1);
  for (int k = 0; k <= d; ++k) {
    std::map<std::vector<int>, std::vector<std::map<Key, Q>>> cols;
    for (unsigned T = 0; T < (1u << d); ++T) {
      if (popcount(T) != k) continue;
      for (int j = 0; j < dimV; ++j) {
        auto w = cochain_weight(T, j);
        cdim[k][w] += 1;
        if (k == d) continue;
        std::map<Key, Q> img;
        for (int u = 0; u < d; ++u) {
          if ((T >> u) & 1) continue;
          unsigned U = T | (1u << u);
          Q sgn = pos_in(U, u) % 2 ? -1 : 1;
          for (const auto& [l, c] : act[u][j]) img[{U, l}] += sgn * c;
        }
        for (int g = 0; g < d; ++g) {
          if (!((T >> g) & 1)) continue;
          unsigned rest = T & ~(1u << g);
          for (const auto& br : into[g]) {
            if (((rest >> br.a) & 1) || ((rest >> br.b) & 1)) continue;
            unsigned U = rest | (1u << br.a) | (1u << br.b);
            int e = pos_in(U, br.a) + pos_in(U, br.b) + pos_in(T, g);
            img[{U, j}] += (e % 2 ? -1 : 1) * br.c;
          }
        }
        std::erase_if(img, [](const auto& kv) { return kv.second == 0; });
        cols[w].push_back(std::move(img));
      }
    }
    for (auto& [w, cs] : cols) {
      std::map<Key, int> rows;
      for (const auto& c : cs)
        for (const auto& [key, v] : c) rows.emplace(key, 0);
      int idx = 0;
      for (auto& [key, i] : rows) i = idx++;
      Matrix m(cs.size(), std::vector<Q>(rows.size(), Q(0)));
      for (size_t ci = 0; ci < cs.size(); ++ci)
        for (const auto& [key, v] : cs[ci]) m[ci][rows[key]] = v;
      rk[k][w] = rank(std::move(m));
    }
  }
  std::vector<CEDegree> out;
  for (int k = 0; k <= d; ++k) {
    CEDegree D;
    D.degree = k;
    for (const auto& [w, c] : cdim[k]) {
      long long h = c - (rk[k].count(w) ? rk[k][w] : 0) - (k > 0 && rk[k - 1].count(w) ? rk[k - 1][w] : 0);
      if (h < 0) throw std::logic_error("negative cohomology dimension");
      if (h) D.weights[M.full_weight(w)] = h;
    }
    out.push_back(std::move(D));
  }
  return out;
}

}  // namespace gsp
