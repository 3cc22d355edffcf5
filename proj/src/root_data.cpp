#include "gsp/root_data.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gsp {

namespace {

long long doubled_of(const Q& q) {
  Q d = q * 2;
  if (d.get_den() != 1) throw std::invalid_argument("coefficient not in 1/2 Z");
  return d.get_num().get_si();
}

void need_rank(int a, int b) {
  if (a != b) throw std::invalid_argument("rank mismatch");
}

// root in tilde coordinates, all entries integers
std::vector<long long> tilde_int(const Weight& a) {
  std::vector<long long> t(a.rank());
  for (int i = 1; i <= a.rank(); ++i) {
    if (a.doubled[i] % 2) throw std::invalid_argument("not a root");
    t[i - 1] = a.doubled[i] / 2;
  }
  return t;
}

Weight from_tilde_int(const std::vector<long long>& t) {
  std::vector<Q> a;
  for (auto v : t) a.emplace_back(Q(static_cast<long>(v)));
  return Weight::from_tilde(Q(0), a);
}

}  // namespace

Weight Weight::from_coeffs(const Q& ac, const std::vector<Q>& a) {
  Weight w;
  w.doubled.push_back(doubled_of(ac));
  for (const auto& x : a) w.doubled.push_back(doubled_of(x));
  return w;
}

Weight Weight::from_tilde(const Q& cpart, const std::vector<Q>& a) {
  Q s = 0;
  for (const auto& x : a) s += x;
  return from_coeffs(cpart - s / 2, a);
}

Weight Weight::c(int n) {
  Weight w = zero(n);
  w.doubled[0] = 2;
  return w;
}

Weight Weight::e(int n, int i) {
  Weight w = zero(n);
  w.doubled.at(i) = 2;
  return w;
}

Q Weight::central_part() const {
  long long s = 0;
  for (int i = 1; i <= rank(); ++i) s += doubled[i];
  return make_q(2 * doubled[0] + s, 4);
}

std::vector<Q> Weight::tilde() const {
  std::vector<Q> t;
  for (int i = 1; i <= rank(); ++i) t.push_back(coeff(i));
  return t;
}

bool Weight::is_integral() const {
  return std::all_of(doubled.begin(), doubled.end(), [](long long d) { return d % 2 == 0; });
}

Weight Weight::operator+(const Weight& o) const {
  need_rank(rank(), o.rank());
  Weight w = *this;
  for (size_t i = 0; i < doubled.size(); ++i) w.doubled[i] += o.doubled[i];
  return w;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& d : w.doubled) d = -d;
  return w;
}

Weight Weight::operator*(long long k) const {
  Weight w = *this;
  for (auto& d : w.doubled) d *= k;
  return w;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < doubled.size(); ++i) os << (i ? "," : "") << doubled[i];
  os << "]";
  return os.str();
}

Q pairing(const Weight& x, const Coweight& y) {
  need_rank(x.rank(), y.rank());
  long long s = 0;
  for (size_t i = 0; i < x.doubled.size(); ++i) s += x.doubled[i] * y.coeffs[i];
  return make_q(s, 2);
}

Weight rho(int n) {
  std::vector<Q> a;
  for (int i = 1; i <= n; ++i) a.emplace_back(n - i + 1);
  return Weight::from_tilde(Q(0), a);
}

Coweight mu_cocharacter(int n) {
  Coweight m{std::vector<long long>(n + 1, 1)};
  return m;
}

Coweight varpi(int n, int s) {
  if (s < 0 || s > n) throw std::invalid_argument("varpi index out of range");
  Coweight m{std::vector<long long>(n + 1, 0)};
  for (int i = 1; i <= s; ++i) m.coeffs[i] = 1;
  return m;
}

Coweight coroot(const Weight& alpha) {
  if (!is_root(alpha)) throw std::invalid_argument("coroot of a non-root");
  auto t = tilde_int(alpha);
  Coweight v{std::vector<long long>(t.size() + 1, 0)};
  int nz = 0;
  for (auto x : t) nz += x != 0;
  for (size_t i = 0; i < t.size(); ++i) v.coeffs[i + 1] = nz == 1 ? t[i] / 2 : t[i];
  return v;
}

std::vector<Weight> positive_roots(int n) {
  std::vector<Weight> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<long long> t(n, 0);
      t[i] = 1;
      t[j] = -1;
      out.push_back(from_tilde_int(t));
      t[j] = 1;
      out.push_back(from_tilde_int(t));
    }
    std::vector<long long> t(n, 0);
    t[i] = 2;
    out.push_back(from_tilde_int(t));
  }
  return out;
}

std::vector<Weight> roots(int n) {
  auto pos = positive_roots(n);
  std::vector<Weight> out = pos;
  for (const auto& a : pos) out.push_back(-a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> simple_roots(int n) {
  std::vector<Weight> out;
  for (int i = 1; i < n; ++i) out.push_back(Weight::e(n, i) - Weight::e(n, i + 1));
  if (n >= 1) out.push_back(Weight::e(n, n) * 2 - Weight::c(n));
  return out;
}

bool is_root(const Weight& x) {
  if (x.central_part() != 0) return false;
  int n = x.rank();
  std::vector<long long> t(n);
  for (int i = 1; i <= n; ++i) {
    if (x.doubled[i] % 2) return false;
    t[i - 1] = x.doubled[i] / 2;
  }
  int nz = 0;
  long long first = 0, second = 0;
  for (auto v : t)
    if (v) {
      ++nz;
      (nz == 1 ? first : second) = v;
    }
  if (nz == 1) return first == 2 || first == -2;
  if (nz == 2) return (first == 1 || first == -1) && (second == 1 || second == -1);
  return false;
}

bool is_positive_root(const Weight& alpha) {
  if (!is_root(alpha)) return false;
  for (int i = 1; i <= alpha.rank(); ++i)
    if (alpha.doubled[i]) return alpha.doubled[i] > 0;
  return false;
}

bool is_dominant(const Weight& x) {
  for (int i = 1; i < x.rank(); ++i)
    if (x.doubled[i] < x.doubled[i + 1]) return false;
  return x.rank() == 0 || x.doubled[x.rank()] >= 0;
}

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation w;
  w.signs.assign(n, 1);
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  return w;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
  need_rank(rank(), o.rank());
  SignedPermutation w;
  int n = rank();
  w.signs.resize(n);
  w.perm.resize(n);
  for (int i = 0; i < n; ++i) {
    w.perm[i] = perm[o.perm[i]];
    w.signs[i] = o.signs[i] * signs[o.perm[i]];
  }
  return w;
}

SignedPermutation SignedPermutation::inverse() const {
  int n = rank();
  SignedPermutation w;
  w.signs.resize(n);
  w.perm.resize(n);
  for (int i = 0; i < n; ++i) {
    w.perm[perm[i]] = i;
    w.signs[perm[i]] = signs[i];
  }
  return w;
}

std::string SignedPermutation::str() const {
  std::ostringstream os;
  os << "{signs:[";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << signs[i];
  os << "],perm:[";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << perm[i] + 1;
  os << "]}";
  return os.str();
}

void for_each_weyl(int n, const std::function<void(const SignedPermutation&)>& f) {
  SignedPermutation w = SignedPermutation::identity(n);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      for (int i = 0; i < n; ++i) w.signs[i] = (mask >> i) & 1 ? -1 : 1;
      f(w);
    }
  } while (std::next_permutation(w.perm.begin(), w.perm.end()));
}

std::vector<SignedPermutation> weyl_group(int n) {
  std::vector<SignedPermutation> out;
  for_each_weyl(n, [&](const SignedPermutation& w) { out.push_back(w); });
  return out;
}

Weight act(const SignedPermutation& w, const Weight& x) {
  need_rank(w.rank(), x.rank());
  Weight y = x;
  for (int i = 0; i < w.rank(); ++i) {
    y.doubled[w.perm[i] + 1] = w.signs[i] * x.doubled[i + 1];
    if (w.signs[i] < 0) y.doubled[0] += x.doubled[i + 1];
  }
  return y;
}

std::vector<Weight> inversion_set(const SignedPermutation& w) {
  std::vector<Weight> out;
  auto winv = w.inverse();
  for (const auto& a : positive_roots(w.rank()))
    if (!is_positive_root(act(winv, a))) out.push_back(a);
  return out;
}

int length(const SignedPermutation& w) {
  // counts positive roots sent to negative ones by w^{-1}; same as |inversion_set|
  int n = w.rank();
  auto v = w.inverse();
  // image of et_i under v is v.signs[i] et_{v.perm[i]}; compare images by position
  auto val = [&](int i) { return std::pair<int, int>{v.signs[i], v.perm[i]}; };
  auto negative = [](long long x) { return x < 0; };
  int len = 0;
  for (int i = 0; i < n; ++i) {
    auto [si, pi] = val(i);
    if (si < 0) ++len;  // 2 et_i
    for (int j = i + 1; j < n; ++j) {
      auto [sj, pj] = val(j);
      // v(et_i - et_j) = si et_pi - sj et_pj, v(et_i + et_j) = si et_pi + sj et_pj
      for (int eps : {-1, 1}) {
        long long ci = si, cj = eps * sj;
        long long lead = pi < pj ? ci : cj;
        if (negative(lead)) ++len;
      }
    }
  }
  return len;
}

int weyl_sign(const SignedPermutation& w) { return length(w) % 2 ? -1 : 1; }

SignedPermutation reflection(const Weight& alpha) {
  if (!is_root(alpha)) throw std::invalid_argument("reflection in a non-root");
  auto t = tilde_int(alpha);
  int n = static_cast<int>(t.size());
  auto w = SignedPermutation::identity(n);
  std::vector<int> idx;
  for (int i = 0; i < n; ++i)
    if (t[i]) idx.push_back(i);
  if (idx.size() == 1) {
    w.signs[idx[0]] = -1;
  } else {
    int i = idx[0], j = idx[1];
    w.perm[i] = j;
    w.perm[j] = i;
    if (t[i] * t[j] > 0) w.signs[i] = w.signs[j] = -1;
  }
  return w;
}

ParabolicIndex::ParabolicIndex(int n_, std::vector<int> s) : n(n_), S(std::move(s)) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  for (int x : S)
    if (x < 1 || x > n) throw std::invalid_argument("parabolic index out of range");
}

std::vector<int> ParabolicIndex::gl_blocks() const {
  std::vector<int> b;
  int prev = 0;
  for (int s : S) {
    b.push_back(s - prev);
    prev = s;
  }
  return b;
}

bool ParabolicIndex::in_levi(const Weight& alpha) const {
  auto t = tilde_int(alpha);
  std::vector<int> idx;
  for (int i = 0; i < n; ++i)
    if (t[i]) idx.push_back(i + 1);
  int rr = r();
  if (idx.front() > rr) return true;  // the GSp factor
  if (idx.size() == 1 || idx.back() > rr) return false;
  if (t[idx[0] - 1] * t[idx[1] - 1] > 0) return false;
  // et_i - et_j inside one GL block
  auto block_of = [&](int i) {
    return static_cast<int>(std::lower_bound(S.begin(), S.end(), i) - S.begin());
  };
  return block_of(idx[0]) == block_of(idx[1]);
}

std::vector<Weight> ParabolicIndex::levi_positive_roots() const {
  std::vector<Weight> out;
  for (const auto& a : positive_roots(n))
    if (in_levi(a)) out.push_back(a);
  return out;
}

std::vector<Weight> ParabolicIndex::nilradical_roots() const {
  std::vector<Weight> out;
  for (const auto& a : positive_roots(n))
    if (!in_levi(a)) out.push_back(a);
  return out;
}

long long ParabolicIndex::levi_weyl_order() const {
  auto fact = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  long long o = 1;
  for (int b : gl_blocks()) o *= fact(b);
  int m = n - r();
  return o * (1LL << m) * fact(m);
}

std::string ParabolicIndex::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < S.size(); ++i) os << (i ? "," : "") << S[i];
  os << "}";
  return os.str();
}

std::vector<ParabolicIndex> all_parabolics(int n) {
  std::vector<ParabolicIndex> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.push_back(i + 1);
    out.emplace_back(n, s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.S.size() != b.S.size() ? a.S.size() < b.S.size() : a.S < b.S;
  });
  return out;
}

std::vector<SignedPermutation> kostant_representatives(const ParabolicIndex& P) {
  std::vector<SignedPermutation> out;
  for_each_weyl(P.n, [&](const SignedPermutation& w) {
    for (const auto& a : inversion_set(w))
      if (P.in_levi(a)) return;
    out.push_back(w);
  });
  return out;
}

Q weyl_dimension(const std::vector<Weight>& positive, const Weight& highest) {
  if (positive.empty()) return Q(1);
  int n = highest.rank();
  Weight two_rho = Weight::zero(n);
  for (const auto& a : positive) two_rho = two_rho + a;
  Q num = 1, den = 1;
  for (const auto& a : positive) {
    auto cv = coroot(a);
    num *= pairing(highest, cv) * 2 + pairing(two_rho, cv);
    den *= pairing(two_rho, cv);
  }
  return num / den;
}

}  // namespace gsp
