#include "gsp/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gsp {

std::vector<int> elements(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(__builtin_ctz(m));
    m &= m - 1;
  }
  return out;
}

Mask OrderedPartition::support() const {
  Mask s = 0;
  for (Mask b : blocks) s |= b;
  return s;
}

std::string OrderedPartition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < blocks.size(); ++i) {
    os << (i ? "," : "") << "{";
    auto e = elements(blocks[i]);
    for (size_t j = 0; j < e.size(); ++j) os << (j ? "," : "") << e[j] + 1;
    os << "}";
  }
  os << ")";
  return os.str();
}

OrderedPartition restrict_to(const OrderedPartition& P, Mask J) {
  OrderedPartition out;
  for (Mask b : P.blocks)
    if (b & J) out.blocks.push_back(b & J);
  return out;
}

OrderedPartition forget_order(const OrderedPartition& P) {
  OrderedPartition out = P;
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](Mask a, Mask b) { return __builtin_ctz(a) < __builtin_ctz(b); });
  return out;
}

int eps(const OrderedPartition& P) {
  Mask seen = 0;
  int inv = 0;
  for (Mask b : P.blocks) {
    for (int y : elements(b)) inv += popcount(seen & ~full_mask(y + 1));
    seen |= b;
  }
  return inv % 2 ? -1 : 1;
}

int eps_split(Mask J, Mask K) {
  int inv = 0;
  for (int y : elements(K)) inv += popcount(J & ~full_mask(y + 1));
  return inv % 2 ? -1 : 1;
}

int eps_prime(const OrderedPartition& P) {
  int e = 0;
  for (Mask b : P.blocks) {
    int k = popcount(b);
    e += k * (k - 1) / 2;
  }
  return e % 2 ? -1 : 1;
}

int odd_block_count(const OrderedPartition& P) {
  int c = 0;
  for (Mask b : P.blocks) c += popcount(b) % 2;
  return c;
}

ScaledVector scale(const std::vector<Q>& lambda) {
  if (lambda.size() > 20) throw std::length_error("index set too large");
  mpz_class l = denominator_lcm(lambda);
  ScaledVector s;
  for (const auto& x : lambda) {
    Q y = x * Q(l);
    if (!y.get_num().fits_slong_p()) throw std::overflow_error("entry too large");
    s.v.push_back(y.get_num().get_si());
  }
  int n = s.n();
  s.sums.assign(size_t(1) << n, 0);
  for (Mask J = 1; J < (Mask(1) << n); ++J) {
    int low = __builtin_ctz(J);
    s.sums[J] = s.sums[J & (J - 1)] + s.v[low];
  }
  return s;
}

bool is_positive(const OrderedPartition& P, const ScaledVector& lam, bool weak) {
  long long acc = 0;
  for (Mask b : P.blocks) {
    acc += lam.s(b);
    if (weak ? acc < 0 : acc <= 0) return false;
  }
  return true;
}

bool blocks_positive(const OrderedPartition& P, const ScaledVector& lam, bool weak) {
  for (Mask b : P.blocks)
    if (weak ? lam.s(b) < 0 : lam.s(b) <= 0) return false;
  return true;
}

std::vector<Mask> singleton_atoms(Mask I) {
  std::vector<Mask> a;
  for (int i : elements(I)) a.push_back(Mask(1) << i);
  return a;
}

std::vector<Mask> paired_atoms(int n, int m) {
  std::vector<Mask> a;
  for (int i = 0; i < n; ++i) a.push_back(Mask(1) << i);
  for (int i = 0; i < m; ++i) a.push_back(Mask(3) << (n + 2 * i));
  return a;
}

namespace {

// blocks are unions of atoms: work on atom indices, translate at the leaves
struct OrderedWalker {
  const std::vector<Mask>& atoms;
  const ScaledVector* lam;
  bool weak;
  const PartitionFn& f;
  OrderedPartition cur;
  std::vector<Mask> expand;  // atom-subset -> element mask

  void run() {
    int k = static_cast<int>(atoms.size());
    expand.assign(size_t(1) << k, 0);
    for (Mask A = 1; A < (Mask(1) << k); ++A)
      expand[A] = expand[A & (A - 1)] | atoms[__builtin_ctz(A)];
    rec(full_mask(k), 0);
  }

  void rec(Mask rest, long long acc) {
    if (!rest) {
      f(cur);
      return;
    }
    for (Mask sub = rest; sub; sub = (sub - 1) & rest) {
      Mask b = expand[sub];
      long long a2 = acc;
      if (lam) {
        a2 += lam->s(b);
        if (weak ? a2 < 0 : a2 <= 0) continue;
      }
      cur.blocks.push_back(b);
      rec(rest & ~sub, a2);
      cur.blocks.pop_back();
    }
  }
};

struct SetWalker {
  const std::vector<Mask>& atoms;
  const PartitionFn& f;
  OrderedPartition cur;
  std::vector<Mask> expand;

  void run() {
    int k = static_cast<int>(atoms.size());
    expand.assign(size_t(1) << k, 0);
    for (Mask A = 1; A < (Mask(1) << k); ++A)
      expand[A] = expand[A & (A - 1)] | atoms[__builtin_ctz(A)];
    rec(full_mask(k));
  }

  void rec(Mask rest) {
    if (!rest) {
      f(cur);
      return;
    }
    Mask low = rest & (~rest + 1);
    Mask others = rest & ~low;
    for (Mask sub = others;; sub = (sub - 1) & others) {
      cur.blocks.push_back(expand[sub | low]);
      rec(others & ~sub);
      cur.blocks.pop_back();
      if (!sub) break;
    }
  }
};

}  // namespace

void for_each_ordered(const std::vector<Mask>& atoms, const PartitionFn& f) {
  OrderedWalker w{atoms, nullptr, false, f, {}, {}};
  w.run();
}

void for_each_ordered_positive(const std::vector<Mask>& atoms, const ScaledVector& lam,
                               bool weak, const PartitionFn& f) {
  OrderedWalker w{atoms, &lam, weak, f, {}, {}};
  w.run();
}

void for_each_set_partition(const std::vector<Mask>& atoms, const PartitionFn& f) {
  SetWalker w{atoms, f, {}, {}};
  w.run();
}

bool in_par_k(const OrderedPartition& p, int k) {
  int o = odd_block_count(p);
  return o == 2 * k || o == 2 * k + 1;
}

bool in_par0_le2(const OrderedPartition& p) {
  int ones = 0;
  for (Mask b : p.blocks) {
    int c = popcount(b);
    if (c > 2) return false;
    ones += c == 1;
  }
  return ones <= 1;
}

long long fubini(int n) {
  std::vector<long long> a(n + 1, 0);
  a[0] = 1;
  std::vector<std::vector<long long>> C(n + 1, std::vector<long long>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    C[i][0] = 1;
    for (int j = 1; j <= i; ++j) C[i][j] = C[i - 1][j - 1] + (j < i ? C[i - 1][j] : 0);
  }
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) a[i] += C[i][k] * a[i - k];
  return a[n];
}

std::vector<OrderedPartition> enumerate_partitions(int n, PartitionKind kind,
                                                   const std::optional<std::vector<Q>>& lambda,
                                                   int k, int m) {
  if (n < 0 || n > 9) throw std::length_error("index set size must be in [0, 9]");
  std::optional<ScaledVector> lam;
  if (lambda) {
    if (static_cast<int>(lambda->size()) != n) throw std::invalid_argument("lambda length");
    lam = scale(*lambda);
  }
  std::vector<OrderedPartition> out;
  Mask I = full_mask(n);
  auto keep_unordered = [&](const OrderedPartition& p) {
    return !lam || blocks_positive(p, *lam);
  };
  switch (kind) {
    case PartitionKind::ParOrd:
      if (lam)
        for_each_ordered_positive(singleton_atoms(I), *lam, false,
                                  [&](const OrderedPartition& P) { out.push_back(P); });
      else
        for_each_ordered(singleton_atoms(I), [&](const OrderedPartition& P) { out.push_back(P); });
      break;
    case PartitionKind::ParNM: {
      int nn = n - 2 * m;
      if (nn < 0) throw std::invalid_argument("m too large");
      auto atoms = paired_atoms(nn, m);
      if (lam)
        for_each_ordered_positive(atoms, *lam, false,
                                  [&](const OrderedPartition& P) { out.push_back(P); });
      else
        for_each_ordered(atoms, [&](const OrderedPartition& P) { out.push_back(P); });
      break;
    }
    case PartitionKind::Par:
    case PartitionKind::ParK:
    case PartitionKind::Par0Le2:
      for_each_set_partition(singleton_atoms(I), [&](const OrderedPartition& p) {
        if (kind == PartitionKind::ParK && !in_par_k(p, k)) return;
        if (kind == PartitionKind::Par0Le2 && !in_par0_le2(p)) return;
        if (keep_unordered(p)) out.push_back(p);
      });
      break;
    case PartitionKind::Dcal:
      for (Mask J = 0;; J = (J - I) & I) {
        out.push_back(OrderedPartition{{J, I & ~J}});
        if (J == I) break;
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int c1(const Q& a) { return a > 0 ? 1 : 0; }

int c2(const Q& a, const Q& b) {
  if (a + b <= 0 || a <= 0) return 0;
  if (b > 0) return 1;
  return 2;
}

int c2C(const Q& a, const Q& b) { return ((0 < a && a < b) || (0 < -b && -b < a)) ? 1 : 0; }

int c2D(const Q& a, const Q& b) { return a > abs(b) ? 1 : 0; }

int c1(long long a) { return a > 0 ? 1 : 0; }

int c2(long long a, long long b) {
  if (a + b <= 0 || a <= 0) return 0;
  if (b > 0) return 1;
  return 2;
}

long long c_of(const OrderedPartition& p, const ScaledVector& lam) {
  long long c = 1;
  for (Mask b : p.blocks) {
    auto e = elements(b);
    if (e.size() == 1) c *= c1(lam.v[e[0]]);
    else if (e.size() == 2) c *= c2(lam.v[e[0]], lam.v[e[1]]);
    else throw std::invalid_argument("c(p, lambda) needs blocks of size <= 2");
    if (!c) return 0;
  }
  return c;
}

}  // namespace gsp
