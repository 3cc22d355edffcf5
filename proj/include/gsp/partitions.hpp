#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsp/rational.hpp"

namespace gsp {

// Subsets of a totally ordered index set {0..N-1} are bit masks; callers
// present 1-based labels on output.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask(0) : (Mask(1) << n) - 1; }
std::vector<int> elements(Mask m);  // 0-based, increasing

struct OrderedPartition {
  std::vector<Mask> blocks;
  int size() const { return static_cast<int>(blocks.size()); }
  Mask support() const;
  bool operator==(const OrderedPartition& o) const { return blocks == o.blocks; }
  bool operator<(const OrderedPartition& o) const { return blocks < o.blocks; }
  std::string str() const;  // 1-based labels
};

// P cap J, empty intersections dropped
OrderedPartition restrict_to(const OrderedPartition& P, Mask J);
// unordered partition: blocks sorted by lowest element
OrderedPartition forget_order(const OrderedPartition& P);

// sgn(sigma_P): parity of the word obtained by listing the blocks in order,
// each block increasing; relative to the induced order on the support
int eps(const OrderedPartition& P);
int eps_split(Mask J, Mask K);
int eps_prime(const OrderedPartition& P);
int odd_block_count(const OrderedPartition& P);

// lambda scaled by the lcm of its denominators; signs of subset sums and all
// order comparisons used by the appendix are unchanged
struct ScaledVector {
  std::vector<long long> v;
  std::vector<long long> sums;  // s_J for every mask J
  int n() const { return static_cast<int>(v.size()); }
  long long s(Mask J) const { return sums[J]; }
};
ScaledVector scale(const std::vector<Q>& lambda);

// prefix sums of block sums all > 0 (or >= 0 when weak)
bool is_positive(const OrderedPartition& P, const ScaledVector& lam, bool weak = false);
// every block sum > 0 (or >= 0)
bool blocks_positive(const OrderedPartition& P, const ScaledVector& lam, bool weak = false);

using PartitionFn = std::function<void(const OrderedPartition&)>;

// Atoms are disjoint masks that blocks may not split (singletons in general,
// the pairs {n+2i-1, n+2i} for Par(n,m)).
std::vector<Mask> singleton_atoms(Mask I);
std::vector<Mask> paired_atoms(int n, int m);

void for_each_ordered(const std::vector<Mask>& atoms, const PartitionFn& f);
void for_each_ordered_positive(const std::vector<Mask>& atoms, const ScaledVector& lam,
                               bool weak, const PartitionFn& f);
void for_each_set_partition(const std::vector<Mask>& atoms, const PartitionFn& f);

bool in_par_k(const OrderedPartition& p, int k);
bool in_par0_le2(const OrderedPartition& p);

enum class PartitionKind { Par, ParOrd, ParK, Par0Le2, ParNM, Dcal };

// collected enumeration; lambda filter applies when given; k used by ParK, m by ParNM
// (with n = |I| - 2m); Dcal yields the pairs (J, K) as two-block ordered partitions
// that may contain empty blocks
std::vector<OrderedPartition> enumerate_partitions(int n, PartitionKind kind,
                                                   const std::optional<std::vector<Q>>& lambda,
                                                   int k = 0, int m = 0);

long long fubini(int n);

// c-functions of the appendix and of the Herb coefficient
int c1(const Q& a);
int c2(const Q& a, const Q& b);
int c2C(const Q& a, const Q& b);
int c2D(const Q& a, const Q& b);
int c1(long long a);
int c2(long long a, long long b);
// p in Par0_{<=2}; pairs {i1 < i2} read as c2(lambda_i1, lambda_i2)
long long c_of(const OrderedPartition& p, const ScaledVector& lam);

}  // namespace gsp
