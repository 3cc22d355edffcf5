#pragma once

#include <vector>

#include "gsp/rational.hpp"

namespace gsp {

using Matrix = std::vector<std::vector<Q>>;

// exact rank over Q by Gaussian elimination (the argument is consumed)
int rank(Matrix m);

// Incrementally maintained row echelon basis of a subspace of Q^d.
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim) : dim_(dim) {}
  // reduces v against the basis; adds it and returns true when independent
  bool add(std::vector<Q> v);
  bool contains(std::vector<Q> v) const;
  int size() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }

 private:
  void reduce(std::vector<Q>& v) const;
  int dim_;
  std::vector<std::vector<Q>> rows_;
  std::vector<int> pivots_;
};

// x with A x = b for A given by columns; throws if there is no solution
std::vector<Q> solve_columns(const std::vector<std::vector<Q>>& columns, const std::vector<Q>& b);

}  // namespace gsp
