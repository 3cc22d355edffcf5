#pragma once

#include <map>
#include <string>
#include <vector>

#include "gsp/rational.hpp"
#include "gsp/root_data.hpp"

namespace gsp {

// Laurent polynomial in X, X_1..X_n and a formal p.
// Exponent vectors are (e_X, e_1, ..., e_n, e_p).
class Laurent {
 public:
  using Exps = std::vector<long long>;

  explicit Laurent(int n = 0) : n_(n) {}
  static Laurent constant(int n, const Q& c);
  static Laurent monomial(int n, const Q& c, long long eX, const std::vector<long long>& e,
                          long long ep);
  static Laurent X(int n, long long k = 1);
  static Laurent Xi(int n, int i, long long k = 1);  // 1-based
  static Laurent p(int n, long long k = 1);

  int rank() const { return n_; }
  const std::map<Exps, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator*(const Q& c) const;
  Laurent& operator+=(const Laurent& o);
  bool operator==(const Laurent& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  Q evaluate(const Q& p, const Q& X, const std::vector<Q>& Xs) const;

  // "coef * p^e * X^e0 * X1^e1 ..." per monomial, in exponent order
  std::vector<std::string> monomials() const;
  std::string str() const;

 private:
  void add_term(const Exps& e, const Q& c);
  void check(const Laurent& o) const;
  int n_;
  std::map<Exps, Q> terms_;
};

// action of the Weyl group induced on cocharacters: X <-> mu, X_i <-> e^_i.
// A sign change at i sends X to X X_i^{-1} and X_i to X_i^{-1}.
Laurent weyl_act_poly(const SignedPermutation& w, const Laurent& f);

}  // namespace gsp
