#include "gsp/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace gsp {

Laurent Laurent::constant(int n, const Q& c) {
  Laurent f(n);
  f.add_term(Exps(n + 2, 0), c);
  return f;
}

Laurent Laurent::monomial(int n, const Q& c, long long eX, const std::vector<long long>& e,
                          long long ep) {
  if (static_cast<int>(e.size()) != n) throw std::invalid_argument("exponent vector length");
  Exps x(n + 2, 0);
  x[0] = eX;
  for (int i = 0; i < n; ++i) x[i + 1] = e[i];
  x[n + 1] = ep;
  Laurent f(n);
  f.add_term(x, c);
  return f;
}

Laurent Laurent::X(int n, long long k) { return monomial(n, Q(1), k, std::vector<long long>(n, 0), 0); }

Laurent Laurent::Xi(int n, int i, long long k) {
  if (i < 1 || i > n) throw std::out_of_range("variable index");
  std::vector<long long> e(n, 0);
  e[i - 1] = k;
  return monomial(n, Q(1), 0, e, 0);
}

Laurent Laurent::p(int n, long long k) { return monomial(n, Q(1), 0, std::vector<long long>(n, 0), k); }

void Laurent::add_term(const Exps& e, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Laurent::check(const Laurent& o) const {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r(n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  check(o);
  Laurent r(n_);
  Exps s(n_ + 2);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < n_ + 2; ++i) s[i] = e1[i] + e2[i];
      r.add_term(s, c1 * c2);
    }
  return r;
}

Laurent Laurent::operator*(const Q& c) const {
  Laurent r(n_);
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

Q Laurent::evaluate(const Q& p, const Q& X, const std::vector<Q>& Xs) const {
  if (static_cast<int>(Xs.size()) != n_) throw std::invalid_argument("rank mismatch");
  Q total = 0;
  for (const auto& [e, c] : terms_) {
    Q v = c * qpow(X, e[0]) * qpow(p, e[n_ + 1]);
    for (int i = 0; i < n_; ++i) v *= qpow(Xs[i], e[i + 1]);
    total += v;
  }
  return total;
}

std::vector<std::string> Laurent::monomials() const {
  std::vector<std::string> out;
  for (const auto& [e, c] : terms_) {
    std::ostringstream os;
    os << to_string(c) << " * p^" << e[n_ + 1] << " * X^" << e[0];
    for (int i = 0; i < n_; ++i) os << " * X" << i + 1 << "^" << e[i + 1];
    out.push_back(os.str());
  }
  return out;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& m : monomials()) s += (s.empty() ? "" : " + ") + m;
  return s;
}

Laurent weyl_act_poly(const SignedPermutation& w, const Laurent& f) {
  int n = f.rank();
  if (w.rank() != n) throw std::invalid_argument("rank mismatch");
  Laurent r(n);
  // X^a prod X_i^{b_i} is the cocharacter a c^v + sum (a + b_i) e^_i; w sends e^_i to
  // s_i e^_{pi(i)} and c^v to c^v + sum_{s_j = -1} e^_{pi(j)}
  for (const auto& [e, c] : f.terms()) {
    long long a = e[0];
    std::vector<long long> y(n, 0);
    for (int j = 0; j < n; ++j) y[w.perm[j]] = w.signs[j] * (a + e[j + 1]) + (w.signs[j] < 0 ? a : 0);
    std::vector<long long> b(n);
    for (int k = 0; k < n; ++k) b[k] = y[k] - a;
    r += Laurent::monomial(n, c, a, b, e[n + 1]);
  }
  return r;
}

}  // namespace gsp
