#include "gsp/kostant.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsp {

namespace {

Q dot(const Weight& x, const Weight& y) {
  Q s = 0;
  for (int i = 1; i <= x.rank(); ++i) s += x.coeff(i) * y.coeff(i);
  return s;
}

Weight half_sum(const std::vector<Weight>& positive, int n) {
  Weight s = Weight::zero(n);
  for (const auto& a : positive) s = s + a;
  // positive roots have even doubled coordinates, so halving is exact
  for (auto& d : s.doubled) d /= 2;
  return s;
}

void check_gamma(int n, const std::vector<Q>& gamma) {
  if (static_cast<int>(gamma.size()) != 2 * n) throw std::invalid_argument("torus element needs 2n entries");
  for (const auto& g : gamma)
    if (g == 0) throw std::invalid_argument("torus entries must be nonzero");
  for (int i = 0; i < n; ++i)
    if (gamma[i] * gamma[2 * n - 1 - i] != gamma[0] * gamma[2 * n - 1])
      throw std::invalid_argument("torus element violates the similitude constraint");
}

void check_lambda(const Weight& lambda) {
  if (!lambda.is_integral()) throw std::invalid_argument("weight is not integral");
  if (!is_dominant(lambda)) throw std::invalid_argument("weight is not dominant");
}

Q delta_B(const std::vector<Weight>& positive, const std::vector<Q>& gamma) {
  Q den = 1;
  for (const auto& a : positive) {
    Q v = evaluate_character(a, gamma);
    if (v == 1) throw std::domain_error("torus element is not regular");
    den *= 1 - 1 / v;
  }
  return den;
}

}  // namespace

std::vector<CohomologyPiece> kostant_cohomology(const ParabolicIndex& S, const Weight& lambda) {
  if (lambda.rank() != S.n) throw std::invalid_argument("rank mismatch");
  if (!is_dominant(lambda)) throw std::invalid_argument("weight is not dominant");
  auto rh = rho(S.n);
  auto levi = S.levi_positive_roots();
  std::vector<CohomologyPiece> out;
  for (const auto& w : kostant_representatives(S)) {
    CohomologyPiece p;
    p.omega = w;
    p.degree = length(w);
    p.highest = lambda;
    p.kostant_weight = act(w, lambda + rh) - rh;
    p.rep_of = S;
    Q d = weyl_dimension(levi, p.kostant_weight);
    if (d <= 0 || d.get_den() != 1) throw std::logic_error("bad Weyl dimension");
    p.dimension = d.get_num().get_si();
    out.push_back(p);
  }
  std::stable_sort(out.begin(), out.end(), [](const CohomologyPiece& a, const CohomologyPiece& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.omega < b.omega;
  });
  return out;
}

Weight central_character(const Weight& lambda) {
  return Weight::from_coeffs(lambda.central_part(), std::vector<Q>(lambda.rank(), Q(0)));
}

std::vector<CohomologyPiece> truncate(std::vector<CohomologyPiece> pieces, const Weight& lambda0,
                                      const ParabolicIndex& S, Direction dir) {
  auto rh = rho(S.n);
  for (auto& p : pieces) {
    if (!(central_character(p.highest) == lambda0))
      throw std::invalid_argument("lambda0 is not the central character of lambda");
    // omega fixes lambda0, so omega(lambda + rho + lambda0) = kostant_weight + rho + lambda0
    Weight x = p.kostant_weight + rh + lambda0;
    bool keep = true;
    for (int s : S.S) {
      Q v = pairing(x, varpi(S.n, s));
      keep = keep && (dir == Direction::above ? v > 0 : v < 0);
    }
    p.kept_by_truncation = keep;
  }
  return pieces;
}

Q evaluate_character(const Weight& x, const std::vector<Q>& gamma) {
  int n = x.rank();
  check_gamma(n, gamma);
  if (!x.is_integral()) throw std::invalid_argument("weight is not integral");
  Q nu = gamma[0] * gamma[2 * n - 1];
  if (n == 0) nu = 1;
  Q v = qpow(nu, x.doubled[0] / 2);
  for (int i = 1; i <= n; ++i) v *= qpow(gamma[i - 1], x.doubled[i] / 2);
  return v;
}

Q weyl_character_trace(const Weight& lambda, const std::vector<Q>& gamma) {
  int n = lambda.rank();
  check_gamma(n, gamma);
  check_lambda(lambda);
  auto pos = positive_roots(n);
  Q den = delta_B(pos, gamma);
  Q num = 0;
  for_each_weyl(n, [&](const SignedPermutation& w) {
    Weight x = act(w, lambda);
    for (const auto& a : inversion_set(w)) x = x - a;
    num += weyl_sign(w) * evaluate_character(x, gamma);
  });
  return num / den;
}

Q weyl_character_trace_borels(const Weight& lambda, const std::vector<Q>& gamma) {
  int n = lambda.rank();
  check_gamma(n, gamma);
  check_lambda(lambda);
  auto pos = positive_roots(n);
  Q total = 0;
  for_each_weyl(n, [&](const SignedPermutation& w) {
    std::vector<Weight> wpos;
    for (const auto& a : pos) wpos.push_back(act(w, a));
    total += evaluate_character(act(w, lambda), gamma) / delta_B(wpos, gamma);
  });
  return total;
}

std::map<Weight, long long> weight_multiplicities(const std::vector<Weight>& positive,
                                                  const std::vector<Weight>& simple,
                                                  const Weight& highest) {
  int n = highest.rank();
  Weight rh = half_sum(positive, n);
  Q top = dot(highest + rh, highest + rh);
  std::map<Weight, long long> mult{{highest, 1}};
  std::vector<Weight> level{highest};
  for (int h = 1; !level.empty(); ++h) {
    std::vector<Weight> cand;
    for (const auto& mu : level)
      for (const auto& a : simple) cand.push_back(mu - a);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<Weight> next;
    for (const auto& mu : cand) {
      Q num = 0;
      for (const auto& a : positive)
        for (int k = 1; k <= h; ++k) {
          Weight up = mu + a * k;
          auto it = mult.find(up);
          if (it != mult.end()) num += dot(up, a) * make_q(it->second, 1);
        }
      num *= 2;
      Q den = top - dot(mu + rh, mu + rh);
      if (den == 0) {
        if (num != 0) throw std::logic_error("Freudenthal recursion inconsistent");
        continue;
      }
      Q m = num / den;
      if (m < 0 || m.get_den() != 1) throw std::logic_error("non-integral multiplicity");
      if (m == 0) continue;
      mult[mu] = m.get_num().get_si();
      next.push_back(mu);
    }
    level = std::move(next);
  }
  return mult;
}

std::vector<Weight> levi_simple_roots(const ParabolicIndex& S) {
  std::vector<Weight> out;
  for (const auto& a : simple_roots(S.n))
    if (S.in_levi(a)) out.push_back(a);
  return out;
}

Q character_by_multiplicities(const Weight& lambda, const std::vector<Q>& gamma) {
  check_lambda(lambda);
  int n = lambda.rank();
  Q total = 0;
  for (const auto& [mu, m] : weight_multiplicities(positive_roots(n), simple_roots(n), lambda))
    total += evaluate_character(mu, gamma) * make_q(m, 1);
  return total;
}

std::vector<std::map<Weight, long long>> graded_weights(const std::vector<CohomologyPiece>& pieces,
                                                        int max_degree) {
  std::vector<std::map<Weight, long long>> out(max_degree + 1);
  for (const auto& p : pieces) {
    auto mult = weight_multiplicities(p.rep_of.levi_positive_roots(), levi_simple_roots(p.rep_of),
                                      p.kostant_weight);
    for (const auto& [mu, m] : mult) out.at(p.degree)[mu] += m;
  }
  return out;
}

}  // namespace gsp
