#include "gsp/rational.hpp"

#include <stdexcept>

namespace gsp {

std::string to_string(const Q& q) { return q.get_str(); }

Q parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");
  Q q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

Q qpow(const Q& base, long long e) {
  if (e == 0) return Q(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("zero to a negative power");
    return Q(0);
  }
  Q b = e < 0 ? Q(1) / base : base;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Q r(1);
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

mpz_class denominator_lcm(const std::vector<Q>& v) {
  mpz_class l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  return l;
}

}  // namespace gsp
