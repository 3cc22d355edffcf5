#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gsp {

using Q = mpq_class;

std::string to_string(const Q& q);
Q parse_rational(std::string_view text);

inline Q make_q(long long num, long long den = 1) {
  Q q{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

// two sides of an identity
struct Sides {
  Q lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

// exact integer power, negative exponents allowed for nonzero base
Q qpow(const Q& base, long long e);

// least common multiple of the denominators
mpz_class denominator_lcm(const std::vector<Q>& v);

}  // namespace gsp
