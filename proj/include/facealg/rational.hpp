#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace facealg {

  // Exact coefficients everywhere: the idempotent recursion divides by fiber
  // sizes, and every comparison in this library is an equality test.
  using Rational = mpq_class;
  using Integer  = mpz_class;

  inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    Rational r{Integer{std::to_string(num)}, Integer{std::to_string(den)}};
    r.canonicalize();
    return r;
  }

  inline Rational ratio(Integer const& num, Integer const& den) {
    Rational r{num, den};
    r.canonicalize();
    return r;
  }

  inline bool is_integer(Rational const& r) {
    return r.get_den() == 1;
  }

  inline std::string to_string(Rational const& r) {
    return r.get_str();
  }

}  // namespace facealg
