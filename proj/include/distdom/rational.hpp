#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace distdom {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

// Parses "p", "p/q" or a decimal literal such as "0.25".
Rational parse_rational(const std::string& text);

inline std::int64_t ceil_to_int(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

inline std::int64_t floor_to_int(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

}  // namespace distdom
