#include "distdom/rational.hpp"

#include "distdom/error.hpp"

namespace distdom {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  auto dot = text.find('.');
  try {
    if (dot == std::string::npos) {
      Rational q(text, 10);
      q.canonicalize();
      return q;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-") throw InputError("bad decimal literal '" + text + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(text.size() - dot - 1));
    Rational q(mpz_class(digits, 10), den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("bad rational literal '" + text + "'");
  }
}

}  // namespace distdom
