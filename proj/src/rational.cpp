#include "hodge/rational.hpp"

#include <cctype>

#include "hodge/errors.hpp"

namespace hodge {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational", 0);
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool slash = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/' && !slash && j > i && j + 1 < s.size()) {
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw ParseError("malformed rational '" + s + "'", j);
    }
  }
  if (i == s.size()) throw ParseError("malformed rational '" + s + "'", i);
  Rational q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw ParseError("malformed rational", 0);
  if (q.get_den() == 0) throw ParseError("zero denominator", 0);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace hodge
