#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace vfalg {

using Rational = mpq_class;
using Integer = mpz_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "a" or "a/b", always canonical.
inline std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text);

}  // namespace vfalg
