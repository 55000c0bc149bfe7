#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "kmw/errors.hpp"

namespace kmw {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_nonneg_integer(const Rational& r) {
  return is_integer(r) && sgn(r) >= 0;
}

/// Parses "p", "-p" or "p/q" (decimal digits only) into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  auto slash = body.find('/');
  bool ok = slash == std::string_view::npos
                ? digits(body)
                : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
  if (!ok) throw InputError("malformed rational '" + std::string(text) + "'");

  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw InputError("malformed rational '" + std::string(text) + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

/// Canonical lowest-terms form; integers print without a denominator.
inline std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

}  // namespace kmw
