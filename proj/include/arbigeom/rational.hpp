#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arbigeom {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. Canonical form (lowest terms, positive
// denominator) is maintained by the backend on every operation, so
// equality and sign tests are exact decisions.
using Rational = boost::multiprecision::cpp_rational;

/// num/den with sign normalization; throws on a zero denominator.
inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// Exact conversion of a finite double via mantissa/exponent
/// decomposition. Every finite double is a dyadic rational, so no
/// rounding is involved.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite input");
  if (x == 0.0) return Rational(0);
  int exp2 = 0;
  const double mant = std::frexp(x, &exp2);  // x = mant * 2^exp2, |mant| in [1/2, 1)
  // mant * 2^53 is integral and within long long range for any double.
  const long long scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp2 -= 53;
  Integer num(scaled);
  if (exp2 >= 0) return Rational(num << exp2);
  return make_rational(num, Integer(1) << -exp2);
}

inline double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

/// max(|numerator|, denominator); the coefficient-size measure used by
/// pivot selection in the exact elimination routines.
inline Integer height(const Rational& r) {
  Integer n = numerator(r);
  if (n < 0) n = -n;
  const Integer& d = denominator(r);
  return n > d ? n : d;
}

/// "p" or "p/q", always reduced.
inline std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int's parser reads a leading '0' as an octal prefix, so digit
// strings must be stripped of leading zeros first.
inline Integer integer_from_digits(std::string_view digits) {
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Integer(0);
  return Integer(std::string(digits.substr(first)));
}

// [sign] digits [. digits] [e [sign] digits], parsed as an exact
// decimal fraction -- never routed through binary floating point.
inline Rational parse_decimal(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view es = s.substr(e + 1);
    s = s.substr(0, e);
    bool eneg = false;
    if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
      eneg = es.front() == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 6) throw std::invalid_argument("bad exponent");
    exp10 = std::stoll(std::string(es));
    if (eneg) exp10 = -exp10;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw std::invalid_argument("bad decimal");
    if (!ip.empty() && !all_digits(ip)) throw std::invalid_argument("bad decimal");
    if (!fp.empty() && !all_digits(fp)) throw std::invalid_argument("bad decimal");
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long long>(fp.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("bad decimal");
    digits = std::string(s);
  }
  Integer num = integer_from_digits(digits);
  if (neg) num = -num;
  Integer p10 = boost::multiprecision::pow(Integer(10),
                                           static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
  return exp10 >= 0 ? Rational(num * p10) : make_rational(num, p10);
}

}  // namespace detail

/// Accepts "p/q" fraction literals (integer p, q) and decimal literals
/// ("3", "-1.25", "2.5e-3"); both parse exactly.
inline Rational parse_rational(std::string_view text) {
  // trim
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("parse_rational: empty entry");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view ns = text.substr(0, slash), ds = text.substr(slash + 1);
    auto parse_int = [](std::string_view v) {
      bool neg = false;
      if (!v.empty() && (v.front() == '+' || v.front() == '-')) {
        neg = v.front() == '-';
        v.remove_prefix(1);
      }
      if (!detail::all_digits(v)) throw std::invalid_argument("parse_rational: bad integer");
      Integer i = detail::integer_from_digits(v);
      return neg ? Integer(-i) : i;
    };
    return make_rational(parse_int(ns), parse_int(ds));
  }
  return detail::parse_decimal(text);
}

/// C(n, k) as an exact big integer; 0 when k > n.
inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer r(1);
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: r equals C(n, i+1) after this step
  }
  return r;
}

}  // namespace arbigeom
