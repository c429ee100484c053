// Exact rational scalar used throughout the library.
//
// All reduction and enumeration code is templated on the scalar type and is
// instantiated either with Rational (exact, the default) or with double
// (tolerance-based). Rational is GMP's mpq_class; this header supplies the
// Eigen glue and the few numeric helpers (decimal parsing, integer square
// roots) that the enumeration code needs.

#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lat13 {

using Rational = mpq_class;
using BigInt = mpz_class;

} // namespace lat13

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 80,
  };
};

} // namespace Eigen

namespace lat13 {

inline int sign(const Rational& x) { return sgn(x); }

// mpq_class(num, den) does not canonicalize; this does
inline Rational frac(long long num, long long den) {
  Rational r(static_cast<long>(num), 1);
  r /= Rational(static_cast<long>(den), 1);
  return r;
}

inline Rational rational_abs(const Rational& x) { return abs(x); }

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

// floor(x) as an arbitrary-precision integer
inline BigInt rational_floor(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

inline BigInt rational_ceil(const Rational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

// largest k >= 0 with k^2 <= x; x must be >= 0
inline BigInt floor_sqrt(const Rational& x) {
  if (sgn(x) < 0) throw std::domain_error("floor_sqrt of negative value");
  BigInt k = sqrt(rational_floor(x));
  while (Rational(k + 1) * Rational(k + 1) <= x) ++k;
  while (k > 0 && Rational(k) * Rational(k) > x) --k;
  return k;
}

// Parses integers, fractions ("p/q") and decimal/scientific notation
// ("-1.25e-3") into an exact rational.
inline Rational parse_rational(const std::string& text) {
  const auto bad = [&]() -> Rational {
    throw std::invalid_argument("not a number: '" + text + "'");
  };
  std::size_t i = 0, n = text.size();
  while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
  std::size_t end = n;
  while (end > i && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
  if (i == end) return bad();

  const std::string body = text.substr(i, end - i);
  if (body.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(body, 10) != 0) return bad();
    if (r.get_den() == 0) return bad();
    r.canonicalize();
    return r;
  }

  // [sign] digits [. digits] [ (e|E) [sign] digits ]
  std::size_t p = 0;
  bool neg = false;
  if (p < body.size() && (body[p] == '+' || body[p] == '-')) {
    neg = body[p] == '-';
    ++p;
  }
  std::string digits;
  long frac_digits = 0, exponent = 0;
  bool any = false;
  while (p < body.size() && std::isdigit(static_cast<unsigned char>(body[p]))) {
    digits += body[p++];
    any = true;
  }
  if (p < body.size() && body[p] == '.') {
    ++p;
    while (p < body.size() && std::isdigit(static_cast<unsigned char>(body[p]))) {
      digits += body[p++];
      ++frac_digits;
      any = true;
    }
  }
  if (!any) return bad();
  if (p < body.size() && (body[p] == 'e' || body[p] == 'E')) {
    ++p;
    bool eneg = false;
    if (p < body.size() && (body[p] == '+' || body[p] == '-')) {
      eneg = body[p] == '-';
      ++p;
    }
    if (p == body.size()) return bad();
    long e = 0;
    while (p < body.size() && std::isdigit(static_cast<unsigned char>(body[p]))) {
      e = e * 10 + (body[p++] - '0');
      if (e > 100000) return bad();
    }
    exponent = eneg ? -e : e;
  }
  if (p != body.size()) return bad();

  BigInt num(digits.empty() ? "0" : digits);
  if (neg) num = -num;
  long ten_power = exponent - frac_digits;
  Rational r(num);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10,
                static_cast<unsigned long>(ten_power < 0 ? -ten_power : ten_power));
  if (ten_power >= 0)
    r *= Rational(scale);
  else
    r /= Rational(scale);
  r.canonicalize();
  return r;
}

// "p/q", or just "p" for integers
inline std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline std::string to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// number of bits in the numerators/denominators; the Selling iteration cap
// scales with this
inline std::size_t bit_size(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
inline std::size_t bit_size(double) { return 64; }

} // namespace lat13
