// Comparison policy for the two scalar modes.
//
// Rational comparisons are exact. double comparisons collapse values within
// a global tolerance; every predicate in the library goes through these
// helpers so the tolerance is applied uniformly.

#pragma once

#include "lat13/rational.hpp"

#include <cmath>

namespace lat13 {

// process-wide comparison tolerance for the double instantiation
inline double& float_tolerance() {
  static double tol = 1e-9;
  return tol;
}

template <class Scalar>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  static int sign(const Rational& x) { return sgn(x); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool eq(const Rational& a, const Rational& b) { return a == b; }
  static const char* mode_name() { return "exact"; }
};

template <>
struct ScalarOps<double> {
  static constexpr bool exact = false;
  static int sign(double x) {
    const double tol = float_tolerance();
    if (x > tol) return 1;
    if (x < -tol) return -1;
    return 0;
  }
  static bool is_zero(double x) { return sign(x) == 0; }
  static bool eq(double a, double b) { return sign(a - b) == 0; }
  static const char* mode_name() { return "float"; }
};

// tolerance-aware orderings; in exact mode these are the plain comparisons
template <class S> bool lt(const S& a, const S& b) { return ScalarOps<S>::sign(a - b) < 0; }
template <class S> bool gt(const S& a, const S& b) { return ScalarOps<S>::sign(a - b) > 0; }
template <class S> bool leq(const S& a, const S& b) { return ScalarOps<S>::sign(a - b) <= 0; }
template <class S> bool geq(const S& a, const S& b) { return ScalarOps<S>::sign(a - b) >= 0; }

template <class S> S abs_value(const S& x) { return x < S(0) ? S(-x) : x; }

} // namespace lat13
