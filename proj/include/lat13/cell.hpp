// Conversion between crystallographic cell parameters (a,b,c in angstroms,
// angles in degrees) and the Gram matrix.

#pragma once

#include "lat13/types.hpp"

#include <cmath>

namespace lat13 {

struct CellParameters {
  double a = 1, b = 1, c = 1;
  double alpha = 90, beta = 90, gamma = 90; // degrees

  bool valid() const {
    return a > 0 && b > 0 && c > 0 && alpha > 0 && alpha < 180 && beta > 0 &&
           beta < 180 && gamma > 0 && gamma < 180;
  }
};

// cos of an angle in degrees. The handful of angles with rational cosine are
// returned exactly so that exact-mode Gram matrices of right-angled and
// hexagonal cells carry no binary noise.
template <class S>
S cos_degrees(double deg) {
  if (deg == 90) return S(0);
  if (deg == 60) return S(1) / S(2);
  if (deg == 120) return S(-1) / S(2);
  if (deg == 0) return S(1);
  if (deg == 180) return S(-1);
  return S(std::cos(deg * M_PI / 180.0));
}

template <class S>
Sym3<S> gram_from_cell(const CellParameters& cell) {
  if (!cell.valid())
    throw NotPositiveDefinite("invalid cell parameters");
  const S a(cell.a), b(cell.b), c(cell.c);
  Sym3<S> s = make_sym3<S>(a * a, b * b, c * c,
                           a * b * cos_degrees<S>(cell.gamma),
                           a * c * cos_degrees<S>(cell.beta),
                           b * c * cos_degrees<S>(cell.alpha));
  require_positive_definite(s);
  return s;
}

// Angles are extracted in double precision regardless of scalar mode.
template <class S>
CellParameters cell_from_gram(const Sym3<S>& s) {
  require_positive_definite(s);
  CellParameters cell;
  cell.a = std::sqrt(to_double(s(0, 0)));
  cell.b = std::sqrt(to_double(s(1, 1)));
  cell.c = std::sqrt(to_double(s(2, 2)));
  const double rad_to_deg = 180.0 / M_PI;
  cell.alpha = std::acos(to_double(s(1, 2)) / (cell.b * cell.c)) * rad_to_deg;
  cell.beta = std::acos(to_double(s(0, 2)) / (cell.a * cell.c)) * rad_to_deg;
  cell.gamma = std::acos(to_double(s(0, 1)) / (cell.a * cell.b)) * rad_to_deg;
  return cell;
}

} // namespace lat13
