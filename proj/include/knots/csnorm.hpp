#pragma once

#include "knots/rational.hpp"
#include "knots/slope.hpp"

namespace knots::csnorm {

enum class Parity { Integer, HalfInteger };

// Norm data for the finite-slope width argument: s the minimal norm, m the
// meridian norm, t the norm of the filling class, r_M the greatest finite
// boundary slope, n the filling numerator (slope n or n/2 by parity).
// Invariants: s >= 4, s <= m, s <= t <= 3s; half-integer parity needs n odd.
struct NormData {
  Rat s, m, t;
  Slope r_M;
  long long n;
  Parity parity;

  static NormData make(Rat s, Rat m, Rat t, Slope r_M, long long n,
                       Parity parity);
};

// Norm bound for a finite filling slope: max(2s, s+8); s >= 4 required.
Rat finite_norm_bound(const Rat& s);

// Width of the norm triangle at height one:
//   integer parity:      2(n - r_M) - (2/m)(t - s)
//   half-integer parity: (n - 2 r_M) - (t - 2s)/m
// Requires the filling slope to exceed r_M (mirror for the other side).
Rat width_at_one(const NormData& d);

// Whether the height-one section exceeds length one, forcing an interior
// lattice point of the fundamental polygon (the contradiction).
bool lattice_contradiction(const NormData& d);

// Finite slopes land within 5/2 of the extreme finite boundary slopes:
// r_m - 5/2 <= t <= r_M + 5/2.
bool finite_slope_interval_check(const Slope& t_slope, const Slope& r_m,
                                 const Slope& r_M);

}  // namespace knots::csnorm
