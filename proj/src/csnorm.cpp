#include "knots/csnorm.hpp"

#include <stdexcept>

namespace knots::csnorm {

NormData NormData::make(Rat s, Rat m, Rat t, Slope r_M, long long n,
                        Parity parity) {
  if (s < Rat(4))
    throw std::invalid_argument("NormData: s >= 4 required for a hyperbolic "
                                "knot");
  if (m < s) throw std::invalid_argument("NormData: s <= m required");
  if (t < s || Rat(3) * s < t)
    throw std::invalid_argument("NormData: s <= t <= 3s required");
  if (r_M.is_meridian())
    throw std::invalid_argument("NormData: r_M cannot be the meridian");
  if (parity == Parity::HalfInteger && n % 2 == 0)
    throw std::invalid_argument("NormData: half-integer slope needs odd n");
  return NormData{s, m, t, r_M, n, parity};
}

Rat finite_norm_bound(const Rat& s) {
  if (s < Rat(4)) throw std::invalid_argument("finite_norm_bound: s >= 4");
  Rat two_s = Rat(2) * s;
  Rat s_plus_8 = s + Rat(8);
  return two_s < s_plus_8 ? s_plus_8 : two_s;
}

Rat width_at_one(const NormData& d) {
  Rat rM = d.r_M.to_rat();
  if (d.parity == Parity::Integer) {
    if (!(Rat(d.n) > rM))
      throw std::invalid_argument("width_at_one: needs n > r_M (mirror the "
                                  "data for the other side)");
    return Rat(2) * (Rat(d.n) - rM) - (Rat(2) / d.m) * (d.t - d.s);
  }
  if (!(Rat(d.n, 2) > rM))
    throw std::invalid_argument("width_at_one: needs n/2 > r_M (mirror the "
                                "data for the other side)");
  return (Rat(d.n) - Rat(2) * rM) - (d.t - Rat(2) * d.s) / d.m;
}

bool lattice_contradiction(const NormData& d) {
  return width_at_one(d) > Rat(1);
}

bool finite_slope_interval_check(const Slope& t_slope, const Slope& r_m,
                                 const Slope& r_M) {
  if (t_slope.is_meridian() || r_m.is_meridian() || r_M.is_meridian())
    throw std::invalid_argument(
        "finite_slope_interval_check: meridian rejected");
  if (r_M < r_m)
    throw std::invalid_argument("finite_slope_interval_check: r_m <= r_M");
  Rat t = t_slope.to_rat();
  Rat half5(5, 2);
  return r_m.to_rat() - half5 <= t && t <= r_M.to_rat() + half5;
}

}  // namespace knots::csnorm
