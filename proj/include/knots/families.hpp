#pragma once

#include <string>
#include <variant>
#include <vector>

#include "knots/certs.hpp"
#include "knots/contfrac.hpp"
#include "knots/rational.hpp"
#include "knots/slope.hpp"

namespace knots::families {

// Annotation on a family slope. Toroidal/Seifert entries are exceptional
// surgery slopes; NonIntegral marks a non-integral boundary slope; Boundary
// marks an auxiliary boundary slope kept out of the printed table.
enum class Tag { Toroidal, Seifert, NonIntegral, Boundary };

struct AnnotatedSlope {
  Slope slope;
  Tag tag;
  CertSet certs;  // boundary-slope provenance, when the entry is a boundary slope
};

struct FamilyDataset {
  std::string label;
  std::vector<AnnotatedSlope> exceptional;     // strictly increasing, T/S tags
  std::vector<AnnotatedSlope> boundary_extra;  // NonIntegral and Boundary tags
  bool boundary_complete = false;
  bool hyperbolic_assumed = true;

  // The annotated tuple form used in the data files, e.g.
  // [(16, 'T'), (17, 'S'), (18, 'S'), (37/2, 'T'), (19, 'S'), (20, 'T')].
  // Merges exceptional entries with non-integral boundary entries, ascending;
  // auxiliary Boundary entries are not displayed.
  std::string display_text() const;
};

struct FigureEight {};
struct TwistKnot {
  long long n;  // K_{[2n, sign*2]}, |n| > 2
  int sign;     // +1 or -1
};
struct TwoBridgeKnot {
  long long b1, b2;  // K_{[b1, b2]}, |b1|, |b2| > 2
};
struct Pretzel {
  long long q1, q2, q3;  // q_j not in {0, +-1}
};
struct Montesinos {
  std::vector<Rat> tangles;  // M(p1/q1, ..., pk/qk)
};

using KnotFamily =
    std::variant<FigureEight, TwistKnot, TwoBridgeKnot, Pretzel, Montesinos>;

// Exceptional-slope tables for the alternating families: figure-eight, twist
// knots K_{[2n,+-2]}, two-bridge K_{[b1,b2]} (both even, or b1 odd and b2
// even), and pretzels P(q1,q2,q3) (all odd, or one even). Boundary data is
// completed with the Hatcher-Thurston slopes for two-bridge inputs and the
// longitude for pretzels.
FamilyDataset alternating_slopes(const KnotFamily& k);

// The sixteen non-alternating Montesinos cases with non-trivial exceptional
// surgeries. Montesinos inputs of length >= 4 yield an empty dataset (no
// non-trivial exceptional slopes); anything else outside the sixteen cases is
// rejected.
FamilyDataset montesinos_slopes(const KnotFamily& k);

// Exceptional slopes on one component of the two-bridge link L_cf, for the
// families [2w+1, 2u+1] (w >= 2, u >= 2 or u <= -3), [3, 2u+1] (u != 0, -1),
// and the toroidal-only triples [2w, v, 2u] not equivalent to a
// Seifert-admitting family.
FamilyDataset link_component_slopes(const ContFrac& cf);

// The chain-link ("magic manifold") filling parameters for L_{[3,2u+1]}(r,*):
// the filling pair (-1/(u+1), r-u-1), plus whether that filling is
// exceptional: r-u-1 in {-3,-2,-1,0}, with the extra cases r-u-1 = 2 at
// u = -2 and r-u-1 = -4 at u = 1.
struct MagicFilling {
  Slope chain_slope;
  Slope filling_slope;
  bool exceptional;
};
MagicFilling magic_filling_params(long long u, const Slope& r);

// Slopes of the torti-rational knot K(f; n), n >= 4, f with even denominator:
// the component slopes of L_f shifted by n*l^2, tags preserved.
FamilyDataset torti_rational_slopes(const Rat& f, long long n);

// Descriptor grammar used by the CLI: fig8 | twist:n,+|- | twobridge:b1,b2 |
// pretzel:q1,q2,q3 | montesinos:r1,r2,... (as fractions).
KnotFamily parse_family(const std::string& descriptor);

// Routes to alternating_slopes or montesinos_slopes by variant and parameters.
FamilyDataset family_dataset(const KnotFamily& k);

// Negates every slope in the dataset (mirror knot), keeping tags.
FamilyDataset mirrored(const FamilyDataset& d);

}  // namespace knots::families
