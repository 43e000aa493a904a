#include <doctest.h>

#include <set>

#include "knots/families.hpp"

using namespace knots;
using namespace knots::families;

namespace {

std::set<std::string> boundary_strs(const FamilyDataset& d) {
  std::set<std::string> out;
  for (const auto& a : d.boundary_extra) out.insert(a.slope.str());
  return out;
}

}  // namespace

TEST_CASE("figure-eight table") {
  FamilyDataset d = alternating_slopes(FigureEight{});
  CHECK(d.display_text() ==
        "[(-4, 'T'), (-3, 'S'), (-2, 'S'), (-1, 'S'), (0, 'T'), (1, 'S'), "
        "(2, 'S'), (3, 'S'), (4, 'T')]");
  CHECK(d.boundary_complete);
  CHECK(d.boundary_extra.empty());  // all HT slopes are already toroidal
}

TEST_CASE("twist knot tables are n-independent") {
  for (long long n : {3, 4, 5, 6, -3, -4}) {
    FamilyDataset plus = alternating_slopes(TwistKnot{n, 1});
    CHECK(plus.display_text() ==
          "[(-4, 'T'), (-3, 'S'), (-2, 'S'), (-1, 'S'), (0, 'T')]");
    FamilyDataset minus = alternating_slopes(TwistKnot{n, -1});
    CHECK(minus.display_text() ==
          "[(0, 'T'), (1, 'S'), (2, 'S'), (3, 'S'), (4, 'T')]");
  }
  CHECK_THROWS_AS(alternating_slopes(TwistKnot{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(alternating_slopes(TwistKnot{-2, -1}),
                  std::invalid_argument);
}

TEST_CASE("two-bridge single toroidal slopes") {
  FamilyDataset both_even = alternating_slopes(TwoBridgeKnot{4, 4});
  CHECK(both_even.display_text() == "[(0, 'T')]");
  CHECK(both_even.boundary_complete);
  CHECK(boundary_strs(both_even) == std::set<std::string>{"-8", "8"});

  FamilyDataset odd_even = alternating_slopes(TwoBridgeKnot{3, 4});
  CHECK(odd_even.display_text() == "[(8, 'T')]");
  CHECK(boundary_strs(odd_even) == std::set<std::string>{"0", "14"});

  CHECK(alternating_slopes(TwoBridgeKnot{3, -4}).display_text() ==
        "[(-8, 'T')]");
  CHECK(alternating_slopes(TwoBridgeKnot{5, 4}).display_text() ==
        "[(8, 'T')]");

  CHECK_THROWS_AS(alternating_slopes(TwoBridgeKnot{2, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(alternating_slopes(TwoBridgeKnot{3, 5}),
                  std::invalid_argument);  // both odd: a link
  CHECK_THROWS_WITH_AS(alternating_slopes(TwoBridgeKnot{4, 3}),
                       doctest::Contains("K[-3,-4]"), std::invalid_argument);
}

TEST_CASE("pretzel parity patterns") {
  FamilyDataset mixed = alternating_slopes(Pretzel{3, 5, -2});
  CHECK(mixed.display_text() == "[(16, 'T')]");
  CHECK_FALSE(mixed.boundary_complete);
  CHECK(boundary_strs(mixed) == std::set<std::string>{"0"});  // longitude

  FamilyDataset all_odd = alternating_slopes(Pretzel{3, 5, 7});
  CHECK(all_odd.display_text() == "[(0, 'T')]");

  CHECK(alternating_slopes(Pretzel{-5, 3, -2}).display_text() ==
        "[(-4, 'T')]");

  CHECK_THROWS_AS(alternating_slopes(Pretzel{1, 3, 5}), std::invalid_argument);
  CHECK_THROWS_AS(alternating_slopes(Pretzel{2, 4, 5}), std::invalid_argument);
}

TEST_CASE("Montesinos tables from the listed cases") {
  CHECK(montesinos_slopes(Pretzel{-2, 3, 9}).display_text() ==
        "[(22, 'S'), (67/3, 'NI'), (23, 'S'), (24, 'T')]");
  CHECK(montesinos_slopes(Pretzel{-2, 3, 11}).display_text() ==
        "[(26, 'S'), (105/4, 'NI'), (27, 'S'), (28, 'T')]");
  CHECK(montesinos_slopes(Pretzel{-2, 3, -3}).display_text() ==
        "[(-8/3, 'NI'), (-2, 'S'), (-1, 'S'), (0, 'T')]");
  CHECK(montesinos_slopes(Pretzel{-2, 3, 7}).display_text() ==
        "[(16, 'T'), (17, 'S'), (18, 'S'), (37/2, 'T'), (19, 'S'), "
        "(20, 'T')]");
  CHECK(montesinos_slopes(Pretzel{-3, 3, 7}).display_text() ==
        "[(0, 'T'), (1, 'T')]");
  CHECK(montesinos_slopes(Pretzel{3, -3, 7}).display_text() ==
        "[(0, 'T'), (1, 'T')]");  // permutation invariance
  Montesinos m{{Rat(-1, 2), Rat(1, 3), Rat(2, 5)}};
  CHECK(montesinos_slopes(m).display_text() ==
        "[(8/3, 'NI'), (3, 'S'), (4, 'S'), (5, 'S'), (6, 'T')]");
  Montesinos m2{{Rat(2, 5), Rat(-1, 2), Rat(1, 3)}};
  CHECK(montesinos_slopes(m2).display_text() ==
        montesinos_slopes(m).display_text());
  Montesinos m3{{Rat(-2, 3), Rat(1, 3), Rat(1, 4)}};
  CHECK(montesinos_slopes(m3).display_text() == "[(12, 'T'), (13, 'T')]");

  // P(-2,3,2n+1) with n > 3 also carries the boundary slopes 0 and 16.
  auto extras = boundary_strs(montesinos_slopes(Pretzel{-2, 3, 9}));
  CHECK(extras.count("0") == 1);
  CHECK(extras.count("16") == 1);
}

TEST_CASE("Montesinos inputs outside the listed cases") {
  CHECK_THROWS_AS(montesinos_slopes(Pretzel{-3, 3, 9}),
                  std::invalid_argument);
  Montesinos unknown{{Rat(-1, 2), Rat(2, 7), Rat(2, 5)}};
  CHECK_THROWS_WITH_AS(montesinos_slopes(unknown),
                       doctest::Contains("not in the listed"),
                       std::invalid_argument);
  Montesinos long_one{{Rat(1, 2), Rat(1, 3), Rat(1, 5), Rat(1, 7)}};
  FamilyDataset d = montesinos_slopes(long_one);
  CHECK(d.exceptional.empty());  // length >= 4: no exceptional surgeries
}

TEST_CASE("family routing picks the right theorem") {
  // Listed Montesinos pretzels go to the case tables.
  CHECK(family_dataset(Pretzel{-3, 3, 3}).display_text() ==
        "[(0, 'T'), (1, 'S'), (2, 'T')]");
  // Unlisted pretzels fall back to the alternating patterns.
  CHECK(family_dataset(Pretzel{3, 5, -2}).display_text() == "[(16, 'T')]");
  // Unit-numerator Montesinos triples are pretzels.
  Montesinos m{{Rat(-1, 2), Rat(1, 3), Rat(1, 7)}};
  CHECK(family_dataset(m).display_text() ==
        family_dataset(Pretzel{-2, 3, 7}).display_text());
}

TEST_CASE("link component tables") {
  CHECK(link_component_slopes(ContFrac({5, 5})).display_text() ==
        "[(-1, 'T'), (0, 'S'), (1, 'T')]");
  CHECK(link_component_slopes(ContFrac({5, -7})).display_text() ==
        "[(-7, 'T'), (-6, 'S'), (-5, 'T')]");  // w=2, u=-4
  CHECK(link_component_slopes(ContFrac({3, -3})).display_text() ==
        "[(-4, 'T'), (-3, 'S'), (-2, 'S'), (-1, 'S'), (0, 'T')]");
  CHECK(link_component_slopes(ContFrac({3, 3})).display_text() ==
        "[(-2, 'T'), (-1, 'S'), (0, 'S'), (1, 'S'), (2, 'T')]");
  CHECK(link_component_slopes(ContFrac({3, 7})).display_text() ==
        "[(1, 'T'), (2, 'S'), (3, 'S'), (4, 'T')]");
  CHECK(link_component_slopes(ContFrac({3, -7})).display_text() ==
        "[(-6, 'T'), (-5, 'S'), (-4, 'S'), (-3, 'T')]");
}

TEST_CASE("link component table matches the twist-knot table") {
  FamilyDataset link = link_component_slopes(ContFrac({3, -3}));
  FamilyDataset twist = alternating_slopes(TwistKnot{3, 1});
  REQUIRE(link.exceptional.size() == twist.exceptional.size());
  for (size_t i = 0; i < link.exceptional.size(); ++i) {
    CHECK(link.exceptional[i].slope == twist.exceptional[i].slope);
    CHECK(link.exceptional[i].tag == twist.exceptional[i].tag);
  }
}

TEST_CASE("toroidal-only triples") {
  CHECK(link_component_slopes(ContFrac({4, 3, 4})).display_text() ==
        "[(-4, 'T')]");
  CHECK(link_component_slopes(ContFrac({2, 3, -2})).display_text() ==
        "[(0, 'T')]");  // w=1, u=-1
  CHECK(link_component_slopes(ContFrac({4, -2, 4})).display_text() ==
        "[(-4, 'T')]");
  // Seifert-admitting triples are rejected toward the two-term form.
  CHECK_THROWS_WITH_AS(link_component_slopes(ContFrac({4, 1, 4})),
                       doctest::Contains("Seifert"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(link_component_slopes(ContFrac({4, -1, 6})),
                       doctest::Contains("Seifert"), std::invalid_argument);
}

TEST_CASE("link component rejections") {
  CHECK_THROWS_AS(link_component_slopes(ContFrac({3, 1})),
                  std::invalid_argument);  // u = 0
  CHECK_THROWS_AS(link_component_slopes(ContFrac({3, -1})),
                  std::invalid_argument);  // u = -1
  CHECK_THROWS_WITH_AS(link_component_slopes(ContFrac({5, 3})),
                       doctest::Contains("L[3,"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(link_component_slopes(ContFrac({5, -3})),
                       doctest::Contains("L[3,"), std::invalid_argument);
  CHECK_THROWS_AS(link_component_slopes(ContFrac({4, 6})),
                  std::invalid_argument);
  CHECK_THROWS_AS(link_component_slopes(ContFrac({2, 3, 4, 5})),
                  std::invalid_argument);
}

TEST_CASE("magic manifold filling parameters") {
  auto a = magic_filling_params(-2, Slope(0));
  CHECK(a.chain_slope == Slope(1));
  CHECK(a.filling_slope == Slope(1));
  CHECK(a.exceptional);  // the u = -2 extra case

  auto b = magic_filling_params(3, Slope(4));
  CHECK(b.chain_slope == Slope::normalize(-1, 4));
  CHECK(b.filling_slope == Slope(0));
  CHECK(b.exceptional);

  auto c = magic_filling_params(1, Slope(-2));
  CHECK(c.chain_slope == Slope::normalize(-1, 2));
  CHECK(c.filling_slope == Slope(-4));
  CHECK(c.exceptional);  // the u = 1 extra case

  auto d = magic_filling_params(-2, Slope(2));  // r - u - 1 = 3: not listed
  CHECK_FALSE(d.exceptional);
  auto e = magic_filling_params(-2, Slope(1));  // r - u - 1 = 2: not listed
  CHECK_FALSE(e.exceptional);

  CHECK_THROWS_AS(magic_filling_params(0, Slope(1)), std::invalid_argument);
  CHECK_THROWS_AS(magic_filling_params(-1, Slope(1)), std::invalid_argument);
  CHECK_THROWS_AS(magic_filling_params(3, Slope::meridian()),
                  std::invalid_argument);
}

TEST_CASE("magic filling marks exactly the component's exceptional slopes") {
  for (long long u : {-4, -3, -2, 1, 2, 3, 5}) {
    FamilyDataset table = link_component_slopes(ContFrac({3, 2 * u + 1}));
    std::set<std::string> expected;
    for (const auto& s : table.exceptional) expected.insert(s.slope.str());
    std::set<std::string> flagged;
    for (long long r = -30; r <= 30; ++r)
      if (magic_filling_params(u, Slope(r)).exceptional)
        flagged.insert(Slope(r).str());
    CHECK(flagged == expected);
  }
}

TEST_CASE("torti-rational transfer") {
  // Whitehead fraction: linking number zero, slopes unchanged.
  for (long long n : {4, 5, 6, 7, 8}) {
    FamilyDataset d = torti_rational_slopes(Rat(3, 8), n);
    CHECK(d.display_text() ==
          "[(-4, 'T'), (-3, 'S'), (-2, 'S'), (-1, 'S'), (0, 'T')]");
  }
  // [5,5]: l = 5 from the diagram, shift n*25.
  long long l = linking_number(ContFrac({5, 5}));
  CHECK(l == 5);
  FamilyDataset d = torti_rational_slopes(Rat(5, 26), 4);
  CHECK(d.display_text() == "[(99, 'T'), (100, 'S'), (101, 'T')]");

  // Tags survive the shift.
  FamilyDataset base = link_component_slopes(ContFrac({5, 5}));
  REQUIRE(base.exceptional.size() == d.exceptional.size());
  for (size_t i = 0; i < d.exceptional.size(); ++i)
    CHECK(base.exceptional[i].tag == d.exceptional[i].tag);

  CHECK_THROWS_AS(torti_rational_slopes(Rat(3, 8), 3), std::invalid_argument);
  CHECK_THROWS_AS(torti_rational_slopes(Rat(2, 5), 5), std::invalid_argument);
}

TEST_CASE("torti-rational matches presentations and mirrors") {
  // 21/26 is the inverse presentation of 5/26; same knot, same table.
  CHECK(torti_rational_slopes(Rat(21, 26), 4).display_text() ==
        torti_rational_slopes(Rat(5, 26), 4).display_text());
  // -5/26 is the mirror link; component slopes negate, shift is unchanged.
  FamilyDataset m = torti_rational_slopes(Rat(-5, 26), 4);
  CHECK(m.display_text() == "[(99, 'T'), (100, 'S'), (101, 'T')]");
}

TEST_CASE("descriptor parsing") {
  CHECK(family_dataset(parse_family("fig8")).label == "figure-eight");
  CHECK(family_dataset(parse_family("twist:3,+")).label == "K[6,2]");
  CHECK(family_dataset(parse_family("twobridge:4,4")).label == "K[4,4]");
  CHECK(family_dataset(parse_family("pretzel:-2,3,9")).label == "P(-2,3,9)");
  CHECK(family_dataset(parse_family("montesinos:-1/2,1/3,2/5")).label ==
        "M(-1/2,1/3,2/5)");
  CHECK_THROWS_AS(parse_family("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("twist:3"), std::invalid_argument);
}

TEST_CASE("mirrored datasets") {
  FamilyDataset d = montesinos_slopes(Pretzel{-2, 3, 9});
  FamilyDataset m = mirrored(d);
  CHECK(m.display_text() ==
        "[(-24, 'T'), (-23, 'S'), (-67/3, 'NI'), (-22, 'S')]");
  FamilyDataset back = mirrored(m);
  CHECK(back.display_text() == d.display_text());
}
