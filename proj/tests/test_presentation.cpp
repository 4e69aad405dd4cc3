#include <doctest.h>

#include "shadowpi/presentation.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const Presentation kZ2 = pres({"x", "y"}, {"x y x^-1 y^-1"});
const Presentation kZ = pres({"x"}, {});
const Presentation kTrefoil = pres({"x", "y"}, {"x y x y^-1 x^-1 y^-1"});
const Presentation kTorus24 = pres({"x", "y"}, {"x y x y x^-1 y^-1 x^-1 y^-1"});

RegionId region_with(const ShadowedPolyhedron& s, RegionLabel label) {
  for (RegionId r : s.map().internal_regions()) {
    if ((*s.labels)[r] == label) return r;
  }
  return kNone;
}

// X-shape with the gleams that equal c: digons 1, square -2.
ShadowedPolyhedron fig15_gl_c() {
  auto s = load_shadow("fig15.shadow.json");
  for (RegionId r : s.map().internal_regions()) s.twice_gleam[r] = (*s.labels)[r] == RegionLabel::B ? -4 : 2;
  return s;
}

}  // namespace

TEST_CASE("gamma of the square hung from a digon") {
  const auto s = load_shadow("fig15.shadow.json");
  const DiskMap& m = s.map();
  const RegionId square = region_with(s, RegionLabel::B);
  CutEntries cut;
  cut.emplace_back(square, m.edge(m.region(square).boundary[0]));
  for (RegionId r : m.internal_regions()) {
    if (r == square) continue;
    for (DartId d : m.region(r).boundary) {
      if (m.left_region(m.twin(d)) == m.outer_region()) {
        cut.emplace_back(r, m.edge(d));
        break;
      }
    }
  }
  const CuttingSystem cs = make_cut(m, cut);
  const SubSelection all = select_regions(s, Preset::Yabc);
  const CutLayout layout(s.diagram, cs);
  const MeridianGenerators gens(layout, all);
  // Only the square is in its subtree; gl - c = -1 - (-2) = 1.
  CHECK(gamma_word(s, all, cs, square) == gens.y(layout.cutting_point(square)->forward_piece));
  // Digon leaves: gl - c = 0 - 1 = -1.
  for (RegionId r : m.internal_regions()) {
    if (r == square || !layout.children(r).empty()) continue;
    CHECK(gamma_word(s, all, cs, r) == gens.y(layout.cutting_point(r)->forward_piece).inverse());
  }
  // The digon carrying the square: its own -1 then the square's +1.
  const RegionId carrier = cs.parent(m, square);
  const Word expected = gens.y(layout.cutting_point(square)->forward_piece) *
                        gens.y(layout.cutting_point(carrier)->forward_piece).inverse();
  CHECK(gamma_word(s, all, cs, carrier) == expected);
  // Unselected regions drop out.
  SubSelection ac = select_regions(s, Preset::Yac);
  CHECK(gamma_word(s, ac, cs, square).empty());
}

TEST_CASE("gamma is empty when gleams equal c") {
  const auto s = with_c_gleams(alternating(closed_curve(trefoil_polygon())));
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const CuttingSystem cs = random_cut(s.map(), seed);
    for (RegionId r : s.map().internal_regions()) CHECK(gamma_word(s, all_internal(s.map()), cs, r).empty());
  }
}

TEST_CASE("half-integer exponents are rejected") {
  auto s = load_shadow("fig15.shadow.json");
  const RegionId digon = region_with(s, RegionLabel::C);
  s.twice_gleam[digon] = 1;
  CHECK(error_of([&] { present(s, select_regions(s, Preset::Yabc), auto_cut(s.map())); }) ==
        ErrorCode::HalfIntegerExponent);
  SubSelection without = select_regions(s, Preset::Yabc);
  without.selected[digon] = 0;
  CHECK_NOTHROW(present(s, without, auto_cut(s.map())));
}

TEST_CASE("X-shape presentations") {
  const auto s = load_shadow("fig15.shadow.json");
  const CuttingSystem cs = auto_cut(s.map());
  CHECK(fingerprint(present(s, select_regions(s, Preset::Yabc), cs)) == fingerprint(kZ2));
  CHECK(fingerprint(present(s, select_regions(s, Preset::Yac), cs)) == fingerprint(kZ));
  CHECK(fingerprint(present_reduced(s, select_regions(s, Preset::Yabc), cs)) == fingerprint(kZ2));
}

TEST_CASE("trefoil divide presentations") {
  const auto s = load_shadow("fig16.shadow.json");
  const CuttingSystem cs = auto_cut(s.map());
  CHECK(fingerprint(present(s, select_regions(s, Preset::Yabc), cs)) == fingerprint(kTrefoil));
  CHECK(fingerprint(present(s, select_regions(s, Preset::Yac), cs)) == fingerprint(kZ));
}

TEST_CASE("generator naming") {
  const auto s = load_shadow("fig15.shadow.json");
  const Presentation p = present(s, select_regions(s, Preset::Yac), auto_cut(s.map()));
  bool seen_y = false;
  for (const auto& g : p.generators) {
    CHECK((g[0] == 'x' || g[0] == 'y'));
    if (g[0] == 'y') seen_y = true;
    if (g[0] == 'x') CHECK_FALSE(seen_y);
  }
  CHECK(present(s, select_regions(s, Preset::Yac), auto_cut(s.map())).generators == p.generators);
}

TEST_CASE("every y generator occurs in a relator") {
  for (const char* name : {"fig15.shadow.json", "fig16.shadow.json", "fig18.shadow.json"}) {
    const auto s = load_shadow(name);
    const Presentation p = present(s, select_regions(s, Preset::Yabc), random_cut(s.map(), 2));
    for (int g = 0; g < p.num_generators(); ++g) {
      int uses = 0;
      for (const Word& r : p.relators) uses += r.occurrences(g);
      if (p.generators[g][0] == 'y') CHECK(uses > 0);
    }
  }
}

TEST_CASE("reduced systems") {
  const auto s = load_shadow("fig15.shadow.json");
  const CuttingSystem cs = auto_cut(s.map());
  SubSelection touching = select_regions(s, Preset::Yabc);
  touching.selected[s.map().outer_region()] = 1;
  CHECK(error_of([&] { present_reduced(s, touching, cs); }) == ErrorCode::SelectionTouchesBoundary);

  // Nothing to remove: identical output.
  const auto t = with_c_gleams(alternating(closed_curve(trefoil_polygon())));
  const DiskMap& tm = t.map();
  RegionId tri = kNone;
  for (RegionId r : tm.internal_regions()) {
    if (tm.region(r).boundary.size() == 3) tri = r;
  }
  const auto& bd = tm.region(tri).boundary;
  const RegionId top = tm.left_region(tm.twin(bd[0]));
  CutEntries cut{{tri, tm.edge(bd[0])}, {tm.left_region(tm.twin(bd[1])), tm.edge(bd[1])},
                 {tm.left_region(tm.twin(bd[2])), tm.edge(bd[2])}};
  for (DartId x : tm.region(top).boundary) {
    if (tm.left_region(tm.twin(x)) == tm.outer_region()) {
      cut.emplace_back(top, tm.edge(x));
      break;
    }
  }
  const CuttingSystem deep = make_cut(tm, cut);
  const SubSelection all = all_internal(tm);
  const Presentation full = present(t, all, deep), red = present_reduced(t, all, deep);
  CHECK(full.generators == red.generators);
  CHECK(full.relators == red.relators);
}

TEST_CASE("four-line arrangement") {
  const auto s = load_shadow("fig18.shadow.json");
  const Presentation y = pres({"x", "y", "Z", "W"}, {"x Z y W x^-1 W^-1 y^-1 Z^-1", "x Z y W Z^-1 x^-1 W^-1 y^-1",
                                                     "x Z y W y^-1 Z^-1 x^-1 W^-1"});
  const CuttingSystem cs = auto_cut(s.map());
  const Presentation red = present_reduced(s, select_regions(s, Preset::Yabc), cs);
  CHECK(fingerprint(red) == fingerprint(y));
  const Presentation simple = tietze_simplify(red);
  CHECK(simple.num_generators() == 4);
  CHECK(simple.relators.size() == 3);
  CHECK(abelianization(present(s, select_regions(s, Preset::YaSquareC), cs)) == AbelianInvariants{4, {}});
}

TEST_CASE("Wirtinger presentations") {
  const DiskMap f8 = DiskMap::build(figure_eight_table());
  for (int p : {0, 1}) CHECK(fingerprint(wirtinger(LinkDiagram(f8, {p}))) == fingerprint(kZ));

  const LinkDiagram tre = alternating(closed_curve(trefoil_polygon()));
  const Presentation w = wirtinger(tre);
  CHECK(w.num_generators() == 3);
  CHECK(w.relators.size() == 3);
  CHECK(fingerprint(w) == fingerprint(kTrefoil));
  CHECK(fingerprint(wirtinger(tre.reversed())) == fingerprint(kTrefoil));

  const auto s = load_shadow("fig15.shadow.json");
  CHECK(fingerprint(wirtinger(s.diagram)) == fingerprint(kTorus24));
  CHECK(fingerprint(wirtinger(s.diagram)) != fingerprint(kZ2));
}

TEST_CASE("presentation matches Wirtinger when gleams equal c") {
  const auto s = fig15_gl_c();
  const Thm41Report rep = check_theorem_41(s, auto_cut(s.map()));
  CHECK(rep.status == Thm41Report::Status::Match);
  CHECK(rep.phi_consistent);
  CHECK(rep.present_fp == fingerprint(kTorus24));
  CHECK(to_string(rep.status) == "match");

  auto bumped = s;
  bumped.twice_gleam[s.map().internal_regions().front()] += 2;
  CHECK(check_theorem_41(bumped, auto_cut(s.map())).status == Thm41Report::Status::NotApplicable);

  const auto built = load_shadow("fig15.shadow.json");
  CHECK(check_theorem_41(built, auto_cut(built.map())).status == Thm41Report::Status::NotApplicable);

  const auto t = with_c_gleams(alternating(closed_curve(trefoil_polygon())));
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto r = check_theorem_41(t, random_cut(t.map(), seed));
    CHECK(r.status == Thm41Report::Status::Match);
    CHECK(r.phi_consistent);
  }
}

TEST_CASE("fixture fingerprints do not depend on choices") {
  for (const char* name : {"fig15.shadow.json", "fig16.shadow.json", "fig18.shadow.json"}) {
    const auto s = load_shadow(name);
    for (Preset preset : {Preset::Yabc, Preset::Yac, Preset::YaSquareC}) {
      const SubSelection sel = select_regions(s, preset);
      const Fingerprint base = fingerprint(present(s, sel, auto_cut(s.map())));
      for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        const CuttingSystem cs = random_cut(s.map(), seed);
        CHECK(fingerprint(present(s, sel, cs)) == base);
        CHECK(fingerprint(present_reduced(s, sel, cs)) == base);
        ShadowedPolyhedron flipped = s;
        flipped.diagram = s.diagram.with_over_parities(choose_over(s.map(), OverPolicy{OverPolicy::Kind::Seed, seed}));
        CHECK(fingerprint(present(flipped, sel, cs)) == base);
        ShadowedPolyhedron rev = s;
        rev.diagram = s.diagram.reversed();
        CHECK(fingerprint(present(rev, sel, cs)) == base);
      }
    }
  }
}
