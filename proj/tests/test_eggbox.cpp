// Egg-box construction and rendering: grid shapes against the inflation
// counts, the covering order, and the three serialisation formats.

#include <doctest.h>

#include "sandwich/eggbox.hpp"
#include "sandwich/regular.hpp"

using namespace sandwich;

namespace {

Sandwich flagship() {
  return Sandwich(Variant::PT, 3, 5,
                  parse_map("1 1 2 2 -", 5, 3, Variant::PT));
}

}  // namespace

TEST_CASE("regular egg-box of the flagship sandwich") {
  EggBox box = build_eggbox(flagship(), EggBoxScope::Regular);
  REQUIRE(box.dclasses.size() == 3);
  // Chain of three classes, rank descending.
  CHECK(box.dclasses[0].rank == 2);
  CHECK(box.dclasses[1].rank == 1);
  CHECK(box.dclasses[2].rank == 0);
  // Top class: 3 x 4 grid of 2-element cells, all group cells.
  const EggBoxClass& top = box.dclasses[0];
  CHECK(top.rows.size() == 3);
  CHECK(top.cols.size() == 4);
  CHECK(top.size == 24);
  for (const auto& row : top.cells)
    for (const auto& cell : row) CHECK(cell.size() == 2);
  for (const auto& row : top.groups)
    for (bool g : row) CHECK(g);
  // Chain covers: D2 < D1 < D0 in list positions (2,1), (1,0).
  CHECK(box.covers ==
        std::vector<std::pair<int, int>>{{1, 0}, {2, 1}});
}

TEST_CASE("full egg-box of PT_3 via a bijective sandwich") {
  Sandwich S(Variant::PT, 3, 3, PartialMap::identity(3));
  EggBox box = build_eggbox(S, EggBoxScope::Full);
  REQUIRE(box.dclasses.size() == 4);
  CHECK(box.dclasses[0].size == 6);    // rank 3
  CHECK(box.dclasses[1].size == 36);   // rank 2
  CHECK(box.dclasses[2].size == 21);   // rank 1
  CHECK(box.dclasses[3].size == 1);    // rank 0
  // A chain again.
  CHECK(box.covers ==
        std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {3, 2}});
}

TEST_CASE("alpha = 0 egg-box is a single cell") {
  Sandwich S(Variant::PT, 1, 1, PartialMap::empty(1, 1));
  EggBox box = build_eggbox(S, EggBoxScope::Regular);
  REQUIRE(box.dclasses.size() == 1);
  CHECK(box.dclasses[0].rows.size() == 1);
  CHECK(box.dclasses[0].cols.size() == 1);
  CHECK(box.covers.empty());
}

TEST_CASE("grid shapes match the inflation counts at the figure sandwiches") {
  const char* tableaux[] = {"1 1 2 2 -", "1 1 2 2 2", "1 2 - - -",
                            "1 2 3 3 -", "1 1 2 2 3", "1 2 3 - -"};
  for (const char* text : tableaux) {
    Sandwich S(Variant::PT, 3, 5, parse_map(text, 5, 3, Variant::PT));
    EggBox box = build_eggbox(S, EggBoxScope::Regular);
    for (const EggBoxClass& cls : box.dclasses) {
      RegularDClassShape shape = regular_dclass_shape(S, cls.rank);
      CHECK(ExactInt(static_cast<long long>(cls.rows.size())) ==
            shape.r_classes);
      CHECK(ExactInt(static_cast<long long>(cls.cols.size())) ==
            shape.l_classes);
      // Cell sizes are mu! throughout, and group cells carry idempotents.
      for (size_t r = 0; r < cls.cells.size(); ++r)
        for (size_t c = 0; c < cls.cells[r].size(); ++c) {
          CHECK(ExactInt(static_cast<long long>(cls.cells[r][c].size())) ==
                factorial(cls.rank));
          bool has_idem = false;
          for (const PartialMap& g : cls.cells[r][c])
            has_idem |= S.star(g, g) == g;
          CHECK(cls.groups[r][c] == has_idem);
        }
    }
    // Regular-scope order is a chain.
    for (size_t i = 0; i + 1 < box.dclasses.size(); ++i)
      CHECK(box.dclasses[i].rank > box.dclasses[i + 1].rank);
  }
  // The full diagram with alpha < xi has exactly the 60 maximal rank-3
  // singletons above everything else.
  EggBox full = build_eggbox(flagship(), EggBoxScope::Full);
  long long singletons = 0;
  for (const EggBoxClass& cls : full.dclasses)
    if (cls.rank == 3) {
      CHECK(cls.size == 1);
      ++singletons;
    }
  CHECK(singletons == 60);
  // For the injective+surjective element the top class is a single group
  // cell.
  Sandwich G(Variant::PT, 3, 5, parse_map("1 2 3 - -", 5, 3, Variant::PT));
  EggBox gbox = build_eggbox(G, EggBoxScope::Regular);
  CHECK(gbox.dclasses[0].rows.size() == 1);
  CHECK(gbox.dclasses[0].cols.size() == 1);
  CHECK(gbox.dclasses[0].groups[0][0]);
}

TEST_CASE("T and I figure sandwiches: regular boxes are base-monoid inflations") {
  // Four T sandwiches whose regular parts inflate T_3.
  struct TCase { int m, n; const char* a; };
  const TCase tcases[] = {{3, 5, "1 2 2 3 3"},
                          {3, 5, "1 2 3 3 3"},
                          {4, 3, "1 2 3"},
                          {4, 5, "1 2 3 3 3"}};
  for (const TCase& tc : tcases) {
    Sandwich S(Variant::T, tc.m, tc.n,
               parse_map(tc.a, tc.n, tc.m, Variant::T));
    CHECK(S.alpha() == 3);
    EggBox box = build_eggbox(S, EggBoxScope::Regular);
    REQUIRE(box.dclasses.size() == 3);  // ranks 3, 2, 1 in a chain
    for (const EggBoxClass& cls : box.dclasses) {
      RegularDClassShape shape = regular_dclass_shape(S, cls.rank);
      CHECK(ExactInt(static_cast<long long>(cls.rows.size())) ==
            shape.r_classes);
      CHECK(ExactInt(static_cast<long long>(cls.cols.size())) ==
            shape.l_classes);
    }
    CHECK(box.covers ==
          std::vector<std::pair<int, int>>{{1, 0}, {2, 1}});
  }

  // The I sandwich over a = [1 2 3 -] on four points: its regular part is
  // the symmetric inverse monoid on three points (sizes 1, 9, 18, 6).
  Sandwich SI(Variant::I, 4, 4, parse_map("1 2 3 -", 4, 4, Variant::I));
  EggBox ibox = build_eggbox(SI, EggBoxScope::Regular);
  REQUIRE(ibox.dclasses.size() == 4);
  CHECK(ibox.dclasses[0].size == 6);
  CHECK(ibox.dclasses[1].size == 18);
  CHECK(ibox.dclasses[2].size == 9);
  CHECK(ibox.dclasses[3].size == 1);
  long long total = 0;
  for (const auto& cls : ibox.dclasses) total += cls.size;
  CHECK(total == 34);  // |I_3|
}

TEST_CASE("every element appears in exactly one cell") {
  Sandwich S = flagship();
  for (EggBoxScope scope : {EggBoxScope::Full, EggBoxScope::Regular}) {
    EggBox box = build_eggbox(S, scope);
    std::vector<PartialMap> seen;
    for (const EggBoxClass& cls : box.dclasses)
      for (const auto& row : cls.cells)
        for (const auto& cell : row)
          seen.insert(seen.end(), cell.begin(), cell.end());
    std::sort(seen.begin(), seen.end(), CanonicalLess{});
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    size_t expect = scope == EggBoxScope::Full
                        ? S.hom_set().size()
                        : S.regular_elements().size();
    CHECK(seen.size() == expect);
  }
}

TEST_CASE("json round-trips and dot is well formed") {
  for (EggBoxScope scope : {EggBoxScope::Full, EggBoxScope::Regular}) {
    EggBox box = build_eggbox(flagship(), scope);
    std::string json = render_json(box);
    EggBox back = parse_eggbox_json(json);
    CHECK(render_json(back) == json);
    CHECK(json.find("\"schema_version\": 1") != std::string::npos);
    CHECK(dot_is_well_formed(render_dot(box)));
    CHECK(!render_ascii(box).empty());
  }
  CHECK(!dot_is_well_formed("graph {"));
  CHECK(!dot_is_well_formed("digraph { <unbalanced }"));
}
