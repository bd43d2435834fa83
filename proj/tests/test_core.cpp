// Partial-map algebra: parsing, composition, profiles, pseudo-inverses,
// enumeration, and the composition lemma checked exhaustively.

#include <doctest.h>

#include <set>
#include <stdexcept>

#include "sandwich/partial_map.hpp"

using namespace sandwich;

namespace {

bool saturates(const std::vector<int>& S,
               const std::vector<std::vector<int>>& K) {
  return kernel_relation(S, K).saturates;
}

bool separates(const std::vector<int>& S,
               const std::vector<std::vector<int>>& K) {
  return kernel_relation(S, K).separates;
}

}  // namespace

TEST_CASE("parse_map reads the paper's tableau format") {
  PartialMap f = parse_map("3 4 3 - 1", 5, 4, Variant::PT);
  CHECK(f.apply(1) == 3);
  CHECK(f.apply(2) == 4);
  CHECK(f.apply(3) == 3);
  CHECK(!f.defined_at(4));
  CHECK(f.apply(5) == 1);
  CHECK(format_map(f) == "3 4 3 - 1");

  CHECK(parse_map("1 2 3", 3, 3, Variant::I) == PartialMap::identity(3));

  CHECK_THROWS_AS(parse_map("1 1", 2, 2, Variant::I), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("1 -", 2, 2, Variant::T), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("1 2 3", 2, 3, Variant::PT),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_map("5 1", 2, 4, Variant::PT), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("x 1", 2, 4, Variant::PT), std::invalid_argument);
}

TEST_CASE("compose acts left to right") {
  PartialMap f = parse_map("2 2 -", 3, 2, Variant::PT);
  PartialMap g = parse_map("3 1", 2, 3, Variant::PT);
  CHECK(format_map(compose(f, g)) == "1 1 -");

  PartialMap empty = PartialMap::empty(3, 4);
  PartialMap h = parse_map("1 2 2", 3, 3, Variant::PT);
  CHECK(compose(h, PartialMap::empty(3, 4)) == PartialMap::empty(3, 4));
  CHECK_THROWS_AS(compose(f, h), std::invalid_argument);
}

TEST_CASE("profile of the worked tableau") {
  PartialMap f = parse_map("3 4 3 - 1", 5, 4, Variant::PT);
  MapProfile p = profile(f);
  CHECK(p.dom == std::vector<int>{1, 2, 3, 5});
  CHECK(p.im == std::vector<int>{1, 3, 4});
  CHECK(p.kernel ==
        std::vector<std::vector<int>>{{1, 3}, {2}, {5}});
  CHECK(p.rank == 3);

  MapProfile e = profile(PartialMap::empty(4, 4));
  CHECK(e.dom.empty());
  CHECK(e.im.empty());
  CHECK(e.kernel.empty());
  CHECK(e.rank == 0);

  MapProfile c = profile(parse_map("1 1 1", 3, 3, Variant::PT));
  CHECK(c.rank == 1);
  CHECK(c.kernel == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("classify flags") {
  auto c1 = classify(parse_map("1 1 2 2 -", 5, 3, Variant::PT));
  CHECK(!c1.full);
  CHECK(!c1.injective);
  CHECK(!c1.surjective);

  auto c2 = classify(PartialMap::identity(3));
  CHECK(c2.full);
  CHECK(c2.injective);
  CHECK(c2.surjective);

  auto c3 = classify(parse_map("1 2 3 3 -", 5, 3, Variant::PT));
  CHECK(!c3.full);
  CHECK(!c3.injective);
  CHECK(c3.surjective);
}

TEST_CASE("pseudo_inverse picks least fibre elements and is a local inverse") {
  PartialMap f = parse_map("1 1 2 2 -", 5, 3, Variant::PT);
  PartialMap g = pseudo_inverse(f);
  CHECK(format_map(g) == "1 3 -");
  CHECK(compose(compose(f, g), f) == f);
  CHECK(compose(compose(g, f), g) == g);

  PartialMap swap = parse_map("2 1", 2, 2, Variant::I);
  CHECK(pseudo_inverse(swap) == swap);

  CHECK(pseudo_inverse(PartialMap::empty(3, 2)) == PartialMap::empty(2, 3));

  // fgf = f and gfg = g for every f at small sizes.
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const PartialMap& h : enumerate_hom_set(Variant::PT, m, n)) {
        PartialMap inv = pseudo_inverse(h);
        CHECK(inv.is_injective());
        CHECK(compose(compose(h, inv), h) == h);
        CHECK(compose(compose(inv, h), inv) == inv);
      }
}

TEST_CASE("enumeration counts and canonical order") {
  CHECK(enumerate_hom_set(Variant::PT, 2, 2).size() == 9);
  CHECK(enumerate_hom_set(Variant::T, 2, 3).size() == 9);
  CHECK(enumerate_hom_set(Variant::I, 3, 3).size() == 34);

  for (Variant v : {Variant::PT, Variant::T, Variant::I}) {
    int lo = v == Variant::T ? 1 : 0;
    for (int m = lo; m <= 3; ++m)
      for (int n = lo; n <= 3; ++n) {
        auto elems = enumerate_hom_set(v, m, n);
        CHECK(static_cast<long long>(elems.size()) ==
              hom_set_size(v, m, n, kDefaultCap));
        std::set<PartialMap, CanonicalLess> dedup(elems.begin(), elems.end());
        CHECK(dedup.size() == elems.size());
        for (size_t i = 0; i + 1 < elems.size(); ++i)
          CHECK(canonical_less(elems[i], elems[i + 1]));
        for (const PartialMap& f : elems) CHECK(f.satisfies(v));
      }
  }

  CHECK_THROWS_AS(enumerate_hom_set(Variant::PT, 20, 20, 1000),
                  std::length_error);
}

TEST_CASE("kernel_relation") {
  CHECK(kernel_relation({1, 3}, {{1, 2}, {3, 4}}).cross_section);
  auto r = kernel_relation({1, 2}, {{1, 2}, {3, 4}});
  CHECK(!r.saturates);
  CHECK(!r.separates);
  auto e = kernel_relation({}, {});
  CHECK(e.saturates);
  CHECK(e.separates);
  CHECK(e.cross_section);
}

TEST_CASE("composition lemma holds exhaustively at sizes <= 3") {
  // dom(fg) within dom(f) with equality iff im(f) within dom(g); the image,
  // kernel and rank statements alongside.
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 3; ++k) {
        auto fs = enumerate_hom_set(Variant::PT, m, n);
        auto gs = enumerate_hom_set(Variant::PT, n, k);
        for (const PartialMap& f : fs)
          for (const PartialMap& g : gs) {
            PartialMap fg = compose(f, g);
            auto pf = profile(f);
            auto pg = profile(g);
            auto pfg = profile(fg);
            // (i)
            CHECK(std::includes(pf.dom.begin(), pf.dom.end(),
                                pfg.dom.begin(), pfg.dom.end()));
            bool im_in_dom = std::includes(pg.dom.begin(), pg.dom.end(),
                                           pf.im.begin(), pf.im.end());
            CHECK((pfg.dom == pf.dom) == im_in_dom);
            // (ii)
            CHECK(std::includes(pg.im.begin(), pg.im.end(), pfg.im.begin(),
                                pfg.im.end()));
            CHECK((pfg.im == pg.im) == saturates(pf.im, pg.kernel));
            // (iii) ker(fg) contains ker(f)|dom(fg), equality iff ker(g)
            // separates im(f) within dom(g).
            bool contains = true, equal = true;
            for (int x = 1; x <= m; ++x)
              for (int y = x + 1; y <= m; ++y) {
                bool both = fg.defined_at(x) && fg.defined_at(y);
                if (!both) continue;
                bool kf = f.apply(x) == f.apply(y);
                bool kfg = fg.apply(x) == fg.apply(y);
                if (kf && !kfg) contains = false;
                if (kfg != kf) equal = false;
              }
            CHECK(contains);
            std::vector<int> im_in_domg;
            for (int y : pf.im)
              if (g.defined_at(y)) im_in_domg.push_back(y);
            CHECK(equal == separates(im_in_domg, pg.kernel));
            // (iv)
            CHECK(pfg.rank <= std::min(pf.rank, pg.rank));
          }
      }
}

TEST_CASE("composition is associative and unital at sizes <= 3") {
  auto f3 = enumerate_hom_set(Variant::PT, 2, 3);
  auto g3 = enumerate_hom_set(Variant::PT, 3, 2);
  auto h3 = enumerate_hom_set(Variant::PT, 2, 2);
  for (const PartialMap& f : f3)
    for (const PartialMap& g : g3)
      for (const PartialMap& h : h3)
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  for (const PartialMap& f : f3) {
    CHECK(compose(PartialMap::identity(2), f) == f);
    CHECK(compose(f, PartialMap::identity(3)) == f);
  }
}
