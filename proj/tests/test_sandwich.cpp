// Sandwich construction, the *_a product, P-sets, sandwich Green's classes
// vs the principal-ideal oracle, the J^a-order and its fast path, regular
// D^a-classes and maximal J^a-classes.

#include <doctest.h>

#include <set>

#include "sandwich/semigroup_table.hpp"

using namespace sandwich;

namespace {

Sandwich flagship() {
  return Sandwich(Variant::PT, 3, 5,
                  parse_map("1 1 2 2 -", 5, 3, Variant::PT));
}

}  // namespace

TEST_CASE("new_sandwich derives the parameters") {
  Sandwich S = flagship();
  CHECK(S.alpha() == 2);
  CHECK(S.beta() == 1);
  CHECK(S.xi() == 3);
  CHECK(S.lambda() == std::vector<int>{2, 2});
  CHECK(S.Lambda() == 4);
  CHECK(format_map(S.b()) == "1 3 -");
  CHECK(compose(compose(S.a(), S.b()), S.a()) == S.a());
  CHECK(compose(compose(S.b(), S.a()), S.b()) == S.b());

  Sandwich E(Variant::PT, 2, 3, PartialMap::empty(3, 2));
  CHECK(E.alpha() == 0);
  CHECK(E.b() == PartialMap::empty(2, 3));

  // T: every point of X joins a block; non-image points go to the block of
  // the least image point.
  Sandwich T(Variant::T, 4, 3, parse_map("1 2 3", 3, 4, Variant::T));
  CHECK(format_map(T.b()) == "1 2 3 1");
  CHECK(compose(compose(T.a(), T.b()), T.a()) == T.a());
  CHECK(compose(compose(T.b(), T.a()), T.b()) == T.b());

  // a = aba and b = bab for every sandwich element at small sizes.
  for (Variant v : {Variant::PT, Variant::T, Variant::I}) {
    int lo = v == Variant::T ? 1 : 0;
    for (int m = lo; m <= 3; ++m)
      for (int n = lo; n <= 3; ++n)
        for (const PartialMap& a : enumerate_hom_set(v, n, m)) {
          Sandwich S2(v, m, n, a);
          CHECK(S2.b().satisfies(v));
          CHECK(compose(compose(a, S2.b()), a) == a);
          CHECK(compose(compose(S2.b(), a), S2.b()) == S2.b());
        }
  }

  CHECK_THROWS_AS(Sandwich(Variant::T, 3, 4,
                           parse_map("1 2 - -", 4, 3, Variant::PT)),
                  std::invalid_argument);
}

TEST_CASE("star multiplies through a") {
  Sandwich S = flagship();
  PartialMap f = parse_map("1 3 -", 3, 5, Variant::PT);
  PartialMap g = parse_map("2 4 5", 3, 5, Variant::PT);
  CHECK(format_map(S.star(f, g)) == "2 4 -");
  // f * b * f reduces through aba = a.
  CHECK(S.star(S.star(f, S.b()), f) ==
        compose(compose(compose(compose(f, S.a()), S.b()), S.a()), f));

  // Associativity over every a at m = n = 2.
  for (const PartialMap& a : enumerate_hom_set(Variant::PT, 2, 2)) {
    Sandwich S2(Variant::PT, 2, 2, a);
    auto elems = S2.hom_set().elements();
    for (const PartialMap& x : elems)
      for (const PartialMap& y : elems)
        for (const PartialMap& z : elems)
          CHECK(S2.star(S2.star(x, y), z) == S2.star(x, S2.star(y, z)));
  }
}

TEST_CASE("pset flags at the flagship sandwich") {
  Sandwich S = flagship();
  PSetFlags in = S.pset(parse_map("1 3 -", 3, 5, Variant::PT));
  CHECK(in.p1);
  CHECK(in.p2);
  CHECK(in.p3);
  CHECK(in.regular);
  PSetFlags out = S.pset(parse_map("1 3 5", 3, 5, Variant::PT));
  CHECK(!out.p1);  // 5 is outside dom(a)
  PSetFlags empty = S.pset(PartialMap::empty(3, 5));
  CHECK(empty.p1);
  CHECK(empty.p2);
  CHECK(empty.p3);
  CHECK(empty.regular);
}

TEST_CASE("green_class closed forms at (2,2) against the ideal oracle") {
  for (const PartialMap& a : enumerate_hom_set(Variant::PT, 2, 2)) {
    Sandwich S(Variant::PT, 2, 2, a);
    SemigroupTable tab = SemigroupTable::whole(S);
    const int sz = static_cast<int>(tab.size());
    for (int i = 0; i < sz; ++i) {
      const PartialMap& f = tab.at(i);
      for (GreenKind kind : {GreenKind::R, GreenKind::L, GreenKind::H,
                             GreenKind::D, GreenKind::J}) {
        ClassDescriptor cd = S.green_class(kind, f);
        std::set<int> got;
        for (const PartialMap& g : cd.members) got.insert(tab.index_of(g));
        std::set<int> want;
        for (int j = 0; j < sz; ++j) {
          bool rel = false;
          switch (kind) {
            case GreenKind::R: rel = tab.related_r(i, j); break;
            case GreenKind::L: rel = tab.related_l(i, j); break;
            case GreenKind::H: rel = tab.related_h(i, j); break;
            case GreenKind::D: rel = tab.related_d(i, j); break;
            case GreenKind::J: rel = tab.related_j(i, j); break;
          }
          if (rel) want.insert(j);
        }
        CHECK(got == want);
        CHECK(!cd.members.empty());
        CHECK(cd.representative == cd.members.front());
      }
    }
  }
}

TEST_CASE("singleton classes outside the P-sets") {
  Sandwich S = flagship();
  // Rank-3 elements exceed alpha = 2 and sit outside every P-set.
  PartialMap f = parse_map("3 4 5", 3, 5, Variant::PT);
  PSetFlags flags = S.pset(f);
  CHECK(!flags.p1);
  CHECK(!flags.p2);
  CHECK(!flags.p3);
  for (GreenKind kind : {GreenKind::R, GreenKind::L, GreenKind::H,
                         GreenKind::D, GreenKind::J}) {
    ClassDescriptor cd = S.green_class(kind, f);
    CHECK(cd.members == std::vector<PartialMap>{f});
    CHECK(cd.is_singleton_nonP);
  }
  // H-classes of regular elements are plain category H-classes.
  PartialMap g = parse_map("1 3 -", 3, 5, Variant::PT);
  ClassDescriptor h = S.green_class(GreenKind::H, g);
  for (const PartialMap& x : S.hom_set().elements())
    CHECK(static_cast<bool>(std::count(h.members.begin(), h.members.end(),
                                       x)) ==
          green_related(GreenKind::H, x, g, Variant::PT));
}

TEST_CASE("jorder fast path agrees with the reference form") {
  Sandwich S = flagship();
  auto elems = S.hom_set().elements();
  // The reference four-clause test and the P-set fast path agree; spot-check
  // the P3 simplification explicitly.
  for (size_t i = 0; i < elems.size(); i += 7)
    for (size_t j = 0; j < elems.size(); j += 5) {
      const PartialMap& f = elems[i];
      const PartialMap& g = elems[j];
      CHECK(S.jorder_leq(f, g) == S.jorder_leq_fast(f, g));
      if (S.pset(g).p3)
        CHECK(S.jorder_leq(f, g) == (f.rank() <= g.rank()));
      CHECK(S.jorder_leq(f, f));
    }
}

TEST_CASE("regular D^a-classes and maximal J^a-classes") {
  Sandwich S = flagship();
  auto classes = S.regular_dclasses();
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == std::pair<int, long long>{0, 1});
  CHECK(classes[1] == std::pair<int, long long>{1, 24});
  CHECK(classes[2] == std::pair<int, long long>{2, 24});

  // alpha < xi: maximal classes are the singletons of rank > alpha, and
  // |D_3| = 3! C(5,3) S(4,4) = 60.
  MaximalJInfo info = S.maximal_jclasses();
  CHECK(!info.unique_maximum);
  CHECK(info.singletons.size() == 60);
  for (const PartialMap& f : info.singletons) CHECK(f.rank() == 3);

  // alpha = xi: unique maximum class.
  Sandwich D(Variant::PT, 4, 3, parse_map("1 2 3", 3, 4, Variant::PT));
  MaximalJInfo dinfo = D.maximal_jclasses();
  CHECK(dinfo.unique_maximum);
  for (const PartialMap& f : dinfo.maximum_class) {
    CHECK(f.rank() == 3);
    CHECK(D.pset(f).p3);
  }

  // alpha = 0: a single regular class holding the empty map.
  Sandwich E(Variant::PT, 2, 2, PartialMap::empty(2, 2));
  auto eclasses = E.regular_dclasses();
  REQUIRE(eclasses.size() == 1);
  CHECK(eclasses[0] == std::pair<int, long long>{0, 1});

  // T variant: the lowest class D_1^a holds all |Y| constants.
  Sandwich T(Variant::T, 3, 5, parse_map("1 2 2 3 3", 5, 3, Variant::T));
  auto tclasses = T.regular_dclasses();
  CHECK(tclasses.front() == std::pair<int, long long>{1, 5});
}

TEST_CASE("regularity, P-set inclusions and stability at small sizes") {
  for (Variant v : {Variant::PT, Variant::T, Variant::I}) {
    int lo = v == Variant::T ? 1 : 0;
    for (int m = lo; m <= 2; ++m)
      for (int n = lo; n <= 2; ++n)
        for (const PartialMap& a : enumerate_hom_set(v, n, m)) {
          Sandwich S(v, m, n, a);
          auto elems = S.hom_set().elements();
          for (const PartialMap& f : elems) {
            PSetFlags flags = S.pset(f);
            bool reg = false;
            for (const PartialMap& h : elems)
              if (S.star(S.star(f, h), f) == f) {
                reg = true;
                break;
              }
            CHECK(flags.regular == reg);
            if (flags.regular) CHECK(flags.p3);
            // Finite sandwich elements are stable, so P3 collapses onto P^a
            // and J^a = D^a.
            CHECK(flags.p3 == flags.regular);
            ClassDescriptor dcd = S.green_class(GreenKind::D, f);
            ClassDescriptor jcd = S.green_class(GreenKind::J, f);
            CHECK(dcd.members == jcd.members);
            // Non-regular H^a-classes are singletons without idempotents.
            if (!flags.regular) {
              ClassDescriptor h = S.green_class(GreenKind::H, f);
              CHECK(h.members.size() == 1);
              CHECK(S.star(f, f) != f);
            }
          }
        }
  }
}
