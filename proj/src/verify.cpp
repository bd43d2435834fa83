#include "sandwich/verify.hpp"

#include <algorithm>
#include <set>

#include "sandwich/eggbox.hpp"
#include "sandwich/generation.hpp"
#include "sandwich/idempotents.hpp"
#include "sandwich/regular.hpp"
#include "sandwich/semigroup_table.hpp"

namespace sandwich {

namespace {

struct Counter {
  VerifyOutcome* out;
  long long local_checks = 0;
  long long local_bad = 0;
  void check(bool ok) {
    ++local_checks;
    if (!ok) ++local_bad;
  }
  void flush() {
    out->checks += local_checks;
    out->mismatches += local_bad;
    if (local_bad) out->ok = false;
  }
};

// Sandwich Green's class of f straight from the ideal definitions.
std::vector<int> oracle_class(const SemigroupTable& tab,
                              const std::vector<std::vector<uint64_t>>& right,
                              const std::vector<std::vector<uint64_t>>& left,
                              const std::vector<std::vector<uint64_t>>& two,
                              GreenKind kind, int f) {
  const int n = static_cast<int>(tab.size());
  auto leq_r = [&](int x, int y) { return mask_test(right[static_cast<size_t>(y)], x); };
  auto leq_l = [&](int x, int y) { return mask_test(left[static_cast<size_t>(y)], x); };
  auto leq_j = [&](int x, int y) { return mask_test(two[static_cast<size_t>(y)], x); };
  auto rel_r = [&](int x, int y) { return leq_r(x, y) && leq_r(y, x); };
  auto rel_l = [&](int x, int y) { return leq_l(x, y) && leq_l(y, x); };
  std::vector<int> members;
  switch (kind) {
    case GreenKind::R:
      for (int g = 0; g < n; ++g)
        if (rel_r(g, f)) members.push_back(g);
      break;
    case GreenKind::L:
      for (int g = 0; g < n; ++g)
        if (rel_l(g, f)) members.push_back(g);
      break;
    case GreenKind::H:
      for (int g = 0; g < n; ++g)
        if (rel_r(g, f) && rel_l(g, f)) members.push_back(g);
      break;
    case GreenKind::D:
      for (int g = 0; g < n; ++g) {
        bool related = false;
        for (int h = 0; h < n && !related; ++h)
          related = rel_r(f, h) && rel_l(h, g);
        if (related) members.push_back(g);
      }
      break;
    case GreenKind::J:
      for (int g = 0; g < n; ++g)
        if (leq_j(g, f) && leq_j(f, g)) members.push_back(g);
      break;
  }
  return members;
}

}  // namespace

VerifyOutcome run_verify(const VerifyOptions& opt, std::ostream& out) {
  VerifyOutcome outcome;
  const Variant v = opt.variant;
  const int lo = (v == Variant::T) ? 1 : 0;

  for (int m = lo; m <= opt.max_size; ++m) {
    for (int n = lo; n <= opt.max_size; ++n) {
      std::vector<PartialMap> sandwich_elements =
          enumerate_hom_set(v, n, m, opt.cap);
      Counter pset_c{&outcome}, green_c{&outcome}, jord_c{&outcome},
          reg_c{&outcome}, idem_c{&outcome}, egen_c{&outcome},
          mi_c{&outcome}, rank_c{&outcome}, box_c{&outcome},
          assoc_c{&outcome};

      for (const PartialMap& a : sandwich_elements) {
        Sandwich S(v, m, n, a, opt.cap);
        const auto& elems = S.hom_set().elements();
        const int sz = static_cast<int>(elems.size());
        SemigroupTable tab = SemigroupTable::whole(S);
        std::vector<std::vector<uint64_t>> right, left, two;
        for (int i = 0; i < sz; ++i) {
          right.push_back(tab.right_ideal_mask(i));
          left.push_back(tab.left_ideal_mask(i));
          two.push_back(tab.twosided_ideal_mask(i));
        }

        // Associativity of *_a (exhaustive at small scale).
        if (sz <= 40) {
          for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j)
              for (int k = 0; k < sz; ++k)
                assoc_c.check(tab.product(tab.product(i, j), k) ==
                              tab.product(i, tab.product(j, k)));
        }

        // P-sets: closed forms vs the defining relations fa R f, af L f,
        // afa J f, and regularity vs the existential definition.
        for (int i = 0; i < sz; ++i) {
          const PartialMap& f = elems[static_cast<size_t>(i)];
          PSetFlags flags = S.pset(f);
          PartialMap fa = compose(f, S.a());
          PartialMap af = compose(S.a(), f);
          PartialMap afa = compose(af, S.a());
          pset_c.check(flags.p1 == green_related(GreenKind::R, fa, f, v));
          pset_c.check(flags.p2 == green_related(GreenKind::L, af, f, v));
          pset_c.check(flags.p3 == (afa.rank() == f.rank()));
          bool reg = false;
          for (int h = 0; h < sz && !reg; ++h)
            reg = tab.product(tab.product(i, h), i) == i;
          pset_c.check(flags.regular == reg);
          pset_c.check(!flags.regular || flags.p3);  // P^a within P_3^a
          pset_c.check(flags.p3 == flags.regular);   // finite: a stable
        }

        // Green's classes: closed forms vs principal-ideal oracle.
        for (int i = 0; i < sz; ++i) {
          const PartialMap& f = elems[static_cast<size_t>(i)];
          for (GreenKind kind : {GreenKind::R, GreenKind::L, GreenKind::H,
                                 GreenKind::D, GreenKind::J}) {
            ClassDescriptor cd = S.green_class(kind, f);
            std::vector<int> got;
            for (const PartialMap& g : cd.members)
              got.push_back(tab.index_of(g));
            std::sort(got.begin(), got.end());
            green_c.check(got ==
                          oracle_class(tab, right, left, two, kind, i));
          }
        }

        // J^a-order: four-clause form and fast path vs the ideal oracle.
        for (int i = 0; i < sz; ++i)
          for (int j = 0; j < sz; ++j) {
            bool oracle = mask_test(two[static_cast<size_t>(j)], i);
            const PartialMap& f = elems[static_cast<size_t>(i)];
            const PartialMap& g = elems[static_cast<size_t>(j)];
            jord_c.check(S.jorder_leq(f, g) == oracle);
            jord_c.check(S.jorder_leq_fast(f, g) == oracle);
          }

        // Regular subsemigroup size: formula vs enumeration; maximal
        // J^a-classes against the order oracle.
        {
          auto regs = S.regular_elements();
          reg_c.check(reg_size_formula(S) ==
                      ExactInt(static_cast<long long>(regs.size())));
          auto info = S.maximal_jclasses();
          std::set<int> max_idx;
          for (int i = 0; i < sz; ++i) {
            bool maximal = true;
            for (int j = 0; j < sz && maximal; ++j)
              if (mask_test(two[static_cast<size_t>(j)], i) &&
                  !mask_test(two[static_cast<size_t>(i)], j))
                maximal = false;
            if (maximal) max_idx.insert(i);
          }
          std::set<int> claimed;
          for (const PartialMap& f : info.singletons)
            claimed.insert(tab.index_of(f));
          for (const PartialMap& f : info.maximum_class)
            claimed.insert(tab.index_of(f));
          reg_c.check(claimed == max_idx);
        }

        // Idempotents: count formula vs enumeration; E-generated
        // subsemigroup membership vs closure.
        {
          auto idems = idempotents(S);
          for (const PartialMap& e : idems)
            idem_c.check(S.star(e, e) == e);
          long long direct = 0;
          for (int i = 0; i < sz; ++i)
            if (tab.product(i, i) == i) ++direct;
          idem_c.check(direct == static_cast<long long>(idems.size()));
          idem_c.check(idempotent_count_formula(S) == ExactInt(direct));

          auto egen = egen_closure(S);
          std::set<PartialMap, CanonicalLess> in_egen(egen.begin(),
                                                      egen.end());
          for (const PartialMap& f : elems)
            egen_c.check(egen_membership(S, f) ==
                         static_cast<bool>(in_egen.count(f)));
          auto witness = egen_witness(S);
          auto wit_cl = star_closure(S, witness);
          egen_c.check(wit_cl == egen);
        }

        mi_c.check(mi_factorization_check(S));

        // Rank: closed formula vs exhaustive search; constructed set
        // generates.
        if (opt.include_rank_checks) {
          GenReport grep = rank_formula(S);
          rank_c.check(is_generating(S, grep.generating_set));
          rank_c.check(ExactInt(static_cast<long long>(
                           grep.generating_set.size())) == grep.rank_value);
          RankSearchResult exact = rank_exact(S, opt.budget);
          if (exact.exact) {
            rank_c.check(exact.value == grep.rank_value);
          } else {
            outcome.budget_exhausted = true;
            rank_c.check(exact.lower <= grep.rank_value &&
                         grep.rank_value <= exact.upper);
          }
          if (v != Variant::I) {
            auto regs = S.regular_elements();
            RankSearchResult rexact =
                rank_exact_subset(S, regs, opt.budget);
            if (rexact.exact) {
              rank_c.check(rexact.value == reg_rank_formula(S));
            } else {
              outcome.budget_exhausted = true;
            }
          }
        }

        // Egg-box sanity: every element in exactly one cell; DOT output
        // well-formed.
        {
          EggBox box = build_eggbox(S, EggBoxScope::Full);
          long long total = 0;
          for (const auto& cls : box.dclasses) total += cls.size;
          box_c.check(total == sz);
          box_c.check(dot_is_well_formed(render_dot(box)));
        }
      }

      auto emit = [&](const char* name, Counter& c) {
        c.flush();
        out << variant_name(v) << " m=" << m << " n=" << n << " " << name
            << ": " << (c.local_bad == 0 ? "pass" : "FAIL") << " ("
            << c.local_checks << " checks";
        if (c.local_bad) out << ", " << c.local_bad << " mismatches";
        out << ")\n";
      };
      emit("associativity", assoc_c);
      emit("psets", pset_c);
      emit("green-classes", green_c);
      emit("jorder", jord_c);
      emit("regular", reg_c);
      emit("idempotents", idem_c);
      emit("egen", egen_c);
      emit("mi-factorization", mi_c);
      if (opt.include_rank_checks) emit("rank", rank_c);
      emit("eggbox", box_c);
    }
  }
  out << "verify " << variant_name(v) << " max-size=" << opt.max_size << ": "
      << (outcome.ok ? "all checks passed" : "MISMATCHES FOUND") << " ("
      << outcome.checks << " checks, " << outcome.mismatches
      << " mismatches)\n";
  return outcome;
}

}  // namespace sandwich
