#include "sandwich/idempotents.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "sandwich/generation.hpp"
#include "sandwich/regular.hpp"

namespace sandwich {

std::vector<PartialMap> idempotents(const Sandwich& S) {
  std::vector<PartialMap> out;
  for (const PartialMap& f : S.hom_set().elements()) {
    // (af)|_im(f) = id_im(f).
    PartialMap af = compose(S.a(), f);
    bool ok = true;
    for (int y : f.image())
      if (af.apply(y) != y) {
        ok = false;
        break;
      }
    if (ok) out.push_back(f);
  }
  return out;
}

ExactInt idempotent_count_formula(const Sandwich& S) {
  auto e = elementary_symmetric(S.lambda());
  ExactInt total = 0;
  switch (S.variant()) {
    case Variant::PT:
      for (int mu = 0; mu <= S.alpha(); ++mu)
        total += ipow(mu + 1, S.m() - mu) * e[static_cast<size_t>(mu)];
      break;
    case Variant::T:
      for (int mu = 1; mu <= S.alpha(); ++mu)
        total += ipow(mu, S.m() - mu) * e[static_cast<size_t>(mu)];
      break;
    case Variant::I:
      total = ipow(2, S.alpha());
      break;
  }
  return total;
}

std::vector<PartialMap> egen_closure(const Sandwich& S) {
  return star_closure(S, idempotents(S));
}

bool egen_membership(const Sandwich& S, const PartialMap& f) {
  PSetFlags flags = S.pset(f);
  if (!flags.regular) return false;
  if (S.variant() == Variant::I) {
    // Inverse case: the idempotent-generated subsemigroup is the
    // semilattice of idempotents itself.
    return S.star(f, f) == f;
  }
  if (f.rank() < S.alpha()) return true;
  return S.star(f, f) == f;
}

EgenRankFormula egen_rank_formula(const Sandwich& S) {
  EgenRankFormula rep;
  switch (S.variant()) {
    case Variant::PT:
      rep.rank = binom(S.alpha() + 1, 2) +
                 std::max(ipow(S.alpha() + 1, S.beta()), S.Lambda());
      rep.idrank = rep.rank;
      break;
    case Variant::T:
      rep.rank = binom(S.alpha(), 2) +
                 std::max(ipow(S.alpha(), S.beta()), S.Lambda());
      rep.idrank = rep.rank;
      break;
    case Variant::I:
      rep.rank = ipow(2, S.alpha());
      rep.idrank = rep.rank;
      rep.semilattice_size_only = true;
      break;
  }
  return rep;
}

EgenReport egen_report(const Sandwich& S) {
  EgenReport rep;
  rep.members = egen_closure(S);
  EgenRankFormula formula = egen_rank_formula(S);
  rep.rank = formula.rank;
  rep.idrank = formula.idrank;
  rep.semilattice_size_only = formula.semilattice_size_only;
  rep.witness_generators = egen_witness(S);
  return rep;
}

HowieStats howie_stats(const PartialMap& f) {
  if (f.source_size() != f.target_size())
    throw std::invalid_argument("howie_stats: needs a transformation of one "
                                "ground set");
  HowieStats s;
  for (int x = 1; x <= f.source_size(); ++x) {
    int y = f.apply(x);
    if (y == 0)
      ++s.codefect;
    else if (y != x)
      ++s.shift;
  }
  auto p = profile(f);
  for (const auto& block : p.kernel)
    s.collapse += static_cast<int>(block.size()) - 1;
  s.defect = f.target_size() - p.rank;
  return s;
}

namespace {

// Minimal set of non-identity idempotents of the base monoid on {1..alpha}
// that, together with the identity, generates its idempotent-generated
// submonoid.  Found by exact subset search; cached per (variant, alpha).
const std::vector<PartialMap>& base_mid_idempotents(Variant v, int alpha) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<PartialMap>> cache;
  Variant base_variant = v == Variant::T ? Variant::T : Variant::PT;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(base_variant), alpha);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  Sandwich base(base_variant, alpha, alpha, PartialMap::identity(alpha));
  std::vector<PartialMap> base_egen = egen_closure(base);
  SemigroupTable tab(base, base_egen);
  std::vector<int> idem_idx = tab.idempotent_indices();
  int id_index = tab.index_of(PartialMap::identity(alpha));
  std::vector<int> candidates;
  for (int i : idem_idx)
    if (i != id_index) candidates.push_back(i);
  std::vector<PartialMap> mids;
  bool found = false;
  for (size_t k = 0; !found && k <= candidates.size(); ++k) {
    std::vector<int> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    while (true) {
      std::vector<int> seed = {id_index};
      for (int i : idx) seed.push_back(candidates[static_cast<size_t>(i)]);
      if (tab.closure(seed).size() == tab.size()) {
        for (int i : idx)
          mids.push_back(tab.at(candidates[static_cast<size_t>(i)]));
        found = true;
        break;
      }
      int i = static_cast<int>(k) - 1;
      while (i >= 0 &&
             idx[static_cast<size_t>(i)] ==
                 static_cast<int>(candidates.size() - k) + i)
        --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (size_t j = static_cast<size_t>(i) + 1; j < k; ++j)
        idx[j] = idx[j - 1] + 1;
    }
  }
  if (!found) throw std::logic_error("base idempotent search failed");
  return cache.emplace(key, std::move(mids)).first->second;
}

// Idempotent lift of an idempotent of the base monoid on {1..alpha}: sends
// a_i -> b_{q(i)}; for T the remaining points of X follow the least image
// point of q.
PartialMap lift_base_idempotent(const Sandwich& S, const PartialMap& q) {
  const auto& pts = S.image_points();
  const auto& chosen = S.chosen_points();
  std::vector<int> im(static_cast<size_t>(S.m()), 0);
  for (int i = 1; i <= S.alpha(); ++i) {
    int qi = q.apply(i);
    if (qi != 0)
      im[static_cast<size_t>(pts[static_cast<size_t>(i - 1)] - 1)] =
          chosen[static_cast<size_t>(qi - 1)];
  }
  if (S.variant() == Variant::T) {
    auto qim = q.image();
    if (qim.empty())
      throw std::logic_error("full variant cannot lift a rank-0 idempotent");
    int fallback = chosen[static_cast<size_t>(qim.front() - 1)];
    for (int x = 1; x <= S.m(); ++x)
      if (im[static_cast<size_t>(x - 1)] == 0)
        im[static_cast<size_t>(x - 1)] = fallback;
  }
  return PartialMap(S.m(), S.n(), std::move(im));
}

}  // namespace

std::vector<PartialMap> egen_witness(const Sandwich& S) {
  if (S.variant() == Variant::I) {
    // Semilattice of partial identities over the chosen points: the top
    // element and its co-atoms generate everything by intersection.
    std::vector<PartialMap> idems = idempotents(S);
    int alpha = S.alpha();
    std::vector<PartialMap> out;
    for (const PartialMap& e : idems)
      if (e.rank() >= alpha - 1) out.push_back(e);
    if (alpha == 0) out = idems;  // just the empty map
    return out;
  }

  // Cross-section of the top rectangular band: cover every row (domain and
  // kernel data) and every column (image) of the rank-alpha idempotents.
  std::vector<PartialMap> idems = idempotents(S);
  std::vector<PartialMap> band;
  for (const PartialMap& e : idems)
    if (e.rank() == S.alpha()) band.push_back(e);
  std::map<std::vector<int>, int> row_ids, col_ids;
  std::vector<std::pair<int, int>> coords(band.size());
  for (size_t i = 0; i < band.size(); ++i) {
    auto prof = profile(band[i]);
    std::vector<int> rsig(static_cast<size_t>(S.m()) + 1, 0);
    int bid = 0;
    for (const auto& block : prof.kernel) {
      ++bid;
      for (int x : block) rsig[static_cast<size_t>(x)] = bid;
    }
    auto [rit, r_new] = row_ids.emplace(rsig, static_cast<int>(row_ids.size()));
    auto [cit, c_new] =
        col_ids.emplace(band[i].image(), static_cast<int>(col_ids.size()));
    coords[i] = {rit->second, cit->second};
  }
  const int rows = static_cast<int>(row_ids.size());
  const int cols = static_cast<int>(col_ids.size());
  std::map<std::pair<int, int>, PartialMap> cell;
  for (size_t i = 0; i < band.size(); ++i)
    cell.emplace(coords[i], band[i]);
  std::vector<PartialMap> out;
  for (int i = 0; i < std::max(rows, cols); ++i) {
    auto it = cell.find({i % std::max(rows, 1), i % std::max(cols, 1)});
    if (it == cell.end())
      throw std::logic_error("rectangular band is missing a cell");
    out.push_back(it->second);
  }

  // Lift a minimal idempotent generating set of the base idempotent-generated
  // monoid, found by exact search on the base (identity excluded: the band
  // already covers it).  Memoised: the mids depend only on (variant, alpha).
  int alpha = S.alpha();
  if (alpha > 0) {
    for (const PartialMap& q : base_mid_idempotents(S.variant(), alpha))
      out.push_back(lift_base_idempotent(S, q));
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sandwich
