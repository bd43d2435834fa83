// Generating-set machinery: *_a-closure, indecomposables, exact minimal
// generating set search (the independent oracle), the case-split rank
// formulas with constructed generating sets, and machine-checked counting
// certificates for the lower bounds.

#ifndef SANDWICH_GENERATION_HPP
#define SANDWICH_GENERATION_HPP

#include <optional>
#include <string>

#include "sandwich/semigroup_table.hpp"

namespace sandwich {

// Least *_a-closed superset of omega (products of >= 1 factor; the seed
// elements are members by definition).  Throws std::length_error past cap.
std::vector<PartialMap> star_closure(const Sandwich& S,
                                     const std::vector<PartialMap>& omega);

// { x : x not in S *_a S }; contained in every generating set.
std::vector<PartialMap> indecomposables(const Sandwich& S);

bool is_generating(const Sandwich& S, const std::vector<PartialMap>& omega);

struct RankSearchResult {
  bool exact = false;
  ExactInt value;  // meaningful when exact
  ExactInt lower;  // always valid bounds
  ExactInt upper;
  long long closures_used = 0;
};

// Minimal size of a generating set, by exhaustive subset search seeded with
// the forced elements.  `budget` limits the number of closure evaluations;
// when exhausted the result carries bounds instead of a value.
RankSearchResult rank_exact(const Sandwich& S, long long budget);

// Same search over a *_a-closed subset (e.g. P^a or the idempotent-generated
// subsemigroup) viewed as a semigroup in its own right.
RankSearchResult rank_exact_subset(const Sandwich& S,
                                   const std::vector<PartialMap>& members,
                                   long long budget);

// Minimal number of idempotents generating `target` (which must be
// *_a-closed and generated by its idempotents).
RankSearchResult idrank_exact(const Sandwich& S,
                              const std::vector<PartialMap>& target,
                              long long budget);

// Generic core over a prebuilt table, generators restricted to
// `gen_universe` (indices into the table).
RankSearchResult search_min_generators(const SemigroupTable& table,
                                       const std::vector<int>& gen_universe,
                                       long long budget);

struct GenReport {
  ExactInt rank_value;
  std::string case_tag;
  std::vector<PartialMap> generating_set;
  std::string lower_bound_witness;
};

// Closed-form rank of the sandwich semigroup with a constructed generating
// set realising it.  Case tags: trivial_empty, alpha_zero, below_xi_neither,
// below_xi_full, below_xi_injective, eq_xi_full_injective,
// eq_xi_surjective_neither, eq_xi_surjective_full,
// eq_xi_surjective_injective, bijective.
GenReport rank_formula(const Sandwich& S);

// Recomputes the report's lower bound from machine-checked structural facts
// (indecomposability scans, first/last-factor stability scans, reachability
// closures).  Returns the certified bound; the certificate fails (returns
// nullopt) only if a scan property does not hold.
std::optional<ExactInt> certify_lower_bound(const Sandwich& S,
                                            const GenReport& report,
                                            std::string* detail = nullptr);

}  // namespace sandwich

#endif  // SANDWICH_GENERATION_HPP
