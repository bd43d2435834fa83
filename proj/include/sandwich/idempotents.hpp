// *_a-idempotents, their count, and the idempotent-generated subsemigroup:
// membership characterisations, closure, and the rank/idempotent-rank
// formula with a constructive witness generating set.

#ifndef SANDWICH_IDEMPOTENTS_HPP
#define SANDWICH_IDEMPOTENTS_HPP

#include <optional>

#include "sandwich/sandwich.hpp"

namespace sandwich {

// { f : f *_a f = f }, canonical order, by the closed characterisation
// (af)|_im(f) = id.
std::vector<PartialMap> idempotents(const Sandwich& S);

// Closed counting formula for |E_a|.
ExactInt idempotent_count_formula(const Sandwich& S);

// The *_a-closure of the idempotent set, canonical order.
std::vector<PartialMap> egen_closure(const Sandwich& S);

// Constant-time membership test for the idempotent-generated subsemigroup:
// f regular and (rank(f) < alpha or f is a *_a-idempotent of top rank).
// For variant I the subsemigroup is the semilattice of idempotents.
bool egen_membership(const Sandwich& S, const PartialMap& f);

struct EgenRankFormula {
  ExactInt rank;
  ExactInt idrank;
  // Set for variant I, where no rank formula is asserted: the report then
  // carries |E| and this flag.
  bool semilattice_size_only = false;
};

// Rank/idempotent-rank of the idempotent-generated subsemigroup by the
// closed formula (PT and T).  For I, reports the idempotent count with
// semilattice_size_only set.
EgenRankFormula egen_rank_formula(const Sandwich& S);

// A concrete idempotent generating set for the idempotent-generated
// subsemigroup: a cross-section of the top rectangular band plus lifted
// mid-rank idempotents.  Generates by construction; its size matches the
// true idempotent rank on instances where the closed formula is valid.
std::vector<PartialMap> egen_witness(const Sandwich& S);

struct EgenReport {
  std::vector<PartialMap> members;
  ExactInt rank;
  ExactInt idrank;
  std::vector<PartialMap> witness_generators;
  bool semilattice_size_only = false;
};

// Full report: the closure members, the formula values, and the witness set.
EgenReport egen_report(const Sandwich& S);

// Shift/collapse/defect/codefect statistics of a base-monoid element
// (documentation parity; these drive no finite-case logic).
struct HowieStats {
  int shift = 0;
  int collapse = 0;
  int defect = 0;
  int codefect = 0;
};
HowieStats howie_stats(const PartialMap& f);

}  // namespace sandwich

#endif  // SANDWICH_IDEMPOTENTS_HPP
