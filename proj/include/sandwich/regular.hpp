// Structure of the regular subsemigroup P^a: the epimorphism phi onto the
// base monoid over im(a), hat-class inflation counts, size and rank
// formulas, the pullback embedding, and realisations of restricted-range /
// restricted-kernel / restricted-domain semigroups as sandwich semigroups.

#ifndef SANDWICH_REGULAR_HPP
#define SANDWICH_REGULAR_HPP

#include "sandwich/sandwich.hpp"

namespace sandwich {

// phi(f) = (fa) restricted to im(a), reindexed through the sorted image
// points to a partial transformation of {1..alpha}.  Requires f regular.
PartialMap phi(const Sandwich& S, const PartialMap& f);

struct InflationProfile {
  int mu = 0;
  ExactInt rhat_mult;   // R^a-classes per hat-R-class
  ExactInt lhat_mult;   // L^a-classes per hat-L-class
  ExactInt h_size;      // mu!
  bool is_group = false;
  ExactInt rect_rows;   // rectangular group dimensions when is_group
  ExactInt rect_cols;
};

// Inflation data of the hat-classes through f (f must be regular).
InflationProfile hat_class_counts(const Sandwich& S, const PartialMap& f);

// Row/column/H-cell totals of the regular D^a-class of rank mu.
struct RegularDClassShape {
  int mu = 0;
  ExactInt r_classes;
  ExactInt l_classes;
  ExactInt h_classes;
};
RegularDClassShape regular_dclass_shape(const Sandwich& S, int mu);

// |P^a| by the closed formula.
ExactInt reg_size_formula(const Sandwich& S);

// rank(P^a) by the closed formula; throws std::domain_error for variant I.
ExactInt reg_rank_formula(const Sandwich& S);

struct PullbackPair {
  PartialMap left;   // fa, an element of PT(X, B)
  PartialMap right;  // af, an element of PT(Y, sigma)
};
// psi(f) = (fa, af); injective on P^a.  Requires f regular.
PullbackPair pullback_embed(const Sandwich& S, const PartialMap& f);

enum class RestrictedKind { Range, Kernel, Domain };

// Realises the requested restricted semigroup as a sandwich semigroup:
//   Range:  { f in hom(X,X) : im(f) in B }       via a full injective a
//   Kernel: { f : ker(f)-classes are unions of sigma-classes } via surjective a
//   Domain: { f in I_X : dom(f) in A }           (variant I only)
// For Range, `subset` is B within {1..ground}; for Domain, A within
// {1..ground}; for Kernel, `blocks` partitions a subset of {1..ground}.
Sandwich restricted_semigroup_range(Variant v, int ground,
                                    const std::vector<int>& subset,
                                    long long cap = kDefaultCap);
Sandwich restricted_semigroup_kernel(Variant v, int ground,
                                     const std::vector<std::vector<int>>& blocks,
                                     long long cap = kDefaultCap);
Sandwich restricted_semigroup_domain(int ground,
                                     const std::vector<int>& subset,
                                     long long cap = kDefaultCap);

// Checks P^a = H-hat_b *_a P^a *_a H-hat_b by enumeration.
bool mi_factorization_check(const Sandwich& S);

}  // namespace sandwich

#endif  // SANDWICH_REGULAR_HPP
