// Green's preorders/relations and the D-class census at the category level
// (no sandwich yet), for PT, T and I hom-sets.  In the finite category D = J
// and the D-classes are the rank levels.

#ifndef SANDWICH_GREENS_HPP
#define SANDWICH_GREENS_HPP

#include "sandwich/exact_int.hpp"
#include "sandwich/partial_map.hpp"

namespace sandwich {

enum class GreenKind { R, L, H, D, J };

const char* green_kind_name(GreenKind k);
GreenKind green_kind_from_string(const std::string& s);

// f <=_K g in the category.  R compares maps with a common source, L with a
// common target, J compares by rank across any hom-sets.  The variant picks
// the right clause set: T drops the domain clause, I drops the kernel clause
// (both drops fall out of the PT formulas automatically).
bool green_leq(GreenKind k, const PartialMap& f, const PartialMap& g,
               Variant v);

// f K g in the category (same conventions as green_leq).
bool green_related(GreenKind k, const PartialMap& f, const PartialMap& g,
                   Variant v);

struct DClassCounts {
  int mu = 0;
  ExactInt r_classes;
  ExactInt l_classes;
  ExactInt h_classes;
  ExactInt h_size;
  ExactInt total;
};

// Census of the rank-mu D-class of the hom-set on ground sets of sizes
// alpha (source) and beta (target).
DClassCounts dclass_counts(Variant v, int alpha, int beta, int mu);

}  // namespace sandwich

#endif  // SANDWICH_GREENS_HPP
