// Dense multiplication-table view of a *_a-closed element set, with closure,
// principal ideals and definition-chasing Green's relations.  This is the
// brute-force side of every differential check: nothing in here consults the
// closed-form characterisations.

#ifndef SANDWICH_SEMIGROUP_TABLE_HPP
#define SANDWICH_SEMIGROUP_TABLE_HPP

#include <cstdint>
#include <vector>

#include "sandwich/sandwich.hpp"

namespace sandwich {

class SemigroupTable {
 public:
  // Builds the table over the given elements, which must be closed under
  // S.star (products landing outside throw std::invalid_argument).
  SemigroupTable(const Sandwich& S, std::vector<PartialMap> elements);

  // Convenience: table over the whole hom-set.
  static SemigroupTable whole(const Sandwich& S);

  size_t size() const { return elems_.size(); }
  const std::vector<PartialMap>& elements() const { return elems_; }
  const PartialMap& at(int i) const { return elems_[static_cast<size_t>(i)]; }
  int index_of(const PartialMap& f) const;

  int product(int i, int j) const {
    return table_[static_cast<size_t>(i) * elems_.size() +
                  static_cast<size_t>(j)];
  }

  // Indices of the closure of the seed under the product, ascending.
  std::vector<int> closure(const std::vector<int>& seed) const;
  bool generates_all(const std::vector<int>& seed) const;

  // x in {y} + y*S (adjoined identity), as index sets per y.
  std::vector<uint64_t> right_ideal_mask(int y) const;
  std::vector<uint64_t> left_ideal_mask(int y) const;
  std::vector<uint64_t> twosided_ideal_mask(int y) const;

  bool leq_r(int x, int y) const;  // x in {y} + yS
  bool leq_l(int x, int y) const;  // x in {y} + Sy
  bool leq_j(int x, int y) const;  // x in {y} + yS + Sy + SyS
  bool related_r(int x, int y) const { return leq_r(x, y) && leq_r(y, x); }
  bool related_l(int x, int y) const { return leq_l(x, y) && leq_l(y, x); }
  bool related_h(int x, int y) const {
    return related_r(x, y) && related_l(x, y);
  }
  // D = R o L (composition equals the join for Green's relations).
  bool related_d(int x, int y) const;
  bool related_j(int x, int y) const { return leq_j(x, y) && leq_j(y, x); }

  // All indices i with elems[i] *_a elems[i] == elems[i].
  std::vector<int> idempotent_indices() const;

  // {x : x not in S*S}.
  std::vector<int> indecomposable_indices() const;

 private:
  std::vector<PartialMap> elems_;
  std::unordered_map<PartialMap, int, PartialMapHash> index_;
  std::vector<int32_t> table_;
};

// Bit helpers shared by the searches.
inline void mask_set(std::vector<uint64_t>& mask, int i) {
  mask[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63);
}
inline bool mask_test(const std::vector<uint64_t>& mask, int i) {
  return (mask[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1;
}

}  // namespace sandwich

#endif  // SANDWICH_SEMIGROUP_TABLE_HPP
