// The sandwich semigroup (hom(X,Y), *_a) for a fixed a: Y -> X, in the three
// variants.  Holds the sandwich element, its chosen pseudo-inverse b and the
// derived parameters (alpha, beta, xi, lambda_i, Lambda), and answers the
// structural queries: P-sets, sandwich Green's classes, the J^a-order,
// regular D^a-classes and maximal J^a-classes.

#ifndef SANDWICH_SANDWICH_HPP
#define SANDWICH_SANDWICH_HPP

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "sandwich/exact_int.hpp"
#include "sandwich/greens.hpp"
#include "sandwich/partial_map.hpp"

namespace sandwich {

// A hom-set enumerated in canonical order, with index lookup.
class HomSet {
 public:
  HomSet(Variant v, int m, int n, long long cap);

  const std::vector<PartialMap>& elements() const { return elems_; }
  size_t size() const { return elems_.size(); }
  const PartialMap& at(int i) const { return elems_[static_cast<size_t>(i)]; }
  // -1 when f is not an element.
  int index_of(const PartialMap& f) const;

 private:
  std::vector<PartialMap> elems_;
  std::unordered_map<PartialMap, int, PartialMapHash> index_;
};

struct PSetFlags {
  bool p1 = false;
  bool p2 = false;
  bool p3 = false;
  bool regular = false;  // p1 && p2
};

struct ClassDescriptor {
  GreenKind kind = GreenKind::R;
  PartialMap representative;
  std::vector<PartialMap> members;  // canonical order
  bool is_singleton_nonP = false;
};

struct MaximalJInfo {
  bool unique_maximum = false;           // alpha == xi
  std::vector<PartialMap> singletons;    // alpha < xi: all f with rank > alpha
  std::vector<PartialMap> maximum_class; // alpha == xi: J^a_b
};

class Sandwich {
 public:
  Sandwich(Variant v, int m, int n, PartialMap a,
           long long cap = kDefaultCap);

  Variant variant() const { return variant_; }
  int m() const { return m_; }
  int n() const { return n_; }
  const PartialMap& a() const { return a_; }
  const PartialMap& b() const { return b_; }
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  int xi() const { return xi_; }
  long long cap() const { return cap_; }

  // Kernel data of a, indexed by sorted image point: image_points()[i] is
  // a_{i+1}, kernel_classes()[i] its fibre A_{i+1} in Y, chosen_points()[i]
  // the fixed b_{i+1} (least element), lambda()[i] = |A_{i+1}|.
  const std::vector<int>& image_points() const { return image_points_; }
  const std::vector<std::vector<int>>& kernel_classes() const {
    return kernel_classes_;
  }
  const std::vector<int>& chosen_points() const { return chosen_points_; }
  const std::vector<int>& lambda() const { return lambda_; }
  const ExactInt& Lambda() const { return Lambda_; }

  // f *_a g = f a g.
  PartialMap star(const PartialMap& f, const PartialMap& g) const;

  PSetFlags pset(const PartialMap& f) const;

  // Closed-form sandwich Green's class of f.
  ClassDescriptor green_class(GreenKind kind, const PartialMap& f) const;

  // J^a_f <= J^a_g, reference four-clause test.
  bool jorder_leq(const PartialMap& f, const PartialMap& g) const;
  // Same relation through the simplified P-set branches (fast path).
  bool jorder_leq_fast(const PartialMap& f, const PartialMap& g) const;

  // (mu, size) for each regular D^a-class, mu ascending.
  std::vector<std::pair<int, long long>> regular_dclasses() const;

  MaximalJInfo maximal_jclasses() const;

  // The enumerated hom-set (lazy, shared between copies; throws
  // std::length_error past the cap).
  const HomSet& hom_set() const;

  // All *_a-regular elements (f = f*h*f for some h), canonical order.
  std::vector<PartialMap> regular_elements() const;

 private:
  Variant variant_;
  int m_, n_;
  PartialMap a_, b_;
  int alpha_, beta_, xi_;
  std::vector<int> image_points_;
  std::vector<std::vector<int>> kernel_classes_;
  std::vector<int> chosen_points_;
  std::vector<int> lambda_;
  ExactInt Lambda_;
  long long cap_;

  struct HomCache {
    std::mutex mu;
    std::shared_ptr<const HomSet> ptr;
  };
  std::shared_ptr<HomCache> cache_;
};

// Validates a against the variant and builds the Sandwich.
Sandwich new_sandwich(Variant v, int m, int n, const PartialMap& a,
                      long long cap = kDefaultCap);

}  // namespace sandwich

#endif  // SANDWICH_SANDWICH_HPP
