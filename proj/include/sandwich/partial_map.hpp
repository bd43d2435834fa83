// Finite partial transformations between indexed ground sets {1..m} -> {1..n},
// in the three flavours PT (partial), T (full, non-empty sets), I (injective
// partial).  Values are immutable after construction and cheap to copy.

#ifndef SANDWICH_PARTIAL_MAP_HPP
#define SANDWICH_PARTIAL_MAP_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sandwich {

enum class Variant { PT, T, I };

const char* variant_name(Variant v);
Variant variant_from_string(const std::string& s);

// Image entry 0 means "undefined"; defined entries are 1-based target points.
class PartialMap {
 public:
  PartialMap() : m_(0), n_(0) {}
  PartialMap(int m, int n, std::vector<int> images);

  // The empty map m -> n.
  static PartialMap empty(int m, int n);
  // The identity on {1..k}.
  static PartialMap identity(int k);

  int source_size() const { return m_; }
  int target_size() const { return n_; }

  // 1-based lookup; 0 when x is not in the domain.
  int apply(int x) const { return images_[static_cast<size_t>(x - 1)]; }
  bool defined_at(int x) const { return apply(x) != 0; }

  const std::vector<int>& images() const { return images_; }

  std::vector<int> domain() const;        // sorted
  std::vector<int> image() const;         // sorted, no duplicates
  int rank() const;

  bool is_full() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_empty_map() const { return rank() == 0; }

  // Does this map satisfy the constraints of the given variant?
  bool satisfies(Variant v) const;

  bool operator==(const PartialMap& o) const {
    return m_ == o.m_ && n_ == o.n_ && images_ == o.images_;
  }
  bool operator!=(const PartialMap& o) const { return !(*this == o); }

 private:
  int m_, n_;
  std::vector<int> images_;
};

// Canonical total order: lexicographic on the image sequence with the
// undefined marker ordered after every target point.  Maps of different
// shapes order by (m, n) first.
bool canonical_less(const PartialMap& f, const PartialMap& g);

struct CanonicalLess {
  bool operator()(const PartialMap& f, const PartialMap& g) const {
    return canonical_less(f, g);
  }
};

struct PartialMapHash {
  size_t operator()(const PartialMap& f) const {
    size_t h = std::hash<int>()(f.source_size() * 8191 + f.target_size());
    for (int v : f.images()) h = h * 1000003u + static_cast<size_t>(v + 1);
    return h;
  }
};

// Domain / image / kernel / rank bundle.  Kernel blocks are listed in order
// of least element; each block is sorted.
struct MapProfile {
  std::vector<int> dom;
  std::vector<int> im;
  std::vector<std::vector<int>> kernel;
  int rank = 0;
};

struct ClassifyFlags {
  bool full = false;
  bool injective = false;
  bool surjective = false;
};

// Text format: whitespace-separated image tokens, 1-based, "-" for undefined,
// exactly m tokens.  Throws std::invalid_argument on malformed input or a
// variant violation.
PartialMap parse_map(const std::string& text, int m, int n, Variant v);
std::string format_map(const PartialMap& f);

// Left-to-right composition: (fg)(x) = g(f(x)) where both sides are defined.
// Requires f.target_size() == g.source_size().
PartialMap compose(const PartialMap& f, const PartialMap& g);

MapProfile profile(const PartialMap& f);
ClassifyFlags classify(const PartialMap& f);

// An injective g: n -> m with fgf = f and gfg = g; g sends each image point
// to the least element of its fibre.  For injective f this is the inverse.
PartialMap pseudo_inverse(const PartialMap& f);

// saturates: every block of K meets S; separates: every block meets S in at
// most one point; cross_section: both.
struct KernelRelation {
  bool saturates = false;
  bool separates = false;
  bool cross_section = false;
};
KernelRelation kernel_relation(const std::vector<int>& S,
                               const std::vector<std::vector<int>>& K);

// Number of elements of the hom-set (exact only while it fits in 64 bits;
// callers that need unbounded counts use the formulas in exact_int.hpp).
// Returns -1 on overflow past the cap argument.
long long hom_set_size(Variant v, int m, int n, long long cap);

// Enumerates the hom-set in canonical order.  Throws std::length_error when
// the size exceeds `cap`.
std::vector<PartialMap> enumerate_hom_set(Variant v, int m, int n,
                                          long long cap = 10'000'000LL);

inline constexpr long long kDefaultCap = 10'000'000LL;

}  // namespace sandwich

#endif  // SANDWICH_PARTIAL_MAP_HPP
