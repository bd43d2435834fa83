#include "sandwich/regular.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sandwich {

PartialMap phi(const Sandwich& S, const PartialMap& f) {
  if (!S.pset(f).regular)
    throw std::invalid_argument("phi: element is not regular");
  const auto& pts = S.image_points();
  int alpha = S.alpha();
  std::vector<int> images(static_cast<size_t>(alpha), 0);
  PartialMap fa = compose(f, S.a());  // X -> X, image within im(a)
  for (int i = 0; i < alpha; ++i) {
    int x = fa.apply(pts[static_cast<size_t>(i)]);
    if (x == 0) continue;
    auto it = std::lower_bound(pts.begin(), pts.end(), x);
    images[static_cast<size_t>(i)] = static_cast<int>(it - pts.begin()) + 1;
  }
  return PartialMap(alpha, alpha, std::move(images));
}

namespace {

// Indices (0-based) of the kernel classes of a that meet im(f).
std::vector<int> meeting_classes(const Sandwich& S, const PartialMap& f) {
  std::vector<int> J;
  const auto& classes = S.kernel_classes();
  auto im = f.image();
  for (size_t i = 0; i < classes.size(); ++i) {
    bool meets = false;
    for (int y : classes[i])
      if (std::binary_search(im.begin(), im.end(), y)) {
        meets = true;
        break;
      }
    if (meets) J.push_back(static_cast<int>(i));
  }
  return J;
}

// Does the H-class of g (a partial transformation of a finite set) contain
// an idempotent, i.e. is it a group H-class?  True iff im(g) lies in dom(g)
// and is a cross-section of ker(g).
bool base_hclass_is_group(const PartialMap& g) {
  auto p = profile(g);
  for (int y : p.im)
    if (!g.defined_at(y)) return false;
  return kernel_relation(p.im, p.kernel).cross_section;
}

}  // namespace

InflationProfile hat_class_counts(const Sandwich& S, const PartialMap& f) {
  if (!S.pset(f).regular)
    throw std::invalid_argument("hat_class_counts: element is not regular");
  InflationProfile prof;
  prof.mu = f.rank();
  prof.h_size = factorial(prof.mu);
  switch (S.variant()) {
    case Variant::PT:
      prof.rhat_mult = ipow(prof.mu + 1, S.beta());
      break;
    case Variant::T:
      prof.rhat_mult = ipow(prof.mu, S.beta());
      break;
    case Variant::I:
      prof.rhat_mult = 1;
      break;
  }
  prof.lhat_mult = 1;
  if (S.variant() != Variant::I)
    for (int i : meeting_classes(S, f))
      prof.lhat_mult *= S.lambda()[static_cast<size_t>(i)];
  prof.is_group = base_hclass_is_group(phi(S, f));
  prof.rect_rows = prof.rhat_mult;
  prof.rect_cols = prof.lhat_mult;
  return prof;
}

RegularDClassShape regular_dclass_shape(const Sandwich& S, int mu) {
  int lo = (S.variant() == Variant::T) ? 1 : 0;
  if (mu < lo || mu > S.alpha())
    throw std::invalid_argument("regular_dclass_shape: rank out of range");
  RegularDClassShape shape;
  shape.mu = mu;
  auto e = elementary_symmetric(S.lambda());
  switch (S.variant()) {
    case Variant::PT:
      shape.r_classes =
          ipow(mu + 1, S.beta()) * stirling2(S.alpha() + 1, mu + 1);
      shape.l_classes = e[static_cast<size_t>(mu)];
      break;
    case Variant::T:
      shape.r_classes = ipow(mu, S.beta()) * stirling2(S.alpha(), mu);
      shape.l_classes = e[static_cast<size_t>(mu)];
      break;
    case Variant::I:
      shape.r_classes = binom(S.alpha(), mu);
      shape.l_classes = binom(S.alpha(), mu);
      break;
  }
  shape.h_classes = shape.r_classes * shape.l_classes;
  return shape;
}

ExactInt reg_size_formula(const Sandwich& S) {
  auto e = elementary_symmetric(S.lambda());
  ExactInt total = 0;
  switch (S.variant()) {
    case Variant::PT:
      for (int mu = 0; mu <= S.alpha(); ++mu)
        total += factorial(mu) * ipow(mu + 1, S.beta()) *
                 stirling2(S.alpha() + 1, mu + 1) *
                 e[static_cast<size_t>(mu)];
      break;
    case Variant::T:
      for (int mu = 1; mu <= S.alpha(); ++mu)
        total += factorial(mu) * ipow(mu, S.beta()) *
                 stirling2(S.alpha(), mu) * e[static_cast<size_t>(mu)];
      break;
    case Variant::I:
      for (int mu = 0; mu <= S.alpha(); ++mu)
        total += factorial(mu) * binom(S.alpha(), mu) * binom(S.alpha(), mu);
      break;
  }
  return total;
}

ExactInt reg_rank_formula(const Sandwich& S) {
  int alpha = S.alpha();
  switch (S.variant()) {
    case Variant::PT: {
      if (alpha == 0) return 1;
      ExactInt lam = S.Lambda();
      if (alpha == 1) return 1 + std::max(ipow(2, S.beta()), lam);
      if (alpha == 2) return 2 + std::max(ipow(3, S.beta()), lam);
      return 2 + std::max(std::max(ipow(alpha + 1, S.beta()), lam),
                          ExactInt(2));
    }
    case Variant::T: {
      if (S.a().is_full() && S.a().is_injective() && S.a().is_surjective()) {
        // P^a is the whole of T_X; classical values.
        if (alpha <= 2) return alpha;
        return 3;
      }
      if (alpha == 1) return S.n();
      return 1 + std::max(ipow(alpha, S.beta()), S.Lambda());
    }
    case Variant::I:
      throw std::domain_error(
          "rank of Reg for variant I is not provided (symmetric inverse "
          "monoid; see the standard monographs)");
  }
  return 0;
}

PullbackPair pullback_embed(const Sandwich& S, const PartialMap& f) {
  if (!S.pset(f).regular)
    throw std::invalid_argument("pullback_embed: element is not regular");
  return PullbackPair{compose(f, S.a()), compose(S.a(), f)};
}

Sandwich restricted_semigroup_range(Variant v, int ground,
                                    const std::vector<int>& subset,
                                    long long cap) {
  std::vector<int> B(subset);
  std::sort(B.begin(), B.end());
  if (!B.empty() && (B.front() < 1 || B.back() > ground))
    throw std::invalid_argument("range restriction outside the ground set");
  if (std::adjacent_find(B.begin(), B.end()) != B.end())
    throw std::invalid_argument("range restriction has repeats");
  if (v == Variant::T && B.empty())
    throw std::invalid_argument("variant T needs a non-empty range");
  // a: {1..|B|} -> {1..ground}, i -> B[i]; full and injective, so
  // f -> fa is an isomorphism onto { f : im(f) in B }.
  std::vector<int> images;
  images.reserve(B.size());
  for (int x : B) images.push_back(x);
  PartialMap a(static_cast<int>(B.size()), ground, std::move(images));
  return Sandwich(v, ground, static_cast<int>(B.size()), a, cap);
}

Sandwich restricted_semigroup_kernel(Variant v, int ground,
                                     const std::vector<std::vector<int>>& blocks,
                                     long long cap) {
  std::vector<char> seen(static_cast<size_t>(ground) + 1, 0);
  for (const auto& blk : blocks) {
    if (blk.empty()) throw std::invalid_argument("empty kernel block");
    for (int y : blk) {
      if (y < 1 || y > ground)
        throw std::invalid_argument("kernel block outside the ground set");
      if (seen[static_cast<size_t>(y)])
        throw std::invalid_argument("kernel blocks overlap");
      seen[static_cast<size_t>(y)] = 1;
    }
  }
  if (v == Variant::T) {
    for (int y = 1; y <= ground; ++y)
      if (!seen[static_cast<size_t>(y)])
        throw std::invalid_argument(
            "variant T needs the blocks to cover the ground set");
    if (blocks.empty())
      throw std::invalid_argument("variant T needs at least one block");
  }
  if (v == Variant::I)
    for (const auto& blk : blocks)
      if (blk.size() > 1)
        throw std::invalid_argument(
            "variant I admits only singleton kernel blocks");
  // Order blocks by least element so the construction is deterministic.
  std::vector<std::vector<int>> ordered(blocks);
  for (auto& blk : ordered) std::sort(blk.begin(), blk.end());
  std::sort(ordered.begin(), ordered.end());
  // a: {1..ground} -> {1..#blocks}, y -> index of its block; surjective, so
  // f -> af is an isomorphism onto the kernel-restricted semigroup.
  std::vector<int> images(static_cast<size_t>(ground), 0);
  for (size_t i = 0; i < ordered.size(); ++i)
    for (int y : ordered[i])
      images[static_cast<size_t>(y - 1)] = static_cast<int>(i) + 1;
  PartialMap a(ground, static_cast<int>(ordered.size()), std::move(images));
  return Sandwich(v, static_cast<int>(ordered.size()), ground, a, cap);
}

Sandwich restricted_semigroup_domain(int ground, const std::vector<int>& subset,
                                     long long cap) {
  std::vector<int> A(subset);
  std::sort(A.begin(), A.end());
  if (!A.empty() && (A.front() < 1 || A.back() > ground))
    throw std::invalid_argument("domain restriction outside the ground set");
  if (std::adjacent_find(A.begin(), A.end()) != A.end())
    throw std::invalid_argument("domain restriction has repeats");
  // a: {1..ground} -> {1..|A|} sends the k-th point of A to k; surjective
  // and injective, so f -> af is an isomorphism onto
  // { f in I_ground : dom(f) in A }.
  std::vector<int> images(static_cast<size_t>(ground), 0);
  for (size_t k = 0; k < A.size(); ++k)
    images[static_cast<size_t>(A[k] - 1)] = static_cast<int>(k) + 1;
  PartialMap a(ground, static_cast<int>(A.size()), std::move(images));
  return Sandwich(Variant::I, static_cast<int>(A.size()), ground, a, cap);
}

bool mi_factorization_check(const Sandwich& S) {
  auto regulars = S.regular_elements();
  // H-hat_b is the top regular D^a-class: regular elements of rank alpha.
  std::vector<PartialMap> hat_b;
  for (const PartialMap& f : regulars)
    if (f.rank() == S.alpha()) hat_b.push_back(f);
  std::set<PartialMap, CanonicalLess> target(regulars.begin(), regulars.end());
  std::set<PartialMap, CanonicalLess> produced;
  for (const PartialMap& g : hat_b) {
    for (const PartialMap& f : regulars) {
      PartialMap gf = S.star(g, f);
      for (const PartialMap& h : hat_b) produced.insert(S.star(gf, h));
    }
  }
  return produced == target;
}

}  // namespace sandwich
