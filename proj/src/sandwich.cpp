#include "sandwich/sandwich.hpp"

#include <algorithm>
#include <stdexcept>

namespace sandwich {

HomSet::HomSet(Variant v, int m, int n, long long cap) {
  elems_ = enumerate_hom_set(v, m, n, cap);
  index_.reserve(elems_.size() * 2);
  for (size_t i = 0; i < elems_.size(); ++i)
    index_.emplace(elems_[i], static_cast<int>(i));
}

int HomSet::index_of(const PartialMap& f) const {
  auto it = index_.find(f);
  return it == index_.end() ? -1 : it->second;
}

namespace {

// b for PT/I: dom(b) = im(a), a_i -> b_i with b_i the least element of the
// fibre A_i.  For T every point of X must be assigned a block: non-image
// points join the block of the least image point.
PartialMap make_b(Variant v, int m, int n, const PartialMap& a,
                  const std::vector<int>& image_points,
                  const std::vector<int>& chosen_points) {
  std::vector<int> images(static_cast<size_t>(m), 0);
  for (size_t i = 0; i < image_points.size(); ++i)
    images[static_cast<size_t>(image_points[i] - 1)] = chosen_points[i];
  if (v == Variant::T) {
    if (image_points.empty())
      throw std::invalid_argument("variant T sandwich element has rank 0");
    for (int x = 1; x <= m; ++x)
      if (images[static_cast<size_t>(x - 1)] == 0)
        images[static_cast<size_t>(x - 1)] = chosen_points[0];
  }
  (void)n;
  (void)a;
  return PartialMap(m, n, std::move(images));
}

}  // namespace

Sandwich::Sandwich(Variant v, int m, int n, PartialMap a, long long cap)
    : variant_(v), m_(m), n_(n), a_(std::move(a)), cap_(cap),
      cache_(std::make_shared<HomCache>()) {
  if (a_.source_size() != n || a_.target_size() != m)
    throw std::invalid_argument("sandwich element must map Y(n) -> X(m)");
  if (!a_.satisfies(v))
    throw std::invalid_argument("sandwich element violates variant");
  if (v == Variant::T && (m < 1 || n < 1))
    throw std::invalid_argument("variant T needs non-empty ground sets");

  // Fibre data of a, indexed by sorted image point.
  image_points_ = a_.image();
  alpha_ = static_cast<int>(image_points_.size());
  beta_ = m - alpha_;
  xi_ = std::min(m, n);
  kernel_classes_.assign(image_points_.size(), {});
  for (int y = 1; y <= n; ++y) {
    int x = a_.apply(y);
    if (x == 0) continue;
    auto it = std::lower_bound(image_points_.begin(), image_points_.end(), x);
    kernel_classes_[static_cast<size_t>(it - image_points_.begin())]
        .push_back(y);
  }
  Lambda_ = 1;
  for (const auto& cls : kernel_classes_) {
    chosen_points_.push_back(cls.front());
    lambda_.push_back(static_cast<int>(cls.size()));
    Lambda_ *= static_cast<int>(cls.size());
  }
  b_ = make_b(v, m, n, a_, image_points_, chosen_points_);
}

Sandwich new_sandwich(Variant v, int m, int n, const PartialMap& a,
                      long long cap) {
  return Sandwich(v, m, n, a, cap);
}

PartialMap Sandwich::star(const PartialMap& f, const PartialMap& g) const {
  if (f.source_size() != m_ || f.target_size() != n_ ||
      g.source_size() != m_ || g.target_size() != n_)
    throw std::invalid_argument("star: operands must lie in hom(X,Y)");
  return compose(compose(f, a_), g);
}

PSetFlags Sandwich::pset(const PartialMap& f) const {
  PSetFlags flags;
  // p1: im(f) within dom(a) and ker(a) separates im(f); for T the domain
  // clause is vacuous, for I the kernel clause is vacuous.
  auto fi = f.image();
  flags.p1 = true;
  std::vector<int> hits(image_points_.size(), 0);
  for (int y : fi) {
    int x = a_.apply(y);
    if (x == 0) {
      flags.p1 = false;
      break;
    }
    auto it = std::lower_bound(image_points_.begin(), image_points_.end(), x);
    if (++hits[static_cast<size_t>(it - image_points_.begin())] > 1) {
      flags.p1 = false;
      break;
    }
  }
  // p2: im(a) saturates ker(f): every kernel block of f meets im(a).
  flags.p2 = true;
  for (const auto& block : profile(f).kernel) {
    bool meets = false;
    for (int x : block)
      if (std::binary_search(image_points_.begin(), image_points_.end(), x)) {
        meets = true;
        break;
      }
    if (!meets) {
      flags.p2 = false;
      break;
    }
  }
  PartialMap afa = compose(compose(a_, f), a_);
  flags.p3 = afa.rank() == f.rank();
  flags.regular = flags.p1 && flags.p2;
  return flags;
}

ClassDescriptor Sandwich::green_class(GreenKind kind,
                                      const PartialMap& f) const {
  PSetFlags flags = pset(f);
  ClassDescriptor out;
  out.kind = kind;

  auto singleton = [&]() {
    out.members = {f};
    out.is_singleton_nonP = true;
  };

  const auto collect = [&](auto&& pred) {
    for (const PartialMap& g : hom_set().elements())
      if (pred(g)) out.members.push_back(g);
  };

  switch (kind) {
    case GreenKind::R:
      if (!flags.p1) { singleton(); break; }
      collect([&](const PartialMap& g) {
        return green_related(GreenKind::R, g, f, variant_) && pset(g).p1;
      });
      break;
    case GreenKind::L:
      if (!flags.p2) { singleton(); break; }
      collect([&](const PartialMap& g) {
        return green_related(GreenKind::L, g, f, variant_) && pset(g).p2;
      });
      break;
    case GreenKind::H:
      if (!flags.regular) { singleton(); break; }
      collect([&](const PartialMap& g) {
        return green_related(GreenKind::H, g, f, variant_);
      });
      break;
    case GreenKind::D:
      if (flags.regular) {
        collect([&](const PartialMap& g) {
          return g.rank() == f.rank() && pset(g).regular;
        });
      } else if (flags.p2) {
        return green_class(GreenKind::L, f);
      } else if (flags.p1) {
        return green_class(GreenKind::R, f);
      } else {
        singleton();
      }
      break;
    case GreenKind::J:
      if (flags.p3) {
        collect([&](const PartialMap& g) {
          return g.rank() == f.rank() && pset(g).p3;
        });
      } else {
        return green_class(GreenKind::D, f);
      }
      break;
  }
  if (!out.members.empty()) out.representative = out.members.front();
  return out;
}

bool Sandwich::jorder_leq(const PartialMap& f, const PartialMap& g) const {
  if (f == g) return true;
  PartialMap ag = compose(a_, g);                  // Y -> Y
  PartialMap ga = compose(g, a_);                  // X -> X
  PartialMap aga = compose(ag, a_);                // Y -> X
  if (f.rank() <= aga.rank()) return true;
  if (green_leq(GreenKind::L, f, ag, variant_)) return true;
  return green_leq(GreenKind::R, f, ga, variant_);
}

bool Sandwich::jorder_leq_fast(const PartialMap& f, const PartialMap& g) const {
  PSetFlags ff = pset(f);
  PSetFlags gf = pset(g);
  if (gf.p3) return f.rank() <= g.rank();
  if (ff.p3) return compose(compose(a_, g), a_).rank() >= f.rank();
  if (ff.p1) {
    if (compose(compose(a_, g), a_).rank() >= f.rank()) return true;
    return green_leq(GreenKind::R, f, compose(g, a_), variant_);
  }
  if (ff.p2) {
    if (compose(compose(a_, g), a_).rank() >= f.rank()) return true;
    return green_leq(GreenKind::L, f, compose(a_, g), variant_);
  }
  if (gf.p1) {
    if (compose(a_, g).rank() >= f.rank()) return true;
    return green_leq(GreenKind::R, f, g, variant_);
  }
  if (gf.p2) {
    if (compose(g, a_).rank() >= f.rank()) return true;
    return green_leq(GreenKind::L, f, g, variant_);
  }
  return jorder_leq(f, g);
}

std::vector<std::pair<int, long long>> Sandwich::regular_dclasses() const {
  int lo = (variant_ == Variant::T) ? 1 : 0;
  std::vector<std::pair<int, long long>> out;
  for (int mu = lo; mu <= alpha_; ++mu) out.emplace_back(mu, 0);
  for (const PartialMap& f : hom_set().elements()) {
    PSetFlags flags = pset(f);
    if (flags.regular) ++out[static_cast<size_t>(f.rank() - lo)].second;
  }
  return out;
}

MaximalJInfo Sandwich::maximal_jclasses() const {
  MaximalJInfo info;
  if (alpha_ < xi_) {
    for (const PartialMap& f : hom_set().elements())
      if (f.rank() > alpha_) info.singletons.push_back(f);
  } else {
    info.unique_maximum = true;
    for (const PartialMap& f : hom_set().elements())
      if (f.rank() == alpha_ && pset(f).p3)
        info.maximum_class.push_back(f);
  }
  return info;
}

const HomSet& Sandwich::hom_set() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->ptr)
    cache_->ptr = std::make_shared<const HomSet>(variant_, m_, n_, cap_);
  return *cache_->ptr;
}

std::vector<PartialMap> Sandwich::regular_elements() const {
  std::vector<PartialMap> out;
  for (const PartialMap& f : hom_set().elements())
    if (pset(f).regular) out.push_back(f);
  return out;
}

}  // namespace sandwich
