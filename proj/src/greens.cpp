#include "sandwich/greens.hpp"

#include <stdexcept>

namespace sandwich {

const char* green_kind_name(GreenKind k) {
  switch (k) {
    case GreenKind::R: return "R";
    case GreenKind::L: return "L";
    case GreenKind::H: return "H";
    case GreenKind::D: return "D";
    case GreenKind::J: return "J";
  }
  return "?";
}

GreenKind green_kind_from_string(const std::string& s) {
  if (s == "R" || s == "r") return GreenKind::R;
  if (s == "L" || s == "l") return GreenKind::L;
  if (s == "H" || s == "h") return GreenKind::H;
  if (s == "D" || s == "d") return GreenKind::D;
  if (s == "J" || s == "j") return GreenKind::J;
  throw std::invalid_argument("unknown Green kind: " + s);
}

namespace {

// f = gh for some h iff, on the kernel of g extended by an undefined class,
// every block maps into one f-value (or wholly out of dom(f)).  Concretely:
// dom(f) within dom(g), dom(f) a union of ker(g)-blocks, and ker(g)-related
// points of dom(f) are ker(f)-related.  The last two clauses go beyond the
// bare restriction ker(f) >= ker(g)|dom(f): a composite gh is defined on all
// of a g-block or none of it.
bool kernel_factor_condition(const PartialMap& f, const PartialMap& g) {
  for (int x = 1; x <= f.source_size(); ++x) {
    if (!g.defined_at(x)) continue;
    for (int y = x + 1; y <= f.source_size(); ++y) {
      if (!g.defined_at(y) || g.apply(x) != g.apply(y)) continue;
      if (f.defined_at(x) != f.defined_at(y)) return false;
      if (f.defined_at(x) && f.apply(x) != f.apply(y)) return false;
    }
  }
  return true;
}

bool dom_subset(const PartialMap& f, const PartialMap& g) {
  for (int x = 1; x <= f.source_size(); ++x)
    if (f.defined_at(x) && !g.defined_at(x)) return false;
  return true;
}

bool im_subset(const PartialMap& f, const PartialMap& g) {
  auto gi = g.image();
  for (int y : f.image())
    if (!std::binary_search(gi.begin(), gi.end(), y)) return false;
  return true;
}

bool same_kernel(const PartialMap& f, const PartialMap& g) {
  // Same domain assumed checked by caller for R; here compare the induced
  // partitions on the common domain.
  for (int x = 1; x <= f.source_size(); ++x) {
    if (!f.defined_at(x)) continue;
    for (int y = x + 1; y <= f.source_size(); ++y) {
      if (!f.defined_at(y)) continue;
      if ((f.apply(x) == f.apply(y)) != (g.apply(x) == g.apply(y)))
        return false;
    }
  }
  return true;
}

}  // namespace

bool green_leq(GreenKind k, const PartialMap& f, const PartialMap& g,
               Variant v) {
  (void)v;  // the PT clauses specialise correctly for T and I
  switch (k) {
    case GreenKind::R:
      if (f.source_size() != g.source_size())
        throw std::invalid_argument("green_leq R: source mismatch");
      return dom_subset(f, g) && kernel_factor_condition(f, g);
    case GreenKind::L:
      if (f.target_size() != g.target_size())
        throw std::invalid_argument("green_leq L: target mismatch");
      return im_subset(f, g);
    case GreenKind::J:
    case GreenKind::D:
      return f.rank() <= g.rank();
    case GreenKind::H:
      return green_leq(GreenKind::R, f, g, v) &&
             green_leq(GreenKind::L, f, g, v);
  }
  return false;
}

bool green_related(GreenKind k, const PartialMap& f, const PartialMap& g,
                   Variant v) {
  switch (k) {
    case GreenKind::R:
      if (f.source_size() != g.source_size())
        throw std::invalid_argument("green_related R: source mismatch");
      return f.domain() == g.domain() && same_kernel(f, g);
    case GreenKind::L:
      if (f.target_size() != g.target_size())
        throw std::invalid_argument("green_related L: target mismatch");
      return f.image() == g.image();
    case GreenKind::H:
      return green_related(GreenKind::R, f, g, v) &&
             green_related(GreenKind::L, f, g, v);
    case GreenKind::D:
    case GreenKind::J:
      return f.rank() == g.rank();
  }
  return false;
}

DClassCounts dclass_counts(Variant v, int alpha, int beta, int mu) {
  if (alpha < 0 || beta < 0)
    throw std::invalid_argument("dclass_counts: negative ground set size");
  int lo = (v == Variant::T) ? 1 : 0;
  if (mu < lo || mu > std::min(alpha, beta))
    throw std::invalid_argument("dclass_counts: rank out of range");
  DClassCounts c;
  c.mu = mu;
  switch (v) {
    case Variant::PT:
      c.r_classes = stirling2(alpha + 1, mu + 1);
      c.l_classes = binom(beta, mu);
      break;
    case Variant::T:
      c.r_classes = stirling2(alpha, mu);
      c.l_classes = binom(beta, mu);
      break;
    case Variant::I:
      c.r_classes = binom(alpha, mu);
      c.l_classes = binom(beta, mu);
      break;
  }
  c.h_classes = c.r_classes * c.l_classes;
  c.h_size = factorial(mu);
  c.total = c.h_size * c.h_classes;
  return c;
}

}  // namespace sandwich
