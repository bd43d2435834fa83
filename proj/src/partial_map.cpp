#include "sandwich/partial_map.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sandwich {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::PT: return "pt";
    case Variant::T: return "t";
    case Variant::I: return "i";
  }
  return "?";
}

Variant variant_from_string(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(c)));
  if (t == "pt") return Variant::PT;
  if (t == "t") return Variant::T;
  if (t == "i") return Variant::I;
  throw std::invalid_argument("unknown variant: " + s);
}

PartialMap::PartialMap(int m, int n, std::vector<int> images)
    : m_(m), n_(n), images_(std::move(images)) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("negative ground set size");
  if (static_cast<int>(images_.size()) != m)
    throw std::invalid_argument("image sequence has wrong length");
  for (int v : images_)
    if (v < 0 || v > n)
      throw std::invalid_argument("image entry out of range");
}

PartialMap PartialMap::empty(int m, int n) {
  return PartialMap(m, n, std::vector<int>(static_cast<size_t>(m), 0));
}

PartialMap PartialMap::identity(int k) {
  std::vector<int> im(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) im[static_cast<size_t>(i)] = i + 1;
  return PartialMap(k, k, std::move(im));
}

std::vector<int> PartialMap::domain() const {
  std::vector<int> d;
  for (int x = 1; x <= m_; ++x)
    if (defined_at(x)) d.push_back(x);
  return d;
}

std::vector<int> PartialMap::image() const {
  std::set<int> s;
  for (int v : images_)
    if (v != 0) s.insert(v);
  return std::vector<int>(s.begin(), s.end());
}

int PartialMap::rank() const {
  return static_cast<int>(image().size());
}

bool PartialMap::is_full() const {
  for (int v : images_)
    if (v == 0) return false;
  return true;
}

bool PartialMap::is_injective() const {
  std::vector<bool> seen(static_cast<size_t>(n_) + 1, false);
  for (int v : images_) {
    if (v == 0) continue;
    if (seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

bool PartialMap::is_surjective() const {
  return rank() == n_;
}

bool PartialMap::satisfies(Variant v) const {
  switch (v) {
    case Variant::PT: return true;
    case Variant::T: return m_ >= 1 && n_ >= 1 && is_full();
    case Variant::I: return is_injective();
  }
  return false;
}

bool canonical_less(const PartialMap& f, const PartialMap& g) {
  if (f.source_size() != g.source_size())
    return f.source_size() < g.source_size();
  if (f.target_size() != g.target_size())
    return f.target_size() < g.target_size();
  const int big = f.target_size() + 1;  // undefined sorts last
  for (size_t i = 0; i < f.images().size(); ++i) {
    int a = f.images()[i] == 0 ? big : f.images()[i];
    int b = g.images()[i] == 0 ? big : g.images()[i];
    if (a != b) return a < b;
  }
  return false;
}

PartialMap parse_map(const std::string& text, int m, int n, Variant v) {
  std::istringstream in(text);
  std::vector<int> images;
  std::string tok;
  while (in >> tok) {
    if (tok == "-") {
      images.push_back(0);
      continue;
    }
    size_t pos = 0;
    int val;
    try {
      val = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad token '" + tok + "' in map");
    }
    if (pos != tok.size())
      throw std::invalid_argument("bad token '" + tok + "' in map");
    if (val < 1 || val > n)
      throw std::invalid_argument("image entry " + tok + " out of 1.." +
                                  std::to_string(n));
    images.push_back(val);
  }
  if (static_cast<int>(images.size()) != m)
    throw std::invalid_argument("expected " + std::to_string(m) +
                                " tokens, got " +
                                std::to_string(images.size()));
  PartialMap f(m, n, std::move(images));
  if (v == Variant::T && !f.satisfies(Variant::T))
    throw std::invalid_argument("map is not full (variant T)");
  if (v == Variant::I && !f.satisfies(Variant::I))
    throw std::invalid_argument("duplicate image entry (variant I)");
  return f;
}

std::string format_map(const PartialMap& f) {
  std::string out;
  for (size_t i = 0; i < f.images().size(); ++i) {
    if (i) out += ' ';
    if (f.images()[i] == 0)
      out += '-';
    else
      out += std::to_string(f.images()[i]);
  }
  return out;
}

PartialMap compose(const PartialMap& f, const PartialMap& g) {
  if (f.target_size() != g.source_size())
    throw std::invalid_argument("compose: dimension mismatch");
  std::vector<int> images(static_cast<size_t>(f.source_size()), 0);
  for (int x = 1; x <= f.source_size(); ++x) {
    int y = f.apply(x);
    if (y != 0) images[static_cast<size_t>(x - 1)] = g.apply(y);
  }
  return PartialMap(f.source_size(), g.target_size(), std::move(images));
}

MapProfile profile(const PartialMap& f) {
  MapProfile p;
  p.dom = f.domain();
  p.im = f.image();
  p.rank = static_cast<int>(p.im.size());
  // Kernel blocks keyed by image point, listed in order of least element.
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(static_cast<size_t>(f.target_size()) + 1, -1);
  for (int x : p.dom) {
    int y = f.apply(x);
    if (block_of[static_cast<size_t>(y)] < 0) {
      block_of[static_cast<size_t>(y)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<size_t>(block_of[static_cast<size_t>(y)])].push_back(x);
  }
  // Domain scan is in increasing order, so blocks are already sorted and
  // appear in order of least element.
  p.kernel = std::move(blocks);
  return p;
}

ClassifyFlags classify(const PartialMap& f) {
  ClassifyFlags c;
  c.full = f.is_full();
  c.injective = f.is_injective();
  c.surjective = f.is_surjective();
  return c;
}

PartialMap pseudo_inverse(const PartialMap& f) {
  std::vector<int> images(static_cast<size_t>(f.target_size()), 0);
  // Least element of each fibre: scan x ascending, keep the first hit.
  for (int x = 1; x <= f.source_size(); ++x) {
    int y = f.apply(x);
    if (y != 0 && images[static_cast<size_t>(y - 1)] == 0)
      images[static_cast<size_t>(y - 1)] = x;
  }
  return PartialMap(f.target_size(), f.source_size(), std::move(images));
}

KernelRelation kernel_relation(const std::vector<int>& S,
                               const std::vector<std::vector<int>>& K) {
  KernelRelation r;
  r.saturates = true;
  r.separates = true;
  for (const auto& block : K) {
    int hits = 0;
    for (int x : block)
      if (std::find(S.begin(), S.end(), x) != S.end()) ++hits;
    if (hits == 0) r.saturates = false;
    if (hits > 1) r.separates = false;
  }
  r.cross_section = r.saturates && r.separates;
  return r;
}

long long hom_set_size(Variant v, int m, int n, long long cap) {
  long long total = 0;
  switch (v) {
    case Variant::PT: {
      total = 1;
      for (int i = 0; i < m; ++i) {
        if (total > cap / (n + 1) + 1) return -1;
        total *= (n + 1);
        if (total > cap) return -1;
      }
      return total;
    }
    case Variant::T: {
      if (m < 1 || n < 1)
        throw std::invalid_argument("variant T needs non-empty ground sets");
      total = 1;
      for (int i = 0; i < m; ++i) {
        total *= n;
        if (total > cap) return -1;
      }
      return total;
    }
    case Variant::I: {
      // sum over rank mu of mu! C(m,mu) C(n,mu)
      int xi = std::min(m, n);
      long long sum = 0;
      for (int mu = 0; mu <= xi; ++mu) {
        long long term = 1;
        for (int i = 0; i < mu; ++i) {
          term *= (m - i);
          term /= (i + 1);
        }
        for (int i = 0; i < mu; ++i) {
          long long c = static_cast<long long>(n - i);
          if (term > cap / std::max(1LL, c)) return -1;
          term *= c;
          term /= (i + 1);
        }
        long long fact = 1;
        for (int i = 2; i <= mu; ++i) {
          fact *= i;
          if (fact > cap) return -1;
        }
        if (term > cap / std::max(1LL, fact)) return -1;
        term *= fact;
        sum += term;
        if (sum > cap) return -1;
      }
      return sum;
    }
  }
  return -1;
}

namespace {

void enumerate_injective(int m, int n, int pos, std::vector<int>& images,
                         std::vector<bool>& used,
                         std::vector<PartialMap>& out) {
  if (pos == m) {
    out.emplace_back(m, n, images);
    return;
  }
  // Canonical order: defined values ascending, then undefined.
  for (int y = 1; y <= n; ++y) {
    if (used[static_cast<size_t>(y)]) continue;
    used[static_cast<size_t>(y)] = true;
    images[static_cast<size_t>(pos)] = y;
    enumerate_injective(m, n, pos + 1, images, used, out);
    used[static_cast<size_t>(y)] = false;
  }
  images[static_cast<size_t>(pos)] = 0;
  enumerate_injective(m, n, pos + 1, images, used, out);
}

}  // namespace

std::vector<PartialMap> enumerate_hom_set(Variant v, int m, int n,
                                          long long cap) {
  long long size = hom_set_size(v, m, n, cap);
  if (size < 0)
    throw std::length_error("hom-set larger than enumeration cap");
  std::vector<PartialMap> out;
  out.reserve(static_cast<size_t>(size));
  switch (v) {
    case Variant::PT: {
      // Mixed-radix counter over digits 1..n,undefined (undefined last).
      std::vector<int> digits(static_cast<size_t>(m), 0);  // 0..n, n=undef
      while (true) {
        std::vector<int> images(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
          int d = digits[static_cast<size_t>(i)];
          images[static_cast<size_t>(i)] = d == n ? 0 : d + 1;
        }
        out.emplace_back(m, n, std::move(images));
        int i = m - 1;
        while (i >= 0 && digits[static_cast<size_t>(i)] == n) {
          digits[static_cast<size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
        ++digits[static_cast<size_t>(i)];
      }
      break;
    }
    case Variant::T: {
      std::vector<int> images(static_cast<size_t>(m), 1);
      while (true) {
        out.emplace_back(m, n, images);
        int i = m - 1;
        while (i >= 0 && images[static_cast<size_t>(i)] == n) {
          images[static_cast<size_t>(i)] = 1;
          --i;
        }
        if (i < 0) break;
        ++images[static_cast<size_t>(i)];
      }
      break;
    }
    case Variant::I: {
      std::vector<int> images(static_cast<size_t>(m), 0);
      std::vector<bool> used(static_cast<size_t>(n) + 1, false);
      enumerate_injective(m, n, 0, images, used, out);
      break;
    }
  }
  return out;
}

}  // namespace sandwich
