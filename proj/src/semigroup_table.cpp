#include "sandwich/semigroup_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace sandwich {

SemigroupTable::SemigroupTable(const Sandwich& S,
                               std::vector<PartialMap> elements)
    : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end(), CanonicalLess{});
  index_.reserve(elems_.size() * 2);
  for (size_t i = 0; i < elems_.size(); ++i)
    index_.emplace(elems_[i], static_cast<int>(i));
  const size_t k = elems_.size();
  if (k > 5000)
    throw std::length_error("semigroup table too large");
  table_.assign(k * k, -1);
  for (size_t i = 0; i < k; ++i) {
    // f a is shared across the row.
    PartialMap fa = compose(elems_[i], S.a());
    for (size_t j = 0; j < k; ++j) {
      PartialMap p = compose(fa, elems_[j]);
      auto it = index_.find(p);
      if (it == index_.end())
        throw std::invalid_argument("element set is not *_a-closed");
      table_[i * k + j] = it->second;
    }
  }
}

SemigroupTable SemigroupTable::whole(const Sandwich& S) {
  return SemigroupTable(S, S.hom_set().elements());
}

int SemigroupTable::index_of(const PartialMap& f) const {
  auto it = index_.find(f);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> SemigroupTable::closure(const std::vector<int>& seed) const {
  std::vector<char> in(elems_.size(), 0);
  std::vector<int> members;
  members.reserve(elems_.size());
  for (int s : seed) {
    if (!in[static_cast<size_t>(s)]) {
      in[static_cast<size_t>(s)] = 1;
      members.push_back(s);
    }
  }
  // Frontier pass: multiply every new element with everything present.
  for (size_t next = 0; next < members.size(); ++next) {
    int x = members[next];
    for (size_t j = 0; j <= next; ++j) {
      int y = members[j];
      int p = product(x, y);
      if (!in[static_cast<size_t>(p)]) {
        in[static_cast<size_t>(p)] = 1;
        members.push_back(p);
      }
      p = product(y, x);
      if (!in[static_cast<size_t>(p)]) {
        in[static_cast<size_t>(p)] = 1;
        members.push_back(p);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool SemigroupTable::generates_all(const std::vector<int>& seed) const {
  return closure(seed).size() == elems_.size();
}

std::vector<uint64_t> SemigroupTable::right_ideal_mask(int y) const {
  std::vector<uint64_t> mask((elems_.size() + 63) / 64, 0);
  mask_set(mask, y);
  for (size_t j = 0; j < elems_.size(); ++j)
    mask_set(mask, product(y, static_cast<int>(j)));
  return mask;
}

std::vector<uint64_t> SemigroupTable::left_ideal_mask(int y) const {
  std::vector<uint64_t> mask((elems_.size() + 63) / 64, 0);
  mask_set(mask, y);
  for (size_t i = 0; i < elems_.size(); ++i)
    mask_set(mask, product(static_cast<int>(i), y));
  return mask;
}

std::vector<uint64_t> SemigroupTable::twosided_ideal_mask(int y) const {
  std::vector<uint64_t> mask((elems_.size() + 63) / 64, 0);
  mask_set(mask, y);
  for (size_t i = 0; i < elems_.size(); ++i) {
    int iy = product(static_cast<int>(i), y);
    mask_set(mask, iy);
    for (size_t j = 0; j < elems_.size(); ++j)
      mask_set(mask, product(iy, static_cast<int>(j)));
  }
  for (size_t j = 0; j < elems_.size(); ++j)
    mask_set(mask, product(y, static_cast<int>(j)));
  return mask;
}

bool SemigroupTable::leq_r(int x, int y) const {
  if (x == y) return true;
  for (size_t j = 0; j < elems_.size(); ++j)
    if (product(y, static_cast<int>(j)) == x) return true;
  return false;
}

bool SemigroupTable::leq_l(int x, int y) const {
  if (x == y) return true;
  for (size_t i = 0; i < elems_.size(); ++i)
    if (product(static_cast<int>(i), y) == x) return true;
  return false;
}

bool SemigroupTable::leq_j(int x, int y) const {
  if (leq_r(x, y) || leq_l(x, y)) return true;
  for (size_t i = 0; i < elems_.size(); ++i) {
    int iy = product(static_cast<int>(i), y);
    for (size_t j = 0; j < elems_.size(); ++j)
      if (product(iy, static_cast<int>(j)) == x) return true;
  }
  return false;
}

bool SemigroupTable::related_d(int x, int y) const {
  for (size_t h = 0; h < elems_.size(); ++h)
    if (related_r(x, static_cast<int>(h)) &&
        related_l(static_cast<int>(h), y))
      return true;
  return false;
}

std::vector<int> SemigroupTable::idempotent_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < elems_.size(); ++i)
    if (product(static_cast<int>(i), static_cast<int>(i)) ==
        static_cast<int>(i))
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> SemigroupTable::indecomposable_indices() const {
  std::vector<char> hit(elems_.size(), 0);
  for (size_t i = 0; i < elems_.size(); ++i)
    for (size_t j = 0; j < elems_.size(); ++j)
      hit[static_cast<size_t>(product(static_cast<int>(i),
                                      static_cast<int>(j)))] = 1;
  std::vector<int> out;
  for (size_t i = 0; i < elems_.size(); ++i)
    if (!hit[i]) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace sandwich
