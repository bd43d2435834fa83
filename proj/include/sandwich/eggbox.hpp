// Egg-box model of a sandwich semigroup (full or regular scope): D^a-classes
// as grids of H^a-cells, rows R^a-classes, columns L^a-classes, group flags,
// and the covering order of the J^a-classes.  Serialises to JSON, DOT and
// ASCII.

#ifndef SANDWICH_EGGBOX_HPP
#define SANDWICH_EGGBOX_HPP

#include <string>

#include "sandwich/sandwich.hpp"

namespace sandwich {

enum class EggBoxScope { Full, Regular };

struct EggBoxClass {
  int rank = 0;
  std::vector<PartialMap> rows;  // R^a-class representatives, canonical order
  std::vector<PartialMap> cols;  // L^a-class representatives
  // cells[r][c]: members of the H^a-cell, canonical order (may be empty in
  // non-regular D-classes of the full diagram).
  std::vector<std::vector<std::vector<PartialMap>>> cells;
  std::vector<std::vector<bool>> groups;  // cell contains a *_a-idempotent
  long long size = 0;
};

struct EggBox {
  Variant variant = Variant::PT;
  int m = 0, n = 0;
  std::string a_text;
  EggBoxScope scope = EggBoxScope::Full;
  std::vector<EggBoxClass> dclasses;          // rank-descending, then rep
  std::vector<std::pair<int, int>> covers;    // (lower index, upper index)
};

EggBox build_eggbox(const Sandwich& S, EggBoxScope scope);

std::string render_json(const EggBox& box);
EggBox parse_eggbox_json(const std::string& text);
std::string render_dot(const EggBox& box);
std::string render_ascii(const EggBox& box);

// Minimal structural well-formedness check for DOT text (used by tests and
// the CLI self-checks; not a full grammar).
bool dot_is_well_formed(const std::string& dot);

}  // namespace sandwich

#endif  // SANDWICH_EGGBOX_HPP
