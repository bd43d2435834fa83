#include "sandwich/eggbox.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace sandwich {

namespace {

std::vector<int> r_sig(const PartialMap& f) {
  std::vector<int> sig(static_cast<size_t>(f.source_size()) + 1, 0);
  std::map<int, int> block_id;
  for (int x = 1; x <= f.source_size(); ++x) {
    int y = f.apply(x);
    if (y == 0) continue;
    auto it = block_id.find(y);
    if (it == block_id.end())
      it = block_id.emplace(y, static_cast<int>(block_id.size()) + 1).first;
    sig[static_cast<size_t>(x)] = it->second;
  }
  return sig;
}

struct ClassBucket {
  std::vector<PartialMap> members;
};

}  // namespace

EggBox build_eggbox(const Sandwich& S, EggBoxScope scope) {
  EggBox box;
  box.variant = S.variant();
  box.m = S.m();
  box.n = S.n();
  box.a_text = format_map(S.a());
  box.scope = scope;

  std::vector<PartialMap> universe;
  for (const PartialMap& f : S.hom_set().elements()) {
    if (scope == EggBoxScope::Regular && !S.pset(f).regular) continue;
    universe.push_back(f);
  }

  // D^a-partition via the closed forms: regular classes collect by rank,
  // P1-only classes are single R^a-classes, P2-only single L^a-classes,
  // the rest are singletons.
  std::map<std::pair<int, std::vector<int>>, ClassBucket> buckets;
  int singleton_id = 0;
  for (const PartialMap& f : universe) {
    PSetFlags flags = S.pset(f);
    std::pair<int, std::vector<int>> key;
    if (flags.regular) {
      key = {0, {f.rank()}};
    } else if (flags.p1) {
      key = {1, r_sig(f)};
    } else if (flags.p2) {
      key = {2, f.image()};
    } else {
      key = {3, {singleton_id++}};
    }
    buckets[key].members.push_back(f);
  }

  for (auto& [key, bucket] : buckets) {
    EggBoxClass cls;
    auto& members = bucket.members;
    std::sort(members.begin(), members.end(), CanonicalLess{});
    cls.rank = members.front().rank();
    cls.size = static_cast<long long>(members.size());
    // Rows: R^a-classes; columns: L^a-classes.  In non-regular classes one
    // of the two directions is trivial and every cell is a singleton.
    std::map<std::vector<int>, int> rows, cols;
    std::vector<std::pair<int, int>> coord(members.size());
    for (size_t i = 0; i < members.size(); ++i) {
      const PartialMap& g = members[i];
      PSetFlags gf = S.pset(g);
      std::vector<int> rkey =
          gf.p1 ? r_sig(g) : std::vector<int>{-1 - static_cast<int>(i)};
      std::vector<int> ckey =
          gf.p2 ? g.image() : std::vector<int>{-1 - static_cast<int>(i)};
      auto r = rows.emplace(rkey, static_cast<int>(rows.size()));
      auto c = cols.emplace(ckey, static_cast<int>(cols.size()));
      coord[i] = {r.first->second, c.first->second};
    }
    cls.rows.assign(rows.size(), PartialMap());
    cls.cols.assign(cols.size(), PartialMap());
    cls.cells.assign(rows.size(),
                     std::vector<std::vector<PartialMap>>(cols.size()));
    cls.groups.assign(rows.size(), std::vector<bool>(cols.size(), false));
    for (size_t i = 0; i < members.size(); ++i) {
      auto [r, c] = coord[i];
      auto& cell = cls.cells[static_cast<size_t>(r)][static_cast<size_t>(c)];
      cell.push_back(members[i]);
      if (cls.rows[static_cast<size_t>(r)].source_size() == 0 &&
          cls.rows[static_cast<size_t>(r)].target_size() == 0)
        cls.rows[static_cast<size_t>(r)] = members[i];
      if (cls.cols[static_cast<size_t>(c)].source_size() == 0 &&
          cls.cols[static_cast<size_t>(c)].target_size() == 0)
        cls.cols[static_cast<size_t>(c)] = members[i];
      if (S.star(members[i], members[i]) == members[i])
        cls.groups[static_cast<size_t>(r)][static_cast<size_t>(c)] = true;
    }
    box.dclasses.push_back(std::move(cls));
  }

  // Cell (0,0) always holds the canonical-least member of the class.
  std::sort(box.dclasses.begin(), box.dclasses.end(),
            [](const EggBoxClass& a, const EggBoxClass& b) {
              if (a.rank != b.rank) return a.rank > b.rank;
              return canonical_less(a.cells.front().front().front(),
                                    b.cells.front().front().front());
            });

  // Covering pairs of the J^a-order on the classes (stability makes the
  // J^a- and D^a-classes coincide at this scale).
  const size_t k = box.dclasses.size();
  auto rep = [&](size_t i) -> const PartialMap& {
    return box.dclasses[i].cells.front().front().front();
  };
  std::vector<std::vector<char>> leq(k, std::vector<char>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      leq[i][j] = S.jorder_leq(rep(i), rep(j)) ? 1 : 0;
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (i == j || !leq[i][j] || leq[j][i]) continue;
      bool cover = true;
      for (size_t h = 0; h < k && cover; ++h) {
        if (h == i || h == j) continue;
        if (leq[i][h] && !leq[h][i] && leq[h][j] && !leq[j][h]) cover = false;
      }
      if (cover)
        box.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::sort(box.covers.begin(), box.covers.end());
  return box;
}

std::string render_json(const EggBox& box) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["variant"] = variant_name(box.variant);
  j["m"] = box.m;
  j["n"] = box.n;
  j["a"] = box.a_text;
  j["scope"] = box.scope == EggBoxScope::Full ? "full" : "regular";
  j["dclasses"] = nlohmann::ordered_json::array();
  for (const auto& cls : box.dclasses) {
    nlohmann::ordered_json jc;
    jc["rank"] = cls.rank;
    jc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : cls.rows) jc["rows"].push_back(format_map(r));
    jc["cols"] = nlohmann::ordered_json::array();
    for (const auto& c : cls.cols) jc["cols"].push_back(format_map(c));
    jc["cells"] = nlohmann::ordered_json::array();
    for (const auto& row : cls.cells) {
      nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
      for (const auto& cell : row) {
        nlohmann::ordered_json jcell = nlohmann::ordered_json::array();
        for (const auto& g : cell) jcell.push_back(format_map(g));
        jrow.push_back(std::move(jcell));
      }
      jc["cells"].push_back(std::move(jrow));
    }
    jc["groups"] = nlohmann::ordered_json::array();
    for (const auto& row : cls.groups) {
      nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
      for (bool g : row) jrow.push_back(g);
      jc["groups"].push_back(std::move(jrow));
    }
    j["dclasses"].push_back(std::move(jc));
  }
  j["covers"] = nlohmann::ordered_json::array();
  for (const auto& [lo, hi] : box.covers)
    j["covers"].push_back(nlohmann::ordered_json::array({lo, hi}));
  return j.dump(2) + "\n";
}

EggBox parse_eggbox_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  EggBox box;
  box.variant = variant_from_string(j.at("variant").get<std::string>());
  box.m = j.at("m").get<int>();
  box.n = j.at("n").get<int>();
  box.a_text = j.at("a").get<std::string>();
  box.scope = j.at("scope").get<std::string>() == "full" ? EggBoxScope::Full
                                                         : EggBoxScope::Regular;
  for (const auto& jc : j.at("dclasses")) {
    EggBoxClass cls;
    cls.rank = jc.at("rank").get<int>();
    for (const auto& r : jc.at("rows"))
      cls.rows.push_back(
          parse_map(r.get<std::string>(), box.m, box.n, Variant::PT));
    for (const auto& c : jc.at("cols"))
      cls.cols.push_back(
          parse_map(c.get<std::string>(), box.m, box.n, Variant::PT));
    long long size = 0;
    for (const auto& jrow : jc.at("cells")) {
      std::vector<std::vector<PartialMap>> row;
      for (const auto& jcell : jrow) {
        std::vector<PartialMap> cell;
        for (const auto& g : jcell)
          cell.push_back(
              parse_map(g.get<std::string>(), box.m, box.n, Variant::PT));
        size += static_cast<long long>(cell.size());
        row.push_back(std::move(cell));
      }
      cls.cells.push_back(std::move(row));
    }
    for (const auto& jrow : jc.at("groups")) {
      std::vector<bool> row;
      for (const auto& g : jrow) row.push_back(g.get<bool>());
      cls.groups.push_back(std::move(row));
    }
    cls.size = size;
    box.dclasses.push_back(std::move(cls));
  }
  for (const auto& e : j.at("covers"))
    box.covers.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return box;
}

std::string render_dot(const EggBox& box) {
  std::ostringstream out;
  out << "digraph eggbox {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (size_t i = 0; i < box.dclasses.size(); ++i) {
    const auto& cls = box.dclasses[i];
    out << "  d" << i << " [label=<<TABLE BORDER=\"1\" CELLBORDER=\"1\" "
           "CELLSPACING=\"0\">";
    for (size_t r = 0; r < cls.cells.size(); ++r) {
      out << "<TR>";
      for (size_t c = 0; c < cls.cells[r].size(); ++c) {
        out << "<TD" << (cls.groups[r][c] ? " BGCOLOR=\"gray\"" : "") << ">";
        if (cls.cells[r][c].empty())
          out << "&nbsp;";
        else
          out << cls.cells[r][c].size();
        out << "</TD>";
      }
      out << "</TR>";
    }
    out << "</TABLE>>];\n";
  }
  for (const auto& [lo, hi] : box.covers)
    out << "  d" << lo << " -> d" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string render_ascii(const EggBox& box) {
  std::ostringstream out;
  out << "egg-box " << variant_name(box.variant) << " m=" << box.m
      << " n=" << box.n << " a=[" << box.a_text << "] scope="
      << (box.scope == EggBoxScope::Full ? "full" : "regular") << "\n";
  for (size_t i = 0; i < box.dclasses.size(); ++i) {
    const auto& cls = box.dclasses[i];
    out << "D" << i << " rank=" << cls.rank << " size=" << cls.size << " ("
        << cls.rows.size() << " x " << cls.cols.size() << ")\n";
    for (size_t r = 0; r < cls.cells.size(); ++r) {
      out << "  ";
      for (size_t c = 0; c < cls.cells[r].size(); ++c) {
        out << '[' << cls.cells[r][c].size()
            << (cls.groups[r][c] ? "*" : " ") << ']';
      }
      out << "\n";
    }
  }
  if (!box.covers.empty()) {
    out << "covers:";
    for (const auto& [lo, hi] : box.covers)
      out << " D" << lo << "<D" << hi;
    out << "\n";
  }
  return out.str();
}

bool dot_is_well_formed(const std::string& dot) {
  if (dot.rfind("digraph", 0) != 0) return false;
  int brace = 0;
  int angle = 0;
  bool in_quote = false;
  for (size_t i = 0; i < dot.size(); ++i) {
    char ch = dot[i];
    if (in_quote) {
      if (ch == '"') in_quote = false;
      continue;
    }
    switch (ch) {
      case '"': in_quote = true; break;
      case '{': ++brace; break;
      case '}':
        --brace;
        if (brace < 0) return false;
        break;
      case '<': ++angle; break;
      case '>':
        if (i > 0 && dot[i - 1] == '-') break;  // edge arrow
        --angle;
        if (angle < 0) return false;
        break;
      default: break;
    }
  }
  return brace == 0 && angle == 0 && !in_quote;
}

}  // namespace sandwich
