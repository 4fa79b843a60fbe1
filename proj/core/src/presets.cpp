#include "mcayley/presets.hpp"

#include <algorithm>
#include <string_view>

namespace mcayley {

namespace {

// Each row lists R, L, S, T and x as words in the group's generator names.
// "{h}" stands for half the order of the first generator.
struct Row {
  std::string_view name;
  std::string_view R, L, S, T, x;
};

constexpr Row kRows[] = {
    {"cyclic", "a, a^-1", "a^2, a^-2", "1, a, a^3", "a, a^-1, a^2, a^-2", "a^2"},
    {"dicyclic", "a, a^-1", "a^2, a^-2", "1, a, a^3, b", "a, a^-1, a^{h}, a^2, a^-2", "a^2"},
    // rank 2 abelian, o(a_1) in {3, 4}
    {"abelian-2-small", "a_1, a_1^-1, a_2, a_2^-1", "a_1, a_1^-1, a_1*a_2, (a_1*a_2)^-1",
     "1, a_1, a_1*a_2^-1", "a_1, a_1^-1, a_2, a_2^-1, a_1*a_2, (a_1*a_2)^-1", "a_1^-1"},
    {"abelian-2-small-involution", "a_1, a_1^-1, a_2", "a_1, a_1^-1, a_1^{h}",
     "1, a_1, a_1*a_2^-1", "a_1, a_1^-1, a_2, a_1*a_2, a_1^-1*a_2", "a_1^-1"},
    // rank 2 abelian, o(a_1) >= 5
    {"abelian-2-large", "a_1, a_1^-1, a_1*a_2, (a_1*a_2)^-1", "a_1, a_1^-1, a_1^2, a_1^-2",
     "1, a_1, a_1*a_2", "a_1, a_1^-1, a_1^2, a_1^-2, a_1*a_2, (a_1*a_2)^-1", "a_1^-1"},
    {"gdic-2-four", "a_1, a_1^-1, a_2, a_2^-1", "a_1, a_1^-1, a_1*a_2, (a_1*a_2)^-1",
     "1, a_1, a_1*a_2^-1, b", "a_1, a_1^-1, a_2, a_2^-1, a_1*a_2, (a_1*a_2)^-1, b^2", "a_1^-1"},
    {"gdic-2-four-involution", "a_1, a_1^-1, a_2", "a_1, a_1^-1, a_1^{h}",
     "1, a_1, a_1*a_2^-1, b", "a_1, a_1^-1, a_1*a_2, (a_1*a_2)^-1, b, b^-1", "a_1^-1"},
    {"gdic-2-large", "a_1, a_1^-1, a_1*a_2, (a_1*a_2)^-1", "a_1, a_1^-1, a_1^2, a_1^-2",
     "1, a_1, a_1*a_2, b", "a_1, a_1^-1, a_1^2, a_1^-2, a_1*a_2, (a_1*a_2)^-1, b^2", "a_1^-1"},
    {"E2^3", "a_1, a_2, a_3", "a_1, a_1*a_2, a_2*a_3", "1", "a_1, a_2, a_1*a_2", "a_1"},
    {"D6", "a*b, a, a^-1", "b*a, a, a^-1", "1, a*b, b", "a, a^-1, b, b*a, b*a^-1", "a"},
    {"D8", "a*b, a, a^-1", "b*a, a, a^-1", "1, a*b, b", "a, a^-1, a^2, b, b*a", "a"},
    {"D10", "a*b, a, a^-1", "b*a, a, a^-1", "1, a*b, b", "a, a^-1, a^2, a^-2, b", "a"},
    {"Alt4", "(2,3,4), (2,4,3), (1,2)(3,4), (1,2,3), (1,3,2)",
     "(2,3,4), (2,4,3), (1,2)(3,4), (1,3,4), (1,4,3)", "1",
     "(2,3,4), (2,4,3), (1,2)(3,4), (1,3)(2,4), (1,4)(2,3)", "(2,3,4)"},
    {"X16a", "a, b", "b, c", "1, a", "a, b, c", "b"},
    {"X16b", "a, a^-1, b", "a, a^-1, b", "1, a, a*b", "a, a^-1, a^2, a^-2, a^4", "b"},
    // In Q8*C3 and Q8*C4 the letters a, b, c mean i, j and the cyclic generator.
    {"Q8*C3", "a, a^-1", "b, b^-1", "1, b, c, a*b", "a, a^-1, a^2, c, c^-1", "a"},
    {"Q8*C4", "a, a^-1", "b, b^-1", "1, b, c, a*b", "a, a^-1, a^2, c, c^-1", "a"},
    {"X18", "a, a^-1", "b, b^-1", "1, b, c, a*b, a*c", "a, a^-1, b, b^-1, a*b, (a*b)^-1", "a"},
    {"X27", "a, a^-1, c, c^-1", "b, b^-1, c, c^-1", "1, b, c", "a, a^-1, b, b^-1, a*c, (a*c)^-1",
     "a"},
};

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : ", ") + w;
  return out;
}

std::string gen(int i) { return "a_" + std::to_string(i); }

// Rank >= 3 rows depend on the rank, so their text is generated here.
struct RankRow {
  std::string R, L, S, T, x;
};

RankRow rank_row(int kappa, bool dicyclic) {
  std::vector<std::string> r, l;
  for (int i = 1; i <= kappa; ++i) r.push_back(gen(i));
  for (int i = 1; i <= kappa; ++i) r.push_back(gen(i) + "^-1");
  std::vector<std::string> pairs;
  for (int i = 1; i < kappa; ++i) pairs.push_back("(" + gen(i) + "*" + gen(i + 1) + ")");
  l = pairs;
  if (dicyclic) l.push_back(gen(1) + "^-1");
  for (const auto& p : pairs) l.push_back(p + "^-1");
  l.push_back(gen(kappa));
  l.push_back(gen(kappa) + "^-1");
  std::vector<std::string> t = r;
  for (std::string w : {"a_1*a_2", "(a_1*a_2)^-1", "a_1*a_3", "(a_1*a_3)^-1"}) t.push_back(w);
  RankRow row;
  row.R = join(r);
  row.L = join(l);
  row.S = dicyclic ? "1, a_1, a_1*a_2, " + gen(kappa) + ", b"
                   : "1, a_1, a_1^-1, a_1*a_2, " + gen(kappa);
  row.T = join(t);
  row.x = "(a_1*a_2)^-1";
  return row;
}

const Row& find_row(std::string_view name) {
  for (const Row& r : kRows)
    if (r.name == name) return r;
  throw std::logic_error("missing preset row");
}

std::string expand(std::string_view text, int half) {
  std::string out(text);
  for (std::size_t p; (p = out.find("{h}")) != std::string::npos;) out.replace(p, 3, std::to_string(half));
  return out;
}

Preset build(const GroupDesc& desc, const std::string& row, std::string_view R, std::string_view L,
             std::string_view S, std::string_view T, std::string_view x,
             const std::vector<std::pair<std::string, std::string>>& aliases = {}) {
  FiniteGroup group = make_group(desc);
  const int half = group.generator_names().empty()
                       ? 0
                       : element_order(group, group.generator_names().front().second) / 2;
  ConnectionData cd;
  try {
    cd.R = parse_element_set(group, expand(R, half), aliases);
    cd.L = parse_element_set(group, expand(L, half), aliases);
    cd.S = parse_element_set(group, expand(S, half), aliases);
    cd.T = parse_element_set(group, expand(T, half), aliases);
    cd.x = parse_element(group, expand(x, half), aliases);
  } catch (const GroupError& e) {
    throw ConstructionError("preset row " + row + ": " + e.what());
  }
  try {
    check_connection_data(group, cd);
  } catch (const ConstructionError& e) {
    throw ConstructionError("preset row " + row + " for " + desc.to_string() +
                            " fails its invariants: " + e.what());
  }
  return Preset{row, desc, std::move(group), std::move(cd)};
}

Preset from_row(const GroupDesc& desc, std::string_view name,
                const std::vector<std::pair<std::string, std::string>>& aliases = {}) {
  const Row& r = find_row(name);
  return build(desc, std::string(name), r.R, r.L, r.S, r.T, r.x, aliases);
}

[[noreturn]] void unsupported(const GroupDesc& desc, const std::string& why) {
  throw ConstructionError("no preset for " + desc.to_string() + ": " + why);
}

}  // namespace

Preset preset(const GroupDesc& desc) {
  const auto& p = desc.params;
  switch (desc.family) {
    case Family::cyclic:
      if (p.at(0) < 6) unsupported(desc, "cyclic rows need order >= 6");
      return from_row(desc, "cyclic");
    case Family::dicyclic:
      if (p.at(0) / 2 < 6) unsupported(desc, "dicyclic rows need o(a) >= 6");
      return from_row(desc, "dicyclic");
    case Family::abelian: {
      const int rank = static_cast<int>(p.size());
      if (rank == 3 && std::all_of(p.begin(), p.end(), [](int d) { return d == 2; }))
        return from_row(desc, "E2^3");
      if (rank < 2) unsupported(desc, "use the cyclic family for rank 1");
      if (p[0] <= 2) unsupported(desc, "elementary abelian 2-groups other than E2^3 have no row");
      if (rank == 2) {
        if (p[0] >= 5) return from_row(desc, "abelian-2-large");
        return from_row(desc, p[1] == 2 ? "abelian-2-small-involution" : "abelian-2-small");
      }
      RankRow r = rank_row(rank, false);
      return build(desc, "abelian-rank-3+", r.R, r.L, r.S, r.T, r.x);
    }
    case Family::generalized_dicyclic: {
      const int rank = static_cast<int>(p.size());
      if (rank < 2) unsupported(desc, "use the dicyclic family for rank 1");
      if (rank == 2) {
        if (p[0] == 4) return from_row(desc, p[1] == 2 ? "gdic-2-four-involution" : "gdic-2-four");
        if (p[0] >= 5) return from_row(desc, "gdic-2-large");
        unsupported(desc, "rank-2 rows need d_1 >= 4");
      }
      RankRow r = rank_row(rank, true);
      return build(desc, "gdic-rank-3+", r.R, r.L, r.S, r.T, r.x);
    }
    case Family::dihedral:
      if (p.at(0) == 6 || p.at(0) == 8 || p.at(0) == 10) return from_row(desc, desc.to_string());
      unsupported(desc, "dihedral rows exist for orders 6, 8 and 10");
    case Family::alt4:
      return from_row(desc, "Alt4");
    case Family::exceptional:
      return from_row(desc, "X" + desc.id);
    case Family::direct_product: {
      const std::string name = desc.to_string();
      if (name == "Q8*C3" || name == "Q8*C4")
        return from_row(desc, name, {{"a", "i"}, {"b", "j"}, {"c", "a"}});
      unsupported(desc, "products other than Q8*C3 and Q8*C4 have no row");
    }
    default:
      unsupported(desc, "family outside the preset table");
  }
}

Digraph preset_graph(const Preset& p, int m) {
  if (m == 2) return bicay(p.group, p.data.R, p.data.L, p.data.S);
  if (m >= 3) return theta_general(p.group, p.data, m);
  throw ConstructionError("preset graphs need m >= 2");
}

std::vector<GroupDesc> preset_catalog() {
  std::vector<GroupDesc> out;
  for (const char* s : {"C6", "C7", "C8", "C9", "C10", "C11", "C12", "Dic12", "Dic16", "A(3,3)",
                        "A(4,2)", "A(4,4)", "A(5,5)", "A(3,3,3)", "E2^3", "D6", "D8", "D10", "Alt4",
                        "X16a", "X16b", "Q8*C3", "Q8*C4", "X18", "X27"})
    out.push_back(parse_group(s));
  return out;
}

}  // namespace mcayley
