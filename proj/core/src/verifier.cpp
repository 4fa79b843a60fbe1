#include "mcayley/verifier.hpp"

#include <algorithm>

namespace mcayley {

namespace {

MRepresentationCheck check_representation(const FiniteGroup& group, const Digraph& g, int m,
                                          bool need_symmetric) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (g.n() != group.order() * m)
    throw std::invalid_argument("graph has " + std::to_string(g.n()) + " vertices, expected m|G| = " +
                                std::to_string(group.order() * m));
  MRepresentationCheck r;
  r.symmetric = g.is_symmetric();
  r.regular = is_regular(g).has_value();
  std::vector<Perm> gens = embedded_generators(group, m);
  r.contains_embedded = std::all_of(gens.begin(), gens.end(),
                                    [&](const Perm& p) { return is_automorphism(g, p); });
  AutOptions options;
  if (r.contains_embedded) options.known_generators = std::move(gens);
  options.stop_above = BigInt(group.order());
  AutResult aut = analyze(g, std::nullopt, options);
  r.aut_order = aut.group.order();
  r.nodes = aut.nodes;
  r.order_matches = !aut.aborted && r.aut_order == group.order();
  r.holds = (r.symmetric || !need_symmetric) && r.regular && r.contains_embedded && r.order_matches;

  std::string d;
  auto note = [&](const std::string& s) { d += d.empty() ? s : "; " + s; };
  if (need_symmetric && !r.symmetric) note("graph is not undirected");
  if (!r.regular) note("graph is not regular");
  if (!r.contains_embedded) note("right multiplication by G is not an automorphism");
  if (!r.order_matches) {
    if (aut.aborted)
      note("|Aut| exceeds |G| = " + std::to_string(group.order()));
    else
      note("|Aut| = " + r.aut_order.str() + " but |G| = " + std::to_string(group.order()));
  }
  r.diagnostics = r.holds ? "ok" : d;
  return r;
}

// Isolated vertices of Cay(G,X)[X] and whether X minus them generates G.
std::pair<std::size_t, bool> isolated_side(const FiniteGroup& group, const ElementSet& X) {
  std::vector<Element> isolated;
  for (Element u : X) {
    bool alone = true;
    for (Element v : X)
      if (u != v && X.contains(group.mul(v, group.inv(u)))) {
        alone = false;
        break;
      }
    if (alone) isolated.push_back(u);
  }
  ElementSet rest = X;
  for (Element v : isolated) rest.erase(v);
  return {isolated.size(), static_cast<int>(closure(group, rest).size()) == group.order()};
}

}  // namespace

MRepresentationCheck is_m_grr(const FiniteGroup& group, const Digraph& g, int m) {
  return check_representation(group, g, m, true);
}

MRepresentationCheck is_m_drr(const FiniteGroup& group, const Digraph& g, int m) {
  return check_representation(group, g, m, false);
}

Admissibility grr_set_admissible(const FiniteGroup& group, const ElementSet& R) {
  if (!is_cayley_subset(group, R)) throw ConstructionError("R is not a Cayley subset");
  Admissibility a;
  a.is_grr = is_m_grr(group, cayley(group, R), 1).holds;
  std::tie(a.isolated, a.generates) = isolated_side(group, R);
  ElementSet rc;
  for (Element g = 1; g < group.order(); ++g)
    if (!R.contains(g)) rc.insert(g);
  std::tie(a.isolated_complement, a.generates_complement) = isolated_side(group, rc);
  return a;
}

void for_each_cayley_subset(const FiniteGroup& group,
                            const std::function<bool(const ElementSet&)>& visit,
                            std::optional<std::size_t> only_size) {
  std::vector<std::vector<Element>> classes;
  for (Element g = 1; g < group.order(); ++g) {
    Element h = group.inv(g);
    if (g < h)
      classes.push_back({g, h});
    else if (g == h)
      classes.push_back({g});
  }
  const std::size_t lo = only_size.value_or(0);
  const std::size_t hi = only_size.value_or(static_cast<std::size_t>(group.order() - 1));
  for (std::size_t k = lo; k <= hi; ++k) {
    std::vector<std::vector<Element>> batch;
    std::vector<Element> current;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t c, std::size_t left) {
      if (left == 0) {
        std::vector<Element> s = current;
        std::sort(s.begin(), s.end());
        batch.push_back(std::move(s));
        return;
      }
      for (std::size_t i = c; i < classes.size(); ++i) {
        if (classes[i].size() > left) continue;
        current.insert(current.end(), classes[i].begin(), classes[i].end());
        rec(i + 1, left - classes[i].size());
        current.resize(current.size() - classes[i].size());
      }
    };
    rec(0, k);
    std::sort(batch.begin(), batch.end());
    for (auto& s : batch)
      if (!visit(ElementSet(std::move(s)))) return;
  }
}

std::optional<GrrSet> grr_search(const FiniteGroup& group) {
  if (group.order() > 32) throw std::invalid_argument("grr_search is limited to |G| <= 32");
  std::optional<GrrSet> found;
  for_each_cayley_subset(group, [&](const ElementSet& R) {
    if (group.order() > 2) {
      auto [isolated, generates] = isolated_side(group, R);
      if (isolated > 1 || !generates) return true;
    }
    if (!is_m_grr(group, cayley(group, R), 1).holds) return true;
    found = GrrSet{R, grr_set_admissible(group, R)};
    return false;
  });
  return found;
}

PrelReport check_lemma_prel(const FiniteGroup& group, const ConnectionData& cd) {
  check_connection_data(group, cd);
  PrelReport report;
  report.bicay_is_2grr = is_m_grr(group, bicay(group, cd.R, cd.L, cd.S), 2).holds;
  const Digraph theta = theta_general(group, cd, 3);
  for (int i = 0; i < 3; ++i) {
    const int v = block_vertex(group, 0, i);
    report.certificates[i] = canonical_form(induced(theta, theta.out_neighbors(v)).graph).certificate;
  }
  const auto& c = report.certificates;
  report.neighborhoods_distinct = c[2] != c[0] && c[2] != c[1];
  report.first_two_distinct = c[0] != c[1];
  return report;
}

std::optional<ElementSet> find_involution_variant_L(const FiniteGroup& group, const ElementSet& R) {
  if (!is_cayley_subset(group, R)) throw ConstructionError("R is not a Cayley subset");
  const int target = involution_count(group, R);
  std::optional<ElementSet> found;
  for_each_cayley_subset(
      group,
      [&](const ElementSet& L) {
        if (involution_count(group, L) == target) return true;
        found = L;
        return false;
      },
      R.size());
  return found;
}

std::optional<ThetaChoice> theta_case_select(const FiniteGroup& group, const ElementSet& R, int m) {
  if (!is_cayley_subset(group, R)) throw ConstructionError("R is not a Cayley subset");
  if (m < 2) throw ConstructionError("the block extension needs m >= 2");
  if (auto [isolated, generates] = isolated_side(group, R); isolated > 1 || !generates)
    throw ConstructionError("R fails the isolated-vertex criterion");
  if (m >= 3) {
    if (auto x = find_noncentral_highorder(group)) return ThetaChoice{1, *x};
    return std::nullopt;
  }
  const ElementSet z = center(group);
  for (Element x = 0; x < group.order(); ++x)
    if (!z.contains(group.mul(x, x))) return ThetaChoice{2, x};
  if (squares_central(group))
    for (Element x = 0; x < group.order(); ++x)
      if (!z.contains(x) && !R.contains(x) && element_order(group, x) > 2) return ThetaChoice{3, x};
  return std::nullopt;
}

std::optional<Extension> extend_grr(const FiniteGroup& group, const ElementSet& R, int m) {
  if (auto choice = theta_case_select(group, R, m))
    return Extension{theta_grr(group, R, choice->x, m, choice->case_id),
                     "theta case " + std::to_string(choice->case_id)};
  if (m != 2) return std::nullopt;
  auto L = find_involution_variant_L(group, R);
  if (!L) return std::nullopt;
  return Extension{bicay(group, R, *L, ElementSet({0})), "bicay S={1}"};
}

namespace {

struct Exceptional {
  std::string name;
  FiniteGroup group;
};

const std::vector<Exceptional>& godsil_exceptions() {
  static const std::vector<Exceptional> list = [] {
    std::vector<Exceptional> out;
    for (const char* spec : {"E2^2", "E2^3", "E2^4", "D6", "D8", "D10", "Q8*C3", "Q8*C4", "Alt4",
                             "X16a", "X16b", "X18", "X27"})
      out.push_back({spec, make_group(parse_group(spec))});
    return out;
  }();
  return list;
}

std::optional<std::string> match_exception(const FiniteGroup& group,
                                           const std::vector<std::string>& names) {
  for (const Exceptional& e : godsil_exceptions()) {
    if (std::find(names.begin(), names.end(), e.name) == names.end()) continue;
    if (e.group.order() == group.order() && groups_isomorphic(e.group, group)) return e.name;
  }
  return std::nullopt;
}

}  // namespace

OracleAnswer classification_oracle(int m, const FiniteGroup& group) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  OracleAnswer a;
  const int n = group.order();
  const bool cyclic = is_cyclic(group);
  if (m == 1) {
    if (group.is_abelian() && group.exponent() > 2) {
      a.grr = false;
      a.grr_reason = "abelian of exponent greater than 2";
    } else if (is_generalized_dicyclic(group)) {
      a.grr = false;
      a.grr_reason = "generalized dicyclic";
    } else if (auto name = match_exception(group, {"E2^2", "E2^3", "E2^4", "D6", "D8", "D10",
                                                   "Q8*C3", "Q8*C4", "Alt4", "X16a", "X16b",
                                                   "X18", "X27"})) {
      a.grr = false;
      a.grr_reason = "exceptional group " + *name;
    }
    static const std::vector<std::string> babai = {"E2^2", "E2^3", "E2^4"};
    const bool q8 = n == 8 && groups_isomorphic(group, make_group(GroupDesc::quaternion()));
    const bool z3sq = n == 9 && is_elementary_abelian(group, 3);
    if (q8 || z3sq || match_exception(group, babai)) {
      a.drr = false;
      a.drr_reason = "no DRR exists for this group";
    }
  } else if (m == 2) {
    const bool q8 = n == 8 && groups_isomorphic(group, make_group(GroupDesc::quaternion()));
    const bool v4 = n == 4 && is_elementary_abelian(group, 2);
    if (q8 || v4 || (cyclic && n <= 5)) {
      a.grr = false;
      a.grr_reason = q8 ? "Q8 at m = 2" : v4 ? "Z2^2 at m = 2" : "cyclic of order at most 5 at m = 2";
    }
    if (n <= 2) {
      a.drr = false;
      a.drr_reason = "cyclic of order at most 2 at m = 2";
    }
  } else {
    const int limit = m == 3 ? 3 : m == 4 ? 2 : m <= 9 ? 1 : 0;
    if (cyclic && n <= limit) {
      a.grr = false;
      a.grr_reason = "cyclic of order at most " + std::to_string(limit) + " at m = " + std::to_string(m);
    }
    if (n == 1 && m <= 5) {
      a.drr = false;
      a.drr_reason = "trivial group at m <= 5";
    }
  }
  return a;
}

}  // namespace mcayley
