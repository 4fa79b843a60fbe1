// mcayley: command-line front end for the m-Cayley graph library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcayley/aut.hpp"
#include "mcayley/constructions.hpp"
#include "mcayley/presets.hpp"
#include "mcayley/search.hpp"
#include "mcayley/verifier.hpp"

#ifndef MCAYLEY_VERSION
#define MCAYLEY_VERSION "0.0.0"
#endif

using json = nlohmann::ordered_json;
using namespace mcayley;

namespace {

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Digraph read_graph(const std::string& path) {
  std::string text = read_input(path);
  // first non-empty line only
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) return decode(line);
  }
  throw UsageError(path + " holds no graph");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

json set_json(const FiniteGroup& group, const ElementSet& s) {
  json out = json::array();
  for (Element e : s) out.push_back(group.label(e));
  return out;
}

json verdict_json(const Verdict& v) {
  json j;
  j["m"] = v.m;
  j["group"] = v.group;
  j["directed"] = v.directed;
  j["exists"] = v.exists;
  j["inconclusive"] = v.inconclusive;
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  j["method"] = v.method;
  j["candidates"] = v.candidates;
  j["space"] = v.space;
  j["seconds"] = v.seconds;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

struct Report {
  std::string subcommand;
  std::vector<std::string> args;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  json header() const {
    json j;
    j["subcommand"] = subcommand;
    j["args"] = args;
    j["version"] = MCAYLEY_VERSION;
    j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return j;
  }
};

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string family;
  std::vector<std::string> params;
  int m = 0;
  std::string output;
  int delta = 0;
  std::string R, x;
  int case_id = 0;
};

std::string param(const ConstructArgs& a, std::size_t i, const char* what) {
  if (a.params.size() <= i) throw UsageError(a.family + " needs " + what);
  return a.params[i];
}

int int_param(const ConstructArgs& a, std::size_t i, const char* what) {
  const std::string s = param(a, i, what);
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(what) + " must be an integer, got " + s);
}

int run_construct(const ConstructArgs& a, const Report& report) {
  json side;
  side["family"] = a.family;
  side["parameters"] = a.params;
  side["m"] = a.m;
  Digraph g;
  std::optional<FiniteGroup> group;
  std::optional<ConnectionData> data;

  if (a.family == "preset") {
    Preset p = preset(parse_group(param(a, 0, "a group spec")));
    if (a.m < 2) throw UsageError("preset graphs need -m >= 2");
    g = preset_graph(p, a.m);
    side["group"] = p.desc.to_string();
    side["row"] = p.row;
    group = p.group;
    data = p.data;
  } else if (a.family == "cayley" || a.family == "theta-grr") {
    FiniteGroup G = make_group(parse_group(param(a, 0, "a group spec")));
    side["group"] = parse_group(a.params[0]).to_string();
    ElementSet R;
    if (!a.R.empty()) {
      R = parse_element_set(G, a.R);
    } else {
      auto found = grr_search(G);
      if (!found) throw ConstructionError("no GRR set exists for " + a.params[0]);
      R = found->R;
    }
    side["R"] = set_json(G, R);
    if (a.family == "cayley") {
      if (a.m != 1) throw UsageError("cayley graphs have -m 1");
      g = cayley(G, R);
    } else if (a.case_id != 0) {
      if (a.x.empty()) throw UsageError("--case needs --x");
      const Element x = parse_element(G, a.x);
      g = theta_grr(G, R, x, a.m, a.case_id);
      side["method"] = "theta case " + std::to_string(a.case_id);
      side["x"] = G.label(x);
    } else {
      auto ext = extend_grr(G, R, a.m);
      if (!ext) throw ConstructionError("no block extension applies for m = " + std::to_string(a.m));
      g = ext->graph;
      side["method"] = ext->method;
    }
    group = std::move(G);
  } else if (a.family == "delta-cyclic") {
    const int n = int_param(a, 0, "n");
    g = delta_cyclic(n, a.m, a.delta);
    side["group"] = GroupDesc::cyclic(n).to_string();
    side["delta"] = a.delta;
  } else if (a.family == "delta-q8") {
    g = delta_q8(a.m);
    side["group"] = "Q8";
  } else if (a.family == "sigma") {
    g = sigma_z2z2(a.m);
    side["group"] = "E2^2";
  } else if (a.family == "lift") {
    // Z2^2 -> ... -> Z2^rank starting from sigma
    const int rank = int_param(a, 0, "the target rank");
    if (rank < 2) throw UsageError("lift rank must be at least 2");
    g = sigma_z2z2(a.m);
    std::vector<bool> complements;
    for (int k = 2; k < rank; ++k) {
      LiftResult r = elementary_abelian_lift(g, make_group(GroupDesc::abelian(std::vector<int>(k, 2))), a.m);
      g = std::move(r.graph);
      complements.push_back(r.used_complement);
    }
    side["group"] = "E2^" + std::to_string(rank);
    side["used_complement"] = complements;
  } else if (a.family == "fixture") {
    const std::string kind = param(a, 0, "z2_3drr or z1_6drr");
    g = section5_fixture(kind);
    side["group"] = kind == "z2_3drr" ? "C2" : "C1";
  } else {
    throw UsageError("unknown family " + a.family);
  }

  if (data) {
    side["connection_data"] = {{"R", set_json(*group, data->R)},
                               {"L", set_json(*group, data->L)},
                               {"S", set_json(*group, data->S)},
                               {"T", set_json(*group, data->T)},
                               {"x", group->label(data->x)}};
  }
  side["vertices"] = g.n();
  side["vertex_convention"] = "vertex g_i has index i*|G| + g; elements indexed by the group table";
  const std::string text = encode(g);
  side["encoding"] = text;
  json out = report.header();
  out["sidecar"] = side;
  if (a.output.empty()) {
    std::cout << text << '\n';
  } else {
    write_text(a.output, text + "\n");
    write_text(a.output + ".json", out.dump(2) + "\n");
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int run_aut(const std::string& path, const Report& report) {
  const Digraph g = read_graph(path);
  AutResult r = analyze(g);
  json out = report.header();
  out["vertices"] = g.n();
  out["order"] = r.group.order().str();
  json gens = json::array();
  for (const Perm& p : r.group.generators()) gens.push_back(cycle_notation(p));
  out["generators"] = gens;
  json sizes = json::array();
  for (const auto& o : r.group.orbits()) sizes.push_back(o.size());
  out["orbit_sizes"] = sizes;
  out["semiregular"] = r.group.is_semiregular();
  out["certificate"] = r.certificate;
  out["nodes"] = r.nodes;
  std::cout << out.dump() << '\n';
  return kOk;
}

int run_verify(const std::string& spec, int m, const std::string& path, bool directed,
               const Report& report) {
  const GroupDesc desc = parse_group(spec);
  const FiniteGroup group = make_group(desc);
  const Digraph g = read_graph(path);
  const auto check = directed ? is_m_drr(group, g, m) : is_m_grr(group, g, m);
  Verdict v;
  v.m = m;
  v.group = desc.to_string();
  v.directed = directed;
  v.exists = check.holds;
  v.witness = check.holds ? std::optional<std::string>(encode(g)) : std::nullopt;
  v.method = "construction";
  v.candidates = 1;
  v.space = "1";
  v.note = check.diagnostics;
  json out = report.header();
  out["verdict"] = verdict_json(v);
  out["aut_order"] = check.aut_order.str();
  out["regular"] = check.regular;
  out["contains_embedded"] = check.contains_embedded;
  std::cout << out.dump() << '\n';
  return check.holds ? kOk : kFails;
}

int run_search(const std::string& spec, int m, bool directed, bool extended, const Report& report) {
  SweepSpec s;
  s.group = parse_group(spec);
  s.m = m;
  s.directed = directed;
  // a plain search stops after 500000 candidates
  s.max_candidates = extended ? 0 : 500'000;
  const Verdict v = directed ? exists_m_drr_exhaustive(s) : exists_m_grr_exhaustive(s);
  json out = report.header();
  out["verdict"] = verdict_json(v);
  std::cout << out.dump() << '\n';
  if (v.inconclusive) return kBudget;
  return kOk;
}

int run_reproduce(const std::string& target, bool extended, const Report& report) {
  const ReproduceResult r = reproduce(target, extended);
  for (const Verdict& v : r.verdicts) std::cout << verdict_json(v).dump() << '\n';
  json summary = report.header();
  summary["target"] = target;
  summary["extended"] = extended;
  summary["verdicts"] = r.verdicts.size();
  summary["failures"] = r.failures;
  summary["ok"] = r.ok();
  std::cout << json{{"summary", summary}}.dump() << '\n';
  return r.ok() ? kOk : kFails;
}

// Edge-list JSON: {"n": 4, "directed": false, "arcs": [[0,1], ...]}.
int run_encode(const std::string& path) {
  const json in = json::parse(read_input(path));
  Digraph g(in.at("n").get<int>());
  const bool directed = in.value("directed", false);
  for (const auto& arc : in.at("arcs")) {
    const int u = arc.at(0).get<int>(), v = arc.at(1).get<int>();
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v)
      throw UsageError("bad arc " + arc.dump());
    if (directed)
      g.add_arc(u, v);
    else
      g.add_edge(u, v);
  }
  std::cout << (directed ? encode_digraph6(g) : encode_graph6(g)) << '\n';
  return kOk;
}

int run_decode(const std::string& path) {
  const Digraph g = read_graph(path);
  const bool directed = !g.is_symmetric();
  json arcs = json::array();
  for (auto [u, v] : g.arcs())
    if (directed || u < v) arcs.push_back({u, v});
  std::cout << json{{"n", g.n()}, {"directed", directed}, {"arcs", arcs}}.dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"m-Cayley graph constructions, automorphism groups and existence searches"};
  app.set_version_flag("--version", std::string(MCAYLEY_VERSION));
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a graph and print graph6/digraph6");
  construct->add_option("family", ca.family,
                        "preset, cayley, theta-grr, delta-cyclic, delta-q8, sigma, lift, fixture")
      ->required();
  construct->add_option("params", ca.params, "family parameters (group spec, n, rank or fixture)");
  construct->add_option("-m", ca.m, "number of blocks")->required();
  construct->add_option("-o,--output", ca.output, "write the graph here and the sidecar to <file>.json");
  construct->add_option("--delta", ca.delta, "delta-cyclic offset");
  construct->add_option("--R", ca.R, "connection set for cayley/theta-grr, e.g. \"a, a^-1, b\"");
  construct->add_option("--x", ca.x, "theta-grr element x");
  construct->add_option("--case", ca.case_id, "theta-grr case 1, 2 or 3")->check(CLI::Range(1, 3));

  std::string aut_file = "-";
  auto* aut = app.add_subcommand("aut", "automorphism group of a graph6/digraph6 file");
  aut->add_option("file", aut_file, "input file, - for standard input");

  std::string verify_group, verify_file;
  int verify_m = 1;
  bool verify_directed = false;
  auto* verify = app.add_subcommand("verify", "check the m-GRR (or m-DRR) property");
  verify->add_option("group", verify_group)->required();
  verify->add_option("-m", verify_m)->required()->check(CLI::PositiveNumber);
  verify->add_option("file", verify_file)->required();
  verify->add_flag("--directed", verify_directed, "check the m-DRR property instead");

  std::string search_group;
  int search_m = 1;
  bool search_directed = false, search_extended = false;
  auto* search = app.add_subcommand("search", "exhaustive existence search");
  search->add_option("group", search_group)->required();
  search->add_option("-m", search_m)->required()->check(CLI::PositiveNumber);
  search->add_flag("--directed", search_directed, "look for an m-DRR");
  search->add_flag("--extended", search_extended, "lift the candidate limit");

  std::string target;
  bool reproduce_extended = false;
  auto* repro = app.add_subcommand("reproduce", "run a named battery of existence checks");
  repro->add_option("target", target)->required()->check(CLI::IsMember(reproduce_targets()));
  repro->add_flag("--extended", reproduce_extended, "include the expensive cases");

  std::string encode_file = "-", decode_file = "-";
  auto* enc = app.add_subcommand("encode", "edge-list JSON to graph6/digraph6");
  enc->add_option("file", encode_file);
  auto* dec = app.add_subcommand("decode", "graph6/digraph6 to edge-list JSON");
  dec->add_option("file", decode_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Report report;
  for (int i = 1; i < argc; ++i) report.args.emplace_back(argv[i]);
  report.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (*construct) return run_construct(ca, report);
    if (*aut) return run_aut(aut_file, report);
    if (*verify) return run_verify(verify_group, verify_m, verify_file, verify_directed, report);
    if (*search) return run_search(search_group, search_m, search_directed, search_extended, report);
    if (*repro) return run_reproduce(target, reproduce_extended, report);
    if (*enc) return run_encode(encode_file);
    if (*dec) return run_decode(decode_file);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFails;
  }
  return kUsage;
}
