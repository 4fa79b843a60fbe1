#include "mcayley/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "mcayley/presets.hpp"

namespace mcayley {

int default_threads() {
  if (const char* env = std::getenv("MCAYLEY_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Subsets of `pool` grouped by size, each group in lexicographic order.
std::vector<std::vector<ElementSet>> subsets_by_size(const std::vector<Element>& pool) {
  const int k = static_cast<int>(pool.size());
  std::vector<std::vector<ElementSet>> out(k + 1);
  std::vector<int> idx;
  for (int s = 0; s <= k; ++s) {
    idx.resize(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      std::vector<Element> items;
      for (int i : idx) items.push_back(pool[i]);
      out[s].emplace_back(std::move(items));
      int i = s - 1;
      while (i >= 0 && idx[i] == k - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

// Runs `eval` on items [0, count) over `threads` workers; results by index.
template <class F>
std::vector<char> parallel_map(std::size_t count, int threads, F eval) {
  std::vector<char> result(count, 0);
  const int workers = static_cast<int>(std::min<std::size_t>(std::max(1, threads), count));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) result[k] = eval(k);
    return result;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t k; (k = next.fetch_add(1)) < count;) result[k] = eval(k);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return result;
}

class Sweep {
 public:
  Sweep(const SweepSpec& spec, bool directed)
      : spec_(spec), group_(make_group(spec.group)), m_(spec.m), directed_(directed) {
    if (m_ < 1) throw std::invalid_argument("m must be positive");
    if (m_ * group_.order() > 64) throw std::invalid_argument("exhaustive sweeps need m|G| <= 64");
    std::vector<Element> all, nonid;
    for (Element g = 0; g < group_.order(); ++g) {
      all.push_back(g);
      if (g) nonid.push_back(g);
    }
    off_ = subsets_by_size(all);
    if (directed_) {
      diag_ = subsets_by_size(nonid);
    } else {
      diag_.assign(group_.order(), {});
      for_each_cayley_subset(group_, [&](const ElementSet& s) {
        diag_[s.size()].push_back(s);
        return true;
      });
    }
    if (spec.reverse_cells)
      for (auto* opts : {&diag_, &off_})
        for (auto& level : *opts) std::reverse(level.begin(), level.end());
    for (int i = 0; i < m_; ++i)
      for (int j = directed_ ? 0 : i; j < m_; ++j) cells_.push_back({i, j});
  }

  Verdict run() {
    const auto t0 = Clock::now();
    Verdict v;
    v.m = m_;
    v.group = spec_.group.to_string();
    v.directed = directed_;
    v.method = "exhaustive_search";
    v.space = space().str();
    const int max_degree = m_ * group_.order() - 1;
    try {
      for (int d = 0; d <= max_degree && !witness_ && !stopped_; ++d) {
        degree_ = d;
        rows_.assign(m_, 0);
        cols_.assign(m_, 0);
        choice_.assign(cells_.size(), nullptr);
        assign(0);
        flush();
      }
    } catch (const BudgetExceeded& e) {
      v.inconclusive = true;
      v.note = e.what();
    }
    if (stopped_) {
      v.inconclusive = true;
      v.note = "candidate budget exhausted";
    }
    v.candidates = examined_;
    if (witness_) {
      const Digraph g = m_cayley(group_, *witness_);
      const auto check = directed_ ? is_m_drr(group_, g, m_) : is_m_grr(group_, g, m_);
      if (!check.holds) throw std::logic_error("sweep witness failed re-verification");
      v.exists = true;
      v.witness = encode(g);
    }
    v.seconds = since(t0);
    return v;
  }

 private:
  struct Cell {
    int i, j;
  };

  BigInt space() const {
    BigInt total = 1;
    for (const Cell& c : cells_) {
      std::size_t count = 0;
      for (const auto& level : (c.i == c.j ? diag_ : off_)) count += level.size();
      total *= count;
    }
    return total;
  }

  int capacity(std::size_t from_cell, int row) const {
    int cap = 0;
    for (std::size_t k = from_cell; k < cells_.size() && cells_[k].i == row; ++k)
      cap += cells_[k].i == cells_[k].j ? static_cast<int>(diag_.size()) - 1
                                        : static_cast<int>(off_.size()) - 1;
    return cap;
  }

  void assign(std::size_t k) {
    if (witness_ || stopped_) return;
    if (k == cells_.size()) {
      MCayleySpec s = MCayleySpec::empty(m_);
      for (std::size_t c = 0; c < cells_.size(); ++c) {
        const auto [i, j] = cells_[c];
        s.T[i][j] = *choice_[c];
        if (!directed_ && i != j) s.T[j][i] = group_.inverse_of(s.T[i][j]);
      }
      batch_.push_back(std::move(s));
      if (batch_.size() >= kBatch) flush();
      return;
    }
    const auto [i, j] = cells_[k];
    const auto& options = i == j ? diag_ : off_;
    const bool row_ends = k + 1 == cells_.size() || cells_[k + 1].i != i;
    const int sizes = static_cast<int>(options.size());
    for (int t = 0; t < sizes; ++t) {
      const int size = spec_.reverse_cells ? sizes - 1 - t : t;
      if (rows_[i] + size > degree_) continue;
      if (directed_ ? cols_[j] + size > degree_ : (i != j && rows_[j] + size > degree_)) continue;
      if (rows_[i] + size + capacity(k + 1, i) < degree_) continue;
      if (row_ends && rows_[i] + size != degree_) continue;
      if (directed_ && i == m_ - 1 && cols_[j] + size != degree_) continue;
      rows_[i] += size;
      if (directed_)
        cols_[j] += size;
      else if (i != j)
        rows_[j] += size;
      for (const ElementSet& s : options[size]) {
        choice_[k] = &s;
        assign(k + 1);
        if (witness_ || stopped_) break;
      }
      rows_[i] -= size;
      if (directed_)
        cols_[j] -= size;
      else if (i != j)
        rows_[j] -= size;
      if (witness_ || stopped_) return;
    }
  }

  void flush() {
    if (batch_.empty() || witness_ || stopped_) return;
    std::size_t count = batch_.size();
    if (spec_.max_candidates && examined_ + count > spec_.max_candidates) {
      count = spec_.max_candidates - examined_;
      stopped_ = true;
    }
    const BigInt target = group_.order();
    const std::vector<Perm> seeds = embedded_generators(group_, m_);
    auto hits = parallel_map(count, spec_.threads, [&](std::size_t k) -> char {
      const Digraph g = m_cayley(group_, batch_[k]);
      AutOptions options;
      options.known_generators = seeds;
      options.stop_above = target;
      options.node_budget = spec_.max_aut_nodes;
      AutResult r = analyze(g, std::nullopt, options);
      return !r.aborted && r.group.order() == target;
    });
    for (std::size_t k = 0; k < count; ++k)
      if (hits[k]) {
        witness_ = batch_[k];
        examined_ += k + 1;
        stopped_ = false;
        batch_.clear();
        return;
      }
    examined_ += count;
    batch_.clear();
  }

  static constexpr std::size_t kBatch = 512;

  const SweepSpec& spec_;
  const FiniteGroup group_;
  const int m_;
  const bool directed_;
  std::vector<std::vector<ElementSet>> diag_, off_;
  std::vector<Cell> cells_;

  int degree_ = 0;
  std::vector<int> rows_, cols_;
  std::vector<const ElementSet*> choice_;
  std::vector<MCayleySpec> batch_;
  std::uint64_t examined_ = 0;
  bool stopped_ = false;
  std::optional<MCayleySpec> witness_;
};

// Regular graphs on m vertices are exactly the m-Cayley graphs over the
// trivial group, so for large m the isomorph-free enumeration replaces the
// labeled sweep.
Verdict trivial_group_by_enumeration(const SweepSpec& spec) {
  const auto t0 = Clock::now();
  Verdict v;
  v.m = spec.m;
  v.group = spec.group.to_string();
  v.method = "exhaustive_search";
  v.note = "isomorph-free enumeration of regular graphs";
  std::optional<Digraph> hit;
  try {
    v.candidates = enumerate_regular_graphs(spec.m, [&](const Digraph& g) {
      AutOptions options;
      options.stop_above = BigInt(1);
      options.node_budget = spec.max_aut_nodes;
      AutResult r = analyze(g, std::nullopt, options);
      if (r.aborted || r.group.order() != 1) return true;
      hit = g;
      return false;
    });
  } catch (const BudgetExceeded& e) {
    v.inconclusive = true;
    v.note = e.what();
  }
  v.space = std::to_string(v.candidates) + " isomorphism classes";
  if (hit) {
    v.exists = true;
    v.witness = encode(*hit);
  }
  v.seconds = since(t0);
  return v;
}

}  // namespace

Verdict exists_m_grr_exhaustive(const SweepSpec& spec) {
  if (spec.group.family == Family::cyclic && spec.group.params.at(0) == 1 && spec.m >= 5)
    return trivial_group_by_enumeration(spec);
  return Sweep(spec, false).run();
}

Verdict exists_m_drr_exhaustive(const SweepSpec& spec) { return Sweep(spec, true).run(); }

// ---------------------------------------------------------------------------
// Regular graphs by canonical augmentation.

namespace {

class RegularGenerator {
 public:
  RegularGenerator(int n, int d, const std::function<bool(const Digraph&)>& visit)
      : n_(n), d_(d), visit_(visit) {}

  std::uint64_t run() {
    if (n_ == 0) {
      if (d_ == 0) {
        ++count_;
        visit_(Digraph(0));
      }
      return count_;
    }
    Digraph one(1);
    if (feasible(std::vector<int>{0}, 1)) extend(one, analyze(one));
    return count_;
  }

 private:
  // Each vertex still needs d - deg more neighbours among the n - k later ones.
  bool feasible(const std::vector<int>& degree, int k) const {
    for (int x : degree)
      if (x > d_ || d_ - x > n_ - k) return false;
    return true;
  }

  void extend(const Digraph& g, const AutResult& aut) {
    if (stop_) return;
    const int k = g.n();
    if (k == n_) {
      ++count_;
      if (!visit_(g)) stop_ = true;
      return;
    }
    std::vector<int> degree(k);
    for (int v = 0; v < k; ++v) degree[v] = g.out_degree(v);
    const std::uint32_t full = 1u << k;
    std::vector<char> seen(full, 0);
    const auto& gens = aut.group.generators();
    std::vector<std::uint32_t> orbit;
    for (std::uint32_t mask = 0; mask < full && !stop_; ++mask) {
      if (seen[mask]) continue;
      const int size = __builtin_popcount(mask);
      std::vector<int> next = degree;
      for (int v = 0; v < k; ++v)
        if (mask >> v & 1) ++next[v];
      next.push_back(size);
      // Orbit of the mask under Aut(g); all members share feasibility.
      orbit.assign(1, mask);
      seen[mask] = 1;
      for (std::size_t q = 0; q < orbit.size(); ++q)
        for (const Perm& p : gens) {
          std::uint32_t image = 0;
          for (int v = 0; v < k; ++v)
            if (orbit[q] >> v & 1) image |= 1u << p[v];
          if (!seen[image]) {
            seen[image] = 1;
            orbit.push_back(image);
          }
        }
      if (!feasible(next, k + 1)) continue;
      Digraph child(k + 1);
      for (auto [u, v] : g.arcs()) child.add_arc(u, v);
      for (int v = 0; v < k; ++v)
        if (mask >> v & 1) child.add_edge(v, k);
      AutResult caut = analyze(child);
      int last = 0;
      while (caut.labeling[last] != k) ++last;
      bool accepted = last == k;
      if (!accepted)
        for (const auto& o : caut.group.orbits())
          if (std::find(o.begin(), o.end(), k) != o.end()) {
            accepted = std::find(o.begin(), o.end(), last) != o.end();
            break;
          }
      if (accepted) extend(child, caut);
    }
  }

  int n_, d_;
  const std::function<bool(const Digraph&)>& visit_;
  std::uint64_t count_ = 0;
  bool stop_ = false;
};

}  // namespace

std::uint64_t enumerate_regular_graphs(int n, int d,
                                       const std::function<bool(const Digraph&)>& visit) {
  if (n < 0 || n > 20) throw std::invalid_argument("regular graph enumeration supports n <= 20");
  if (d < 0 || (n > 0 && d >= n) || (n == 0 && d != 0)) return 0;
  if ((n * d) % 2) return 0;
  return RegularGenerator(n, d, visit).run();
}

std::uint64_t enumerate_regular_graphs(int n, const std::function<bool(const Digraph&)>& visit) {
  std::uint64_t total = 0;
  bool go = true;
  for (int d = 0; d < std::max(n, 1) && go; ++d)
    total += enumerate_regular_graphs(n, d, [&](const Digraph& g) { return go = visit(g); });
  return total;
}

std::optional<Digraph> find_regular_asymmetric(int n, int valency) {
  std::optional<Digraph> hit;
  enumerate_regular_graphs(n, valency, [&](const Digraph& g) {
    AutOptions options;
    options.stop_above = BigInt(1);
    if (analyze(g, std::nullopt, options).aborted) return true;
    hit = g;
    return false;
  });
  return hit;
}

// ---------------------------------------------------------------------------
// Batteries.

namespace {

struct Job {
  std::string group;
  int m;
  bool directed;
};

Verdict run_job(const Job& job) {
  SweepSpec spec;
  spec.group = parse_group(job.group);
  spec.m = job.m;
  spec.directed = job.directed;
  return job.directed ? exists_m_drr_exhaustive(spec) : exists_m_grr_exhaustive(spec);
}

Verdict construction_verdict(const std::string& group_text, int m, const std::string& what,
                             const std::function<Digraph()>& build) {
  const auto t0 = Clock::now();
  Verdict v;
  v.m = m;
  v.group = group_text;
  v.method = "construction";
  v.note = what;
  const FiniteGroup group = make_group(parse_group(group_text));
  const Digraph g = build();
  const auto check = is_m_grr(group, g, m);
  v.exists = check.holds;
  v.candidates = 1;
  v.space = "1";
  if (check.holds)
    v.witness = encode(g);
  else
    v.note += ": " + check.diagnostics;
  v.seconds = since(t0);
  return v;
}

std::vector<Verdict> construction_battery() {
  std::vector<Verdict> out;
  for (const GroupDesc& desc : preset_catalog()) {
    const Preset p = preset(desc);
    for (int m = 2; m <= 4; ++m)
      out.push_back(construction_verdict(desc.to_string(), m, "preset " + p.row,
                                         [&] { return preset_graph(p, m); }));
  }
  for (int n = 3; n <= 5; ++n)
    for (int m = 5; m <= 7; ++m)
      out.push_back(construction_verdict("C" + std::to_string(n), m, "delta_cyclic",
                                         [&] { return delta_cyclic(n, m); }));
  for (int m = 3; m <= 5; ++m)
    out.push_back(construction_verdict("Q8", m, "delta_q8", [&] { return delta_q8(m); }));
  for (int m = 3; m <= 8; ++m)
    out.push_back(construction_verdict("E2^2", m, "sigma_z2z2", [&] { return sigma_z2z2(m); }));
  {
    const Preset base = preset(parse_group("E2^3"));
    out.push_back(construction_verdict("E2^4", 3, "elementary_abelian_lift", [&] {
      return elementary_abelian_lift(preset_graph(base, 3), base.group, 3).graph;
    }));
  }
  return out;
}

}  // namespace

std::vector<std::string> reproduce_targets() {
  return {"table1_m2",         "table1_m3",   "table1_m4",            "table1_z1",
          "drr_m1_exceptions", "drr_small_m", "section4_constructions"};
}

ReproduceResult reproduce(const std::string& target, bool extended) {
  std::vector<Job> jobs;
  std::vector<Verdict> verdicts;
  if (target == "table1_m2") {
    for (const char* g : {"Q8", "E2^2", "C1", "C2", "C3", "C4", "C5", "C6", "D6"})
      jobs.push_back({g, 2, false});
  } else if (target == "table1_m3") {
    for (const char* g : {"C1", "C2", "C3", "C4", "C5"}) jobs.push_back({g, 3, false});
  } else if (target == "table1_m4") {
    for (const char* g : {"C1", "C2", "C3"}) jobs.push_back({g, 4, false});
    jobs.push_back({"C2", 5, false});
  } else if (target == "table1_z1") {
    for (int m = 5; m <= (extended ? 9 : 8); ++m) jobs.push_back({"C1", m, false});
  } else if (target == "drr_m1_exceptions") {
    for (const char* g : {"Q8", "E2^2", "E2^3", "E3^2"}) jobs.push_back({g, 1, true});
    if (extended) jobs.push_back({"E2^4", 1, true});
  } else if (target == "drr_small_m") {
    for (int m = 2; m <= 5; ++m) jobs.push_back({"C1", m, true});
    jobs.push_back({"C2", 2, true});
    jobs.push_back({"C2", 3, true});
    jobs.push_back({"E2^2", 2, true});
    for (int m = 6; m <= 9; ++m) jobs.push_back({"C1", m, true});
  } else if (target == "section4_constructions") {
    verdicts = construction_battery();
  } else {
    throw std::invalid_argument("unknown reproduce target: " + target);
  }
  for (const Job& job : jobs) verdicts.push_back(run_job(job));

  ReproduceResult result;
  for (const Verdict& v : verdicts) {
    const FiniteGroup group = make_group(parse_group(v.group));
    const OracleAnswer expected = classification_oracle(v.m, group);
    const bool want = v.directed ? expected.drr : expected.grr;
    const std::string label = v.group + " m=" + std::to_string(v.m) + (v.directed ? " (DRR)" : " (GRR)");
    if (v.inconclusive)
      result.failures.push_back(label + ": inconclusive (" + v.note + ")");
    else if (v.exists != want)
      result.failures.push_back(label + ": found exists=" + (v.exists ? "true" : "false") +
                                ", classification says " + (want ? "true" : "false"));
  }
  result.verdicts = std::move(verdicts);
  return result;
}

}  // namespace mcayley
