// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "properties.hpp"

using namespace mconvex;
using fx::ids;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

// Every graph the runner builds also feeds the counting-bound check.
struct Counts {
  long graphs = 0;
  long violations = 0;

  void see(const WeightedGraph& g) {
    if (g.vertex_count() == 0) return;
    ++graphs;
    const auto csg = clique_separator_graph(g);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (csg.cliques.size() > n || csg.separators.size() + 1 > n ||
        csg.arcs.size() > static_cast<std::size_t>(g.edge_count()))
      ++violations;
  }
};

Counts counts;

void golden(Verdict& v) {
  const auto t0 = Clock::now();
  std::vector<json> events;
  SolverOptions opt;
  opt.trace_id_base = 1;
  opt.trace = [&](const json& e) { events.push_back(e); };
  const auto sol = solve(fx::fig7(), opt);
  const double secs = since(t0);
  counts.see(fx::fig7());
  v.require(sol.weight == 5, "weight " + std::to_string(sol.weight));
  v.require(sol.vertices == ids({1, 2, 6}), "vertex set");
  long lbl_a2 = -1000, lbl_a1 = -1000;
  int k1_collapses = 0;
  Weight z = -1000;
  for (const auto& e : events) {
    if (e["event"] == "label" && e["depth"] == 0 && e["separator"] == json{2, 4}) lbl_a2 = e["weight"];
    if (e["event"] == "label" && e["depth"] == 0 && e["separator"] == json{2}) lbl_a1 = e["weight"];
    if (e["event"] == "collapse" && e["depth"] == 0 && e["root"] == json{1, 2}) {
      ++k1_collapses;
      z = e["z_weight"];
    }
  }
  v.require(lbl_a2 == 1, "lbl(a2) weight " + std::to_string(lbl_a2));
  v.require(lbl_a1 == 4, "lbl(a1) weight " + std::to_string(lbl_a1));
  v.require(k1_collapses == 1, std::to_string(k1_collapses) + " collapses rooted at {1,2}");
  v.require(z == 4, "z weight " + std::to_string(z));
  v.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  v.detail << "weight " << sol.weight << ", lbl weights " << lbl_a2 << "/" << lbl_a1 << ", " << k1_collapses
           << " collapse with z weight " << z << ", " << secs << " s";
}

void structure(Verdict& v) {
  const auto csg = clique_separator_graph(fx::fig7());
  const std::vector<VertexSet> cliques{ids({1, 2}), ids({2, 3, 4}), ids({2, 4, 5}), ids({2, 4, 6, 7}),
                                       ids({2, 4, 7, 8})};
  const std::vector<VertexSet> seps{ids({2}), ids({2, 4}), ids({2, 4, 7})};
  v.require(csg.cliques == cliques, "fig7 cliques");
  v.require(csg.separators == seps, "fig7 separators");
  std::set<std::pair<VertexSet, VertexSet>> arcs;
  for (const auto& a : csg.arcs) arcs.insert({csg.separators[a.from], csg.separators[a.to]});
  v.require(arcs == std::set<std::pair<VertexSet, VertexSet>>{{ids({2}), ids({2, 4})}, {ids({2, 4}), ids({2, 4, 7})}},
            "fig7 arcs");
  const auto six = clique_separator_graph(fx::fig6());
  v.require(six.arcs.size() == 1, "fig6 has " + std::to_string(six.arcs.size()) + " arcs");
  counts.see(fx::fig6());
  v.detail << csg.cliques.size() << " cliques, " << csg.separators.size() << " separators, " << csg.arcs.size()
           << " arcs; fig6 " << six.arcs.size() << " arc";
}

void oracle_equivalence(Verdict& v) {
  const auto t0 = Clock::now();
  long agree = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const auto g = fx::random_graph(seed, 10);
    counts.see(g);
    const auto sol = solve(g);
    const auto best = oracle::brute_force_opt(g);
    ++total;
    if (sol.weight == best.weight && oracle::is_convex(g, sol.vertices).convex() &&
        g.weight_of(sol.vertices) == sol.weight)
      ++agree;
    else
      v.require(false, "seed " + std::to_string(seed));
  }
  const double secs = since(t0);
  v.require(secs < 300.0, "took " + std::to_string(secs) + " s");
  v.detail << agree << "/" << total << " graphs match the oracle, " << secs << " s";
}

void picard(Verdict& v) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<Weight> weight(-10, 10);
  long ok = 0;
  const int trials = 600;
  for (int trial = 0; trial < trials; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto p = fx::random_poset(rng, n, 0.05 + 0.05 * static_cast<double>(trial % 8));
    std::vector<Weight> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = weight(rng);
    VertexSet required;
    if (trial % 2)
      for (Vertex x = 0; x < n; ++x)
        if (rng() % 5 == 0) required.push_back(x);
    std::optional<Weight> best;
    for (const auto& ideal : ideals(p)) {
      if (!is_subset(required, ideal)) continue;
      Weight s = 0;
      for (Vertex x : ideal) s += w[x];
      if (!best || s > *best) best = s;
    }
    const ClosureInstance inst{p, w, required};
    const auto cut = max_weight_ideal(inst);
    const bool good = best && cut.weight == *best && p.is_ideal(cut.set) && is_subset(required, cut.set) &&
                      max_weight_ideal_big_m(inst).weight == *best;
    ok += good;
    v.require(good, "trial " + std::to_string(trial));
  }
  v.detail << ok << "/" << trials << " posets, forced and big-M agree";
}

void k_tree_ideals(Verdict& v) {
  props::Tally t;
  long graphs = 0;
  for (std::uint64_t seed = 0; graphs < 150; ++seed) {
    GenSpec s;
    s.kind = GenKind::KTree;
    s.k = 1 + static_cast<int>(seed % 4);
    s.n = s.k + 1 + static_cast<int>(seed % static_cast<std::uint64_t>(10 - s.k));
    s.seed = seed;
    const auto g = generate(s);
    if (extend(g).graph.vertex_count() > oracle::kSubsetBudget) continue;
    counts.see(g);
    v.require(clique_separator_graph(g).arcs.empty(), "k-tree with an arc, seed " + std::to_string(seed));
    t += props::ideals_are_rooted_convex_sets(g);
    ++graphs;
  }
  v.require(t.ok(), std::to_string(t.failed) + " roots differ");
  v.detail << graphs << " k-trees, " << t.checked - t.failed << "/" << t.checked << " roots with equal set families";
}

void collapse_step(Verdict& v) {
  props::Tally t;
  long instances = 0;
  for (std::uint64_t seed = 0; seed < 20000 && instances < 120; ++seed) {
    const auto g = fx::random_graph(seed, 9);
    if (connected_components(g).size() != 1 || extend(g).graph.vertex_count() > oracle::kSubsetBudget) continue;
    counts.see(g);
    const auto one = props::collapse_preserves_optimum(g);
    if (one.checked == 0) continue;
    ++instances;
    t += one;
  }
  v.require(instances >= 100, "only " + std::to_string(instances) + " instances with a blocking arc");
  v.require(t.ok(), std::to_string(t.failed) + " collapses changed the optimum");
  v.detail << instances << " instances, " << t.checked - t.failed << "/" << t.checked << " collapses keep the optimum";
}

void poset_axioms(Verdict& v) {
  long posets = 0, bad_posets = 0, triples = 0, bad_triples = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto g = fx::random_graph(seed, 12);
    counts.see(g);
    const auto ext = extend(g);
    for (const auto& k : ext.cliques) {
      ++posets;
      bad_posets += !check_axioms(rooted_poset(ext, k)).ok();
    }
    if (triples >= 150000) continue;
    const oracle::IntervalTable table(g);
    const int n = g.vertex_count();
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y) {
        if (x == y) continue;
        for (Vertex z = 0; z < n; ++z) {
          ++triples;
          bad_triples += interval_contains(g, x, y, z) != static_cast<bool>(table.interval(x, y) >> z & 1);
        }
      }
  }
  v.require(bad_posets == 0, std::to_string(bad_posets) + " posets break an axiom");
  v.require(triples >= 100000, "only " + std::to_string(triples) + " triples");
  v.require(bad_triples == 0, std::to_string(bad_triples) + " triples disagree");
  v.detail << posets << " posets satisfy the axioms, " << triples - bad_triples << "/" << triples
           << " triples agree";
}

void counting(Verdict& v) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) counts.see(fx::random_graph(seed, 60));
  v.require(counts.violations == 0, std::to_string(counts.violations) + " graphs exceed a bound");
  v.detail << counts.graphs - counts.violations << "/" << counts.graphs << " graphs within all three bounds";
}

void performance(Verdict& v) {
  GenSpec big;
  big.n = 100;
  big.seed = 1;
  const auto g100 = generate(big);
  auto t0 = Clock::now();
  const auto s100 = solve(g100);
  const double big_secs = since(t0);
  v.require(big_secs < 60.0, "n=100 took " + std::to_string(big_secs) + " s");

  GenSpec dense;
  dense.n = 30;
  dense.density = 0.9;
  dense.seed = 1;
  const auto g30 = generate(dense);
  const auto sep = minimal_vertex_separators(g30);
  std::size_t widest = 0;
  for (const auto& s : sep) widest = std::max(widest, s.size());
  t0 = Clock::now();
  const auto s30 = solve(g30);
  const double dense_secs = since(t0);
  v.require(dense_secs < 5.0, "n=30 took " + std::to_string(dense_secs) + " s");
  counts.see(g100);
  counts.see(g30);
  v.detail << "n=100 (m=" << g100.edge_count() << ", " << s100.stats.collapses << " collapses) " << big_secs
           << " s; n=30 (m=" << g30.edge_count() << ", widest separator " << widest << ") " << dense_secs << " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Verdict&)>>> criteria{
      {"golden trace on the eight-vertex example", golden},
      {"clique-separator structure", structure},
      {"solver matches brute force on random chordal graphs", oracle_equivalence},
      {"closure by min cut matches ideal enumeration", picard},
      {"k-tree ideals equal rooted convex sets", k_tree_ideals},
      {"one collapse keeps the rooted optimum", collapse_step},
      {"poset axioms and interval membership", poset_axioms},
      {"clique, separator and arc counts", counting},
      {"performance smoke test", performance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failed += !v.pass;
    std::printf("criterion %zu: %s  %s (%s)\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first,
                v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
