#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mconvex/mconvex.hpp"

using namespace mconvex;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kParse = 1, kPrecondition = 2, kSize = 3, kInternal = 4 };

struct Common {
  std::string file;
  int scale = 0;
  bool require_chordal = false;
};

WeightedGraph load(const Common& c) {
  WeightedGraph g;
  if (c.file == "-") {
    g = parse_graph(std::cin, c.scale);
  } else {
    std::ifstream in(c.file);
    if (!in) throw InputError("cannot open " + c.file);
    g = parse_graph(in, c.scale);
  }
  if (c.require_chordal) mconvex::require_chordal(g);
  return g;
}

// "1,2,3" (1-based) -> canonical 0-based set
VertexSet parse_set(const std::string& text) {
  VertexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v - 1);
    } catch (const std::logic_error&) {
      throw InputError("bad vertex list: " + text);
    }
  }
  return canonical(std::move(out));
}

std::string one_based(Vertex v) { return std::to_string(v + 1); }

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("file", c.file, "instance file ('-' for stdin)")->required();
  cmd->add_option("--scale", c.scale, "decimal digits kept from weights (weights are multiplied by 10^scale)")
      ->check(CLI::Range(0, 15));
  cmd->add_flag("--require-chordal", c.require_chordal, "reject non-chordal input right after parsing");
}

int run(int argc, char** argv) {
  CLI::App app{"maximum-weight monophonically convex sets in chordal graphs"};
  app.require_subcommand(1);

  Common solve_c;
  std::string root_clique, trace_path, method = "interval";
  int jobs = 1;
  auto* solve_cmd = app.add_subcommand("solve", "best convex set (optionally containing a given maximal clique)");
  add_common(solve_cmd, solve_c);
  solve_cmd->add_option("--root-clique", root_clique, "comma-separated maximal clique the set must contain");
  solve_cmd->add_option("--trace", trace_path, "write JSON-lines trace of labels and collapses ('-' = stderr)");
  solve_cmd->add_option("--jobs", jobs, "threads for the per-clique loop")->check(CLI::Range(1, 256));
  solve_cmd->add_option("--poset-method", method, "interval | enumeration")
      ->check(CLI::IsMember({"interval", "enumeration"}));

  Common check_c;
  auto* check_cmd = app.add_subcommand("check", "chordality test");
  add_common(check_cmd, check_c);

  Common csg_c;
  std::string csg_format = "json";
  auto* csg_cmd = app.add_subcommand("csg", "clique-separator graph");
  add_common(csg_cmd, csg_c);
  csg_cmd->add_option("--format", csg_format, "dot | json")->check(CLI::IsMember({"dot", "json"}));

  Common poset_c;
  std::string poset_clique, poset_format = "dot";
  auto* poset_cmd = app.add_subcommand("poset", "rooted poset of the extension for one maximal clique");
  add_common(poset_cmd, poset_c);
  poset_cmd->add_option("--clique", poset_clique, "comma-separated maximal clique")->required();
  poset_cmd->add_option("--format", poset_format, "dot | json")->check(CLI::IsMember({"dot", "json"}));

  Common oracle_c;
  int budget = oracle::kSubsetBudget;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference solver (small graphs only)");
  add_common(oracle_cmd, oracle_c);
  oracle_cmd->add_option("--budget", budget, "largest vertex count accepted")->check(CLI::Range(0, 20));

  GenSpec gen;
  std::string gen_kind = "random_chordal", gen_out;
  auto add_gen = [&](CLI::App* cmd) {
    cmd->add_option("--kind", gen_kind, "ktree | random_chordal | split_like | tree")
        ->check(CLI::IsMember({"ktree", "random_chordal", "split_like", "tree"}));
    cmd->add_option("--n", gen.n, "vertex count");
    cmd->add_option("--k", gen.k, "ktree width / split_like clique size");
    cmd->add_option("--density", gen.density, "attachment probability");
    cmd->add_option("--wmin", gen.weight_min, "smallest weight");
    cmd->add_option("--wmax", gen.weight_max, "largest weight");
    cmd->add_option("--seed", gen.seed, "random seed");
  };
  auto* gen_cmd = app.add_subcommand("gen", "write a random chordal instance");
  add_gen(gen_cmd);
  gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");

  int bench_runs = 5;
  auto* bench_cmd = app.add_subcommand("bench", "time solve on generated instances");
  add_gen(bench_cmd);
  bench_cmd->add_option("--runs", bench_runs, "instances (seeds seed..seed+runs-1)")->check(CLI::Range(1, 100000));
  bench_cmd->add_option("--jobs", jobs, "threads for the per-clique loop")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  if (solve_cmd->parsed()) {
    const WeightedGraph g = load(solve_c);
    SolverOptions opt;
    opt.jobs = jobs;
    opt.poset_method = method == "interval" ? PosetMethod::Interval : PosetMethod::Enumeration;
    std::unique_ptr<std::ofstream> trace_file;
    if (!trace_path.empty()) {
      std::ostream* sink = &std::cerr;
      if (trace_path != "-") {
        trace_file = std::make_unique<std::ofstream>(trace_path);
        if (!*trace_file) throw InputError("cannot write " + trace_path);
        sink = trace_file.get();
      }
      opt.trace = [sink](const json& e) { *sink << e.dump() << "\n"; };
      opt.trace_id_base = 1;
    }
    const Solution sol = root_clique.empty() ? solve(g, opt) : solve_rooted_at(g, parse_set(root_clique), opt);
    std::cout << to_json(sol, solve_c.scale).dump() << "\n";
    return kOk;
  }
  if (check_cmd->parsed()) {
    const WeightedGraph g = load(check_c);
    if (is_chordal(g)) {
      std::cout << "chordal\n";
      return kOk;
    }
    std::cout << "not chordal\n";
    return kPrecondition;
  }
  if (csg_cmd->parsed()) {
    const WeightedGraph g = load(csg_c);
    require_chordal(g);
    const auto csg = clique_separator_graph(g);
    if (csg_format == "dot")
      std::cout << to_dot(csg, one_based);
    else
      std::cout << to_json(csg).dump() << "\n";
    return kOk;
  }
  if (poset_cmd->parsed()) {
    const WeightedGraph g = load(poset_c);
    require_chordal(g);
    const ExtendedGraph ext = extend(g);
    const VertexSet k = parse_set(poset_clique);
    g.check_set(k);
    const RootedPoset p = rooted_poset(ext, k);
    auto name = [&](Vertex v) {
      if (!ext.is_dummy(v)) return one_based(v);
      std::string s = "d{";
      const auto& c = ext.cliques[static_cast<std::size_t>(ext.clique_of_dummy(v))];
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + one_based(c[i]);
      return s + "}";
    };
    if (poset_format == "dot") {
      std::cout << to_dot(p, name);
    } else {
      json out{{"elements", json::array()}, {"covers", json::array()}};
      for (Vertex v = 0; v < p.size(); ++v) out["elements"].push_back(name(v));
      for (auto [u, v] : covers(p)) out["covers"].push_back({name(u), name(v)});
      std::cout << out.dump() << "\n";
    }
    return kOk;
  }
  if (oracle_cmd->parsed()) {
    const WeightedGraph g = load(oracle_c);
    const auto best = oracle::brute_force_opt(g, {}, budget);
    Solution sol;
    sol.vertices = best.set;
    sol.weight = best.weight;
    std::cout << to_json(sol, oracle_c.scale).dump() << "\n";
    return kOk;
  }
  if (gen_cmd->parsed()) {
    gen.kind = parse_gen_kind(gen_kind);
    const std::string text = serialize(generate(gen));
    if (gen_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(gen_out);
      if (!out) throw InputError("cannot write " + gen_out);
      out << text;
    }
    return kOk;
  }
  if (bench_cmd->parsed()) {
    gen.kind = parse_gen_kind(gen_kind);
    SolverOptions opt;
    opt.jobs = jobs;
    const std::uint64_t first = gen.seed;
    for (int r = 0; r < bench_runs; ++r) {
      gen.seed = first + static_cast<std::uint64_t>(r);
      const WeightedGraph g = generate(gen);
      const auto t0 = std::chrono::steady_clock::now();
      const Solution sol = solve(g, opt);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cout << json{{"seed", gen.seed},
                        {"n", g.vertex_count()},
                        {"m", g.edge_count()},
                        {"weight", sol.weight},
                        {"seconds", secs},
                        {"collapses", sol.stats.collapses},
                        {"closure_solves", sol.stats.closure_solves},
                        {"labels", sol.stats.labels_computed}}
                       .dump()
                << "\n";
    }
    return kOk;
  }
  return kParse;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSize;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
