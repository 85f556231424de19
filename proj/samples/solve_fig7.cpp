// Library walk-through on the eight-vertex sample: structure, one rooted
// poset, and the optimum.
#include <iostream>

#include "mconvex/mconvex.hpp"

int main() {
  using namespace mconvex;
  const WeightedGraph g = parse_graph(R"(p 8 14
w 1 1
w 2 0
w 3 -1
w 4 -4
w 5 -1
w 6 4
w 7 -2
w 8 3
e 1 2
e 2 3
e 2 4
e 2 5
e 2 6
e 2 7
e 2 8
e 3 4
e 4 5
e 4 6
e 4 7
e 4 8
e 6 7
e 7 8
)");
  std::cout << to_json(clique_separator_graph(g)).dump(2) << "\n";

  SolverOptions opt;
  opt.trace_id_base = 1;
  opt.trace = [](const nlohmann::json& e) {
    if (e["event"] == "collapse" && e["depth"] == 0) std::cout << "collapse " << e.dump() << "\n";
  };
  const Solution best = solve(g, opt);
  std::cout << to_json(best).dump() << "\n";

  const Solution rooted = solve_rooted_at(g, {1, 2, 3});  // vertices 2,3,4
  std::cout << "containing {2,3,4}: " << to_json(rooted).dump() << "\n";
}
