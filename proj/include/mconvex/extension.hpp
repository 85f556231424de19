#pragma once

#include <map>
#include <string>
#include <vector>

#include "mconvex/chordal.hpp"
#include "mconvex/graph.hpp"

namespace mconvex {

// A chordal graph with one zero-weight dummy vertex per maximal clique,
// adjacent to exactly that clique. Original vertices keep their ids; the
// dummies follow, one per clique in lexicographic clique order.
struct ExtendedGraph {
  WeightedGraph graph;
  int original_count = 0;
  std::vector<VertexSet> cliques;  // original maximal cliques
  std::vector<Vertex> dummies;     // dummies[i] is the dummy of cliques[i]

  bool is_dummy(Vertex v) const { return v >= original_count; }

  // Index into `cliques` of the clique owning dummy v.
  int clique_of_dummy(Vertex v) const { return v - original_count; }

  Vertex dummy_of(const VertexSet& clique) const {
    for (std::size_t i = 0; i < cliques.size(); ++i)
      if (cliques[i] == clique) return dummies[i];
    throw InputError("vertex set is not a maximal clique of the graph");
  }

  VertexSet strip_dummies(std::span<const Vertex> s) const {
    VertexSet out;
    for (Vertex v : s)
      if (!is_dummy(v)) out.push_back(v);
    return out;
  }
};

inline ExtendedGraph extend(const WeightedGraph& g) {
  ExtendedGraph ext;
  ext.original_count = g.vertex_count();
  ext.cliques = maximal_cliques(g);
  std::vector<Edge> edges = g.edges();
  std::vector<Weight> weights = g.weights();
  for (const VertexSet& k : ext.cliques) {
    const Vertex d = static_cast<Vertex>(weights.size());
    ext.dummies.push_back(d);
    weights.push_back(0);
    for (Vertex v : k) edges.push_back({v, d});
  }
  const auto count = static_cast<int>(weights.size());
  ext.graph = WeightedGraph(count, edges, std::move(weights));
  return ext;
}

}  // namespace mconvex
