#pragma once

// Maximum-weight ideal of a partial order (the closure problem), reduced to
// a minimum s-t cut.

#include <cstdlib>
#include <vector>

#include "mconvex/graph.hpp"
#include "mconvex/maxflow.hpp"
#include "mconvex/poset.hpp"

namespace mconvex {

struct ClosureInstance {
  RootedPoset order;            // elements 0..n-1
  std::vector<Weight> weights;  // one per element
  VertexSet required;           // must be inside the ideal

  int size() const { return order.size(); }

  void validate() const {
    if (static_cast<int>(weights.size()) != order.size())
      throw InputError("closure instance: weight count does not match element count");
    for (Vertex r : required)
      if (r < 0 || r >= order.size()) throw InputError("closure instance: required element out of range");
  }
};

struct Closure {
  VertexSet set;
  Weight weight = 0;
};

// Larger than any finite cut of the network built below.
inline Capacity infinite_capacity(const std::vector<Weight>& weights) {
  Capacity total = 1;
  for (Weight w : weights) total += std::llabs(w);
  return total;
}

// Nodes 0..n-1 are the elements, n is the source and n+1 the sink.
// source -> v carries w(v) > 0, v -> sink carries -w(v) for w(v) < 0,
// v -> u is infinite whenever u < v (taking v forces u), and required
// elements hang off the source by an infinite arc.
inline FlowNetwork build_network(const ClosureInstance& inst) {
  inst.validate();
  const int n = inst.size();
  const Capacity inf = infinite_capacity(inst.weights);
  FlowNetwork net(n + 2, n, n + 1, inf);
  std::vector<std::uint8_t> forced(static_cast<std::size_t>(n), 0);
  for (Vertex r : inst.required) forced[r] = 1;
  for (Vertex v = 0; v < n; ++v) {
    const Weight w = inst.weights[v];
    if (forced[v])
      net.add_arc(n, v, inf);
    else if (w > 0)
      net.add_arc(n, v, w);
    if (w < 0) net.add_arc(v, n + 1, -w);
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < n; ++u)
      if (u != v && inst.order.leq(u, v)) net.add_arc(v, u, inf);
  return net;
}

inline Closure max_weight_ideal(const ClosureInstance& inst) {
  const FlowNetwork net = build_network(inst);
  const MinCut cut = max_flow_min_cut(net);
  Closure out;
  const int n = inst.size();
  for (int v : cut.source_side)
    if (v < n) out.set.push_back(v);
  Weight positive = 0;
  for (Weight w : inst.weights)
    if (w > 0) positive += w;
  out.weight = positive - cut.flow;
  Weight direct = 0;
  for (Vertex v : out.set) direct += inst.weights[v];
  if (direct != out.weight) throw InternalError("closure weight disagrees with the cut value");
  return out;
}

// Forcing by reweighting instead of infinite arcs: every required element
// gets weight M = sum |w|, the unforced problem is solved, and the bonus is
// taken back out of the reported weight.
inline Closure max_weight_ideal_big_m(const ClosureInstance& inst) {
  inst.validate();
  Weight big = 0;
  for (Weight w : inst.weights) big += std::llabs(w);
  ClosureInstance lifted{inst.order, inst.weights, {}};
  Weight correction = 0;
  for (Vertex r : inst.required) {
    lifted.weights[r] = big;
    correction += big - inst.weights[r];
  }
  Closure out = max_weight_ideal(lifted);
  out.weight -= correction;
  return out;
}

}  // namespace mconvex
