#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "mconvex/errors.hpp"

namespace mconvex {

using Capacity = std::int64_t;

// Directed network with exact integer capacities. Capacities at or above
// `infinite()` are treated as unbounded by the cut report.
class FlowNetwork {
 public:
  struct Arc {
    int from;
    int to;
    Capacity capacity;
  };

  FlowNetwork(int node_count, int source, int sink, Capacity infinite)
      : nodes_(node_count), source_(source), sink_(sink), infinite_(infinite) {
    if (node_count < 2 || source == sink || !valid(source) || !valid(sink))
      throw InputError("flow network needs distinct source and sink among its nodes");
  }

  int add_arc(int from, int to, Capacity capacity) {
    if (!valid(from) || !valid(to)) throw InputError("arc endpoint out of range");
    if (capacity < 0) throw InputError("negative capacity");
    arcs_.push_back({from, to, capacity});
    return static_cast<int>(arcs_.size()) - 1;
  }

  int node_count() const noexcept { return nodes_; }
  int source() const noexcept { return source_; }
  int sink() const noexcept { return sink_; }
  Capacity infinite() const noexcept { return infinite_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  // DIMACS max-flow format (1-based node ids).
  std::string to_dimacs() const {
    std::ostringstream out;
    out << "p max " << nodes_ << " " << arcs_.size() << "\n";
    out << "n " << source_ + 1 << " s\n";
    out << "n " << sink_ + 1 << " t\n";
    for (const Arc& a : arcs_) out << "a " << a.from + 1 << " " << a.to + 1 << " " << a.capacity << "\n";
    return out.str();
  }

 private:
  bool valid(int v) const { return v >= 0 && v < nodes_; }

  int nodes_;
  int source_;
  int sink_;
  Capacity infinite_;
  std::vector<Arc> arcs_;
};

struct MinCut {
  Capacity flow = 0;
  std::vector<int> source_side;  // ascending, includes the source
};

// Highest-label push-relabel with the gap heuristic, run to a full flow
// (excess that cannot reach the sink is returned to the source). The source
// side reported is the set reachable from the source in the residual graph,
// i.e. the smallest minimum cut. Throws InfeasibleError when the cut value
// reaches the network's infinite capacity.
inline MinCut max_flow_min_cut(const FlowNetwork& net) {
  const int n = net.node_count();
  const int s = net.source();
  const int t = net.sink();

  struct Residual {
    int to;
    int rev;
    Capacity cap;
  };
  std::vector<std::vector<Residual>> adj(static_cast<std::size_t>(n));
  for (const auto& a : net.arcs()) {
    if (a.from == a.to) continue;
    adj[a.from].push_back({a.to, static_cast<int>(adj[a.to].size()), a.capacity});
    adj[a.to].push_back({a.from, static_cast<int>(adj[a.from].size()) - 1, 0});
  }

  const int max_height = 2 * n;
  std::vector<int> height(static_cast<std::size_t>(n), 0);
  std::vector<Capacity> excess(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> current(static_cast<std::size_t>(n), 0);
  std::vector<int> count(static_cast<std::size_t>(max_height + 1), 0);
  std::vector<std::vector<int>> bucket(static_cast<std::size_t>(max_height + 1));
  int highest = 0;

  auto activate = [&](int v) {
    if (v == s || v == t || excess[v] <= 0) return;
    bucket[height[v]].push_back(v);
    highest = std::max(highest, height[v]);
  };

  height[s] = n;
  count[0] = n - 1;
  count[n] = 1;
  for (auto& e : adj[s]) {
    if (e.cap == 0) continue;
    const Capacity d = e.cap;
    e.cap = 0;
    adj[e.to][e.rev].cap += d;
    const bool was_active = excess[e.to] > 0;
    excess[e.to] += d;
    excess[s] -= d;
    if (!was_active) activate(e.to);
  }

  auto relabel = [&](int v) {
    const int old = height[v];
    int best = max_height;
    for (const auto& e : adj[v])
      if (e.cap > 0) best = std::min(best, height[e.to] + 1);
    --count[old];
    height[v] = best;
    ++count[best];
    current[v] = 0;
    // Gap: nothing left at `old`, so nodes above it (below n) are cut off
    // from the sink.
    if (count[old] == 0 && old < n) {
      for (int u = 0; u < n; ++u) {
        if (u == s || height[u] <= old || height[u] >= n) continue;
        --count[height[u]];
        height[u] = n + 1;
        ++count[height[u]];
        current[u] = 0;
      }
    }
  };

  while (true) {
    while (highest > 0 && bucket[highest].empty()) --highest;
    if (bucket[highest].empty()) break;
    const int v = bucket[highest].back();
    bucket[highest].pop_back();
    if (excess[v] <= 0 || height[v] != highest) {
      // Stale entry; its current height bucket gets it if still active.
      if (excess[v] > 0 && height[v] != highest) activate(v);
      continue;
    }
    // Discharge v.
    while (excess[v] > 0) {
      if (current[v] == adj[v].size()) {
        relabel(v);
        if (height[v] >= max_height) break;
        continue;
      }
      auto& e = adj[v][current[v]];
      if (e.cap > 0 && height[v] == height[e.to] + 1) {
        const Capacity d = std::min(excess[v], e.cap);
        e.cap -= d;
        adj[e.to][e.rev].cap += d;
        const bool was_active = excess[e.to] > 0;
        excess[v] -= d;
        excess[e.to] += d;
        if (!was_active) activate(e.to);
      } else {
        ++current[v];
      }
    }
  }

  MinCut out;
  out.flow = excess[t];
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  std::deque<int> queue{s};
  seen[s] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& e : adj[v])
      if (e.cap > 0 && !seen[e.to]) {
        seen[e.to] = 1;
        queue.push_back(e.to);
      }
  }
  for (int v = 0; v < n; ++v)
    if (seen[v]) out.source_side.push_back(v);
  if (out.flow >= net.infinite()) throw InfeasibleError("minimum cut crosses an infinite-capacity arc");
  return out;
}

}  // namespace mconvex
