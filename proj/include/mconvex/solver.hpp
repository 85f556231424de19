#pragma once

// Maximum-weight monophonically convex set of a chordal graph.
//
// Pipeline per connected component: add a dummy vertex to every maximal
// clique, then for every clique K find the best convex set containing its
// dummy d_K. A rooted search repeatedly collapses a K-blocking arc
// (S1, S2) of the clique-separator graph: the part of the graph behind S1
// becomes a single vertex z whose weight is the best S1-rooted convex set
// of that part (its label) minus w(S1). Once no blocking arc remains the
// convex sets containing d_K are exactly the ideals of the K-rooted poset,
// and a minimum cut finds the best one. Labels are themselves rooted
// searches on strictly smaller sub-instances and are memoised by vertex set.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mconvex/chordal.hpp"
#include "mconvex/closure.hpp"
#include "mconvex/extension.hpp"
#include "mconvex/graph.hpp"
#include "mconvex/poset.hpp"

namespace mconvex {

// S1 plus the component of G - S1 that meets S2.
struct SubInstance {
  VertexSet s1;
  VertexSet s2;
  VertexSet vertices;
};

namespace detail {

inline void check_arc(const CliqueSeparatorGraph& csg, SeparatorArc a) {
  if (std::find(csg.arcs.begin(), csg.arcs.end(), a) == csg.arcs.end())
    throw InputError("not an arc of the clique-separator graph");
}

inline VertexSet component_meeting(const WeightedGraph& g, const VertexSet& removed, const VertexSet& target) {
  for (auto& c : connected_components(g, removed))
    for (Vertex v : target)
      if (!contains(removed, v) && contains(c, v)) return std::move(c);
  return {};
}

inline SubInstance sub_instance(const WeightedGraph& g, const CliqueSeparatorGraph& csg, SeparatorArc a) {
  SubInstance out;
  out.s1 = csg.separators[a.from];
  out.s2 = csg.separators[a.to];
  out.vertices = set_union(out.s1, component_meeting(g, out.s1, out.s2));
  return out;
}

}  // namespace detail

inline SubInstance g_minus_arc(const WeightedGraph& g, const CliqueSeparatorGraph& csg, SeparatorArc a) {
  detail::check_arc(csg, a);
  return detail::sub_instance(g, csg, a);
}

// Blocking flags for every arc of csg with respect to the clique whose
// dummy is `dummy`: d_K lies outside G (-) a, and no arc (S3, S1) also
// leaves d_K outside.
inline std::vector<std::uint8_t> blocking_flags(const WeightedGraph& g, const CliqueSeparatorGraph& csg,
                                                Vertex dummy) {
  g.check_vertex(dummy);
  const std::size_t arcs = csg.arcs.size();
  std::vector<std::uint8_t> excludes(arcs, 0);
  for (std::size_t i = 0; i < arcs; ++i)
    excludes[i] = !contains(detail::sub_instance(g, csg, csg.arcs[i]).vertices, dummy);
  std::vector<std::uint8_t> out(arcs, 0);
  for (std::size_t i = 0; i < arcs; ++i) {
    if (!excludes[i]) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < arcs && minimal; ++j)
      if (csg.arcs[j].to == csg.arcs[i].from && excludes[j]) minimal = false;
    out[i] = minimal;
  }
  return out;
}

inline bool is_k_blocking(const WeightedGraph& g, const CliqueSeparatorGraph& csg, SeparatorArc a, Vertex dummy) {
  detail::check_arc(csg, a);
  const auto flags = blocking_flags(g, csg, dummy);
  const auto pos = std::find(csg.arcs.begin(), csg.arcs.end(), a) - csg.arcs.begin();
  return flags[static_cast<std::size_t>(pos)] != 0;
}

inline bool is_k_blocking(const ExtendedGraph& ext, const CliqueSeparatorGraph& csg, SeparatorArc a,
                          const VertexSet& clique) {
  return is_k_blocking(ext.graph, csg, a, ext.dummy_of(clique));
}

// Result of identifying (G (-) a) - S1 into one vertex z. Surviving vertices
// keep their relative order and come first; z and its fresh dummy follow.
struct CollapsedGraph {
  WeightedGraph graph;
  std::vector<Vertex> origin;  // new id -> old id, -1 for z and its dummy
  Vertex z = -1;
  Vertex z_dummy = -1;
  Weight z_weight = 0;
  VertexSet expansion;  // old ids that z stands for: label \ S1
};

inline CollapsedGraph collapse(const WeightedGraph& g, const SubInstance& sub, std::span<const Vertex> label) {
  const VertexSet lbl = canonical(VertexSet(label.begin(), label.end()));
  if (!is_subset(sub.s1, lbl) || !is_subset(lbl, sub.vertices))
    throw InputError("label must contain S1 and lie inside the sub-instance");
  const VertexSet region = set_difference(sub.vertices, sub.s1);
  CollapsedGraph out;
  std::vector<Vertex> renumber(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Weight> weights;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (contains(region, v)) continue;
    renumber[v] = static_cast<Vertex>(out.origin.size());
    out.origin.push_back(v);
    weights.push_back(g.weight(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (renumber[e.u] >= 0 && renumber[e.v] >= 0) edges.push_back({renumber[e.u], renumber[e.v]});
  out.z = static_cast<Vertex>(out.origin.size());
  out.z_dummy = out.z + 1;
  out.origin.push_back(-1);
  out.origin.push_back(-1);
  out.z_weight = g.weight_of(lbl) - g.weight_of(sub.s1);
  weights.push_back(out.z_weight);
  weights.push_back(0);
  for (Vertex s : sub.s1) {
    edges.push_back({renumber[s], out.z});
    edges.push_back({renumber[s], out.z_dummy});
  }
  edges.push_back({out.z, out.z_dummy});
  const auto count = static_cast<int>(weights.size());
  out.graph = WeightedGraph(count, edges, std::move(weights));
  out.expansion = set_difference(lbl, sub.s1);
  return out;
}

inline CollapsedGraph collapse(const WeightedGraph& g, const CliqueSeparatorGraph& csg, SeparatorArc a,
                               std::span<const Vertex> label) {
  return collapse(g, g_minus_arc(g, csg, a), label);
}

using TraceSink = std::function<void(const nlohmann::json&)>;

struct SolverOptions {
  PosetMethod poset_method = PosetMethod::Interval;
  // Worker threads for the loop over root cliques; results do not depend on it.
  int jobs = 1;
  // One JSON object per label, collapse and closure step when set.
  TraceSink trace;
  // Added to vertex ids in trace output (1 for the 1-based file format).
  int trace_id_base = 0;
};

struct SolverStats {
  long collapses = 0;
  long closure_solves = 0;
  long labels_computed = 0;
  long label_hits = 0;
  long late_labels = 0;           // labels first needed after the labeling phase
  long ordering_violations = 0;   // arc labels needed before their turn
  long max_depth = 0;

  SolverStats& operator+=(const SolverStats& o) {
    collapses += o.collapses;
    closure_solves += o.closure_solves;
    labels_computed += o.labels_computed;
    label_hits += o.label_hits;
    late_labels += o.late_labels;
    ordering_violations += o.ordering_violations;
    max_depth = std::max(max_depth, o.max_depth);
    return *this;
  }
};

struct Solution {
  VertexSet vertices;  // ids of the input graph, dummies removed
  Weight weight = 0;
  std::optional<VertexSet> rooted_at;  // the maximal clique whose dummy rooted the optimum
  SolverStats stats;
};

// d_K-rooted optimum in the ids of an extended graph (dummies included).
struct RootedSolution {
  VertexSet vertices;
  Weight weight = 0;
};

struct LabelEntry {
  VertexSet vertices;
  Weight weight = 0;
};

// (vertex set of G (-) a, S1) -> best S1-rooted convex set of G (-) a.
using LabelTable = std::map<std::pair<VertexSet, VertexSet>, LabelEntry>;

namespace detail {

// Rooted searches over graphs derived from one extended component. Every
// vertex of every derived graph is a token: tokens 0..n-1 are the vertices
// of the extended component, later tokens stand for collapsed regions and
// their dummies. A derived graph is identified by its token set, and a
// token's adjacency never depends on which derived graph it sits in, so
// token sets are sound memo keys.
class CollapseEngine {
 public:
  struct Token {
    enum class Kind { Original, Dummy, Collapsed, CollapsedDummy } kind;
    VertexSet expansion;  // Collapsed: tokens of label \ S1
    VertexSet clique;     // Dummy kinds: tokens of the clique it hangs off
  };

  // Graph over an ascending token list.
  struct Working {
    WeightedGraph graph;
    VertexSet tokens;

    Vertex local(Vertex token) const {
      auto it = std::lower_bound(tokens.begin(), tokens.end(), token);
      if (it == tokens.end() || *it != token) throw InternalError("token missing from working graph");
      return static_cast<Vertex>(it - tokens.begin());
    }
    VertexSet lift(std::span<const Vertex> local_set) const {
      VertexSet out;
      for (Vertex v : local_set) out.push_back(tokens[v]);
      return canonical(std::move(out));
    }
    VertexSet lower(std::span<const Vertex> token_set) const {
      VertexSet out;
      for (Vertex t : token_set) out.push_back(local(t));
      return canonical(std::move(out));
    }
  };

  CollapseEngine(const ExtendedGraph& root, const SolverOptions& options, std::vector<Vertex> to_input)
      : root_(&root), options_(&options), to_input_(std::move(to_input)) {
    for (Vertex v = 0; v < root.graph.vertex_count(); ++v) {
      Token t{root.is_dummy(v) ? Token::Kind::Dummy : Token::Kind::Original, {}, {}};
      if (root.is_dummy(v)) t.clique = root.cliques[static_cast<std::size_t>(root.clique_of_dummy(v))];
      tokens_.push_back(std::move(t));
    }
  }

  Working root_working() const { return {root_->graph, root_->graph.all_vertices()}; }

  // Algorithm-2 style eager pass: label every arc of the root graph,
  // smallest sub-instance first.
  void label_arcs() {
    const Working w = root_working();
    const auto csg = clique_separator_graph(w.graph);
    std::vector<std::pair<VertexSet, VertexSet>> keys;
    std::map<std::pair<VertexSet, VertexSet>, Working> subs;
    for (const auto& arc : csg.arcs) {
      auto sub = detail::sub_instance(w.graph, csg, arc);
      auto key = std::make_pair(w.lift(sub.vertices), w.lift(sub.s1));
      keys.push_back(key);
      subs.emplace(key, restrict(w, sub.vertices));
    }
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
      if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
      return a < b;
    });
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    pending_arc_keys_.insert(keys.begin(), keys.end());
    for (const auto& key : keys) {
      pending_arc_keys_.erase(key);
      label(subs.at(key), key.second, 0);
    }
    labeling_done_ = true;
  }

  // Best convex set of `start` containing dummy token `root_dummy` and
  // every token of `required`.
  RootedSolution solve_rooted(const Working& start, Vertex root_dummy, const VertexSet& required, int depth) {
    stats_.max_depth = std::max<long>(stats_.max_depth, depth);
    Working w = start;
    std::optional<std::size_t> previous;
    while (true) {
      const auto csg = clique_separator_graph(w.graph);
      const Vertex d = w.local(root_dummy);
      const auto flags = blocking_flags(w.graph, csg, d);
      const auto count = static_cast<std::size_t>(std::count(flags.begin(), flags.end(), 1));
      if (previous && count >= *previous)
        throw InternalError("collapse did not reduce the number of blocking arcs");
      if (count == 0) break;
      previous = count;
      const std::size_t pick = static_cast<std::size_t>(std::find(flags.begin(), flags.end(), 1) - flags.begin());
      const SubInstance sub = detail::sub_instance(w.graph, csg, csg.arcs[pick]);
      const VertexSet sub_tokens = w.lift(sub.vertices);
      const VertexSet s1_tokens = w.lift(sub.s1);
      const LabelEntry lbl = label(restrict(w, sub.vertices), s1_tokens, depth);
      const CollapsedGraph collapsed = collapse(w.graph, sub, w.lower(lbl.vertices));
      const auto [z, z_dummy] = intern_collapse(sub_tokens, s1_tokens, lbl, w.lift(collapsed.expansion));
      std::vector<Vertex> token_of(collapsed.origin.size());
      for (std::size_t i = 0; i < collapsed.origin.size(); ++i)
        token_of[i] = collapsed.origin[i] >= 0 ? w.tokens[collapsed.origin[i]] : -1;
      token_of[collapsed.z] = z;
      token_of[collapsed.z_dummy] = z_dummy;
      ++stats_.collapses;
      if (tracing()) {
        trace({{"event", "collapse"},
               {"depth", depth},
               {"root", describe(clique_of(root_dummy))},
               {"required", describe(required)},
               {"arc", {describe(s1_tokens), describe(w.lift(sub.s2))}},
               {"label_weight", lbl.weight},
               {"z", describe_token(z)},
               {"z_weight", collapsed.z_weight},
               {"expansion", describe(tokens_[z].expansion)}});
      }
      w = reorder(collapsed.graph, token_of);
    }
    for (Vertex r : required)
      if (!contains(w.tokens, r)) throw InternalError("a required vertex was collapsed away");
    ClosureInstance inst{rooted_poset(w.graph, w.local(root_dummy), options_->poset_method), w.graph.weights(),
                         w.lower(set_union(required, VertexSet{root_dummy}))};
    const Closure closure = max_weight_ideal(inst);
    ++stats_.closure_solves;
    RootedSolution out{expand_within(start.tokens, w.lift(closure.set)), closure.weight};
    if (tracing()) {
      trace({{"event", "closure"},
             {"depth", depth},
             {"root", describe(clique_of(root_dummy))},
             {"required", describe(required)},
             {"vertices", describe(out.vertices)},
             {"weight", out.weight}});
    }
    return out;
  }

  // Best S1-rooted convex set of the sub-instance, memoised.
  LabelEntry label(const Working& w, const VertexSet& s1_tokens, int depth) {
    const VertexSet& sub_tokens = w.tokens;
    auto key = std::make_pair(sub_tokens, s1_tokens);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++stats_.label_hits;
      return it->second;
    }
    if (pending_arc_keys_.count(key)) ++stats_.ordering_violations;
    if (labeling_done_) ++stats_.late_labels;
    ++stats_.labels_computed;
    LabelEntry best{s1_tokens, w.graph.weight_of(w.lower(s1_tokens))};
    VertexSet best_key = expand_input(best.vertices);
    const VertexSet s1_local = w.lower(s1_tokens);
    for (const VertexSet& k : maximal_cliques(w.graph)) {
      if (!is_subset(s1_local, k)) continue;
      const Vertex d = dummy_in(w, k);
      const RootedSolution r = solve_rooted(w, d, s1_tokens, depth + 1);
      VertexSet r_key = expand_input(r.vertices);
      if (r.weight > best.weight || (r.weight == best.weight && r_key < best_key)) {
        best = {r.vertices, r.weight};
        best_key = std::move(r_key);
      }
    }
    if (tracing()) {
      trace({{"event", "label"},
             {"depth", depth},
             {"separator", describe(s1_tokens)},
             {"subinstance", describe(sub_tokens)},
             {"vertices", describe(best.vertices)},
             {"weight", best.weight}});
    }
    memo_.emplace(std::move(key), best);
    return best;
  }

  // Root-graph vertices (extended component ids) a token set stands for.
  VertexSet expand(std::span<const Vertex> token_set) const {
    VertexSet out;
    expand_into(token_set, out);
    return canonical(std::move(out));
  }

  // Input-graph ids of the original vertices a token set stands for.
  VertexSet expand_input(std::span<const Vertex> token_set) const {
    VertexSet out;
    for (Vertex v : expand(token_set))
      if (!root_->is_dummy(v)) out.push_back(to_input_[v]);
    return canonical(std::move(out));
  }

  const SolverStats& stats() const { return stats_; }
  const std::vector<nlohmann::json>& events() const { return events_; }
  void clear_events() { events_.clear(); }

  LabelTable root_labels() const {
    LabelTable out;
    const auto n = static_cast<Vertex>(root_->graph.vertex_count());
    for (const auto& [key, entry] : memo_) {
      if (!key.first.empty() && key.first.back() >= n) continue;
      out.emplace(key, LabelEntry{expand(entry.vertices), entry.weight});
    }
    return out;
  }

 private:
  bool tracing() const { return static_cast<bool>(options_->trace); }
  void trace(nlohmann::json event) { events_.push_back(std::move(event)); }

  // Rewrites tokens born during a rooted search in terms of the tokens it
  // started from; their fresh dummies disappear.
  VertexSet expand_within(const VertexSet& base, std::span<const Vertex> token_set) const {
    VertexSet out;
    std::vector<Vertex> stack(token_set.begin(), token_set.end());
    while (!stack.empty()) {
      const Vertex t = stack.back();
      stack.pop_back();
      if (contains(base, t)) {
        out.push_back(t);
        continue;
      }
      const Token& tok = tokens_[static_cast<std::size_t>(t)];
      if (tok.kind == Token::Kind::Collapsed) stack.insert(stack.end(), tok.expansion.begin(), tok.expansion.end());
    }
    return canonical(std::move(out));
  }

  void expand_into(std::span<const Vertex> token_set, VertexSet& out) const {
    for (Vertex t : token_set) {
      const Token& tok = tokens_[static_cast<std::size_t>(t)];
      if (tok.kind == Token::Kind::Collapsed)
        expand_into(tok.expansion, out);
      else if (tok.kind != Token::Kind::CollapsedDummy)
        out.push_back(t);
    }
  }

  VertexSet clique_of(Vertex dummy_token) const { return tokens_[static_cast<std::size_t>(dummy_token)].clique; }

  Vertex dummy_in(const Working& w, const VertexSet& clique) const {
    for (Vertex v : clique) {
      const auto kind = tokens_[static_cast<std::size_t>(w.tokens[v])].kind;
      if ((kind == Token::Kind::Dummy || kind == Token::Kind::CollapsedDummy) && w.graph.degree(v) + 1 == clique.size())
        return w.tokens[v];
    }
    throw InternalError("maximal clique without a dummy vertex");
  }

  static Working restrict(const Working& w, const VertexSet& local_set) {
    auto sub = induced_subgraph(w.graph, local_set);
    return {std::move(sub.graph), w.lift(sub.to_parent)};
  }

  Working reorder(const WeightedGraph& g, const std::vector<Vertex>& token_of) const {
    std::vector<Vertex> order(token_of.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return token_of[a] < token_of[b]; });
    std::vector<Vertex> position(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({position[e.u], position[e.v]});
    std::vector<Weight> weights(order.size());
    VertexSet tokens(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      weights[i] = g.weight(order[i]);
      tokens[i] = token_of[order[i]];
    }
    return {WeightedGraph(static_cast<int>(order.size()), edges, std::move(weights)), std::move(tokens)};
  }

  std::pair<Vertex, Vertex> intern_collapse(const VertexSet& sub_tokens, const VertexSet& s1_tokens,
                                            const LabelEntry&, VertexSet expansion) {
    auto key = std::make_pair(sub_tokens, s1_tokens);
    if (auto it = collapsed_.find(key); it != collapsed_.end()) return it->second;
    const auto z = static_cast<Vertex>(tokens_.size());
    tokens_.push_back({Token::Kind::Collapsed, std::move(expansion), {}});
    const auto dz = static_cast<Vertex>(tokens_.size());
    tokens_.push_back({Token::Kind::CollapsedDummy, {}, set_union(s1_tokens, VertexSet{z})});
    collapsed_.emplace(std::move(key), std::make_pair(z, dz));
    return {z, dz};
  }

  nlohmann::json describe_token(Vertex t) const {
    const Token& tok = tokens_[static_cast<std::size_t>(t)];
    const int base = options_->trace_id_base;
    auto originals = [&](std::span<const Vertex> s) {
      std::string out = "{";
      bool first = true;
      for (Vertex v : expand_input(s)) {
        if (!first) out += ",";
        out += std::to_string(v + base);
        first = false;
      }
      return out + "}";
    };
    switch (tok.kind) {
      case Token::Kind::Original:
        return to_input_[static_cast<std::size_t>(t)] + base;
      case Token::Kind::Dummy:
        return "d" + originals(tok.clique);
      case Token::Kind::Collapsed:
        return "z" + originals(tok.expansion);
      case Token::Kind::CollapsedDummy:
        return "dz" + originals(tok.clique);
    }
    return nullptr;
  }

  nlohmann::json describe(std::span<const Vertex> token_set) const {
    nlohmann::json out = nlohmann::json::array();
    for (Vertex t : token_set) out.push_back(describe_token(t));
    return out;
  }

  const ExtendedGraph* root_;
  const SolverOptions* options_;
  std::vector<Vertex> to_input_;  // root original vertex -> input graph id
  std::vector<Token> tokens_;
  std::map<std::pair<VertexSet, VertexSet>, LabelEntry> memo_;
  std::map<std::pair<VertexSet, VertexSet>, std::pair<Vertex, Vertex>> collapsed_;
  std::set<std::pair<VertexSet, VertexSet>> pending_arc_keys_;
  bool labeling_done_ = false;
  SolverStats stats_;
  std::vector<nlohmann::json> events_;
};


struct ComponentResult {
  VertexSet vertices;  // input ids
  Weight weight = 0;
  VertexSet root;      // input ids of the rooting clique
};

inline void flush(const SolverOptions& options, CollapseEngine& engine) {
  if (options.trace)
    for (const auto& e : engine.events()) options.trace(e);
  engine.clear_events();
}

// Best convex set of one connected chordal component; `to_input` maps
// component ids to input ids. With `only_root` (component ids) just that
// clique's dummy is tried, and `required` (a subset of it) is forced in too.
inline ComponentResult solve_component(const WeightedGraph& h, const std::vector<Vertex>& to_input,
                                       const SolverOptions& options, std::optional<VertexSet> only_root,
                                       SolverStats& stats, const VertexSet& required = {}) {
  const ExtendedGraph ext = extend(h);
  CollapseEngine base(ext, options, to_input);
  base.label_arcs();
  flush(options, base);
  std::vector<std::size_t> roots;
  if (only_root) {
    ext.dummy_of(*only_root);
    for (std::size_t i = 0; i < ext.cliques.size(); ++i)
      if (ext.cliques[i] == *only_root) roots.push_back(i);
  } else {
    for (std::size_t i = 0; i < ext.cliques.size(); ++i) roots.push_back(i);
  }
  std::vector<std::optional<CollapseEngine>> engines(roots.size());
  std::vector<RootedSolution> results(roots.size());
  auto run = [&](std::size_t i) {
    engines[i].emplace(base);
    results[i] = engines[i]->solve_rooted(engines[i]->root_working(), ext.dummies[roots[i]], required, 0);
  };
  const auto jobs = static_cast<std::size_t>(std::max(1, options.jobs));
  if (jobs == 1 || roots.size() < 2) {
    for (std::size_t i = 0; i < roots.size(); ++i) run(i);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (std::size_t j = 0; j < jobs; ++j)
      workers.emplace_back([&, j] {
        try {
          for (std::size_t i = j; i < roots.size(); i += jobs) run(i);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    for (auto& t : workers) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  stats += base.stats();
  ComponentResult best;
  bool have = false;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    CollapseEngine& e = *engines[i];
    flush(options, e);
    SolverStats delta = e.stats();
    delta.collapses -= base.stats().collapses;
    delta.closure_solves -= base.stats().closure_solves;
    delta.labels_computed -= base.stats().labels_computed;
    delta.label_hits -= base.stats().label_hits;
    delta.ordering_violations -= base.stats().ordering_violations;
    stats += delta;
    VertexSet vertices = e.expand_input(results[i].vertices);
    if (!have || results[i].weight > best.weight || (results[i].weight == best.weight && vertices < best.vertices)) {
      best.vertices = std::move(vertices);
      best.weight = results[i].weight;
      VertexSet root;
      for (Vertex v : ext.cliques[roots[i]]) root.push_back(to_input[v]);
      best.root = canonical(std::move(root));
      have = true;
    }
  }
  return best;
}

inline std::vector<Vertex> identity_map(int n) {
  std::vector<Vertex> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace detail

// Maximum-weight monophonically convex set of a chordal graph. The empty
// set (weight 0) is returned when nothing beats it. Ties go to the
// lexicographically smallest vertex set.
inline Solution solve(const WeightedGraph& g, const SolverOptions& options = {}) {
  require_chordal(g);
  Solution out;
  std::vector<std::pair<detail::ComponentResult, std::size_t>> positive;
  for (const VertexSet& comp : connected_components(g)) {
    const auto sub = induced_subgraph(g, comp);
    auto r = detail::solve_component(sub.graph, sub.to_parent, options, std::nullopt, out.stats);
    if (r.weight > 0) positive.emplace_back(std::move(r), 0);
  }
  // Convex sets of different components combine freely.
  for (const auto& [r, unused] : positive) {
    out.vertices = set_union(out.vertices, r.vertices);
    out.weight += r.weight;
  }
  if (positive.size() == 1) out.rooted_at = positive.front().first.root;
  return out;
}

// Problem 2: best convex set C of g such that C plus the dummy of the
// maximal clique `clique` is convex in the extension. Vertices of `required`
// (a subset of the clique) are forced into C. Ids are input ids.
inline Solution solve_rooted_at(const WeightedGraph& g, const VertexSet& clique, const SolverOptions& options = {},
                                const VertexSet& required = {}) {
  require_chordal(g);
  g.check_set(clique);
  g.check_set(required);
  const VertexSet k = canonical(clique);
  if (!is_subset(canonical(required), k)) throw InputError("forced vertices must lie in the root clique");
  if (k.empty()) throw InputError("root clique is empty");
  for (const VertexSet& comp : connected_components(g)) {
    if (!contains(comp, k.front())) continue;
    const auto sub = induced_subgraph(g, comp);
    if (!is_subset(k, comp)) throw InputError("vertex set is not a maximal clique of the graph");
    Solution out;
    auto r = detail::solve_component(sub.graph, sub.to_parent, options, sub.lower(k), out.stats,
                                     sub.lower(canonical(required)));
    out.vertices = std::move(r.vertices);
    out.weight = r.weight;
    out.rooted_at = std::move(r.root);
    return out;
  }
  throw InputError("vertex set is not a maximal clique of the graph");
}

// d_K-rooted optimum of a connected extended graph, dummies included.
inline RootedSolution solve_rooted(const ExtendedGraph& ext, const VertexSet& clique,
                                   const SolverOptions& options = {}) {
  const Vertex d = ext.dummy_of(clique);
  detail::CollapseEngine engine(ext, options, detail::identity_map(ext.original_count));
  engine.label_arcs();
  auto r = engine.solve_rooted(engine.root_working(), d, {}, 0);
  detail::flush(options, engine);
  return {engine.expand(r.vertices), r.weight};
}

// Labels of every arc of the extended graph's clique-separator graph, plus
// the labels of the smaller sub-instances they needed.
inline LabelTable label_arcs(const ExtendedGraph& ext, const SolverOptions& options = {}) {
  detail::CollapseEngine engine(ext, options, detail::identity_map(ext.original_count));
  engine.label_arcs();
  detail::flush(options, engine);
  return engine.root_labels();
}

}  // namespace mconvex
