#pragma once

// Instance text format (1-based ids):
//   # comment
//   p <n> <m>
//   w <v> <integer or decimal>
//   e <u> <v>
// Decimal weights are multiplied by 10^scale and must come out integral.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mconvex/chordal.hpp"
#include "mconvex/graph.hpp"
#include "mconvex/solver.hpp"

namespace mconvex {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) return std::nullopt;
  return v;
}

inline Weight pow10(int scale) {
  Weight out = 1;
  for (int i = 0; i < scale; ++i) out *= 10;
  return out;
}

}  // namespace detail

// Exact fixed-point value of a decimal literal, or nullopt if it does not
// fit the scale.
inline std::optional<Weight> parse_scaled(std::string_view s, int scale) {
  if (scale < 0 || scale > 15) throw InputError("scale must lie in [0, 15]");
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
  if (static_cast<int>(frac.size()) > scale) return std::nullopt;
  for (char c : whole)
    if (c < '0' || c > '9') return std::nullopt;
  for (char c : frac)
    if (c < '0' || c > '9') return std::nullopt;
  std::string digits(whole);
  digits += frac;
  digits.append(static_cast<std::size_t>(scale) - frac.size(), '0');
  if (digits.empty()) digits = "0";
  auto v = detail::parse_int(digits);
  if (!v) return std::nullopt;
  return negative ? -*v : *v;
}

inline std::string format_scaled(Weight w, int scale) {
  if (scale == 0) return std::to_string(w);
  const Weight unit = detail::pow10(scale);
  const Weight mag = w < 0 ? -w : w;
  std::string frac = std::to_string(mag % unit);
  frac.insert(0, static_cast<std::size_t>(scale) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (w < 0 ? "-" : "") + std::to_string(mag / unit);
  if (!frac.empty()) out += "." + frac;
  return out;
}

inline WeightedGraph parse_graph(std::istream& in, int scale = 0) {
  std::string line;
  int line_no = 0;
  std::optional<int> n;
  std::int64_t m = 0;
  std::vector<Weight> weights;
  std::vector<std::uint8_t> weighted;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen;
  auto vertex = [&](std::string_view tok) {
    auto v = detail::parse_int(tok);
    if (!v || *v < 1 || *v > *n) throw ParseError(line_no, "vertex id out of range: " + std::string(tok));
    return static_cast<Vertex>(*v - 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok[0] == "p") {
      if (n) throw ParseError(line_no, "second header line");
      if (tok.size() != 3) throw ParseError(line_no, "header must read 'p <n> <m>'");
      auto nv = detail::parse_int(tok[1]);
      auto mv = detail::parse_int(tok[2]);
      if (!nv || !mv || *nv < 0 || *mv < 0 || *nv > (1 << 24)) throw ParseError(line_no, "bad header counts");
      n = static_cast<int>(*nv);
      m = *mv;
      weights.assign(static_cast<std::size_t>(*n), 0);
      weighted.assign(static_cast<std::size_t>(*n), 0);
      seen.assign(static_cast<std::size_t>(*n), {});
      continue;
    }
    if (!n) throw ParseError(line_no, "expected header 'p <n> <m>' first");
    if (tok[0] == "w") {
      if (tok.size() != 3) throw ParseError(line_no, "weight line must read 'w <v> <value>'");
      const Vertex v = vertex(tok[1]);
      if (weighted[v]) throw ParseError(line_no, "weight given twice for vertex " + std::string(tok[1]));
      auto w = parse_scaled(tok[2], scale);
      if (!w) throw ParseError(line_no, "weight is not a number with at most " + std::to_string(scale) + " decimals");
      weights[v] = *w;
      weighted[v] = 1;
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(line_no, "edge line must read 'e <u> <v>'");
      const Vertex u = vertex(tok[1]);
      const Vertex v = vertex(tok[2]);
      if (u == v) throw ParseError(line_no, "self-loop");
      auto& su = seen[std::min(u, v)];
      if (std::find(su.begin(), su.end(), std::max(u, v)) != su.end()) throw ParseError(line_no, "duplicate edge");
      su.push_back(std::max(u, v));
      edges.push_back({u, v});
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!n) throw ParseError(0, "missing header 'p <n> <m>'");
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw ParseError(0, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return WeightedGraph(*n, edges, std::move(weights));
}

inline WeightedGraph parse_graph(std::string_view text, int scale = 0) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, scale);
}

// Canonical text: header, one weight line per vertex, edges ascending.
inline std::string serialize(const WeightedGraph& g, int scale = 0) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "w " << v + 1 << " " << format_scaled(g.weight(v), scale) << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
  return out.str();
}

inline nlohmann::json to_json(std::span<const Vertex> s, int base = 1) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : s) out.push_back(v + base);
  return out;
}

inline nlohmann::json to_json(const Solution& sol, int scale = 0) {
  nlohmann::json out;
  out["weight"] = sol.weight;
  if (scale > 0) {
    out["scale"] = scale;
    out["weight_decimal"] = format_scaled(sol.weight, scale);
  }
  out["vertices"] = to_json(sol.vertices);
  out["root"] = sol.rooted_at ? to_json(*sol.rooted_at) : nlohmann::json(nullptr);
  return out;
}

inline nlohmann::json to_json(const CliqueSeparatorGraph& csg) {
  nlohmann::json out;
  out["cliques"] = nlohmann::json::array();
  for (const auto& k : csg.cliques) out["cliques"].push_back(to_json(k));
  out["separators"] = nlohmann::json::array();
  for (const auto& s : csg.separators) out["separators"].push_back(to_json(s));
  out["edges"] = nlohmann::json::array();
  for (const auto& e : csg.edges)
    out["edges"].push_back({{"clique", to_json(csg.cliques[e.clique])}, {"separator", to_json(csg.separators[e.separator])}});
  out["arcs"] = nlohmann::json::array();
  for (const auto& a : csg.arcs)
    out["arcs"].push_back({{"from", to_json(csg.separators[a.from])}, {"to", to_json(csg.separators[a.to])}});
  return out;
}

}  // namespace mconvex
