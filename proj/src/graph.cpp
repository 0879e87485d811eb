#include "frobgraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

namespace frobgraph {

std::string Graph::edge_of(const std::string& half) const {
  auto it = edge_name.find(half);
  if (it != edge_name.end()) return it->second;
  auto sg = sigma.find(half);
  if (sg == sigma.end()) throw Error(ErrorKind::InvalidInput, "unknown half-edge '" + half + "'");
  return std::min(half, sg->second);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  std::set<std::string> seen;
  for (const auto& h : half_edges) {
    if (seen.count(h)) continue;
    const std::string& sh = sigma.at(h);
    seen.insert(h);
    seen.insert(sh);
    out.push_back({edge_of(h), h, sh});
  }
  return out;
}

Edge Graph::edge(const std::string& name) const {
  for (const auto& e : edges())
    if (e.name == name) return e;
  throw Error(ErrorKind::InvalidInput, "unknown edge '" + name + "'");
}

std::vector<std::string> Graph::incident(const std::string& v) const {
  std::vector<std::string> out;
  for (const auto& h : half_edges)
    if (s.at(h) == v) out.push_back(h);
  return out;
}

int Graph::arity(const std::string& v) const { return static_cast<int>(incident(v).size()); }

bool Graph::is_leg(const std::string& v, Side side) const {
  const auto& l = legs(side);
  return std::find(l.begin(), l.end(), v) != l.end();
}

bool Graph::has_vertex(const std::string& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

namespace {

ValidationReport check(const Graph& g, bool strict_legs) {
  ValidationReport r;
  auto& p = r.problems;
  std::set<std::string> vs(g.vertices.begin(), g.vertices.end());
  std::set<std::string> hs(g.half_edges.begin(), g.half_edges.end());
  if (vs.size() != g.vertices.size()) p.push_back("duplicate vertex id");
  if (hs.size() != g.half_edges.size()) p.push_back("duplicate half-edge id");

  bool sigma_ok = true;
  for (const auto& h : g.half_edges) {
    auto it = g.sigma.find(h);
    if (it == g.sigma.end()) {
      p.push_back("sigma undefined on half-edge '" + h + "'");
      sigma_ok = false;
      continue;
    }
    if (it->second == h) {
      p.push_back("involution has fixed point '" + h + "'");
      sigma_ok = false;
    } else if (!hs.count(it->second)) {
      p.push_back("sigma sends '" + h + "' to unknown half-edge '" + it->second + "'");
      sigma_ok = false;
    } else if (g.sigma.count(it->second) == 0 || g.sigma.at(it->second) != h) {
      p.push_back("sigma is not an involution at '" + h + "'");
      sigma_ok = false;
    }
  }
  for (const auto& [h, _] : g.sigma)
    if (!hs.count(h)) p.push_back("sigma defined on unknown half-edge '" + h + "'");

  bool s_ok = true;
  for (const auto& h : g.half_edges) {
    auto it = g.s.find(h);
    if (it == g.s.end()) {
      p.push_back("incidence undefined on half-edge '" + h + "'");
      s_ok = false;
    } else if (!vs.count(it->second)) {
      p.push_back("half-edge '" + h + "' attached to unknown vertex '" + it->second + "'");
      s_ok = false;
    }
  }

  for (Side side : {Side::In, Side::Out}) {
    const auto& l = g.legs(side);
    std::set<std::string> seen;
    for (const auto& v : l) {
      if (!vs.count(v)) p.push_back(std::string(side_name(side)) + "-leg '" + v + "' is not a vertex");
      if (!seen.insert(v).second)
        p.push_back("duplicate " + std::string(side_name(side)) + "-leg '" + v + "'");
    }
  }
  if (s_ok && strict_legs) {
    for (const auto& v : g.vertices) {
      bool li = g.is_leg(v, Side::In), lo = g.is_leg(v, Side::Out);
      int a = g.arity(v);
      if ((li || lo) && a > 1) p.push_back("leg vertex '" + v + "' has arity " + std::to_string(a));
      if (li && lo && a != 0) p.push_back("vertex '" + v + "' is in both leg lists but has arity " + std::to_string(a));
    }
  }

  if (sigma_ok) {
    for (const auto& [h, name] : g.edge_name) {
      if (!hs.count(h)) {
        p.push_back("edge '" + name + "' names unknown half-edge '" + h + "'");
        continue;
      }
      auto partner = g.edge_name.find(g.sigma.at(h));
      if (partner == g.edge_name.end() || partner->second != name)
        p.push_back("edge '" + name + "' does not cover both halves of '" + h + "'");
    }
    std::map<std::string, std::string> first_half;
    for (const auto& e : g.edges()) {
      auto [it, fresh] = first_half.emplace(e.name, e.h);
      if (!fresh) p.push_back("edge name '" + e.name + "' used twice");
    }
  }

  if (g.cyclic && s_ok) {
    for (const auto& v : g.vertices) {
      auto inc = g.incident(v);
      auto it = g.cyclic->find(v);
      std::vector<std::string> given = it == g.cyclic->end() ? std::vector<std::string>{} : it->second;
      std::sort(inc.begin(), inc.end());
      std::sort(given.begin(), given.end());
      if (inc != given) p.push_back("cyclic order at '" + v + "' is not a permutation of its half-edges");
    }
    for (const auto& [v, _] : *g.cyclic)
      if (!vs.count(v)) p.push_back("cyclic order given for unknown vertex '" + v + "'");
  }
  return r;
}

void erase_value(std::vector<std::string>& v, const std::string& x) {
  v.erase(std::remove(v.begin(), v.end(), x), v.end());
}

// Rotates a cyclic order so that it starts right after `h`, dropping `h`.
std::vector<std::string> after(const std::vector<std::string>& cyc, const std::string& h) {
  auto it = std::find(cyc.begin(), cyc.end(), h);
  std::vector<std::string> out;
  for (auto j = it + 1; j != cyc.end(); ++j) out.push_back(*j);
  for (auto j = cyc.begin(); j != it; ++j) out.push_back(*j);
  return out;
}

std::string fresh(const std::string& id, const std::set<std::string>& taken) {
  std::string out = id;
  while (taken.count(out)) out += "'";
  return out;
}

// Renames ids of g that clash with ids of `other` by appending primes.
Renaming clash_renaming(const Graph& g, const Graph& other) {
  Renaming r;
  std::set<std::string> taken(other.vertices.begin(), other.vertices.end());
  std::set<std::string> own(g.vertices.begin(), g.vertices.end());
  for (const auto& v : g.vertices) {
    std::set<std::string> t = taken;
    for (const auto& w : own)
      if (w != v) t.insert(w);
    std::string n = taken.count(v) ? fresh(v + "'", t) : v;
    r.vertex[v] = n;
    taken.insert(n);
  }
  taken = std::set<std::string>(other.half_edges.begin(), other.half_edges.end());
  own = std::set<std::string>(g.half_edges.begin(), g.half_edges.end());
  for (const auto& h : g.half_edges) {
    std::set<std::string> t = taken;
    for (const auto& w : own)
      if (w != h) t.insert(w);
    std::string n = taken.count(h) ? fresh(h + "'", t) : h;
    r.half[h] = n;
    taken.insert(n);
  }
  std::set<std::string> other_edges;
  for (const auto& e : other.edges()) other_edges.insert(e.name);
  std::set<std::string> own_edges;
  for (const auto& e : g.edges()) own_edges.insert(e.name);
  for (const auto& e : g.edges()) {
    std::set<std::string> t = other_edges;
    for (const auto& w : own_edges)
      if (w != e.name) t.insert(w);
    r.edge[e.name] = other_edges.count(e.name) ? fresh(e.name + "'", t) : e.name;
    other_edges.insert(r.edge[e.name]);
  }
  return r;
}

Renaming identity_renaming(const Graph& g) {
  Renaming r;
  for (const auto& v : g.vertices) r.vertex[v] = v;
  for (const auto& h : g.half_edges) r.half[h] = h;
  for (const auto& e : g.edges()) r.edge[e.name] = e.name;
  return r;
}

}  // namespace

ValidationReport validate(const Graph& g) { return check(g, true); }
ValidationReport validate_structure(const Graph& g) { return check(g, false); }

Graph apply_renaming(const Graph& g, const Renaming& r) {
  auto rv = [&](const std::string& v) {
    auto it = r.vertex.find(v);
    return it == r.vertex.end() ? v : it->second;
  };
  auto rh = [&](const std::string& h) {
    auto it = r.half.find(h);
    return it == r.half.end() ? h : it->second;
  };
  Graph out;
  for (const auto& v : g.vertices) out.vertices.push_back(rv(v));
  for (const auto& h : g.half_edges) out.half_edges.push_back(rh(h));
  for (const auto& [h, k] : g.sigma) out.sigma[rh(h)] = rh(k);
  for (const auto& [h, v] : g.s) out.s[rh(h)] = rv(v);
  for (const auto& v : g.in) out.in.push_back(rv(v));
  for (const auto& v : g.out) out.out.push_back(rv(v));
  for (const auto& e : g.edges()) {
    auto it = r.edge.find(e.name);
    std::string name = it == r.edge.end() ? e.name : it->second;
    out.edge_name[rh(e.h)] = name;
    out.edge_name[rh(e.sh)] = name;
  }
  if (g.cyclic) {
    out.cyclic.emplace();
    for (const auto& [v, cyc] : *g.cyclic) {
      auto& dst = (*out.cyclic)[rv(v)];
      for (const auto& h : cyc) dst.push_back(rh(h));
    }
  }
  return out;
}

Graph with_suffix(const Graph& g, const std::string& suffix) {
  Renaming r;
  for (const auto& v : g.vertices) r.vertex[v] = v + suffix;
  for (const auto& h : g.half_edges) r.half[h] = h + suffix;
  for (const auto& e : g.edges()) r.edge[e.name] = e.name + suffix;
  return apply_renaming(g, r);
}

Graph collapse_half(const Graph& g, const std::string& h0, bool allow_external) {
  if (!g.sigma.count(h0)) throw Error(ErrorKind::InvalidInput, "unknown half-edge '" + h0 + "'");
  const std::string sh0 = g.sigma.at(h0);
  const std::string sv = g.s.at(h0);
  const std::string tv = g.s.at(sh0);
  if (sv == tv) throw Error(ErrorKind::TadpoleCollapse, "edge '" + g.edge_of(h0) + "' is a tadpole");
  for (Side side : {Side::In, Side::Out})
    if (!allow_external && g.is_leg(sv, side) && g.is_leg(tv, side))
      throw Error(ErrorKind::ExternalCollapse, "both ends of edge '" + g.edge_of(h0) + "' are " +
                                                   side_name(side) + "-legs");
  Graph out = g;
  // Named edges keep their names; unnamed ones are pinned so they survive.
  for (const auto& e : g.edges()) {
    out.edge_name[e.h] = e.name;
    out.edge_name[e.sh] = e.name;
  }
  erase_value(out.half_edges, h0);
  erase_value(out.half_edges, sh0);
  out.sigma.erase(h0);
  out.sigma.erase(sh0);
  out.s.erase(h0);
  out.s.erase(sh0);
  out.edge_name.erase(h0);
  out.edge_name.erase(sh0);
  for (auto& [h, v] : out.s)
    if (v == tv) v = sv;
  erase_value(out.vertices, tv);
  for (auto* legs : {&out.in, &out.out}) {
    auto it = std::find(legs->begin(), legs->end(), tv);
    if (it != legs->end()) *it = sv;
  }
  if (out.cyclic) {
    auto a = after(g.cyclic->at(sv), h0);
    auto b = after(g.cyclic->at(tv), sh0);
    a.insert(a.end(), b.begin(), b.end());
    (*out.cyclic)[sv] = a;
    out.cyclic->erase(tv);
  }
  return out;
}

Graph collapse_edge(const Graph& g, const std::string& edge) { return collapse_half(g, g.edge(edge).h); }

GlueResult glue(const Graph& g, const Graph& g2) {
  if (g.out.size() != g2.in.size())
    throw Error(ErrorKind::GluabilityFailure, "cannot glue " + std::to_string(g.out.size()) +
                                                  " out-legs to " + std::to_string(g2.in.size()) +
                                                  " in-legs");
  GlueResult res;
  res.first = clash_renaming(g, g2);
  res.second = identity_renaming(g2);
  std::map<std::string, std::string> merge;  // g2 in-leg -> renamed g out-leg
  for (std::size_t i = 0; i < g.out.size(); ++i) merge[g2.in[i]] = res.first.vertex.at(g.out[i]);
  for (const auto& [w, v] : merge) res.second.vertex[w] = v;

  Graph a = apply_renaming(g, res.first);
  Graph b = apply_renaming(g2, res.second);
  Graph out;
  for (const auto& v : b.vertices)
    if (std::find(out.vertices.begin(), out.vertices.end(), v) == out.vertices.end())
      out.vertices.push_back(v);
  for (const auto& v : a.vertices)
    if (std::find(out.vertices.begin(), out.vertices.end(), v) == out.vertices.end())
      out.vertices.push_back(v);
  out.half_edges = b.half_edges;
  out.half_edges.insert(out.half_edges.end(), a.half_edges.begin(), a.half_edges.end());
  out.sigma = b.sigma;
  out.sigma.insert(a.sigma.begin(), a.sigma.end());
  out.s = b.s;
  out.s.insert(a.s.begin(), a.s.end());
  out.edge_name = b.edge_name;
  out.edge_name.insert(a.edge_name.begin(), a.edge_name.end());
  out.in = a.in;
  out.out = b.out;
  if (a.cyclic && b.cyclic) {
    out.cyclic = *b.cyclic;
    for (const auto& [v, cyc] : *a.cyclic) {
      auto& dst = (*out.cyclic)[v];
      std::vector<std::string> joined = cyc;
      joined.insert(joined.end(), dst.begin(), dst.end());
      dst = joined;
    }
  }
  res.graph = std::move(out);
  return res;
}

GlueResult disjoint_union(const Graph& g, const Graph& g2) {
  GlueResult res;
  res.first = clash_renaming(g, g2);
  res.second = identity_renaming(g2);
  Graph a = apply_renaming(g, res.first);
  const Graph& b = g2;
  Graph out;
  out.vertices = b.vertices;
  out.vertices.insert(out.vertices.end(), a.vertices.begin(), a.vertices.end());
  out.half_edges = b.half_edges;
  out.half_edges.insert(out.half_edges.end(), a.half_edges.begin(), a.half_edges.end());
  out.sigma = b.sigma;
  out.sigma.insert(a.sigma.begin(), a.sigma.end());
  out.s = b.s;
  out.s.insert(a.s.begin(), a.s.end());
  out.edge_name = b.edge_name;
  out.edge_name.insert(a.edge_name.begin(), a.edge_name.end());
  out.in = a.in;
  out.in.insert(out.in.end(), b.in.begin(), b.in.end());
  out.out = a.out;
  out.out.insert(out.out.end(), b.out.begin(), b.out.end());
  if (a.cyclic && b.cyclic) {
    out.cyclic = *b.cyclic;
    out.cyclic->insert(a.cyclic->begin(), a.cyclic->end());
  }
  res.graph = std::move(out);
  return res;
}

int euler_char_rel(const Graph& g, Side side) {
  int internal = 0;
  for (const auto& v : g.vertices)
    if (!g.is_leg(v, side)) ++internal;
  return internal - static_cast<int>(g.half_edges.size() / 2);
}

bool has_tadpole(const Graph& g) {
  for (const auto& h : g.half_edges)
    if (g.s.at(h) == g.s.at(g.sigma.at(h))) return true;
  return false;
}

std::vector<std::vector<std::string>> components(const Graph& g) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) idx[g.vertices[i]] = static_cast<int>(i);
  std::vector<int> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& h : g.half_edges) {
    int a = find(idx.at(g.s.at(h))), b = find(idx.at(g.s.at(g.sigma.at(h))));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<std::string>> blocks;
  std::vector<int> order;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (!blocks.count(r)) order.push_back(r);
    blocks[r].push_back(g.vertices[i]);
  }
  std::vector<std::vector<std::string>> out;
  for (int r : order) out.push_back(blocks[r]);
  return out;
}

bool is_forest(const Graph& g) {
  int e = static_cast<int>(g.half_edges.size() / 2);
  return e == static_cast<int>(g.vertices.size()) - static_cast<int>(components(g).size());
}

namespace {

std::string cyclic_next(const Graph& g, const std::string& h) {
  const auto& cyc = g.cyclic->at(g.s.at(h));
  auto it = std::find(cyc.begin(), cyc.end(), h);
  ++it;
  return it == cyc.end() ? cyc.front() : *it;
}

void require_fat(const Graph& g) {
  if (!g.is_fat()) throw Error(ErrorKind::InvalidInput, "graph has no cyclic orders");
}

}  // namespace

std::vector<std::vector<std::string>> boundary_cycles(const Graph& fg) {
  require_fat(fg);
  std::vector<std::vector<std::string>> out;
  std::set<std::string> seen;
  for (const auto& v : fg.vertices)
    if (fg.arity(v) == 0) out.push_back({});
  for (const auto& start : fg.half_edges) {
    if (seen.count(start)) continue;
    std::vector<std::string> walk;
    std::string h = start;
    do {
      walk.push_back(h);
      seen.insert(h);
      h = cyclic_next(fg, fg.sigma.at(h));
    } while (h != start);
    out.push_back(walk);
  }
  return out;
}

int component_genus(const Graph& fg, const std::vector<std::string>& component) {
  std::set<std::string> vs(component.begin(), component.end());
  int v = static_cast<int>(component.size());
  int e = 0;
  for (const auto& h : fg.half_edges)
    if (vs.count(fg.s.at(h))) ++e;
  e /= 2;
  int b = 0;
  for (const auto& x : component)
    if (fg.arity(x) == 0) ++b;
  for (const auto& walk : boundary_cycles(fg))
    if (!walk.empty() && vs.count(fg.s.at(walk.front()))) ++b;
  // v - e = 2 - 2g - b
  return (2 - b - v + e) / 2;
}

int genus(const Graph& fg) {
  int total = 0;
  for (const auto& c : components(fg)) total += component_genus(fg, c);
  return total;
}

namespace {

std::string leg_label(const Graph& g, const std::string& v) {
  std::string out;
  for (std::size_t i = 0; i < g.in.size(); ++i)
    if (g.in[i] == v) out += "i" + std::to_string(i);
  for (std::size_t i = 0; i < g.out.size(); ++i)
    if (g.out[i] == v) out += "o" + std::to_string(i);
  return out;
}

std::vector<std::string> min_rotation(const std::vector<std::string>& xs) {
  std::vector<std::string> best = xs;
  for (std::size_t r = 1; r < xs.size(); ++r) {
    std::vector<std::string> rot(xs.begin() + r, xs.end());
    rot.insert(rot.end(), xs.begin(), xs.begin() + r);
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace

std::string surface_signature(const Graph& fg) {
  require_fat(fg);
  auto walks = boundary_cycles(fg);
  std::vector<std::string> parts;
  for (const auto& comp : components(fg)) {
    std::set<std::string> vs(comp.begin(), comp.end());
    std::vector<std::string> circles;
    auto add = [&](std::vector<std::string> legs) {
      std::string c = "[";
      for (const auto& l : min_rotation(legs)) c += l + " ";
      circles.push_back(c + "]");
    };
    for (const auto& v : comp)
      if (fg.arity(v) == 0) {
        // a vertex on both sides is a strand; its circle meets both legs
        std::vector<std::string> legs;
        for (std::size_t i = 0; i < fg.in.size(); ++i)
          if (fg.in[i] == v) legs.push_back("i" + std::to_string(i));
        for (std::size_t i = 0; i < fg.out.size(); ++i)
          if (fg.out[i] == v) legs.push_back("o" + std::to_string(i));
        add(legs);
      }
    for (const auto& walk : walks) {
      if (walk.empty() || !vs.count(fg.s.at(walk.front()))) continue;
      std::vector<std::string> legs;
      for (const auto& h : walk) {
        std::string l = leg_label(fg, fg.s.at(h));
        if (!l.empty()) legs.push_back(l);
      }
      add(legs);
    }
    std::sort(circles.begin(), circles.end());
    std::string p = "g" + std::to_string(component_genus(fg, comp)) + ":";
    for (const auto& c : circles) p += c;
    parts.push_back(p);
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

bool is_planar_ordered(const Graph& fg, const std::vector<std::string>& in_order,
                       const std::vector<std::string>& out_order) {
  require_fat(fg);
  // The boundary of the strip, read once around: in-legs left to right,
  // then out-legs right to left.
  std::vector<std::string> circle = in_order;
  circle.insert(circle.end(), out_order.rbegin(), out_order.rend());
  auto comps = components(fg);
  std::map<std::string, int> comp_of;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (const auto& v : comps[i]) comp_of[v] = static_cast<int>(i);

  std::vector<std::vector<int>> positions(comps.size());
  for (std::size_t p = 0; p < circle.size(); ++p) {
    if (!comp_of.count(circle[p])) return false;
    positions[comp_of[circle[p]]].push_back(static_cast<int>(p));
  }
  // Components must not cross along the boundary.
  for (std::size_t a = 0; a < comps.size(); ++a)
    for (std::size_t b = 0; b < comps.size(); ++b) {
      if (a == b) continue;
      for (int a1 : positions[a])
        for (int a2 : positions[a])
          for (int b1 : positions[b])
            for (int b2 : positions[b])
              if (a1 < b1 && b1 < a2 && a2 < b2) return false;
    }

  auto walks = boundary_cycles(fg);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (component_genus(fg, comps[c]) != 0) return false;
    std::vector<std::string> expected;
    for (int p : positions[c]) expected.push_back(circle[p]);
    if (expected.size() <= 1) continue;
    std::set<std::string> vs(comps[c].begin(), comps[c].end());
    // All legs of the component must lie on one boundary walk, in the same cyclic order.
    std::vector<std::string> found;
    for (const auto& walk : walks) {
      std::vector<std::string> legs;
      for (const auto& h : walk) {
        const std::string& v = fg.s.at(fg.sigma.at(h));
        if (!vs.count(v)) break;
        if (fg.arity(v) == 1 && (fg.is_leg(v, Side::In) || fg.is_leg(v, Side::Out))) legs.push_back(v);
      }
      if (legs.empty()) continue;
      if (!found.empty()) return false;
      found = legs;
    }
    if (found.empty()) {
      // A single leg vertex of arity zero sitting in both lists.
      std::set<std::string> distinct(expected.begin(), expected.end());
      if (distinct.size() == 1) continue;
      return false;
    }
    // Vertices in both lists occur twice in `expected`; they have arity 0 so
    // they never appear in a walk, and then the component is that vertex alone.
    if (found.size() != expected.size()) return false;
    bool match = false;
    for (std::size_t r = 0; r < found.size() && !match; ++r) {
      std::vector<std::string> rot(found.begin() + r, found.end());
      rot.insert(rot.end(), found.begin(), found.begin() + r);
      match = rot == expected;
    }
    if (!match) return false;
  }
  return true;
}

Elementary elementary_from_name(const std::string& name) {
  std::string n;
  for (char c : name) n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (n == "multi" || n == "mu") return Elementary::Multi;
  if (n == "unit" || n == "eta") return Elementary::Unit;
  if (n == "comulti" || n == "nu") return Elementary::Comulti;
  if (n == "counit" || n == "eps") return Elementary::Counit;
  if (n == "id") return Elementary::Id;
  if (n == "twist" || n == "tau") return Elementary::Twist;
  throw Error(ErrorKind::UnknownName, "unknown elementary graph '" + name + "'");
}

std::string elementary_name(Elementary e) {
  switch (e) {
    case Elementary::Multi: return "multi";
    case Elementary::Unit: return "unit";
    case Elementary::Comulti: return "comulti";
    case Elementary::Counit: return "counit";
    case Elementary::Id: return "id";
    case Elementary::Twist: return "twist";
  }
  return "";
}

namespace {

// Star with center v and legs v0..v{n-1}; edge e_i = {h_i, σh_i} with σh_i at v.
Graph star(int n, const std::vector<std::string>& cyc) {
  Graph g;
  g.vertices.push_back("v");
  g.cyclic.emplace();
  for (int i = 0; i < n; ++i) {
    std::string k = std::to_string(i);
    g.vertices.push_back("v" + k);
    g.half_edges.push_back("h" + k);
    g.half_edges.push_back("σh" + k);
    g.sigma["h" + k] = "σh" + k;
    g.sigma["σh" + k] = "h" + k;
    g.s["h" + k] = "v" + k;
    g.s["σh" + k] = "v";
    g.edge_name["h" + k] = "e" + k;
    g.edge_name["σh" + k] = "e" + k;
    (*g.cyclic)["v" + k] = {"h" + k};
  }
  (*g.cyclic)["v"] = cyc;
  return g;
}

}  // namespace

Graph elementary(Elementary e) {
  Graph g;
  switch (e) {
    case Elementary::Multi:
      g = star(3, {"σh1", "σh2", "σh0"});
      g.in = {"v1", "v2"};
      g.out = {"v0"};
      break;
    case Elementary::Comulti:
      g = star(3, {"σh0", "σh2", "σh1"});
      g.in = {"v0"};
      g.out = {"v1", "v2"};
      break;
    case Elementary::Unit:
      g = star(1, {"σh0"});
      g.out = {"v0"};
      break;
    case Elementary::Counit:
      g = star(1, {"σh0"});
      g.in = {"v0"};
      break;
    case Elementary::Id:
      g.vertices = {"v0"};
      g.in = {"v0"};
      g.out = {"v0"};
      g.cyclic.emplace();
      (*g.cyclic)["v0"] = {};
      break;
    case Elementary::Twist:
      g.vertices = {"v1", "v2"};
      g.in = {"v1", "v2"};
      g.out = {"v2", "v1"};
      g.cyclic.emplace();
      (*g.cyclic)["v1"] = {};
      (*g.cyclic)["v2"] = {};
      break;
  }
  return g;
}

bool is_isomorphism(const Graph& g, const Graph& g2, const GraphIso& iso, bool setwise_legs) {
  if (g.vertices.size() != g2.vertices.size() || g.half_edges.size() != g2.half_edges.size())
    return false;
  std::set<std::string> vimg, himg;
  for (const auto& v : g.vertices) {
    auto it = iso.vertex.find(v);
    if (it == iso.vertex.end() || !g2.has_vertex(it->second)) return false;
    vimg.insert(it->second);
  }
  for (const auto& h : g.half_edges) {
    auto it = iso.half.find(h);
    if (it == iso.half.end() || !g2.sigma.count(it->second)) return false;
    himg.insert(it->second);
  }
  if (vimg.size() != g.vertices.size() || himg.size() != g.half_edges.size()) return false;
  for (const auto& h : g.half_edges) {
    if (iso.half.at(g.sigma.at(h)) != g2.sigma.at(iso.half.at(h))) return false;
    if (iso.vertex.at(g.s.at(h)) != g2.s.at(iso.half.at(h))) return false;
  }
  for (Side side : {Side::In, Side::Out}) {
    std::vector<std::string> mapped;
    for (const auto& v : g.legs(side)) mapped.push_back(iso.vertex.at(v));
    std::vector<std::string> target = g2.legs(side);
    if (setwise_legs) {
      std::sort(mapped.begin(), mapped.end());
      std::sort(target.begin(), target.end());
    }
    if (mapped != target) return false;
  }
  if (g.cyclic && g2.cyclic) {
    for (const auto& v : g.vertices) {
      std::vector<std::string> mapped;
      for (const auto& h : g.cyclic->at(v)) mapped.push_back(iso.half.at(h));
      const auto& target = g2.cyclic->at(iso.vertex.at(v));
      if (mapped.size() != target.size()) return false;
      if (mapped.empty()) continue;
      auto it = std::find(target.begin(), target.end(), mapped.front());
      if (it == target.end()) return false;
      std::size_t off = static_cast<std::size_t>(it - target.begin());
      for (std::size_t i = 0; i < mapped.size(); ++i)
        if (mapped[i] != target[(off + i) % target.size()]) return false;
    }
  }
  return true;
}

}  // namespace frobgraph
