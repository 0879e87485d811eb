#include "frobgraph/orient.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace frobgraph {

namespace {

// Parity of the permutation taking `from` to `to`; both list the same ids.
int permutation_sign(const std::vector<std::string>& from, const std::vector<std::string>& to) {
  std::map<std::string, int> pos;
  for (std::size_t i = 0; i < to.size(); ++i) pos[to[i]] = static_cast<int>(i);
  std::vector<int> p;
  for (const auto& x : from) p.push_back(pos.at(x));
  // cycle count parity
  std::vector<bool> seen(p.size(), false);
  int transpositions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

bool same_letters(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

bool any_leg(const Graph& g, const std::string& v) { return g.is_leg(v, Side::In) || g.is_leg(v, Side::Out); }

std::vector<std::string> internal_vertices(const Graph& g, Side side) {
  std::vector<std::string> out;
  for (const auto& v : g.vertices)
    if (!g.is_leg(v, side)) out.push_back(v);
  return out;
}

std::vector<std::string> rename_all(const std::vector<std::string>& xs, const std::map<std::string, std::string>& r) {
  std::vector<std::string> out;
  for (const auto& x : xs) {
    auto it = r.find(x);
    out.push_back(it == r.end() ? x : it->second);
  }
  return out;
}

// Koszul sign of reordering letters of the given degrees; target[k] is the
// source index of the letter placed k-th.
int shuffle_sign(const std::vector<int>& degrees, const std::vector<int>& target) {
  std::vector<int> pos(target.size());
  for (std::size_t k = 0; k < target.size(); ++k) pos[target[k]] = static_cast<int>(k);
  long long e = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (std::size_t j = i + 1; j < degrees.size(); ++j)
      if (pos[i] > pos[j]) e += static_cast<long long>(degrees[i]) * degrees[j];
  return sign_of_parity(e);
}

OrientationWord concat(const OrientationWord& first, const OrientationWord& second, const Renaming& rf,
                       const Renaming& rs) {
  if (first.side != second.side || first.inverted != second.inverted)
    throw Error(ErrorKind::GluabilityFailure, "words of different sides or inversion cannot be combined");
  OrientationWord w;
  w.side = first.side;
  w.inverted = first.inverted;
  w.edges = rename_all(first.edges, rf.edge);
  auto e2 = rename_all(second.edges, rs.edge);
  w.edges.insert(w.edges.end(), e2.begin(), e2.end());
  w.halves = rename_all(first.halves, rf.half);
  auto h2 = rename_all(second.halves, rs.half);
  w.halves.insert(w.halves.end(), h2.begin(), h2.end());
  w.vertices = rename_all(first.vertices, rf.vertex);
  auto v2 = rename_all(second.vertices, rs.vertex);
  w.vertices.insert(w.vertices.end(), v2.begin(), v2.end());
  long long m = static_cast<long long>(first.edges.size());
  long long n = static_cast<long long>(first.vertices.size());
  long long k = static_cast<long long>(second.edges.size());
  long long e = (m + n) * k;
  if (first.inverted) e += static_cast<long long>(first.degree()) * second.degree();
  w.sign = first.sign * second.sign * sign_of_parity(e);
  return w;
}

}  // namespace

std::string to_string(const OrientationWord& w) {
  auto block = [](const std::vector<std::string>& xs) { return xs.empty() ? std::string("1") : join(xs, "∧"); };
  std::string body = "(" + block(w.edges) + ")^{-1} ⊗ " + block(w.halves) + " ⊗ " + block(w.vertices);
  if (w.inverted) body = "[" + body + "]^{-1}";
  return std::string(w.sign < 0 ? "-" : "") + body;
}

void check_word(const Graph& g, const OrientationWord& w) {
  std::vector<std::string> edges;
  for (const auto& e : g.edges()) edges.push_back(e.name);
  if (!same_letters(edges, w.edges)) throw Error(ErrorKind::InvalidInput, "edge word does not list every edge once");
  if (!same_letters(g.half_edges, w.halves))
    throw Error(ErrorKind::InvalidInput, "half-edge word does not list every half-edge once");
  if (!same_letters(internal_vertices(g, w.side), w.vertices))
    throw Error(ErrorKind::InvalidInput, "vertex word does not list V \\ L_" + std::string(side_name(w.side)));
  if (w.sign != 1 && w.sign != -1) throw Error(ErrorKind::InvalidInput, "word sign must be +1 or -1");
}

int reorder_sign(const OrientationWord& w, const OrientationWord& target) {
  if (w.side != target.side || w.inverted != target.inverted)
    throw Error(ErrorKind::InvalidInput, "words live on different lines");
  if (!same_letters(w.edges, target.edges) || !same_letters(w.halves, target.halves) ||
      !same_letters(w.vertices, target.vertices))
    throw Error(ErrorKind::InvalidInput, "not a blockwise permutation");
  return w.sign * target.sign * permutation_sign(w.edges, target.edges) *
         permutation_sign(w.halves, target.halves) * permutation_sign(w.vertices, target.vertices);
}

OrientationWord canonical_word(const Graph& g, Side side) {
  OrientationWord w;
  w.side = side;
  for (const auto& e : g.edges()) {
    w.edges.push_back(e.name);
    bool swap = !any_leg(g, g.s.at(e.h)) && any_leg(g, g.s.at(e.sh));
    w.halves.push_back(swap ? e.sh : e.h);
    w.halves.push_back(swap ? e.h : e.sh);
  }
  w.vertices = internal_vertices(g, side);
  std::sort(w.vertices.begin(), w.vertices.end());
  return w;
}

OrientationWord collapse_word(const Graph& g, const OrientationWord& w, const std::string& h0) {
  if (!g.sigma.count(h0)) throw Error(ErrorKind::InvalidInput, "unknown half-edge '" + h0 + "'");
  const std::string sh0 = g.sigma.at(h0);
  const std::string sv = g.s.at(h0), tv = g.s.at(sh0);
  if (sv == tv) throw Error(ErrorKind::TadpoleCollapse, "edge '" + g.edge_of(h0) + "' is a tadpole");
  std::string a = h0, b = sh0, gone = tv;
  if (g.is_leg(tv, w.side)) {
    if (g.is_leg(sv, w.side))
      throw Error(ErrorKind::SideViolation, "both ends of '" + g.edge_of(h0) + "' lie in L_" + side_name(w.side));
    a = sh0;
    b = h0;
    gone = sv;
  }
  const std::string e = g.edge_of(h0);
  OrientationWord out = w;
  int sign = w.sign;

  auto ei = std::find(out.edges.begin(), out.edges.end(), e);
  if (ei == out.edges.end()) throw Error(ErrorKind::InvalidInput, "edge '" + e + "' missing from word");
  if ((ei - out.edges.begin()) % 2) sign = -sign;
  out.edges.erase(ei);

  std::vector<std::string> moved{a, b};
  for (const auto& h : w.halves)
    if (h != a && h != b) moved.push_back(h);
  sign *= permutation_sign(w.halves, moved);
  out.halves.assign(moved.begin() + 2, moved.end());

  auto vi = std::find(out.vertices.begin(), out.vertices.end(), gone);
  if (vi == out.vertices.end()) throw Error(ErrorKind::InvalidInput, "vertex '" + gone + "' missing from word");
  if ((vi - out.vertices.begin()) % 2) sign = -sign;
  out.vertices.erase(vi);

  out.sign = sign;
  return out;
}

OrientationWord collapse_action(const Graph& g, const OrientationWord& w, const std::string& h0) {
  if (!g.sigma.count(h0)) throw Error(ErrorKind::InvalidInput, "unknown half-edge '" + h0 + "'");
  if (g.is_leg(g.s.at(g.sigma.at(h0)), w.side))
    throw Error(ErrorKind::SideViolation, "s(σ" + h0 + ") lies in L_" + std::string(side_name(w.side)));
  return collapse_word(g, w, h0);
}

OrientationWord compose_words(const OrientationWord& w2, const OrientationWord& w1, const GlueResult& glued) {
  return concat(w2, w1, glued.second, glued.first);
}

OrientationWord tensor_words(const OrientationWord& w1, const OrientationWord& w2, const GlueResult& joined) {
  return concat(w1, w2, joined.first, joined.second);
}

OrientationWord transport(const Graph& g, const Graph& g2, const OrientationWord& w, const GraphIso& iso) {
  OrientationWord out = w;
  out.edges.clear();
  for (const auto& e : w.edges) out.edges.push_back(g2.edge_of(iso.half.at(g.edge(e).h)));
  out.halves = rename_all(w.halves, iso.half);
  out.vertices = rename_all(w.vertices, iso.vertex);
  return out;
}

int automorphism_action(const Graph& g, const OrientationWord& w, const GraphIso& iso) {
  return reorder_sign(transport(g, g, w, iso), w);
}

bool is_acyclic_relative(const Graph& g, Side side) {
  for (const auto& comp : components(g)) {
    int legs = 0, edges = 0;
    std::set<std::string> vs(comp.begin(), comp.end());
    for (const auto& v : comp)
      if (g.is_leg(v, side)) ++legs;
    for (const auto& h : g.half_edges)
      if (vs.count(g.s.at(h))) ++edges;
    if (legs != 1 || edges / 2 != static_cast<int>(comp.size()) - 1) return false;
  }
  return true;
}

OrientationWord trivial_word(const Graph& g, Side side, unsigned seed) {
  if (!is_acyclic_relative(g, side))
    throw Error(ErrorKind::InvalidInput, "det(G, ∂_" + std::string(side_name(side)) + ") has no trivialization");
  OrientationWord w = canonical_word(g, side);
  std::mt19937 rng(seed);
  Graph cur = g;
  OrientationWord cw = w;
  while (!cur.half_edges.empty()) {
    auto edges = cur.edges();
    const Edge& e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    std::string h0 = std::uniform_int_distribution<int>(0, 1)(rng) ? e.h : e.sh;
    cw = collapse_word(cur, cw, h0);
    cur = collapse_half(cur, h0, true);
  }
  w.sign = cw.sign;
  return w;
}

int CdOrientation::degree() const {
  int total = 0;
  for (const auto& w : in_words) total += w.degree();
  for (const auto& w : out_words) total += w.degree();
  return total;
}

long long CdOrientation::total_sign() const {
  long long s = coefficient;
  for (const auto& w : in_words) s *= w.sign;
  for (const auto& w : out_words) s *= w.sign;
  return s;
}

std::string to_string(const CdOrientation& o) {
  std::ostringstream os;
  os << "c=" << o.c << " d=" << o.d << " coefficient=" << o.coefficient << "\n";
  for (const auto& w : o.in_words) os << "  in:  " << to_string(w) << "\n";
  for (const auto& w : o.out_words) os << "  out: " << to_string(w) << "\n";
  return os.str();
}

void check_orientation(const CdOrientation& o) {
  if (static_cast<int>(o.in_words.size()) != std::abs(o.c) || static_cast<int>(o.out_words.size()) != std::abs(o.d))
    throw Error(ErrorKind::InvalidInput, "word count does not match (c, d)");
  for (const auto& w : o.in_words) {
    if (w.side != Side::In || w.inverted != (o.c < 0)) throw Error(ErrorKind::InvalidInput, "bad in-word");
    check_word(o.graph, w);
  }
  for (const auto& w : o.out_words) {
    if (w.side != Side::Out || w.inverted != (o.d < 0)) throw Error(ErrorKind::InvalidInput, "bad out-word");
    check_word(o.graph, w);
  }
}

OrientationWord generator_word(Elementary e, Side side) {
  Graph g = elementary(e);
  auto star_word = [&](int n) {
    OrientationWord w;
    w.side = side;
    for (int i = n - 1; i >= 0; --i) w.edges.push_back("e" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
      w.halves.push_back("h" + std::to_string(i));
      w.halves.push_back("σh" + std::to_string(i));
    }
    w.vertices = {"v", "v0"};
    return w;
  };
  switch (e) {
    case Elementary::Multi:
      return side == Side::In ? star_word(3) : trivial_word(g, side);
    case Elementary::Unit:
      return side == Side::In ? star_word(1) : trivial_word(g, side);
    case Elementary::Comulti:
      return side == Side::Out ? star_word(3) : trivial_word(g, side);
    case Elementary::Counit:
      return side == Side::Out ? star_word(1) : trivial_word(g, side);
    case Elementary::Id:
    case Elementary::Twist:
      return canonical_word(g, side);
  }
  return {};
}

CdOrientation cd_from_words(const Graph& g, int c, int d, const OrientationWord& in, const OrientationWord& out) {
  CdOrientation o;
  o.graph = g;
  o.c = c;
  o.d = d;
  OrientationWord wi = in, wo = out;
  wi.inverted = c < 0;
  wo.inverted = d < 0;
  o.in_words.assign(std::abs(c), wi);
  o.out_words.assign(std::abs(d), wo);
  return o;
}

CdOrientation generator_orientation(Elementary e, int c, int d) {
  return cd_from_words(elementary(e), c, d, generator_word(e, Side::In), generator_word(e, Side::Out));
}

namespace {

std::vector<OrientationWord> all_words(const CdOrientation& o) {
  std::vector<OrientationWord> ws = o.in_words;
  ws.insert(ws.end(), o.out_words.begin(), o.out_words.end());
  return ws;
}

// Pairs the words of `first` and `second` blockwise and returns the Koszul
// sign of the riffle (in1 out1 in2 out2) -> (in1_1 in2_1 ... out1_1 out2_1 ...).
int riffle_sign(const CdOrientation& first, const CdOrientation& second) {
  auto a = all_words(first), b = all_words(second);
  std::vector<int> degrees;
  for (const auto& w : a) degrees.push_back(w.degree());
  for (const auto& w : b) degrees.push_back(w.degree());
  int n = static_cast<int>(a.size());
  std::vector<int> target;
  for (int i = 0; i < n; ++i) {
    target.push_back(i);
    target.push_back(n + i);
  }
  return shuffle_sign(degrees, target);
}

void require_same_twist(const CdOrientation& a, const CdOrientation& b) {
  if (a.c != b.c || a.d != b.d)
    throw Error(ErrorKind::ParameterMismatch, "orientations with different (c, d) cannot be combined");
}

}  // namespace

CdOrientation cd_compose(const CdOrientation& o2, const CdOrientation& o1) {
  require_same_twist(o1, o2);
  GlueResult glued = glue(o1.graph, o2.graph);
  CdOrientation o;
  o.graph = glued.graph;
  o.c = o1.c;
  o.d = o1.d;
  o.coefficient = o1.coefficient * o2.coefficient * riffle_sign(o2, o1);
  for (std::size_t i = 0; i < o1.in_words.size(); ++i)
    o.in_words.push_back(compose_words(o2.in_words[i], o1.in_words[i], glued));
  for (std::size_t i = 0; i < o1.out_words.size(); ++i)
    o.out_words.push_back(compose_words(o2.out_words[i], o1.out_words[i], glued));
  return o;
}

CdOrientation cd_tensor(const CdOrientation& o1, const CdOrientation& o2) {
  require_same_twist(o1, o2);
  GlueResult joined = disjoint_union(o1.graph, o2.graph);
  CdOrientation o;
  o.graph = joined.graph;
  o.c = o1.c;
  o.d = o1.d;
  o.coefficient = o1.coefficient * o2.coefficient * riffle_sign(o1, o2);
  for (std::size_t i = 0; i < o1.in_words.size(); ++i)
    o.in_words.push_back(tensor_words(o1.in_words[i], o2.in_words[i], joined));
  for (std::size_t i = 0; i < o1.out_words.size(); ++i)
    o.out_words.push_back(tensor_words(o1.out_words[i], o2.out_words[i], joined));
  return o;
}

CdOrientation cd_collapse(const CdOrientation& o, const std::string& h0) {
  CdOrientation out = o;
  out.graph = collapse_half(o.graph, h0, true);
  for (auto& w : out.in_words) w = collapse_word(o.graph, w, h0);
  for (auto& w : out.out_words) w = collapse_word(o.graph, w, h0);
  return out;
}

int automorphism_action(const CdOrientation& o, const GraphIso& iso) {
  int r = 1;
  for (const auto& w : all_words(o)) r *= automorphism_action(o.graph, w, iso);
  return r;
}

CdOrientation scaled(CdOrientation o, long long r) {
  o.coefficient *= r;
  return o;
}

CdOrientation reduce(const CdOrientation& o) {
  CdOrientation cur = o;
  auto step = [&]() -> bool {
    const Graph& g = cur.graph;
    for (const auto& e : g.edges()) {
      const auto& a = g.s.at(e.h);
      const auto& b = g.s.at(e.sh);
      if (a != b && !any_leg(g, a) && !any_leg(g, b)) {
        cur = cd_collapse(cur, e.h);
        return true;
      }
    }
    // Hubs without loops and at most two legs fold into a leg.
    for (const auto& v : g.vertices) {
      if (any_leg(g, v)) continue;
      auto inc = g.incident(v);
      if (inc.empty() || inc.size() > 2) continue;
      bool loops = false;
      for (const auto& h : inc)
        if (g.s.at(g.sigma.at(h)) == v) loops = true;
      if (loops) continue;
      cur = cd_collapse(cur, g.sigma.at(inc.front()));
      return true;
    }
    // in-out strands become identity strands
    for (const auto& e : g.edges()) {
      const auto& a = g.s.at(e.h);
      const auto& b = g.s.at(e.sh);
      bool same_list = (g.is_leg(a, Side::In) && g.is_leg(b, Side::In)) ||
                       (g.is_leg(a, Side::Out) && g.is_leg(b, Side::Out));
      if (a != b && any_leg(g, a) && any_leg(g, b) && !same_list) {
        cur = cd_collapse(cur, g.is_leg(a, Side::In) ? e.h : e.sh);
        return true;
      }
    }
    return false;
  };
  while (step()) {
  }
  return cur;
}

namespace {

struct IsoBuilder {
  const Graph& a;
  const Graph& b;
  GraphIso iso;
  bool ok = true;

  void map_vertex(const std::string& x, const std::string& y) {
    auto it = iso.vertex.find(x);
    if (it != iso.vertex.end() && it->second != y) ok = false;
    iso.vertex[x] = y;
  }
  void map_half(const std::string& x, const std::string& y) {
    auto it = iso.half.find(x);
    if (it != iso.half.end() && it->second != y) ok = false;
    iso.half[x] = y;
  }
  std::vector<std::string> loops_at(const Graph& g, const std::string& v) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& h : g.incident(v)) {
      if (seen.count(h) || g.s.at(g.sigma.at(h)) != v) continue;
      seen.insert(h);
      seen.insert(g.sigma.at(h));
      out.push_back(h);
    }
    return out;
  }
  void map_loops(const std::string& x, const std::string& y) {
    auto la = loops_at(a, x), lb = loops_at(b, y);
    if (la.size() != lb.size()) {
      ok = false;
      return;
    }
    for (std::size_t i = 0; i < la.size(); ++i) {
      map_half(la[i], lb[i]);
      map_half(a.sigma.at(la[i]), b.sigma.at(lb[i]));
    }
  }
};

bool has_legs(const Graph& g, const std::vector<std::string>& comp) {
  for (const auto& v : comp)
    if (any_leg(g, v)) return true;
  return false;
}

std::optional<GraphIso> reduced_iso(const Graph& a, const Graph& b) {
  if (a.in.size() != b.in.size() || a.out.size() != b.out.size()) return std::nullopt;
  IsoBuilder ib{a, b, {}};
  for (std::size_t i = 0; i < a.in.size(); ++i) ib.map_vertex(a.in[i], b.in[i]);
  for (std::size_t i = 0; i < a.out.size(); ++i) ib.map_vertex(a.out[i], b.out[i]);
  std::vector<std::string> legs = a.in;
  legs.insert(legs.end(), a.out.begin(), a.out.end());
  for (const auto& x : legs) {
    auto ha = a.incident(x);
    auto hb = b.incident(ib.iso.vertex.at(x));
    if (ha.size() != hb.size() || ha.size() > 1) return std::nullopt;
    if (ha.empty()) continue;
    ib.map_half(ha[0], hb[0]);
    ib.map_half(a.sigma.at(ha[0]), b.sigma.at(hb[0]));
    std::string ya = a.s.at(a.sigma.at(ha[0])), yb = b.s.at(b.sigma.at(hb[0]));
    if (any_leg(a, ya) != any_leg(b, yb)) return std::nullopt;
    ib.map_vertex(ya, yb);
  }
  std::set<std::string> hubs_done;
  for (const auto& [x, y] : std::map<std::string, std::string>(ib.iso.vertex))
    if (!any_leg(a, x) && hubs_done.insert(x).second) ib.map_loops(x, y);

  std::vector<std::string> closed_a, closed_b;
  for (const auto& comp : components(a))
    if (!has_legs(a, comp)) {
      if (comp.size() != 1) return std::nullopt;
      closed_a.push_back(comp[0]);
    }
  for (const auto& comp : components(b))
    if (!has_legs(b, comp)) {
      if (comp.size() != 1) return std::nullopt;
      closed_b.push_back(comp[0]);
    }
  if (closed_a.size() != closed_b.size()) return std::nullopt;
  std::vector<bool> used(closed_b.size(), false);
  for (const auto& x : closed_a) {
    bool found = false;
    for (std::size_t j = 0; j < closed_b.size() && !found; ++j) {
      if (used[j] || a.arity(x) != b.arity(closed_b[j])) continue;
      used[j] = true;
      found = true;
      ib.map_vertex(x, closed_b[j]);
      ib.map_loops(x, closed_b[j]);
    }
    if (!found) return std::nullopt;
  }
  if (!ib.ok) return std::nullopt;
  Graph sa = a, sb = b;
  sa.cyclic.reset();
  sb.cyclic.reset();
  if (!is_isomorphism(sa, sb, ib.iso, false)) return std::nullopt;
  return ib.iso;
}

}  // namespace

std::optional<int> compare_orientations(const CdOrientation& a, const CdOrientation& b) {
  require_same_twist(a, b);
  CdOrientation ra = reduce(a), rb = reduce(b);
  auto iso = reduced_iso(ra.graph, rb.graph);
  if (!iso) return std::nullopt;
  long long r = ra.coefficient * rb.coefficient;
  auto wa = all_words(ra), wb = all_words(rb);
  for (std::size_t i = 0; i < wa.size(); ++i) r *= reorder_sign(transport(ra.graph, rb.graph, wa[i], *iso), wb[i]);
  return static_cast<int>(r);
}

OrbitClass orbit_class(const Graph& g, int c, int d) {
  bool odd = ((c + d) % 2) != 0;
  if (!is_forest(g)) {
    if (odd)
      return {OrbitClass::Kind::TwoTorsion, 1,
              "collapse a spanning forest to reach a tadpole; flipping it acts by (-1)^{c+d} = -1"};
    return {OrbitClass::Kind::Unknown, 1, "cycles present and c+d even"};
  }
  int closed = 0;
  for (const auto& comp : components(g))
    if (!has_legs(g, comp)) ++closed;
  if (closed >= 2 && odd)
    return {OrbitClass::Kind::Unknown, 1, "several closed components may be permuted"};
  return {OrbitClass::Kind::Free, 1, "forest"};
}

}  // namespace frobgraph
