#include "frobgraph/tqft.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace frobgraph {

int atom_inputs(Atom a) {
  switch (a) {
    case Atom::Mu:
    case Atom::Twist: return 2;
    case Atom::Eta: return 0;
    default: return 1;
  }
}

int atom_outputs(Atom a) {
  switch (a) {
    case Atom::Nu:
    case Atom::Twist: return 2;
    case Atom::Eps: return 0;
    default: return 1;
  }
}

std::string atom_name(Atom a) {
  switch (a) {
    case Atom::Mu: return "mu";
    case Atom::Eta: return "eta";
    case Atom::Nu: return "nu";
    case Atom::Eps: return "eps";
    case Atom::Id: return "id";
    case Atom::Twist: return "tau";
  }
  return "";
}

Atom atom_from_name(const std::string& name) {
  static const std::map<std::string, Atom> names = {
      {"mu", Atom::Mu},      {"multi", Atom::Mu},     {"eta", Atom::Eta},   {"unit", Atom::Eta},
      {"nu", Atom::Nu},      {"comulti", Atom::Nu},   {"eps", Atom::Eps},   {"counit", Atom::Eps},
      {"id", Atom::Id},      {"tau", Atom::Twist},    {"twist", Atom::Twist}};
  auto it = names.find(name);
  if (it == names.end()) throw Error(ErrorKind::UnknownName, "unknown atom '" + name + "'");
  return it->second;
}

Elementary atom_graph(Atom a) {
  switch (a) {
    case Atom::Mu: return Elementary::Multi;
    case Atom::Eta: return Elementary::Unit;
    case Atom::Nu: return Elementary::Comulti;
    case Atom::Eps: return Elementary::Counit;
    case Atom::Id: return Elementary::Id;
    case Atom::Twist: return Elementary::Twist;
  }
  return Elementary::Id;
}

int Layer::inputs() const {
  int n = 0;
  for (Atom a : atoms) n += atom_inputs(a);
  return n;
}

int Layer::outputs() const {
  int n = 0;
  for (Atom a : atoms) n += atom_outputs(a);
  return n;
}

std::map<Atom, int> Decomposition::atom_counts() const {
  std::map<Atom, int> out;
  for (const auto& l : layers)
    for (Atom a : l.atoms) ++out[a];
  return out;
}

std::string to_expression(const std::vector<Layer>& layers) {
  std::string out;
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    if (!out.empty()) out += " ∘ ";
    std::string l;
    for (Atom a : it->atoms) l += (l.empty() ? "" : " ⊗ ") + atom_name(a);
    out += it->atoms.size() > 1 ? "(" + l + ")" : l;
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

// Splits at top-level occurrences of any separator.
std::vector<std::string> split_top(const std::string& s, const std::vector<std::string>& seps) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw Error(ErrorKind::InvalidInput, "unbalanced ')' in expression");
    bool hit = false;
    if (depth == 0)
      for (const auto& sep : seps)
        if (s.compare(i, sep.size(), sep) == 0) {
          out.push_back(cur);
          cur.clear();
          i += sep.size();
          hit = true;
          break;
        }
    if (!hit) cur += s[i++];
  }
  if (depth != 0) throw Error(ErrorKind::InvalidInput, "unbalanced '(' in expression");
  out.push_back(cur);
  return out;
}

}  // namespace

std::vector<Layer> parse_expression(const std::string& expr) {
  std::vector<Layer> layers;
  for (std::string part : split_top(expr, {"∘", "."})) {
    part = trim(part);
    if (part.size() >= 2 && part.front() == '(' && part.back() == ')') part = trim(part.substr(1, part.size() - 2));
    if (part.empty()) throw Error(ErrorKind::InvalidInput, "empty layer in expression '" + expr + "'");
    Layer l;
    for (const auto& name : split_top(part, {"⊗", "*"})) l.atoms.push_back(atom_from_name(trim(name)));
    layers.push_back(l);
  }
  std::reverse(layers.begin(), layers.end());
  check_layers(layers);
  return layers;
}

int check_layers(const std::vector<Layer>& layers) {
  if (layers.empty()) return 0;
  for (std::size_t i = 1; i < layers.size(); ++i)
    if (layers[i].inputs() != layers[i - 1].outputs())
      throw Error(ErrorKind::GluabilityFailure, "layer " + std::to_string(i) + " takes " +
                                                    std::to_string(layers[i].inputs()) + " strands, previous gives " +
                                                    std::to_string(layers[i - 1].outputs()));
  return layers.front().inputs();
}

CdOrientation identity_orientation(int n, int c, int d) {
  Graph g;
  g.cyclic.emplace();
  CdOrientation o = cd_from_words(g, c, d, canonical_word(g, Side::In), canonical_word(g, Side::Out));
  for (int i = 0; i < n; ++i) o = cd_tensor(o, generator_orientation(Elementary::Id, c, d));
  return o;
}

CdOrientation layer_orientation(const Layer& l, int c, int d) {
  CdOrientation o = identity_orientation(0, c, d);
  for (Atom a : l.atoms) o = cd_tensor(o, generator_orientation(atom_graph(a), c, d));
  return o;
}

CdOrientation composite_orientation(const std::vector<Layer>& layers, int inputs, int c, int d) {
  CdOrientation o = identity_orientation(inputs, c, d);
  for (const auto& l : layers) o = cd_compose(layer_orientation(l, c, d), o);
  return o;
}

namespace {

struct End {
  int node = -1;
  int in_leg = -1;
  int out_leg = -1;
};
struct Port {
  int edge;
  int end;
  bool operator==(const Port& o) const = default;
};
struct AbsEdge {
  End end[2];
};
struct AbsNode {
  std::vector<Port> ports;  // cyclic order in fat mode
  bool done = false;
};

// g with tadpoles, same-side leg edges and lonely legs subdivided by virtual
// vertices; each remaining edge joins two distinct nodes or a node and a leg.
struct Abstract {
  std::vector<AbsNode> nodes;
  std::vector<AbsEdge> edges;
  std::vector<int> in_edge;   // edge at each in-leg
  std::vector<int> out_edge;  // edge at each out-leg

  int add_node() {
    nodes.emplace_back();
    return static_cast<int>(nodes.size()) - 1;
  }
  int add_edge(End a, End b) {
    edges.push_back({{a, b}});
    return static_cast<int>(edges.size()) - 1;
  }
};

int index_of(const std::vector<std::string>& xs, const std::string& x) {
  auto it = std::find(xs.begin(), xs.end(), x);
  return it == xs.end() ? -1 : static_cast<int>(it - xs.begin());
}

Abstract abstract_graph(const Graph& g, bool fat) {
  Abstract a;
  std::map<std::string, int> node_of;
  for (const auto& v : g.vertices)
    if (!g.is_leg(v, Side::In) && !g.is_leg(v, Side::Out)) node_of[v] = a.add_node();
  a.in_edge.assign(g.in.size(), -1);
  a.out_edge.assign(g.out.size(), -1);
  auto classify = [&](const std::string& v) {
    End e;
    auto it = node_of.find(v);
    if (it != node_of.end()) e.node = it->second;
    e.in_leg = index_of(g.in, v);
    e.out_leg = index_of(g.out, v);
    return e;
  };
  auto note_leg = [&](const End& e, int edge) {
    if (e.in_leg >= 0) a.in_edge[e.in_leg] = edge;
    if (e.out_leg >= 0) a.out_edge[e.out_leg] = edge;
  };
  std::map<std::string, Port> port_of;
  for (const auto& e : g.edges()) {
    End x = classify(g.s.at(e.h)), y = classify(g.s.at(e.sh));
    bool loop = x.node >= 0 && x.node == y.node;
    bool same_side = (x.in_leg >= 0 && y.in_leg >= 0) || (x.out_leg >= 0 && y.out_leg >= 0);
    if (loop || same_side) {
      int m = a.add_node();
      End mid;
      mid.node = m;
      int e1 = a.add_edge(x, mid), e2 = a.add_edge(y, mid);
      port_of[e.h] = {e1, 0};
      port_of[e.sh] = {e2, 0};
      a.nodes[m].ports = {{e1, 1}, {e2, 1}};
      note_leg(x, e1);
      note_leg(y, e2);
    } else {
      int id = a.add_edge(x, y);
      port_of[e.h] = {id, 0};
      port_of[e.sh] = {id, 1};
      note_leg(x, id);
      note_leg(y, id);
    }
  }
  for (const auto& [v, n] : node_of) {
    std::vector<std::string> order = fat ? g.cyclic->at(v) : g.incident(v);
    for (const auto& h : order) a.nodes[n].ports.push_back(port_of.at(h));
  }
  for (const auto& v : g.vertices) {
    if (g.arity(v) != 0) continue;
    End leg = classify(v);
    if (leg.node >= 0) continue;
    if (leg.in_leg >= 0 && leg.out_leg >= 0) {
      note_leg(leg, a.add_edge(leg, leg));
      continue;
    }
    int m = a.add_node();
    End mid;
    mid.node = m;
    int id = a.add_edge(leg, mid);
    a.nodes[m].ports = {{id, 1}};
    note_leg(leg, id);
  }
  return a;
}

struct PlanarFailure {};

// Where a node's in-ports start in its port list and how many there are;
// `pos` places a node without in-ports.
struct Choice {
  std::size_t start = 0;
  std::size_t run = 0;
  int pos = 0;
};

class Sweep {
 public:
  Sweep(Abstract a, bool fat, bool planar) : a_(std::move(a)), fat_(fat), planar_(planar) {
    frontier_ = a_.in_edge;
  }

  bool finished() const {
    for (const auto& n : a_.nodes)
      if (!n.done) return false;
    return true;
  }
  const std::vector<Layer>& layers() const { return layers_; }
  void finish() { arrange(a_.out_edge); }

  // Unprocessed nodes, most in-ports first, ties shuffled.
  std::vector<int> candidates(std::mt19937& rng) const {
    std::vector<std::pair<int, int>> scored;
    for (int n = 0; n < static_cast<int>(a_.nodes.size()); ++n) {
      if (a_.nodes[n].done) continue;
      int score = 0;
      for (const auto& p : a_.nodes[n].ports) score += in_frontier(p.edge) ? 2 : -1;
      scored.push_back({-score, n});
    }
    std::shuffle(scored.begin(), scored.end(), rng);
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<int> out;
    for (const auto& [_, n] : scored) out.push_back(n);
    return out;
  }

  std::vector<Choice> options(int n) const {
    const auto& ports = a_.nodes[n].ports;
    std::size_t k = ports.size();
    std::vector<bool> is_in(k);
    for (std::size_t i = 0; i < k; ++i) is_in[i] = in_frontier(ports[i].edge);
    std::size_t n_in = std::count(is_in.begin(), is_in.end(), true);
    std::vector<Choice> out;
    int width = static_cast<int>(frontier_.size());
    if (!fat_) {
      if (n_in > 0) return {Choice{0, n_in, 0}};
      for (int pos = 0; pos <= width; ++pos) out.push_back({0, 0, pos});
      return out;
    }
    if (n_in == 0) {
      for (std::size_t r = 0; r < std::max<std::size_t>(k, 1); ++r)
        for (int pos = 0; pos <= width; ++pos) out.push_back({r, 0, pos});
    } else if (n_in == k) {
      for (std::size_t r = 0; r < k; ++r) out.push_back({r, k, 0});
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        if (!is_in[i] || is_in[(i + k - 1) % k]) continue;
        std::size_t run = 0;
        while (is_in[(i + run) % k]) ++run;
        out.push_back({i, run, 0});
      }
    }
    return out;
  }

  void apply(int n, const Choice& ch, std::mt19937& rng) {
    std::vector<Port> ins, outs;
    if (!fat_) {
      const auto& ports = a_.nodes[n].ports;
      for (int e : frontier_)
        for (const auto& p : ports)
          if (p.edge == e) ins.push_back(p);
      for (const auto& p : ports)
        if (!in_frontier(p.edge)) outs.push_back(p);
      std::shuffle(outs.begin(), outs.end(), rng);
    } else {
      std::size_t k = a_.nodes[n].ports.size();
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t off = (i + k - ch.start) % k;
        if (off >= ch.run && in_frontier(a_.nodes[n].ports[i].edge)) defer(n, i);
      }
      const auto& ps = a_.nodes[n].ports;
      for (std::size_t j = 0; j < ch.run; ++j) ins.push_back(ps[(ch.start + j) % k]);
      // the expansion reads a_1 .. a_k, b_m .. b_1 around the vertex
      for (std::size_t j = k; j > ch.run; --j) outs.push_back(ps[(ch.start + j - 1) % k]);
    }
    std::vector<int> a_edges;
    for (const auto& p : ins) a_edges.push_back(p.edge);

    int pos;
    if (!ins.empty()) {
      std::set<int> mine(a_edges.begin(), a_edges.end());
      std::vector<int> others;
      int before = -1;
      for (int e : frontier_) {
        if (mine.count(e)) {
          if (before < 0) before = static_cast<int>(others.size());
        } else {
          others.push_back(e);
        }
      }
      std::vector<int> target(others.begin(), others.begin() + before);
      target.insert(target.end(), a_edges.begin(), a_edges.end());
      target.insert(target.end(), others.begin() + before, others.end());
      arrange(target);
      pos = before;
      for (std::size_t j = 1; j < a_edges.size(); ++j) {
        emit(Atom::Mu, pos);
        frontier_.erase(frontier_.begin() + pos + 1);
      }
    } else {
      pos = ch.pos;
      emit(Atom::Eta, pos);
      frontier_.insert(frontier_.begin() + pos, -1);
    }
    if (outs.empty()) {
      emit(Atom::Eps, pos);
      frontier_.erase(frontier_.begin() + pos);
    } else {
      for (std::size_t j = 0; j + 1 < outs.size(); ++j) {
        emit(Atom::Nu, pos + static_cast<int>(j));
        frontier_[pos + j] = outs[j].edge;
        frontier_.insert(frontier_.begin() + pos + j + 1, -1);
      }
      frontier_[pos + outs.size() - 1] = outs.back().edge;
    }
    a_.nodes[n].done = true;
  }

  // Strands bound for out-legs never move again in a planar sweep, so they
  // must already appear in out-leg order.
  bool planar_viable() const {
    int last = -1;
    for (int e : frontier_) {
      for (int j = 0; j < static_cast<int>(a_.out_edge.size()); ++j) {
        if (a_.out_edge[j] != e) continue;
        if (j < last) return false;
        last = j;
      }
    }
    return true;
  }

 private:
  bool in_frontier(int e) const { return std::find(frontier_.begin(), frontier_.end(), e) != frontier_.end(); }

  void emit(Atom atom, int pos) {
    Layer l;
    int width = static_cast<int>(frontier_.size());
    for (int i = 0; i < pos; ++i) l.atoms.push_back(Atom::Id);
    l.atoms.push_back(atom);
    for (int i = pos + atom_inputs(atom); i < width; ++i) l.atoms.push_back(Atom::Id);
    layers_.push_back(l);
  }

  // Adjacent transpositions until the frontier equals `target`.
  void arrange(const std::vector<int>& target) {
    std::map<int, int> rank;
    for (std::size_t i = 0; i < target.size(); ++i) rank[target[i]] = static_cast<int>(i);
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (std::size_t i = 0; i + 1 < frontier_.size(); ++i) {
        if (rank.at(frontier_[i]) <= rank.at(frontier_[i + 1])) continue;
        if (planar_) throw PlanarFailure{};
        emit(Atom::Twist, static_cast<int>(i));
        std::swap(frontier_[i], frontier_[i + 1]);
        swapped = true;
      }
    }
  }

  // Splits the in-port in `slot` off to a new two-valent node that caps it
  // with a fresh out-port of n.
  void defer(int n, std::size_t slot) {
    Port p = a_.nodes[n].ports[slot];
    int x = a_.add_node();
    End mid, here;
    mid.node = x;
    here.node = n;
    a_.edges[p.edge].end[p.end] = mid;
    int fresh = a_.add_edge(here, mid);
    a_.nodes[n].ports[slot] = {fresh, 0};
    a_.nodes[x].ports = {p, {fresh, 1}};
  }

  Abstract a_;
  bool fat_;
  bool planar_;
  std::vector<int> frontier_;
  std::vector<Layer> layers_;
};

// One greedy pass with random choices.
std::vector<Layer> greedy_sweep(Sweep s, std::mt19937& rng) {
  while (!s.finished()) {
    int n = s.candidates(rng).front();
    auto opts = s.options(n);
    s.apply(n, opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)], rng);
  }
  s.finish();
  return s.layers();
}

// Depth-first search over node order and choices, never twisting.
bool planar_search(Sweep& s, std::mt19937& rng, long& budget) {
  if (s.finished()) {
    try {
      s.finish();
      return true;
    } catch (const PlanarFailure&) {
      return false;
    }
  }
  for (int n : s.candidates(rng)) {
    auto opts = s.options(n);
    std::shuffle(opts.begin(), opts.end(), rng);
    for (const auto& ch : opts) {
      if (--budget < 0) return false;
      Sweep next = s;
      try {
        next.apply(n, ch, rng);
      } catch (const PlanarFailure&) {
        continue;
      }
      if (!next.planar_viable()) continue;
      if (planar_search(next, rng, budget)) {
        s = std::move(next);
        return true;
      }
    }
  }
  return false;
}

bool has_twist(const std::vector<Layer>& layers) {
  for (const auto& l : layers)
    for (Atom a : l.atoms)
      if (a == Atom::Twist) return true;
  return false;
}

// Throws unless the layers compose to a graph equivalent to g.
void verify(const Graph& g, const Graph& expanded, Flavor flavor) {
  if (expanded.in.size() != g.in.size() || expanded.out.size() != g.out.size())
    throw Error(ErrorKind::ShapeMismatch, "layers have " + std::to_string(expanded.in.size()) + " inputs and " +
                                              std::to_string(expanded.out.size()) + " outputs, graph has " +
                                              std::to_string(g.in.size()) + " and " + std::to_string(g.out.size()));
  if (flavor == Flavor::Commutative) {
    CdOrientation a = cd_from_words(g, 0, 0, canonical_word(g, Side::In), canonical_word(g, Side::Out));
    CdOrientation b = cd_from_words(expanded, 0, 0, canonical_word(expanded, Side::In),
                                    canonical_word(expanded, Side::Out));
    if (!compare_orientations(a, b))
      throw Error(ErrorKind::InvalidInput, "layers do not compose to a graph equivalent to the input");
    return;
  }
  if (!g.is_fat()) throw Error(ErrorKind::FlavorMismatch, "the " + flavor_name(flavor) + " flavor needs a fat graph");
  std::string want = surface_signature(g), got = surface_signature(expanded);
  if (want != got)
    throw Error(ErrorKind::InvalidInput, "layers give the surface " + got + ", graph has " + want);
}

Flavor needed_flavor(const std::vector<Layer>& layers, Flavor requested) {
  if (requested == Flavor::Commutative) return Flavor::Commutative;
  bool tw = has_twist(layers);
  if (requested == Flavor::Planar && tw)
    throw Error(ErrorKind::PlanarTwistRequired, "planar decomposition contains a twist");
  return tw ? Flavor::Symmetric : Flavor::Planar;
}

}  // namespace

Decomposition decomposition_from_layers(const Graph& g, const std::vector<Layer>& layers, Flavor flavor) {
  Decomposition dec;
  dec.graph = g;
  dec.layers = layers;
  dec.inputs = layers.empty() ? static_cast<int>(g.in.size()) : check_layers(layers);
  dec.outputs = layers.empty() ? dec.inputs : layers.back().outputs();
  dec.flavor = needed_flavor(layers, flavor);
  dec.expanded = composite_orientation(layers, dec.inputs, 0, 0).graph;
  verify(g, dec.expanded, flavor);
  return dec;
}

Decomposition decompose(const Graph& g, unsigned seed, Flavor flavor) {
  auto report = validate(g);
  if (!report.ok()) throw Error(ErrorKind::InvalidInput, "invalid graph: " + report.problems.front());
  bool fat = flavor != Flavor::Commutative;
  if (fat && !g.is_fat())
    throw Error(ErrorKind::FlavorMismatch, "the " + flavor_name(flavor) + " flavor needs a fat graph");
  std::mt19937 rng(seed);
  Sweep sweep(abstract_graph(g, fat), fat, flavor == Flavor::Planar);
  std::vector<Layer> layers;
  if (flavor == Flavor::Planar) {
    long budget = 200000;
    if (!planar_search(sweep, rng, budget))
      throw Error(ErrorKind::PlanarTwistRequired,
                  budget < 0 ? "no twist-free decomposition found within the search budget"
                             : "every sweep of this graph needs a twist");
    layers = sweep.layers();
  } else {
    layers = greedy_sweep(sweep, rng);
  }
  Decomposition dec = decomposition_from_layers(g, layers, flavor);
  dec.seed = seed;
  return dec;
}

CdOrientation witness(const Decomposition& dec, int c, int d) {
  return composite_orientation(dec.layers, dec.inputs, c, d);
}

int decomposition_sign(const Decomposition& dec, const CdOrientation& omega) {
  if (!(omega.graph == dec.graph))
    throw Error(ErrorKind::InvalidInput, "orientation lives on a different graph than the decomposition");
  auto r = compare_orientations(omega, witness(dec, omega.c, omega.d));
  if (!r) throw Error(ErrorKind::InvalidInput, "decomposition does not reduce to the oriented graph");
  return *r;
}

namespace {

GradedMap atom_map(Atom a, const FrobeniusData& f) {
  switch (a) {
    case Atom::Mu: return f.mu;
    case Atom::Eta: return f.eta;
    case Atom::Nu: return f.nu;
    case Atom::Eps: return f.eps;
    case Atom::Id: return identity(f.A);
    case Atom::Twist: return twist(f.A, f.A);
  }
  return identity(f.A);
}

}  // namespace

GradedMap evaluate(const Decomposition& dec, const FrobeniusData& f) {
  if (f.flavor < dec.flavor)
    throw Error(ErrorKind::FlavorMismatch, "decomposition needs a " + flavor_name(dec.flavor) + " algebra, got " +
                                               flavor_name(f.flavor));
  // Pushes each source basis tensor through the layers as a sparse vector.
  // A layer acts by the Koszul rule (f (x) g)(x (x) y) = (-1)^{|g||x|} f(x) (x) g(y).
  using Column = std::vector<std::pair<MultiIndex, Rational>>;
  std::map<Atom, std::map<MultiIndex, Column>> table;
  std::map<Atom, int> degree;
  for (Atom a : {Atom::Mu, Atom::Eta, Atom::Nu, Atom::Eps, Atom::Id, Atom::Twist}) {
    GradedMap m = atom_map(a, f);
    degree[a] = m.degree();
    auto& cols = table[a];
    for (const auto& [sdeg, b] : m.blocks())
      for (Eigen::Index c = 0; c < b.cols(); ++c)
        for (Eigen::Index r = 0; r < b.rows(); ++r)
          if (b(r, c) != 0)
            cols[m.source().multi_index(sdeg, static_cast<int>(c))].push_back(
                {m.target().multi_index(sdeg + m.degree(), static_cast<int>(r)), b(r, c)});
  }
  int total = 0;
  for (const auto& l : dec.layers)
    for (Atom a : l.atoms) total = checked_add(total, degree[a]);

  GradedModule src = tensor_power(f.A, dec.inputs);
  MapBuilder out(src, tensor_power(f.A, dec.outputs), total);
  for (int sd : src.degrees())
    for (int sp = 0; sp < src.rank(sd); ++sp) {
      std::map<MultiIndex, Rational> state{{src.multi_index(sd, sp), Rational(1)}};
      for (const auto& l : dec.layers) {
        std::map<MultiIndex, Rational> next;
        for (const auto& [mi, v] : state) {
          // partial products: (target so far, coefficient, source degree so far)
          std::vector<std::tuple<MultiIndex, Rational, long long>> acc{{MultiIndex{}, v, 0}};
          std::size_t at = 0;
          for (Atom a : l.atoms) {
            MultiIndex piece(mi.begin() + at, mi.begin() + at + atom_inputs(a));
            at += atom_inputs(a);
            long long pdeg = 0;
            for (const auto& x : piece) pdeg += x.first;
            auto it = table[a].find(piece);
            std::vector<std::tuple<MultiIndex, Rational, long long>> grown;
            if (it != table[a].end())
              for (const auto& [t, c, sdeg] : acc)
                for (const auto& [tmi, w] : it->second) {
                  MultiIndex nt = t;
                  nt.insert(nt.end(), tmi.begin(), tmi.end());
                  grown.push_back({nt, c * w * sign_of_parity(degree[a] * sdeg), sdeg + pdeg});
                }
            acc = std::move(grown);
            if (acc.empty()) break;
          }
          for (const auto& [t, c, sdeg] : acc) {
            auto& slot = next[t];
            slot += c;
            if (slot == 0) next.erase(t);
          }
        }
        state = std::move(next);
      }
      for (const auto& [t, v] : state) out.add(src.multi_index(sd, sp), t, v);
    }
  return out.build();
}

OrientedValue evaluate_oriented(const Graph& g, const CdOrientation& omega, const FrobeniusData& f, unsigned seed) {
  if (omega.c != f.c || omega.d != f.d)
    throw Error(ErrorKind::ParameterMismatch, "orientation and algebra have different (c, d)");
  Flavor flavor = g.is_fat() ? f.flavor : Flavor::Commutative;
  Decomposition dec = decompose(g, seed, flavor);
  int r = decomposition_sign(dec, omega);
  OrientedValue v{Rational(r) * evaluate(dec, f), orbit_class(g, f.c, f.d), r};
  if (v.orbit.kind == OrbitClass::Kind::TwoTorsion && !v.map.is_zero())
    throw Error(ErrorKind::RelationFailure, "nonzero value on a 2-torsion orientation class");
  return v;
}

}  // namespace frobgraph
