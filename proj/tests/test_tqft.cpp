#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "frobgraph/examples.hpp"
#include "frobgraph/io.hpp"
#include "frobgraph/tqft.hpp"
#include "gen.hpp"

using namespace frobgraph;
using frobgraph::testing::Gen;

namespace {

const char* kCaption =
    "(eps ⊗ mu) ∘ (mu ⊗ id ⊗ id) ∘ (id ⊗ nu ⊗ id) ∘ (nu ⊗ id) ∘ (eta ⊗ mu) ∘ nu ∘ mu ∘ (mu ⊗ id)";

int sgn(long long e) { return sign_of_parity(e); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

CdOrientation canonical(const Graph& g, int c, int d) {
  return cd_from_words(g, c, d, canonical_word(g, Side::In), canonical_word(g, Side::Out));
}

FrobeniusData with_flavor(FrobeniusData f, Flavor fl) {
  f.flavor = fl;
  return f;
}

FrobeniusData group_algebra_z2() {
  GradedModule a = GradedModule::plain({{0, {"1", "g"}}});
  GradedModule a2 = tensor_power(a, 2);
  MapBuilder mu(a2, a, 0), eta(GradedModule::unit(), a, 0), eps(a, GradedModule::unit(), 0);
  mu.add({{0, 0}, {0, 0}}, {{0, 0}}, 1);
  mu.add({{0, 0}, {0, 1}}, {{0, 1}}, 1);
  mu.add({{0, 1}, {0, 0}}, {{0, 1}}, 1);
  mu.add({{0, 1}, {0, 1}}, {{0, 0}}, 1);
  eta.add(MultiIndex{}, {{0, 0}}, 1);
  eps.add({{0, 0}}, MultiIndex{}, 2);
  return from_pairing(a, mu.build(), eta.build(), eps.build(), Flavor::Commutative);
}

struct Named {
  std::string name;
  FrobeniusData f;
};

// Test algebras: the two from the invariance criterion plus c + d = 0 ones
// on which closed and higher genus graphs do not vanish for degree reasons.
std::vector<Named> test_algebras() {
  return {{"R11", builtin_Rcd(1, 1)},
          {"R02", builtin_Rcd(0, 2)},
          {"S2", cohomology_algebra(sphere_presentation(2))},
          {"R11xR-1-1", tensor_algebras(builtin_Rcd(1, 1), builtin_Rcd(-1, -1))},
          {"QZ2", group_algebra_z2()}};
}

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> c = load_catalogue(default_catalogue_dir());
  return c;
}

const Graph& catalogue_graph(const std::string& name) {
  for (const auto& e : catalogue())
    if (e.name == name) return e.graph;
  throw std::runtime_error("no catalogue graph " + name);
}

std::vector<Layer> layers(const std::string& expr) { return parse_expression(expr); }

Graph reduced_graph(const std::vector<Layer>& ls) {
  return reduce(composite_orientation(ls, check_layers(ls), 0, 0)).graph;
}

bool has_nu_then_mu(const Decomposition& dec) {
  bool nu = false;
  for (const auto& l : dec.layers) {
    for (Atom a : l.atoms)
      if (a == Atom::Mu && nu) return true;
    for (Atom a : l.atoms)
      if (a == Atom::Nu) nu = true;
  }
  return false;
}

// Automorphisms fixing every leg, ignoring cyclic orders.
std::vector<GraphIso> automorphisms(const Graph& g) {
  Graph plain = g;
  plain.cyclic.reset();
  std::vector<GraphIso> out;
  GraphIso iso;
  std::set<std::string> used;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (out.size() >= 64) return;
    if (i == g.half_edges.size()) {
      GraphIso full = iso;
      for (const auto& v : g.vertices)
        if (!full.vertex.count(v)) full.vertex[v] = v;  // isolated vertices
      if (is_isomorphism(plain, plain, full, false)) out.push_back(full);
      return;
    }
    const std::string& h = g.half_edges[i];
    if (iso.half.count(h)) return go(i + 1);
    for (const auto& t : g.half_edges) {
      if (used.count(t)) continue;
      const std::string& sh = g.sigma.at(h);
      const std::string& st = g.sigma.at(t);
      if (used.count(st)) continue;
      auto bind = [&](const std::string& x, const std::string& y) {
        auto it = iso.vertex.find(g.s.at(x));
        if (it != iso.vertex.end()) return it->second == g.s.at(y);
        if (g.is_leg(g.s.at(x), Side::In) || g.is_leg(g.s.at(x), Side::Out)) return g.s.at(x) == g.s.at(y);
        for (const auto& [k, v] : iso.vertex)
          if (v == g.s.at(y)) return false;
        return true;
      };
      if (!bind(h, t)) continue;
      auto saved = iso;
      iso.vertex[g.s.at(h)] = g.s.at(t);
      if (!bind(sh, st)) {
        iso = saved;
        continue;
      }
      iso.vertex[g.s.at(sh)] = g.s.at(st);
      iso.half[h] = t;
      iso.half[sh] = st;
      used.insert(t);
      used.insert(st);
      go(i + 1);
      used.erase(t);
      used.erase(st);
      iso = saved;
    }
  };
  go(0);
  return out;
}

CdOrientation transported(const CdOrientation& o, const GraphIso& iso) {
  CdOrientation out = o;
  for (auto& w : out.in_words) w = transport(o.graph, o.graph, w, iso);
  for (auto& w : out.out_words) w = transport(o.graph, o.graph, w, iso);
  return out;
}

}  // namespace

TEST(Expression, CaptionParsesWithItsAtomCounts) {
  auto ls = layers(kCaption);
  EXPECT_EQ(ls.size(), 8u);
  EXPECT_EQ(check_layers(ls), 3);
  std::map<Atom, int> counts;
  for (const auto& l : ls)
    for (Atom a : l.atoms) ++counts[a];
  EXPECT_EQ(counts[Atom::Mu], 5);
  EXPECT_EQ(counts[Atom::Nu], 3);
  EXPECT_EQ(counts[Atom::Eta], 1);
  EXPECT_EQ(counts[Atom::Eps], 1);
  EXPECT_EQ(to_expression(ls), kCaption);
  EXPECT_EQ(parse_expression(to_expression(ls)), ls);
}

TEST(Expression, AsciiSeparatorsAndAliases) {
  EXPECT_EQ(parse_expression("(counit * multi) . (id * twist)"), parse_expression("(eps ⊗ mu) ∘ (id ⊗ tau)"));
}

TEST(Expression, Errors) {
  EXPECT_EQ(kind_of([] { parse_expression("mu ∘ blah"); }), ErrorKind::UnknownName);
  EXPECT_EQ(kind_of([] { check_layers(parse_expression("mu ∘ mu")); }), ErrorKind::GluabilityFailure);
}

TEST(Decompose, ElementaryGraphsGiveOneLayer) {
  const std::pair<Elementary, Atom> pairs[] = {{Elementary::Multi, Atom::Mu},     {Elementary::Comulti, Atom::Nu},
                                               {Elementary::Unit, Atom::Eta},     {Elementary::Counit, Atom::Eps}};
  for (auto [e, a] : pairs)
    for (Flavor fl : {Flavor::Commutative, Flavor::Symmetric, Flavor::Planar}) {
      Decomposition dec = decompose(elementary(e), 0, fl);
      ASSERT_EQ(dec.layers.size(), 1u) << elementary_name(e);
      EXPECT_EQ(dec.layers[0].atoms, std::vector<Atom>{a});
    }
  EXPECT_TRUE(decompose(elementary(Elementary::Id)).layers.empty());
}

TEST(Decompose, MultiSignIsPlusOne) {
  for (int c = -2; c <= 2; ++c)
    for (int d = -2; d <= 2; ++d) {
      Decomposition dec = decompose(elementary(Elementary::Multi));
      EXPECT_EQ(decomposition_sign(dec, generator_orientation(Elementary::Multi, c, d)), 1);
    }
}

TEST(Decompose, PlanarTwistFailsLoudly) {
  EXPECT_EQ(kind_of([] { decompose(elementary(Elementary::Twist), 0, Flavor::Planar); }),
            ErrorKind::PlanarTwistRequired);
  Decomposition dec = decompose(elementary(Elementary::Twist), 0, Flavor::Symmetric);
  EXPECT_EQ(dec.flavor, Flavor::Symmetric);
}

TEST(Decompose, ThetaHasNuBeforeMu) {
  for (const char* name : {"handle", "handle_flat", "theta_torus", "quad_handle"})
    for (unsigned seed = 0; seed < 4; ++seed)
      for (Flavor fl : {Flavor::Commutative, Flavor::Symmetric}) {
        Decomposition dec = decompose(catalogue_graph(name), seed, fl);
        EXPECT_TRUE(has_nu_then_mu(dec)) << name << " seed " << seed << ": " << to_expression(dec.layers);
      }
}

TEST(Decompose, CaptionGraph) {
  auto ls = layers(kCaption);
  const Graph& g = catalogue_graph("caption");
  EXPECT_EQ(g, reduced_graph(ls));
  Decomposition given = decomposition_from_layers(g, ls, Flavor::Planar);
  EXPECT_EQ(given.atom_counts()[Atom::Mu], 5);
  for (const auto& [name, f0] : test_algebras()) {
    FrobeniusData f = with_flavor(f0, Flavor::Symmetric);
    CdOrientation w = canonical(g, f.c, f.d);
    GradedMap expect = Rational(decomposition_sign(given, w)) * evaluate(given, f);
    for (unsigned seed = 0; seed < 5; ++seed) {
      EXPECT_EQ(evaluate_oriented(g, w, f, seed).map, expect) << name << " seed " << seed;
      EXPECT_EQ(evaluate_oriented(g, w, f0, seed).map, expect) << name << " seed " << seed;
    }
  }
}

TEST(Decompose, WrongLayersAreRejected) {
  EXPECT_EQ(kind_of([] { decomposition_from_layers(catalogue_graph("handle"), layers("nu ∘ mu"), Flavor::Symmetric); }),
            ErrorKind::ShapeMismatch);
  EXPECT_ANY_THROW(decomposition_from_layers(catalogue_graph("handle"), layers("id"), Flavor::Symmetric));
}

TEST(Sign, AssociativityDecompositionsDifferByMinusOneToTheC) {
  auto left = layers("mu ∘ (mu ⊗ id)");
  auto right = layers("mu ∘ (id ⊗ mu)");
  Graph g = reduced_graph(left);
  Decomposition dl = decomposition_from_layers(g, left), dr = decomposition_from_layers(g, right);
  for (int c = -2; c <= 2; ++c)
    for (int d = -2; d <= 2; ++d) {
      CdOrientation w = reduce(composite_orientation(left, 3, c, d));
      EXPECT_EQ(decomposition_sign(dl, w), 1);
      EXPECT_EQ(decomposition_sign(dr, w), sgn(c)) << c << "," << d;
    }
}

TEST(Sign, FrobeniusThreeDecompositions) {
  auto mu_left = layers("(mu ⊗ id) ∘ (id ⊗ nu)");
  auto middle = layers("nu ∘ mu");
  auto mu_right = layers("(id ⊗ mu) ∘ (nu ⊗ id)");
  Graph g = reduced_graph(mu_left);
  for (int c = -2; c <= 2; ++c)
    for (int d = -2; d <= 2; ++d) {
      CdOrientation w = reduce(composite_orientation(mu_left, 2, c, d));
      EXPECT_EQ(decomposition_sign(decomposition_from_layers(g, mu_left), w), 1);
      EXPECT_EQ(decomposition_sign(decomposition_from_layers(g, middle), w), sgn(c * d)) << c << "," << d;
      EXPECT_EQ(decomposition_sign(decomposition_from_layers(g, mu_right), w), 1) << c << "," << d;
    }
}

TEST(Evaluate, MultiGivesTheMultiplicationTable) {
  for (int c = -2; c <= 2; ++c)
    for (int d = -2; d <= 2; ++d) {
      FrobeniusData f = builtin_Rcd(c, d);
      OrientedValue v = evaluate_oriented(elementary(Elementary::Multi), generator_orientation(Elementary::Multi, c, d), f);
      EXPECT_EQ(v.map, f.mu);
      EXPECT_EQ(v.sign, 1);
    }
  FrobeniusData r = builtin_Rcd(1, 1);
  GradedMap mu = evaluate(decompose(elementary(Elementary::Multi)), r);
  GradedModule a2 = tensor_power(r.A, 2);
  EXPECT_EQ(mu.apply(Element::basis(a2, 0, a2.find("x⊗y").second)).coefficient(1, 0), -1);
}

GradedMap dense_composite(const std::vector<Layer>& ls, int inputs, const FrobeniusData& f) {
  auto atom = [&](Atom a) -> GradedMap {
    switch (a) {
      case Atom::Mu: return f.mu;
      case Atom::Eta: return f.eta;
      case Atom::Nu: return f.nu;
      case Atom::Eps: return f.eps;
      case Atom::Id: return identity(f.A);
      case Atom::Twist: return twist(f.A, f.A);
    }
    return identity(f.A);
  };
  GradedMap acc = identity(tensor_power(f.A, inputs));
  for (const auto& l : ls) {
    GradedMap m = atom(l.atoms.front());
    for (std::size_t i = 1; i < l.atoms.size(); ++i) m = tensor_map(m, atom(l.atoms[i]));
    acc = compose(m, acc);
  }
  return acc;
}

TEST(Evaluate, SparseMatchesDenseComposite) {
  Gen gen(5);
  const Atom all[] = {Atom::Mu, Atom::Eta, Atom::Nu, Atom::Eps, Atom::Id, Atom::Twist};
  auto algs = test_algebras();
  algs.push_back({"R-12", builtin_Rcd(-1, 2)});
  for (int trial = 0; trial < 60; ++trial) {
    const FrobeniusData& f = algs[trial % algs.size()].f;
    int inputs = gen.uniform(0, 2), width = inputs;
    std::vector<Layer> ls;
    for (int k = gen.uniform(1, 6); k > 0; --k) {
      Layer l;
      int left = width;
      while (left > 0 || (l.atoms.empty() && width == 0)) {
        Atom a = all[gen.uniform(0, 5)];
        if (atom_inputs(a) > left) continue;
        if (width - inputs + atom_outputs(a) > 3 && atom_outputs(a) > atom_inputs(a)) a = Atom::Id;
        if (atom_inputs(a) > left) continue;
        l.atoms.push_back(a);
        left -= atom_inputs(a);
      }
      width = l.outputs();
      ls.push_back(l);
    }
    Decomposition dec;
    dec.layers = ls;
    dec.inputs = inputs;
    dec.outputs = width;
    EXPECT_EQ(evaluate(dec, f), dense_composite(ls, inputs, f)) << to_expression(ls);
  }
}

TEST(Evaluate, IdentityGraphs) {
  for (const auto& [name, f] : test_algebras()) {
    for (const char* g : {"id", "id_edge"}) {
      CdOrientation w = canonical(catalogue_graph(g), f.c, f.d);
      auto r = compare_orientations(w, generator_orientation(Elementary::Id, f.c, f.d));
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(evaluate_oriented(catalogue_graph(g), w, f).map, Rational(*r) * identity(f.A)) << name << " " << g;
    }
  }
}

TEST(Evaluate, DegreeCountsAtoms) {
  FrobeniusData f = builtin_Rcd(1, 1);
  for (const auto& e : catalogue()) {
    Decomposition dec = decompose(e.graph, 3);
    auto n = dec.atom_counts();
    EXPECT_EQ(evaluate(dec, f).degree(), f.c * (n[Atom::Mu] - n[Atom::Eta]) + f.d * (n[Atom::Nu] - n[Atom::Eps]))
        << e.name;
  }
}

TEST(Evaluate, FlavorMismatch) {
  Decomposition dec = decompose(elementary(Elementary::Twist), 0, Flavor::Symmetric);
  FrobeniusData planar = with_flavor(builtin_Rcd(1, 1), Flavor::Planar);
  EXPECT_EQ(kind_of([&] { evaluate(dec, planar); }), ErrorKind::FlavorMismatch);
  EXPECT_EQ(kind_of([&] {
              evaluate_oriented(elementary(Elementary::Multi), generator_orientation(Elementary::Multi, 0, 0), planar);
            }),
            ErrorKind::ParameterMismatch);
}

TEST(Evaluate, SymmetryGraphGivesMinusPairing) {
  const Graph& g = catalogue_graph("crossed_pairing");
  for (int d = -2; d <= 2; ++d)
    for (Flavor fl : {Flavor::Commutative, Flavor::Symmetric}) {
      FrobeniusData f = with_flavor(builtin_Rcd(1, d), fl);
      Decomposition dec = decomposition_from_layers(g, layers("eps ∘ mu ∘ tau"), Flavor::Symmetric);
      // the orientation of the composite eps mu tau
      CdOrientation w = canonical(g, 1, d);
      w = scaled(w, decomposition_sign(dec, w));
      OrientedValue v = evaluate_oriented(g, w, f);
      EXPECT_EQ(v.map, -compose(f.eps, f.mu)) << d;
    }
}

TEST(Evaluate, TadpoleAtOddParityVanishes) {
  FrobeniusData f = builtin_Rcd(0, 1);
  for (const char* name : {"tadpole_closed", "tadpole_leg", "tadpole_cap"}) {
    const Graph& g = catalogue_graph(name);
    CdOrientation w = canonical(g, 0, 1);
    EXPECT_EQ(orbit_class(g, 0, 1).kind, OrbitClass::Kind::TwoTorsion);
    OrientedValue v = evaluate_oriented(g, w, f);
    EXPECT_EQ(v.orbit.kind, OrbitClass::Kind::TwoTorsion);
    EXPECT_TRUE(v.map.is_zero()) << name;
    EXPECT_EQ(v.map, -v.map);
    // some automorphism reverses the orientation
    bool flips = false;
    for (const auto& iso : automorphisms(g)) flips |= automorphism_action(w, iso) == -1;
    EXPECT_TRUE(flips) << name;
  }
}

TEST(Catalogue, FilesMatchBuiltin) {
  auto built = builtin_catalogue();
  ASSERT_EQ(catalogue().size(), built.size());
  EXPECT_GE(built.size(), 25u);
  bool tadpole = false, disconnected = false, genus1 = false;
  for (std::size_t i = 0; i < built.size(); ++i) {
    const auto& file = *std::find_if(catalogue().begin(), catalogue().end(),
                                     [&](const CatalogueEntry& e) { return e.name == built[i].name; });
    EXPECT_EQ(file.graph, built[i].graph) << built[i].name;
    EXPECT_TRUE(validate(built[i].graph).ok()) << built[i].name;
    EXPECT_LE(built[i].graph.edges().size(), 8u);
    tadpole |= has_tadpole(built[i].graph);
    disconnected |= components(built[i].graph).size() > 1;
    genus1 |= genus(built[i].graph) > 0;
  }
  EXPECT_TRUE(tadpole && disconnected && genus1);
}

TEST(Invariance, SeedIndependentOnCatalogue) {
  for (const auto& [name, f0] : test_algebras())
    for (Flavor fl : {Flavor::Commutative, Flavor::Symmetric}) {
      FrobeniusData f = with_flavor(f0, fl);
      for (const auto& e : catalogue()) {
        CdOrientation w = canonical(e.graph, f.c, f.d);
        GradedMap first = evaluate_oriented(e.graph, w, f, 0).map;
        for (unsigned seed = 1; seed < 4; ++seed)
          EXPECT_EQ(evaluate_oriented(e.graph, w, f, seed).map, first) << name << " " << e.name << " seed " << seed;
      }
    }
}

TEST(Invariance, FlavorsAgree) {
  for (const auto& [name, f] : test_algebras())
    for (const auto& e : catalogue()) {
      CdOrientation w = canonical(e.graph, f.c, f.d);
      GradedMap comm = evaluate_oriented(e.graph, w, f, 1).map;
      EXPECT_EQ(evaluate_oriented(e.graph, w, with_flavor(f, Flavor::Symmetric), 1).map, comm) << name << " " << e.name;
      try {
        EXPECT_EQ(evaluate_oriented(e.graph, w, with_flavor(f, Flavor::Planar), 1).map, comm) << name << " " << e.name;
      } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::PlanarTwistRequired) << e.name;
        EXPECT_FALSE(is_planar(e.graph) && genus(e.graph) == 0 && components(e.graph).size() == 1) << e.name;
      }
    }
}

TEST(Invariance, SomeValuesAreNonzero) {
  // Guards against the invariance tests passing on zero maps only.
  int nonzero_closed = 0, nonzero_genus = 0;
  for (const auto& [name, f] : test_algebras())
    for (const auto& e : catalogue()) {
      if (f.c + f.d != 0) continue;
      GradedMap v = evaluate_oriented(e.graph, canonical(e.graph, f.c, f.d), f).map;
      if (v.is_zero()) continue;
      if (e.graph.in.empty() && e.graph.out.empty()) ++nonzero_closed;
      if (genus(e.graph) > 0) ++nonzero_genus;
    }
  EXPECT_GT(nonzero_closed, 0);
  EXPECT_GT(nonzero_genus, 0);
}

TEST(Invariance, FunctorialityAndMonoidality) {
  Gen gen(17);
  const auto& cat = catalogue();
  std::vector<Named> algs = test_algebras();
  algs.push_back({"R01", builtin_Rcd(0, 1)});
  int glued = 0, tensored = 0;
  while (glued < 50 || tensored < 50) {
    const auto& g1 = cat[gen.uniform(0, static_cast<int>(cat.size()) - 1)].graph;
    const auto& g2 = cat[gen.uniform(0, static_cast<int>(cat.size()) - 1)].graph;
    const Named& alg = algs[gen.uniform(0, static_cast<int>(algs.size()) - 1)];
    const FrobeniusData& f = alg.f;
    CdOrientation w1 = canonical(g1, f.c, f.d), w2 = canonical(g2, f.c, f.d);
    GradedMap v1 = evaluate_oriented(g1, w1, f, gen.uniform(0, 5)).map;
    GradedMap v2 = evaluate_oriented(g2, w2, f, gen.uniform(0, 5)).map;
    if (glued < 50 && g1.out.size() == g2.in.size()) {
      CdOrientation w = cd_compose(w2, w1);
      EXPECT_EQ(evaluate_oriented(w.graph, w, f, gen.uniform(0, 5)).map, compose(v2, v1)) << alg.name;
      ++glued;
    }
    if (tensored < 50) {
      CdOrientation w = cd_tensor(w1, w2);
      EXPECT_EQ(evaluate_oriented(w.graph, w, f, gen.uniform(0, 5)).map, tensor_map(v1, v2)) << alg.name;
      ++tensored;
    }
  }
}

TEST(Torsion, OddParityKillsEveryNonForest) {
  for (int c = -2; c <= 2; ++c)
    for (int d = -2; d <= 2; ++d) {
      if ((c + d) % 2 == 0) continue;
      FrobeniusData f = builtin_Rcd(c, d);
      for (const auto& e : catalogue()) {
        if (is_forest(e.graph)) continue;
        EXPECT_EQ(orbit_class(e.graph, c, d).kind, OrbitClass::Kind::TwoTorsion) << e.name;
        OrientedValue v = evaluate_oriented(e.graph, canonical(e.graph, c, d), f, 2);
        EXPECT_TRUE(v.map.is_zero()) << e.name << " " << c << "," << d;
        EXPECT_TRUE(evaluate(decompose(e.graph, 1), f).is_zero()) << e.name;
      }
    }
}

TEST(Equivariance, AutomorphismsScaleTheValue) {
  for (const auto& [name, f] : test_algebras())
    for (const auto& e : catalogue()) {
      CdOrientation w = canonical(e.graph, f.c, f.d);
      GradedMap v = evaluate_oriented(e.graph, w, f).map;
      EXPECT_EQ(evaluate_oriented(e.graph, scaled(w, -1), f).map, -v);
      for (const auto& iso : automorphisms(e.graph)) {
        int r = automorphism_action(w, iso);
        EXPECT_EQ(evaluate_oriented(e.graph, transported(w, iso), f).map, Rational(r) * v) << name << " " << e.name;
        if (r == -1) EXPECT_TRUE(v.is_zero()) << name << " " << e.name;
      }
    }
}

TEST(Equivariance, ActionIsAHomomorphism) {
  int checked = 0;
  for (const auto& e : catalogue()) {
    auto autos = automorphisms(e.graph);
    for (int c : {0, 1})
      for (int d : {0, 1}) {
        CdOrientation w = canonical(e.graph, c, d);
        for (const auto& a : autos)
          for (const auto& b : autos) {
            GraphIso ab;
            for (const auto& [v, x] : b.vertex) ab.vertex[v] = a.vertex.at(x);
            for (const auto& [h, x] : b.half) ab.half[h] = a.half.at(x);
            EXPECT_EQ(automorphism_action(w, ab), automorphism_action(w, a) * automorphism_action(w, b)) << e.name;
            ++checked;
          }
      }
  }
  EXPECT_GT(checked, 100);
}
