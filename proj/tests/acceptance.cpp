// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "frobgraph/examples.hpp"
#include "frobgraph/io.hpp"
#include "frobgraph/tqft.hpp"
#include "gen.hpp"
#include "hh_oracle.hpp"

using namespace frobgraph;
using frobgraph::testing::Gen;
using frobgraph::testing::HHOracle;
using frobgraph::testing::LabelWord;
using Words = std::vector<std::string>;

namespace {

// Collects failures; a criterion passes when nothing was recorded.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += ok ? 0 : 1;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failed_ > 0) {
      os << ", " << failed_ << " failed:";
      for (const auto& f : failures_) os << " [" << f << "]";
    }
    return os.str();
  }

 private:
  long long checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

std::string cd(int c, int d) { return "(" + std::to_string(c) + "," + std::to_string(d) + ")"; }
int sgn(long long e) { return sign_of_parity(e); }
CdOrientation gen_o(Elementary e, int c, int d) { return generator_orientation(e, c, d); }

bool same_letters(const OrientationWord& w, int sign, const Words& e, const Words& h, const Words& v) {
  return w.sign == sign && w.edges == e && w.halves == h && w.vertices == v;
}

CdOrientation symmetry_orientation(int c, int d) {
  CdOrientation sym = cd_compose(gen_o(Elementary::Counit, c, d), gen_o(Elementary::Multi, c, d));
  return cd_collapse(cd_collapse(sym, "h0'"), sym.graph.edge("e0").h);
}

GraphIso swap_symmetry_inputs(const Graph& g) {
  GraphIso iso;
  for (const auto& v : g.vertices) iso.vertex[v] = v;
  for (const auto& h : g.half_edges) iso.half[h] = h;
  iso.vertex["v1"] = "v2";
  iso.vertex["v2"] = "v1";
  iso.half["h1"] = "h2";
  iso.half["h2"] = "h1";
  iso.half["σh1"] = "σh2";
  iso.half["σh2"] = "σh1";
  return iso;
}

GraphIso swap_multi_inputs() {
  GraphIso iso;
  iso.vertex = {{"v", "v"}, {"v0", "v0"}, {"v1", "v2"}, {"v2", "v1"}};
  iso.half = {{"h0", "h0"}, {"σh0", "σh0"}, {"h1", "h2"}, {"σh1", "σh2"}, {"h2", "h1"}, {"σh2", "σh1"}};
  return iso;
}

// 1. the seven signs of the main lemma
Tally main_theorem_signs() {
  Tally t;
  for (int c = -2; c <= 2; ++c)
    for (int d = -2; d <= 2; ++d) {
      auto m = gen_o(Elementary::Multi, c, d), u = gen_o(Elementary::Unit, c, d);
      auto n = gen_o(Elementary::Comulti, c, d), e = gen_o(Elementary::Counit, c, d);
      auto id = gen_o(Elementary::Id, c, d);
      std::string at = cd(c, d);
      t.expect(compare_orientations(cd_compose(m, cd_tensor(m, id)), cd_compose(m, cd_tensor(id, m))) == sgn(c),
               "associativity " + at);
      auto ul = compare_orientations(cd_compose(m, cd_tensor(u, id)), id);
      auto ur = compare_orientations(cd_compose(m, cd_tensor(id, u)), id);
      t.expect(ul && sgn(c) * *ul == sgn(c * (c - 1) / 2) && ur == sgn(c * (c - 1) / 2), "unitality " + at);
      t.expect(compare_orientations(cd_compose(cd_tensor(n, id), n), cd_compose(cd_tensor(id, n), n)) == sgn(d),
               "coassociativity " + at);
      auto cl = compare_orientations(cd_compose(cd_tensor(e, id), n), id);
      auto cr = compare_orientations(cd_compose(cd_tensor(id, e), n), id);
      t.expect(cr && sgn(d) * *cr == sgn(d * (d - 1) / 2) && cl == sgn(d * (d - 1) / 2), "counitality " + at);
      auto mid = cd_compose(n, m);
      t.expect(compare_orientations(cd_compose(cd_tensor(m, id), cd_tensor(id, n)), mid) == sgn(c * d) &&
                   compare_orientations(cd_compose(cd_tensor(id, m), cd_tensor(n, id)), mid) == sgn(c * d),
               "Frobenius " + at);
      t.expect(automorphism_action(m, swap_multi_inputs()) == sgn(c), "commutativity " + at);
      CdOrientation sym = symmetry_orientation(c, d);
      t.expect(automorphism_action(sym, swap_symmetry_inputs(sym.graph)) == sgn(c), "symmetry " + at);
    }
  return t;
}

// 2. the worked computations, letter for letter
Tally worked_proofs() {
  Tally t;
  Graph multi = elementary(Elementary::Multi);
  Graph idx = with_suffix(elementary(Elementary::Id), "x");
  OrientationWord wm = generator_word(Elementary::Multi, Side::In);

  // comp_1: second multiplication glued into the first input
  auto left = disjoint_union(multi, idx);
  auto comp1 = glue(left.graph, multi);
  auto w = compose_words(wm, tensor_words(wm, canonical_word(idx, Side::In), left), comp1);
  t.expect(same_letters(w, -1, {"e2", "e1", "e0", "e2'", "e1'", "e0'"},
                        {"h0", "σh0", "h1", "σh1", "h2", "σh2", "h0'", "σh0'", "h1'", "σh1'", "h2'", "σh2'"},
                        {"v", "v0", "v'", "v0'"}),
           "comp1 word: " + to_string(w));
  Graph g = comp1.graph;
  w = collapse_word(g, w, "h0'");
  g = collapse_half(g, "h0'");
  t.expect(same_letters(w, 1, {"e2", "e1", "e0", "e2'", "e1'"},
                        {"h0", "σh0", "h1", "σh1", "h2", "σh2", "h1'", "σh1'", "h2'", "σh2'"}, {"v", "v0", "v0'"}),
           "comp1 after e0': " + to_string(w));
  w = collapse_word(g, w, "h1");
  t.expect(same_letters(w, -1, {"e2", "e0", "e2'", "e1'"},
                        {"h0", "σh0", "h2", "σh2", "h1'", "σh1'", "h2'", "σh2'"}, {"v0", "v0'"}),
           "comp1 after e1: " + to_string(w));

  // comp_2: glued into the second input
  auto right = disjoint_union(idx, multi);
  auto comp2 = glue(right.graph, multi);
  w = compose_words(wm, tensor_words(canonical_word(idx, Side::In), wm, right), comp2);
  t.expect(w.sign == -1, "comp2 leading sign");
  g = comp2.graph;
  w = collapse_word(g, w, "h0'");
  g = collapse_half(g, "h0'");
  t.expect(same_letters(w, 1, {"e2", "e1", "e0", "e2'", "e1'"},
                        {"h0", "σh0", "h1", "σh1", "h2", "σh2", "h1'", "σh1'", "h2'", "σh2'"}, {"v", "v0", "v0'"}),
           "comp2 after e0': " + to_string(w));
  w = collapse_word(g, w, "h2");
  t.expect(same_letters(w, 1, {"e1", "e0", "e2'", "e1'"},
                        {"h0", "σh0", "h1", "σh1", "h1'", "σh1'", "h2'", "σh2'"}, {"v0", "v0'"}),
           "comp2 after e2: " + to_string(w));
  // the two composites reduce to the same in-orientation up to -1
  {
    auto m = gen_o(Elementary::Multi, 1, 0), id = gen_o(Elementary::Id, 1, 0);
    t.expect(compare_orientations(cd_compose(m, cd_tensor(m, id)), cd_compose(m, cd_tensor(id, m))) == -1,
             "comp1 = -comp2");
  }

  // unitality chains
  Graph multi_p = with_suffix(multi, "'");
  Graph unit = elementary(Elementary::Unit);
  OrientationWord wmp = wm;
  for (auto* ws : {&wmp.edges, &wmp.halves, &wmp.vertices})
    for (auto& x : *ws) x += "'";
  auto chain = [&](Graph gg, OrientationWord ww, const Words& halves) {
    for (const auto& h : halves) {
      ww = collapse_word(gg, ww, h);
      gg = collapse_half(gg, h, true);
    }
    return ww.edges.empty() && ww.halves.empty() && ww.vertices.empty() ? ww.sign : 0;
  };
  auto ul = disjoint_union(unit, idx);
  auto cl = glue(ul.graph, multi_p);
  auto wl = compose_words(wmp, tensor_words(generator_word(Elementary::Unit, Side::In), canonical_word(idx, Side::In), ul), cl);
  t.expect(same_letters(wl, -1, {"e2'", "e1'", "e0'", "e0"}, {"h0'", "σh0'", "h1'", "σh1'", "h2'", "σh2'", "h0", "σh0"},
                        {"v'", "v0'", "v", "v0"}),
           "left unitality word: " + to_string(wl));
  t.expect(chain(cl.graph, wl, {"h0", "h1'", "h0'", "h2'"}) == -1, "left unitality chain");
  auto ur = disjoint_union(idx, unit);
  auto cr = glue(ur.graph, multi_p);
  auto wr = compose_words(wmp, tensor_words(canonical_word(idx, Side::In), generator_word(Elementary::Unit, Side::In), ur), cr);
  t.expect(wr.sign == -1, "right unitality leading sign");
  t.expect(chain(cr.graph, wr, {"h0", "h2'", "h0'", "h1'"}) == 1, "right unitality chain");

  // Frobenius: each side separately has no sign
  for (auto [c, d] : {std::pair{1, 0}, std::pair{0, 1}}) {
    auto m = gen_o(Elementary::Multi, c, d), n = gen_o(Elementary::Comulti, c, d), id = gen_o(Elementary::Id, c, d);
    auto mid = cd_compose(n, m);
    t.expect(compare_orientations(cd_compose(cd_tensor(m, id), cd_tensor(id, n)), mid) == 1 &&
                 compare_orientations(cd_compose(cd_tensor(id, m), cd_tensor(n, id)), mid) == 1,
             "Frobenius side words " + cd(c, d));
  }

  // commutativity swap
  Graph mm = multi;
  mm.cyclic.reset();
  OrientationWord sw = transport(mm, mm, wm, swap_multi_inputs());
  t.expect(same_letters(sw, 1, {"e1", "e2", "e0"}, {"h0", "σh0", "h2", "σh2", "h1", "σh1"}, {"v", "v0"}),
           "swap word: " + to_string(sw));
  t.expect(automorphism_action(mm, wm, swap_multi_inputs()) == -1, "swap acts by -1 on the in side");
  t.expect(automorphism_action(mm, generator_word(Elementary::Multi, Side::Out), swap_multi_inputs()) == 1,
           "swap acts trivially on the out side");

  // symmetry flip
  for (auto [c, d] : {std::pair{1, 0}, std::pair{0, 1}}) {
    CdOrientation sym = symmetry_orientation(c, d);
    t.expect(automorphism_action(sym, swap_symmetry_inputs(sym.graph)) == (c == 1 ? -1 : 1), "symmetry flip " + cd(c, d));
  }
  return t;
}

// 3. builtin algebras and suspension
Tally algebra_suite() {
  Tally t;
  for (int c = -3; c <= 3; ++c)
    for (int d = -3; d <= 3; ++d) {
      FrobeniusData f = builtin_Rcd(c, d);
      t.expect(check_relations(f).ok(), "relations " + cd(c, d));
      t.expect(check_snake(f), "snake " + cd(c, d));
      for (int k = 1; k <= 3; ++k) {
        f = suspend_algebra(f);
        t.expect(f.c == c - k && f.d == d + k, "suspended parameters " + cd(c, d));
        t.expect(check_relations(f).ok(), "suspended relations " + cd(c, d) + " depth " + std::to_string(k));
      }
    }
  return t;
}

// 4. the unsigned definition only allows the zero algebra
Tally triviality() {
  Tally t;
  for (auto [c, d] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {1, 2}, {-1, 0}, {0, -1}, {2, 1}}) {
    BruteForceReport r = brute_force_unsigned(c, d, 2, -2, 2);
    t.expect(r.accepted == 0 && r.candidates > 0, "brute force accepted a nonzero candidate at " + cd(c, d));
    t.expect(triviality_probe(c, d, 3).surviving_ranks == std::vector<int>{0}, "probe " + cd(c, d));
  }
  FrobeniusData r01 = builtin_Rcd(0, 1);
  t.expect(check_relations(r01).ok(), "signed checker accepts R01");
  t.expect(!check_unsigned(r01).ok(), "unsigned checker rejects R01");
  return t;
}

CdOrientation canonical(const Graph& g, int c, int d) {
  return cd_from_words(g, c, d, canonical_word(g, Side::In), canonical_word(g, Side::Out));
}

// 5. evaluation is independent of the decomposition and is a monoidal functor
Tally evaluation_invariance(const std::vector<CatalogueEntry>& cat) {
  Tally t;
  int genus_pos = 0, tadpoles = 0, disconnected = 0, max_edges = 0;
  for (const auto& e : cat) {
    genus_pos += genus(e.graph) > 0;
    tadpoles += has_tadpole(e.graph);
    disconnected += components(e.graph).size() > 1;
    max_edges = std::max(max_edges, static_cast<int>(e.graph.half_edges.size() / 2));
  }
  t.expect(cat.size() >= 25 && max_edges <= 8 && genus_pos > 0 && tadpoles > 0 && disconnected > 0,
           "catalogue shape");
  std::vector<std::pair<std::string, FrobeniusData>> algs{{"R11", builtin_Rcd(1, 1)},
                                                          {"S2", cohomology_algebra(sphere_presentation(2))}};
  for (const auto& [name, f] : algs)
    for (const auto& e : cat) {
      CdOrientation w = canonical(e.graph, f.c, f.d);
      GradedMap first = evaluate_oriented(e.graph, w, f, 0).map;
      for (unsigned seed = 1; seed < 4; ++seed)
        t.expect(evaluate_oriented(e.graph, w, f, seed).map == first, name + " " + e.name + " seed " + std::to_string(seed));
    }
  Gen gen(17);
  int glued = 0, tensored = 0;
  while (glued < 50 || tensored < 50) {
    const auto& g1 = cat[gen.uniform(0, static_cast<int>(cat.size()) - 1)].graph;
    const auto& g2 = cat[gen.uniform(0, static_cast<int>(cat.size()) - 1)].graph;
    const auto& [name, f] = algs[gen.uniform(0, 1)];
    CdOrientation w1 = canonical(g1, f.c, f.d), w2 = canonical(g2, f.c, f.d);
    GradedMap v1 = evaluate_oriented(g1, w1, f, gen.uniform(0, 5)).map;
    GradedMap v2 = evaluate_oriented(g2, w2, f, gen.uniform(0, 5)).map;
    if (glued < 50 && g1.out.size() == g2.in.size()) {
      CdOrientation w = cd_compose(w2, w1);
      t.expect(evaluate_oriented(w.graph, w, f, gen.uniform(0, 5)).map == compose(v2, v1), "functoriality " + name);
      ++glued;
    }
    if (tensored < 50) {
      CdOrientation w = cd_tensor(w1, w2);
      t.expect(evaluate_oriented(w.graph, w, f, gen.uniform(0, 5)).map == tensor_map(v1, v2), "monoidality " + name);
      ++tensored;
    }
  }
  return t;
}

// 6. 2-torsion for odd c + d
Tally torsion(const std::vector<CatalogueEntry>& cat) {
  Tally t;
  for (int c = -2; c <= 2; ++c)
    for (int d = -2; d <= 2; ++d) {
      if ((c + d) % 2 == 0) continue;
      std::vector<FrobeniusData> algs{builtin_Rcd(c, d), tensor_algebras(builtin_Rcd(c, d), builtin_Rcd(0, 0))};
      if (c == 0 && d > 0) algs.push_back(cohomology_algebra(sphere_presentation(d)));
      for (const auto& e : cat) {
        if (is_forest(e.graph)) continue;
        t.expect(orbit_class(e.graph, c, d).kind == OrbitClass::Kind::TwoTorsion, e.name + " orbit " + cd(c, d));
        for (const auto& f : algs)
          t.expect(evaluate_oriented(e.graph, canonical(e.graph, c, d), f).map.is_zero(), e.name + " value " + cd(c, d));
      }
    }
  return t;
}

// 7. the four suspension identities
Tally suspension_lemma() {
  Tally t;
  Gen gen(29);
  for (int trial = 0; trial < 200; ++trial) {
    GradedModule a = gen.module(3, -1, 1);
    int k = gen.uniform(0, 3), l = gen.uniform(0, 3), m = gen.uniform(0, 3), n = gen.uniform(0, 3);
    // keep the tensor products of rank-3 modules small enough for dense blocks
    if (a.total_rank() == 3 && std::max(k + m, l + n) > 4) a = gen.module(2, -1, 1);
    std::string at = "trial " + std::to_string(trial);
    GradedModule ak = tensor_power(a, k), al = tensor_power(a, l), am = tensor_power(a, m), an = tensor_power(a, n);
    GradedMap f = gen.map(ak, al, gen.useful_degree(ak, al));
    GradedMap g = gen.map(am, an, gen.useful_degree(am, an));
    t.expect(suspend_map(identity(ak), a, k, k) == identity(tensor_power(suspend_module(a), k)), "identity " + at);
    t.expect(suspend_map(twist(a, a), a, 2, 2) == -twist(suspend_module(a), suspend_module(a)), "twist " + at);
    GradedMap lhs = tensor_map(suspend_map(f, a, k, l), suspend_map(g, a, m, n));
    GradedMap rhs = Rational(sgn(static_cast<long long>(n - m) * (f.degree() + k))) *
                    suspend_map(tensor_map(f, g), a, k + m, l + n);
    t.expect(lhs == rhs, "tensor " + at);
    GradedMap h = gen.map(am, ak, gen.useful_degree(am, ak));
    t.expect(compose(suspend_map(f, a, k, l), suspend_map(h, a, m, k)) ==
                 Rational(sgn(static_cast<long long>(k - m) * f.degree())) * suspend_map(compose(f, h), a, m, l),
             "composition " + at);
  }
  return t;
}

// 8. cohomology and Hochschild formulas
Tally examples_formulas() {
  Tally t;
  std::vector<FrobeniusData> mans{cohomology_algebra(sphere_presentation(1)), cohomology_algebra(sphere_presentation(2)),
                                  cohomology_algebra(sphere_presentation(3)), cohomology_algebra(torus_presentation())};
  for (const auto& f : mans)
    t.expect(thom_to_poincare(f.nu, f.d) == desuspension_transport(f.nu, f.A, f.d), "thom d=" + std::to_string(f.d));
  for (const FrobeniusData& f : {builtin_Rcd(0, 1), builtin_Rcd(0, 2)}) {
    HHOracle o(f);
    Gen g(static_cast<unsigned>(41 + f.d));
    for (int trial = 0; trial < 100; ++trial) {
      LabelWord a = o.word(g, 3), b = o.word(g, 3);
      if (g.coin()) a.resize(1);
      HHWord wa = hh_word(f, a), wb = hh_word(f, b);
      std::string at = "R0" + std::to_string(f.d) + " trial " + std::to_string(trial);
      t.expect(hochschild_mu(wa, wb, f) == o.to_chain(o.mu_hh(a, b)), "mu " + at);
      t.expect(hochschild_nu(wa, f) == o.to_chain(o.nu_hh(a)), "nu " + at);
      t.expect(hochschild_eps(wa, f) == o.eps_hh(a), "eps " + at);
      HHChain x{{hh_word(f, o.word(g, 6)), Rational(1)}};
      t.expect(hochschild_differential(hochschild_differential(x, f), f).empty(), "d^2 " + at);
    }
  }
  return t;
}

// 9. the biunital convention
Tally convention_bridge() {
  Tally t;
  for (int c = -4; c <= 4; ++c)
    for (int d = -3; d <= 3; ++d) {
      FrobeniusData f = builtin_Rcd(c, d);
      FrobeniusData g = convert_convention(f, ConventionDirection::ToCieliebakOancea);
      t.expect(check_relations(g, Convention::CieliebakOancea).ok(), "converted relations " + cd(c, d));
      t.expect(compose(g.mu, tensor_map(g.eta, identity(g.A))) == identity(g.A), "mu(eta x id) = id " + cd(c, d));
      int r = ((c % 4) + 4) % 4;
      if (r == 3 || r == 0) t.expect(g.mu == f.mu, "identity case " + cd(c, d));
      FrobeniusData back = convert_convention(g, ConventionDirection::FromCieliebakOancea);
      t.expect(back.mu == f.mu && back.nu == f.nu && back.eta == f.eta && back.eps == f.eps, "round trip " + cd(c, d));
    }
  return t;
}

}  // namespace

int main() {
  std::vector<CatalogueEntry> cat = load_catalogue(default_catalogue_dir());
  std::vector<std::pair<std::string, std::function<Tally()>>> criteria{
      {"main-theorem sign suite", main_theorem_signs},
      {"worked-proof golden words", worked_proofs},
      {"builtin algebras and suspension", algebra_suite},
      {"unsigned triviality", triviality},
      {"evaluation invariance", [&] { return evaluation_invariance(cat); }},
      {"2-torsion", [&] { return torsion(cat); }},
      {"suspension signs", suspension_lemma},
      {"cohomology and Hochschild formulas", examples_formulas},
      {"convention bridge", convention_bridge},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += t.ok() ? 0 : 1;
    std::cout << "criterion " << i + 1 << ": " << (t.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << t.summary() << ", " << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
