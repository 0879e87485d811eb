#include "frobgraph/examples.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

namespace frobgraph {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

using Terms = std::vector<std::pair<HHLetter, Rational>>;
using Split = std::vector<std::tuple<HHLetter, HHLetter, Rational>>;

int degree_of(const RingPresentation& p, const std::string& label) {
  if (label == "1") return 0;
  for (const auto& [g, d] : p.gens)
    if (g == label) return d;
  bad("unknown basis element '" + label + "'");
}

// The product x*y read from the table, with graded commutativity.
std::map<std::string, Rational> table_product(const RingPresentation& p, const std::string& x, const std::string& y) {
  if (x == "1") return {{y, Rational(1)}};
  if (y == "1") return {{x, Rational(1)}};
  if (auto it = p.table.find({x, y}); it != p.table.end()) return it->second;
  if (auto it = p.table.find({y, x}); it != p.table.end()) {
    int s = sign_of_parity(static_cast<long long>(degree_of(p, x)) * degree_of(p, y));
    std::map<std::string, Rational> out;
    for (const auto& [l, v] : it->second) out[l] = v * s;
    return out;
  }
  return {};
}

// "2*b - c", "-1/2*ab", "0".
std::map<std::string, Rational> parse_combination(const std::string& text) {
  std::map<std::string, Rational> out;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) bad("empty table entry");
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) bad("malformed table entry '" + text + "'");
    Rational coeff(1);
    std::string label = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      coeff = parse_rational(term.substr(0, star));
      label = term.substr(star + 1);
    } else if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      if (parse_rational(term) != 0) bad("a nonzero constant needs a basis label: '" + text + "'");
      label.clear();
    }
    if (!label.empty()) out[label] += coeff * sign;
    i = j;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

struct Tables {
  GradedModule a2;
  Tables(const FrobeniusData& f) : a2(tensor_power(f.A, 2)) {}

  Terms product(const FrobeniusData& f, HHLetter x, HHLetter y) const {
    auto [deg, pos] = a2.locate({x, y});
    Terms out;
    Matrix m = f.mu.block(deg);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, pos) != 0) out.push_back({{deg + f.c, static_cast<int>(r)}, m(r, pos)});
    return out;
  }

  Split coproduct(const FrobeniusData& f, HHLetter x) const {
    Split out;
    Matrix m = f.nu.block(x.first);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, x.second) != 0) {
        const MultiIndex& mi = a2.multi_index(x.first + f.d, static_cast<int>(r));
        out.push_back({mi[0], mi[1], m(r, x.second)});
      }
    return out;
  }
};

void require_hh(const FrobeniusData& f) {
  if (f.c != 0) throw Error(ErrorKind::ParameterMismatch, "Hochschild operations need c = 0");
  if (!f.A.is_plain()) throw Error(ErrorKind::ShapeMismatch, "Hochschild operations need a plain module");
}

void add(HHChain& x, const HHWord& w, const Rational& v) {
  if (v == 0) return;
  auto& slot = x[w];
  slot += v;
  if (slot == 0) x.erase(w);
}

}  // namespace

void check_presentation(const RingPresentation& p) {
  std::set<std::string> seen{"1"};
  for (const auto& [g, d] : p.gens) {
    if (!seen.insert(g).second) bad("basis element '" + g + "' listed twice");
    if (d < 0 || d > p.top) bad("degree of '" + g + "' outside [0, top]");
  }
  for (const auto& [key, value] : p.table) {
    int deg = degree_of(p, key.first) + degree_of(p, key.second);
    for (const auto& [l, v] : value)
      if (degree_of(p, l) != deg)
        bad("product " + key.first + "*" + key.second + " has a term " + l + " of the wrong degree");
    auto rev = p.table.find({key.second, key.first});
    if (rev != p.table.end()) {
      int s = sign_of_parity(static_cast<long long>(degree_of(p, key.first)) * degree_of(p, key.second));
      auto expect = rev->second;
      for (auto& [l, v] : expect) v *= s;
      if (expect != value) bad("table breaks graded commutativity at " + key.first + "*" + key.second);
    }
  }
  for (const auto& [l, v] : p.counit)
    if (degree_of(p, l) != p.top) bad("counit given on '" + l + "', which is not in the top degree");
}

FrobeniusData cohomology_algebra(const RingPresentation& p) {
  check_presentation(p);
  std::map<int, std::vector<std::string>> comps;
  comps[0].push_back("1");
  for (const auto& [g, d] : p.gens) comps[d].push_back(g);
  GradedModule a = GradedModule::plain(comps);
  GradedModule a2 = tensor_power(a, 2), one = GradedModule::unit();

  std::vector<std::string> labels{"1"};
  for (const auto& [g, d] : p.gens) labels.push_back(g);
  MapBuilder mu(a2, a, 0);
  for (const auto& x : labels)
    for (const auto& y : labels)
      for (const auto& [l, v] : table_product(p, x, y)) mu.add({a.find(x), a.find(y)}, {a.find(l)}, v);
  MapBuilder eta(one, a, 0);
  eta.add(MultiIndex{}, {a.find("1")}, Rational(1));
  MapBuilder eps(a, one, -p.top);
  for (const auto& [l, v] : p.counit) eps.add({a.find(l)}, MultiIndex{}, v);
  return from_pairing(a, mu.build(), eta.build(), eps.build(), Flavor::Commutative);
}

RingPresentation sphere_presentation(int d) {
  RingPresentation p;
  p.gens = {{"a", d}};
  p.top = d;
  p.counit = {{"a", Rational(1)}};
  return p;
}

RingPresentation torus_presentation() {
  RingPresentation p;
  p.gens = {{"a", 1}, {"b", 1}, {"ab", 2}};
  p.table[{"a", "b"}] = {{"ab", Rational(1)}};
  p.top = 2;
  // <a x b, [S1] x [S1]> = (-1)^{|b|} <a,[S1]><b,[S1]>
  p.counit = {{"ab", Rational(-1)}};
  return p;
}

RingPresentation presentation_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    RingPresentation p;
    for (const auto& g : j.at("gens")) p.gens.push_back({g.at("name").get<std::string>(), g.at("deg").get<int>()});
    const nlohmann::json table = j.value("table", nlohmann::json::object());
    for (const auto& [k, v] : table.items()) {
      auto star = k.find('*');
      if (star == std::string::npos) bad("table key '" + k + "' is not of the form x*y");
      p.table[{k.substr(0, star), k.substr(star + 1)}] = parse_combination(v.get<std::string>());
    }
    p.top = j.at("top").get<int>();
    for (const auto& [k, v] : j.at("counit").items()) p.counit[k] = parse_rational(v.get<std::string>());
    check_presentation(p);
    return p;
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("ring presentation: ") + e.what());
  }
}

GradedMap thom_to_poincare(const GradedMap& nu_th, int d) {
  const GradedModule& tgt = nu_th.target();
  std::map<int, Matrix> blocks;
  for (auto [s, m] : nu_th.blocks()) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      long long i = tgt.multi_index(s + nu_th.degree(), static_cast<int>(r)).at(0).first;
      long long e = static_cast<long long>(d) * (d - 1) / 2 + d + d * i;
      if (e % 2 != 0) m.row(r) = -m.row(r);
    }
    blocks[s] = m;
  }
  return GradedMap(nu_th.source(), tgt, nu_th.degree(), blocks);
}

GradedMap desuspension_transport(const GradedMap& nu, const GradedModule& a, int d) {
  if (d < 0) bad("desuspension_transport needs d >= 0");
  GradedMap g = nu;
  GradedModule m = a;
  for (int k = 0; k < d; ++k) {
    g = desuspend_map(g, m, 1, 2);
    m = desuspend_module(m);
  }
  // d nested desuspensions list the suspension coordinates innermost first;
  // Sigma^{-d} lists them in tensor-power order.  Reversing d odd
  // coordinates costs (-1)^{d(d-1)/2}.
  Rational r(sign_of_parity(static_cast<long long>(d) * (d - 1) / 2));
  std::map<int, Matrix> blocks;
  for (const auto& [s, b] : g.blocks()) blocks[s + d] = b * r;
  return GradedMap(a, tensor_power(a, 2), g.degree() + d, blocks);
}

HHLetter unit_letter(const FrobeniusData& f) {
  Element u = f.eta.apply(Element::basis(GradedModule::unit(), 0, 0));
  if (u.coefficients().size() != 1) bad("the unit is not a multiple of a basis vector");
  return u.coefficients().begin()->first;
}

int hh_degree(const HHWord& w) {
  int deg = 0;
  for (std::size_t i = 0; i < w.size(); ++i) deg += w[i].first + (i > 0 ? 1 : 0);
  return deg;
}

HHChain hh_normalize(const HHChain& x, const FrobeniusData& f) {
  HHLetter u = unit_letter(f);
  HHChain out;
  for (const auto& [w, v] : x) {
    bool degenerate = false;
    for (std::size_t i = 1; i < w.size(); ++i) degenerate |= w[i] == u;
    if (!degenerate && v != 0) out[w] = v;
  }
  return out;
}

HHWord hh_word(const FrobeniusData& f, const std::vector<std::string>& labels) {
  if (labels.empty()) bad("a Hochschild word needs a_0");
  HHWord w;
  for (const auto& l : labels) w.push_back(f.A.find(l));
  return w;
}

std::string to_string(const HHChain& x, const FrobeniusData& f) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, v] : x) {
    if (!first) os << " + ";
    first = false;
    os << format_rational(v) << "*" << f.A.labels(w[0].first)[w[0].second] << "[";
    for (std::size_t i = 1; i < w.size(); ++i)
      os << (i > 1 ? "|" : "") << f.A.labels(w[i].first)[w[i].second];
    os << "]";
  }
  return os.str();
}

HHChain hochschild_mu(const HHWord& w1, const HHWord& w2, const FrobeniusData& f) {
  require_hh(f);
  if (w1.empty() || w2.empty()) bad("empty Hochschild word");
  HHChain out;
  if (w1.size() > 1) return out;
  Tables t(f);
  for (const auto& [a1, a2, c] : t.coproduct(f, w1[0])) {
    int s = sign_of_parity(static_cast<long long>(a1.first + f.d) * a2.first);
    for (const auto& [u, cu] : t.product(f, a2, a1))
      for (const auto& [v, cv] : t.product(f, u, w2[0])) {
        HHWord w = w2;
        w[0] = v;
        add(out, w, c * cu * cv * s);
      }
  }
  return hh_normalize(out, f);
}

HHPairChain hochschild_nu(const HHWord& w, const FrobeniusData& f) {
  require_hh(f);
  if (w.empty()) bad("empty Hochschild word");
  Tables t(f);
  HHPairChain out;
  const long long k = static_cast<long long>(w.size()) - 1;
  for (long long i = 0; i <= k; ++i)
    for (const auto& [a1, a2, c] : t.coproduct(f, w[0])) {
      long long right = a2.first;
      for (long long j = 1; j <= i; ++j) right += w[j].first;
      int s = sign_of_parity((a1.first + k - i) * right);
      HHWord left{a2}, rest{a1};
      left.insert(left.end(), w.begin() + 1, w.begin() + 1 + i);
      rest.insert(rest.end(), w.begin() + 1 + i, w.end());
      auto& slot = out[{left, rest}];
      slot += c * s;
      if (slot == 0) out.erase({left, rest});
    }
  return out;
}

Rational hochschild_eps(const HHWord& w, const FrobeniusData& f) {
  require_hh(f);
  if (w.empty()) bad("empty Hochschild word");
  if (w.size() > 1) return Rational(0);
  return f.eps.entry(w[0].first, 0, w[0].second);
}

HHChain hochschild_differential(const HHChain& x, const FrobeniusData& f) {
  require_hh(f);
  Tables t(f);
  HHChain out;
  for (const auto& [w, v] : hh_normalize(x, f)) {
    const std::size_t k = w.size() - 1;
    if (k == 0) continue;
    long long e = w[0].first;
    for (std::size_t i = 0; i < k; ++i) {
      if (i > 0) e += w[i].first + 1;
      for (const auto& [p, cp] : t.product(f, w[i], w[i + 1])) {
        HHWord nw(w.begin(), w.begin() + i);
        nw.push_back(p);
        nw.insert(nw.end(), w.begin() + i + 2, w.end());
        add(out, nw, v * cp * sign_of_parity(e));
      }
    }
    // e is now e_{k-1}
    for (const auto& [p, cp] : t.product(f, w[k], w[0])) {
      HHWord nw{p};
      nw.insert(nw.end(), w.begin() + 1, w.begin() + k);
      add(out, nw, -v * cp * sign_of_parity((w[k].first + 1) * e));
    }
  }
  return hh_normalize(out, f);
}

}  // namespace frobgraph
