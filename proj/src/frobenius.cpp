#include "frobgraph/frobenius.hpp"

#include <Eigen/LU>
#include <functional>
#include <random>
#include <sstream>

namespace frobgraph {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Planar: return "planar";
    case Flavor::Symmetric: return "symmetric";
    case Flavor::Commutative: return "commutative";
  }
  return "";
}

Flavor flavor_from_name(const std::string& name) {
  if (name == "planar") return Flavor::Planar;
  if (name == "symmetric") return Flavor::Symmetric;
  if (name == "commutative") return Flavor::Commutative;
  throw Error(ErrorKind::UnknownName, "unknown flavor '" + name + "'");
}

void check_shapes(const FrobeniusData& f) {
  if (!f.A.is_plain()) throw Error(ErrorKind::ShapeMismatch, "algebra module must be plain");
  GradedModule a2 = tensor_power(f.A, 2);
  GradedModule one = GradedModule::unit();
  auto expect = [](const GradedMap& m, const GradedModule& s, const GradedModule& t, const char* name) {
    if (m.source() != s || m.target() != t)
      throw Error(ErrorKind::ShapeMismatch, std::string(name) + " has the wrong source or target");
  };
  expect(f.mu, a2, f.A, "mu");
  expect(f.eta, one, f.A, "eta");
  expect(f.nu, f.A, a2, "nu");
  expect(f.eps, f.A, one, "eps");
  auto degree = [](const GradedMap& m, int want, const char* name) {
    if (!m.is_zero() && m.degree() != want)
      throw Error(ErrorKind::ParameterMismatch, std::string(name) + " has degree " + std::to_string(m.degree()) +
                                                    ", expected " + std::to_string(want));
  };
  degree(f.mu, f.c, "mu");
  degree(f.eta, -f.c, "eta");
  degree(f.nu, f.d, "nu");
  degree(f.eps, -f.d, "eps");
}

bool CheckReport::ok() const {
  for (const auto& r : relations)
    if (!r.ok) return false;
  return true;
}

const RelationVerdict* CheckReport::find(const std::string& prefix) const {
  for (const auto& r : relations)
    if (r.name.rfind(prefix, 0) == 0) return &r;
  return nullptr;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : relations) {
    os << (r.ok ? "pass " : "FAIL ") << r.name;
    if (!r.ok) os << "  witness " << r.witness << " (" << r.detail << ")";
    os << "\n";
  }
  if (snake) os << (*snake ? "pass " : "FAIL ") << "snake\n";
  return os.str();
}

namespace {

int sgn(long long e) { return sign_of_parity(e); }

// Label of the first source basis vector on which f and g differ.
std::optional<std::string> first_difference(const GradedMap& f, const GradedMap& g) {
  if (f == g) return std::nullopt;
  const GradedModule& s = f.source();
  const bool same_degree = f.degree() == g.degree();
  for (int deg : s.degrees()) {
    Matrix a = f.block(deg), b = g.block(deg);
    for (Eigen::Index col = 0; col < a.cols(); ++col) {
      bool differ = same_degree ? a.col(col) != b.col(col) : (!a.col(col).isZero() || !b.col(col).isZero());
      if (differ) return s.labels(deg)[static_cast<std::size_t>(col)];
    }
  }
  return std::string("?");
}

struct Signs {
  int assoc, unit_left, unit_right, unit_id;
  int coassoc, counit_left, counit_right, counit_id;
  int frob, comm;
};

Signs graded_signs(int c, int d) {
  return {sgn(c), sgn(c), 1, sgn(c * (c - 1) / 2), sgn(d), sgn(d), 1, sgn(d * (d - 1) / 2), sgn(c * d), sgn(c)};
}

Signs co_signs(int c, int d) {
  return {sgn(c), 1, sgn(c), 1, sgn(d), 1, sgn(d), 1, sgn(c * d), sgn(c)};
}

Signs unsigned_signs() { return {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}; }

struct Relation {
  RelationVerdict v;
  explicit Relation(const std::string& name) { v.name = name; }
  void require(const GradedMap& lhs, const GradedMap& rhs, const std::string& which) {
    if (!v.ok) return;
    if (auto w = first_difference(lhs, rhs)) {
      v.ok = false;
      v.witness = *w;
      v.detail = which;
    }
  }
};

CheckReport check_with(const FrobeniusData& f, const Signs& s) {
  check_shapes(f);
  const GradedModule& A = f.A;
  GradedMap id = identity(A);
  auto q = [](int k) { return Rational(k); };
  CheckReport rep;

  Relation i("(i) associativity");
  i.require(compose(f.mu, tensor_map(f.mu, id)), q(s.assoc) * compose(f.mu, tensor_map(id, f.mu)),
            "mu(mu x id) vs mu(id x mu)");
  rep.relations.push_back(i.v);

  Relation ii("(ii) unitality");
  ii.require(q(s.unit_left) * compose(f.mu, tensor_map(f.eta, id)), q(s.unit_id) * id, "mu(eta x id)");
  ii.require(q(s.unit_right) * compose(f.mu, tensor_map(id, f.eta)), q(s.unit_id) * id, "mu(id x eta)");
  rep.relations.push_back(ii.v);

  Relation iii("(iii) coassociativity");
  iii.require(compose(tensor_map(id, f.nu), f.nu), q(s.coassoc) * compose(tensor_map(f.nu, id), f.nu),
              "(id x nu)nu vs (nu x id)nu");
  rep.relations.push_back(iii.v);

  Relation iv("(iv) counitality");
  iv.require(q(s.counit_left) * compose(tensor_map(id, f.eps), f.nu), q(s.counit_id) * id, "(id x eps)nu");
  iv.require(q(s.counit_right) * compose(tensor_map(f.eps, id), f.nu), q(s.counit_id) * id, "(eps x id)nu");
  rep.relations.push_back(iv.v);

  Relation v("(v) Frobenius");
  GradedMap mid = q(s.frob) * compose(f.nu, f.mu);
  v.require(compose(tensor_map(f.mu, id), tensor_map(id, f.nu)), mid, "(mu x id)(id x nu) vs nu mu");
  v.require(compose(tensor_map(id, f.mu), tensor_map(f.nu, id)), mid, "(id x mu)(nu x id) vs nu mu");
  rep.relations.push_back(v.v);

  GradedMap tau = twist(A, A);
  if (f.flavor == Flavor::Commutative) {
    Relation vi("(vi) commutativity");
    vi.require(compose(f.mu, tau), q(s.comm) * f.mu, "mu tau vs mu");
    rep.relations.push_back(vi.v);
  }
  if (f.flavor != Flavor::Planar) {
    Relation vi2("(vi') symmetry");
    GradedMap p = compose(f.eps, f.mu);
    vi2.require(compose(p, tau), q(s.comm) * p, "eps mu tau vs eps mu");
    rep.relations.push_back(vi2.v);
  }
  rep.snake = check_snake(f);
  return rep;
}

}  // namespace

CheckReport check_relations(const FrobeniusData& f, Convention conv) {
  return check_with(f, conv == Convention::Graded ? graded_signs(f.c, f.d) : co_signs(f.c, f.d));
}

CheckReport check_unsigned(const FrobeniusData& f) { return check_with(f, unsigned_signs()); }

bool check_snake(const FrobeniusData& f) {
  GradedMap id = identity(f.A);
  GradedMap p = compose(f.eps, f.mu);
  long long c = f.c, d = f.d;
  GradedMap q = Rational(sign_of_parity(c * d + c * (c + 1) / 2 + d * (d + 1) / 2)) * compose(f.nu, f.eta);
  GradedMap l = compose(tensor_map(p, id), tensor_map(id, q));
  GradedMap r = compose(tensor_map(id, p), tensor_map(q, id));
  // the left zigzag passes p (degree c - d) across q
  return !first_difference(l, Rational(sign_of_parity(f.c - f.d)) * id) && !first_difference(r, id);
}

namespace {

std::vector<std::pair<int, int>> basis_of(const GradedModule& a) {
  std::vector<std::pair<int, int>> out;
  for (int d : a.degrees())
    for (int i = 0; i < a.rank(d); ++i) out.push_back({d, i});
  return out;
}

std::string describe(const GradedModule& a, const std::vector<std::pair<int, int>>& basis, const Matrix& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    if (v(i, 0) == 0) continue;
    if (!out.empty()) out += " + ";
    out += format_rational(v(i, 0)) + "*" + a.labels(basis[i].first)[basis[i].second];
  }
  return out;
}

}  // namespace

FrobeniusData from_pairing(const GradedModule& a, const GradedMap& mu, const GradedMap& eta, const GradedMap& eps,
                           Flavor flavor) {
  FrobeniusData f;
  f.A = a;
  f.mu = mu;
  f.eta = eta;
  f.eps = eps;
  f.c = mu.degree();
  f.d = -eps.degree();
  f.flavor = flavor;
  f.nu = zero_map(a, tensor_power(a, 2), f.d);
  check_shapes(f);
  CheckReport pre = check_relations(f);
  for (const char* name : {"(i)", "(ii)"}) {
    const RelationVerdict* v = pre.find(name);
    if (!v->ok) throw Error(ErrorKind::RelationFailure, v->name + " fails at " + v->witness);
  }

  GradedModule a2 = tensor_power(a, 2);
  GradedMap p = compose(eps, mu);
  int np = f.c - f.d;
  auto basis = basis_of(a);
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  Matrix P = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      auto [deg, pos] = a2.locate({basis[j], basis[k]});
      P(j, k) = p.entry(deg, 0, pos);
    }
  Eigen::FullPivLU<Matrix> lu(P);
  if (!lu.isInvertible()) {
    Matrix ker = lu.kernel();
    throw Error(ErrorKind::DegeneratePairing,
                "pairing is degenerate; kernel contains " + describe(a, basis, ker.col(0)));
  }
  Matrix Qp = lu.inverse();
  MapBuilder qb(GradedModule::unit(), a2, -np);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (Qp(i, j) != 0)
        qb.add(MultiIndex{}, MultiIndex{basis[i], basis[j]},
               Qp(i, j) * sgn(static_cast<long long>(np) * basis[i].first));
  GradedMap q = qb.build();
  GradedMap id = identity(a);
  f.nu = Rational(sgn(static_cast<long long>(f.d) * (f.d + 1) / 2)) * compose(tensor_map(id, mu), tensor_map(q, id));
  CheckReport post = check_relations(f);
  if (!post.ok()) throw Error(ErrorKind::RelationFailure, "constructed comultiplication fails:\n" + post.to_text());
  return f;
}

FrobeniusData unit_algebra() {
  FrobeniusData f;
  f.A = GradedModule::line(0, "1");
  GradedModule a2 = tensor_power(f.A, 2);
  GradedModule one = GradedModule::unit();
  auto single = [](const GradedModule& s, const GradedModule& t) {
    MapBuilder b(s, t, 0);
    b.add(0, 0, 0, Rational(1));
    return b.build();
  };
  f.mu = single(a2, f.A);
  f.eta = single(one, f.A);
  f.nu = single(f.A, a2);
  f.eps = single(f.A, one);
  f.flavor = Flavor::Commutative;
  return f;
}

FrobeniusData builtin_Rcd(int c, int d) {
  if (c + d == 0) {
    FrobeniusData f = unit_algebra();
    for (int i = 0; i < d; ++i) f = suspend_algebra(f);
    for (int i = 0; i < -d; ++i) f = desuspend_algebra(f);
    return f;
  }
  FrobeniusData f;
  f.c = c;
  f.d = d;
  f.flavor = Flavor::Commutative;
  f.A = GradedModule::plain({{-c, {"x"}}, {d, {"y"}}});
  GradedModule a2 = tensor_power(f.A, 2);
  GradedModule one = GradedModule::unit();
  const FactorIndex x{-c, 0}, y{d, 0};
  const int cc = sgn(c * (c + 1) / 2);

  MapBuilder mu(a2, f.A, c);
  mu.add({x, y}, {y}, Rational(cc));
  mu.add({y, x}, {y}, Rational(sgn(c * d + c * (c - 1) / 2)));
  mu.add({x, x}, {x}, Rational(cc));
  f.mu = mu.build();

  MapBuilder eta(one, f.A, -c);
  eta.add(MultiIndex{}, {x}, Rational(1));
  f.eta = eta.build();

  MapBuilder nu(f.A, a2, d);
  nu.add({x}, {x, y}, Rational(sgn(c * d + d * (d + 1) / 2)));
  nu.add({x}, {y, x}, Rational(sgn(d * (d - 1) / 2)));
  nu.add({y}, {y, y}, Rational(sgn(d * (d - 1) / 2)));
  f.nu = nu.build();

  MapBuilder eps(f.A, one, -d);
  eps.add({y}, MultiIndex{}, Rational(1));
  f.eps = eps.build();
  return f;
}

FrobeniusData suspend_algebra(const FrobeniusData& f) {
  FrobeniusData g;
  g.A = suspend_module(f.A);
  g.mu = suspend_map(f.mu, f.A, 2, 1);
  g.eta = suspend_map(f.eta, f.A, 0, 1);
  g.nu = suspend_map(f.nu, f.A, 1, 2);
  g.eps = suspend_map(f.eps, f.A, 1, 0);
  g.c = f.c - 1;
  g.d = f.d + 1;
  g.flavor = f.flavor;
  return g;
}

FrobeniusData desuspend_algebra(const FrobeniusData& f) {
  FrobeniusData g;
  g.A = desuspend_module(f.A);
  g.mu = desuspend_map(f.mu, f.A, 2, 1);
  g.eta = desuspend_map(f.eta, f.A, 0, 1);
  g.nu = desuspend_map(f.nu, f.A, 1, 2);
  g.eps = desuspend_map(f.eps, f.A, 1, 0);
  g.c = f.c + 1;
  g.d = f.d - 1;
  g.flavor = f.flavor;
  return g;
}

FrobeniusData tensor_algebras(const FrobeniusData& f1, const FrobeniusData& f2) {
  const GradedModule& A = f1.A;
  const GradedModule& B = f2.A;
  GradedModule AB = tensor_module(A, B);
  GradedMap ia = identity(A), ib = identity(B);
  // (A x B) x (A x B) -> (A x A) x (B x B) and back
  GradedMap shuffle_in = tensor_map(tensor_map(ia, twist(B, A)), ib);
  GradedMap shuffle_out = tensor_map(tensor_map(ia, twist(A, B)), ib);
  GradedMap mu = compose(tensor_map(f1.mu, f2.mu), shuffle_in);
  GradedMap nu = compose(shuffle_out, tensor_map(f1.nu, f2.nu));
  FrobeniusData f;
  f.A = flatten(AB);
  f.mu = flatten_power_map(mu, AB, 2, 1);
  f.eta = flatten_power_map(tensor_map(f1.eta, f2.eta), AB, 0, 1);
  f.nu = flatten_power_map(nu, AB, 1, 2);
  f.eps = flatten_power_map(tensor_map(f1.eps, f2.eps), AB, 1, 0);
  f.c = f1.c + f2.c;
  f.d = f1.d + f2.d;
  f.flavor = std::min(f1.flavor, f2.flavor);
  return f;
}

FrobeniusData one_sided_extend(const FrobeniusData& f) { return tensor_algebras(f, builtin_Rcd(0, 1)); }

std::string TrivialityReport::to_text() const {
  std::ostringstream os;
  os << "|mu|-|nu| = " << c - d << "\n";
  for (const auto& k : cases)
    os << "rank " << k.rank << " |alpha_1| = " << k.alpha_degree << ": " << k.from_right << " vs " << k.from_left
       << (k.from_right != k.from_left ? "  contradiction" : "") << "\n";
  os << "surviving ranks:";
  for (int r : surviving_ranks) os << " " << r;
  os << "\n";
  return os.str();
}

TrivialityReport triviality_probe(int c, int d, int max_rank, int deg_lo, int deg_hi) {
  TrivialityReport rep;
  rep.c = c;
  rep.d = d;
  rep.surviving_ranks.push_back(0);
  const long long n = static_cast<long long>(c) - d;
  for (int k = 1; k <= max_rank; ++k) {
    bool survives = false;
    for (int a = deg_lo; a <= deg_hi; ++a) {
      // alpha_1 = sum_j (-1)^{n|alpha_j|} alpha_j p(beta_j x alpha_1) reads off the alpha_1 coefficient;
      // beta_1 = (-1)^{n|beta_1|} sum_j p(beta_1 x alpha_j) beta_j with |beta_1| = -n - |alpha_1|.
      int right = sgn(n * a);
      int left = sgn(n * (-n - a));
      rep.cases.push_back({k, a, right, left});
      if (right == left) survives = true;
    }
    if (survives) rep.surviving_ranks.push_back(k);
  }
  return rep;
}

namespace {

// Integer prefilter for unsigned (co)unitality on a plain module with basis
// degrees `deg` (sorted).  Index conventions follow the module's basis order.
struct SmallModule {
  std::vector<int> deg;
  GradedModule module;
  std::vector<FactorIndex> fi;
};

SmallModule small_module(const std::vector<int>& degs) {
  SmallModule m;
  m.deg = degs;
  std::map<int, std::vector<std::string>> comps;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    auto& l = comps[degs[i]];
    m.fi.push_back({degs[i], static_cast<int>(l.size())});
    l.push_back("a" + std::to_string(i));
  }
  m.module = GradedModule::plain(comps);
  return m;
}

// Odometer over {-1,0,1}^n.
bool next_choice(std::vector<int>& v) {
  for (auto& x : v) {
    if (x < 1) {
      ++x;
      return true;
    }
    x = -1;
  }
  return false;
}

struct Slots {
  std::vector<std::vector<int>> index;  // positions of the allowed entries
};

struct MulUnit {
  std::vector<int> m;  // m[(i*r + j)*r + k]
  std::vector<int> e;
};
struct ComulCounit {
  std::vector<int> n;  // n[(i*r + j)*r + k]: alpha_i -> alpha_j x alpha_k
  std::vector<int> f;
};

FrobeniusData build_candidate(const SmallModule& sm, int c, int d, const MulUnit& mu, const ComulCounit& nu) {
  const int r = static_cast<int>(sm.deg.size());
  FrobeniusData f;
  f.A = sm.module;
  f.c = c;
  f.d = d;
  GradedModule a2 = tensor_power(f.A, 2);
  GradedModule one = GradedModule::unit();
  MapBuilder bm(a2, f.A, c), be(one, f.A, -c), bn(f.A, a2, d), bf(f.A, one, -d);
  for (int i = 0; i < r; ++i) {
    if (mu.e[i]) be.add(MultiIndex{}, {sm.fi[i]}, Rational(mu.e[i]));
    if (nu.f[i]) bf.add({sm.fi[i]}, MultiIndex{}, Rational(nu.f[i]));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        int idx = (i * r + j) * r + k;
        if (mu.m[idx]) bm.add({sm.fi[i], sm.fi[j]}, {sm.fi[k]}, Rational(mu.m[idx]));
        if (nu.n[idx]) bn.add({sm.fi[i]}, {sm.fi[j], sm.fi[k]}, Rational(nu.n[idx]));
      }
  }
  f.mu = bm.build();
  f.eta = be.build();
  f.nu = bn.build();
  f.eps = bf.build();
  return f;
}

}  // namespace

BruteForceReport brute_force_unsigned(int c, int d, int max_rank, int lo, int hi, unsigned seed) {
  BruteForceReport rep;
  std::mt19937 rng(seed);
  std::function<void(std::vector<int>&, int)> each_module;
  std::vector<std::vector<int>> shapes;
  each_module = [&](std::vector<int>& cur, int from) {
    if (!cur.empty()) shapes.push_back(cur);
    if (static_cast<int>(cur.size()) == max_rank) return;
    for (int a = from; a <= hi; ++a) {
      cur.push_back(a);
      each_module(cur, a);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  each_module(cur, lo);

  for (const auto& degs : shapes) {
    ++rep.modules;
    SmallModule sm = small_module(degs);
    const int r = static_cast<int>(degs.size());
    std::vector<int> e_slots, m_slots, f_slots, n_slots;
    for (int i = 0; i < r; ++i) {
      if (degs[i] == -c) e_slots.push_back(i);
      if (degs[i] == d) f_slots.push_back(i);
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
          if (degs[i] + degs[j] + c == degs[k]) m_slots.push_back((i * r + j) * r + k);
          if (degs[i] + d == degs[j] + degs[k]) n_slots.push_back((i * r + j) * r + k);
        }
    }
    auto expand = [&](const std::vector<int>& slots, const std::vector<int>& vals, int size) {
      std::vector<int> out(size, 0);
      for (std::size_t s = 0; s < slots.size(); ++s) out[slots[s]] = vals[s];
      return out;
    };

    std::vector<MulUnit> units, all_units;
    std::vector<int> vm(m_slots.size(), -1), ve(e_slots.size(), -1);
    do {
      do {
        MulUnit u{expand(m_slots, vm, r * r * r), expand(e_slots, ve, r)};
        bool ok = true;
        for (int j = 0; j < r && ok; ++j)
          for (int k = 0; k < r && ok; ++k) {
            int left = 0, right = 0;
            for (int i = 0; i < r; ++i) {
              left += u.e[i] * u.m[(i * r + j) * r + k];
              right += u.e[i] * u.m[(j * r + i) * r + k];
            }
            right *= sgn(static_cast<long long>(-c) * degs[j]);
            int want = j == k ? 1 : 0;
            ok = left == want && right == want;
          }
        if (ok) units.push_back(u);
        if (all_units.size() < 64 || std::uniform_int_distribution<int>(0, 99)(rng) == 0) all_units.push_back(u);
      } while (next_choice(ve));
    } while (next_choice(vm));

    std::vector<ComulCounit> counits, all_counits;
    std::vector<int> vn(n_slots.size(), -1), vf(f_slots.size(), -1);
    do {
      do {
        ComulCounit u{expand(n_slots, vn, r * r * r), expand(f_slots, vf, r)};
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
          for (int t = 0; t < r && ok; ++t) {
            int left = 0, right = 0;
            for (int j = 0; j < r; ++j)
              for (int k = 0; k < r; ++k) {
                int nv = u.n[(i * r + j) * r + k];
                if (!nv) continue;
                if (j == t) left += nv * u.f[k] * sgn(static_cast<long long>(-d) * degs[j]);
                if (k == t) right += nv * u.f[j];
              }
            int want = i == t ? 1 : 0;
            ok = left == want && right == want;
          }
        if (ok) counits.push_back(u);
        if (all_counits.size() < 64 || std::uniform_int_distribution<int>(0, 99)(rng) == 0) all_counits.push_back(u);
      } while (next_choice(vf));
    } while (next_choice(vn));

    long long mu_space = 1, nu_space = 1;
    for (std::size_t s = 0; s < m_slots.size() + e_slots.size(); ++s) mu_space *= 3;
    for (std::size_t s = 0; s < n_slots.size() + f_slots.size(); ++s) nu_space *= 3;
    rep.candidates += mu_space * nu_space;

    for (const auto& u : units)
      for (const auto& v : counits) {
        ++rep.checked;
        if (check_unsigned(build_candidate(sm, c, d, u, v)).ok()) ++rep.accepted;
      }
    // A sample of prefilter rejections must be rejected by the full checker too.
    for (int s = 0; s < 8; ++s) {
      const auto& u = all_units[std::uniform_int_distribution<std::size_t>(0, all_units.size() - 1)(rng)];
      const auto& v = all_counits[std::uniform_int_distribution<std::size_t>(0, all_counits.size() - 1)(rng)];
      ++rep.checked;
      if (check_unsigned(build_candidate(sm, c, d, u, v)).ok()) ++rep.accepted;
    }
  }
  return rep;
}

FrobeniusData convert_convention(const FrobeniusData& f, ConventionDirection dir) {
  Convention from =
      dir == ConventionDirection::ToCieliebakOancea ? Convention::Graded : Convention::CieliebakOancea;
  CheckReport pre = check_relations(f, from);
  if (!pre.ok()) throw Error(ErrorKind::RelationFailure, "source relations fail:\n" + pre.to_text());
  FrobeniusData g = f;
  g.mu = Rational(sgn(static_cast<long long>(f.c) * (f.c + 1) / 2)) * f.mu;
  g.nu = Rational(sgn(static_cast<long long>(f.d) * (f.d + 1) / 2)) * f.nu;
  return g;
}

}  // namespace frobgraph
