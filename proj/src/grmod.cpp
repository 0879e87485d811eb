#include "frobgraph/grmod.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace frobgraph {

Rational parse_rational(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_start) throw Error(ErrorKind::InvalidInput, "not a rational: '" + s + "'");
  if (i < s.size()) {
    if (s[i] != '/') throw Error(ErrorKind::InvalidInput, "not a rational: '" + s + "'");
    ++i;
    std::size_t den_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start || i != s.size())
      throw Error(ErrorKind::InvalidInput, "not a rational: '" + s + "'");
    if (s.find_first_not_of('0', den_start) == std::string::npos)
      throw Error(ErrorKind::InvalidInput, "zero denominator: '" + s + "'");
  }
  std::string t = (s[0] == '+') ? s.substr(1) : s;
  Rational q(t);
  return q;
}

std::string format_rational(const Rational& q) { return q.str(); }

int checked_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "degree overflow");
  return r;
}

int checked_mul(int a, int b) {
  int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "degree overflow");
  return r;
}

struct GradedModule::Impl {
  std::vector<Factor> factors;
  std::map<int, std::vector<MultiIndex>> basis;
  std::map<int, std::vector<std::string>> labels;
  std::map<MultiIndex, std::pair<int, int>> lookup;
};

namespace {

void validate_factor(const Factor& f) {
  for (const auto& [deg, labels] : f.components) {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::InvalidInput,
                  "duplicate basis label in degree " + std::to_string(deg));
  }
}

Factor normalized(Factor f) {
  for (auto it = f.components.begin(); it != f.components.end();) {
    if (it->second.empty())
      it = f.components.erase(it);
    else
      ++it;
  }
  return f;
}

void enumerate(const std::vector<Factor>& factors, std::size_t at, MultiIndex& cur, int deg,
               std::vector<std::string>& label_parts, GradedModule::Impl& out) {
  if (at == factors.size()) {
    auto& list = out.basis[deg];
    out.lookup[cur] = {deg, static_cast<int>(list.size())};
    list.push_back(cur);
    std::string label;
    for (std::size_t i = 0; i < label_parts.size(); ++i) {
      if (i) label += "⊗";
      label += label_parts[i];
    }
    out.labels[deg].push_back(factors.empty() ? "1" : label);
    return;
  }
  for (const auto& [d, labels] : factors[at].components) {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      cur.push_back({d, i});
      label_parts.push_back(labels[i]);
      enumerate(factors, at + 1, cur, checked_add(deg, d), label_parts, out);
      label_parts.pop_back();
      cur.pop_back();
    }
  }
}

std::shared_ptr<const GradedModule::Impl> make_impl(std::vector<Factor> factors) {
  auto impl = std::make_shared<GradedModule::Impl>();
  for (auto& f : factors) {
    validate_factor(f);
    impl->factors.push_back(normalized(std::move(f)));
  }
  MultiIndex cur;
  std::vector<std::string> parts;
  enumerate(impl->factors, 0, cur, 0, parts, *impl);
  return impl;
}

bool outer_parens(const std::string& s, const std::string& prefix) {
  if (s.size() < prefix.size() + 1 || s.compare(0, prefix.size(), prefix) != 0 || s.back() != ')')
    return false;
  int depth = 0;
  for (std::size_t i = prefix.size() - 1; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 1 != s.size()) return false;
  }
  return depth == 0;
}

std::string suspend_label(const std::string& s) {
  const std::string inv = "s⁻¹(";
  if (outer_parens(s, inv)) return s.substr(inv.size(), s.size() - inv.size() - 1);
  return "s(" + s + ")";
}

std::string desuspend_label(const std::string& s) {
  if (outer_parens(s, "s(")) return s.substr(2, s.size() - 3);
  return "s⁻¹(" + s + ")";
}

std::string dual_label(const std::string& s) {
  const std::string mark = "^∨";
  if (s.size() >= mark.size() && s.compare(s.size() - mark.size(), mark.size(), mark) == 0)
    return s.substr(0, s.size() - mark.size());
  return s + mark;
}

Factor shifted(const Factor& f, int by, std::string (*relabel)(const std::string&)) {
  Factor out;
  for (const auto& [d, labels] : f.components) {
    auto& dst = out.components[checked_add(d, by)];
    for (const auto& l : labels) dst.push_back(relabel(l));
  }
  return out;
}

}  // namespace

GradedModule::GradedModule() : impl_(make_impl({})) {}

GradedModule::GradedModule(std::vector<Factor> factors) : impl_(make_impl(std::move(factors))) {}

GradedModule GradedModule::plain(const std::map<int, std::vector<std::string>>& components) {
  return GradedModule(std::vector<Factor>{Factor{components}});
}

GradedModule GradedModule::line(int degree, const std::string& label) {
  return plain({{degree, {label}}});
}

const std::vector<Factor>& GradedModule::factors() const { return impl_->factors; }

std::vector<int> GradedModule::degrees() const {
  std::vector<int> out;
  for (const auto& [d, list] : impl_->basis) out.push_back(d);
  return out;
}

int GradedModule::rank(int degree) const {
  auto it = impl_->basis.find(degree);
  return it == impl_->basis.end() ? 0 : static_cast<int>(it->second.size());
}

int GradedModule::total_rank() const {
  int r = 0;
  for (const auto& [d, list] : impl_->basis) r += static_cast<int>(list.size());
  return r;
}

const std::vector<std::string>& GradedModule::labels(int degree) const {
  static const std::vector<std::string> empty;
  auto it = impl_->labels.find(degree);
  return it == impl_->labels.end() ? empty : it->second;
}

const MultiIndex& GradedModule::multi_index(int degree, int pos) const {
  auto it = impl_->basis.find(degree);
  if (it == impl_->basis.end() || pos < 0 || pos >= static_cast<int>(it->second.size()))
    throw Error(ErrorKind::InvalidInput, "no basis vector at degree " + std::to_string(degree));
  return it->second[pos];
}

std::pair<int, int> GradedModule::locate(const MultiIndex& mi) const {
  auto it = impl_->lookup.find(mi);
  if (it == impl_->lookup.end()) throw Error(ErrorKind::InvalidInput, "unknown multi-index");
  return it->second;
}

std::pair<int, int> GradedModule::find(const std::string& label) const {
  for (const auto& [d, labels] : impl_->labels)
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      if (labels[i] == label) return {d, i};
  throw Error(ErrorKind::InvalidInput, "no basis vector labelled '" + label + "'");
}

std::map<int, std::vector<std::string>> GradedModule::components() const { return impl_->labels; }

bool GradedModule::operator==(const GradedModule& o) const {
  return impl_ == o.impl_ || impl_->factors == o.impl_->factors;
}

GradedModule tensor_module(const GradedModule& a, const GradedModule& b) {
  std::vector<Factor> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return GradedModule(std::move(f));
}

GradedModule tensor_power(const GradedModule& a, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "negative tensor power");
  GradedModule out;
  for (int i = 0; i < k; ++i) out = tensor_module(out, a);
  return out;
}

GradedModule flatten(const GradedModule& a) {
  if (a.is_plain()) return a;
  return GradedModule::plain(a.components());
}

GradedModule suspend_module(const GradedModule& a) {
  return GradedModule(std::vector<Factor>{shifted(flatten(a).factors()[0], 1, suspend_label)});
}

GradedModule desuspend_module(const GradedModule& a) {
  return GradedModule(std::vector<Factor>{shifted(flatten(a).factors()[0], -1, desuspend_label)});
}

GradedModule dual_module(const GradedModule& a) {
  std::vector<Factor> out;
  for (auto it = a.factors().rbegin(); it != a.factors().rend(); ++it) {
    Factor f;
    for (const auto& [d, labels] : it->components) {
      auto& dst = f.components[checked_mul(d, -1)];
      for (const auto& l : labels) dst.push_back(dual_label(l));
    }
    out.push_back(std::move(f));
  }
  return GradedModule(std::move(out));
}

Element::Element(GradedModule m, std::map<std::pair<int, int>, Rational> coeffs)
    : module_(std::move(m)) {
  for (auto& [k, v] : coeffs) {
    if (k.second < 0 || k.second >= module_.rank(k.first))
      throw Error(ErrorKind::InvalidInput, "coefficient at a missing basis slot");
    if (v != 0) coeffs_[k] = v;
  }
}

Element Element::basis(const GradedModule& m, int degree, int pos) {
  return Element(m, {{{degree, pos}, Rational(1)}});
}

Rational Element::coefficient(int degree, int pos) const {
  auto it = coeffs_.find({degree, pos});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

bool Element::is_homogeneous() const {
  if (coeffs_.empty()) return true;
  return coeffs_.begin()->first.first == coeffs_.rbegin()->first.first;
}

int Element::degree() const {
  if (coeffs_.empty() || !is_homogeneous())
    throw Error(ErrorKind::InvalidInput, "degree of a zero or inhomogeneous element");
  return coeffs_.begin()->first.first;
}

Element Element::operator+(const Element& o) const {
  if (module_ != o.module_) throw Error(ErrorKind::ShapeMismatch, "adding elements of different modules");
  auto c = coeffs_;
  for (const auto& [k, v] : o.coeffs_) c[k] += v;
  return Element(module_, c);
}

Element Element::operator*(const Rational& q) const {
  auto c = coeffs_;
  for (auto& [k, v] : c) v *= q;
  return Element(module_, c);
}

GradedMap::GradedMap(GradedModule source, GradedModule target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {}

GradedMap::GradedMap(GradedModule source, GradedModule target, int degree,
                     std::map<int, Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
  for (auto& [i, m] : blocks) {
    int rows = target_.rank(checked_add(i, degree_));
    int cols = source_.rank(i);
    if (m.rows() != rows || m.cols() != cols)
      throw Error(ErrorKind::ShapeMismatch,
                  "block at source degree " + std::to_string(i) + " has shape " +
                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                      std::to_string(rows) + "x" + std::to_string(cols));
    bool nonzero = false;
    for (Eigen::Index r = 0; r < m.rows() && !nonzero; ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0) {
          nonzero = true;
          break;
        }
    if (nonzero) blocks_.emplace(i, std::move(m));
  }
}

Matrix GradedMap::block(int source_degree) const {
  auto it = blocks_.find(source_degree);
  if (it != blocks_.end()) return it->second;
  return Matrix::Zero(target_.rank(checked_add(source_degree, degree_)), source_.rank(source_degree));
}

Rational GradedMap::entry(int source_degree, int row, int col) const {
  auto it = blocks_.find(source_degree);
  if (it == blocks_.end()) return Rational(0);
  return it->second(row, col);
}

Element GradedMap::apply(const Element& x) const {
  if (x.module() != source_) throw Error(ErrorKind::ShapeMismatch, "element not in the source");
  std::map<std::pair<int, int>, Rational> out;
  for (const auto& [k, v] : x.coefficients()) {
    auto it = blocks_.find(k.first);
    if (it == blocks_.end()) continue;
    int td = k.first + degree_;
    for (Eigen::Index r = 0; r < it->second.rows(); ++r) {
      const Rational& m = it->second(r, k.second);
      if (m != 0) out[{td, static_cast<int>(r)}] += m * v;
    }
  }
  return Element(target_, out);
}

bool GradedMap::operator==(const GradedMap& o) const {
  return source_ == o.source_ && target_ == o.target_ &&
         (degree_ == o.degree_ || (blocks_.empty() && o.blocks_.empty())) && blocks_ == o.blocks_;
}

MapBuilder::MapBuilder(GradedModule source, GradedModule target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {}

void MapBuilder::add(int sdeg, int spos, int tpos, const Rational& v) {
  if (v == 0) return;
  auto it = blocks_.find(sdeg);
  if (it == blocks_.end()) {
    Matrix z = Matrix::Zero(target_.rank(checked_add(sdeg, degree_)), source_.rank(sdeg));
    it = blocks_.emplace(sdeg, std::move(z)).first;
  }
  if (spos < 0 || spos >= it->second.cols() || tpos < 0 || tpos >= it->second.rows())
    throw Error(ErrorKind::ShapeMismatch, "entry outside the block");
  it->second(tpos, spos) += v;
}

void MapBuilder::add(const MultiIndex& src, const MultiIndex& tgt, const Rational& v) {
  auto [sd, sp] = source_.locate(src);
  auto [td, tp] = target_.locate(tgt);
  if (td != sd + degree_) throw Error(ErrorKind::ShapeMismatch, "entry of the wrong degree");
  add(sd, sp, tp, v);
}

GradedMap MapBuilder::build() const { return GradedMap(source_, target_, degree_, blocks_); }

GradedMap identity(const GradedModule& a) {
  std::map<int, Matrix> blocks;
  for (int d : a.degrees()) blocks[d] = Matrix::Identity(a.rank(d), a.rank(d));
  return GradedMap(a, a, 0, std::move(blocks));
}

GradedMap zero_map(const GradedModule& source, const GradedModule& target, int degree) {
  return GradedMap(source, target, degree);
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (f.source() != g.target())
    throw Error(ErrorKind::ShapeMismatch, "compose: source of f differs from target of g");
  int deg = checked_add(f.degree(), g.degree());
  std::map<int, Matrix> blocks;
  for (const auto& [i, gb] : g.blocks()) {
    auto it = f.blocks().find(i + g.degree());
    if (it == f.blocks().end()) continue;
    blocks[i] = it->second * gb;
  }
  return GradedMap(g.source(), f.target(), deg, std::move(blocks));
}

namespace {

struct Entry {
  int tdeg;
  int tpos;
  Rational value;
};

// Nonzero entries of every column, keyed by source basis (degree, pos).
std::map<std::pair<int, int>, std::vector<Entry>> columns(const GradedMap& f) {
  std::map<std::pair<int, int>, std::vector<Entry>> out;
  for (const auto& [i, m] : f.blocks())
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        if (m(r, c) != 0)
          out[{i, static_cast<int>(c)}].push_back({i + f.degree(), static_cast<int>(r), m(r, c)});
  return out;
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

GradedMap tensor_map(const GradedMap& f, const GradedMap& g) {
  GradedModule src = tensor_module(f.source(), g.source());
  GradedModule tgt = tensor_module(f.target(), g.target());
  MapBuilder b(src, tgt, checked_add(f.degree(), g.degree()));
  auto fc = columns(f);
  auto gc = columns(g);
  for (const auto& [fa, fentries] : fc) {
    const MultiIndex& fa_mi = f.source().multi_index(fa.first, fa.second);
    int sign = sign_of_parity(static_cast<long long>(g.degree()) * fa.first);
    for (const auto& [gb, gentries] : gc) {
      MultiIndex smi = concat(fa_mi, g.source().multi_index(gb.first, gb.second));
      for (const auto& fe : fentries)
        for (const auto& ge : gentries) {
          MultiIndex tmi = concat(f.target().multi_index(fe.tdeg, fe.tpos),
                                  g.target().multi_index(ge.tdeg, ge.tpos));
          b.add(smi, tmi, fe.value * ge.value * sign);
        }
    }
  }
  return b.build();
}

GradedMap twist(const GradedModule& a, const GradedModule& b) {
  MapBuilder out(tensor_module(a, b), tensor_module(b, a), 0);
  for (int i : a.degrees())
    for (int p = 0; p < a.rank(i); ++p)
      for (int j : b.degrees())
        for (int q = 0; q < b.rank(j); ++q) {
          const MultiIndex& ami = a.multi_index(i, p);
          const MultiIndex& bmi = b.multi_index(j, q);
          out.add(concat(ami, bmi), concat(bmi, ami),
                  Rational(sign_of_parity(static_cast<long long>(i) * j)));
        }
  return out.build();
}

GradedMap operator+(const GradedMap& f, const GradedMap& g) {
  if (f.source() != g.source() || f.target() != g.target())
    throw Error(ErrorKind::ShapeMismatch, "adding maps with different shapes");
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() != g.degree()) throw Error(ErrorKind::ShapeMismatch, "adding maps of different degrees");
  std::map<int, Matrix> blocks = f.blocks();
  for (const auto& [i, m] : g.blocks()) {
    auto it = blocks.find(i);
    if (it == blocks.end())
      blocks[i] = m;
    else
      it->second += m;
  }
  return GradedMap(f.source(), f.target(), f.degree(), std::move(blocks));
}

GradedMap operator*(const Rational& q, const GradedMap& f) {
  std::map<int, Matrix> blocks = f.blocks();
  for (auto& [i, m] : blocks) m *= q;
  return GradedMap(f.source(), f.target(), f.degree(), std::move(blocks));
}

GradedMap operator-(const GradedMap& f) { return Rational(-1) * f; }

GradedMap operator-(const GradedMap& f, const GradedMap& g) { return f + (-g); }

namespace {

// Splits a multi-index of A^{(x)k} into k flattened (degree, pos) pairs of A.
std::vector<std::pair<int, int>> split_power(const GradedModule& a, const MultiIndex& mi, int k) {
  std::size_t m = a.factors().size();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k; ++i) {
    MultiIndex part(mi.begin() + i * m, mi.begin() + (i + 1) * m);
    out.push_back(a.locate(part));
  }
  return out;
}

// Koszul sign of moving k suspension letters of degree one to the front.
long long front_parity(const std::vector<std::pair<int, int>>& xs) {
  long long e = 0;
  int k = static_cast<int>(xs.size());
  for (int i = 0; i < k; ++i) e += static_cast<long long>(xs[i].first) * (k - 1 - i);
  return e;
}

void check_power_shape(const GradedMap& f, const GradedModule& a, int k, int l) {
  if (k < 0 || l < 0) throw Error(ErrorKind::ShapeMismatch, "negative arity");
  if (f.source() != tensor_power(a, k) || f.target() != tensor_power(a, l))
    throw Error(ErrorKind::ShapeMismatch, "map is not between the declared tensor powers");
}

// Shared body of suspend_map and desuspend_map: entries of the new map are
// (-1)^{|g| k + e_k(a) + e_l(b)} times the old ones, degrees taken in the
// unsuspended module.
GradedMap shift_map(const GradedMap& f, const GradedModule& a, const GradedModule& na, int k, int l,
                    int new_degree, int g_degree, int unsusp_offset_old, int unsusp_offset_new) {
  GradedModule src = tensor_power(na, k);
  GradedModule tgt = tensor_power(na, l);
  MapBuilder b(src, tgt, new_degree);
  auto to_new = [&](const std::vector<std::pair<int, int>>& xs, int shift) {
    MultiIndex mi;
    for (auto [d, p] : xs) mi.push_back({d + shift, p});
    return mi;
  };
  for (const auto& [col, entries] : columns(f)) {
    auto xs = split_power(a, f.source().multi_index(col.first, col.second), k);
    std::vector<std::pair<int, int>> base_a;
    for (auto [d, p] : xs) base_a.push_back({d - unsusp_offset_old, p});
    long long ea = front_parity(base_a) + static_cast<long long>(g_degree) * k;
    MultiIndex smi = to_new(xs, unsusp_offset_new - unsusp_offset_old);
    for (const auto& e : entries) {
      auto ys = split_power(a, f.target().multi_index(e.tdeg, e.tpos), l);
      std::vector<std::pair<int, int>> base_b;
      for (auto [d, p] : ys) base_b.push_back({d - unsusp_offset_old, p});
      long long eb = front_parity(base_b);
      MultiIndex tmi = to_new(ys, unsusp_offset_new - unsusp_offset_old);
      b.add(smi, tmi, e.value * sign_of_parity(ea + eb));
    }
  }
  return b.build();
}

}  // namespace

GradedMap flatten_power_map(const GradedMap& f, const GradedModule& a, int k, int l) {
  check_power_shape(f, a, k, l);
  if (a.is_plain()) return f;
  GradedModule fa = flatten(a);
  // bases correspond one to one
  MapBuilder b(tensor_power(fa, k), tensor_power(fa, l), f.degree());
  for (const auto& [col, entries] : columns(f)) {
    auto xs = split_power(a, f.source().multi_index(col.first, col.second), k);
    MultiIndex smi(xs.begin(), xs.end());
    for (const auto& e : entries) {
      auto ys = split_power(a, f.target().multi_index(e.tdeg, e.tpos), l);
      b.add(smi, MultiIndex(ys.begin(), ys.end()), e.value);
    }
  }
  return b.build();
}

GradedMap suspend_map(const GradedMap& f, const GradedModule& a, int k, int l) {
  GradedModule fa = flatten(a);
  GradedMap ff = flatten_power_map(f, a, k, l);
  int new_degree = checked_add(f.degree(), l - k);
  return shift_map(ff, fa, suspend_module(fa), k, l, new_degree, f.degree(), 0, 1);
}

GradedMap desuspend_map(const GradedMap& f, const GradedModule& a, int k, int l) {
  check_power_shape(f, a, k, l);
  if (!a.is_plain()) throw Error(ErrorKind::ShapeMismatch, "desuspension needs a plain module");
  int g_degree = checked_add(f.degree(), k - l);
  return shift_map(f, a, desuspend_module(a), k, l, g_degree, g_degree, 1, 0);
}

GradedMap dual_map(const GradedMap& f) {
  GradedModule src = dual_module(f.target());
  GradedModule tgt = dual_module(f.source());
  MapBuilder b(src, tgt, f.degree());
  auto dual_mi = [](const MultiIndex& mi) {
    MultiIndex out(mi.rbegin(), mi.rend());
    for (auto& [d, p] : out) d = -d;
    return out;
  };
  for (const auto& [col, entries] : columns(f)) {
    MultiIndex a = f.source().multi_index(col.first, col.second);
    for (const auto& e : entries) {
      MultiIndex bmi = f.target().multi_index(e.tdeg, e.tpos);
      int sign = sign_of_parity(static_cast<long long>(f.degree()) * e.tdeg);
      b.add(dual_mi(bmi), dual_mi(a), e.value * sign);
    }
  }
  return b.build();
}

GradedMap double_dual_iso(const GradedModule& a) {
  std::map<int, Matrix> blocks;
  for (int d : a.degrees())
    blocks[d] = Matrix::Identity(a.rank(d), a.rank(d)) * Rational(sign_of_parity(d));
  return GradedMap(a, dual_module(dual_module(a)), 0, std::move(blocks));
}

Rational evaluate_nested(const Element& phi, const Element& x) {
  if (phi.module() != dual_module(x.module()))
    throw Error(ErrorKind::ShapeMismatch, "functional is not in the dual module");
  Rational total = 0;
  for (const auto& [xk, xv] : x.coefficients()) {
    MultiIndex mi = x.module().multi_index(xk.first, xk.second);
    MultiIndex dmi(mi.rbegin(), mi.rend());
    for (auto& [d, p] : dmi) d = -d;
    auto [pd, pp] = phi.module().locate(dmi);
    total += xv * phi.coefficient(pd, pp);
  }
  return total;
}

Rational evaluate_componentwise(const Element& phi, const Element& x) {
  std::vector<Factor> duals;
  for (const auto& f : x.module().factors()) {
    auto single = dual_module(GradedModule(std::vector<Factor>{f}));
    duals.push_back(single.factors()[0]);
  }
  if (phi.module() != GradedModule(duals))
    throw Error(ErrorKind::ShapeMismatch, "functional does not match factorwise");
  Rational total = 0;
  for (const auto& [xk, xv] : x.coefficients()) {
    MultiIndex mi = x.module().multi_index(xk.first, xk.second);
    MultiIndex dmi = mi;
    for (auto& [d, p] : dmi) d = -d;
    long long e = 0;
    for (std::size_t i = 0; i < mi.size(); ++i)
      for (std::size_t j = i + 1; j < mi.size(); ++j)
        e += static_cast<long long>(dmi[j].first) * mi[i].first;
    auto [pd, pp] = phi.module().locate(dmi);
    total += xv * phi.coefficient(pd, pp) * sign_of_parity(e);
  }
  return total;
}

std::string to_string(const GradedMap& f) {
  std::ostringstream os;
  os << "degree " << f.degree() << "\n";
  for (const auto& [col, entries] : columns(f)) {
    os << "  " << f.source().labels(col.first)[col.second] << " ↦";
    bool first = true;
    for (const auto& e : entries) {
      os << (first ? " " : " + ") << format_rational(e.value) << "·"
         << f.target().labels(e.tdeg)[e.tpos];
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace frobgraph
