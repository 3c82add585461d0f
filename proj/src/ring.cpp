#include "dimjump/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dimjump/budget.hpp"
#include "dimjump/errors.hpp"

namespace dimjump {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(a.exp[i]) + b.exp[i];
    if (e > kMaxExponent) throw AlgebraError("exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(e);
  }
  r.degree = a.degree + b.degree;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  r.degree = a.degree - b.degree;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] && b.exp[i]) return false;
  return true;
}

Ring::Ring(Field field, std::vector<Variable> vars, OrderKind order)
    : field_(field), vars_(std::move(vars)), order_(order) {
  if (vars_.size() > kMaxVars) throw AlgebraError("too many variables");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.weight < 1) throw AlgebraError("variable weight must be positive: " + v.name);
    if (!seen.insert(v.name).second) throw AlgebraError("duplicate variable name: " + v.name);
  }
}

std::size_t Ring::find(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return vars_.size();
}

Monomial Ring::monomial(std::span<const int> exps) const {
  if (exps.size() != vars_.size()) throw AlgebraError("monomial arity mismatch");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || unsigned(exps[i]) > kMaxExponent) throw AlgebraError("exponent out of range");
    m.exp[i] = static_cast<std::uint16_t>(exps[i]);
    m.degree += exps[i] * vars_[i].weight;
  }
  return m;
}

Monomial Ring::variable(std::size_t i, unsigned power) const {
  if (power > kMaxExponent) throw AlgebraError("exponent out of range");
  Monomial m;
  m.exp[i] = static_cast<std::uint16_t>(power);
  m.degree = static_cast<std::int32_t>(power) * vars_[i].weight;
  return m;
}

Monomial Ring::lcm(const Monomial& a, const Monomial& b) const {
  Monomial r;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    r.degree += r.exp[i] * vars_[i].weight;
  }
  return r;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = vars_.size();
  if (order_ == OrderKind::grevlex) {
    if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
    for (std::size_t i = n; i-- > 0;)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
  return 0;
}

std::string Ring::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty()) out += '*';
    out += vars_[i].name;
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

bool Ring::operator==(const Ring& o) const {
  return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
}

RingPtr make_ring(Field field, std::vector<Variable> vars, OrderKind order) {
  return std::make_shared<const Ring>(field, std::move(vars), order);
}

RingPtr with_order(const RingPtr& ring, OrderKind order) {
  if (ring->order() == order) return ring;
  return make_ring(ring->field(), ring->variables(), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

std::string describe(const Ring& ring) {
  std::ostringstream os;
  os << ring.field().name() << '[';
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    if (i) os << ", ";
    os << ring.variables()[i].name << ':' << ring.weight(i);
  }
  os << ']';
  return os.str();
}

namespace {
void enumerate(const Ring& ring, std::size_t var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  WorkBudget::charge();
  if (var + 1 == ring.num_vars()) {
    int w = ring.weight(var);
    if (remaining % w) return;
    if (unsigned(remaining / w) > kMaxExponent) throw AlgebraError("exponent out of range");
    cur.exp[var] = static_cast<std::uint16_t>(remaining / w);
    out.push_back(cur);
    cur.exp[var] = 0;
    return;
  }
  int w = ring.weight(var);
  for (int e = remaining / w; e >= 0; --e) {
    if (unsigned(e) > kMaxExponent) throw AlgebraError("exponent out of range");
    cur.exp[var] = static_cast<std::uint16_t>(e);
    enumerate(ring, var + 1, remaining - e * w, cur, out);
  }
  cur.exp[var] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& ring, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (ring.num_vars() == 0) {
    if (degree == 0) out.push_back(Monomial{});
    return out;
  }
  Monomial cur;
  enumerate(ring, 0, degree, cur, out);
  for (auto& m : out) m.degree = degree;
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

}  // namespace dimjump
