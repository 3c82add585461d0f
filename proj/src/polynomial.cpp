#include "dimjump/polynomial.hpp"

#include <algorithm>

#include "dimjump/budget.hpp"
#include "dimjump/errors.hpp"

namespace dimjump {

namespace {

void check_same(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw AlgebraError("ring mismatch: " + describe(*a) + " vs " + describe(*b));
}

// Merge two sorted term lists: a + c*b.
std::vector<Term> merge(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  const Field& k = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({negate_b ? k.neg(b[j].coef) : b[j].coef, b[j].mono});
      ++j;
    } else {
      Scalar s = negate_b ? k.sub(a[i].coef, b[j].coef) : k.add(a[i].coef, b[j].coef);
      if (!Field::is_zero(s)) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({negate_b ? k.neg(b[j].coef) : b[j].coef, b[j].mono});
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const Ring& r = *ring_;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef = r.field().add(terms_.back().coef, t.coef);
      if (Field::is_zero(terms_.back().coef)) terms_.pop_back();
    } else if (!Field::is_zero(t.coef)) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Scalar v = ring->field().from_rational(c);
  Polynomial p(std::move(ring));
  if (!Field::is_zero(v)) p.terms_.push_back({v, Monomial{}});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) { return constant(std::move(ring), Scalar(c)); }

Polynomial Polynomial::variable(RingPtr ring, std::size_t i, unsigned power) {
  if (i >= ring->num_vars()) throw AlgebraError("variable index out of range");
  Monomial m = ring->variable(i, power);
  Polynomial p(std::move(ring));
  p.terms_.push_back({Scalar(1), m});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Scalar& c, const Monomial& m) {
  Polynomial p(std::move(ring));
  if (!Field::is_zero(c)) p.terms_.push_back({c, m});
  return p;
}

std::optional<int> Polynomial::weighted_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_[0].mono.degree;
  for (const auto& t : terms_) d = std::max(d, int(t.mono.degree));
  return d;
}

std::optional<int> Polynomial::low_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_[0].mono.degree;
  for (const auto& t : terms_) d = std::min(d, int(t.mono.degree));
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same(ring_, o.ring_);
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, o.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same(ring_, o.ring_);
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, o.terms_, true);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({ring_->field().neg(t.coef), t.mono});
  return r;
}

Polynomial Polynomial::times(const Scalar& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (Field::is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves every monomial order
  for (const auto& t : terms_) r.terms_.push_back({ring_->field().mul(c, t.coef), t.mono * m});
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const { return times(c, Monomial{}); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(ring_, o.ring_);
  Polynomial r(ring_);
  if (is_zero() || o.is_zero()) return r;
  const Polynomial& small = size() <= o.size() ? *this : o;
  const Polynomial& big = size() <= o.size() ? o : *this;
  for (const auto& t : small.terms_) {
    WorkBudget::charge((r.terms_.size() + big.terms_.size()) / 32 + 1);
    r.terms_ = merge(*ring_, r.terms_, big.times(t.coef, t.mono).terms_, false);
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::in_ring(const RingPtr& ring) const {
  if (ring->field() != ring_->field() || ring->variables() != ring_->variables())
    throw AlgebraError("in_ring: variables or field differ");
  return Polynomial(ring, terms_);
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.mono.degree == degree) r.terms_.push_back(t);
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const Field& k = ring_->field();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Scalar c = t.coef;
    bool negative = k.is_rationals() && sgn(c) < 0;
    if (negative) c = -c;
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    bool one = t.mono.is_one();
    if (one) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += ring_->format(t.mono);
    }
  }
  return out;
}

Homogeneity is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return {true, std::nullopt};
  int d = p.terms()[0].mono.degree;
  for (const auto& t : p.terms())
    if (t.mono.degree != d) return {false, std::nullopt};
  return {true, d};
}

Polynomial substitute(const Polynomial& p, const RingPtr& target, std::span<const Polynomial> images) {
  const Ring& src = *p.ring();
  if (images.size() != src.num_vars()) throw AlgebraError("substitute: arity mismatch");
  for (const auto& im : images) check_same(im.ring(), target);
  if (target->field() != src.field()) throw AlgebraError("substitute: field mismatch");
  Polynomial result(target);
  // cache powers per variable
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coef);
    for (std::size_t i = 0; i < images.size() && !term.is_zero(); ++i) {
      unsigned e = t.mono.exp[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      term = term * pw[e];
    }
    result = result + term;
  }
  return result;
}

Homogenization adjoin_variable(const RingPtr& base, const std::string& extra_name,
                               const std::vector<std::string>& rename) {
  if (!rename.empty() && rename.size() != base->num_vars()) throw AlgebraError("adjoin_variable: rename arity");
  std::vector<Variable> vars;
  Homogenization h;
  h.base = base;
  for (std::size_t i = 0; i < base->num_vars(); ++i) {
    vars.push_back({rename.empty() ? base->variables()[i].name : rename[i], base->weight(i)});
    h.var_map.push_back(i);
  }
  vars.push_back({extra_name, 1});
  h.extra = vars.size() - 1;
  h.target = make_ring(base->field(), std::move(vars), base->order());
  return h;
}

Polynomial embed(const Polynomial& p, const Homogenization& h) {
  check_same(p.ring(), h.base);
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < h.var_map.size(); ++i) m.exp[h.var_map[i]] = t.mono.exp[i];
    m.degree = t.mono.degree;
    terms.push_back({t.coef, m});
  }
  return Polynomial(h.target, std::move(terms));
}

Polynomial homogenize(const Polynomial& p, const Homogenization& h, std::optional<int> degree) {
  check_same(p.ring(), h.base);
  if (!degree) {
    if (p.is_zero()) throw AlgebraError("cannot homogenize the zero polynomial");
    degree = p.weighted_degree();
  }
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    int pad = *degree - t.mono.degree;
    if (pad < 0) throw AlgebraError("homogenize: term degree exceeds target degree");
    if (unsigned(pad) > kMaxExponent) throw AlgebraError("exponent out of range");
    Monomial m;
    for (std::size_t i = 0; i < h.var_map.size(); ++i) m.exp[h.var_map[i]] = t.mono.exp[i];
    m.exp[h.extra] = static_cast<std::uint16_t>(pad);
    m.degree = *degree;
    terms.push_back({t.coef, m});
  }
  return Polynomial(h.target, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& p, const Homogenization& h, long value) {
  check_same(p.ring(), h.target);
  const Field& k = h.base->field();
  Scalar v = k.from_int(value);
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.exp[h.extra];
    Scalar c = t.coef;
    if (e) {
      if (Field::is_zero(v)) continue;
      for (unsigned i = 0; i < e; ++i) c = k.mul(c, v);
    }
    Monomial m;
    for (std::size_t i = 0; i < h.var_map.size(); ++i) {
      m.exp[i] = t.mono.exp[h.var_map[i]];
      m.degree += m.exp[i] * h.base->weight(i);
    }
    terms.push_back({c, m});
  }
  return Polynomial(h.base, std::move(terms));
}

}  // namespace dimjump
