#include "dimjump/groebner.hpp"

#include <algorithm>
#include <map>

#include "dimjump/budget.hpp"
#include "dimjump/errors.hpp"

namespace dimjump {

bool same_module(const FreeModule& a, const FreeModule& b) {
  return same_ring(a.ring, b.ring) && a.twists == b.twists;
}

int compare_pot(const Ring& ring, const Monomial& m1, std::uint32_t c1, const Monomial& m2, std::uint32_t c2) {
  if (c1 != c2) return c1 < c2 ? 1 : -1;
  return ring.compare(m1, m2);
}

namespace {

// a + c * m * b, all term lists sorted in POT order.
std::vector<VTerm> merge_scaled(const Ring& ring, std::span<const VTerm> a, std::span<const VTerm> b, const Scalar& c,
                                const Monomial& m) {
  const Field& k = ring.field();
  std::vector<VTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  bool unit_mono = m.is_one();
  auto scaled_b = [&](std::size_t idx) {
    return VTerm{k.mul(c, b[idx].coef), unit_mono ? b[idx].mono : b[idx].mono * m, b[idx].comp};
  };
  while (i < a.size() && j < b.size()) {
    VTerm bt = scaled_b(j);
    int cmp = compare_pot(ring, a[i].mono, a[i].comp, bt.mono, bt.comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(bt));
      ++j;
    } else {
      Scalar s = k.add(a[i].coef, bt.coef);
      if (!Field::is_zero(s)) out.push_back({std::move(s), a[i].mono, a[i].comp});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(scaled_b(j));
  return out;
}

void check_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw AlgebraError("ring mismatch: " + describe(*a) + " vs " + describe(*b));
}

struct Reducer {
  Monomial lead;
  const Vec* vec;
};

class ReducerSet {
 public:
  void add(const Vec* v) {
    std::uint32_t c = v->lead().comp;
    if (by_comp_.size() <= c) by_comp_.resize(c + 1);
    by_comp_[c].push_back({v->lead().mono, v});
  }
  const Reducer* find(const Monomial& m, std::uint32_t comp) const {
    if (comp >= by_comp_.size()) return nullptr;
    for (const auto& r : by_comp_[comp])
      if (r.lead.divides(m)) return &r;
    return nullptr;
  }

 private:
  std::vector<std::vector<Reducer>> by_comp_;
};

// Full normal form; reducers must be monic.
std::vector<VTerm> reduce(const Ring& ring, const ReducerSet& reducers, std::vector<VTerm> cur) {
  const Field& k = ring.field();
  std::vector<VTerm> result;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const VTerm& t = cur[pos];
    const Reducer* r = reducers.find(t.mono, t.comp);
    if (!r) {
      result.push_back(cur[pos]);
      ++pos;
      continue;
    }
    WorkBudget::charge();
    Monomial q = t.mono / r->lead;
    Scalar c = k.neg(t.coef);
    std::span<const VTerm> rest(cur.data() + pos, cur.size() - pos);
    cur = merge_scaled(ring, rest, r->vec->terms(), c, q);
    pos = 0;
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------- Vec

Vec::Vec(RingPtr ring, std::vector<VTerm> terms) : ring_(std::move(ring)) {
  const Ring& r = *ring_;
  std::sort(terms.begin(), terms.end(),
            [&](const VTerm& a, const VTerm& b) { return compare_pot(r, a.mono, a.comp, b.mono, b.comp) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().comp == t.comp && terms_.back().mono == t.mono) {
      terms_.back().coef = r.field().add(terms_.back().coef, t.coef);
      if (Field::is_zero(terms_.back().coef)) terms_.pop_back();
    } else if (!Field::is_zero(t.coef)) {
      terms_.push_back(std::move(t));
    }
  }
}

Vec Vec::from_components(RingPtr ring, std::span<const Polynomial> comps) {
  Vec v(ring);
  for (std::uint32_t c = 0; c < comps.size(); ++c) {
    check_ring(comps[c].ring(), ring);
    for (const auto& t : comps[c].terms()) v.terms_.push_back({t.coef, t.mono, c});
  }
  return v;
}

Vec Vec::unit(RingPtr ring, std::uint32_t comp) {
  Vec v(std::move(ring));
  v.terms_.push_back({Scalar(1), Monomial{}, comp});
  return v;
}

Vec Vec::single(const Polynomial& p, std::uint32_t comp) {
  Vec v(p.ring());
  for (const auto& t : p.terms()) v.terms_.push_back({t.coef, t.mono, comp});
  return v;
}

Polynomial Vec::component(std::size_t i) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.comp == i) ts.push_back({t.coef, t.mono});
  return Polynomial(ring_, std::move(ts));
}

std::size_t Vec::span() const {
  std::size_t s = 0;
  for (const auto& t : terms_) s = std::max<std::size_t>(s, t.comp + 1);
  return s;
}

Vec Vec::operator+(const Vec& o) const {
  check_ring(ring_, o.ring_);
  Vec r(ring_);
  r.terms_ = merge_scaled(*ring_, terms_, o.terms_, Scalar(1), Monomial{});
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  check_ring(ring_, o.ring_);
  Vec r(ring_);
  r.terms_ = merge_scaled(*ring_, terms_, o.terms_, ring_->field().from_int(-1), Monomial{});
  return r;
}

Vec Vec::times(const Scalar& c, const Monomial& m) const {
  Vec r(ring_);
  if (Field::is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({ring_->field().mul(c, t.coef), t.mono * m, t.comp});
  return r;
}

Vec Vec::mul(const Polynomial& p) const {
  check_ring(ring_, p.ring());
  Vec r(ring_);
  for (const auto& t : p.terms()) {
    WorkBudget::charge();
    r.terms_ = merge_scaled(*ring_, r.terms_, terms_, t.coef, t.mono);
  }
  return r;
}

bool Vec::operator==(const Vec& o) const {
  if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& a = terms_[i];
    const auto& b = o.terms_[i];
    if (a.comp != b.comp || !(a.mono == b.mono) || a.coef != b.coef) return false;
  }
  return true;
}

Vec Vec::shifted(long offset) const {
  Vec r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) {
    long c = long(t.comp) + offset;
    if (c < 0) throw InternalError("Vec::shifted: negative component");
    t.comp = static_cast<std::uint32_t>(c);
  }
  return r;
}

Vec Vec::slice(std::size_t lo, std::size_t hi) const {
  Vec r(ring_);
  for (const auto& t : terms_)
    if (t.comp >= lo && t.comp < hi) r.terms_.push_back({t.coef, t.mono, static_cast<std::uint32_t>(t.comp - lo)});
  return r;
}

Vec Vec::in_ring(const RingPtr& ring) const {
  if (ring->variables() != ring_->variables() || ring->field() != ring_->field())
    throw AlgebraError("Vec::in_ring: variables or field differ");
  return Vec(ring, terms_);
}

Vec Vec::monic() const {
  if (is_zero() || Field::is_one(lead().coef)) return *this;
  return scaled(ring_->field().inv(lead().coef));
}

std::optional<int> Vec::degree(const FreeModule& F) const {
  std::optional<int> d;
  for (const auto& t : terms_) {
    int td = t.mono.degree + (t.comp < F.twists.size() ? F.twists[t.comp] : 0);
    d = d ? std::max(*d, td) : td;
  }
  return d;
}

bool Vec::is_homogeneous(const FreeModule& F) const {
  std::optional<int> d;
  for (const auto& t : terms_) {
    if (t.comp >= F.twists.size()) return false;
    int td = t.mono.degree + F.twists[t.comp];
    if (d && *d != td) return false;
    d = td;
  }
  return true;
}

std::string Vec::to_string() const {
  std::size_t n = span();
  std::string out = "(";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ", ";
    out += component(i).to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------- GroebnerBasis

GroebnerBasis::GroebnerBasis(FreeModule ambient, std::vector<Vec> reduced_elements)
    : ambient_(std::move(ambient)), elements_(std::move(reduced_elements)) {}

Vec GroebnerBasis::normal_form(const Vec& v) const {
  check_ring(v.ring(), ambient_.ring);
  if (v.span() > ambient_.rank()) throw AlgebraError("normal_form: element outside the ambient module");
  ReducerSet rs;
  for (const auto& g : elements_) rs.add(&g);
  return Vec(ambient_.ring, reduce(*ambient_.ring, rs, v.terms()));
}

bool GroebnerBasis::contains_all(std::span<const Vec> vs) const {
  ReducerSet rs;
  for (const auto& g : elements_) rs.add(&g);
  for (const auto& v : vs) {
    check_ring(v.ring(), ambient_.ring);
    if (!reduce(*ambient_.ring, rs, v.terms()).empty()) return false;
  }
  return true;
}

bool GroebnerBasis::is_everything() const {
  std::vector<bool> unit(ambient_.rank(), false);
  for (const auto& g : elements_)
    if (g.lead().mono.is_one()) unit[g.lead().comp] = true;
  return std::all_of(unit.begin(), unit.end(), [](bool b) { return b; });
}

std::vector<Monomial> GroebnerBasis::leads_on(std::uint32_t c) const {
  std::vector<Monomial> out;
  for (const auto& g : elements_)
    if (g.lead().comp == c) out.push_back(g.lead().mono);
  return out;
}

// ---------------------------------------------------------------- Buchberger

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int sugar;
};

class Completion {
 public:
  explicit Completion(const FreeModule& F) : F_(F), ring_(*F.ring), product_criterion_(F.rank() == 1) {}

  void add_input(const Vec& v) {
    Vec r(F_.ring, reduce(ring_, reducers_, v.terms()));
    if (r.is_zero()) return;
    int s = r.degree(F_).value_or(0);
    insert(r.monic(), std::max(s, v.degree(F_).value_or(s)));
  }

  void run() {
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = compare_pot(ring_, a.lcm, a.comp, b.lcm, b.comp);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      Pair p = *it;
      pairs_.erase(it);
      WorkBudget::charge();
      Vec s = spoly(p);
      Vec r(F_.ring, reduce(ring_, reducers_, s.terms()));
      if (!r.is_zero()) insert(r.monic(), p.sugar);
    }
  }

  // Minimal, inter-reduced, sorted by decreasing lead.
  std::vector<Vec> reduced() const {
    std::vector<const Vec*> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!redundant_[i]) keep.push_back(&basis_[i]);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      ReducerSet others;
      for (std::size_t j = 0; j < keep.size(); ++j)
        if (j != i) others.add(keep[j]);
      const auto& terms = keep[i]->terms();
      std::vector<VTerm> tail(terms.begin() + 1, terms.end());
      std::vector<VTerm> red = reduce(ring_, others, std::move(tail));
      red.insert(red.begin(), terms.front());
      out.emplace_back(F_.ring, std::move(red));
    }
    std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
      return compare_pot(ring_, a.lead().mono, a.lead().comp, b.lead().mono, b.lead().comp) > 0;
    });
    return out;
  }

 private:
  Vec spoly(const Pair& p) const {
    const Vec& a = basis_[p.i];
    const Vec& b = basis_[p.j];
    Vec ta = a.times(Scalar(1), p.lcm / a.lead().mono);
    Vec r(F_.ring);
    return ta - b.times(Scalar(1), p.lcm / b.lead().mono);
  }

  void insert(Vec h, int sugar) {
    const std::size_t k = basis_.size();
    const Monomial& lk = h.lead().mono;
    const std::uint32_t ck = h.lead().comp;

    // chain criterion on existing pairs
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.comp != ck || !lk.divides(p.lcm)) return false;
      Monomial li = ring_.lcm(basis_[p.i].lead().mono, lk);
      Monomial lj = ring_.lcm(basis_[p.j].lead().mono, lk);
      return !(li == p.lcm) && !(lj == p.lcm);
    });

    std::vector<Pair> fresh;
    std::vector<bool> is_coprime;
    for (std::size_t i = 0; i < k; ++i) {
      if (redundant_[i] || basis_[i].lead().comp != ck) continue;
      const Monomial& li = basis_[i].lead().mono;
      Monomial l = ring_.lcm(li, lk);
      int s = std::max(sugars_[i] + l.degree - li.degree, sugar + l.degree - lk.degree);
      fresh.push_back({i, k, l, ck, s});
      is_coprime.push_back(product_criterion_ && coprime(li, lk));
    }
    // criterion M: drop pairs whose lcm is a proper multiple of another new lcm
    std::vector<bool> drop(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size(); ++b)
        if (a != b && fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
          drop[a] = true;
          break;
        }
    // criterion F and the product criterion: one representative per lcm,
    // and none at all if some pair in the class has coprime leads
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      bool any_coprime = is_coprime[a];
      for (std::size_t b = a + 1; b < fresh.size(); ++b)
        if (!drop[b] && fresh[b].lcm == fresh[a].lcm) {
          any_coprime = any_coprime || is_coprime[b];
          drop[b] = true;
        }
      if (any_coprime) drop[a] = true;
    }
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (!drop[a]) pairs_.push_back(fresh[a]);

    for (std::size_t i = 0; i < k; ++i)
      if (!redundant_[i] && basis_[i].lead().comp == ck && lk.divides(basis_[i].lead().mono)) redundant_[i] = true;

    basis_.push_back(std::move(h));
    sugars_.push_back(sugar);
    redundant_.push_back(false);
    // basis_ may have reallocated; rebuild the reducer table
    reducers_ = ReducerSet();
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!redundant_[i]) reducers_.add(&basis_[i]);
  }

  const FreeModule& F_;
  const Ring& ring_;
  bool product_criterion_;
  std::vector<Vec> basis_;
  std::vector<int> sugars_;
  std::vector<bool> redundant_;
  std::vector<Pair> pairs_;
  ReducerSet reducers_;
};

std::vector<Vec> complete(const FreeModule& F, std::span<const Vec> gens) {
  std::vector<const Vec*> order;
  for (const auto& g : gens) {
    check_ring(g.ring(), F.ring);
    if (g.span() > F.rank()) throw AlgebraError("generator outside the ambient free module");
    if (!g.is_zero()) order.push_back(&g);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](const Vec* a, const Vec* b) { return a->degree(F).value() < b->degree(F).value(); });
  Completion c(F);
  for (const Vec* g : order) c.add_input(*g);
  c.run();
  return c.reduced();
}

}  // namespace

GroebnerBasis buchberger(const FreeModule& F, std::span<const Vec> gens, std::optional<OrderKind> order) {
  if (order && *order != F.ring->order()) {
    FreeModule G{with_order(F.ring, *order), F.twists};
    std::vector<Vec> conv;
    for (const auto& g : gens) conv.push_back(g.in_ring(G.ring));
    return GroebnerBasis(G, complete(G, conv));
  }
  return GroebnerBasis(F, complete(F, gens));
}

LiftedBasis buchberger_lifted(const FreeModule& F, std::span<const Vec> gens, std::optional<std::vector<int>> gen_degrees) {
  const std::size_t r = F.rank();
  std::vector<int> degs;
  if (gen_degrees) {
    if (gen_degrees->size() != gens.size()) throw AlgebraError("generator degree count mismatch");
    degs = *gen_degrees;
  } else {
    for (const auto& g : gens) degs.push_back(g.degree(F).value_or(0));
  }
  FreeModule aug{F.ring, F.twists};
  aug.twists.insert(aug.twists.end(), degs.begin(), degs.end());
  std::vector<Vec> augmented;
  augmented.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    check_ring(gens[i].ring(), F.ring);
    if (gens[i].span() > r) throw AlgebraError("generator outside the ambient free module");
    augmented.push_back(gens[i] + Vec::unit(F.ring, static_cast<std::uint32_t>(r + i)));
  }
  std::vector<Vec> full = complete(aug, augmented);

  LiftedBasis out{GroebnerBasis(F), {}, FreeModule{F.ring, degs}, {}};
  std::vector<Vec> basis;
  for (const auto& g : full) {
    if (g.lead().comp < r) {
      basis.push_back(g.slice(0, r));
      out.certificates.push_back(g.slice(r, r + gens.size()));
    } else {
      out.syzygies.push_back(g.slice(r, r + gens.size()));
    }
  }
  out.basis = GroebnerBasis(F, std::move(basis));
  return out;
}

SyzygyModule syzygies(const FreeModule& F, std::span<const Vec> gens, std::optional<std::vector<int>> gen_degrees) {
  LiftedBasis lb = buchberger_lifted(F, gens, std::move(gen_degrees));
  return SyzygyModule{std::move(lb.source), std::move(lb.syzygies)};
}

GroebnerBasis module_quotient(const GroebnerBasis& U, const Polynomial& f) {
  if (f.is_zero()) throw AlgebraError("module_quotient: f must be nonzero");
  const FreeModule& F = U.ambient();
  check_ring(f.ring(), F.ring);
  const std::size_t r = F.rank();
  std::vector<Vec> gens;
  std::vector<int> degs;
  int df = f.weighted_degree().value();
  for (std::size_t c = 0; c < r; ++c) {
    gens.push_back(Vec::single(f, static_cast<std::uint32_t>(c)));
    degs.push_back(F.twists[c] + df);
  }
  for (const auto& u : U.elements()) {
    gens.push_back(u);
    degs.push_back(u.degree(F).value());
  }
  SyzygyModule syz = syzygies(F, gens, degs);
  std::vector<Vec> quotient;
  for (const auto& s : syz.generators) {
    Vec v = s.slice(0, r);
    if (!v.is_zero()) quotient.push_back(std::move(v));
  }
  return buchberger(F, quotient);
}

Saturation saturate(const GroebnerBasis& U, const Polynomial& f) {
  Saturation s{U, 0};
  for (int step = 0; step < kSaturationCap; ++step) {
    GroebnerBasis next = module_quotient(s.basis, f);
    if (s.basis.contains_all(next.elements())) return s;
    s.basis = std::move(next);
    ++s.iterations;
  }
  throw InternalError("saturation did not stabilize within the iteration cap");
}

bool is_zero_quotient(std::span<const Vec> K, const GroebnerBasis& U) { return U.contains_all(K); }

std::vector<std::size_t> hilbert_profile(const GroebnerBasis& U, int lo, int hi) {
  if (lo > hi) throw AlgebraError("hilbert_profile: empty window");
  const FreeModule& F = U.ambient();
  const Ring& ring = *F.ring;
  std::vector<std::size_t> dims(std::size_t(hi - lo + 1), 0);
  std::map<int, std::vector<Monomial>> cache;
  for (std::uint32_t c = 0; c < F.rank(); ++c) {
    std::vector<Monomial> leads = U.leads_on(c);
    if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); })) continue;
    for (int d = lo; d <= hi; ++d) {
      int e = d - F.twists[c];
      if (e < 0) continue;
      auto it = cache.find(e);
      if (it == cache.end()) it = cache.emplace(e, monomials_of_degree(ring, e)).first;
      std::size_t count = 0;
      for (const auto& m : it->second) {
        WorkBudget::charge();
        if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) ++count;
      }
      dims[std::size_t(d - lo)] += count;
    }
  }
  return dims;
}

VectorDim quotient_dimension(const GroebnerBasis& U) {
  const FreeModule& F = U.ambient();
  const Ring& ring = *F.ring;
  const std::size_t n = ring.num_vars();
  std::size_t total = 0;
  for (std::uint32_t c = 0; c < F.rank(); ++c) {
    std::vector<Monomial> leads = U.leads_on(c);
    if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); })) continue;
    std::vector<unsigned> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& l : leads) {
        bool pure = true;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i && l.exp[j]) pure = false;
        if (pure && l.exp[i] && (bound[i] == 0 || l.exp[i] < bound[i])) bound[i] = l.exp[i];
      }
      if (bound[i] == 0) return VectorDim::inf();
    }
    // enumerate the box of exponents below the pure powers
    std::vector<unsigned> e(n, 0);
    while (true) {
      WorkBudget::charge();
      Monomial m;
      for (std::size_t i = 0; i < n; ++i) m.exp[i] = static_cast<std::uint16_t>(e[i]);
      if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) ++total;
      std::size_t i = 0;
      while (i < n && ++e[i] == bound[i]) e[i++] = 0;
      if (i == n) break;
    }
  }
  return VectorDim::finite(total);
}

bool verify_groebner(const GroebnerBasis& G) {
  const Ring& ring = *G.ring();
  ReducerSet rs;
  for (const auto& g : G.elements()) rs.add(&g);
  const auto& el = G.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (el[i].lead().comp != el[j].lead().comp) continue;
      Monomial l = ring.lcm(el[i].lead().mono, el[j].lead().mono);
      const Field& k = ring.field();
      Vec a = el[i].times(k.inv(el[i].lead().coef), l / el[i].lead().mono);
      Vec b = el[j].times(k.inv(el[j].lead().coef), l / el[j].lead().mono);
      if (!reduce(ring, rs, (a - b).terms()).empty()) return false;
    }
  return true;
}

}  // namespace dimjump
