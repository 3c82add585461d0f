#include "dimjump/homalg.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "dimjump/budget.hpp"
#include "dimjump/errors.hpp"

namespace dimjump {

// ---------------------------------------------------------------- GradedMatrix

GradedMatrix::GradedMatrix(FreeModule source, FreeModule target, std::vector<Vec> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (!same_ring(source_.ring, target_.ring)) throw AlgebraError("GradedMatrix: source and target rings differ");
  if (columns_.size() != source_.rank()) throw AlgebraError("GradedMatrix: column count does not match source rank");
  for (const auto& c : columns_) {
    if (!same_ring(c.ring(), target_.ring)) throw AlgebraError("GradedMatrix: column over a different ring");
    if (c.span() > target_.rank()) throw AlgebraError("GradedMatrix: column outside the target module");
  }
}

GradedMatrix GradedMatrix::from_rows(FreeModule source, FreeModule target,
                                     const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.size() != target.rank()) throw AlgebraError("GradedMatrix: row count does not match target rank");
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < source.rank(); ++j) {
    std::vector<Polynomial> comps;
    for (const auto& row : rows) {
      if (row.size() != source.rank()) throw AlgebraError("GradedMatrix: ragged rows");
      comps.push_back(row[j]);
    }
    cols.push_back(Vec::from_components(target.ring, comps));
  }
  return GradedMatrix(std::move(source), std::move(target), std::move(cols));
}

GradedMatrix GradedMatrix::zero(FreeModule source, FreeModule target) {
  std::vector<Vec> cols(source.rank(), Vec(target.ring));
  return GradedMatrix(std::move(source), std::move(target), std::move(cols));
}

Polynomial GradedMatrix::entry(std::size_t i, std::size_t j) const { return columns_.at(j).component(i); }

bool GradedMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Vec& v) { return v.is_zero(); });
}

Vec GradedMatrix::apply(const Vec& v) const {
  Vec out(target_.ring);
  if (v.span() > cols()) throw AlgebraError("GradedMatrix::apply: element outside the source module");
  for (const auto& t : v.terms()) out = out + columns_[t.comp].times(t.coef, t.mono);
  return out;
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& right) const {
  if (right.rows() != cols()) throw AlgebraError("compose: dimension mismatch");
  std::vector<Vec> cols;
  for (const auto& c : right.columns()) cols.push_back(apply(c));
  return GradedMatrix(right.source(), target_, std::move(cols));
}

std::string GradedMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) os << ", ";
      os << entry(i, j).to_string();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string DegreeViolation::message() const {
  std::string s = "entry (" + std::to_string(row) + ", " + std::to_string(col) + ") should have degree " +
                  std::to_string(expected) + ", found ";
  return s + (found ? "degree " + std::to_string(*found) : "an inhomogeneous polynomial");
}

std::optional<DegreeViolation> validate_graded_matrix(const GradedMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Polynomial e = m.entry(i, j);
      if (e.is_zero()) continue;
      int expected = m.source().twists[j] - m.target().twists[i];
      Homogeneity h = is_homogeneous(e);
      if (!h.homogeneous || *h.degree != expected) return DegreeViolation{i, j, expected, h.degree};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------- pruning helpers

namespace {

Vec drop_component(const Vec& v, std::uint32_t r) {
  std::vector<VTerm> ts;
  for (const auto& t : v.terms()) {
    if (t.comp == r) continue;
    ts.push_back({t.coef, t.mono, t.comp > r ? t.comp - 1 : t.comp});
  }
  return Vec(v.ring(), std::move(ts));
}

template <class T>
std::vector<T> erase_at(std::vector<T> v, std::size_t i) {
  v.erase(v.begin() + long(i));
  return v;
}

// A nonzero constant entry (r, c).
bool find_unit(const GradedMatrix& m, std::size_t& r, std::size_t& c) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto& ts = m.columns()[j].terms();
    for (std::size_t k = 0; k < ts.size(); ++k) {
      if (!ts[k].mono.is_one()) continue;
      // constant term is the last term of its component; the entry is a unit
      // iff it is the only term of that component
      bool alone = (k == 0 || ts[k - 1].comp != ts[k].comp) && (k + 1 == ts.size() || ts[k + 1].comp != ts[k].comp);
      if (alone) {
        r = ts[k].comp;
        c = j;
        return true;
      }
    }
  }
  return false;
}

// Column operations clearing row r using the unit at (r, c), then drops row r
// and column c.
GradedMatrix eliminate(const GradedMatrix& m, std::size_t r, std::size_t c) {
  const Field& k = m.ring()->field();
  const Vec& pivot_col = m.columns()[c];
  Scalar u = m.entry(r, c).lead().coef;
  Scalar uinv = k.inv(u);
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j == c) continue;
    Polynomial a = m.entry(r, j);
    Vec col = m.columns()[j];
    if (!a.is_zero()) col = col - pivot_col.mul(a.scaled(uinv));
    cols.push_back(drop_component(col, static_cast<std::uint32_t>(r)));
  }
  FreeModule src{m.source().ring, erase_at(m.source().twists, c)};
  FreeModule tgt{m.target().ring, erase_at(m.target().twists, r)};
  return GradedMatrix(std::move(src), std::move(tgt), std::move(cols));
}

GradedMatrix drop_column(const GradedMatrix& m, std::size_t c) {
  std::vector<Vec> cols = m.columns();
  cols.erase(cols.begin() + long(c));
  return GradedMatrix(FreeModule{m.source().ring, erase_at(m.source().twists, c)}, m.target(), std::move(cols));
}

GradedMatrix drop_row(const GradedMatrix& m, std::size_t r) {
  std::vector<Vec> cols;
  for (const auto& col : m.columns()) cols.push_back(drop_component(col, static_cast<std::uint32_t>(r)));
  return GradedMatrix(m.source(), FreeModule{m.target().ring, erase_at(m.target().twists, r)}, std::move(cols));
}

GradedMatrix drop_zero_columns(const GradedMatrix& m) {
  std::vector<Vec> cols;
  std::vector<int> tw;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m.columns()[j].is_zero()) {
      cols.push_back(m.columns()[j]);
      tw.push_back(m.source().twists[j]);
    }
  return GradedMatrix(FreeModule{m.source().ring, tw}, m.target(), std::move(cols));
}

GradedMatrix prune_presentation(GradedMatrix m) {
  m = drop_zero_columns(m);
  std::size_t r, c;
  while (find_unit(m, r, c)) {
    WorkBudget::charge();
    m = drop_zero_columns(eliminate(m, r, c));
  }
  return m;
}

// Homological chain F_0 <- F_1 <- ...; d[k] : F_{k+1} -> F_k.
struct Chain {
  std::vector<GradedMatrix> d;

  // Cancels every unit entry of d[k] against the neighbouring differentials.
  void prune(std::size_t k) {
    std::size_t r, c;
    while (find_unit(d[k], r, c)) {
      WorkBudget::charge();
      d[k] = eliminate(d[k], r, c);
      if (k > 0) d[k - 1] = drop_column(d[k - 1], r);
      if (k + 1 < d.size()) d[k + 1] = drop_row(d[k + 1], c);
    }
  }
};

FreeComplex chain_to_complex(const Chain& ch, Grading mode) {
  // trailing zero modules are dropped
  std::size_t len = ch.d.size();
  while (len > 0 && ch.d[len - 1].cols() == 0) --len;
  std::vector<FreeModule> terms;  // C^{-len} .. C^0
  std::vector<GradedMatrix> diffs;
  for (std::size_t k = len; k > 0; --k) {
    terms.push_back(ch.d[k - 1].source());
    diffs.push_back(ch.d[k - 1]);
  }
  terms.push_back(ch.d.empty() ? FreeModule{} : ch.d[0].target());
  return FreeComplex(-int(len), std::move(terms), std::move(diffs), mode);
}

}  // namespace

// ---------------------------------------------------------------- FPModule

struct FPModule::Cache {
  std::once_flag once;
  std::optional<GroebnerBasis> gb;
};

FPModule::FPModule(GradedMatrix presentation, Grading mode)
    : presentation_(std::move(presentation)), mode_(mode), cache_(std::make_shared<Cache>()) {}

FPModule FPModule::coker(GradedMatrix presentation, Grading mode) {
  if (mode == Grading::graded) {
    if (auto v = validate_graded_matrix(presentation)) throw DegreeError(v->row, v->col, v->message());
  }
  return FPModule(std::move(presentation), mode);
}

FPModule FPModule::free(FreeModule F, Grading mode) {
  FreeModule src{F.ring, {}};
  return FPModule(GradedMatrix(std::move(src), std::move(F), {}), mode);
}

const GroebnerBasis& FPModule::relations_gb() const {
  std::call_once(cache_->once, [&] { cache_->gb = buchberger(generators(), presentation_.columns()); });
  return *cache_->gb;
}

std::vector<std::size_t> FPModule::hilbert_profile(int lo, int hi) const {
  if (!graded()) throw AlgebraError("hilbert_profile requires a graded module");
  return dimjump::hilbert_profile(relations_gb(), lo, hi);
}

bool FPModule::is_zero() const { return relations_gb().is_everything(); }

VectorDim FPModule::dimension() const { return quotient_dimension(relations_gb()); }

FPModule FPModule::as_ungraded() const {
  FPModule m = *this;
  m.mode_ = Grading::ungraded;
  return m;
}

FPModule FPModule::twisted(int n) const {
  auto shift = [n](FreeModule F) {
    for (auto& t : F.twists) t -= n;
    return F;
  };
  GradedMatrix p(shift(presentation_.source()), shift(presentation_.target()), presentation_.columns());
  return FPModule(std::move(p), mode_);
}

FPModule FPModule::minimized() const { return FPModule(prune_presentation(presentation_), mode_); }

std::string FPModule::to_string() const {
  std::ostringstream os;
  os << "coker " << presentation_.to_string() << " rows [";
  for (std::size_t i = 0; i < generators().rank(); ++i) os << (i ? ", " : "") << generators().twists[i];
  os << "] cols [";
  for (std::size_t i = 0; i < presentation_.cols(); ++i) os << (i ? ", " : "") << presentation_.source().twists[i];
  os << "]";
  if (!graded()) os << " ungraded";
  return os.str();
}

// ---------------------------------------------------------------- FreeComplex

FreeComplex::FreeComplex(int lo, std::vector<FreeModule> terms, std::vector<GradedMatrix> differentials, Grading mode)
    : lo_(lo), terms_(std::move(terms)), diffs_(std::move(differentials)), mode_(mode) {
  if (terms_.empty()) throw AlgebraError("FreeComplex needs at least one term");
  if (diffs_.size() + 1 != terms_.size()) throw AlgebraError("FreeComplex: differential count mismatch");
  for (std::size_t k = 0; k < diffs_.size(); ++k)
    if (diffs_[k].cols() != terms_[k].rank() || diffs_[k].rows() != terms_[k + 1].rank())
      throw AlgebraError("FreeComplex: differential shape mismatch");
}

FreeModule FreeComplex::term(int i) const {
  if (i < lo_ || i > hi()) return FreeModule{ring(), {}};
  return terms_[std::size_t(i - lo_)];
}

GradedMatrix FreeComplex::differential(int i) const {
  if (i < lo_ || i >= hi()) return GradedMatrix::zero(term(i), term(i + 1));
  return diffs_[std::size_t(i - lo_)];
}

int FreeComplex::length() const {
  int first = lo_;
  while (first < hi() && term(first).rank() == 0) ++first;
  return hi() - first;
}

bool FreeComplex::is_complex() const {
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
    if (!diffs_[k + 1].compose(diffs_[k]).is_zero()) return false;
  return true;
}

std::string FreeComplex::to_string() const {
  std::ostringstream os;
  for (int i = lo_; i <= hi(); ++i) {
    const FreeModule& F = term(i);
    os << "C^" << i << " : rank " << F.rank() << " twists [";
    for (std::size_t k = 0; k < F.rank(); ++k) os << (k ? ", " : "") << F.twists[k];
    os << "]\n";
    if (i < hi()) os << "  d^" << i << " = " << differential(i).to_string() << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- resolutions

namespace {

FreeComplex resolve_graded(const FPModule& M, int max_len) {
  Chain ch;
  ch.d.push_back(drop_zero_columns(M.presentation()));
  ch.prune(0);
  for (std::size_t k = 1;; ++k) {
    const GradedMatrix& prev = ch.d[k - 1];
    if (prev.cols() == 0) break;
    SyzygyModule syz = syzygies(prev.target(), prev.columns(), prev.source().twists);
    if (syz.generators.empty()) break;
    std::vector<int> tw;
    for (const auto& s : syz.generators) tw.push_back(s.degree(syz.source).value());
    ch.d.emplace_back(FreeModule{prev.ring(), tw}, prev.source(), syz.generators);
    ch.prune(k);
    if (ch.d[k].cols() > 0 && int(k) + 1 > max_len)
      throw InternalError("free resolution exceeded the length bound " + std::to_string(max_len));
  }
  return chain_to_complex(ch, Grading::graded);
}

std::string fresh_name(const Ring& ring, const std::string& base) {
  std::string name = base;
  for (int i = 1; ring.find(name) != ring.num_vars(); ++i) name = base + std::to_string(i);
  return name;
}

FreeComplex resolve_ungraded(const FPModule& M, int max_len) {
  const RingPtr& ring = M.ring();
  Homogenization h = adjoin_variable(ring, fresh_name(*ring, "h_"));
  const GradedMatrix& P = M.presentation();
  FreeModule F0{h.target, std::vector<int>(P.rows(), 0)};
  std::vector<int> src_tw;
  std::vector<Vec> cols;
  for (const auto& col : P.columns()) {
    if (col.is_zero()) continue;
    int a = col.degree(FreeModule{ring, std::vector<int>(P.rows(), 0)}).value();
    std::vector<VTerm> ts;
    for (std::size_t i = 0; i < P.rows(); ++i) {
      Polynomial e = col.component(i);
      if (e.is_zero()) continue;
      Polynomial he = homogenize(e, h, a);
      for (const auto& t : he.terms()) ts.push_back({t.coef, t.mono, static_cast<std::uint32_t>(i)});
    }
    cols.emplace_back(h.target, std::move(ts));
    src_tw.push_back(a);
  }
  FPModule Mh = FPModule::coker(GradedMatrix(FreeModule{h.target, src_tw}, F0, std::move(cols)));
  FreeComplex Ch = resolve_graded(Mh, max_len + 1);

  Chain ch;
  for (int i = Ch.lo(); i < Ch.hi(); ++i) {
    GradedMatrix d = Ch.differential(i);
    std::vector<Vec> dc;
    for (const auto& col : d.columns()) {
      std::vector<VTerm> ts;
      for (std::size_t r = 0; r < d.rows(); ++r) {
        Polynomial e = dehomogenize(col.component(r), h, 1);
        for (const auto& t : e.terms()) ts.push_back({t.coef, t.mono, static_cast<std::uint32_t>(r)});
      }
      dc.emplace_back(ring, std::move(ts));
    }
    ch.d.emplace_back(FreeModule::zero_twists(ring, d.cols()), FreeModule::zero_twists(ring, d.rows()), std::move(dc));
  }
  std::reverse(ch.d.begin(), ch.d.end());
  if (ch.d.empty()) {
    ch.d.push_back(GradedMatrix::zero(FreeModule{ring, {}}, FreeModule::zero_twists(ring, Ch.term(0).rank())));
  }
  for (std::size_t k = 0; k < ch.d.size(); ++k) ch.prune(k);
  return chain_to_complex(ch, Grading::ungraded);
}

}  // namespace

FreeComplex free_resolution(const FPModule& M, int max_len) {
  if (max_len < 0) throw AlgebraError("free_resolution: negative length bound");
  return M.graded() ? resolve_graded(M, max_len) : resolve_ungraded(M, max_len);
}

FreeComplex free_resolution(const FPModule& M) { return free_resolution(M, int(M.ring()->num_vars()) + 1); }

// ---------------------------------------------------------------- Hom and cohomology

namespace {

// Hom(C_j, N) for a free module C_j = sum A(-a_j): ambient twists b_i - a_j,
// relations the relation columns of N placed in each block.
FPModule hom_term(const FreeModule& Cj, const FPModule& N, Grading mode) {
  const FreeModule& G = N.generators();
  const GradedMatrix& P = N.presentation();
  const std::size_t g = G.rank();
  FreeModule E{N.ring(), {}};
  FreeModule S{N.ring(), {}};
  std::vector<Vec> rels;
  for (std::size_t j = 0; j < Cj.rank(); ++j) {
    for (std::size_t i = 0; i < g; ++i) E.twists.push_back(G.twists[i] - Cj.twists[j]);
    for (std::size_t l = 0; l < P.cols(); ++l) {
      rels.push_back(P.columns()[l].shifted(long(j * g)));
      S.twists.push_back(P.source().twists[l] - Cj.twists[j]);
    }
  }
  return FPModule::coker(GradedMatrix(std::move(S), std::move(E), std::move(rels)), mode);
}

// Precomposition with d : C^{-q-1} -> C^{-q}, e_{j,i} -> sum_k d[j][k] e_{k,i}.
GradedMatrix hom_map(const GradedMatrix& d, const FPModule& from, const FPModule& to, std::size_t g) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < d.rows(); ++j) {
    // row j of d
    std::vector<Polynomial> row;
    for (std::size_t k = 0; k < d.cols(); ++k) row.push_back(d.entry(j, k));
    for (std::size_t i = 0; i < g; ++i) {
      Vec v(d.ring());
      for (std::size_t k = 0; k < row.size(); ++k)
        if (!row[k].is_zero()) v = v + Vec::single(row[k], static_cast<std::uint32_t>(k * g + i));
      cols.push_back(std::move(v));
    }
  }
  return GradedMatrix(from.generators(), to.generators(), std::move(cols));
}

}  // namespace

ModuleComplex hom_complex(const FreeComplex& C, const FPModule& N) {
  if (!same_ring(C.ring(), N.ring())) throw AlgebraError("hom_complex: rings differ");
  Grading mode = C.mode() == Grading::graded && N.graded() ? Grading::graded : Grading::ungraded;
  FPModule NN = mode == Grading::graded ? N : N.as_ungraded();
  ModuleComplex H;
  H.mode = mode;
  H.lo = -C.hi();
  for (int q = -C.hi(); q <= -C.lo(); ++q) H.terms.push_back(hom_term(C.term(-q), NN, mode));
  const std::size_t g = NN.num_generators();
  for (int q = -C.hi(); q < -C.lo(); ++q) {
    std::size_t k = std::size_t(q - H.lo);
    H.maps.push_back(hom_map(C.differential(-q - 1), H.terms[k], H.terms[k + 1], g));
  }
  return H;
}

ModuleComplex as_module_complex(const FreeComplex& C) {
  ModuleComplex M;
  M.mode = C.mode();
  M.lo = C.lo();
  for (int i = C.lo(); i <= C.hi(); ++i) M.terms.push_back(FPModule::free(C.term(i), C.mode()));
  for (int i = C.lo(); i < C.hi(); ++i) M.maps.push_back(C.differential(i));
  return M;
}

std::vector<std::size_t> Subquotient::hilbert_profile(int lo, int hi) const {
  auto a = dimjump::hilbert_profile(denominator, lo, hi);
  auto b = dimjump::hilbert_profile(numerator, lo, hi);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) throw InternalError("subquotient with numerator outside denominator range");
    a[i] -= b[i];
  }
  return a;
}

Subquotient cohomology_subquotient(const ModuleComplex& C, int q) {
  if (C.terms.empty() || q < C.lo || q > C.hi()) {
    RingPtr ring = C.terms.empty() ? nullptr : C.terms.front().ring();
    FreeModule E{ring, {}};
    return Subquotient{E, GroebnerBasis(E), GroebnerBasis(E)};
  }
  std::size_t k = std::size_t(q - C.lo);
  const FPModule& T = C.terms[k];
  const FreeModule& E = T.generators();
  const std::size_t m = E.rank();
  std::vector<Vec> rel = T.presentation().columns();

  std::vector<Vec> num = rel;
  bool whole = q == C.hi() || C.terms[k + 1].num_generators() == 0;
  if (whole) {
    for (std::size_t i = 0; i < m; ++i) num.push_back(Vec::unit(E.ring, static_cast<std::uint32_t>(i)));
  } else {
    const GradedMatrix& D = C.maps[k];
    const FPModule& T1 = C.terms[k + 1];
    std::vector<Vec> gens = D.columns();
    std::vector<int> degs = E.twists;
    for (std::size_t l = 0; l < T1.presentation().cols(); ++l) {
      gens.push_back(T1.presentation().columns()[l]);
      degs.push_back(T1.presentation().source().twists[l]);
    }
    SyzygyModule syz = syzygies(T1.generators(), gens, degs);
    for (const auto& s : syz.generators) {
      Vec p = s.slice(0, m);
      if (!p.is_zero()) num.push_back(std::move(p));
    }
  }
  std::vector<Vec> den = rel;
  if (k > 0)
    for (const auto& c : C.maps[k - 1].columns())
      if (!c.is_zero()) den.push_back(c);
  return Subquotient{E, buchberger(E, num), buchberger(E, den)};
}

FPModule cohomology_at(const ModuleComplex& C, int q) { return present_subquotient(cohomology_subquotient(C, q), C.mode); }

FPModule present_subquotient(const Subquotient& sq, Grading mode) {
  const RingPtr& ring = sq.ambient.ring;
  std::vector<Vec> gens;
  std::vector<int> tw;
  for (const auto& v : sq.numerator.elements()) {
    Vec r = sq.denominator.normal_form(v);
    if (r.is_zero()) continue;
    tw.push_back(mode == Grading::graded ? r.degree(sq.ambient).value() : 0);
    gens.push_back(std::move(r));
  }
  FreeModule G{ring, tw};
  if (gens.empty()) return FPModule::free(G, mode);
  const std::size_t t = gens.size();
  std::vector<Vec> all = gens;
  std::vector<int> degs = tw;
  for (const auto& d : sq.denominator.elements()) {
    all.push_back(d);
    degs.push_back(mode == Grading::graded ? d.degree(sq.ambient).value() : 0);
  }
  SyzygyModule syz = syzygies(sq.ambient, all, degs);
  std::vector<Vec> rels;
  std::vector<int> rtw;
  for (const auto& s : syz.generators) {
    Vec p = s.slice(0, t);
    if (p.is_zero()) continue;
    rtw.push_back(mode == Grading::graded ? s.degree(syz.source).value() : 0);
    rels.push_back(std::move(p));
  }
  GradedMatrix P(FreeModule{ring, rtw}, G, std::move(rels));
  return FPModule::coker(std::move(P), mode).minimized();
}

// ---------------------------------------------------------------- Ext

ExtCalculator::ExtCalculator(const FPModule& M, const FPModule& N)
    : mode_(M.graded() && N.graded() ? Grading::graded : Grading::ungraded),
      resolution_(free_resolution(mode_ == Grading::graded ? M : M.as_ungraded())),
      hom_(hom_complex(resolution_, mode_ == Grading::graded ? N : N.as_ungraded())) {
  if (!same_ring(M.ring(), N.ring())) throw AlgebraError("Ext: modules over different rings");
}

ExtProfile ExtCalculator::profile(int q, Window window) const {
  if (mode_ != Grading::graded) return total(q);
  if (window.lo > window.hi) throw AlgebraError("empty degree window");
  Subquotient sq = cohomology_subquotient(hom_, q);
  ExtProfile p;
  p.q = q;
  p.mode = mode_;
  p.window = window;
  p.vanishes = sq.vanishes();
  p.dims = p.vanishes ? std::vector<std::size_t>(std::size_t(window.hi - window.lo + 1), 0)
                      : sq.hilbert_profile(window.lo, window.hi);
  return p;
}

ExtProfile ExtCalculator::total(int q) const {
  ExtProfile p;
  p.q = q;
  p.mode = Grading::ungraded;
  FPModule H = module(q);
  p.total = H.dimension();
  p.vanishes = p.total->is_zero();
  return p;
}

FPModule ExtCalculator::module(int q) const { return cohomology_at(hom_, q); }

bool ExtCalculator::vanishes(int q) const { return cohomology_subquotient(hom_, q).vanishes(); }

int ExtCalculator::top_index() const {
  return std::max(int(resolution_.ring()->num_vars()), resolution_.length());
}

ExtProfile ext_profile(const FPModule& M, const FPModule& N, int q, Window window) {
  return ExtCalculator(M, N).profile(q, window);
}

bool ext_vanishes_above(const FPModule& M, const FPModule& N, int q0) {
  ExtCalculator calc(M, N);
  for (int q = q0 + 1; q <= calc.top_index(); ++q)
    if (!calc.vanishes(q)) return false;
  return true;
}

}  // namespace dimjump
