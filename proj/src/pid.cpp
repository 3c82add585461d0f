#include "dimjump/pid.hpp"

#include <sstream>

#include "dimjump/budget.hpp"
#include "dimjump/errors.hpp"

namespace dimjump {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(Field k, std::vector<Scalar> coeffs) : k_(k), c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(Field k, const Scalar& c, unsigned degree) {
  std::vector<Scalar> v(degree + 1, Scalar(0));
  v[degree] = c;
  return UPoly(k, std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && Field::is_zero(c_.back())) c_.pop_back();
}

int UPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!Field::is_zero(c_[i])) return int(i);
  return -1;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = k_.add(coeff(i), o.coeff(i));
  return UPoly(k_, std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
  std::vector<Scalar> v;
  for (const auto& c : c_) v.push_back(k_.neg(c));
  return UPoly(k_, std::move(v));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(k_);
  WorkBudget::charge(c_.size() * o.c_.size() / 64 + 1);
  std::vector<Scalar> v(c_.size() + o.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = k_.add(v[i + j], k_.mul(c_[i], o.c_[j]));
  return UPoly(k_, std::move(v));
}

UPoly UPoly::scaled(const Scalar& c) const {
  std::vector<Scalar> v;
  for (const auto& a : c_) v.push_back(k_.mul(a, c));
  return UPoly(k_, std::move(v));
}

UPoly UPoly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<Scalar> v;
  if (k >= 0) {
    v.assign(std::size_t(k), Scalar(0));
    v.insert(v.end(), c_.begin(), c_.end());
  } else if (std::size_t(-k) < c_.size()) {
    v.assign(c_.begin() + (-k), c_.end());
  }
  return UPoly(k_, std::move(v));
}

UPoly UPoly::monic() const { return is_zero() ? *this : scaled(k_.inv(lead())); }

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw AlgebraError("division by the zero polynomial");
  const Field& k = a.k_;
  std::vector<Scalar> rem = a.c_;
  std::vector<Scalar> quo(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0, Scalar(0));
  Scalar binv = k.inv(b.lead());
  for (std::size_t i = rem.size(); i-- >= b.c_.size();) {
    if (Field::is_zero(rem[i])) continue;
    Scalar f = k.mul(rem[i], binv);
    std::size_t off = i - (b.c_.size() - 1);
    quo[off] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[off + j] = k.sub(rem[off + j], k.mul(f, b.c_[j]));
  }
  q = UPoly(k, std::move(quo));
  r = UPoly(k, std::move(rem));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Scalar& c = c_[i];
    if (Field::is_zero(c)) continue;
    bool neg = sgn(c) < 0;
    Scalar a = neg ? Scalar(-c) : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool one = a == 1;
    if (!one || i == 0) os << a.get_str();
    if (i > 0) {
      if (!one) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q(a.field()), r(a.field());
    UPoly::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------- PIDElem

PIDElem::PIDElem(PIDKind kind, UPoly p, int shift) : kind_(kind), p_(std::move(p)), shift_(shift) {
  if (p_.is_zero()) {
    shift_ = 0;
    return;
  }
  if (kind_ == PIDKind::laurent) {
    int v = p_.valuation();
    p_ = p_.shifted(-v);
    shift_ += v;
  } else if (shift_ != 0) {
    if (shift_ < 0) throw AlgebraError("negative power of t in k[t]");
    p_ = p_.shifted(shift_);
    shift_ = 0;
  }
}

PIDElem PIDElem::operator+(const PIDElem& o) const {
  if (kind_ != o.kind_) throw AlgebraError("PID elements from different rings");
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int s = std::min(shift_, o.shift_);
  return PIDElem(kind_, p_.shifted(shift_ - s) + o.p_.shifted(o.shift_ - s), s);
}

PIDElem PIDElem::operator-() const { return PIDElem(kind_, -p_, shift_); }
PIDElem PIDElem::operator-(const PIDElem& o) const { return *this + (-o); }

PIDElem PIDElem::operator*(const PIDElem& o) const {
  if (kind_ != o.kind_) throw AlgebraError("PID elements from different rings");
  return PIDElem(kind_, p_ * o.p_, shift_ + o.shift_);
}

bool PIDElem::operator==(const PIDElem& o) const {
  return kind_ == o.kind_ && p_ == o.p_ && shift_ == o.shift_;
}

PIDElem PIDElem::unit_part() const {
  if (is_zero()) return one(kind_, field());
  return PIDElem(kind_, UPoly::constant(field(), p_.lead()), kind_ == PIDKind::laurent ? shift_ : 0);
}

PIDElem PIDElem::normalized() const {
  if (is_zero()) return *this;
  return PIDElem(kind_, p_.monic(), 0);
}

PIDElem PIDElem::inverse() const {
  if (!is_unit()) throw AlgebraError("inverse of a non-unit");
  return PIDElem(kind_, UPoly::constant(field(), field().inv(p_.lead())), -shift_);
}

VectorDim PIDElem::residue_dimension() const {
  if (is_zero()) return VectorDim::inf();
  return VectorDim::finite(std::size_t(p_.degree()));
}

void PIDElem::divmod(const PIDElem& a, const PIDElem& b, PIDElem& q, PIDElem& r) {
  if (a.kind_ != b.kind_) throw AlgebraError("PID elements from different rings");
  UPoly q0(a.field()), r0(a.field());
  UPoly::divmod(a.p_, b.p_, q0, r0);
  // a = t^sa (q0 pb + r0) = t^(sa - sb) q0 * b + t^sa r0
  q = PIDElem(a.kind_, q0, a.shift_ - b.shift_);
  r = PIDElem(a.kind_, r0, a.shift_);
}

std::string PIDElem::to_string() const {
  if (shift_ == 0) return p_.to_string();
  std::string s = "t^" + std::to_string(shift_);
  if (p_.degree() == 0 && p_.lead() == 1) return s;
  return s + "*(" + p_.to_string() + ")";
}

// ---------------------------------------------------------------- PIDMatrix

PIDMatrix::PIDMatrix(PIDKind kind, Field k, std::size_t rows, std::size_t cols)
    : kind_(kind), k_(k), rows_(rows), cols_(cols), data_(rows * cols, PIDElem::zero(kind, k)) {}

PIDMatrix PIDMatrix::identity(PIDKind kind, Field k, std::size_t n) {
  PIDMatrix m(kind, k, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = PIDElem::one(kind, k);
  return m;
}

PIDMatrix PIDMatrix::operator*(const PIDMatrix& o) const {
  if (cols_ != o.rows_) throw AlgebraError("PIDMatrix product: shape mismatch");
  PIDMatrix r(kind_, k_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j)
      for (std::size_t l = 0; l < cols_; ++l)
        if (!at(i, l).is_zero() && !o.at(l, j).is_zero()) r.at(i, j) = r.at(i, j) + at(i, l) * o.at(l, j);
  return r;
}

bool PIDMatrix::operator==(const PIDMatrix& o) const {
  return kind_ == o.kind_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PIDMatrix PIDMatrix::transpose() const {
  PIDMatrix r(kind_, k_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

PIDMatrix PIDMatrix::in_kind(PIDKind kind) const {
  if (kind_ == PIDKind::laurent && kind == PIDKind::polynomial) {
    for (const auto& e : data_)
      if (e.shift() < 0) throw AlgebraError("matrix has negative powers of t");
  }
  PIDMatrix r(kind, k_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = PIDElem(kind, data_[i].poly(), data_[i].shift());
  return r;
}

std::string PIDMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- Smith form

namespace {

void swap_rows(PIDMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(PIDMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row_dst += f * row_src
void add_row(PIDMatrix& m, std::size_t dst, std::size_t src, const PIDElem& f) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m.at(src, j).is_zero()) m.at(dst, j) = m.at(dst, j) + f * m.at(src, j);
}

void add_col(PIDMatrix& m, std::size_t dst, std::size_t src, const PIDElem& f) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.at(i, src).is_zero()) m.at(i, dst) = m.at(i, dst) + m.at(i, src) * f;
}

void scale_row(PIDMatrix& m, std::size_t r, const PIDElem& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * f;
}

}  // namespace

SmithForm smith_normal_form(const PIDMatrix& A) {
  const PIDKind kind = A.kind();
  const Field& k = A.field();
  PIDMatrix D = A;
  PIDMatrix U = PIDMatrix::identity(kind, k, A.rows());
  PIDMatrix V = PIDMatrix::identity(kind, k, A.cols());
  std::vector<PIDElem> inv;
  const std::size_t m = A.rows(), n = A.cols();
  for (std::size_t s = 0; s < std::min(m, n); ++s) {
    for (;;) {
      WorkBudget::charge();
      std::size_t bi = m, bj = n;
      for (std::size_t i = s; i < m; ++i)
        for (std::size_t j = s; j < n; ++j)
          if (!D.at(i, j).is_zero() && (bi == m || D.at(i, j).norm() < D.at(bi, bj).norm())) {
            bi = i;
            bj = j;
          }
      if (bi == m) break;
      swap_rows(D, s, bi);
      swap_rows(U, s, bi);
      swap_cols(D, s, bj);
      swap_cols(V, s, bj);
      bool clean = true;
      PIDElem q = PIDElem::zero(kind, k), r = q;
      for (std::size_t i = s + 1; i < m; ++i) {
        if (D.at(i, s).is_zero()) continue;
        PIDElem::divmod(D.at(i, s), D.at(s, s), q, r);
        add_row(D, i, s, -q);
        add_row(U, i, s, -q);
        clean &= r.is_zero();
      }
      for (std::size_t j = s + 1; j < n; ++j) {
        if (D.at(s, j).is_zero()) continue;
        PIDElem::divmod(D.at(s, j), D.at(s, s), q, r);
        add_col(D, j, s, -q);
        add_col(V, j, s, -q);
        clean &= r.is_zero();
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = s + 1; i < m && divides; ++i)
        for (std::size_t j = s + 1; j < n; ++j) {
          if (D.at(i, j).is_zero()) continue;
          PIDElem::divmod(D.at(i, j), D.at(s, s), q, r);
          if (!r.is_zero()) {
            add_row(D, s, i, PIDElem::one(kind, k));
            add_row(U, s, i, PIDElem::one(kind, k));
            divides = false;
            break;
          }
        }
      if (!divides) continue;
      PIDElem uinv = D.at(s, s).unit_part().inverse();
      scale_row(D, s, uinv);
      scale_row(U, s, uinv);
      inv.push_back(D.at(s, s));
      break;
    }
    if (inv.size() == s) break;
  }
  return SmithForm{std::move(U), std::move(D), std::move(V), std::move(inv)};
}

PIDElem determinant(const PIDMatrix& A) {
  if (A.rows() != A.cols()) throw AlgebraError("determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return PIDElem::one(A.kind(), A.field());
  if (n > 8) throw ResourceLimit("determinant: matrix larger than 8x8");
  PIDElem det = PIDElem::zero(A.kind(), A.field());
  for (std::size_t j = 0; j < n; ++j) {
    if (A.at(0, j).is_zero()) continue;
    PIDMatrix minor(A.kind(), A.field(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor.at(i - 1, cc++) = A.at(i, c);
    PIDElem term = A.at(0, j) * determinant(minor);
    det = j % 2 ? det - term : det + term;
  }
  return det;
}

// ---------------------------------------------------------------- modules over k[t]

UPoly to_upoly(const Polynomial& p) {
  if (p.ring()->num_vars() != 1) throw AlgebraError("expected a polynomial in one variable");
  std::vector<Scalar> c;
  for (const auto& t : p.terms()) {
    std::size_t e = t.mono.exp[0];
    if (c.size() <= e) c.resize(e + 1, Scalar(0));
    c[e] = t.coef;
  }
  return UPoly(p.ring()->field(), std::move(c));
}

PIDMatrix pid_matrix(const GradedMatrix& m, PIDKind kind) {
  PIDMatrix r(kind, m.ring()->field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = PIDElem(kind, to_upoly(m.entry(i, j)));
  return r;
}

std::string model_name(InjectiveModel m) { return m == InjectiveModel::J ? "J" : "I0"; }

namespace {

VectorDim sum_residues(const std::vector<PIDElem>& ds) {
  std::size_t s = 0;
  for (const auto& d : ds) s += d.residue_dimension().value;
  return VectorDim::finite(s);
}

void check_pid_ring(const FPModule& M) {
  if (M.ring()->num_vars() != 1) throw AlgebraError("module is not over a ring in one variable");
}

}  // namespace

VectorDim ext_against_injective_model(const FPModule& M, InjectiveModel model, int q) {
  check_pid_ring(M);
  if (q < 0 || q >= 2) return VectorDim::finite(0);
  const std::size_t m = M.presentation().rows();
  if (model == InjectiveModel::J) {
    // M (x) J = coker over the Laurent ring = sum J/(d_i) + J^f
    SmithForm S = smith_normal_form(pid_matrix(M.presentation(), PIDKind::laurent));
    std::size_t f = m - S.rank();
    if (q == 0) return f > 0 ? VectorDim::inf() : VectorDim::finite(0);
    return sum_residues(S.invariants);
  }
  // M = sum A/(d_i) + A^f; Hom(A/(d), I0) has dimension val_t(d), I0 is divisible
  SmithForm S = smith_normal_form(pid_matrix(M.presentation(), PIDKind::polynomial));
  std::size_t f = m - S.rank();
  if (q == 1) {
    for (const auto& d : S.invariants)
      if (d.is_zero()) throw InternalError("zero invariant factor in a Smith form");
    return VectorDim::finite(0);
  }
  if (f > 0) return VectorDim::inf();
  std::size_t v = 0;
  for (const auto& d : S.invariants) v += std::size_t(d.poly().valuation());
  return VectorDim::finite(v);
}

VectorDim ext_against_J_via_resolution(const FPModule& M, int q) {
  check_pid_ring(M);
  if (q < 0 || q > 2) return VectorDim::finite(0);
  PIDMatrix phi = pid_matrix(M.presentation(), PIDKind::polynomial);
  const std::size_t k = phi.cols();
  SmithForm S = smith_normal_form(phi);
  const std::size_t r = S.rank();
  // kernel of phi over k[t]: the last k - r columns of V
  PIDMatrix psi(PIDKind::polynomial, phi.field(), k, k - r);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = r; j < k; ++j) psi.at(i, j - r) = S.V.at(i, j);
  // Hom into J: J^m --phi^T--> J^k --psi^T--> J^{k-r}
  SmithForm A = smith_normal_form(phi.transpose().in_kind(PIDKind::laurent));
  SmithForm B = smith_normal_form(psi.transpose().in_kind(PIDKind::laurent));
  if (q == 0) return phi.rows() > A.rank() ? VectorDim::inf() : VectorDim::finite(0);
  if (q == 1) {
    std::size_t ker_rank = k - B.rank();
    if (ker_rank > A.rank()) return VectorDim::inf();
    if (ker_rank < A.rank()) throw InternalError("image of a map larger than the next kernel");
    return sum_residues(A.invariants);
  }
  if (k - r > B.rank()) return VectorDim::inf();
  return sum_residues(B.invariants);
}

BaerResult graded_baer_check(GradedRankOne model, int nmax, Window window) {
  if (nmax < 1) throw AlgebraError("graded Baer check needs nmax >= 1");
  auto nonzero = [model](int d) {
    switch (model) {
      case GradedRankOne::J: return true;
      case GradedRankOne::PolynomialRing: return d >= 0;
      case GradedRankOne::TorsionAtZero: return d < 0;
    }
    return false;
  };
  // t^n sends the basis element of degree s to the one of degree s + n when both exist
  for (int n = 1; n <= nmax; ++n)
    for (int s = window.lo; s <= window.hi; ++s) {
      bool target = nonzero(s + n);
      bool hit = nonzero(s) && target;
      if (target && !hit) return BaerResult{false, n, s};
    }
  return BaerResult{};
}

std::vector<ProbeRow> ungraded_injectivity_probe(InjectiveModel model,
                                                 const std::vector<std::pair<std::string, FPModule>>& probes) {
  std::vector<ProbeRow> rows;
  for (const auto& [name, M] : probes) {
    ProbeRow r{name, {}};
    for (int q = 0; q <= 2; ++q) r.ext.push_back(ext_against_injective_model(M, model, q));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace dimjump
