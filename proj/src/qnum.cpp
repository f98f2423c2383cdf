#include "symcone/qnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace symcone {

RatMat RatMat::identity(std::size_t n) {
  RatMat I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMat: shape mismatch");
  RatMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMat RatMat::scaled(const Rat& s) const {
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

RatVec RatMat::apply(const RatVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("RatMat: apply mismatch");
  RatVec y(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

Rat RatMat::trace() const {
  Rat t(0);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool RatMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& v) { return v == 0; });
}

namespace {

// Row echelon with partial pivoting by nonzero search; returns pivot columns.
std::vector<std::size_t> echelonize(RatMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    Rat inv = Rat(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t RatMat::rank() const {
  RatMat m = *this;
  return echelonize(m).size();
}

std::vector<RatVec> RatMat::nullspace() const {
  RatMat m = *this;
  auto pivots = echelonize(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(cols_, Rat(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> RatMat::solve(const RatVec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("RatMat: solve mismatch");
  RatMat aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto pivots = echelonize(aug);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  RatVec x(cols_, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
  return x;
}

std::optional<RatMat> RatMat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  RatMat aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = 1;
  }
  auto pivots = echelonize(aug);
  if (pivots.size() != rows_) return std::nullopt;
  for (std::size_t p = 0; p < pivots.size(); ++p)
    if (pivots[p] != p) return std::nullopt;
  RatMat inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
  return inv;
}

QCMat QCMat::identity(std::size_t n) {
  QCMat I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = QC(1);
  return I;
}

QCMat QCMat::operator*(const QCMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QCMat: shape mismatch");
  QCMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const QC& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

QCMat QCMat::operator+(const QCMat& o) const {
  QCMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QCMat QCMat::operator-(const QCMat& o) const {
  QCMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QCMat QCMat::scaled(const QC& s) const {
  QCMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

QCMat QCMat::conj_transpose() const {
  QCMat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

QCVec QCMat::apply(const QCVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("QCMat: apply mismatch");
  QCVec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
  return y;
}

QC QCMat::trace() const {
  QC t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool QCMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const QC& v) { return v.is_zero(); });
}

void QPoly::trim() {
  while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
}

int QPoly::degree() const {
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
    if (c_[i] != 0) return i;
  return -1;
}

QPoly QPoly::operator+(const QPoly& o) const {
  RatVec r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  RatVec r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  RatVec r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const Rat& s) const {
  RatVec r = c_;
  for (auto& v : r) v *= s;
  return QPoly(std::move(r));
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  RatVec r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(i);
  return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& o) const {
  int dn = degree(), dd = o.degree();
  if (dd < 0) throw std::invalid_argument("QPoly: division by zero");
  if (dn < dd) return {QPoly(), *this};
  RatVec rem = c_;
  rem.resize(dn + 1);
  RatVec quot(dn - dd + 1, Rat(0));
  const Rat lead = o.c_[dd];
  for (int k = dn - dd; k >= 0; --k) {
    Rat f = rem[k + dd] / lead;
    quot[k] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= f * o.c_[j];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.make_monic();
}

QPoly QPoly::squarefree_part() const {
  if (degree() <= 0) return make_monic();
  QPoly g = gcd(*this, derivative());
  return divmod(g).first.make_monic();
}

std::optional<QPoly> QPoly::inverse_mod(const QPoly& m) const {
  // Extended Euclid on (a, m).
  QPoly r0 = m, r1 = mod(m);
  QPoly t0, t1(RatVec{Rat(1)});
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) return std::nullopt;
  return t0.scaled(Rat(1) / r0.coeffs()[0]).mod(m);
}

QPoly QPoly::make_monic() const {
  int d = degree();
  if (d < 0) return *this;
  return scaled(Rat(1) / c_[d]);
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
    acc = acc * x + c_[i];
  return acc;
}

RatMat QPoly::eval(const RatMat& A) const {
  const std::size_t n = A.rows();
  RatMat acc(n, n);
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    acc = acc * A;
    for (std::size_t k = 0; k < n; ++k) acc(k, k) += c_[i];
  }
  return acc;
}

QPoly char_poly(const RatMat& A) {
  // Hessenberg reduction by exact similarity transforms, then the standard
  // recurrence on leading principal minors of (xI - H).
  const std::size_t n = A.rows();
  if (n != A.cols()) throw std::invalid_argument("char_poly: square required");
  RatMat H = A;
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && H(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H(piv, j), H(col + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(H(i, piv), H(i, col + 1));
    }
    const Rat p = H(col + 1, col);
    for (std::size_t i = col + 2; i < n; ++i) {
      if (H(i, col) == 0) continue;
      Rat f = H(i, col) / p;
      for (std::size_t j = 0; j < n; ++j) H(i, j) -= f * H(col + 1, j);
      for (std::size_t k = 0; k < n; ++k) H(k, col + 1) += f * H(k, i);
    }
  }
  // p_0 = 1, p_k = char poly of leading k x k block of H.
  std::vector<QPoly> p(n + 1);
  p[0] = QPoly(RatVec{Rat(1)});
  for (std::size_t k = 1; k <= n; ++k) {
    QPoly term = QPoly({-H(k - 1, k - 1), Rat(1)}) * p[k - 1];
    Rat beta(1);
    for (std::size_t m = 1; m < k; ++m) {
      beta *= H(k - m, k - m - 1);
      if (beta == 0) break;
      term = term - p[k - m - 1].scaled(beta * H(k - m - 1, k - 1));
    }
    p[k] = std::move(term);
  }
  return p[n];
}

Rat snap_rational(double x, long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("snap_rational: non-finite");
  // Stern-Brocot style continued fraction expansion.
  bool neg = x < 0;
  double v = std::fabs(x);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > 9e17) break;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rat(0);
  Rat r(p1, q1);
  return neg ? -r : r;
}

std::optional<RatVec> snap_vector(const std::vector<double>& x, long max_den,
                                  double tol) {
  RatVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = snap_rational(x[i], max_den);
    if (std::fabs(to_double(out[i]) - x[i]) > tol) return std::nullopt;
  }
  return out;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

std::string rat_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace symcone
