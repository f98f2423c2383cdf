#ifndef SYMCONE_QNUM_HPP
#define SYMCONE_QNUM_HPP

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcone {

using Rat = boost::multiprecision::mpq_rational;

/// Complex number with exact rational real/imaginary parts.
struct QC {
  Rat re{0};
  Rat im{0};

  QC() = default;
  QC(Rat r) : re(std::move(r)) {}
  QC(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  QC(int r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  QC conj() const { return {re, -im}; }

  QC operator+(const QC& o) const { return {re + o.re, im + o.im}; }
  QC operator-(const QC& o) const { return {re - o.re, im - o.im}; }
  QC operator-() const { return {-re, -im}; }
  QC operator*(const QC& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  QC& operator+=(const QC& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  QC& operator-=(const QC& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  QC& operator*=(const QC& o) { return *this = *this * o; }
  bool operator==(const QC& o) const { return re == o.re && im == o.im; }
};

inline QC qc_i() { return QC(Rat(0), Rat(1)); }

using RatVec = std::vector<Rat>;
using QCVec = std::vector<QC>;

/// Dense matrix over the rationals. Row-major, sized at construction.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  RatMat operator*(const RatMat& o) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat scaled(const Rat& s) const;
  RatMat transpose() const;
  RatVec apply(const RatVec& x) const;
  Rat trace() const;
  bool is_zero() const;

  std::size_t rank() const;
  /// Basis of the kernel, one vector per column of the result.
  std::vector<RatVec> nullspace() const;
  /// Solves A x = b exactly; empty when the system is inconsistent.
  std::optional<RatVec> solve(const RatVec& b) const;
  std::optional<RatMat> inverse() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Dense matrix over QC (exact Gaussian rationals).
class QCMat {
 public:
  QCMat() = default;
  QCMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QCMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QC& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const QC& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  QCMat operator*(const QCMat& o) const;
  QCMat operator+(const QCMat& o) const;
  QCMat operator-(const QCMat& o) const;
  QCMat scaled(const QC& s) const;
  QCMat conj_transpose() const;
  QCVec apply(const QCVec& x) const;
  QC trace() const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<QC> a_;
};

/// Polynomial with rational coefficients, coeffs[k] multiplying x^k.
class QPoly {
 public:
  QPoly() : c_{Rat(0)} {}
  explicit QPoly(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPoly x() { return QPoly({Rat(0), Rat(1)}); }

  int degree() const;  // -1 for the zero polynomial
  const RatVec& coeffs() const { return c_; }
  bool is_zero() const { return degree() < 0; }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly scaled(const Rat& s) const;
  QPoly derivative() const;
  /// Quotient and remainder of division by o (o nonzero).
  std::pair<QPoly, QPoly> divmod(const QPoly& o) const;
  QPoly mod(const QPoly& o) const { return divmod(o).second; }
  /// Monic gcd.
  static QPoly gcd(QPoly a, QPoly b);
  /// g / gcd(g, g') -- the radical, same roots without multiplicity.
  QPoly squarefree_part() const;
  /// Modular inverse: p * result == 1 mod m; empty if gcd(p, m) != 1.
  std::optional<QPoly> inverse_mod(const QPoly& m) const;
  QPoly make_monic() const;

  Rat eval(const Rat& x) const;
  RatMat eval(const RatMat& A) const;

 private:
  void trim();
  RatVec c_;
};

/// Characteristic polynomial via exact Hessenberg reduction, O(n^3).
QPoly char_poly(const RatMat& A);

/// Nearest rational with denominator <= max_den (continued fractions).
Rat snap_rational(double x, long max_den);

/// Snaps every coordinate; fails when any |x - snap(x)| exceeds tol.
std::optional<RatVec> snap_vector(const std::vector<double>& x, long max_den,
                                  double tol);

double to_double(const Rat& r);
std::string rat_string(const Rat& r);

}  // namespace symcone

#endif
