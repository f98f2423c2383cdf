#include "symcone/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace symcone::jordan {

namespace {
constexpr double kIdemTol = 1e-9;
}

Eja Eja::sym(int n) {
  if (n < 1) throw EjaErr("sym: n >= 1 required");
  Eja A;
  A.kind_ = EjaKind::Sym;
  A.msize_ = n;
  A.dim_ = n * (n + 1) / 2;
  A.rank_ = n;
  for (int i = 0; i < n; ++i)
    A.labels_.push_back("E" + std::to_string(i + 1) + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      A.labels_.push_back("S" + std::to_string(i + 1) + std::to_string(j + 1));
  A.gram_.assign(A.dim_, 1.0);
  // product via the matrix realization, x o y = (xy + yx)/2
  A.unit_ = RVec::Zero(A.dim_);
  for (int i = 0; i < n; ++i) A.unit_[i] = 1.0;
  A.tensor_.resize(A.dim_);
  for (int i = 0; i < A.dim_; ++i) {
    RMat bi = A.to_sym_matrix(RVec::Unit(A.dim_, i));
    RMat M(A.dim_, A.dim_);
    for (int j = 0; j < A.dim_; ++j) {
      RMat bj = A.to_sym_matrix(RVec::Unit(A.dim_, j));
      M.col(j) = A.from_sym_matrix(0.5 * (bi * bj + bj * bi));
    }
    A.tensor_[i] = M;
  }
  return A;
}

Eja Eja::herm(int n) {
  if (n < 1) throw EjaErr("herm: n >= 1 required");
  Eja A;
  A.kind_ = EjaKind::Herm;
  A.msize_ = n;
  A.dim_ = n * n;
  A.rank_ = n;
  for (int i = 0; i < n; ++i)
    A.labels_.push_back("E" + std::to_string(i + 1) + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      A.labels_.push_back("S" + std::to_string(i + 1) + std::to_string(j + 1));
      A.labels_.push_back("A" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  A.gram_.assign(A.dim_, 1.0);
  A.unit_ = RVec::Zero(A.dim_);
  for (int i = 0; i < n; ++i) A.unit_[i] = 1.0;
  A.tensor_.resize(A.dim_);
  for (int i = 0; i < A.dim_; ++i) {
    CMat bi = A.to_herm_matrix(RVec::Unit(A.dim_, i));
    RMat M(A.dim_, A.dim_);
    for (int j = 0; j < A.dim_; ++j) {
      CMat bj = A.to_herm_matrix(RVec::Unit(A.dim_, j));
      M.col(j) = A.from_herm_matrix(0.5 * (bi * bj + bj * bi));
    }
    A.tensor_[i] = M;
  }
  return A;
}

Eja Eja::spin(int n) {
  if (n < 1) throw EjaErr("spin: n >= 1 required");
  Eja A;
  A.kind_ = EjaKind::Spin;
  A.dim_ = n + 1;
  A.rank_ = 2;
  A.labels_.push_back("u");
  for (int k = 1; k <= n; ++k) A.labels_.push_back("x" + std::to_string(k));
  A.gram_.assign(A.dim_, 2.0);  // <x,y> = 2(x0 y0 + x.y), primitive norm 1
  A.unit_ = RVec::Unit(A.dim_, 0);
  A.tensor_.resize(A.dim_);
  for (int i = 0; i < A.dim_; ++i) {
    RMat M = RMat::Zero(A.dim_, A.dim_);
    for (int j = 0; j < A.dim_; ++j) {
      // (x o y)_0 = x0 y0 + x.y ; vector part x0 y_vec + y0 x_vec
      if (i == 0 && j == 0)
        M(0, j) = 1.0;
      else if (i == 0)
        M(j, j) = 1.0;
      else if (j == 0)
        M(i, j) = 1.0;
      else if (i == j)
        M(0, j) = 1.0;
    }
    A.tensor_[i] = M;
  }
  return A;
}

Eja Eja::from_jts_real_form(const jts::Jts& Z, const jts::CVec& e) {
  if (Z.norm(e) < 1e-12) throw EjaErr("real form: e = 0");
  if (!Z.is_tripotent(e)) throw EjaErr("real form: e is not a tripotent");
  Eja A;
  A.kind_ = EjaKind::Derived;
  A.zbasis_ = Z.real_form_x1(e);
  A.zgram_.assign(Z.dim(), 0.0);
  for (int k = 0; k < Z.dim(); ++k) A.zgram_[k] = to_double(Z.gram()[k]);
  A.dim_ = static_cast<int>(A.zbasis_.size());
  A.rank_ = Z.rank_of(e);
  A.gram_.assign(A.dim_, 1.0);
  for (int k = 0; k < A.dim_; ++k) A.labels_.push_back("x" + std::to_string(k + 1));
  // coordinates of e
  A.unit_ = RVec(A.dim_);
  for (int k = 0; k < A.dim_; ++k)
    A.unit_[k] = std::real(Z.inner(e, A.zbasis_[k]));
  A.tensor_.resize(A.dim_);
  for (int i = 0; i < A.dim_; ++i) {
    RMat M(A.dim_, A.dim_);
    for (int j = 0; j < A.dim_; ++j) {
      jts::CVec prod = Z.triple(A.zbasis_[i], e, A.zbasis_[j]);
      for (int k = 0; k < A.dim_; ++k)
        M(k, j) = std::real(Z.inner(prod, A.zbasis_[k]));
    }
    A.tensor_[i] = M;
  }
  return A;
}

RVec Eja::product(const RVec& x, const RVec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw EjaErr("product: dimension mismatch");
  RVec r = RVec::Zero(dim_);
  for (int i = 0; i < dim_; ++i)
    if (x[i] != 0.0) r += x[i] * (tensor_[i] * y);
  return r;
}

double Eja::inner(const RVec& x, const RVec& y) const {
  double s = 0;
  for (int k = 0; k < dim_; ++k) s += gram_[k] * x[k] * y[k];
  return s;
}

double Eja::norm(const RVec& x) const { return std::sqrt(inner(x, x)); }

RMat Eja::mult_op(const RVec& x) const {
  RMat M = RMat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x[i] != 0.0) M += x[i] * tensor_[i];
  return M;
}

double Eja::trace_form(const RVec& x, const RVec& y) const {
  return mult_op(product(x, y)).trace();
}

bool Eja::is_idempotent(const RVec& c, double tol) const {
  return norm(product(c, c) - c) <= tol * std::max(1.0, norm(c));
}

int Eja::idempotent_rank(const RVec& c) const {
  double s = inner(c, c);
  int r = static_cast<int>(std::lround(s));
  if (std::fabs(s - r) > 1e-6) throw EjaErr("idempotent_rank: non-integral norm");
  return r;
}

namespace {

// Groups eigenvalues within tol and sums the projections per group.
template <typename Solver, typename ToCoords>
std::vector<SpectralTerm> group_eigs(const Solver& eig, double scale,
                                     ToCoords to_coords) {
  std::vector<SpectralTerm> terms;
  const auto& ev = eig.eigenvalues();
  int n = static_cast<int>(ev.size());
  double tol = 1e-8 * std::max(1.0, scale);
  int k = 0;
  while (k < n) {
    int k2 = k;
    while (k2 + 1 < n && std::fabs(ev[k2 + 1] - ev[k]) <= tol) ++k2;
    double lambda = 0;
    for (int m = k; m <= k2; ++m) lambda += ev[m];
    lambda /= (k2 - k + 1);
    terms.push_back({lambda, to_coords(k, k2)});
    k = k2 + 1;
  }
  return terms;
}

RMat sym_basis_mat(int, int) { return {}; }  // placeholder, unused

}  // namespace

std::vector<SpectralTerm> Eja::spectral_matrix(const RVec& x) const {
  if (kind_ == EjaKind::Sym) {
    RMat m = to_sym_matrix(x);
    Eigen::SelfAdjointEigenSolver<RMat> eig(m);
    if (eig.info() != Eigen::Success)
      throw EjaErr("spectral: eigensolver failed, residual unknown");
    return group_eigs(eig, m.norm(), [&](int k, int k2) {
      RMat proj = RMat::Zero(msize_, msize_);
      for (int c = k; c <= k2; ++c)
        proj += eig.eigenvectors().col(c) * eig.eigenvectors().col(c).transpose();
      return from_sym_matrix(proj);
    });
  }
  CMat m = to_herm_matrix(x);
  Eigen::SelfAdjointEigenSolver<CMat> eig(m);
  if (eig.info() != Eigen::Success)
    throw EjaErr("spectral: eigensolver failed, residual unknown");
  return group_eigs(eig, m.norm(), [&](int k, int k2) {
    CMat proj = CMat::Zero(msize_, msize_);
    for (int c = k; c <= k2; ++c)
      proj += eig.eigenvectors().col(c) * eig.eigenvectors().col(c).adjoint();
    return from_herm_matrix(proj);
  });
}

std::vector<SpectralTerm> Eja::spectral_spin(const RVec& x) const {
  double x0 = x[0];
  RVec v = x.tail(dim_ - 1);
  double nv = v.norm();
  std::vector<SpectralTerm> terms;
  double scale = std::max(1.0, std::fabs(x0) + nv);
  if (nv <= 1e-14 * scale) {
    terms.push_back({x0, unit_});
    return terms;
  }
  RVec cp(dim_), cm(dim_);
  cp[0] = 0.5;
  cm[0] = 0.5;
  cp.tail(dim_ - 1) = 0.5 * v / nv;
  cm.tail(dim_ - 1) = -0.5 * v / nv;
  terms.push_back({x0 - nv, cm});
  terms.push_back({x0 + nv, cp});
  return terms;
}

std::vector<SpectralTerm> Eja::spectral_power_basis(const RVec& x) const {
  // Orthonormal basis of R[x] from Jordan powers, then eigensolve the
  // restriction of M_x. Each eigenvalue appears once there; the eigenvector
  // rescales to the spectral idempotent.
  std::vector<RVec> basis;
  RVec p = unit_;
  for (int it = 0; it <= rank_; ++it) {
    RVec w = p;
    for (const auto& b : basis) w -= inner(w, b) * b;
    double nw = norm(w);
    if (nw <= 1e-10 * std::max(1.0, norm(p))) break;
    basis.push_back(w / nw);
    p = product(x, p);
  }
  const int d = static_cast<int>(basis.size());
  RMat R(d, d);
  for (int i = 0; i < d; ++i) {
    RVec xi = product(x, basis[i]);
    for (int j = 0; j < d; ++j) R(j, i) = inner(xi, basis[j]);
  }
  Eigen::SelfAdjointEigenSolver<RMat> eig(0.5 * (R + R.transpose()));
  if (eig.info() != Eigen::Success)
    throw EjaErr("spectral: restricted eigensolver failed");
  std::vector<SpectralTerm> terms;
  for (int k = 0; k < d; ++k) {
    RVec z = RVec::Zero(dim_);
    for (int j = 0; j < d; ++j) z += eig.eigenvectors()(j, k) * basis[j];
    RVec zz = product(z, z);
    double t = inner(zz, z) / inner(z, z);
    if (std::fabs(t) <= 1e-10) continue;  // numerically zero idempotent scale
    terms.push_back({eig.eigenvalues()[k], z / t});
  }
  std::sort(terms.begin(), terms.end(),
            [](const SpectralTerm& a, const SpectralTerm& b) {
              return a.lambda < b.lambda;
            });
  return terms;
}

std::vector<SpectralTerm> Eja::spectral_full(const RVec& x) const {
  switch (kind_) {
    case EjaKind::Sym:
    case EjaKind::Herm:
      return spectral_matrix(x);
    case EjaKind::Spin:
      return spectral_spin(x);
    case EjaKind::Derived:
      return spectral_power_basis(x);
  }
  return {};
}

std::vector<SpectralTerm> Eja::spectral(const RVec& x) const {
  if (x.size() != dim_) throw EjaErr("spectral: dimension mismatch");
  auto terms = spectral_full(x);
  double scale = 0;
  for (const auto& t : terms) scale = std::max(scale, std::fabs(t.lambda));
  std::vector<SpectralTerm> nz;
  for (auto& t : terms)
    if (std::fabs(t.lambda) > 1e-12 * std::max(1.0, scale)) nz.push_back(t);
  return nz;
}

MembershipResult Eja::cone_membership(const RVec& x, double tol) const {
  auto terms = spectral_full(x);
  double scale = 0;
  for (const auto& t : terms) scale = std::max(scale, std::fabs(t.lambda));
  double cut = tol * std::max(1.0, scale);
  int pos = 0;
  bool outside = false, boundary = false;
  for (const auto& t : terms) {
    if (t.lambda < -cut) outside = true;
    else if (t.lambda > cut) pos += idempotent_rank(t.idem);
    else boundary = true;
  }
  if (outside) return {Membership::Outside, 0};
  if (boundary || pos < rank_) return {Membership::Boundary, pos};
  return {Membership::Interior, pos};
}

Eja::Peirce Eja::peirce(const RVec& c) const {
  if (!is_idempotent(c, kIdemTol)) throw EjaErr("peirce: c o c != c");
  RMat M = mult_op(c);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) M(i, j) *= std::sqrt(gram_[i] / gram_[j]);
  Eigen::SelfAdjointEigenSolver<RMat> eig(0.5 * (M + M.transpose()));
  std::vector<int> b0, b12, b1;
  for (int k = 0; k < dim_; ++k) {
    double ev = eig.eigenvalues()[k];
    double d0 = std::fabs(ev), d12 = std::fabs(ev - 0.5), d1 = std::fabs(ev - 1.0);
    double m = std::min({d0, d12, d1});
    if (m > 1e-7) throw EjaErr("peirce: eigenvalue off {0,1/2,1}");
    (m == d0 ? b0 : m == d12 ? b12 : b1).push_back(k);
  }
  auto collect = [&](const std::vector<int>& idx) {
    RMat B(dim_, static_cast<int>(idx.size()));
    for (std::size_t c2 = 0; c2 < idx.size(); ++c2) {
      RVec v = eig.eigenvectors().col(idx[c2]);
      for (int i = 0; i < dim_; ++i) v[i] /= std::sqrt(gram_[i]);
      B.col(static_cast<int>(c2)) = v;
    }
    return B;
  };
  return {collect(b0), collect(b12), collect(b1)};
}

Eja::ConeFace Eja::cone_face(const RVec& c) const {
  if (!is_idempotent(c, kIdemTol)) throw EjaErr("cone_face: c o c != c");
  ConeFace f;
  f.idem = c;
  f.x0_basis = peirce(c).x0;
  f.rank = norm(c) < 1e-9 ? 0 : idempotent_rank(c);
  f.dual_idem = unit_ - c;
  return f;
}

RVec Eja::random_element(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  RVec v(dim_);
  for (int k = 0; k < dim_; ++k) v[k] = g(rng);
  return v;
}

RMat Eja::to_sym_matrix(const RVec& x) const {
  if (kind_ != EjaKind::Sym) throw EjaErr("to_sym_matrix: wrong kind");
  const int n = msize_;
  const double s = 1.0 / std::sqrt(2.0);
  RMat m = RMat::Zero(n, n);
  int k = n;
  for (int i = 0; i < n; ++i) m(i, i) = x[i];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      m(i, j) = s * x[k];
      m(j, i) = s * x[k];
    }
  return m;
}

RVec Eja::from_sym_matrix(const RMat& m) const {
  const int n = msize_;
  const double s = std::sqrt(2.0);
  RVec x(dim_);
  int k = n;
  for (int i = 0; i < n; ++i) x[i] = m(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) x[k] = s * 0.5 * (m(i, j) + m(j, i));
  return x;
}

CMat Eja::to_herm_matrix(const RVec& x) const {
  if (kind_ != EjaKind::Herm) throw EjaErr("to_herm_matrix: wrong kind");
  const int n = msize_;
  const double s = 1.0 / std::sqrt(2.0);
  CMat m = CMat::Zero(n, n);
  int k = n;
  for (int i = 0; i < n; ++i) m(i, i) = x[i];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, k += 2) {
      std::complex<double> v(s * x[k], -s * x[k + 1]);
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  return m;
}

RVec Eja::from_herm_matrix(const CMat& m) const {
  const int n = msize_;
  const double s = std::sqrt(2.0);
  RVec x(dim_);
  int k = n;
  for (int i = 0; i < n; ++i) x[i] = std::real(m(i, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, k += 2) {
      x[k] = s * 0.5 * std::real(m(i, j) + m(j, i));
      x[k + 1] = -s * 0.5 * std::imag(m(i, j) - m(j, i));
    }
  return x;
}

jts::CVec Eja::to_z(const RVec& x) const {
  if (kind_ != EjaKind::Derived) throw EjaErr("to_z: wrong kind");
  jts::CVec z = jts::CVec::Zero(zbasis_[0].size());
  for (int k = 0; k < dim_; ++k) z += x[k] * zbasis_[k];
  return z;
}

RVec Eja::from_z(const jts::CVec& z) const {
  if (kind_ != EjaKind::Derived) throw EjaErr("from_z: wrong kind");
  RVec x(dim_);
  for (int k = 0; k < dim_; ++k) {
    std::complex<double> ip = 0;
    for (int a = 0; a < z.size(); ++a)
      ip += zgram_[a] * z[a] * std::conj(zbasis_[k][a]);
    x[k] = std::real(ip);
  }
  return x;
}

}  // namespace symcone::jordan
