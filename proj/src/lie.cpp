#include "symcone/lie.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <random>

namespace symcone::lie {

namespace {

Rat frob(const QCMat& A, const QCMat& B) {
  Rat s(0);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const QC &a = A(i, j), &b = B(i, j);
      s += a.re * b.re + a.im * b.im;
    }
  return s;
}

double frob_d(const CMat& A, const CMat& B) {
  return std::real((A.cwiseProduct(B.conjugate())).sum());
}

CMat to_cmat(const QCMat& M) {
  CMat out(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      out(i, j) = {to_double(M(i, j).re), to_double(M(i, j).im)};
  return out;
}

QCMat i_times_identity(int n) {
  QCMat M(n, n);
  for (int k = 0; k < n; ++k) M(k, k) = qc_i();
  return M;
}

QCVec qc_scale(const QCVec& v, const QC& s) {
  QCVec r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) r[k] = v[k] * s;
  return r;
}

}  // namespace

LieAlgebraG::LieAlgebraG(jts::Jts Z) : Z_(std::move(Z)) {
  build_basis();
  build_structure();
  h0x_ = coords_exact(i_times_identity(Z_.dim()), QCVec(Z_.dim()));
  h0_ = from_exact(h0x_);
}

void LieAlgebraG::build_basis() {
  const int n = Z_.dim();
  // real basis of Z as exact vectors: b_t and i b_t
  std::vector<QCVec> f(2 * n, QCVec(n));
  for (int t = 0; t < n; ++t) {
    f[2 * t][t] = QC(1);
    f[2 * t + 1][t] = qc_i();
  }
  // inner derivations u box v - v box u span aut(Z); orthogonalize exactly
  for (int s = 0; s < 2 * n; ++s) {
    for (int t = s + 1; t < 2 * n; ++t) {
      QCMat D = Z_.box_exact(f[s], f[t]) - Z_.box_exact(f[t], f[s]);
      for (std::size_t a = 0; a < kbasis_.size(); ++a) {
        Rat c = frob(D, kbasis_[a]) / kbasis_norm2_[a];
        if (c != 0) D = D - kbasis_[a].scaled(QC(c));
      }
      if (!D.is_zero()) {
        kbasis_norm2_.push_back(frob(D, D));
        kbasis_.push_back(std::move(D));
      }
    }
  }
  dim_k_ = static_cast<int>(kbasis_.size());
  dim_ = dim_k_ + 2 * n;
  kbasis_d_.reserve(dim_k_);
  for (const auto& K : kbasis_) kbasis_d_.push_back(to_cmat(K));
}

RatVec LieAlgebraG::coords_exact(const QCMat& kappa, const QCVec& u) const {
  RatVec x(dim_, Rat(0));
  QCMat rem = kappa;
  for (int a = 0; a < dim_k_; ++a) {
    Rat c = frob(rem, kbasis_[a]) / kbasis_norm2_[a];
    x[a] = c;
    if (c != 0) rem = rem - kbasis_[a].scaled(QC(c));
  }
  if (!rem.is_zero())
    throw LieErr("coords_exact: kappa is not an inner triple derivation");
  const int n = Z_.dim();
  for (int t = 0; t < n; ++t) {
    x[dim_k_ + 2 * t] = u[t].re;
    x[dim_k_ + 2 * t + 1] = u[t].im;
  }
  return x;
}

QCVec LieAlgebraG::u_from_coords_exact(const RatVec& x) const {
  const int n = Z_.dim();
  QCVec u(n);
  for (int t = 0; t < n; ++t)
    u[t] = QC(x[dim_k_ + 2 * t], x[dim_k_ + 2 * t + 1]);
  return u;
}

RatVec LieAlgebraG::bracket_exact(const RatVec& x, const RatVec& y) const {
  // reconstruct (kappa, u) on both sides and apply the bracket formula
  const int n = Z_.dim();
  QCMat k1(n, n), k2(n, n);
  for (int a = 0; a < dim_k_; ++a) {
    if (x[a] != 0) k1 = k1 + kbasis_[a].scaled(QC(x[a]));
    if (y[a] != 0) k2 = k2 + kbasis_[a].scaled(QC(y[a]));
  }
  QCVec u1 = u_from_coords_exact(x), u2 = u_from_coords_exact(y);
  QCMat kb = k1 * k2 - k2 * k1 +
             (Z_.box_exact(u1, u2) - Z_.box_exact(u2, u1)).scaled(QC(2));
  QCVec ub = k1.apply(u2);
  QCVec t2 = k2.apply(u1);
  for (int t = 0; t < n; ++t) ub[t] -= t2[t];
  return coords_exact(kb, ub);
}

void LieAlgebraG::build_structure() {
  ad_.assign(dim_, RatMat(dim_, dim_));
  for (int a = 0; a < dim_; ++a) {
    RatVec ea(dim_, Rat(0));
    ea[a] = 1;
    for (int b = a + 1; b < dim_; ++b) {
      RatVec eb(dim_, Rat(0));
      eb[b] = 1;
      RatVec br = bracket_exact(ea, eb);
      for (int c = 0; c < dim_; ++c) {
        ad_[a](c, b) = br[c];
        ad_[b](c, a) = -br[c];
      }
    }
  }
  ad_d_.clear();
  ad_d_.reserve(dim_);
  for (const auto& M : ad_) {
    RMat D(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) D(i, j) = to_double(M(i, j));
    ad_d_.push_back(std::move(D));
  }
  // Killing form and the invariant inner product <x,y> = -B(x, theta y)
  B_ = RatMat(dim_, dim_);
  for (int a = 0; a < dim_; ++a)
    for (int b = a; b < dim_; ++b) {
      Rat s(0);
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
          if (ad_[a](i, j) != 0) s += ad_[a](i, j) * ad_[b](j, i);
      B_(a, b) = s;
      B_(b, a) = s;
    }
  W_ = RatMat(dim_, dim_);
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      W_(a, b) = (b < dim_k_ ? -B_(a, b) : B_(a, b));
  B_d_ = RMat(dim_, dim_);
  W_d_ = RMat(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      B_d_(i, j) = to_double(B_(i, j));
      W_d_(i, j) = to_double(W_(i, j));
    }
}

LieElement LieAlgebraG::element(const RVec& x) const {
  const int n = Z_.dim();
  LieElement xi;
  xi.kappa = CMat::Zero(n, n);
  for (int a = 0; a < dim_k_; ++a)
    if (x[a] != 0.0) xi.kappa += x[a] * kbasis_d_[a];
  xi.u = CVec(n);
  for (int t = 0; t < n; ++t)
    xi.u[t] = {x[dim_k_ + 2 * t], x[dim_k_ + 2 * t + 1]};
  return xi;
}

RVec LieAlgebraG::coords(const LieElement& xi) const {
  return coords(xi.kappa, xi.u);
}

RVec LieAlgebraG::coords(const CMat& kappa, const CVec& u) const {
  RVec x = RVec::Zero(dim_);
  CMat rem = kappa;
  for (int a = 0; a < dim_k_; ++a) {
    double c = frob_d(rem, kbasis_d_[a]) / to_double(kbasis_norm2_[a]);
    x[a] = c;
    rem -= c * kbasis_d_[a];
  }
  if (rem.norm() > 1e-7 * std::max(1.0, kappa.norm()))
    throw LieErr("coords: kappa is not a triple derivation");
  const int n = Z_.dim();
  for (int t = 0; t < n; ++t) {
    x[dim_k_ + 2 * t] = u[t].real();
    x[dim_k_ + 2 * t + 1] = u[t].imag();
  }
  return x;
}

RVec LieAlgebraG::xi_minus(const CVec& u) const {
  return coords(CMat::Zero(Z_.dim(), Z_.dim()), u);
}

RVec LieAlgebraG::x_plus(const CVec& u) const {
  std::complex<double> i(0, 1);
  return coords(i * Z_.box(u, u), -0.5 * i * u);
}

RVec LieAlgebraG::x_minus(const CVec& u) const {
  std::complex<double> i(0, 1);
  return coords(-i * Z_.box(u, u), -0.5 * i * u);
}

RVec LieAlgebraG::eta(const CVec& e, const CVec& u) const {
  CMat d = Z_.box(e, u) - Z_.box(u, e);
  return coords(2.0 * d, u);
}

RVec LieAlgebraG::zeta(const CVec& e, const CVec& u) const {
  CMat d = Z_.box(e, u) - Z_.box(u, e);
  return coords(d, u);
}

RVec LieAlgebraG::phi(const CVec& e, const CVec& u, const CVec& v) const {
  std::complex<double> i(0, 1);
  return eta(e, u) + zeta(e, -0.5 * i * v);
}

RatVec LieAlgebraG::xi_minus_exact(const QCVec& u) const {
  return coords_exact(QCMat(Z_.dim(), Z_.dim()), u);
}

RatVec LieAlgebraG::x_plus_exact(const QCVec& u) const {
  QCMat k = Z_.box_exact(u, u).scaled(qc_i());
  return coords_exact(k, qc_scale(u, QC(Rat(0), Rat(-1, 2))));
}

RatVec LieAlgebraG::x_minus_exact(const QCVec& u) const {
  QCMat k = Z_.box_exact(u, u).scaled(QC(Rat(0), Rat(-1)));
  return coords_exact(k, qc_scale(u, QC(Rat(0), Rat(-1, 2))));
}

RatVec LieAlgebraG::eta_exact(const QCVec& e, const QCVec& u) const {
  QCMat d = Z_.box_exact(e, u) - Z_.box_exact(u, e);
  return coords_exact(d.scaled(QC(2)), u);
}

RatVec LieAlgebraG::zeta_exact(const QCVec& e, const QCVec& u) const {
  QCMat d = Z_.box_exact(e, u) - Z_.box_exact(u, e);
  return coords_exact(d, u);
}

RVec LieAlgebraG::bracket(const RVec& x, const RVec& y) const {
  RVec out = RVec::Zero(dim_);
  for (int a = 0; a < dim_; ++a)
    if (x[a] != 0.0) out += x[a] * (ad_d_[a] * y);
  return out;
}

RMat LieAlgebraG::ad(const RVec& x) const {
  RMat M = RMat::Zero(dim_, dim_);
  for (int a = 0; a < dim_; ++a)
    if (x[a] != 0.0) M += x[a] * ad_d_[a];
  return M;
}

RatMat LieAlgebraG::ad_exact(const RatVec& x) const {
  RatMat M(dim_, dim_);
  for (int a = 0; a < dim_; ++a) {
    if (x[a] == 0) continue;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (ad_[a](i, j) != 0) M(i, j) += x[a] * ad_[a](i, j);
  }
  return M;
}

double LieAlgebraG::killing(const RVec& x, const RVec& y) const {
  return x.dot(B_d_ * y);
}

double LieAlgebraG::killing_closed_form(const LieElement& xi,
                                        const LieElement& eta) const {
  const int n = Z_.dim();
  // vector-field part: B(xi_u, xi_v) = 4 tr_Z(u box v + v box u)
  std::complex<double> bp =
      4.0 * (Z_.box(xi.u, eta.u).trace() + Z_.box(eta.u, xi.u).trace());
  // derivation part: write eta.kappa = sum c_ij (b_i box b_j), then
  // B(delta, u box v) = 2 tr_Z((delta u) box v)
  CMat M(n * n, n * n);
  std::vector<CVec> basis(n, CVec::Zero(n));
  for (int t = 0; t < n; ++t) basis[t][t] = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CMat bij = Z_.box(basis[i], basis[j]);
      M.col(i * n + j) = Eigen::Map<CVec>(bij.data(), n * n);
    }
  CMat kap = eta.kappa;
  CVec rhs = Eigen::Map<CVec>(kap.data(), n * n);
  CVec c = M.completeOrthogonalDecomposition().solve(rhs);
  std::complex<double> bk = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (std::abs(c[i * n + j]) < 1e-14) continue;
      CVec du = xi.kappa * basis[i];
      bk += c[i * n + j] * 2.0 * Z_.box(du, basis[j]).trace();
    }
  return std::real(bk + bp);
}

RVec LieAlgebraG::theta(const RVec& x) const {
  RVec y = x;
  y.tail(dim_ - dim_k_) *= -1.0;
  return y;
}

double LieAlgebraG::inner(const RVec& x, const RVec& y) const {
  return x.dot(W_d_ * y);
}

double LieAlgebraG::norm(const RVec& x) const {
  return std::sqrt(std::max(0.0, inner(x, x)));
}

std::optional<CayleyTriple> LieAlgebraG::cayley_test(const RVec& x,
                                                     double tol) const {
  double nx = norm(x);
  if (nx < tol) return std::nullopt;
  RVec tx = theta(x);
  RVec h = -bracket(x, tx);
  RVec lhs = bracket(bracket(tx, x), x);
  if (norm(lhs - 2.0 * x) > tol * std::max(1.0, nx)) return std::nullopt;
  CayleyTriple t;
  t.h = h;
  t.xp = x;
  t.xm = -tx;
  t.h1 = norm(bracket(h0_, x) - 0.5 * h) <= tol * std::max(1.0, norm(h));
  t.e = element(h).u;
  return t;
}

CayleyTriple LieAlgebraG::cayley_elements(const CVec& e) const {
  if (Z_.norm(e) < 1e-12) throw LieErr("cayley_elements: e = 0");
  if (!Z_.is_tripotent(e)) throw LieErr("cayley_elements: not a tripotent");
  CayleyTriple t;
  t.h = xi_minus(e);
  t.xp = x_plus(e);
  t.xm = x_minus(e);
  t.h1 = true;
  t.e = e;
  double scale = std::max(1.0, norm(t.h));
  if (norm(bracket(t.h, t.xp) - 2.0 * t.xp) > 1e-9 * scale ||
      norm(bracket(t.h, t.xm) + 2.0 * t.xm) > 1e-9 * scale ||
      norm(bracket(t.xp, t.xm) - t.h) > 1e-9 * scale ||
      norm(bracket(h0_, t.xp) - 0.5 * t.h) > 1e-9 * scale)
    throw LieErr("cayley_elements: sl2 relations failed");
  return t;
}

CVec LieAlgebraG::tripotent_from_cayley(const CayleyTriple& t,
                                        double tol) const {
  RVec h = t.h;
  for (int a = 0; a < dim_k_; ++a)
    if (std::fabs(h[a]) > tol * std::max(1.0, norm(h)))
      throw LieErr("tripotent_from_cayley: h has a derivation part");
  CVec e = element(h).u;
  if (!Z_.is_tripotent(e, tol))
    throw LieErr("tripotent_from_cayley: recovered e is not a tripotent");
  double scale = std::max(1.0, norm(t.xp));
  if (norm(x_plus(e) - t.xp) > tol * scale ||
      norm(x_minus(e) - t.xm) > tol * scale)
    throw LieErr("tripotent_from_cayley: round trip failed");
  return e;
}

Grading LieAlgebraG::grading(const CVec& e) const {
  if (!Z_.is_tripotent(e)) throw LieErr("grading: not a tripotent");
  RMat M = ad(xi_minus(e));
  RMat A = W_d_ * M;
  A = 0.5 * (A + A.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<RMat> eig(A, W_d_);
  if (eig.info() != Eigen::Success) throw LieErr("grading: eigensolver failed");
  Grading G;
  G.e = e;
  std::array<std::vector<int>, 5> groups;
  double scale =
      std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
  for (int k = 0; k < dim_; ++k) {
    double ev = eig.eigenvalues()[k];
    int j = static_cast<int>(std::lround(ev));
    if (j < -2 || j > 2 || std::fabs(ev - j) > 1e-8 * scale)
      throw LieErr("grading: eigenvalue outside {-2..2}");
    groups[j + 2].push_back(k);
  }
  for (int lvl = 0; lvl < 5; ++lvl) {
    RMat B(dim_, static_cast<int>(groups[lvl].size()));
    for (std::size_t c = 0; c < groups[lvl].size(); ++c)
      B.col(static_cast<int>(c)) = eig.eigenvectors().col(groups[lvl][c]);
    G.level[lvl] = std::move(B);
  }
  return G;
}

CVec LieAlgebraG::h_form(const CVec& e, const CVec& u, const CVec& v) const {
  return 8.0 * Z_.triple(u, v, e);
}

CVec LieAlgebraG::q_form(const CVec& e, const CVec& u, const CVec& v) const {
  std::complex<double> i(0, 1);
  return 4.0 * i * (Z_.triple(v, u, e) - Z_.triple(u, v, e));
}

RMat LieAlgebraG::heisenberg_basis(const CVec& e) const {
  Grading G = grading(e);
  RMat out(dim_, G.at(1).cols() + G.at(2).cols());
  out << G.at(1), G.at(2);
  return out;
}

namespace {

// inner-product-orthonormal Gram-Schmidt over coordinate columns
RMat gs_columns(const LieAlgebraG& g, const std::vector<RVec>& vecs,
                double tol = 1e-9) {
  std::vector<RVec> out;
  for (const auto& v0 : vecs) {
    RVec v = v0;
    for (const auto& u : out) v -= g.inner(v, u) * u;
    double nv = g.norm(v);
    if (nv > tol * std::max(1.0, g.norm(v0))) out.push_back(v / nv);
  }
  RMat M(g.dim(), static_cast<int>(out.size()));
  for (std::size_t c = 0; c < out.size(); ++c)
    M.col(static_cast<int>(c)) = out[c];
  return M;
}

std::vector<CVec> real_dirs(const CMat& cols) {
  std::vector<CVec> out;
  std::complex<double> i(0, 1);
  for (int c = 0; c < cols.cols(); ++c) {
    out.push_back(cols.col(c));
    out.push_back(i * cols.col(c));
  }
  return out;
}

}  // namespace

ZeroSplit LieAlgebraG::zero_grading_split(const CVec& e) const {
  ZeroSplit S;
  auto P = Z_.peirce(e);
  {
    std::vector<RVec> gens;
    auto dirs = real_dirs(P.z0);
    for (std::size_t a = 0; a < dirs.size(); ++a)
      for (std::size_t b = a + 1; b < dirs.size(); ++b) {
        CMat d = Z_.box(dirs[a], dirs[b]) - Z_.box(dirs[b], dirs[a]);
        if (d.norm() > 1e-12) gens.push_back(coords(d, CVec::Zero(Z_.dim())));
      }
    for (const auto& u : dirs) gens.push_back(xi_minus(u));
    S.g0 = gs_columns(*this, gens);
  }
  {
    std::vector<CVec> X1;
    if (Z_.norm(e) > 1e-12) X1 = Z_.real_form_x1(e);
    std::vector<RVec> gens;
    for (std::size_t a = 0; a < X1.size(); ++a)
      for (std::size_t b = a + 1; b < X1.size(); ++b) {
        CMat d = Z_.box(X1[a], X1[b]) - Z_.box(X1[b], X1[a]);
        if (d.norm() > 1e-12) gens.push_back(coords(d, CVec::Zero(Z_.dim())));
      }
    for (const auto& u : X1) gens.push_back(xi_minus(u));
    S.g1 = gs_columns(*this, gens);
  }
  {
    // m^e = {derivations annihilating e} minus the k_0 + k_1 components
    const int n = Z_.dim();
    RMat act(2 * n, dim_k_);
    for (int a = 0; a < dim_k_; ++a) {
      CVec im = kbasis_d_[a] * e;
      for (int t = 0; t < n; ++t) {
        act(2 * t, a) = im[t].real();
        act(2 * t + 1, a) = im[t].imag();
      }
    }
    Eigen::JacobiSVD<RMat> svd(act, Eigen::ComputeFullV);
    double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
    std::vector<RVec> ke;
    for (int k = dim_k_ - 1; k >= 0; --k) {
      if (k < svd.singularValues().size() &&
          svd.singularValues()[k] > 1e-9 * std::max(1.0, smax))
        break;
      RVec x = RVec::Zero(dim_);
      x.head(dim_k_) = svd.matrixV().col(k);
      ke.push_back(x);
    }
    std::vector<RVec> pool;
    for (int c = 0; c < S.g0.cols(); ++c) pool.push_back(S.g0.col(c));
    for (int c = 0; c < S.g1.cols(); ++c) pool.push_back(S.g1.col(c));
    RMat ortho = gs_columns(*this, pool);
    std::vector<RVec> mg;
    for (auto& v : ke) {
      RVec w = v;
      for (int c = 0; c < ortho.cols(); ++c)
        w -= inner(w, ortho.col(c)) * ortho.col(c);
      mg.push_back(w);
    }
    S.m = gs_columns(*this, mg);
  }
  return S;
}

LieAlgebraG::JordanChevalley LieAlgebraG::jordan_chevalley_exact(
    const RatVec& xi) const {
  RatMat A = ad_exact(xi);
  QPoly chi = char_poly(A);
  QPoly g = chi.squarefree_part();
  RatVec s;
  if (g.degree() == chi.degree()) {
    s = xi;  // ad xi is already semisimple
  } else {
    // Newton iteration: p with g(p) = 0 mod chi, starting from p = x
    QPoly p = QPoly::x();
    QPoly gp = g.derivative();
    auto compose_mod = [&](const QPoly& fpoly, const QPoly& q) {
      QPoly acc;
      for (int k = fpoly.degree(); k >= 0; --k) {
        acc = (acc * q).mod(chi);
        acc = acc + QPoly(RatVec{fpoly.coeffs()[k]});
      }
      return acc;
    };
    bool converged = false;
    for (int it = 0; it < 64; ++it) {
      QPoly val = compose_mod(g, p);
      if (val.is_zero()) {
        converged = true;
        break;
      }
      QPoly der = compose_mod(gp, p);
      auto inv = der.inverse_mod(chi);
      if (!inv) throw LieErr("jordan_chevalley: g'(p) not invertible mod chi");
      p = (p - val * *inv).mod(chi);
    }
    if (!converged) throw LieErr("jordan_chevalley: no convergence");
    RatMat S = p.eval(A);
    // pull back through the (injective) adjoint representation
    RatMat stacked(dim_ * dim_, dim_);
    for (int a = 0; a < dim_; ++a)
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
          stacked(i * dim_ + j, a) = ad_[a](i, j);
    RatVec rhs(static_cast<std::size_t>(dim_) * dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) rhs[i * dim_ + j] = S(i, j);
    auto sol = stacked.solve(rhs);
    if (!sol) throw LieErr("jordan_chevalley: semisimple part not in ad(g)");
    s = *sol;
  }
  RatVec n(dim_);
  for (int k = 0; k < dim_; ++k) n[k] = xi[k] - s[k];
  RatVec br = bracket_exact(s, n);
  for (const auto& v : br)
    if (v != 0) throw LieErr("jordan_chevalley: parts do not commute");
  return {std::move(s), std::move(n)};
}

std::pair<RVec, RVec> LieAlgebraG::jordan_chevalley(const RVec& xi, bool snap,
                                                    long max_den) const {
  std::vector<double> v(xi.data(), xi.data() + dim_);
  // exact mode tolerates only representation roundoff; snapping is opt-in
  auto snapped = snap ? snap_vector(v, max_den, 1e-6)
                      : snap_vector(v, 1000000000L, 1e-12);
  if (!snapped)
    throw LieErr(snap
                     ? "jordan_chevalley: coordinates do not snap to rationals"
                     : "jordan_chevalley: irrational input in exact mode; "
                       "request snapping");
  RatVec x = *snapped;
  auto jc = jordan_chevalley_exact(x);
  return {from_exact(jc.semisimple), from_exact(jc.nilpotent)};
}

RMat LieAlgebraG::ad_exp(const RVec& eta) const { return ad(eta).exp(); }

RatMat LieAlgebraG::ad_exp_nilpotent_exact(const RatVec& eta) const {
  RatMat A = ad_exact(eta);
  RatMat term = RatMat::identity(dim_);
  RatMat sum = term;
  for (int k = 1; k <= dim_ + 1; ++k) {
    term = term * A;
    term = term.scaled(Rat(1, k));
    if (term.is_zero()) return sum;
    sum = sum + term;
  }
  throw LieErr("ad_exp_nilpotent_exact: element is not ad-nilpotent");
}

RMat LieAlgebraG::triple_auto_ad(const CMat& k) const {
  CMat kinv = k.inverse();
  RMat M(dim_, dim_);
  const int n = Z_.dim();
  for (int a = 0; a < dim_k_; ++a)
    M.col(a) = coords(k * kbasis_d_[a] * kinv, CVec::Zero(n));
  for (int t = 0; t < n; ++t) {
    CVec bt = CVec::Zero(n);
    bt[t] = 1.0;
    M.col(dim_k_ + 2 * t) = coords(CMat::Zero(n, n), k * bt);
    bt[t] = std::complex<double>(0, 1);
    M.col(dim_k_ + 2 * t + 1) = coords(CMat::Zero(n, n), k * bt);
  }
  return M;
}

RatMat LieAlgebraG::triple_auto_ad_exact(const QCMat& k) const {
  QCMat kinv = Z_.exact_unitary_inverse(k);
  RatMat M(dim_, dim_);
  const int n = Z_.dim();
  auto put_col = [&](int col, const RatVec& v) {
    for (int r = 0; r < dim_; ++r) M(r, col) = v[r];
  };
  for (int a = 0; a < dim_k_; ++a)
    put_col(a, coords_exact(k * kbasis_[a] * kinv, QCVec(n)));
  for (int t = 0; t < n; ++t) {
    QCVec bt(n);
    bt[t] = QC(1);
    put_col(dim_k_ + 2 * t, coords_exact(QCMat(n, n), k.apply(bt)));
    bt[t] = qc_i();
    put_col(dim_k_ + 2 * t + 1, coords_exact(QCMat(n, n), k.apply(bt)));
  }
  return M;
}

CMat LieAlgebraG::sample_k(std::uint64_t seed, int steps) const {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  const int n = Z_.dim();
  CMat K = CMat::Identity(n, n);
  for (int s = 0; s < steps; ++s) {
    CMat kappa = CMat::Zero(n, n);
    for (int a = 0; a < dim_k_; ++a)
      kappa += (g(rng) / std::sqrt(to_double(kbasis_norm2_[a]))) * kbasis_d_[a];
    K = K * kappa.exp();
  }
  return K;
}

RVec LieAlgebraG::from_exact(const RatVec& x) const {
  RVec out(dim_);
  for (int k = 0; k < dim_; ++k) out[k] = to_double(x[k]);
  return out;
}

}  // namespace symcone::lie
