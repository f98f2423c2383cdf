#include "symcone/semigroup.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace symcone::semigroup {

namespace {
const std::complex<double> kI(0, 1);
}

MatrixRealization::MatrixRealization(const LieAlgebraG& g) : g_(g) {
  if (g.Z().kind() != jts::Kind::TypeI)
    throw SemiErr("matrix realization: type I only");
  p_ = g.Z().p();
  q_ = g.Z().q();
  J_ = CMat::Zero(size(), size());
  for (int i = 0; i < p_; ++i) J_(i, i) = 1.0;
  for (int i = 0; i < q_; ++i) J_(p_ + i, p_ + i) = -1.0;

  // calibration check: the embedding must intertwine the brackets; the
  // fundamental identity [xi_u^-, xi_v^-] = 2(u box v - v box u) pins the
  // off-diagonal scale
  const auto& Z = g_.Z();
  for (std::uint64_t s = 0; s < 4; ++s) {
    jts::CVec u = Z.random_element(100 + s), v = Z.random_element(200 + s);
    CMat lhs = embed(g_.bracket(g_.xi_minus(u), g_.xi_minus(v)));
    CMat a = embed(g_.xi_minus(u)), b = embed(g_.xi_minus(v));
    if ((lhs - (a * b - b * a)).norm() > 1e-8 * std::max(1.0, lhs.norm()))
      throw SemiErr("matrix realization: bracket calibration failed");
  }
  // injectivity on the basis
  for (int a = 0; a < g_.dim(); ++a)
    if (embed(RVec::Unit(g_.dim(), a)).norm() < 1e-12)
      throw SemiErr("matrix realization: embedding not injective");
}

CMat MatrixRealization::embed(const RVec& xi) const {
  lie::LieElement el = g_.element(xi);
  // kappa acts on p x q matrices as z -> Az - zC; recover the blocks from
  // row/column traces of the coordinate action
  CMat M1 = CMat::Zero(p_, p_), M2 = CMat::Zero(q_, q_);
  // kappa in coordinates: column (s,t) holds kappa(E_st)
  for (int a = 0; a < p_; ++a)
    for (int s = 0; s < p_; ++s) {
      std::complex<double> sum = 0;
      for (int b = 0; b < q_; ++b) sum += el.kappa(a * q_ + b, s * q_ + b);
      M1(a, s) = sum;
    }
  for (int t = 0; t < q_; ++t)
    for (int b = 0; b < q_; ++b) {
      std::complex<double> sum = 0;
      for (int a = 0; a < p_; ++a) sum += el.kappa(a * q_ + b, a * q_ + t);
      M2(t, b) = sum;
    }
  // M1 = q A - tr(C) I, M2 = tr(A) I - p C, gauge tr A = -tr C = tau
  std::complex<double> tau = M1.trace() / double(p_ + q_);
  CMat A = (M1 - tau * CMat::Identity(p_, p_)) / double(q_);
  CMat C = (tau * CMat::Identity(q_, q_) - M2) / double(p_);
  CMat out = CMat::Zero(size(), size());
  out.topLeftCorner(p_, p_) = A;
  out.bottomRightCorner(q_, q_) = C;
  for (int a = 0; a < p_; ++a)
    for (int b = 0; b < q_; ++b) {
      out(a, p_ + b) = el.u[a * q_ + b];
      out(p_ + b, a) = std::conj(el.u[a * q_ + b]);
    }
  return out;
}

RVec MatrixRealization::pullback(const CMat& m, double tol) const {
  const int n = g_.Z().dim();
  CMat A = m.topLeftCorner(p_, p_);
  CMat C = m.bottomRightCorner(q_, q_);
  jts::CVec u(n);
  for (int a = 0; a < p_; ++a)
    for (int b = 0; b < q_; ++b) u[a * q_ + b] = m(a, p_ + b);
  // kappa = L_A - R_C on coordinates
  CMat kappa = CMat::Zero(n, n);
  for (int a = 0; a < p_; ++a)
    for (int b = 0; b < q_; ++b)
      for (int s = 0; s < p_; ++s)
        for (int t = 0; t < q_; ++t) {
          std::complex<double> val = 0;
          if (b == t) val += A(a, s);
          if (a == s) val -= C(t, b);
          kappa(a * q_ + b, s * q_ + t) = val;
        }
  RVec xi = g_.coords(kappa, u);
  CMat back = embed(xi);
  if ((back - m).norm() > tol * std::max(1.0, m.norm()))
    throw SemiErr("pullback: matrix is not in the image of the embedding");
  return xi;
}

CMat MatrixRealization::star(const CMat& gamma) const {
  return J_ * gamma.adjoint() * J_;
}

CMat MatrixRealization::exp_g(const RVec& xi) const {
  return embed(xi).exp();
}

CMat MatrixRealization::semigroup_exp(const CMat& g_elt, const RVec& xi) const {
  CMat m = kI * embed(xi);
  return g_elt * m.exp();
}

MatrixRealization::Decomposition MatrixRealization::decompose(
    const CMat& gamma) const {
  const int N = size();
  CMat M = star(gamma) * gamma;  // = exp(2 i iota(xi))
  Decomposition out;
  // unipotent boundary: exact nilpotent-series logarithm
  CMat Nil = M - CMat::Identity(N, N);
  CMat pw = Nil;
  bool nilpotent = Nil.norm() < 1e-12;
  for (int k = 1; k <= N && !nilpotent; ++k) {
    pw = pw * Nil;
    if (pw.norm() < 1e-12 * std::max(1.0, Nil.norm())) nilpotent = true;
  }
  CMat logM;
  if (nilpotent) {
    out.boundary_log = true;
    logM = CMat::Zero(N, N);
    CMat term = CMat::Identity(N, N);
    for (int k = 1; k <= N; ++k) {
      term = term * Nil;
      logM += (k % 2 ? 1.0 : -1.0) / double(k) * term;
    }
  } else {
    Eigen::ComplexEigenSolver<CMat> eig(M);
    for (int k = 0; k < N; ++k) {
      std::complex<double> ev = eig.eigenvalues()[k];
      if (ev.real() <= 0 && std::fabs(ev.imag()) < 1e-12 * std::fabs(ev.real()))
        throw SemiErr(
            "decompose: spectrum touches the negative axis (boundary "
            "degeneracy), principal logarithm undefined");
    }
    logM = M.log();
  }
  CMat xim = logM / (2.0 * kI);
  out.xi = pullback(xim, 1e-7);
  CMat expm = (kI * embed(out.xi)).exp();
  out.g_part = gamma * expm.inverse();
  out.unitarity = (star(out.g_part) * out.g_part - CMat::Identity(N, N)).norm();
  out.residual = (out.g_part * expm - gamma).norm() / std::max(1.0, gamma.norm());
  if (out.unitarity > 1e-8 * std::max(1.0, gamma.norm()))
    throw SemiErr("decompose: group part is not J-unitary");
  return out;
}

faces::StratumResult MatrixRealization::stratum(
    const faces::FaceCatalogue& cat, const CMat& gamma, bool witnessed,
    long snap_den) const {
  auto dec = decompose(gamma);
  std::vector<double> coords(dec.xi.data(), dec.xi.data() + g_.dim());
  auto snapped = snap_vector(coords, snap_den, 1e-6);
  if (!snapped)
    throw SemiErr("stratum: cone part does not snap to exact coordinates");
  return cat.stratum_of(*snapped, witnessed);
}

}  // namespace symcone::semigroup
