#include "symcone/roots.hpp"

#include <Eigen/Eigenvalues>

#include <random>
#include <set>

namespace symcone::roots {

namespace {

RatVec zero_vec(int n) { return RatVec(n, Rat(0)); }

}  // namespace

CompactCartan cartan_from_frame(const LieAlgebraG& g) {
  CompactCartan t;
  const auto& Z = g.Z();
  const int dim = g.dim();
  auto frame = Z.frame_exact();
  for (const auto& e : frame) {
    QCMat box = Z.box_exact(e, e).scaled(qc_i());
    t.basis.push_back(g.coords_exact(box, QCVec(Z.dim())));
  }
  t.dim_minus = static_cast<int>(t.basis.size());

  // grow by derivations annihilating every frame member (the t+ part),
  // commuting with everything collected so far
  const int nz = Z.dim();
  for (;;) {
    std::size_t rows = g.dim_p() + frame.size() * 2 * nz + t.basis.size() * dim;
    RatMat sys(rows, dim);
    std::size_t row = 0;
    for (int s = 0; s < g.dim_p(); ++s) sys(row++, g.dim_k() + s) = 1;
    for (const auto& e : frame) {
      // kappa(e) = 0, expanded over the derivation basis columns
      for (int a = 0; a < g.dim_k(); ++a) {
        QCVec im = g.kappa_basis_exact(a).apply(e);
        for (int tcoord = 0; tcoord < nz; ++tcoord) {
          sys(row + 2 * tcoord, a) = im[tcoord].re;
          sys(row + 2 * tcoord + 1, a) = im[tcoord].im;
        }
      }
      row += 2 * nz;
    }
    for (std::size_t b = 0; b < t.basis.size(); ++b) {
      RatMat adT = g.ad_exact(t.basis[b]);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) sys(row + i, j) = adT(i, j);
      row += dim;
    }
    auto ker = sys.nullspace();
    // find a kernel vector independent of the current basis
    RatMat span(t.basis.size() + 1, dim);
    for (std::size_t b = 0; b < t.basis.size(); ++b)
      for (int j = 0; j < dim; ++j) span(b, j) = t.basis[b][j];
    bool grown = false;
    for (const auto& v : ker) {
      for (int j = 0; j < dim; ++j) span(t.basis.size(), j) = v[j];
      if (span.rank() == t.basis.size() + 1) {
        t.basis.push_back(v);
        grown = true;
        break;
      }
    }
    if (!grown) break;
  }

  const int dt = t.dim();
  t.basis_d = RMat(dim, dt);
  for (int c = 0; c < dt; ++c)
    for (int r = 0; r < dim; ++r) t.basis_d(r, c) = to_double(t.basis[c][r]);
  t.killing_restricted = RatMat(dt, dt);
  t.inner_restricted = RatMat(dt, dt);
  const RatMat& B = g.killing_gram();
  for (int a = 0; a < dt; ++a)
    for (int b = 0; b < dt; ++b) {
      Rat s(0);
      for (int i = 0; i < dim; ++i) {
        if (t.basis[a][i] == 0) continue;
        for (int j = 0; j < dim; ++j)
          if (t.basis[b][j] != 0) s += t.basis[a][i] * B(i, j) * t.basis[b][j];
      }
      t.killing_restricted(a, b) = s;
      t.inner_restricted(a, b) = -s;  // theta = id on k
    }
  // orthogonal projector onto t w.r.t. the invariant inner product
  RMat W(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) W(i, j) = to_double(g.inner_gram()(i, j));
  RMat TtWT(dt, dt);
  for (int a = 0; a < dt; ++a)
    for (int b = 0; b < dt; ++b)
      TtWT(a, b) = t.basis_d.col(a).dot(W * t.basis_d.col(b));
  t.projector = t.basis_d * TtWT.inverse() * t.basis_d.transpose() * W;

  // h0 lies in t; exact expansion
  RatMat Tmat(dim, dt);
  for (int c = 0; c < dt; ++c)
    for (int r = 0; r < dim; ++r) Tmat(r, c) = t.basis[c][r];
  RatVec h0(dim);
  for (int r = 0; r < dim; ++r) h0[r] = g.h0_exact()[r];
  auto sol = Tmat.solve(h0);
  if (!sol) throw RootErr("cartan_from_frame: h0 not in t");
  t.h0_coords = *sol;
  return t;
}

std::vector<int> RootSystemData::noncompact_positive() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (!roots[k].compact && roots[k].positive) out.push_back(static_cast<int>(k));
  return out;
}

bool RootSystemData::is_root(const RatVec& lambda) const {
  for (const auto& r : roots)
    if (r.lambda == lambda) return true;
  return false;
}

RootSystemData root_decomposition(const LieAlgebraG& g) {
  RootSystemData rsd;
  rsd.t = cartan_from_frame(g);
  const int dim = g.dim();
  const int dt = rsd.t.dim();

  // generic torus element: sqrt-prime weights keep rational root values
  // separated for distinct roots
  static const double primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  RVec Hgen = RVec::Zero(dim);
  for (int c = 0; c < dt; ++c)
    Hgen += std::sqrt(primes[c % 10]) * rsd.t.basis_d.col(c);
  RMat A = g.ad(Hgen);
  Eigen::EigenSolver<RMat> eig(A);
  if (eig.info() != Eigen::Success)
    throw RootErr("root_decomposition: eigensolver failed");

  Eigen::MatrixXcd Wc(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) Wc(i, j) = to_double(g.inner_gram()(i, j));
  std::vector<Eigen::MatrixXcd> adT(dt);
  for (int c = 0; c < dt; ++c)
    adT[c] = g.ad(rsd.t.basis_d.col(c)).cast<std::complex<double>>();

  double scale = eig.eigenvalues().cwiseAbs().maxCoeff();
  std::set<RatVec> seen;
  for (int k = 0; k < dim; ++k) {
    std::complex<double> mu = eig.eigenvalues()[k];
    if (std::abs(mu) <= 1e-7 * std::max(1.0, scale)) continue;  // t_C part
    Eigen::VectorXcd v = eig.eigenvectors().col(k);
    std::complex<double> nv = (v.adjoint() * (Wc * v))(0);
    Root root;
    std::vector<double> lam(dt);
    for (int c = 0; c < dt; ++c) {
      std::complex<double> val = (v.adjoint() * (Wc * (adT[c] * v)))(0);
      val /= nv;
      // alpha(T_c) is purely imaginary; lambda = -i alpha
      if (std::fabs(val.real()) > 1e-6)
        throw RootErr("root_decomposition: non-imaginary root value");
      lam[c] = val.imag();
    }
    auto snapped = snap_vector(lam, 10000, 1e-7);
    if (!snapped)
      throw RootErr(
          "root_decomposition: root values failed to snap; eigenvalues may "
          "be clustered beyond separation tolerance");
    root.lambda = *snapped;
    if (seen.count(root.lambda)) continue;  // conjugate pair duplicate guard
    seen.insert(root.lambda);
    root.root_vector = v;

    // compactness by the value on h0
    Rat lam_h0(0);
    for (int c = 0; c < dt; ++c) lam_h0 += root.lambda[c] * rsd.t.h0_coords[c];
    if (lam_h0 == 0)
      root.compact = true;
    else if (lam_h0 == 1 || lam_h0 == -1)
      root.compact = false;
    else
      throw RootErr("root_decomposition: h0 value outside {0, +-1}");
    if (!root.compact) {
      root.positive = (lam_h0 == 1);
    } else {
      // any fixed generic functional orders the compact roots
      double phi = 0;
      for (int c = 0; c < dt; ++c)
        phi += to_double(root.lambda[c]) / std::sqrt(primes[(c + 3) % 10]);
      root.positive = phi > 0;
    }
    // coroot: B|_t v = lambda, scaled so lambda(coroot) = 2
    RatVec lamv(dt);
    for (int c = 0; c < dt; ++c) lamv[c] = root.lambda[c];
    auto v0 = rsd.t.killing_restricted.solve(lamv);
    if (!v0) throw RootErr("root_decomposition: coroot solve failed");
    Rat lv(0);
    for (int c = 0; c < dt; ++c) lv += lamv[c] * (*v0)[c];
    if (lv == 0) throw RootErr("root_decomposition: isotropic root");
    root.coroot = RatVec(dt);
    for (int c = 0; c < dt; ++c) root.coroot[c] = Rat(2) * (*v0)[c] / lv;
    rsd.roots.push_back(std::move(root));
  }

  if (static_cast<int>(rsd.roots.size()) != dim - dt)
    throw RootErr("root_decomposition: root count mismatch");

  // locate the frame functionals gamma_k
  for (int k = 0; k < rsd.t.dim_minus; ++k) {
    RatVec target = zero_vec(dt);
    target[k] = 1;
    int found = -1;
    for (std::size_t r = 0; r < rsd.roots.size(); ++r)
      if (rsd.roots[r].lambda == target) found = static_cast<int>(r);
    if (found < 0) throw RootErr("root_decomposition: gamma_k missing");
    rsd.gamma.push_back(found);
  }
  return rsd;
}

OmegaCones omega_cones(const RootSystemData& rsd) {
  const int dt = rsd.t.dim();
  std::vector<RatVec> gens, ineqs;
  for (int idx : rsd.noncompact_positive()) {
    gens.push_back(rsd.roots[idx].coroot);
    ineqs.push_back(rsd.roots[idx].lambda);
  }
  OmegaCones out{poly::PolyhedralCone::from_generators(gens, dt),
                 poly::PolyhedralCone::from_inequalities(ineqs, dt)};
  if (!out.plus.contains(out.minus))
    throw RootErr("omega_cones: minimal cone escapes the maximal cone");
  return out;
}

poly::Where omega_membership(const poly::PolyhedralCone& cone, const RVec& H,
                             double tol) {
  return cone.membership(H, tol);
}

Eigen::VectorXd nnls(const RMat& A, const RVec& b, int max_iter) {
  const int n = static_cast<int>(A.cols());
  if (max_iter <= 0) max_iter = 3 * n + 30;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  std::vector<bool> passive(n, false);
  RVec w = A.transpose() * (b - A * x);
  double tol = 1e-10 * std::max(1.0, b.norm());
  for (int iter = 0; iter < max_iter; ++iter) {
    int best = -1;
    double bw = tol;
    for (int i = 0; i < n; ++i)
      if (!passive[i] && w[i] > bw) {
        bw = w[i];
        best = i;
      }
    if (best < 0) break;
    passive[best] = true;
    for (;;) {
      std::vector<int> P;
      for (int i = 0; i < n; ++i)
        if (passive[i]) P.push_back(i);
      RMat Ap(A.rows(), P.size());
      for (std::size_t c = 0; c < P.size(); ++c) Ap.col(c) = A.col(P[c]);
      Eigen::VectorXd s = Ap.colPivHouseholderQr().solve(b);
      double smin = s.size() ? s.minCoeff() : 1.0;
      if (smin > 0) {
        x.setZero();
        for (std::size_t c = 0; c < P.size(); ++c) x[P[c]] = s[c];
        break;
      }
      // step back along the segment to the feasible boundary
      double alpha = 1.0;
      for (std::size_t c = 0; c < P.size(); ++c)
        if (s[c] <= 0) {
          double xc = x[P[c]];
          if (xc - s[c] > 1e-15) alpha = std::min(alpha, xc / (xc - s[c]));
        }
      for (std::size_t c = 0; c < P.size(); ++c) {
        x[P[c]] += alpha * (s[c] - x[P[c]]);
        if (x[P[c]] <= 1e-13) {
          x[P[c]] = 0;
          passive[P[c]] = false;
        }
      }
    }
    w = A.transpose() * (b - A * x);
  }
  return x;
}

namespace {

// Minimal-orbit atoms: X^+ of primitive tripotents, deterministic
// coordinate ones first, then random conjugates.
std::vector<RVec> orbit_atoms(const LieAlgebraG& g, int count,
                              std::uint64_t seed) {
  std::vector<RVec> atoms;
  const auto& Z = g.Z();
  const std::complex<double> phases[] = {
      {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (int m = 0; m < Z.dim(); ++m) {
    jts::CVec b = jts::CVec::Zero(Z.dim());
    b[m] = 1.0;
    if (!Z.is_tripotent(b) || Z.rank_of(b) != 1) continue;
    for (auto ph : phases) atoms.push_back(g.x_plus(ph * b));
  }
  auto frame = Z.frame();
  for (const auto& e : frame) {
    atoms.push_back(g.x_plus(e));
    atoms.push_back(-g.x_minus(e));  // = X^+ of the phase-rotated tripotent
  }
  int s = 0;
  while (static_cast<int>(atoms.size()) < count) {
    jts::CMat k = g.sample_k(seed + 7919 * s++);
    atoms.push_back(g.x_plus(k * frame[s % frame.size()]));
  }
  return atoms;
}

}  // namespace

std::optional<Certificate> certify_in_minimal(const LieAlgebraG& g,
                                              const RVec& xi, int budget,
                                              std::uint64_t seed) {
  // nilpositive elements of (H1)-Cayley triples lie on the minimal orbit;
  // they are their own certificate
  if (auto t = g.cayley_test(xi); t && t->h1)
    return Certificate{{1.0}, {xi}, 0.0};
  if (budget < g.dim()) budget = 4 * g.dim();
  auto atoms = orbit_atoms(g, budget, seed);
  // weight the least squares by a Cholesky factor of the inner product
  RMat W(g.dim(), g.dim());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      W(i, j) = to_double(g.inner_gram()(i, j));
  Eigen::LLT<RMat> llt(W);
  RMat L = llt.matrixL().transpose();
  RMat A(g.dim(), atoms.size());
  for (std::size_t c = 0; c < atoms.size(); ++c) A.col(c) = L * atoms[c];
  RVec b = L * xi;
  Eigen::VectorXd lam = nnls(A, b);
  double res = (A * lam - b).norm();
  if (res > 1e-7 * std::max(1.0, b.norm())) return std::nullopt;
  Certificate cert;
  cert.residual = res;
  for (std::size_t c = 0; c < atoms.size(); ++c)
    if (lam[c] > 0) {
      cert.weights.push_back(lam[c]);
      cert.atoms.push_back(atoms[c]);
    }
  return cert;
}

std::optional<Witness> refute_in_maximal(const LieAlgebraG& g, const RVec& xi,
                                         int budget, std::uint64_t seed) {
  if (budget <= 0) budget = 1000;
  auto atoms = orbit_atoms(g, budget, seed);
  double scale = std::max(1.0, g.norm(xi));
  for (const auto& eta : atoms) {
    double p = g.inner(xi, eta);
    if (p < -1e-9 * scale * std::max(1.0, g.norm(eta)))
      return Witness{eta, p};
  }
  return std::nullopt;
}

}  // namespace symcone::roots
