#include "symcone/jts.hpp"

#include <Eigen/SVD>

#include <functional>
#include <random>

namespace symcone::jts {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::TypeI: return "I";
    case Kind::TypeII: return "II";
    case Kind::TypeIII: return "III";
    case Kind::TypeIV: return "IV";
  }
  return "?";
}

namespace {

QC qc_half() { return QC(Rat(1, 2)); }

std::complex<double> to_cd(const QC& z) {
  return {to_double(z.re), to_double(z.im)};
}

// {u v w} = (u v* w + w v* u) / 2 on rectangular matrices.
QCMat matrix_triple(const QCMat& u, const QCMat& v, const QCMat& w) {
  QCMat vh = v.conj_transpose();
  return (u * vh * w + w * vh * u).scaled(qc_half());
}

QC amb_inner(const QCVec& u, const QCVec& v) {
  QC s;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k].conj();
  return s;
}

QC amb_bilinear(const QCVec& u, const QCVec& w) {
  QC s;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * w[k];
  return s;
}

// Spin triple {u v w} = <u,v> w + <w,v> u - q(u,w) conj(v).
QCVec spin_triple(const QCVec& u, const QCVec& v, const QCVec& w) {
  QC a = amb_inner(u, v), b = amb_inner(w, v), c = amb_bilinear(u, w);
  QCVec r(u.size());
  for (std::size_t k = 0; k < u.size(); ++k)
    r[k] = a * w[k] + b * u[k] - c * v[k].conj();
  return r;
}

}  // namespace

Jts Jts::type_i(int p, int q) {
  if (p < 1 || q < 1) throw JtsErr("type I requires p,q >= 1");
  Jts Z;
  Z.kind_ = Kind::TypeI;
  Z.p_ = p;
  Z.q_ = q;
  Z.n_ = p * q;
  Z.rank_ = std::min(p, q);
  Z.mult_a_ = 2;
  Z.mult_b_ = std::abs(q - p);
  Z.amb_rows_ = p;
  Z.amb_cols_ = q;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      QCMat m(p, q);
      m(i, j) = QC(1);
      Z.ambient_.push_back(m);
      Z.labels_.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      Z.gram_.push_back(Rat(1));
    }
  for (int j = 0; j < Z.rank_; ++j) Z.frame_idx_.push_back(j * q + j);
  Z.build_tensor_from_ambient();
  Z.finalize();
  return Z;
}

Jts Jts::type_ii(int n) {
  if (n < 2) throw JtsErr("type II requires n >= 2");
  Jts Z;
  Z.kind_ = Kind::TypeII;
  Z.p_ = n;
  Z.q_ = n;
  Z.n_ = n * (n - 1) / 2;
  Z.rank_ = n / 2;
  Z.mult_a_ = 4;
  Z.mult_b_ = (n % 2 == 0) ? 0 : 2;
  Z.amb_rows_ = n;
  Z.amb_cols_ = n;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QCMat m(n, n);
      m(i, j) = QC(1);
      m(j, i) = QC(-1);
      Z.ambient_.push_back(m);
      Z.labels_.push_back("A" + std::to_string(i + 1) + std::to_string(j + 1));
      Z.gram_.push_back(Rat(1));
      pairs.emplace_back(i, j);
    }
  for (int j = 0; j + 1 < n; j += 2) {
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (pairs[k] == std::make_pair(j, j + 1))
        Z.frame_idx_.push_back(static_cast<int>(k));
  }
  Z.build_tensor_from_ambient();
  Z.finalize();
  return Z;
}

Jts Jts::type_iii(int n) {
  if (n < 1) throw JtsErr("type III requires n >= 1");
  Jts Z;
  Z.kind_ = Kind::TypeIII;
  Z.p_ = n;
  Z.q_ = n;
  Z.n_ = n * (n + 1) / 2;
  Z.rank_ = n;
  Z.mult_a_ = 1;
  Z.mult_b_ = 0;
  Z.amb_rows_ = n;
  Z.amb_cols_ = n;
  for (int i = 0; i < n; ++i) {
    QCMat m(n, n);
    m(i, i) = QC(1);
    Z.ambient_.push_back(m);
    Z.labels_.push_back("E" + std::to_string(i + 1) + std::to_string(i + 1));
    Z.gram_.push_back(Rat(1));
    Z.frame_idx_.push_back(static_cast<int>(Z.ambient_.size()) - 1);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QCMat m(n, n);
      m(i, j) = QC(1);
      m(j, i) = QC(1);
      Z.ambient_.push_back(m);
      Z.labels_.push_back("S" + std::to_string(i + 1) + std::to_string(j + 1));
      Z.gram_.push_back(Rat(2));
    }
  Z.build_tensor_from_ambient();
  Z.finalize();
  return Z;
}

Jts Jts::type_iv(int n) {
  if (n < 3) throw JtsErr("type IV requires n >= 3");
  Jts Z;
  Z.kind_ = Kind::TypeIV;
  Z.p_ = n;
  Z.q_ = n;
  Z.n_ = n;
  Z.rank_ = 2;
  Z.mult_a_ = n - 2;
  Z.mult_b_ = 0;

  // Frame-adapted basis: e1 = (1, i, 0, ..)/2, e2 = conj(e1), then unit
  // vectors. Rational coordinates keep the triple tensor exact.
  std::vector<QCVec> amb;
  QCVec e1(n), e2(n);
  e1[0] = QC(Rat(1, 2));
  e1[1] = QC(Rat(0), Rat(1, 2));
  e2[0] = QC(Rat(1, 2));
  e2[1] = QC(Rat(0), Rat(-1, 2));
  amb.push_back(e1);
  amb.push_back(e2);
  Z.labels_ = {"e1", "e2"};
  Z.gram_ = {Rat(1), Rat(1)};
  for (int k = 2; k < n; ++k) {
    QCVec v(n);
    v[k] = QC(1);
    amb.push_back(v);
    Z.labels_.push_back("v" + std::to_string(k + 1));
    Z.gram_.push_back(Rat(2));
  }
  Z.frame_idx_ = {0, 1};

  // Tensor straight from the spin formula; coordinates via the canonical
  // pairing <u,v> = 2 sum u conj(v) against the orthogonal basis.
  Z.tensor_.resize(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QCVec t = spin_triple(amb[i], amb[j], amb[k]);
        QCVec coords(n);
        for (int m = 0; m < n; ++m) {
          QC c = amb_inner(t, amb[m]);
          c = c * QC(Rat(2) / Z.gram_[m]);
          coords[m] = c;
        }
        // consistency: expansion must reproduce t
        QCVec back(n);
        for (int m = 0; m < n; ++m)
          for (int s = 0; s < n; ++s) back[s] += coords[m] * amb[m][s];
        for (int s = 0; s < n; ++s)
          if (!(back[s] - t[s]).is_zero())
            throw JtsErr("type IV tensor: basis expansion failed");
        Z.tensor_[(static_cast<std::size_t>(i) * n + j) * n + k] =
            std::move(coords);
      }
  Z.finalize();
  return Z;
}

void Jts::build_tensor_from_ambient() {
  const int n = n_;
  RatVec div(n);  // tr(B_k B_k^H)
  for (int k = 0; k < n; ++k)
    div[k] = (ambient_[k] * ambient_[k].conj_transpose()).trace().re;
  tensor_.resize(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QCMat t = matrix_triple(ambient_[i], ambient_[j], ambient_[k]);
        QCVec coords(n);
        for (int m = 0; m < n; ++m) {
          QC c = (t * ambient_[m].conj_transpose()).trace();
          coords[m] = c * QC(Rat(1) / div[m]);
        }
        QCMat back(amb_rows_, amb_cols_);
        for (int m = 0; m < n; ++m) back = back + ambient_[m].scaled(coords[m]);
        if (!(back - t).is_zero())
          throw JtsErr("triple tensor: subtriple is not closed");
        tensor_[(static_cast<std::size_t>(i) * n + j) * n + k] =
            std::move(coords);
      }
}

void Jts::finalize() {
  const int n = n_;
  gram_d_.resize(n);
  for (int k = 0; k < n; ++k) gram_d_[k] = to_double(gram_[k]);
  tensor_d_.resize(tensor_.size());
  for (std::size_t t = 0; t < tensor_.size(); ++t) {
    CVec v(n);
    for (int m = 0; m < n; ++m) v[m] = to_cd(tensor_[t][m]);
    tensor_d_[t] = std::move(v);
  }
}

CVec Jts::triple(const CVec& u, const CVec& v, const CVec& w) const {
  if (u.size() != n_ || v.size() != n_ || w.size() != n_)
    throw JtsErr("triple: dimension mismatch");
  CVec r = CVec::Zero(n_);
  for (int i = 0; i < n_; ++i) {
    if (u[i] == std::complex<double>(0)) continue;
    for (int j = 0; j < n_; ++j) {
      std::complex<double> f = u[i] * std::conj(v[j]);
      if (f == std::complex<double>(0)) continue;
      for (int k = 0; k < n_; ++k) {
        if (w[k] == std::complex<double>(0)) continue;
        r += (f * w[k]) * tensor_d_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
      }
    }
  }
  return r;
}

QCVec Jts::triple_exact(const QCVec& u, const QCVec& v, const QCVec& w) const {
  QCVec r(n_);
  for (int i = 0; i < n_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      QC f = u[i] * v[j].conj();
      if (f.is_zero()) continue;
      for (int k = 0; k < n_; ++k) {
        if (w[k].is_zero()) continue;
        QC g = f * w[k];
        const QCVec& t = tensor_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
        for (int m = 0; m < n_; ++m) r[m] += g * t[m];
      }
    }
  }
  return r;
}

CMat Jts::box(const CVec& u, const CVec& v) const {
  CMat B(n_, n_);
  CVec ek = CVec::Zero(n_);
  for (int k = 0; k < n_; ++k) {
    ek[k] = 1.0;
    B.col(k) = triple(u, v, ek);
    ek[k] = 0.0;
  }
  return B;
}

QCMat Jts::box_exact(const QCVec& u, const QCVec& v) const {
  QCMat B(n_, n_);
  for (int i = 0; i < n_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      QC f = u[i] * v[j].conj();
      if (f.is_zero()) continue;
      for (int k = 0; k < n_; ++k) {
        const QCVec& t = tensor_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
        for (int m = 0; m < n_; ++m) B(m, k) += f * t[m];
      }
    }
  }
  return B;
}

std::complex<double> Jts::inner(const CVec& u, const CVec& v) const {
  std::complex<double> s = 0;
  for (int k = 0; k < n_; ++k) s += gram_d_[k] * u[k] * std::conj(v[k]);
  return s;
}

double Jts::norm(const CVec& u) const { return std::sqrt(std::real(inner(u, u))); }

QC Jts::box_trace_exact(const QCVec& u, const QCVec& v) const {
  QC s;
  for (int i = 0; i < n_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      QC f = u[i] * v[j].conj();
      if (f.is_zero()) continue;
      for (int k = 0; k < n_; ++k)
        s += f * tensor_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k][k];
    }
  }
  return s;
}

bool Jts::is_tripotent(const CVec& e, double tol) const {
  if (norm(e) == 0.0) return true;
  return norm(triple(e, e, e) - e) <= tol * std::max(1.0, norm(e));
}

int Jts::rank_of(const CVec& e) const {
  // rank = canonical squared norm for any tripotent (orthogonal primitive
  // summands each have norm one)
  double s = std::real(inner(e, e));
  int r = static_cast<int>(std::lround(s));
  if (std::fabs(s - r) > 1e-6)
    throw JtsErr("rank_of: not a tripotent (non-integral norm)");
  return r;
}

bool Jts::orthogonal(const CVec& e, const CVec& c, double tol) const {
  return box(e, c).norm() <= tol * std::max(1.0, norm(e) * norm(c));
}

bool Jts::leq(const CVec& c, const CVec& e, double tol) const {
  CVec d = e - c;
  return is_tripotent(d, tol) && orthogonal(c, d, tol);
}

Jts::Peirce Jts::peirce(const CVec& e) const {
  if (!is_tripotent(e)) throw JtsErr("peirce: e is not a tripotent");
  CMat B = box(e, e);
  // symmetrize w.r.t. the diagonal Gram
  CMat Bs = B;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      Bs(i, j) *= std::sqrt(gram_d_[i] / gram_d_[j]);
  Eigen::SelfAdjointEigenSolver<CMat> eig((Bs + Bs.adjoint()) * 0.5);
  Peirce P;
  std::vector<int> b0, b12, b1;
  for (int k = 0; k < n_; ++k) {
    double ev = eig.eigenvalues()[k];
    double d0 = std::fabs(ev), d12 = std::fabs(ev - 0.5), d1 = std::fabs(ev - 1.0);
    double m = std::min({d0, d12, d1});
    if (m > 1e-8) throw JtsErr("peirce: eigenvalue off {0,1/2,1}");
    if (m == d0)
      b0.push_back(k);
    else if (m == d12)
      b12.push_back(k);
    else
      b1.push_back(k);
  }
  auto collect = [&](const std::vector<int>& idx) {
    CMat M(n_, static_cast<int>(idx.size()));
    for (std::size_t c = 0; c < idx.size(); ++c) {
      CVec v = eig.eigenvectors().col(idx[c]);
      for (int i = 0; i < n_; ++i) v[i] /= std::sqrt(gram_d_[i]);
      M.col(static_cast<int>(c)) = v;
    }
    return M;
  };
  P.z0 = collect(b0);
  P.z12 = collect(b12);
  P.z1 = collect(b1);
  return P;
}

std::vector<CVec> Jts::frame() const {
  std::vector<CVec> f;
  for (int idx : frame_idx_) {
    CVec e = CVec::Zero(n_);
    e[idx] = 1.0;
    f.push_back(e);
  }
  return f;
}

std::vector<QCVec> Jts::frame_exact() const {
  std::vector<QCVec> f;
  for (int idx : frame_idx_) {
    QCVec e(n_);
    e[idx] = QC(1);
    f.push_back(e);
  }
  return f;
}

CMat Jts::joint_peirce(const std::vector<CVec>& frame, int i, int j) const {
  const int r = static_cast<int>(frame.size());
  CMat stacked(n_ * r, n_);
  for (int k = 0; k < r; ++k) {
    CMat B = box(frame[k], frame[k]);
    double lam = 0.5 * ((i == k + 1 ? 1 : 0) + (j == k + 1 ? 1 : 0));
    B -= lam * CMat::Identity(n_, n_);
    // weight rows into the Gram-orthonormal frame for a clean SVD
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        B(a, b) *= std::sqrt(gram_d_[a] / gram_d_[b]);
    stacked.block(k * n_, 0, n_, n_) = B;
  }
  Eigen::JacobiSVD<CMat> svd(stacked, Eigen::ComputeFullV);
  double thresh = 1e-8 * std::max(1.0, svd.singularValues()[0]);
  int null_dim = 0;
  for (int k = n_ - 1; k >= 0; --k) {
    if (svd.singularValues()[k] <= thresh)
      ++null_dim;
    else
      break;
  }
  CMat out(n_, null_dim);
  for (int c = 0; c < null_dim; ++c) {
    CVec v = svd.matrixV().col(n_ - 1 - c);
    for (int a = 0; a < n_; ++a) v[a] /= std::sqrt(gram_d_[a]);
    out.col(c) = v;
  }
  return out;
}

CVec Jts::q_map(const CVec& e, const CVec& z) const { return triple(e, z, e); }

std::vector<CVec> Jts::real_form_x1(const CVec& e) const {
  if (norm(e) < 1e-12) throw JtsErr("real_form_x1: zero tripotent");
  Peirce P = peirce(e);
  const int m = static_cast<int>(P.z1.cols());
  // Solve Q_e(P1 c) = P1 c over real coordinates of c.
  Eigen::MatrixXd A(2 * n_, 2 * m);
  for (int c = 0; c < m; ++c) {
    CVec col = P.z1.col(c);
    CVec qr = q_map(e, col) - col;          // image of real direction
    CVec qi = q_map(e, std::complex<double>(0, 1) * col) -
              std::complex<double>(0, 1) * col;  // image of imaginary direction
    for (int a = 0; a < n_; ++a) {
      A(2 * a, 2 * c) = qr[a].real();
      A(2 * a + 1, 2 * c) = qr[a].imag();
      A(2 * a, 2 * c + 1) = qi[a].real();
      A(2 * a + 1, 2 * c + 1) = qi[a].imag();
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  double thresh = 1e-8 * std::max(1.0, smax);
  std::vector<CVec> basis;
  for (int k = 2 * m - 1; k >= 0; --k) {
    if (k < svd.singularValues().size() && svd.singularValues()[k] > thresh)
      break;
    Eigen::VectorXd v = svd.matrixV().col(k);
    CVec z = CVec::Zero(n_);
    for (int c = 0; c < m; ++c)
      z += std::complex<double>(v[2 * c], v[2 * c + 1]) * P.z1.col(c);
    basis.push_back(z);
  }
  // Gram-Schmidt in the real inner product Re<.,.>.
  std::vector<CVec> ortho;
  for (auto& z : basis) {
    CVec w = z;
    for (const auto& u : ortho) w -= std::real(inner(w, u)) * u;
    double nw = norm(w);
    if (nw > 1e-10) ortho.push_back(w / nw);
  }
  return ortho;
}

CMat Jts::frame_swap(int j) const {
  QCMat S = frame_swap_exact(j);
  CMat M(n_, n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) M(a, b) = to_cd(S(a, b));
  return M;
}

QCMat Jts::frame_swap_exact(int j) const {
  if (j < 0 || j + 1 >= rank_) throw JtsErr("frame_swap: bad index");
  if (kind_ == Kind::TypeIV) {
    QCMat S = QCMat::identity(n_);
    S(0, 0) = QC(0);
    S(1, 1) = QC(0);
    S(0, 1) = QC(1);
    S(1, 0) = QC(1);
    return S;
  }
  // Matrix types: z -> U z V^T for simultaneous row/column transpositions.
  auto perm = [&](int idx) {
    if (kind_ == Kind::TypeII) {
      // frame member j occupies ambient indices {2j, 2j+1}
      if (idx == 2 * j) return 2 * j + 2;
      if (idx == 2 * j + 1) return 2 * j + 3;
      if (idx == 2 * j + 2) return 2 * j;
      if (idx == 2 * j + 3) return 2 * j + 1;
      return idx;
    }
    if (idx == j) return j + 1;
    if (idx == j + 1) return j;
    return idx;
  };
  QCMat S(n_, n_);
  for (int k = 0; k < n_; ++k) {
    QCMat img(amb_rows_, amb_cols_);
    for (int a = 0; a < amb_rows_; ++a)
      for (int b = 0; b < amb_cols_; ++b) {
        const QC& v = ambient_[k](a, b);
        if (!v.is_zero()) img(perm(a), perm(b)) += v;
      }
    for (int m = 0; m < n_; ++m) {
      QC c = (img * ambient_[m].conj_transpose()).trace();
      Rat div = (ambient_[m] * ambient_[m].conj_transpose()).trace().re;
      S(m, k) = c * QC(Rat(1) / div);
    }
  }
  return S;
}

CMat Jts::frame_phase(int j, std::complex<double> phase) const {
  if (j < 0 || j >= rank_) throw JtsErr("frame_phase: bad index");
  CMat S = CMat::Identity(n_, n_);
  if (kind_ == Kind::TypeIV) {
    // rotation in the ambient (v1, v2) plane acts diagonally on e1, e2
    S(0, 0) = phase;
    S(1, 1) = std::conj(phase);
    return S;
  }
  if (kind_ == Kind::TypeI) {
    // U = diag(phase at row j): E_ab -> phase^{delta_aj} E_ab
    for (int a = 0; a < p_; ++a)
      for (int b = 0; b < q_; ++b)
        if (a == j) S(a * q_ + b, a * q_ + b) = phase;
    return S;
  }
  // II/III: z -> U z U^T with U = diag(s at the frame block), s^2 = phase.
  std::complex<double> s = std::sqrt(phase);
  std::vector<std::complex<double>> d(amb_rows_, 1.0);
  if (kind_ == Kind::TypeII) {
    d[2 * j] = s;
    d[2 * j + 1] = s;
  } else {
    d[j] = s;
  }
  for (int k = 0; k < n_; ++k) {
    CMat img(amb_rows_, amb_cols_);
    img.setZero();
    for (int a = 0; a < amb_rows_; ++a)
      for (int b = 0; b < amb_cols_; ++b) {
        auto v = to_cd(ambient_[k](a, b));
        if (v != std::complex<double>(0)) img(a, b) = d[a] * d[b] * v;
      }
    for (int m = 0; m < n_; ++m) {
      std::complex<double> c = 0;
      double div = 0;
      for (int a = 0; a < amb_rows_; ++a)
        for (int b = 0; b < amb_cols_; ++b) {
          auto w = to_cd(ambient_[m](a, b));
          c += img(a, b) * std::conj(w);
          div += std::norm(w);
        }
      S(m, k) = c / div;
    }
  }
  return S;
}

namespace {

// 3-4-5 triangle rotation block acting on ambient rows/planes.
void put_rotation(QCMat& U, int a, int b) {
  U(a, a) = QC(Rat(3, 5));
  U(b, b) = QC(Rat(3, 5));
  U(a, b) = QC(Rat(-4, 5));
  U(b, a) = QC(Rat(4, 5));
}

}  // namespace

std::vector<QCMat> Jts::exact_k_generators() const {
  std::vector<QCMat> gens;
  auto project_ambient_map =
      [&](const std::function<QCMat(const QCMat&)>& act) {
        QCMat S(n_, n_);
        for (int k = 0; k < n_; ++k) {
          QCMat img = act(ambient_[k]);
          for (int m = 0; m < n_; ++m) {
            QC c = (img * ambient_[m].conj_transpose()).trace();
            Rat div = (ambient_[m] * ambient_[m].conj_transpose()).trace().re;
            S(m, k) = c * QC(Rat(1) / div);
          }
        }
        return S;
      };

  if (kind_ == Kind::TypeI) {
    auto pair_map = [&](const QCMat& U, const QCMat& V) {
      return project_ambient_map([&](const QCMat& z) {
        return U * z * V.conj_transpose();
      });
    };
    for (int j = 0; j + 1 < rank_; ++j) gens.push_back(frame_swap_exact(j));
    if (p_ >= 2) {
      QCMat U = QCMat::identity(p_);
      put_rotation(U, 0, 1);
      gens.push_back(pair_map(U, QCMat::identity(q_)));
    }
    if (q_ >= 2) {
      QCMat V = QCMat::identity(q_);
      put_rotation(V, q_ - 2, q_ - 1);
      gens.push_back(pair_map(QCMat::identity(p_), V));
    }
    QCMat Ph = QCMat::identity(p_);
    Ph(0, 0) = qc_i();
    gens.push_back(pair_map(Ph, QCMat::identity(q_)));
    return gens;
  }

  if (kind_ == Kind::TypeII || kind_ == Kind::TypeIII) {
    auto cong_map = [&](const QCMat& U) {
      return project_ambient_map([&](const QCMat& z) {
        QCMat Ut(U.cols(), U.rows());
        for (std::size_t a = 0; a < U.rows(); ++a)
          for (std::size_t b = 0; b < U.cols(); ++b) Ut(b, a) = U(a, b);
        return U * z * Ut;
      });
    };
    for (int j = 0; j + 1 < rank_; ++j) gens.push_back(frame_swap_exact(j));
    QCMat R = QCMat::identity(p_);
    put_rotation(R, 0, 1);
    gens.push_back(cong_map(R));
    QCMat Ph = QCMat::identity(p_);
    Ph(0, 0) = qc_i();
    gens.push_back(cong_map(Ph));
    return gens;
  }

  // Type IV: real orthogonal rational maps on the ambient coordinates.
  auto ortho_map = [&](const QCMat& O) {
    QCMat S(n_, n_);
    // ambient basis vectors
    std::vector<QCVec> amb(n_);
    for (int k = 0; k < n_; ++k) {
      QCVec v(n_);
      if (k == 0) {
        v[0] = QC(Rat(1, 2));
        v[1] = QC(Rat(0), Rat(1, 2));
      } else if (k == 1) {
        v[0] = QC(Rat(1, 2));
        v[1] = QC(Rat(0), Rat(-1, 2));
      } else {
        v[k] = QC(1);
      }
      amb[k] = v;
    }
    for (int k = 0; k < n_; ++k) {
      QCVec img = O.apply(amb[k]);
      for (int m = 0; m < n_; ++m) {
        QC c = amb_inner(img, amb[m]) * QC(Rat(2) / gram_[m]);
        S(m, k) = c;
      }
    }
    return S;
  };
  gens.push_back(frame_swap_exact(0));
  QCMat R1 = QCMat::identity(n_);
  put_rotation(R1, 0, 1);  // rational phase on e1, e2
  gens.push_back(ortho_map(R1));
  if (n_ >= 4) {
    QCMat R2 = QCMat::identity(n_);
    put_rotation(R2, 2, 3);
    gens.push_back(ortho_map(R2));
  }
  QCMat F = QCMat::identity(n_);
  F(n_ - 1, n_ - 1) = QC(-1);
  gens.push_back(ortho_map(F));
  return gens;
}

QCMat Jts::exact_unitary_inverse(const QCMat& k) const {
  // inverse = G^{-1} k^H G for canonical-inner-product unitaries
  QCMat inv = k.conj_transpose();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      inv(i, j) = inv(i, j) * QC(gram_[j] / gram_[i]);
  QCMat chk = inv * k;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!(chk(i, j) - (i == j ? QC(1) : QC(0))).is_zero())
        throw JtsErr("exact_unitary_inverse: map is not unitary");
  return inv;
}

RatVec Jts::standard_peirce_diagonal(int j) const {
  QCVec e = basis_vector_exact(frame_idx_.at(j));
  QCMat B = box_exact(e, e);
  RatVec diag(n_);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (a != b && !B(a, b).is_zero())
        throw JtsErr("standard frame box operator is not diagonal");
    if (B(a, a).im != 0) throw JtsErr("box diagonal not real");
    diag[a] = B(a, a).re;
  }
  return diag;
}

CVec Jts::random_element(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  CVec v(n_);
  for (int k = 0; k < n_; ++k) v[k] = std::complex<double>(g(rng), g(rng));
  return v;
}

CVec Jts::from_exact(const QCVec& v) const {
  CVec r(n_);
  for (int k = 0; k < n_; ++k) r[k] = to_cd(v[k]);
  return r;
}

QCVec Jts::basis_vector_exact(int k) const {
  QCVec v(n_);
  v[k] = QC(1);
  return v;
}

Tripotent make_tripotent(const Jts& Z, const CVec& e, double tol) {
  if (!Z.is_tripotent(e, tol)) throw JtsErr("make_tripotent: {eee} != e");
  Tripotent t;
  t.e = e;
  t.rank = Z.norm(e) < tol ? 0 : Z.rank_of(e);
  if (t.rank > 0 || Z.norm(e) < tol) t.peirce = Z.peirce(e);
  return t;
}

}  // namespace symcone::jts
