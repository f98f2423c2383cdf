#include "symcone/faces.hpp"

#include <Eigen/SVD>

#include <random>

namespace symcone::faces {

namespace {

// random small positive rational, numerator/denominator in 1..9
Rat small_pos_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 9);
  return Rat(d(rng), d(rng));
}

Rat small_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::uniform_int_distribution<int> q(1, 9);
  return Rat(d(rng), q(rng));
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec scale(const RatVec& a, const Rat& s) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

QCVec qc_add(const QCVec& a, const QCVec& b) {
  QCVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QCVec qc_scale(const QCVec& v, const QC& s) {
  QCVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
  return r;
}

// orthonormal columns w.r.t. the invariant inner product
RMat gs_columns(const LieAlgebraG& g, const std::vector<RVec>& vecs) {
  std::vector<RVec> out;
  for (const auto& v0 : vecs) {
    RVec v = v0;
    for (const auto& u : out) v -= g.inner(v, u) * u;
    double nv = g.norm(v);
    if (nv > 1e-9 * std::max(1.0, g.norm(v0))) out.push_back(v / nv);
  }
  RMat M(g.dim(), static_cast<int>(out.size()));
  for (std::size_t c = 0; c < out.size(); ++c)
    M.col(static_cast<int>(c)) = out[c];
  return M;
}

double span_distance(const LieAlgebraG& g, const RMat& ortho, const RVec& x) {
  RVec rem = x;
  for (int c = 0; c < ortho.cols(); ++c)
    rem -= g.inner(rem, ortho.col(c)) * ortho.col(c);
  return g.norm(rem);
}

// complex basis of Z_1/2(e) cap Z_1/2(c)
jts::CMat peirce_half_intersection(const jts::Jts& Z, const CVec& e,
                                   const CVec& c) {
  const int n = Z.dim();
  jts::CMat stacked(2 * n, n);
  jts::CMat Be = Z.box(e, e) - 0.5 * jts::CMat::Identity(n, n);
  jts::CMat Bc = Z.box(c, c) - 0.5 * jts::CMat::Identity(n, n);
  auto weight = [&](jts::CMat& M) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        M(a, b) *= std::sqrt(to_double(Z.gram()[a]) / to_double(Z.gram()[b]));
  };
  weight(Be);
  weight(Bc);
  stacked.topRows(n) = Be;
  stacked.bottomRows(n) = Bc;
  Eigen::JacobiSVD<jts::CMat> svd(stacked, Eigen::ComputeFullV);
  double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  int null_dim = 0;
  for (int k = n - 1; k >= 0; --k) {
    if (svd.singularValues()[k] > 1e-8 * std::max(1.0, smax)) break;
    ++null_dim;
  }
  jts::CMat out(n, null_dim);
  for (int k = 0; k < null_dim; ++k) {
    Eigen::VectorXcd v = svd.matrixV().col(n - 1 - k);
    for (int a = 0; a < n; ++a) v[a] /= std::sqrt(to_double(Z.gram()[a]));
    out.col(k) = v;
  }
  return out;
}

}  // namespace

FaceCatalogue::FaceCatalogue(const LieAlgebraG& g)
    : g_(g), rsd_(roots::root_decomposition(g)), omega_(roots::omega_cones(rsd_)) {
  for (const auto& k : g_.Z().exact_k_generators())
    kgen_ad_.push_back(g_.triple_auto_ad_exact(k));
  build_adapted_primitives();
  build_classifier_table();
}

CVec FaceCatalogue::partial_sum(int k) const {
  CVec e = CVec::Zero(g_.Z().dim());
  auto frame = g_.Z().frame();
  for (int j = 0; j < k; ++j) e += frame[j];
  return e;
}

QCVec FaceCatalogue::partial_sum_exact(int k) const {
  QCVec e(g_.Z().dim());
  auto frame = g_.Z().frame_exact();
  for (int j = 0; j < k; ++j) e = qc_add(e, frame[j]);
  return e;
}

FaceDescriptor FaceCatalogue::general_face(const CVec& e, const CVec& c) const {
  const auto& Z = g_.Z();
  if (!Z.is_tripotent(e) || !Z.is_tripotent(c))
    throw FaceErr("general_face: inputs must be tripotents");
  if (Z.norm(c) > 1e-9 && !Z.leq(c, e))
    throw FaceErr("general_face: c <= e required");
  FaceDescriptor fd;
  fd.e = e;
  fd.c = c;
  fd.k = Z.norm(e) < 1e-9 ? 0 : Z.rank_of(e);
  fd.l = Z.norm(c) < 1e-9 ? 0 : Z.rank_of(c);

  fd.s_basis = g_.zero_grading_split(e).g0;

  std::vector<RVec> eta_cols;
  if (fd.l > 0) {
    jts::CMat inter = peirce_half_intersection(Z, e, c);
    std::complex<double> i(0, 1);
    for (int col = 0; col < inter.cols(); ++col) {
      eta_cols.push_back(g_.eta(e, inter.col(col)));
      eta_cols.push_back(g_.eta(e, i * inter.col(col)));
    }
  }
  fd.n_eta_basis = gs_columns(g_, eta_cols);

  std::vector<RVec> z_cols;
  if (fd.l > 0) {
    std::complex<double> i(0, 1);
    for (const auto& w : Z.real_form_x1(c)) z_cols.push_back(g_.zeta(c, i * w));
  }
  fd.z_basis = gs_columns(g_, z_cols);

  std::vector<RVec> all;
  for (int col = 0; col < fd.s_basis.cols(); ++col) all.push_back(fd.s_basis.col(col));
  for (int col = 0; col < fd.n_eta_basis.cols(); ++col)
    all.push_back(fd.n_eta_basis.col(col));
  for (int col = 0; col < fd.z_basis.cols(); ++col) all.push_back(fd.z_basis.col(col));
  fd.gf_basis = gs_columns(g_, all);
  if (fd.gf_basis.cols() !=
      fd.s_basis.cols() + fd.n_eta_basis.cols() + fd.z_basis.cols())
    throw FaceErr("general_face: parts of g_F are not independent");

  // The kernel of the exposing functional must cut out exactly F_{e,c}:
  //  - c = 0: the semisimple face needs both nilpotent functionals of e;
  //  - full-rank e: F_e is already the nilpotent face of e, so expose the
  //    smaller face through the complement d = e - c;
  //  - otherwise the two principal normals expose the intersection.
  if (fd.l == 0) {
    fd.exposing_normal = g_.x_plus(e) - g_.x_minus(e);
  } else if (fd.k < g_.Z().rank()) {
    fd.exposing_normal = -g_.x_minus(e) - g_.x_minus(c);
  } else {
    CVec d = e - c;
    fd.exposing_normal = -g_.x_minus(c);
    if (Z.norm(d) > 1e-12)
      fd.exposing_normal += g_.x_plus(d) - g_.x_minus(d);
  }

  // --- invariants -------------------------------------------------------
  const int m = static_cast<int>(fd.gf_basis.cols());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      RVec br = g_.bracket(fd.gf_basis.col(a), fd.gf_basis.col(b));
      if (span_distance(g_, fd.gf_basis, br) > 1e-8 * std::max(1.0, g_.norm(br)))
        throw FaceErr("general_face: g_F is not bracket-closed");
    }
  // [n_F, n_F] inside the centre part
  RMat nf(g_.dim(), fd.n_eta_basis.cols() + fd.z_basis.cols());
  nf << fd.n_eta_basis, fd.z_basis;
  for (int a = 0; a < nf.cols(); ++a)
    for (int b = a + 1; b < nf.cols(); ++b) {
      RVec br = g_.bracket(nf.col(a), nf.col(b));
      if (span_distance(g_, fd.z_basis, br) > 1e-8 * std::max(1.0, g_.norm(br)))
        throw FaceErr("general_face: [n_F, n_F] escapes z_F");
    }
  // centre of g_F equals g^c[2]
  {
    RMat stack(g_.dim() * m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        stack.block(g_.dim() * a, b, g_.dim(), 1) =
            g_.bracket(fd.gf_basis.col(b), fd.gf_basis.col(a));
    int centre = 0;
    if (m > 0) {
      Eigen::JacobiSVD<RMat> svd(stack);
      double smax = svd.singularValues()[0];
      for (int k2 = 0; k2 < m; ++k2)
        if (svd.singularValues()[k2] <= 1e-8 * std::max(1.0, smax)) ++centre;
    }
    if (centre != fd.z_basis.cols())
      throw FaceErr("general_face: centre of g_F differs from g^c[2]");
    for (int col = 0; col < fd.z_basis.cols(); ++col)
      for (int b = 0; b < m; ++b) {
        RVec br = g_.bracket(fd.z_basis.col(col), fd.gf_basis.col(b));
        if (g_.norm(br) > 1e-8) throw FaceErr("general_face: z_F not central");
      }
  }
  return fd;
}

FaceDescriptor FaceCatalogue::nilpotent_face(const CVec& e) const {
  const auto& Z = g_.Z();
  CVec ext = e;
  for (const auto& f : Z.frame())
    if (Z.orthogonal(ext, f)) ext += f;
  return general_face(ext, e);
}

std::pair<CVec, CVec> FaceCatalogue::class_representative(
    StratumLabel lbl) const {
  return {partial_sum(lbl.k), partial_sum(lbl.l)};
}

InteriorSample FaceCatalogue::face_interior_sample(StratumLabel lbl,
                                                   std::uint64_t seed) const {
  const auto& Z = g_.Z();
  const int r = rank();
  if (lbl.l < 0 || lbl.l > lbl.k || lbl.k > r)
    throw FaceErr("face_interior_sample: bad label");
  std::mt19937_64 rng(seed);

  QCVec e = partial_sum_exact(lbl.k), c = partial_sum_exact(lbl.l);

  // semisimple slice point: positive combination of the coroots of the
  // noncompact positive roots of g_0(e) (exactly: roots vanishing on the
  // first k torus coordinates)
  std::vector<int> sub;
  for (int idx : rsd_.noncompact_positive()) {
    bool vanishes = true;
    for (int j = 0; j < lbl.k; ++j)
      if (rsd_.roots[idx].lambda[j] != 0) vanishes = false;
    if (vanishes) sub.push_back(idx);
  }
  const int dt = rsd_.t.dim();
  auto lambda_at = [&](const roots::Root& root, const RatVec& Ht) {
    Rat v(0);
    for (int cc = 0; cc < dt; ++cc) v += root.lambda[cc] * Ht[cc];
    return v;
  };
  RatVec Ht(dt, Rat(0));
  for (int attempt = 0; attempt < 32; ++attempt) {
    for (auto& v : Ht) v = 0;
    for (int idx : sub) {
      Rat q = small_pos_rat(rng);
      for (int cc = 0; cc < dt; ++cc)
        Ht[cc] += q * rsd_.roots[idx].coroot[cc];
    }
    // genericity: a root value may vanish or collide only when it does so
    // identically on the slice span, otherwise the fingerprint would
    // depend on the draw
    bool generic = true;
    std::vector<Rat> vals;
    std::vector<bool> structural_zero;
    for (const auto& root : rsd_.roots) {
      bool zero_on_span = true;
      for (int idx : sub) {
        Rat p(0);
        for (int cc = 0; cc < dt; ++cc)
          p += root.lambda[cc] * rsd_.roots[idx].coroot[cc];
        if (p != 0) zero_on_span = false;
      }
      Rat v = lambda_at(root, Ht);
      if (zero_on_span && v != 0)
        throw FaceErr("face_interior_sample: inconsistent root values");
      if (!zero_on_span && v == 0) generic = false;
      vals.push_back(v);
      structural_zero.push_back(zero_on_span);
    }
    for (std::size_t a = 0; a < vals.size() && generic; ++a)
      for (std::size_t b = a + 1; b < vals.size() && generic; ++b) {
        if (vals[a] != vals[b]) continue;
        // identical values must be structural: equal functionals on span
        bool same_on_span = true;
        for (int idx : sub) {
          Rat pa(0), pb(0);
          for (int cc = 0; cc < dt; ++cc) {
            pa += rsd_.roots[a].lambda[cc] * rsd_.roots[idx].coroot[cc];
            pb += rsd_.roots[b].lambda[cc] * rsd_.roots[idx].coroot[cc];
          }
          if (pa != pb) same_on_span = false;
        }
        if (!same_on_span) generic = false;
      }
    if (generic) break;
    if (attempt == 31)
      throw FaceErr("face_interior_sample: no generic draw found");
  }
  RatVec H(g_.dim(), Rat(0));
  for (int cc = 0; cc < dt; ++cc)
    for (int rr = 0; rr < g_.dim(); ++rr)
      H[rr] += Ht[cc] * rsd_.t.basis[cc][rr];

  // nilpotent part: interior diagonal point of the squares cone of X_1(c)
  RatVec X(g_.dim(), Rat(0));
  if (lbl.l > 0) {
    QCVec v(Z.dim());
    auto frame = Z.frame_exact();
    for (int j = 0; j < lbl.l; ++j)
      v = qc_add(v, qc_scale(frame[j], QC(small_pos_rat(rng))));
    X = g_.zeta_exact(c, qc_scale(v, QC(Rat(0), Rat(-1, 2))));
  }

  RatVec xi = add(H, X);

  // conjugate by exact unipotent elements of g_F
  std::vector<RatVec> nilpotents;
  {
    // eta-type: coordinates common to Z_1/2(e) and Z_1/2(c)
    if (lbl.l > 0) {
      RatVec de(Z.dim(), Rat(0)), dc(Z.dim(), Rat(0));
      for (int j = 0; j < lbl.k; ++j) {
        RatVec dj = Z.standard_peirce_diagonal(j);
        for (int mth = 0; mth < Z.dim(); ++mth) de[mth] += dj[mth];
      }
      for (int j = 0; j < lbl.l; ++j) {
        RatVec dj = Z.standard_peirce_diagonal(j);
        for (int mth = 0; mth < Z.dim(); ++mth) dc[mth] += dj[mth];
      }
      for (int mth = 0; mth < Z.dim(); ++mth) {
        if (de[mth] == Rat(1, 2) && dc[mth] == Rat(1, 2)) {
          QCVec u(Z.dim());
          u[mth] = QC(small_rat(rng));
          nilpotents.push_back(g_.eta_exact(e, u));
          u[mth] = QC(Rat(0), small_rat(rng));
          nilpotents.push_back(g_.eta_exact(e, u));
        }
      }
      // central directions
      auto frame = Z.frame_exact();
      for (int j = 0; j < lbl.l; ++j)
        nilpotents.push_back(
            g_.zeta_exact(c, qc_scale(frame[j], QC(Rat(0), small_rat(rng)))));
    }
    // nilpotents of the Levi part g_0(e)
    auto frame = Z.frame_exact();
    for (int j = lbl.k; j < r; ++j)
      nilpotents.push_back(scale(g_.x_plus_exact(frame[j]), small_rat(rng)));
  }
  std::shuffle(nilpotents.begin(), nilpotents.end(), rng);

  InteriorSample out;
  out.label = lbl;
  RatVec s = H, n = X;
  int used = 0;
  for (const auto& eta : nilpotents) {
    if (used >= 3) break;
    bool zero = true;
    for (const auto& v : eta)
      if (v != 0) zero = false;
    if (zero) continue;
    RatMat E = g_.ad_exp_nilpotent_exact(eta);
    s = E.apply(s);
    n = E.apply(n);
    ++used;
  }
  out.semisimple_part = s;
  out.nilpotent_part = n;
  out.xi = add(s, n);
  return out;
}

ExposednessReport FaceCatalogue::exposedness_check(
    const FaceDescriptor& fd, const std::vector<RVec>& omega_samples,
    double sign_tol, double span_tol) const {
  ExposednessReport rep;
  double nn = g_.norm(fd.exposing_normal);
  for (const auto& sigma : omega_samples) {
    ++rep.total;
    double p = g_.inner(sigma, fd.exposing_normal);
    double scale = std::max(1.0, g_.norm(sigma) * nn);
    if (p < -sign_tol * scale) {
      ++rep.sign_violations;
      continue;
    }
    if (p <= sign_tol * scale) {
      ++rep.kernel_hits;
      if (span_distance(g_, fd.gf_basis, sigma) >
          span_tol * std::max(1.0, g_.norm(sigma)))
        ++rep.span_violations;
    }
  }
  return rep;
}

OrbitFingerprint FaceCatalogue::fingerprint_nilpotent(const RatVec& x) const {
  OrbitFingerprint fp;
  RatMat A = g_.ad_exact(x);
  RatMat P = A;
  for (int j = 1; j <= 5; ++j) {
    fp.rank_seq.push_back(static_cast<int>(P.rank()));
    P = P * A;
  }
  fp.centralizer_dim = g_.dim() - fp.rank_seq[0];
  return fp;
}

std::vector<int> FaceCatalogue::fingerprint_semisimple(const RatVec& s) const {
  RatMat A = g_.ad_exact(s);
  std::vector<int> sig;
  sig.push_back(g_.dim() - static_cast<int>(A.rank()));  // centralizer dim
  // multiplicity structure of the characteristic polynomial (Yun)
  QPoly chi = char_poly(A);
  QPoly a = chi.make_monic();
  QPoly b = a.derivative();
  QPoly d = QPoly::gcd(a, b);
  if (d.degree() <= 0) {
    sig.push_back(a.degree());  // squarefree: all multiplicities one
    return sig;
  }
  QPoly w = a.divmod(d).first;
  while (w.degree() > 0) {
    QPoly y = QPoly::gcd(w, d);
    QPoly factor = w.divmod(y).first;  // product of roots of this multiplicity
    sig.push_back(factor.degree());
    w = y;
    d = d.divmod(y).first;
  }
  sig.push_back(d.degree() > 0 ? d.degree() : 0);
  return sig;
}

void FaceCatalogue::build_classifier_table() {
  const int r = rank();
  for (int k = 0; k <= r; ++k)
    for (int l = 0; l <= k; ++l) {
      StratumLabel lbl{k, l};
      auto sample = face_interior_sample(lbl, 0xC0FFEE + 17 * k + l);
      table_[lbl] = {fingerprint_semisimple(sample.semisimple_part),
                     fingerprint_nilpotent(sample.nilpotent_part)};
    }
}

StratumResult FaceCatalogue::stratum_of(const RatVec& xi, bool certified) const {
  if (!certified)
    throw FaceErr("stratum_of: membership certificate required");
  auto jc = g_.jordan_chevalley_exact(xi);
  auto sfp = fingerprint_semisimple(jc.semisimple);
  auto nfp = fingerprint_nilpotent(jc.nilpotent);
  for (const auto& [lbl, fps] : table_)
    if (fps.first == sfp && fps.second == nfp) return {true, lbl};
  return {false, {}};
}

std::vector<std::pair<StratumLabel, FaceDescriptor>>
FaceCatalogue::enumerate_face_classes() const {
  const auto& Z = g_.Z();
  const int r = rank();
  auto frame = Z.frame();
  std::vector<std::pair<StratumLabel, FaceDescriptor>> out;
  for (int k = 0; k <= r; ++k)
    for (int l = 0; l <= k; ++l) {
      StratumLabel lbl{k, l};
      auto [e, c] = class_representative(lbl);
      FaceDescriptor fd = general_face(e, c);

      // conjugacy spot-check against the reversed-frame representative
      CVec e2 = CVec::Zero(Z.dim()), c2 = CVec::Zero(Z.dim());
      for (int j = 0; j < k; ++j) e2 += frame[r - 1 - j];
      for (int j = 0; j < l; ++j) c2 += frame[r - 1 - j];
      FaceDescriptor fd2 = general_face(e2, c2);
      // frame reversal as a bubble-sort word in adjacent transpositions
      RMat word = RMat::Identity(g_.dim(), g_.dim());
      for (int i = 0; i + 1 < r; ++i)
        for (int j = 0; j + 2 + i < r + 1; ++j)
          word = g_.triple_auto_ad(Z.frame_swap(j)) * word;
      bool conjugate = fd.gf_basis.cols() == fd2.gf_basis.cols();
      for (int col = 0; conjugate && col < fd2.gf_basis.cols(); ++col) {
        RVec img = word * fd2.gf_basis.col(col);
        if (span_distance(g_, fd.gf_basis, img) > 1e-7) conjugate = false;
      }
      if (!conjugate)
        throw FaceErr("enumerate_face_classes: conjugacy spot-check failed");
      out.emplace_back(lbl, std::move(fd));
    }
  return out;
}

void FaceCatalogue::build_adapted_primitives() {
  const auto& Z = g_.Z();
  std::vector<std::pair<QCVec, std::string>> candidates;
  const int n = Z.dim();
  switch (Z.kind()) {
    case jts::Kind::TypeI:
    case jts::Kind::TypeII: {
      for (int m = 0; m < n; ++m)
        candidates.emplace_back(Z.basis_vector_exact(m), Z.labels()[m]);
      break;
    }
    case jts::Kind::TypeIII: {
      for (int j = 0; j < Z.rank(); ++j)
        candidates.emplace_back(Z.frame_exact()[j], Z.labels()[j]);
      break;
    }
    case jts::Kind::TypeIV: {
      candidates.emplace_back(Z.frame_exact()[0], "e1");
      candidates.emplace_back(Z.frame_exact()[1], "e2");
      // frame pairs of the transverse planes
      for (int a = 2; a + 1 < n; a += 2) {
        QCVec fp(n), fm(n);
        fp[a] = QC(Rat(1, 2));
        fp[a + 1] = QC(Rat(0), Rat(1, 2));
        fm[a] = QC(Rat(1, 2));
        fm[a + 1] = QC(Rat(0), Rat(-1, 2));
        // basis vectors v_a have canonical norm sqrt(2); the pair
        // (v_a + i v_{a+1})/2 is a primitive tripotent
        candidates.emplace_back(fp, "f+" + std::to_string(a + 1));
        candidates.emplace_back(fm, "f-" + std::to_string(a + 1));
      }
      break;
    }
  }
  // keep candidates that are tripotents with i(e box e) inside t
  RatMat Tmat(g_.dim(), rsd_.t.dim());
  for (int cc = 0; cc < rsd_.t.dim(); ++cc)
    for (int rr = 0; rr < g_.dim(); ++rr) Tmat(rr, cc) = rsd_.t.basis[cc][rr];
  for (auto& [v, name] : candidates) {
    CVec vd = Z.from_exact(v);
    if (!Z.is_tripotent(vd) || Z.rank_of(vd) != 1) continue;
    QCMat box = Z.box_exact(v, v).scaled(qc_i());
    RatVec coords;
    try {
      coords = g_.coords_exact(box, QCVec(n));
    } catch (const lie::LieErr&) {
      continue;
    }
    if (Tmat.solve(coords)) adapted_.emplace_back(v, name);
  }
}

NilpotentOrbitDatum FaceCatalogue::nilpotent_orbit(int k) const {
  if (k < 0 || k > rank()) throw FaceErr("nilpotent_orbit: bad rank");
  NilpotentOrbitDatum d;
  d.rank = k;
  d.representative = g_.x_plus_exact(partial_sum_exact(k));
  d.fingerprint = fingerprint_nilpotent(d.representative);
  return d;
}

std::vector<RVec> FaceCatalogue::certified_samples(int count,
                                                   std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> natoms(1, 6);
  const auto& Z = g_.Z();
  auto frame = Z.frame();
  std::vector<RVec> out;
  // a batch of minimal-orbit atoms to combine
  std::vector<RVec> atoms;
  for (const auto& e : frame) {
    atoms.push_back(g_.x_plus(e));
    atoms.push_back(-g_.x_minus(e));
  }
  for (int s = 0; s < 40; ++s) {
    jts::CMat kmat = g_.sample_k(seed * 31 + s);
    atoms.push_back(g_.x_plus(kmat * frame[s % frame.size()]));
  }
  while (static_cast<int>(out.size()) < count) {
    if (out.size() % 10 == 0) {
      // sprinkle face-interior points across the classes
      int k = static_cast<int>(out.size() / 10) % (rank() + 1);
      int l = static_cast<int>(rng() % (k + 1));
      auto smp = face_interior_sample({k, l}, rng());
      out.push_back(g_.from_exact(smp.xi));
      continue;
    }
    RVec combo = RVec::Zero(g_.dim());
    int na = natoms(rng);
    for (int a = 0; a < na; ++a)
      combo += unif(rng) * atoms[rng() % atoms.size()];
    out.push_back(combo);
  }
  return out;
}

RatMat FaceCatalogue::exact_k_word(std::uint64_t seed, int length) const {
  std::mt19937_64 rng(seed);
  RatMat W = RatMat::identity(g_.dim());
  for (int s = 0; s < length; ++s)
    W = kgen_ad_[rng() % kgen_ad_.size()] * W;
  return W;
}

AuditReport FaceCatalogue::cartan_slice_face_audit() const {
  AuditReport rep;
  auto faces = omega_.minus.faces();
  rep.total_faces = static_cast<int>(faces.size());
  const int dt = rsd_.t.dim();

  // t-coordinates of i(e' box e') for each adapted primitive
  RatMat Tmat(g_.dim(), dt);
  for (int cc = 0; cc < dt; ++cc)
    for (int rr = 0; rr < g_.dim(); ++rr) Tmat(rr, cc) = rsd_.t.basis[cc][rr];
  std::vector<RatVec> kvecs;
  for (const auto& [v, name] : adapted_) {
    QCMat box = g_.Z().box_exact(v, v).scaled(qc_i());
    auto sol = Tmat.solve(g_.coords_exact(box, QCVec(g_.Z().dim())));
    kvecs.push_back(*sol);
  }
  const int np = static_cast<int>(kvecs.size());
  if (np > 16) throw FaceErr("audit: adapted primitive set too large");

  std::vector<poly::PolyhedralCone> face_cones;
  for (const auto& f : faces) {
    std::vector<RatVec> fgens;
    for (int gi : f.gen_idx) fgens.push_back(omega_.minus.generators()[gi]);
    face_cones.push_back(poly::PolyhedralCone::from_generators(fgens, dt));
  }
  std::vector<std::optional<std::vector<std::string>>> match(faces.size());
  for (unsigned mask = 0; mask < (1u << np); ++mask) {
    std::vector<RatVec> span;
    std::vector<std::string> names;
    for (int b = 0; b < np; ++b)
      if (mask & (1u << b)) {
        span.push_back(kvecs[b]);
        names.push_back(adapted_[b].second);
      }
    poly::PolyhedralCone slice =
        span.empty() ? poly::PolyhedralCone::from_generators({}, dt)
                     : omega_.minus.intersect_subspace(span);
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (match[f]) continue;
      if (face_cones[f].equals(slice)) match[f] = names;
    }
  }
  for (std::size_t f = 0; f < faces.size(); ++f) {
    AuditEntry entry;
    entry.face_gens = faces[f].gen_idx;
    entry.matched = match[f].has_value();
    if (match[f]) entry.labels = *match[f];
    if (entry.matched) ++rep.matched;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

}  // namespace symcone::faces
