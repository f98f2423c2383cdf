#ifndef SYMCONE_LIE_HPP
#define SYMCONE_LIE_HPP

#include <array>
#include <optional>

#include "symcone/jts.hpp"

namespace symcone::lie {

using jts::CMat;
using jts::CVec;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

struct LieErr : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pair (kappa, u): the triple derivation kappa plus the quadratic field
/// attached to u. Elements of g in structural form.
struct LieElement {
  CMat kappa;
  CVec u;
};

struct CayleyTriple {
  RVec h, xp, xm;  // coordinates in g
  bool h1 = false;
  CVec e;  // associated tripotent (h = xi_e^-)
};

struct Grading {
  CVec e;
  std::array<RMat, 5> level;  // bases of g^e[-2..2], columns, index j+2
  const RMat& at(int j) const { return level[j + 2]; }
};

struct ZeroSplit {
  RMat g0, g1, m;  // coordinate bases, columns
};

/// The real Lie algebra g = aut(Z) + Z with bracket
///   [(k1,u1),(k2,u2)] = (k1 k2 - k2 k1 + 2(u1 box u2 - u2 box u1),
///                        k1 u2 - k2 u1),
/// Cartan involution (k,u) |-> (k,-u), and Killing form from structure
/// constants. The basis is exact: derivation part by rational
/// Gram-Schmidt on the inner generators, vector part the real coordinate
/// basis of Z. All structure constants are rational and kept both exactly
/// and as doubles.
class LieAlgebraG {
 public:
  explicit LieAlgebraG(jts::Jts Z);

  const jts::Jts& Z() const { return Z_; }
  int dim() const { return dim_; }
  int dim_k() const { return dim_k_; }
  int dim_p() const { return 2 * Z_.dim(); }

  // --- element <-> coordinate conversions -------------------------------
  LieElement element(const RVec& x) const;
  RVec coords(const LieElement& xi) const;
  RVec coords(const CMat& kappa, const CVec& u) const;
  RatVec coords_exact(const QCMat& kappa, const QCVec& u) const;

  RVec xi_minus(const CVec& u) const;
  RVec x_plus(const CVec& u) const;
  RVec x_minus(const CVec& u) const;
  /// eta_u^e = xi_u^- + 2(e box u - u box e)
  RVec eta(const CVec& e, const CVec& u) const;
  /// zeta_u^e = xi_u^- + (e box u - u box e)
  RVec zeta(const CVec& e, const CVec& u) const;
  /// phi^e(u, v) = eta_u^e + zeta_{-iv/2}^e for u in Z_1/2, v in X_1(e)
  RVec phi(const CVec& e, const CVec& u, const CVec& v) const;

  RatVec xi_minus_exact(const QCVec& u) const;
  RatVec x_plus_exact(const QCVec& u) const;
  RatVec x_minus_exact(const QCVec& u) const;
  RatVec eta_exact(const QCVec& e, const QCVec& u) const;
  RatVec zeta_exact(const QCVec& e, const QCVec& u) const;

  const RVec& h0() const { return h0_; }
  const RatVec& h0_exact() const { return h0x_; }

  // --- algebra operations ------------------------------------------------
  RVec bracket(const RVec& x, const RVec& y) const;
  RatVec bracket_exact(const RatVec& x, const RatVec& y) const;
  RMat ad(const RVec& x) const;
  RatMat ad_exact(const RatVec& x) const;
  const RMat& ad_basis(int a) const { return ad_d_[a]; }

  double killing(const RVec& x, const RVec& y) const;
  const RatMat& killing_gram() const { return B_; }
  double killing_closed_form(const LieElement& xi, const LieElement& eta) const;

  RVec theta(const RVec& x) const;
  /// <x,y> = -B(x, theta y); positive definite.
  double inner(const RVec& x, const RVec& y) const;
  double norm(const RVec& x) const;
  const RatMat& inner_gram() const { return W_; }

  // --- Cayley machinery ----------------------------------------------------
  std::optional<CayleyTriple> cayley_test(const RVec& x, double tol = 1e-9) const;
  CayleyTriple cayley_elements(const CVec& e) const;
  CVec tripotent_from_cayley(const CayleyTriple& t, double tol = 1e-9) const;

  // --- gradings, Heisenberg data, level-zero split ------------------------
  Grading grading(const CVec& e) const;
  /// h_e(u,v) = 8 {u v e}
  CVec h_form(const CVec& e, const CVec& u, const CVec& v) const;
  /// q_e(u,v) = 4i({v u e} - {u v e}), the imaginary part of h_e
  CVec q_form(const CVec& e, const CVec& u, const CVec& v) const;
  /// Coordinate basis of the conal nilpotent algebra h^e = g^e[1,2].
  RMat heisenberg_basis(const CVec& e) const;
  ZeroSplit zero_grading_split(const CVec& e) const;

  // --- Jordan-Chevalley ----------------------------------------------------
  struct JordanChevalley {
    RatVec semisimple, nilpotent;
  };
  JordanChevalley jordan_chevalley_exact(const RatVec& xi) const;
  /// Floating wrapper; when snap is set the input is snapped to rationals
  /// with bounded denominator, otherwise exact coordinates are required.
  std::pair<RVec, RVec> jordan_chevalley(const RVec& xi, bool snap = false,
                                         long max_den = 1000000) const;

  // --- adjoint group actions ----------------------------------------------
  /// exp(ad eta), floating.
  RMat ad_exp(const RVec& eta) const;
  /// exp(ad eta) for ad-nilpotent eta, exact (throws if not nilpotent).
  RatMat ad_exp_nilpotent_exact(const RatVec& eta) const;
  /// Ad(k) for a triple automorphism k of Z: (kappa,u) -> (k kappa k^-1, ku).
  RMat triple_auto_ad(const CMat& k) const;
  RatMat triple_auto_ad_exact(const QCMat& k) const;
  /// Random element of K as a triple automorphism matrix on Z.
  CMat sample_k(std::uint64_t seed, int steps = 2) const;

  RVec from_exact(const RatVec& x) const;
  const QCMat& kappa_basis_exact(int a) const { return kbasis_[a]; }

 private:
  void build_basis();
  void build_structure();
  QCVec u_from_coords_exact(const RatVec& x) const;

  jts::Jts Z_;
  int dim_ = 0, dim_k_ = 0;
  std::vector<QCMat> kbasis_;       // exact derivation basis (orthogonal)
  std::vector<Rat> kbasis_norm2_;   // Frobenius norms
  std::vector<CMat> kbasis_d_;
  std::vector<RatMat> ad_;          // exact adjoint matrices per basis vector
  std::vector<RMat> ad_d_;
  RatMat B_;                        // Killing Gram matrix
  RMat B_d_;
  RatMat W_;                        // inner product Gram
  RMat W_d_;
  RVec h0_;
  RatVec h0x_;
};

}  // namespace symcone::lie

#endif
