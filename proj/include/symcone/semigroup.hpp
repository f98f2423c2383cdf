#ifndef SYMCONE_SEMIGROUP_HPP
#define SYMCONE_SEMIGROUP_HPP

#include "symcone/faces.hpp"

namespace symcone::semigroup {

using jts::CMat;
using lie::LieAlgebraG;
using lie::RVec;

struct SemiErr : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Block realization of g inside su(p,q) for type I algebras:
/// (kappa = A(.) - (.)C, u) maps to [[A, u], [u*, C]] with the trace gauge
/// tr A + tr C = 0. The scale of the off-diagonal blocks is calibrated so
/// the map is a Lie algebra homomorphism.
class MatrixRealization {
 public:
  explicit MatrixRealization(const LieAlgebraG& g);

  const LieAlgebraG& g() const { return g_; }
  int size() const { return p_ + q_; }
  const CMat& J() const { return J_; }

  CMat embed(const RVec& xi) const;
  RVec pullback(const CMat& m, double tol = 1e-8) const;

  /// J-twisted adjoint: J gamma^* J.
  CMat star(const CMat& gamma) const;

  /// Group element exp(iota(xi)) for xi in g.
  CMat exp_g(const RVec& xi) const;

  /// gamma = g_elt * exp(i iota(xi)).
  CMat semigroup_exp(const CMat& g_elt, const RVec& xi) const;

  struct Decomposition {
    CMat g_part;
    RVec xi;
    double residual = 0;      // reconstruction error
    double unitarity = 0;     // |g^* J g - J|
    bool boundary_log = false;  // nilpotent-series branch taken
  };
  /// Polar-type factorization gamma = g exp(i iota(xi)); principal
  /// logarithm in the interior, exact nilpotent series on unipotent
  /// boundary points.
  Decomposition decompose(const CMat& gamma) const;

  /// Stratum of gamma via the face catalogue of the cone part.
  faces::StratumResult stratum(const faces::FaceCatalogue& cat,
                               const CMat& gamma, bool witnessed,
                               long snap_den = 1000000) const;

 private:
  const LieAlgebraG& g_;
  int p_ = 0, q_ = 0;
  CMat J_;
};

}  // namespace symcone::semigroup

#endif
