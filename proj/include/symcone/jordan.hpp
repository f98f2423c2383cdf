#ifndef SYMCONE_JORDAN_HPP
#define SYMCONE_JORDAN_HPP

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "symcone/jts.hpp"

namespace symcone::jordan {

using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

struct EjaErr : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EjaKind { Sym, Herm, Spin, Derived };

enum class Membership { Interior, Boundary, Outside };

struct MembershipResult {
  Membership where;
  int rank = 0;  // number of strictly positive spectral values (w. mult.)
};

struct SpectralTerm {
  double lambda;
  RVec idem;
};

/// Formally real Jordan algebra on a fixed coordinate basis, orthogonal for
/// the canonical inner product (diagonal Gram). Spectral decompositions use
/// the matrix realization for Sym/Herm, the two-point formula for Spin, and
/// multiplication-operator restriction to the subalgebra generated by x for
/// algebras derived from a triple system.
class Eja {
 public:
  static Eja sym(int n);
  static Eja herm(int n);
  static Eja spin(int n);  // R + R^n, rank two
  static Eja from_jts_real_form(const jts::Jts& Z, const jts::CVec& e);

  EjaKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int rank() const { return rank_; }
  int matrix_size() const { return msize_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const RVec& unit() const { return unit_; }

  RVec product(const RVec& x, const RVec& y) const;
  double inner(const RVec& x, const RVec& y) const;
  double norm(const RVec& x) const;
  /// Multiplication operator M_x in coordinates.
  RMat mult_op(const RVec& x) const;
  /// tr(M_{x o y}), the trace form.
  double trace_form(const RVec& x, const RVec& y) const;

  bool is_idempotent(const RVec& c, double tol = 1e-9) const;
  int idempotent_rank(const RVec& c) const;

  /// Nonzero spectral terms, eigenvalues grouped; x = sum lambda_i c_i.
  std::vector<SpectralTerm> spectral(const RVec& x) const;
  MembershipResult cone_membership(const RVec& x, double tol = 1e-9) const;

  struct Peirce {
    RMat x0, x12, x1;
  };
  Peirce peirce(const RVec& c) const;

  struct ConeFace {
    RVec idem;       // c
    RMat x0_basis;   // basis of X_0(c), columns
    int rank;        // rk c
    RVec dual_idem;  // e - c
  };
  ConeFace cone_face(const RVec& c) const;

  /// Random element, coordinates ~ N(0,1).
  RVec random_element(std::uint64_t seed) const;

  // Matrix realization helpers (Sym and Herm kinds).
  RMat to_sym_matrix(const RVec& x) const;
  RVec from_sym_matrix(const RMat& m) const;
  CMat to_herm_matrix(const RVec& x) const;
  RVec from_herm_matrix(const CMat& m) const;

  // Derived-kind bridge back to the ambient triple system.
  jts::CVec to_z(const RVec& x) const;
  RVec from_z(const jts::CVec& z) const;

 private:
  Eja() = default;
  std::vector<SpectralTerm> spectral_full(const RVec& x) const;
  std::vector<SpectralTerm> spectral_matrix(const RVec& x) const;
  std::vector<SpectralTerm> spectral_spin(const RVec& x) const;
  std::vector<SpectralTerm> spectral_power_basis(const RVec& x) const;

  EjaKind kind_;
  int dim_ = 0;
  int rank_ = 0;
  int msize_ = 0;  // matrix size for Sym/Herm
  std::vector<std::string> labels_;
  std::vector<double> gram_;
  RVec unit_;
  std::vector<RMat> tensor_;  // tensor_[i] = matrix of b_i o (.)
  std::vector<jts::CVec> zbasis_;  // Derived: basis inside Z
  std::vector<double> zgram_;      // Derived: ambient canonical Gram
};

}  // namespace symcone::jordan

#endif
