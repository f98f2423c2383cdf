#ifndef SYMCONE_JTS_HPP
#define SYMCONE_JTS_HPP

#include <Eigen/Dense>

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "symcone/qnum.hpp"

namespace symcone::jts {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

enum class Kind { TypeI, TypeII, TypeIII, TypeIV };

std::string kind_name(Kind k);

struct JtsErr : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hermitian Jordan triple system of classical type, realized on a fixed
/// complex coordinate basis. The basis is orthogonal for the canonical inner
/// product with rational squared norms (`gram`), and the triple product
/// tensor has Gaussian-rational entries, so downstream exact arithmetic
/// stays exact. Types II and III are carried as subtriples of square
/// matrices, type IV as the spin triple in a frame-adapted basis.
class Jts {
 public:
  static Jts type_i(int p, int q);
  static Jts type_ii(int n);
  static Jts type_iii(int n);
  static Jts type_iv(int n);

  Kind kind() const { return kind_; }
  int p() const { return p_; }
  int q() const { return q_; }
  /// Complex dimension of Z.
  int dim() const { return n_; }
  int rank() const { return rank_; }
  /// Joint Peirce multiplicities (a = dim Z_ij, b = dim Z_0j).
  int mult_a() const { return mult_a_; }
  int mult_b() const { return mult_b_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// {u v w}: linear in u and w, conjugate linear in v.
  CVec triple(const CVec& u, const CVec& v, const CVec& w) const;
  QCVec triple_exact(const QCVec& u, const QCVec& v, const QCVec& w) const;

  /// Matrix of w |-> {u v w} on the coordinate basis.
  CMat box(const CVec& u, const CVec& v) const;
  QCMat box_exact(const QCVec& u, const QCVec& v) const;

  /// Canonical inner product (normalized so primitive tripotents have norm 1).
  std::complex<double> inner(const CVec& u, const CVec& v) const;
  double norm(const CVec& u) const;
  const RatVec& gram() const { return gram_; }

  /// Complex trace of u-box-v, exact.
  QC box_trace_exact(const QCVec& u, const QCVec& v) const;

  bool is_tripotent(const CVec& e, double tol = 1e-9) const;
  int rank_of(const CVec& e) const;
  bool orthogonal(const CVec& e, const CVec& c, double tol = 1e-9) const;
  /// c <= e iff e - c is a tripotent orthogonal to c.
  bool leq(const CVec& c, const CVec& e, double tol = 1e-9) const;

  /// Peirce bases for eigenvalues 0, 1/2, 1 of e-box-e. Columns are
  /// orthonormal for the canonical inner product.
  struct Peirce {
    CMat z0, z12, z1;
  };
  Peirce peirce(const CVec& e) const;

  /// Standard frame of primitive tripotents (unit coordinate data per type).
  std::vector<CVec> frame() const;
  std::vector<QCVec> frame_exact() const;

  /// Joint Peirce space Z_ij of the given frame, 0 <= i <= j <= r.
  CMat joint_peirce(const std::vector<CVec>& frame, int i, int j) const;

  /// Real form X_1(e): fixed points of z |-> {e z e} inside Z_1(e).
  /// Returns a real orthonormal basis, as columns of complex vectors.
  std::vector<CVec> real_form_x1(const CVec& e) const;

  /// Conjugation map z |-> {e z e} (conjugate linear), as action on vectors.
  CVec q_map(const CVec& e, const CVec& z) const;

  /// A triple automorphism exchanging frame members j and j+1.
  /// Returned as the matrix action on coordinates.
  CMat frame_swap(int j) const;
  QCMat frame_swap_exact(int j) const;

  /// Triple automorphism multiplying frame member j by a unit phase.
  CMat frame_phase(int j, std::complex<double> phase) const;

  /// A set of triple automorphisms with exact rational matrices: frame
  /// transpositions, rational-circle rotations, and Gaussian phases.
  /// They normalize the standard Cartan data and support exact
  /// K-conjugation in tests.
  std::vector<QCMat> exact_k_generators() const;

  /// Inverse of a canonical-inner-product unitary, computed exactly.
  QCMat exact_unitary_inverse(const QCMat& k) const;

  /// Diagonal of e_j box e_j for the standard frame member j (the box
  /// operators of the standard frame are diagonal in this basis).
  RatVec standard_peirce_diagonal(int j) const;

  /// Random element with coefficients ~ N(0,1), seeded.
  CVec random_element(std::uint64_t seed) const;

  CVec from_exact(const QCVec& v) const;
  QCVec basis_vector_exact(int k) const;

 private:
  Jts() = default;
  void build_tensor_from_ambient();
  void finalize();

  Kind kind_;
  int p_ = 0, q_ = 0;  // type parameters (p,q for I; n stored in p_ otherwise)
  int n_ = 0;          // complex dimension
  int rank_ = 0;
  int mult_a_ = 0, mult_b_ = 0;
  std::vector<std::string> labels_;
  RatVec gram_;                  // diagonal canonical Gram, rational
  std::vector<double> gram_d_;   // double mirror
  // triple tensor: T[(i*n+j)*n+k] = {b_i b_j b_k} as coordinate vector
  std::vector<QCVec> tensor_;
  std::vector<CVec> tensor_d_;
  // ambient data used during construction (types I-III: matrices)
  std::vector<QCMat> ambient_;   // ambient realization of each basis vector
  int amb_rows_ = 0, amb_cols_ = 0;
  std::vector<int> frame_idx_;   // basis indices of the standard frame
};

/// Convenience: cached tripotent with Peirce data.
struct Tripotent {
  CVec e;
  int rank = 0;
  Jts::Peirce peirce;
};

Tripotent make_tripotent(const Jts& Z, const CVec& e, double tol = 1e-9);

}  // namespace symcone::jts

#endif
