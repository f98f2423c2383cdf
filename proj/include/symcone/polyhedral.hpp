#ifndef SYMCONE_POLYHEDRAL_HPP
#define SYMCONE_POLYHEDRAL_HPP

#include <Eigen/Dense>

#include <vector>

#include "symcone/qnum.hpp"

namespace symcone::poly {

struct PolyErr : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Where { Interior, Boundary, Outside };

/// Convex polyhedral cone over the rationals, carrying both a generator
/// description and an irredundant inequality description. Conversions run
/// the Motzkin double-description method in exact arithmetic; rays are kept
/// as primitive integer vectors.
class PolyhedralCone {
 public:
  static PolyhedralCone from_generators(std::vector<RatVec> gens, int dim);
  static PolyhedralCone from_inequalities(std::vector<RatVec> ineqs, int dim);

  int ambient_dim() const { return dim_; }
  /// Extreme rays when the cone is pointed.
  const std::vector<RatVec>& generators() const { return gens_; }
  const std::vector<RatVec>& inequalities() const { return ineqs_; }
  bool pointed() const { return pointed_; }
  bool solid() const { return solid_; }
  int dim_of_span() const { return span_dim_; }

  Where membership(const RatVec& x) const;
  Where membership(const Eigen::VectorXd& x, double tol = 1e-10) const;

  /// this cone contains every generator of the other
  bool contains(const PolyhedralCone& other) const;
  bool equals(const PolyhedralCone& other) const;

  PolyhedralCone dual() const;

  struct Face {
    std::vector<int> tight;    // indices of tight inequalities
    std::vector<int> gen_idx;  // generators spanning the face
    int dim = 0;
  };
  /// Full face lattice of a pointed cone, by exhaustive tight-set search.
  std::vector<Face> faces() const;

  /// Intersection with a rational linear subspace (columns span it).
  PolyhedralCone intersect_subspace(const std::vector<RatVec>& span_basis) const;

 private:
  PolyhedralCone() = default;
  void compute_flags();

  int dim_ = 0;
  bool pointed_ = true, solid_ = true;
  int span_dim_ = 0;
  std::vector<RatVec> gens_;
  std::vector<RatVec> ineqs_;
};

/// Primitive integer representative of a rational ray (sign preserved).
RatVec canonical_ray(const RatVec& v);

}  // namespace symcone::poly

#endif
