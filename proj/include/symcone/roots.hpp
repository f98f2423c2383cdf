#ifndef SYMCONE_ROOTS_HPP
#define SYMCONE_ROOTS_HPP

#include <optional>

#include "symcone/lie.hpp"
#include "symcone/polyhedral.hpp"

namespace symcone::roots {

using lie::LieAlgebraG;
using lie::RMat;
using lie::RVec;

struct RootErr : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Compact Cartan subalgebra adapted to the standard frame:
/// t = span{i e_j box e_j} + (annihilator part inside k).
struct CompactCartan {
  std::vector<RatVec> basis;  // exact coordinate vectors in g
  int dim_minus = 0;          // leading basis vectors are i e_j box e_j
  RMat basis_d;               // columns
  RatMat killing_restricted;  // B restricted to t (negative definite)
  RatMat inner_restricted;    // <.,.> restricted to t
  RMat projector;             // orthogonal projection of g onto t
  RatVec h0_coords;           // h0 in t coordinates, exact

  int dim() const { return static_cast<int>(basis.size()); }
  RVec lift(const RVec& t_coords) const { return basis_d * t_coords; }
};

CompactCartan cartan_from_frame(const LieAlgebraG& g);

struct Root {
  RatVec lambda;  // the real functional -i alpha, by values on the t basis
  bool compact = false;
  bool positive = false;
  RatVec coroot;  // iH_alpha in t coordinates
  Eigen::VectorXcd root_vector;  // complexified g coordinates
};

struct RootSystemData {
  CompactCartan t;
  std::vector<Root> roots;
  std::vector<int> gamma;  // indices of gamma_1..gamma_r

  std::vector<int> noncompact_positive() const;
  bool is_root(const RatVec& lambda) const;
};

RootSystemData root_decomposition(const LieAlgebraG& g);

struct OmegaCones {
  poly::PolyhedralCone minus;  // cone<iH_alpha>
  poly::PolyhedralCone plus;   // {-i alpha >= 0}
};

OmegaCones omega_cones(const RootSystemData& rsd);

poly::Where omega_membership(const poly::PolyhedralCone& cone, const RVec& H,
                             double tol = 1e-10);

/// Nonnegative combination of sampled minimal-orbit elements reproducing xi.
struct Certificate {
  std::vector<double> weights;
  std::vector<RVec> atoms;
  double residual = 0;
};

std::optional<Certificate> certify_in_minimal(const LieAlgebraG& g,
                                              const RVec& xi, int budget,
                                              std::uint64_t seed);

/// Element of the minimal cone pairing negatively against xi; witnesses
/// xi outside the maximal cone.
struct Witness {
  RVec eta;
  double pairing = 0;
};

std::optional<Witness> refute_in_maximal(const LieAlgebraG& g, const RVec& xi,
                                         int budget, std::uint64_t seed);

/// Nonnegative least squares, Lawson-Hanson. Returns x >= 0 minimizing
/// |A x - b|.
Eigen::VectorXd nnls(const RMat& A, const RVec& b, int max_iter = 0);

}  // namespace symcone::roots

#endif
