#ifndef SYMCONE_FACES_HPP
#define SYMCONE_FACES_HPP

#include <map>
#include <tuple>

#include "symcone/jordan.hpp"
#include "symcone/roots.hpp"

namespace symcone::faces {

using jts::CVec;
using lie::LieAlgebraG;
using lie::RMat;
using lie::RVec;

struct FaceErr : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Face data for F_{e,c}: the subalgebra g_F = g_0(e) x| h^{e,c} with
/// h^{e,c} = {eta_u^e : u in Z_1/2(e) cap Z_1/2(c)} + g^c[2], the stratum
/// label (rk e, rk c), and the exposing normal -X_e^- - X_c^-.
struct FaceDescriptor {
  CVec e, c;
  int k = 0, l = 0;
  RMat s_basis;      // g_0(e)
  RMat n_eta_basis;  // eta part of the nilradical
  RMat z_basis;      // g^c[2] = centre
  RMat gf_basis;     // all of g_F, orthonormal columns
  RVec exposing_normal;
};

struct StratumLabel {
  int k = 0, l = 0;
  bool operator==(const StratumLabel& o) const { return k == o.k && l == o.l; }
  bool operator<(const StratumLabel& o) const {
    return k != o.k ? k < o.k : l < o.l;
  }
};

struct StratumResult {
  bool classified = false;
  StratumLabel label;
};

/// Exact interior sample of a face class, carrying its construction.
struct InteriorSample {
  RatVec xi;
  StratumLabel label;
  RatVec semisimple_part, nilpotent_part;  // conjugated witness split
};

/// Rank sequence of powers of ad X plus the centralizer dimension;
/// constant on adjoint orbits.
struct OrbitFingerprint {
  std::vector<int> rank_seq;  // rank (ad X)^j, j = 1..5
  int centralizer_dim = 0;
  bool operator==(const OrbitFingerprint& o) const {
    return rank_seq == o.rank_seq && centralizer_dim == o.centralizer_dim;
  }
  bool operator<(const OrbitFingerprint& o) const {
    return std::tie(rank_seq, centralizer_dim) <
           std::tie(o.rank_seq, o.centralizer_dim);
  }
};

struct NilpotentOrbitDatum {
  int rank = 0;
  RatVec representative;  // X^+ of the standard partial sum
  OrbitFingerprint fingerprint;
};

struct ExposednessReport {
  int total = 0;
  int sign_violations = 0;
  int kernel_hits = 0;
  int span_violations = 0;
};

struct AuditEntry {
  std::vector<int> face_gens;       // generator indices of the slice face
  std::vector<std::string> labels;  // adapted primitives spanning the match
  bool matched = false;
};

struct AuditReport {
  int total_faces = 0;
  int matched = 0;
  std::vector<AuditEntry> entries;
  bool complete() const { return matched == total_faces; }
};

/// Face catalogue of the minimal invariant cone for one algebra. Builds the
/// root data once and precomputes the per-class classifier table.
class FaceCatalogue {
 public:
  explicit FaceCatalogue(const LieAlgebraG& g);

  const LieAlgebraG& g() const { return g_; }
  const roots::RootSystemData& root_data() const { return rsd_; }
  const roots::OmegaCones& omega() const { return omega_; }
  int rank() const { return g_.Z().rank(); }

  FaceDescriptor general_face(const CVec& e, const CVec& c) const;
  /// The nilpotent face Omega_1(e), presented as F_{e', e} for the standard
  /// completion e' >= e of maximal rank.
  FaceDescriptor nilpotent_face(const CVec& e) const;

  /// Standard representative pair for a class label.
  std::pair<CVec, CVec> class_representative(StratumLabel lbl) const;

  InteriorSample face_interior_sample(StratumLabel lbl,
                                      std::uint64_t seed) const;

  ExposednessReport exposedness_check(const FaceDescriptor& fd,
                                      const std::vector<RVec>& omega_samples,
                                      double sign_tol = 1e-9,
                                      double span_tol = 1e-7) const;

  NilpotentOrbitDatum nilpotent_orbit(int k) const;
  OrbitFingerprint fingerprint_nilpotent(const RatVec& x) const;
  /// (centralizer dim, eigenvalue multiplicity signature) of the
  /// semisimple part; the signature is the nullity list of ad restricted
  /// to the derived filtration captured by exact ranks.
  std::vector<int> fingerprint_semisimple(const RatVec& s) const;

  StratumResult stratum_of(const RatVec& xi, bool certified) const;

  std::vector<std::pair<StratumLabel, FaceDescriptor>> enumerate_face_classes()
      const;

  AuditReport cartan_slice_face_audit() const;

  /// Known Omega^- points: random convex combinations of minimal-orbit
  /// atoms plus face-interior samples (certificates by construction).
  std::vector<RVec> certified_samples(int count, std::uint64_t seed) const;

  /// Exact triple-automorphism adjoint matrices, random words in the
  /// rational generator set.
  RatMat exact_k_word(std::uint64_t seed, int length = 3) const;

  /// Tripotents e' with i(e' box e') inside t, with display labels.
  const std::vector<std::pair<QCVec, std::string>>& adapted_primitives() const {
    return adapted_;
  }

 private:
  CVec partial_sum(int k) const;
  QCVec partial_sum_exact(int k) const;
  void build_adapted_primitives();
  void build_classifier_table();

  const LieAlgebraG& g_;
  roots::RootSystemData rsd_;
  roots::OmegaCones omega_;
  std::vector<RatMat> kgen_ad_;  // Ad of the exact automorphism generators
  std::vector<std::pair<QCVec, std::string>> adapted_;
  std::map<StratumLabel, std::pair<std::vector<int>, OrbitFingerprint>> table_;
};

}  // namespace symcone::faces

#endif
