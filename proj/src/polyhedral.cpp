#include "symcone/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace symcone::poly {

namespace {

using BigInt = boost::multiprecision::mpz_int;

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s(0);
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

RatMat rows_to_mat(const std::vector<RatVec>& rows, int dim) {
  RatMat M(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < dim; ++j) M(i, j) = rows[i][j];
  return M;
}

// Orthogonal-complement style basis of {x : rows . x = 0}.
std::vector<RatVec> kernel_of_rows(const std::vector<RatVec>& rows, int dim) {
  if (rows.empty()) {
    std::vector<RatVec> full;
    for (int k = 0; k < dim; ++k) {
      RatVec e(dim, Rat(0));
      e[k] = 1;
      full.push_back(e);
    }
    return full;
  }
  return rows_to_mat(rows, dim).nullspace();
}

struct Ray {
  RatVec v;
  std::vector<bool> tight;  // per processed inequality
};

// Motzkin double description for a pointed cone {x : ineqs . x >= 0} given
// in coordinates where the inequality matrix has full column rank.
std::vector<RatVec> dd_pointed(const std::vector<RatVec>& ineqs, int dim) {
  const int m = static_cast<int>(ineqs.size());
  // initial simplicial subcone from dim independent inequalities
  RatMat A = rows_to_mat(ineqs, dim);
  std::vector<int> chosen;
  {
    RatMat probe(0, 0);
    std::vector<RatVec> sel;
    for (int i = 0; i < m && static_cast<int>(chosen.size()) < dim; ++i) {
      sel.push_back(ineqs[i]);
      if (rows_to_mat(sel, dim).rank() == sel.size())
        chosen.push_back(i);
      else
        sel.pop_back();
    }
    if (static_cast<int>(chosen.size()) != dim)
      throw PolyErr("double description: cone is not pointed");
  }
  RatMat S(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) S(r, c) = ineqs[chosen[r]][c];
  auto Sinv = S.inverse();
  if (!Sinv) throw PolyErr("double description: singular start");
  std::vector<Ray> rays;
  for (int c = 0; c < dim; ++c) {
    Ray r;
    r.v = RatVec(dim);
    for (int k = 0; k < dim; ++k) r.v[k] = (*Sinv)(k, c);
    r.v = canonical_ray(r.v);
    rays.push_back(std::move(r));
  }
  std::vector<int> processed = chosen;
  auto recompute_tight = [&](Ray& r) {
    r.tight.assign(processed.size(), false);
    for (std::size_t i = 0; i < processed.size(); ++i)
      r.tight[i] = (dot(ineqs[processed[i]], r.v) == 0);
  };
  for (auto& r : rays) recompute_tight(r);

  auto adjacent = [&](const Ray& a, const Ray& b) {
    std::vector<RatVec> common;
    for (std::size_t i = 0; i < processed.size(); ++i)
      if (a.tight[i] && b.tight[i]) common.push_back(ineqs[processed[i]]);
    if (static_cast<int>(common.size()) < dim - 2) return false;
    return rows_to_mat(common, dim).rank() == static_cast<std::size_t>(dim - 2);
  };

  std::set<int> done(chosen.begin(), chosen.end());
  for (int i = 0; i < m; ++i) {
    if (done.count(i)) continue;
    const RatVec& a = ineqs[i];
    std::vector<Ray> pos, zero, neg;
    for (auto& r : rays) {
      Rat d = dot(a, r.v);
      if (d > 0)
        pos.push_back(r);
      else if (d == 0)
        zero.push_back(r);
      else
        neg.push_back(r);
    }
    if (neg.empty()) {
      processed.push_back(i);
      done.insert(i);
      for (auto& r : rays) recompute_tight(r);
      continue;
    }
    std::vector<Ray> next = pos;
    for (auto& z : zero) next.push_back(z);
    for (const auto& p : pos)
      for (const auto& n : neg) {
        if (!adjacent(p, n)) continue;
        Ray r;
        Rat dp = dot(a, p.v), dn = dot(a, n.v);
        r.v = RatVec(dim);
        for (int k = 0; k < dim; ++k) r.v[k] = dp * n.v[k] - dn * p.v[k];
        r.v = canonical_ray(r.v);
        next.push_back(std::move(r));
      }
    processed.push_back(i);
    done.insert(i);
    rays = std::move(next);
    for (auto& r : rays) recompute_tight(r);
  }
  // dedupe
  std::set<RatVec> seen;
  std::vector<RatVec> out;
  for (auto& r : rays)
    if (seen.insert(r.v).second) out.push_back(r.v);
  return out;
}

// General double description returning extreme rays of C/lineality plus the
// lineality basis.
std::pair<std::vector<RatVec>, std::vector<RatVec>> dd(
    const std::vector<RatVec>& ineqs, int dim) {
  std::vector<RatVec> lin = kernel_of_rows(ineqs, dim);
  if (lin.empty()) return {dd_pointed(ineqs, dim), lin};
  // restrict to a complement of the lineality: x = U c
  std::vector<RatVec> U = kernel_of_rows(lin, dim);  // complement coordinates
  const int d2 = static_cast<int>(U.size());
  std::vector<RatVec> restricted;
  for (const auto& a : ineqs) {
    RatVec row(d2, Rat(0));
    for (int c = 0; c < d2; ++c) row[c] = dot(a, U[c]);
    restricted.push_back(std::move(row));
  }
  std::vector<RatVec> rays2 = d2 > 0 ? dd_pointed(restricted, d2)
                                     : std::vector<RatVec>{};
  std::vector<RatVec> rays;
  for (const auto& c : rays2) {
    RatVec x(dim, Rat(0));
    for (int k = 0; k < d2; ++k)
      for (int j = 0; j < dim; ++j) x[j] += c[k] * U[k][j];
    rays.push_back(canonical_ray(x));
  }
  return {rays, lin};
}

}  // namespace

RatVec canonical_ray(const RatVec& v) {
  BigInt lcm = 1;
  for (const auto& x : v)
    lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(x)));
  std::vector<BigInt> ints(v.size());
  BigInt g = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    ints[k] = BigInt(numerator(v[k])) * (lcm / BigInt(denominator(v[k])));
    g = boost::multiprecision::gcd(g, abs(ints[k]));
  }
  RatVec out(v.size(), Rat(0));
  if (g == 0) return out;
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = Rat(ints[k] / g);
  return out;
}

PolyhedralCone PolyhedralCone::from_generators(std::vector<RatVec> gens,
                                               int dim) {
  PolyhedralCone C;
  C.dim_ = dim;
  // H-description: rays of the dual plus span equalities
  auto [dual_rays, dual_lin] = dd(gens, dim);
  for (auto& r : dual_rays) C.ineqs_.push_back(r);
  for (auto& l : dual_lin) {
    RatVec neg(dim);
    for (int k = 0; k < dim; ++k) neg[k] = -l[k];
    C.ineqs_.push_back(canonical_ray(l));
    C.ineqs_.push_back(canonical_ray(neg));
  }
  // canonical minimal generators: double description back
  auto [rays, lin] = dd(C.ineqs_, dim);
  if (!lin.empty()) throw PolyErr("from_generators: cone has a line");
  C.gens_ = rays;
  C.compute_flags();
  // cross-check: the input generators must satisfy every inequality
  for (const auto& g : gens)
    for (const auto& a : C.ineqs_)
      if (dot(a, g) < 0) throw PolyErr("double description cross-check failed");
  return C;
}

PolyhedralCone PolyhedralCone::from_inequalities(std::vector<RatVec> ineqs,
                                                 int dim) {
  PolyhedralCone C;
  C.dim_ = dim;
  auto [rays, lin] = dd(ineqs, dim);
  if (!lin.empty())
    throw PolyErr("from_inequalities: cone is not pointed");
  C.gens_ = rays;
  // irredundant inequalities: dualize the generator description
  auto [facets, flin] = dd(C.gens_, dim);
  C.ineqs_ = facets;
  for (auto& l : flin) {
    RatVec neg(dim);
    for (int k = 0; k < dim; ++k) neg[k] = -l[k];
    C.ineqs_.push_back(canonical_ray(l));
    C.ineqs_.push_back(canonical_ray(neg));
  }
  C.compute_flags();
  for (const auto& g : C.gens_)
    for (const auto& a : ineqs)
      if (dot(a, g) < 0) throw PolyErr("double description cross-check failed");
  return C;
}

void PolyhedralCone::compute_flags() {
  span_dim_ = gens_.empty()
                  ? 0
                  : static_cast<int>(rows_to_mat(gens_, dim_).rank());
  solid_ = (span_dim_ == dim_);
  pointed_ = true;  // construction rejects lines
}

Where PolyhedralCone::membership(const RatVec& x) const {
  bool boundary = false;
  for (const auto& a : ineqs_) {
    Rat d = dot(a, x);
    if (d < 0) return Where::Outside;
    if (d == 0) boundary = true;
  }
  if (!solid_) {
    // no ambient interior; interior-relative classification not attempted
    return boundary ? Where::Boundary : Where::Boundary;
  }
  return boundary ? Where::Boundary : Where::Interior;
}

Where PolyhedralCone::membership(const Eigen::VectorXd& x, double tol) const {
  bool boundary = false;
  double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  for (const auto& a : ineqs_) {
    double d = 0;
    double an = 0;
    for (int k = 0; k < dim_; ++k) {
      d += to_double(a[k]) * x[k];
      an += std::fabs(to_double(a[k]));
    }
    double cut = tol * std::max(1.0, an * scale);
    if (d < -cut) return Where::Outside;
    if (d <= cut) boundary = true;
  }
  if (!solid_) return Where::Boundary;
  return boundary ? Where::Boundary : Where::Interior;
}

bool PolyhedralCone::contains(const PolyhedralCone& other) const {
  for (const auto& g : other.gens_)
    for (const auto& a : ineqs_)
      if (dot(a, g) < 0) return false;
  return true;
}

bool PolyhedralCone::equals(const PolyhedralCone& other) const {
  return contains(other) && other.contains(*this);
}

PolyhedralCone PolyhedralCone::dual() const {
  return from_inequalities(gens_, dim_);
}

std::vector<PolyhedralCone::Face> PolyhedralCone::faces() const {
  if (!pointed_) throw PolyErr("faces: pointed cone required");
  const int m = static_cast<int>(ineqs_.size());
  // map generator sets to faces, breadth-first over tight sets
  std::map<std::vector<int>, Face> found;
  auto gens_of = [&](const std::vector<int>& tight) {
    std::vector<int> gi;
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      bool ok = true;
      for (int i : tight)
        if (dot(ineqs_[i], gens_[j]) != 0) {
          ok = false;
          break;
        }
      if (ok) gi.push_back(static_cast<int>(j));
    }
    return gi;
  };
  auto face_dim = [&](const std::vector<int>& gi) {
    if (gi.empty()) return 0;
    std::vector<RatVec> rows;
    for (int j : gi) rows.push_back(gens_[j]);
    return static_cast<int>(rows_to_mat(rows, dim_).rank());
  };
  std::vector<std::vector<int>> queue;
  queue.push_back({});
  while (!queue.empty()) {
    std::vector<int> tight = queue.back();
    queue.pop_back();
    auto gi = gens_of(tight);
    if (found.count(gi)) continue;
    Face f;
    f.tight = tight;
    f.gen_idx = gi;
    f.dim = face_dim(gi);
    found.emplace(gi, f);
    for (int i = 0; i < m; ++i) {
      if (std::find(tight.begin(), tight.end(), i) != tight.end()) continue;
      auto next = tight;
      next.push_back(i);
      std::sort(next.begin(), next.end());
      queue.push_back(next);
    }
  }
  std::vector<Face> out;
  for (auto& [gi, f] : found) out.push_back(f);
  std::sort(out.begin(), out.end(),
            [](const Face& a, const Face& b) { return a.dim < b.dim; });
  return out;
}

PolyhedralCone PolyhedralCone::intersect_subspace(
    const std::vector<RatVec>& span_raw) const {
  // independent spanning subset first
  std::vector<RatVec> span_basis;
  for (const auto& v : span_raw) {
    span_basis.push_back(v);
    if (rows_to_mat(span_basis, dim_).rank() != span_basis.size())
      span_basis.pop_back();
  }
  // inequalities restricted to the subspace coordinates, then lifted back
  const int d2 = static_cast<int>(span_basis.size());
  std::vector<RatVec> restricted;
  for (const auto& a : ineqs_) {
    RatVec row(d2, Rat(0));
    for (int c = 0; c < d2; ++c) row[c] = dot(a, span_basis[c]);
    restricted.push_back(std::move(row));
  }
  auto [rays2, lin] = dd(restricted, d2);
  if (!lin.empty()) throw PolyErr("intersect_subspace: line in section");
  std::vector<RatVec> lifted;
  for (const auto& c : rays2) {
    RatVec x(dim_, Rat(0));
    for (int k = 0; k < d2; ++k)
      for (int j = 0; j < dim_; ++j) x[j] += c[k] * span_basis[k][j];
    lifted.push_back(canonical_ray(x));
  }
  return from_generators(lifted, dim_);
}

}  // namespace symcone::poly
