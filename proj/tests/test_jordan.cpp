#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symcone/jordan.hpp"

using namespace symcone;
using namespace symcone::jordan;

namespace {

std::vector<Eja> algebras() {
  std::vector<Eja> v;
  v.push_back(Eja::sym(2));
  v.push_back(Eja::sym(3));
  v.push_back(Eja::herm(2));
  v.push_back(Eja::spin(3));
  return v;
}

}  // namespace

TEST_CASE("sym(2) products against direct matrix computation") {
  Eja A = Eja::sym(2);
  RMat e11 = RMat::Zero(2, 2), e12 = RMat::Zero(2, 2);
  e11(0, 0) = 1.0;
  e12(0, 1) = 1.0;
  e12(1, 0) = 1.0;
  RVec x = A.from_sym_matrix(e11), y = A.from_sym_matrix(e12);

  CHECK((A.product(x, x) - x).norm() < 1e-14);  // idempotent
  RVec p = A.product(x, y);
  RMat oracle = 0.5 * (e11 * e12 + e12 * e11);
  CHECK((A.to_sym_matrix(p) - oracle).norm() < 1e-14);
  CHECK((A.to_sym_matrix(p) - 0.5 * e12).norm() < 1e-14);

  // unit
  for (std::uint64_t s = 0; s < 10; ++s) {
    RVec r = A.random_element(s);
    CHECK((A.product(A.unit(), r) - r).norm() < 1e-13);
  }
}

TEST_CASE("product is commutative and satisfies the Jordan identity") {
  for (const Eja& A : algebras()) {
    for (std::uint64_t s = 0; s < 40; ++s) {
      RVec x = A.random_element(2 * s), y = A.random_element(2 * s + 1);
      CHECK((A.product(x, y) - A.product(y, x)).norm() < 1e-12);
      RVec x2 = A.product(x, x);
      RVec lhs = A.product(x2, A.product(x, y));
      RVec rhs = A.product(x, A.product(x2, y));
      double scale = std::max(1.0, lhs.norm());
      CHECK((lhs - rhs).norm() / scale < 1e-12);
    }
  }
}

TEST_CASE("formal reality: the trace form is positive definite") {
  for (const Eja& A : algebras()) {
    RMat G(A.dim(), A.dim());
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < A.dim(); ++j)
        G(i, j) = A.trace_form(RVec::Unit(A.dim(), i), RVec::Unit(A.dim(), j));
    Eigen::SelfAdjointEigenSolver<RMat> eig(G);
    CHECK(eig.eigenvalues().minCoeff() > 1e-10);
  }
}

TEST_CASE("canonical inner product: associativity and primitive normalization") {
  for (const Eja& A : algebras()) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      RVec u = A.random_element(3 * s), v = A.random_element(3 * s + 1),
           w = A.random_element(3 * s + 2);
      double lhs = A.inner(A.product(u, v), w);
      double rhs = A.inner(v, A.product(u, w));
      CHECK(std::fabs(lhs - rhs) < 1e-10 * std::max(1.0, std::fabs(lhs)));
    }
    // primitive idempotents from spectral decompositions have norm 1
    RVec x = A.random_element(99);
    for (const auto& t : A.spectral(x)) {
      if (A.idempotent_rank(t.idem) == 1)
        CHECK(std::fabs(A.inner(t.idem, t.idem) - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("spectral decomposition of diag(3,-1) in sym(2)") {
  Eja A = Eja::sym(2);
  RMat d = RMat::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  auto terms = A.spectral(A.from_sym_matrix(d));
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].lambda == doctest::Approx(-1.0));
  CHECK(terms[1].lambda == doctest::Approx(3.0));
  RMat c1 = A.to_sym_matrix(terms[1].idem);
  CHECK(c1(0, 0) == doctest::Approx(1.0));
  CHECK(std::fabs(c1(1, 1)) < 1e-12);

  // unit collapses to a single grouped term
  auto unit_terms = A.spectral(A.unit());
  REQUIRE(unit_terms.size() == 1);
  CHECK(unit_terms[0].lambda == doctest::Approx(1.0));
  CHECK((unit_terms[0].idem - A.unit()).norm() < 1e-12);

  CHECK(A.spectral(RVec::Zero(A.dim())).empty());
}

TEST_CASE("spectral reconstruction on every kind") {
  for (const Eja& A : algebras()) {
    for (std::uint64_t s = 0; s < 25; ++s) {
      RVec x = A.random_element(1000 + s);
      auto terms = A.spectral(x);
      RVec back = RVec::Zero(A.dim());
      for (const auto& t : terms) {
        back += t.lambda * t.idem;
        CHECK(A.is_idempotent(t.idem, 1e-7));
      }
      CHECK((back - x).norm() < 1e-8 * std::max(1.0, x.norm()));
      for (std::size_t a = 0; a < terms.size(); ++a)
        for (std::size_t b = a + 1; b < terms.size(); ++b)
          CHECK(A.product(terms[a].idem, terms[b].idem).norm() < 1e-7);
    }
  }
}

TEST_CASE("cone membership classification") {
  Eja A = Eja::sym(2);
  CHECK(A.cone_membership(A.unit()).where == Membership::Interior);

  RMat e11 = RMat::Zero(2, 2);
  e11(0, 0) = 1.0;
  auto r = A.cone_membership(A.from_sym_matrix(e11));
  CHECK(r.where == Membership::Boundary);
  CHECK(r.rank == 1);

  RMat ind = RMat::Zero(2, 2);
  ind(0, 0) = 1.0;
  ind(1, 1) = -1.0;
  CHECK(A.cone_membership(A.from_sym_matrix(ind)).where == Membership::Outside);

  // squares land in the closed cone
  for (const Eja& B : algebras()) {
    for (std::uint64_t s = 0; s < 100; ++s) {
      RVec x = B.random_element(555 + s);
      auto m = B.cone_membership(B.product(x, x));
      CHECK(m.where != Membership::Outside);
    }
  }
}

TEST_CASE("Peirce decomposition in sym(2)") {
  Eja A = Eja::sym(2);
  RMat e11 = RMat::Zero(2, 2);
  e11(0, 0) = 1.0;
  auto P = A.peirce(A.from_sym_matrix(e11));
  CHECK(P.x0.cols() == 1);
  CHECK(P.x12.cols() == 1);
  CHECK(P.x1.cols() == 1);
  RMat m0 = A.to_sym_matrix(P.x0.col(0));
  CHECK(std::fabs(m0(1, 1)) == doctest::Approx(1.0));  // X_0 = span{E22}

  auto Pe = A.peirce(A.unit());
  CHECK(Pe.x1.cols() == A.dim());
  CHECK(Pe.x0.cols() == 0);
  auto P0 = A.peirce(RVec::Zero(A.dim()));
  CHECK(P0.x0.cols() == A.dim());

  CHECK_THROWS_AS(A.peirce(2.0 * A.unit()), EjaErr);
}

TEST_CASE("Peirce spaces are trace-form orthogonal and obey X1 o X0 = 0") {
  for (const Eja& A : algebras()) {
    RVec x = A.random_element(31);
    auto terms = A.spectral(x);
    if (terms.empty()) continue;
    RVec c = terms.back().idem;
    auto P = A.peirce(c);
    for (int a = 0; a < P.x1.cols(); ++a)
      for (int b = 0; b < P.x0.cols(); ++b) {
        CHECK(A.product(P.x1.col(a), P.x0.col(b)).norm() < 1e-9);
        CHECK(std::fabs(A.trace_form(P.x1.col(a), P.x0.col(b))) < 1e-10);
        if (P.x12.cols() > 0) {
          CHECK(std::fabs(A.trace_form(P.x1.col(a), P.x12.col(0))) < 1e-10);
          CHECK(std::fabs(A.trace_form(P.x0.col(b), P.x12.col(0))) < 1e-10);
        }
      }
  }
}

TEST_CASE("cone faces: exposing functional and dual face") {
  Eja A = Eja::sym(2);
  RMat e11m = RMat::Zero(2, 2);
  e11m(0, 0) = 1.0;
  RVec c = A.from_sym_matrix(e11m);
  auto F = A.cone_face(c);
  CHECK(F.rank == 1);
  RMat dual = A.to_sym_matrix(F.dual_idem);
  CHECK(dual(1, 1) == doctest::Approx(1.0));
  CHECK(std::fabs(dual(0, 0)) < 1e-12);

  // Brute force over the PSD slice: psd matrices orthogonal to c are
  // exactly the nonnegative multiples of E22.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int t = 0; t < 200; ++t) {
    RMat m(2, 2);
    m(0, 0) = unif(rng);
    m(1, 1) = unif(rng);
    m(0, 1) = m(1, 0) = unif(rng);
    RVec x = A.from_sym_matrix(m);
    bool in_cone = A.cone_membership(x).where != Membership::Outside;
    bool on_face = in_cone && std::fabs(A.inner(x, c)) < 1e-9;
    if (on_face) {
      CHECK(std::fabs(m(0, 0)) < 1e-8);
      CHECK(std::fabs(m(0, 1)) < 1e-8);
      CHECK(m(1, 1) > -1e-9);
    }
  }

  auto Fzero = A.cone_face(RVec::Zero(A.dim()));
  CHECK(Fzero.x0_basis.cols() == A.dim());  // whole cone
  auto Ffull = A.cone_face(A.unit());
  CHECK(Ffull.x0_basis.cols() == 0);  // face {0}
}

TEST_CASE("face of the cone equals squares of X_0(c), by sampling") {
  Eja A = Eja::sym(3);
  RVec x = A.random_element(77);
  auto terms = A.spectral(x);
  RVec c = terms.front().idem;
  auto P = A.peirce(c);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    RVec y = RVec::Zero(A.dim());
    for (int b = 0; b < P.x0.cols(); ++b) y += unif(rng) * P.x0.col(b);
    RVec sq = A.product(y, y);
    CHECK(A.cone_membership(sq).where != Membership::Outside);
    CHECK(std::fabs(A.inner(sq, c)) < 1e-9);
  }
}

TEST_CASE("derived algebra from a triple real form behaves like Herm(2)") {
  jts::Jts Z = jts::Jts::type_i(2, 2);
  jts::CVec emax = jts::CVec::Zero(4);
  emax[0] = 1.0;
  emax[3] = 1.0;
  Eja A = Eja::from_jts_real_form(Z, emax);
  CHECK(A.dim() == 4);
  CHECK(A.rank() == 2);
  CHECK((A.product(A.unit(), A.unit()) - A.unit()).norm() < 1e-10);

  for (std::uint64_t s = 0; s < 25; ++s) {
    RVec x = A.random_element(313 + s);
    auto terms = A.spectral(x);
    RVec back = RVec::Zero(A.dim());
    for (const auto& t : terms) back += t.lambda * t.idem;
    CHECK((back - x).norm() < 1e-7 * std::max(1.0, x.norm()));
    CHECK(terms.size() <= 2);
    CHECK(A.cone_membership(A.product(x, x)).where != Membership::Outside);
  }

  // spin real form out of type IV
  jts::Jts Z4 = jts::Jts::type_iv(4);
  auto f = Z4.frame();
  Eja S = Eja::from_jts_real_form(Z4, f[0] + f[1]);
  CHECK(S.dim() == 4);
  CHECK(S.rank() == 2);
  RVec y = S.random_element(5);
  auto terms = S.spectral(y);
  RVec back = RVec::Zero(S.dim());
  for (const auto& t : terms) back += t.lambda * t.idem;
  CHECK((back - y).norm() < 1e-8 * std::max(1.0, y.norm()));
}

TEST_CASE("round trip between Z and real-form coordinates") {
  jts::Jts Z = jts::Jts::type_i(2, 2);
  jts::CVec emax = jts::CVec::Zero(4);
  emax[0] = 1.0;
  emax[3] = 1.0;
  Eja A = Eja::from_jts_real_form(Z, emax);
  RVec x = A.random_element(21);
  CHECK((A.from_z(A.to_z(x)) - x).norm() < 1e-12);
}

TEST_CASE("dimension mismatch raises") {
  Eja A = Eja::sym(2);
  RVec bad = RVec::Zero(2);
  CHECK_THROWS_AS(A.product(bad, A.unit()), EjaErr);
}
