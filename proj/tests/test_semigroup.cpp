#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "symcone/semigroup.hpp"

using namespace symcone;
using namespace symcone::semigroup;
using jts::Jts;

namespace {

struct Fixture {
  lie::LieAlgebraG g;
  MatrixRealization mr;
  explicit Fixture(Jts Z) : g(std::move(Z)), mr(g) {}
};

RVec interior_cone_point(const lie::LieAlgebraG& g, std::uint64_t seed) {
  // random convex combination of minimal-orbit atoms around h0: interior
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  RVec xi = g.h0();
  auto frame = g.Z().frame();
  for (int s = 0; s < 4; ++s) {
    jts::CMat k = g.sample_k(seed * 13 + s);
    xi += 0.3 * unif(rng) * g.x_plus(k * frame[s % frame.size()]);
  }
  return xi;
}

}  // namespace

TEST_CASE("embedding lands in su(p,q) and is a homomorphism") {
  for (auto Zk : {Jts::type_i(1, 1), Jts::type_i(2, 2), Jts::type_i(2, 3)}) {
    Fixture fx(std::move(Zk));
    const int N = fx.mr.size();
    std::mt19937_64 rng(7);
    std::normal_distribution<double> d(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      RVec x(fx.g.dim()), y(fx.g.dim());
      for (int i = 0; i < fx.g.dim(); ++i) {
        x[i] = d(rng);
        y[i] = d(rng);
      }
      jts::CMat mx = fx.mr.embed(x), my = fx.mr.embed(y);
      // su(p,q): m^* J + J m = 0, traceless
      CHECK((mx.adjoint() * fx.mr.J() + fx.mr.J() * mx).norm() < 1e-9);
      CHECK(std::abs(mx.trace()) < 1e-9);
      // homomorphism
      jts::CMat lhs = fx.mr.embed(fx.g.bracket(x, y));
      CHECK((lhs - (mx * my - my * mx)).norm() <
            1e-9 * std::max(1.0, lhs.norm()));
      // pullback inverts
      CHECK((fx.mr.pullback(mx) - x).norm() < 1e-8 * std::max(1.0, x.norm()));
    }
    // image spans su(p,q): dimension check
    CHECK(fx.g.dim() == N * N - 1);
  }
}

TEST_CASE("embedding of h0 and the theta relation") {
  Fixture fx(Jts::type_i(2, 2));
  jts::CMat H = fx.mr.embed(fx.g.h0());
  // (i/2) diag(1,1,-1,-1)
  jts::CMat expect = jts::CMat::Zero(4, 4);
  expect(0, 0) = expect(1, 1) = std::complex<double>(0, 0.5);
  expect(2, 2) = expect(3, 3) = std::complex<double>(0, -0.5);
  CHECK((H - expect).norm() < 1e-12);

  // iota(theta xi) = -iota(xi)^* (conjugate transpose)
  std::mt19937_64 rng(3);
  std::normal_distribution<double> d(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    RVec x(fx.g.dim());
    for (int i = 0; i < fx.g.dim(); ++i) x[i] = d(rng);
    jts::CMat a = fx.mr.embed(fx.g.theta(x));
    jts::CMat b = -fx.mr.embed(x).adjoint();
    CHECK((a - b).norm() < 1e-9);
  }
}

TEST_CASE("group elements decompose with zero cone part") {
  Fixture fx(Jts::type_i(2, 2));
  // J-unitary from the compact part
  RVec kvec = RVec::Zero(fx.g.dim());
  std::mt19937_64 rng(17);
  std::normal_distribution<double> d(0.0, 0.5);
  for (int i = 0; i < fx.g.dim_k(); ++i) kvec[i] = d(rng);
  jts::CMat u = fx.mr.exp_g(kvec);
  auto dec = fx.mr.decompose(u);
  CHECK(fx.g.norm(dec.xi) < 1e-9);
  CHECK((dec.g_part - u).norm() < 1e-8);

  // identity
  auto did = fx.mr.decompose(jts::CMat::Identity(4, 4));
  CHECK(fx.g.norm(did.xi) < 1e-12);
}

TEST_CASE("round trip on interior points") {
  for (auto Zk : {Jts::type_i(1, 1), Jts::type_i(2, 2)}) {
    Fixture fx(std::move(Zk));
    for (std::uint64_t s = 0; s < 100; ++s) {
      RVec xi = interior_cone_point(fx.g, 500 + s);
      RVec gv = RVec::Zero(fx.g.dim());
      std::mt19937_64 rng(900 + s);
      std::normal_distribution<double> d(0.0, 0.4);
      for (int i = 0; i < fx.g.dim(); ++i) gv[i] = d(rng);
      jts::CMat gel = fx.mr.exp_g(gv);
      jts::CMat gamma = fx.mr.semigroup_exp(gel, xi);
      auto dec = fx.mr.decompose(gamma);
      CHECK(dec.residual < 1e-8);
      CHECK(fx.g.norm(dec.xi - xi) < 1e-7 * std::max(1.0, fx.g.norm(xi)));
      CHECK((dec.g_part - gel).norm() < 1e-7 * std::max(1.0, gel.norm()));
    }
  }
}

TEST_CASE("uniqueness of the factorization") {
  Fixture fx(Jts::type_i(2, 2));
  RVec xi = interior_cone_point(fx.g, 77);
  jts::CMat gamma = fx.mr.semigroup_exp(fx.mr.exp_g(RVec::Zero(fx.g.dim())), xi);
  auto d1 = fx.mr.decompose(gamma);
  auto d2 = fx.mr.decompose(gamma);
  CHECK(fx.g.norm(d1.xi - d2.xi) < 1e-12);
  // perturbed reconstruction agrees
  jts::CMat arg = std::complex<double>(0, 1) * fx.mr.embed(d1.xi);
  jts::CMat gamma2 = d1.g_part * arg.exp();
  auto d3 = fx.mr.decompose(gamma2);
  CHECK(fx.g.norm(d3.xi - d1.xi) < 1e-8);
}

TEST_CASE("unipotent boundary elements use the exact nilpotent logarithm") {
  Fixture fx(Jts::type_i(2, 2));
  auto frame = fx.g.Z().frame();
  RVec xp = fx.g.x_plus(frame[0]);
  jts::CMat gamma = fx.mr.semigroup_exp(jts::CMat::Identity(4, 4), xp);
  // (gamma - I) is nilpotent
  jts::CMat N = gamma - jts::CMat::Identity(4, 4);
  jts::CMat P = N;
  for (int k = 1; k < 4; ++k) P = P * N;
  CHECK(P.norm() < 1e-12);

  auto dec = fx.mr.decompose(gamma);
  CHECK(dec.boundary_log);
  CHECK(fx.g.norm(dec.xi - xp) < 1e-9);
  CHECK(dec.residual < 1e-9);
}

TEST_CASE("semigroup closure under products of interior elements") {
  Fixture fx(Jts::type_i(2, 2));
  for (std::uint64_t s = 0; s < 10; ++s) {
    jts::CMat g1 =
        fx.mr.semigroup_exp(jts::CMat::Identity(4, 4),
                            interior_cone_point(fx.g, 1000 + s));
    jts::CMat g2 =
        fx.mr.semigroup_exp(jts::CMat::Identity(4, 4),
                            interior_cone_point(fx.g, 2000 + s));
    auto dec = fx.mr.decompose(g1 * g2);
    CHECK(dec.residual < 1e-8);
    // the recovered cone part is never refuted out of the maximal cone
    CHECK(!roots::refute_in_maximal(fx.g, dec.xi, 200, 5).has_value());
  }
}

TEST_CASE("strata of semigroup elements") {
  lie::LieAlgebraG g(Jts::type_i(2, 2));
  MatrixRealization mr(g);
  faces::FaceCatalogue cat(g);

  // G-image: label (r, 0), the zero face
  RVec kvec = RVec::Zero(g.dim());
  kvec[0] = 0.3;
  auto res = mr.stratum(cat, mr.exp_g(kvec), true);
  REQUIRE(res.classified);
  CHECK(res.label.k == 2);
  CHECK(res.label.l == 0);

  // witnessed face-interior samples round-trip through the semigroup
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= k; ++l) {
      auto smp = cat.face_interior_sample({k, l}, 31 + 10 * k + l);
      jts::CMat gamma =
          mr.semigroup_exp(jts::CMat::Identity(4, 4), g.from_exact(smp.xi));
      auto r2 = mr.stratum(cat, gamma, true);
      REQUIRE(r2.classified);
      CHECK(r2.label.k == k);
      CHECK(r2.label.l == l);
    }

  // unipotent exp(i X_e^+), e primitive: nilpotent stratum (r, 1)
  auto e = g.Z().frame()[0];
  jts::CMat gamma = mr.semigroup_exp(jts::CMat::Identity(4, 4), g.x_plus(e));
  auto r3 = mr.stratum(cat, gamma, true);
  REQUIRE(r3.classified);
  CHECK(r3.label.k == 2);
  CHECK(r3.label.l == 1);
}

TEST_CASE("stratum labels are conjugation invariant") {
  lie::LieAlgebraG g(Jts::type_i(2, 2));
  MatrixRealization mr(g);
  faces::FaceCatalogue cat(g);
  auto smp = cat.face_interior_sample({1, 1}, 99);
  jts::CMat gamma =
      mr.semigroup_exp(jts::CMat::Identity(4, 4), g.from_exact(smp.xi));
  // rational J-unitaries in S(U(2) x U(2)) keep the cone part exact
  std::vector<jts::CMat> us;
  {
    jts::CMat u = jts::CMat::Identity(4, 4);
    u(0, 0) = 0.6; u(0, 1) = -0.8; u(1, 0) = 0.8; u(1, 1) = 0.6;
    us.push_back(u);
    jts::CMat v = jts::CMat::Identity(4, 4);
    v(2, 2) = 0.6; v(2, 3) = 0.8; v(3, 2) = -0.8; v(3, 3) = 0.6;
    us.push_back(v);
    jts::CMat w = jts::CMat::Zero(4, 4);  // paired permutations, det 1
    w(0, 1) = 1; w(1, 0) = 1; w(2, 3) = 1; w(3, 2) = 1;
    us.push_back(w);
    us.push_back(u * v);
    us.push_back(w * u);
  }
  for (const auto& u : us) {
    auto res = mr.stratum(cat, u * gamma * u.inverse(), true);
    REQUIRE(res.classified);
    CHECK(res.label.k == 1);
    CHECK(res.label.l == 1);
  }
}

TEST_CASE("type restriction") {
  lie::LieAlgebraG g(Jts::type_iii(2));
  CHECK_THROWS_AS(MatrixRealization{g}, SemiErr);
}
