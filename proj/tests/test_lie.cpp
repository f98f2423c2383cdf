#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symcone/jordan.hpp"
#include "symcone/lie.hpp"

using namespace symcone;
using namespace symcone::lie;
using jts::CVec;
using jts::Jts;

namespace {

RVec random_vec(const LieAlgebraG& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  RVec v(g.dim());
  for (int k = 0; k < g.dim(); ++k) v[k] = d(rng);
  return v;
}

}  // namespace

TEST_CASE("dimension of g per type") {
  CHECK(LieAlgebraG(Jts::type_i(1, 1)).dim() == 3);    // su(1,1)
  CHECK(LieAlgebraG(Jts::type_i(2, 2)).dim() == 15);   // su(2,2)
  CHECK(LieAlgebraG(Jts::type_i(2, 3)).dim() == 24);   // su(2,3)
  CHECK(LieAlgebraG(Jts::type_iii(2)).dim() == 10);    // sp(4,R)
  CHECK(LieAlgebraG(Jts::type_iv(4)).dim() == 15);     // so(2,4)
}

TEST_CASE("basic bracket identities") {
  LieAlgebraG g(Jts::type_i(2, 2));
  const auto& Z = g.Z();
  CVec u = Z.random_element(3);

  // [h0, xi_u^-] = xi_{iu}^-
  std::complex<double> i(0, 1);
  RVec lhs = g.bracket(g.h0(), g.xi_minus(u));
  CHECK(g.norm(lhs - g.xi_minus(i * u)) < 1e-10);

  // [(delta,0), (0,u)] = (0, delta u)
  CVec a = Z.random_element(5), b = Z.random_element(7);
  jts::CMat delta = Z.box(a, b) - Z.box(b, a);
  RVec d = g.coords(delta, CVec::Zero(4));
  RVec br = g.bracket(d, g.xi_minus(u));
  CHECK(g.norm(br - g.xi_minus(delta * u)) < 1e-9);
}

TEST_CASE("su(1,1): [(0,1),(0,-i)] equals 4i(1 box 1)") {
  LieAlgebraG g(Jts::type_i(1, 1));
  CVec one = CVec::Ones(1);
  std::complex<double> i(0, 1);
  RVec lhs = g.bracket(g.xi_minus(one), g.xi_minus(-i * one));
  jts::CMat m(1, 1);
  m(0, 0) = 4.0 * i;
  RVec rhs = g.coords(m, CVec::Zero(1));
  CHECK(g.norm(lhs - rhs) < 1e-12);
}

TEST_CASE("Jacobi identity on all basis triples") {
  for (auto Z : {Jts::type_i(2, 2), Jts::type_iii(2), Jts::type_iv(4)}) {
    LieAlgebraG g(std::move(Z));
    double worst = 0;
    for (int a = 0; a < g.dim(); ++a)
      for (int b = a + 1; b < g.dim(); ++b)
        for (int c = b + 1; c < g.dim(); ++c) {
          RVec ea = RVec::Unit(g.dim(), a), eb = RVec::Unit(g.dim(), b),
               ec = RVec::Unit(g.dim(), c);
          RVec s = g.bracket(ea, g.bracket(eb, ec)) +
                   g.bracket(eb, g.bracket(ec, ea)) +
                   g.bracket(ec, g.bracket(ea, eb));
          worst = std::max(worst, s.cwiseAbs().maxCoeff());
        }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("Killing form: closed form vs ad-trace") {
  // B(xi_1^-, xi_1^-) = 8 in su(1,1)
  LieAlgebraG g1(Jts::type_i(1, 1));
  CVec one = CVec::Ones(1);
  RVec xi1 = g1.xi_minus(one);
  CHECK(g1.killing(xi1, xi1) == doctest::Approx(8.0));
  LieElement el = g1.element(xi1);
  CHECK(g1.killing_closed_form(el, el) == doctest::Approx(8.0));

  for (auto Zk : {Jts::type_i(2, 2), Jts::type_i(2, 3), Jts::type_iii(2),
                  Jts::type_iv(4), Jts::type_i(1, 1)}) {
    LieAlgebraG g(std::move(Zk));
    for (std::uint64_t s = 0; s < 50; ++s) {
      RVec x = random_vec(g, 100 + s), y = random_vec(g, 200 + s);
      double bt = g.killing(x, y);
      double bc = g.killing_closed_form(g.element(x), g.element(y));
      CHECK(std::fabs(bt - bc) <= 1e-8 * std::max(1.0, std::fabs(bt)));
    }
    // k and p are Killing-orthogonal
    RVec xk = RVec::Zero(g.dim());
    xk.head(g.dim_k()) = random_vec(g, 7).head(g.dim_k());
    RVec xp = RVec::Zero(g.dim());
    xp.tail(g.dim_p()) = random_vec(g, 8).tail(g.dim_p());
    CHECK(std::fabs(g.killing(xk, xp)) < 1e-9);
    // h0 is a compact direction
    CHECK(g.killing(g.h0(), g.h0()) < 0.0);
  }
}

TEST_CASE("theta invariance of B and positivity of the inner product") {
  LieAlgebraG g(Jts::type_i(2, 3));
  for (std::uint64_t s = 0; s < 20; ++s) {
    RVec x = random_vec(g, 300 + s), y = random_vec(g, 400 + s);
    CHECK(std::fabs(g.killing(g.theta(x), g.theta(y)) - g.killing(x, y)) <
          1e-8 * std::max(1.0, std::fabs(g.killing(x, y))));
    CHECK(g.inner(x, x) > 0.0);
  }
}

TEST_CASE("ad h0 has spectrum {0, +-i}: (ad h0)^3 = -ad h0") {
  for (auto Zk : {Jts::type_i(2, 2), Jts::type_iii(2), Jts::type_iv(4)}) {
    LieAlgebraG g(std::move(Zk));
    RMat A = g.ad(g.h0());
    CHECK((A * A * A + A).norm() < 1e-9);
  }
}

TEST_CASE("Cayley triples attached to tripotents") {
  LieAlgebraG g(Jts::type_i(2, 2));
  const auto& Z = g.Z();
  auto frame = Z.frame();

  CVec e1 = frame[0], emax = frame[0] + frame[1];
  for (const CVec& e : {e1, emax}) {
    auto t = g.cayley_elements(e);
    CHECK(t.h1);
    // i(e box e) = (X+ - X-)/2
    std::complex<double> i(0, 1);
    RVec lhs = g.coords(i * Z.box(e, e), CVec::Zero(4));
    CHECK(g.norm(lhs - 0.5 * (t.xp - t.xm)) < 1e-9);
  }

  // orthogonality <-> commuting triple algebras
  auto t1 = g.cayley_elements(frame[0]);
  auto t2 = g.cayley_elements(frame[1]);
  CHECK(g.norm(g.bracket(t1.xp, t2.xp)) < 1e-9);
  CHECK(g.norm(g.bracket(t1.h, t2.h)) < 1e-9);
  CHECK(g.norm(g.bracket(t1.xp, t2.xm)) < 1e-9);
  CVec mixed = CVec::Zero(4);
  mixed[1] = 1.0;  // E12 shares a row with E11
  auto t3 = g.cayley_elements(mixed);
  CHECK(g.norm(g.bracket(t1.xp, t3.xm)) > 1e-3);
}

TEST_CASE("cayley_test accepts nilpositives and rejects noise") {
  LieAlgebraG g(Jts::type_iii(2));
  const auto& Z = g.Z();
  auto frame = Z.frame();
  CVec e = frame[0];

  auto t = g.cayley_test(g.x_plus(e));
  REQUIRE(t.has_value());
  CHECK(t->h1);
  CHECK((t->e - e).norm() < 1e-9);

  auto tm = g.cayley_test(g.x_minus(e));
  REQUIRE(tm.has_value());
  CHECK(!tm->h1);  // minus-type nilpotent fails the (H1) sign

  CHECK(!g.cayley_test(RVec::Zero(g.dim())).has_value());
  int rejected = 0;
  for (std::uint64_t s = 0; s < 100; ++s)
    if (!g.cayley_test(random_vec(g, 1000 + s)).has_value()) ++rejected;
  CHECK(rejected == 100);
}

TEST_CASE("tripotent_from_cayley round-trips") {
  for (auto Zk : {Jts::type_i(1, 1), Jts::type_i(2, 2), Jts::type_iii(2)}) {
    LieAlgebraG g(std::move(Zk));
    auto frame = g.Z().frame();
    CVec e = frame[0];
    if (frame.size() > 1) e += frame[1];
    auto t = g.cayley_elements(e);
    CVec back = g.tripotent_from_cayley(t);
    CHECK((back - e).norm() < 1e-9);
  }
}

TEST_CASE("grading dimensions for I(2,2)") {
  LieAlgebraG g(Jts::type_i(2, 2));
  auto frame = g.Z().frame();

  auto G = g.grading(frame[0]);
  CHECK(G.at(-2).cols() == 1);
  CHECK(G.at(-1).cols() == 4);
  CHECK(G.at(0).cols() == 5);
  CHECK(G.at(1).cols() == 4);
  CHECK(G.at(2).cols() == 1);

  auto Gm = g.grading(frame[0] + frame[1]);
  CHECK(Gm.at(-1).cols() == 0);
  CHECK(Gm.at(1).cols() == 0);
  CHECK(Gm.at(2).cols() == 4);
  CHECK(Gm.at(-2).cols() == 4);

  auto G0 = g.grading(CVec::Zero(4));
  CHECK(G0.at(0).cols() == g.dim());

  for (auto Zk : {Jts::type_i(2, 3), Jts::type_iii(2), Jts::type_iv(4)}) {
    LieAlgebraG h(std::move(Zk));
    CVec e = h.Z().frame()[0];
    auto P = h.Z().peirce(e);
    auto Gr = h.grading(e);
    CHECK(Gr.at(2).cols() == P.z1.cols());       // dim X_1(e) = dim_C Z_1(e)
    CHECK(Gr.at(1).cols() == 2 * P.z12.cols());  // real dim of Z_1/2
  }
}

TEST_CASE("grading is compatible with brackets") {
  LieAlgebraG g(Jts::type_iii(2));
  CVec e = g.Z().frame()[0];
  auto G = g.grading(e);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      if (G.at(a).cols() == 0 || G.at(b).cols() == 0) continue;
      RVec x = g.bracket(G.at(a).col(0), G.at(b).col(0));
      int c = a + b;
      if (c < -2 || c > 2) {
        CHECK(g.norm(x) < 1e-9);
        continue;
      }
      RVec proj = RVec::Zero(g.dim());
      for (int k = 0; k < G.at(c).cols(); ++k)
        proj += g.inner(x, G.at(c).col(k)) * G.at(c).col(k);
      CHECK(g.norm(x - proj) < 1e-8 * std::max(1.0, g.norm(x)));
    }
}

TEST_CASE("eta and zeta land in the stated grading levels") {
  LieAlgebraG g(Jts::type_i(2, 2));
  const auto& Z = g.Z();
  CVec e = Z.frame()[0];
  auto P = Z.peirce(e);
  auto G = g.grading(e);
  std::complex<double> i(0, 1);

  CVec u12 = P.z12.col(0);
  RVec et = g.eta(e, u12);
  RVec proj = RVec::Zero(g.dim());
  for (int k = 0; k < G.at(1).cols(); ++k)
    proj += g.inner(et, G.at(1).col(k)) * G.at(1).col(k);
  CHECK(g.norm(et - proj) < 1e-8 * g.norm(et));

  // X_e^+ = zeta_{-ie}^e / 2 sits at level two
  RVec xp = g.x_plus(e);
  RVec proj2 = RVec::Zero(g.dim());
  for (int k = 0; k < G.at(2).cols(); ++k)
    proj2 += g.inner(xp, G.at(2).col(k)) * G.at(2).col(k);
  CHECK(g.norm(xp - proj2) < 1e-8 * g.norm(xp));
  CHECK(g.norm(xp - 0.5 * g.zeta(e, -i * e)) < 1e-10);
}

TEST_CASE("Heisenberg structure of h^e") {
  LieAlgebraG g(Jts::type_i(2, 2));
  const auto& Z = g.Z();
  CVec e = Z.frame()[0];
  auto P = Z.peirce(e);

  // h_e(E12, E12) = 8 {E12 E12 E11} = 4 E11
  CVec e12 = CVec::Zero(4);
  e12[1] = 1.0;
  CVec h = g.h_form(e, e12, e12);
  CHECK((h - 4.0 * e).norm() < 1e-12);

  for (std::uint64_t s = 0; s < 10; ++s) {
    CVec raw = Z.random_element(50 + s);
    CVec u = CVec::Zero(4);
    for (int c = 0; c < P.z12.cols(); ++c)
      u += Z.inner(raw, P.z12.col(c)) * P.z12.col(c);
    CHECK(g.q_form(e, u, u).norm() < 1e-10);
    CVec v = CVec::Zero(4);
    CVec raw2 = Z.random_element(90 + s);
    for (int c = 0; c < P.z12.cols(); ++c)
      v += Z.inner(raw2, P.z12.col(c)) * P.z12.col(c);
    CVec q = g.q_form(e, u, v);
    CHECK((Z.triple(e, q, e) - q).norm() < 1e-9);  // fixed by the involution
  }

  // positivity: h_e(u,u) is a nonzero element of the closed cone of X_1(e)
  jordan::Eja X1 = jordan::Eja::from_jts_real_form(Z, e);
  for (std::uint64_t s = 0; s < 100; ++s) {
    CVec raw = Z.random_element(1000 + s);
    CVec u = CVec::Zero(4);
    for (int c = 0; c < P.z12.cols(); ++c)
      u += Z.inner(raw, P.z12.col(c)) * P.z12.col(c);
    if (Z.norm(u) < 1e-9) continue;
    CVec hu = g.h_form(e, u, u);
    CHECK(Z.norm(hu) > 1e-9);
    auto m = X1.cone_membership(X1.from_z(hu));
    CHECK(m.where != jordan::Membership::Outside);
  }
}

TEST_CASE("phi^e is a Lie algebra isomorphism onto h^e") {
  LieAlgebraG g(Jts::type_i(2, 2));
  const auto& Z = g.Z();
  CVec e = Z.frame()[0];
  auto P = Z.peirce(e);
  auto X1 = Z.real_form_x1(e);
  std::mt19937_64 rng(12);
  std::normal_distribution<double> d(0.0, 1.0);
  auto rand_pair = [&]() {
    CVec u = CVec::Zero(4), v = CVec::Zero(4);
    for (int c = 0; c < P.z12.cols(); ++c)
      u += std::complex<double>(d(rng), d(rng)) * P.z12.col(c);
    for (const auto& b : X1) v += d(rng) * b;
    return std::make_pair(u, v);
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto [u, v] = rand_pair();
    auto [u2, v2] = rand_pair();
    RVec lhs = g.bracket(g.phi(e, u, v), g.phi(e, u2, v2));
    RVec rhs = g.phi(e, CVec::Zero(4), g.q_form(e, u, u2));
    CHECK(g.norm(lhs - rhs) < 1e-9 * std::max(1.0, g.norm(lhs)));
  }

  // centre of h^e is g^e[2]
  auto G = g.grading(e);
  RMat H = g.heisenberg_basis(e);
  RMat brackets(g.dim() * H.cols(), H.cols());
  for (int a = 0; a < H.cols(); ++a)
    for (int b = 0; b < H.cols(); ++b)
      brackets.block(g.dim() * a, b, g.dim(), 1) = g.bracket(H.col(a), H.col(b));
  Eigen::JacobiSVD<RMat> svd(brackets, Eigen::ComputeFullV);
  int centre_dim = 0;
  for (int k = 0; k < H.cols(); ++k)
    if (svd.singularValues()[k] <= 1e-8 * svd.singularValues()[0]) ++centre_dim;
  CHECK(centre_dim == G.at(2).cols());
}

TEST_CASE("zero grading split") {
  LieAlgebraG g(Jts::type_i(2, 2));
  auto frame = g.Z().frame();

  auto S = g.zero_grading_split(frame[0]);
  CHECK(S.g0.cols() == 3);  // su(1,1) on the complementary line
  CHECK(S.g1.cols() == 1);  // R xi_e^-, rank one
  for (int a = 0; a < S.g0.cols(); ++a)
    for (int b = 0; b < S.g1.cols(); ++b)
      CHECK(g.norm(g.bracket(S.g0.col(a), S.g1.col(b))) < 1e-9);
  auto G = g.grading(frame[0]);
  CHECK(S.g0.cols() + S.g1.cols() + S.m.cols() == G.at(0).cols());

  auto Sm = g.zero_grading_split(frame[0] + frame[1]);
  CHECK(Sm.g0.cols() == 0);

  CHECK(g.norm(g.bracket(S.g1.col(0), S.g1.col(0))) < 1e-12);
}

TEST_CASE("centre of k_1(e) is trivial") {
  LieAlgebraG g(Jts::type_i(2, 2));
  CVec e = g.Z().frame()[0] + g.Z().frame()[1];
  auto S = g.zero_grading_split(e);
  // extract k-part combos of g1 (kernel of the p-coordinate rows)
  RMat pc = S.g1.bottomRows(g.dim_p());
  Eigen::JacobiSVD<RMat> svd(pc, Eigen::ComputeFullV);
  std::vector<RVec> k1;
  for (int k = S.g1.cols() - 1; k >= 0; --k) {
    if (k < svd.singularValues().size() && svd.singularValues()[k] > 1e-9)
      break;
    k1.push_back(S.g1 * svd.matrixV().col(k));
  }
  REQUIRE(!k1.empty());
  RMat stack(g.dim() * k1.size(), k1.size());
  for (std::size_t a = 0; a < k1.size(); ++a)
    for (std::size_t b = 0; b < k1.size(); ++b)
      stack.block(g.dim() * a, b, g.dim(), 1) = g.bracket(k1[a], k1[b]);
  Eigen::JacobiSVD<RMat> svd2(stack);
  CHECK(svd2.singularValues()[k1.size() - 1] > 1e-8);
}

TEST_CASE("Jordan-Chevalley decomposition") {
  LieAlgebraG g(Jts::type_i(1, 1));
  CVec one = CVec::Ones(1);

  auto [s0, n0] = g.jordan_chevalley(g.h0());
  CHECK(g.norm(s0 - g.h0()) < 1e-12);
  CHECK(g.norm(n0) < 1e-12);

  auto [s1, n1] = g.jordan_chevalley(g.x_plus(one));
  CHECK(g.norm(s1) < 1e-12);
  CHECK(g.norm(n1 - g.x_plus(one)) < 1e-12);

  // mixed element: the defining properties characterize the split
  RVec xi = g.h0() + g.x_plus(one);
  auto [s, n] = g.jordan_chevalley(xi);
  CHECK(g.norm(s + n - xi) < 1e-12);
  CHECK(g.norm(g.bracket(s, n)) < 1e-12);
  RMat adn = g.ad(n);
  RMat pow = RMat::Identity(g.dim(), g.dim());
  for (int k = 0; k < g.dim(); ++k) pow = pow * adn;
  CHECK(pow.norm() < 1e-10);
  Eigen::ComplexEigenSolver<RMat> eig(g.ad(s));
  CHECK(std::abs(eig.eigenvectors().determinant()) > 1e-10);

  LieAlgebraG g2(Jts::type_iii(2));
  RVec xi2 = 2.0 * g2.h0() + g2.x_plus(g2.Z().frame()[0]);
  auto [s2, n2] = g2.jordan_chevalley(xi2);
  CHECK(g2.norm(s2 + n2 - xi2) < 1e-12);
  CHECK(g2.norm(g2.bracket(s2, n2)) < 1e-12);
}

TEST_CASE("exact exponential of ad-nilpotent elements") {
  LieAlgebraG g(Jts::type_i(2, 2));
  auto e = g.Z().frame_exact()[0];
  RatVec xp = g.x_plus_exact(e);
  RatMat E = g.ad_exp_nilpotent_exact(xp);
  RMat Ed = g.ad_exp(g.from_exact(xp));
  double diff = 0;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      diff = std::max(diff, std::fabs(to_double(E(i, j)) - Ed(i, j)));
  CHECK(diff < 1e-9);
}

TEST_CASE("Ad of triple automorphisms and the nilpotent equivariance") {
  LieAlgebraG g(Jts::type_i(2, 2));
  const auto& Z = g.Z();
  CVec e = Z.frame()[0];
  jts::CMat k = g.sample_k(42);
  RMat Ad = g.triple_auto_ad(k);
  // Ad(k) X_u^+ = X_{ku}^+
  CHECK(g.norm(Ad * g.x_plus(e) - g.x_plus(k * e)) < 1e-8);
  RVec x = random_vec(g, 5), y = random_vec(g, 6);
  CHECK(g.norm(Ad * g.bracket(x, y) - g.bracket(Ad * x, Ad * y)) < 1e-7);
  CHECK(std::fabs(g.killing(Ad * x, Ad * y) - g.killing(x, y)) <
        1e-7 * std::max(1.0, std::fabs(g.killing(x, y))));

  auto gens = Z.exact_k_generators();
  REQUIRE(!gens.empty());
  for (const auto& kg : gens) {
    RatMat AdX = g.triple_auto_ad_exact(kg);
    jts::CMat kd(Z.dim(), Z.dim());
    for (int a = 0; a < Z.dim(); ++a)
      for (int b = 0; b < Z.dim(); ++b)
        kd(a, b) = {to_double(kg(a, b).re), to_double(kg(a, b).im)};
    RMat AdD = g.triple_auto_ad(kd);
    double diff = 0;
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j)
        diff = std::max(diff, std::fabs(to_double(AdX(i, j)) - AdD(i, j)));
    CHECK(diff < 1e-9);
  }
}

TEST_CASE("p^+ is Killing-isotropic (complexified pairing)") {
  LieAlgebraG g(Jts::type_iii(2));
  const auto& Z = g.Z();
  std::complex<double> i(0, 1);
  // u d/dz = (xi_u^- - i xi_{iu}^-)/2; B extends complex-bilinearly
  auto bc = [&](const CVec& u, const CVec& v) {
    RVec xu = g.xi_minus(u), xiu = g.xi_minus(i * u);
    RVec xv = g.xi_minus(v), xiv = g.xi_minus(i * v);
    std::complex<double> val =
        0.25 * (std::complex<double>(g.killing(xu, xv)) -
                i * g.killing(xu, xiv) - i * g.killing(xiu, xv) -
                std::complex<double>(g.killing(xiu, xiv)));
    return val;
  };
  for (std::uint64_t s = 0; s < 10; ++s) {
    CVec u = Z.random_element(70 + s), v = Z.random_element(80 + s);
    CHECK(std::abs(bc(u, v)) < 1e-9);
  }
}
