#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symcone/qnum.hpp"

using namespace symcone;

TEST_CASE("rational matrix rank, solve, nullspace") {
  RatMat A(3, 3);
  A(0, 0) = 1;
  A(0, 1) = 2;
  A(0, 2) = 3;
  A(1, 0) = 2;
  A(1, 1) = 4;
  A(1, 2) = 6;
  A(2, 0) = 0;
  A(2, 1) = 1;
  A(2, 2) = 1;
  CHECK(A.rank() == 2);
  auto ns = A.nullspace();
  REQUIRE(ns.size() == 1);
  auto img = A.apply(ns[0]);
  for (const auto& v : img) CHECK(v == 0);

  RatVec b = {Rat(6), Rat(12), Rat(2)};
  auto x = A.solve(b);
  REQUIRE(x.has_value());
  auto back = A.apply(*x);
  for (std::size_t i = 0; i < 3; ++i) CHECK(back[i] == b[i]);

  RatVec bad = {Rat(1), Rat(0), Rat(0)};
  CHECK(!A.solve(bad).has_value());
}

TEST_CASE("matrix inverse round trip") {
  RatMat A(2, 2);
  A(0, 0) = Rat(1, 2);
  A(0, 1) = 1;
  A(1, 0) = 3;
  A(1, 1) = Rat(-2, 7);
  auto inv = A.inverse();
  REQUIRE(inv.has_value());
  RatMat I = A * *inv;
  CHECK(I(0, 0) == 1);
  CHECK(I(0, 1) == 0);
  CHECK(I(1, 1) == 1);
}

TEST_CASE("characteristic polynomial on a companion-style matrix") {
  // diag(1, 2, 2) -> (x-1)(x-2)^2 = x^3 - 5x^2 + 8x - 4
  RatMat A(3, 3);
  A(0, 0) = 1;
  A(1, 1) = 2;
  A(2, 2) = 2;
  A(0, 1) = 7;  // upper triangular perturbation leaves the spectrum alone
  QPoly chi = char_poly(A);
  CHECK(chi.coeffs()[0] == -4);
  CHECK(chi.coeffs()[1] == 8);
  CHECK(chi.coeffs()[2] == -5);
  CHECK(chi.coeffs()[3] == 1);

  QPoly sf = chi.squarefree_part();
  CHECK(sf.degree() == 2);  // (x-1)(x-2)
  CHECK(sf.eval(Rat(1)) == 0);
  CHECK(sf.eval(Rat(2)) == 0);
}

TEST_CASE("poly modular inverse") {
  // invert x modulo x^2 - 2: x * (x/2) = x^2/2 = 1 + (x^2-2)/2
  QPoly m({Rat(-2), Rat(0), Rat(1)});
  QPoly x = QPoly::x();
  auto inv = x.inverse_mod(m);
  REQUIRE(inv.has_value());
  QPoly prod = (x * *inv).mod(m);
  CHECK(prod.degree() == 0);
  CHECK(prod.coeffs()[0] == 1);
}

TEST_CASE("snap recovers small rationals") {
  CHECK(snap_rational(0.5, 1000) == Rat(1, 2));
  CHECK(snap_rational(-2.0 / 3.0, 1000) == Rat(-2, 3));
  CHECK(snap_rational(0.0, 1000) == 0);
  auto v = snap_vector({0.25, 1.0 / 3.0}, 1000, 1e-9);
  REQUIRE(v.has_value());
  CHECK((*v)[1] == Rat(1, 3));
  // pi is not close to any small rational
  CHECK(!snap_vector({3.14159265358979}, 100, 1e-9).has_value());
}

TEST_CASE("complex rational matrix algebra") {
  QCMat A(2, 2);
  A(0, 1) = QC(Rat(1));
  A(1, 0) = QC(Rat(0), Rat(1));  // [[0,1],[i,0]]
  QCMat A2 = A * A;
  CHECK(A2(0, 0) == QC(Rat(0), Rat(1)));
  CHECK(A2(1, 1) == QC(Rat(0), Rat(1)));
  QCMat Ah = A.conj_transpose();
  CHECK(Ah(1, 0) == QC(Rat(1)));
  CHECK(Ah(0, 1) == QC(Rat(0), Rat(-1)));
}
