#include "doctest.h"

#include <random>

#include "pie2d/poly.hpp"
#include "pie2d/polymatrix.hpp"

using namespace pie2d;

namespace {

Poly px() { return Poly::variable(VX); }
Poly py() { return Poly::variable(VY); }
Poly pth() { return Poly::variable(VTH); }
Poly pnu() { return Poly::variable(VNU); }
Poly c(long n, long d = 1) { return Poly::constant(Rat(n, d)); }

Poly random_poly(std::mt19937_64& rng, int maxdeg, VarSet set) {
  std::uniform_int_distribution<int> coeff(-6, 6);
  Poly p;
  for (auto& m : monomial_exponents(maxdeg, set)) {
    int v = coeff(rng);
    if (v) p += Poly::monomial(m, Rat(v));
  }
  return p;
}

}  // namespace

TEST_CASE("addition cancels and merges like terms") {
  CHECK((px() + pth()) + (-pth()) == px());
  CHECK((c(2) * px() * px() * py() + c(3) * px() * px() * py()) ==
        c(5) * px() * px() * py());
  Poly zero;
  CHECK(zero + px() == px());
  CHECK((px() - px()).is_zero());
}

TEST_CASE("matrix product") {
  PolyMatrix a(1, 2, vs_all4), b(2, 1, vs_all4);
  a.at(0, 0) = c(1);
  a.at(0, 1) = px();
  b.at(0, 0) = py();
  b.at(1, 0) = c(1);
  PolyMatrix prod = a * b;
  CHECK(prod.at(0, 0) == py() + px());
  CHECK((PolyMatrix::identity(3) * PolyMatrix::identity(3)) == PolyMatrix::identity(3));
}

TEST_CASE("integration examples") {
  // int_0^x (x - th)*4 dth = 2 x^2
  Poly p = (px() - pth()) * c(4);
  Poly r = p.integrate(VTH, Bound::of(Rat(0)), Bound::of(VX));
  CHECK(r == c(2) * px() * px());

  CHECK(Poly().integrate(VTH, Bound::of(Rat(0)), Bound::of(Rat(1))).is_zero());

  // int_0^x int_0^y (x-th)(y-nu)*4 dnu dth = x^2 y^2; cross-check by
  // differentiating back: d2/dx2 d2/dy2 of the result equals 4.
  Poly q = (px() - pth()) * (py() - pnu()) * c(4);
  Poly s = q.integrate(VNU, Bound::of(Rat(0)), Bound::of(VY))
               .integrate(VTH, Bound::of(Rat(0)), Bound::of(VX));
  CHECK(s == px() * px() * py() * py());
  CHECK(s.diff(VX).diff(VX).diff(VY).diff(VY) == c(4));
}

TEST_CASE("substitution") {
  CHECK((px() - pth()).subst(VTH, Bound::of(VX)).is_zero());
  Poly e = (py() - pnu()).subst(VNU, Bound::of(Rat(0)));
  CHECK(e == py());
  // substitution into an existing variable merges exponents
  Poly m = px() * px() * pth();
  CHECK(m.subst(VX, Bound::of(VTH)) == pth() * pth() * pth());
}

TEST_CASE("differentiation") {
  CHECK((px() * px() * py()).diff(VX) == c(2) * px() * py());
  CHECK(c(7).diff(VX).is_zero());
  CHECK(((px() - pth()) * (py() - pnu())).diff(VX).diff(VY) == c(1));
}

TEST_CASE("evaluation") {
  std::array<Rat, kNumVars> pt{Rat(1, 2), Rat(1, 3), Rat(0), Rat(0), Rat(0), Rat(0)};
  CHECK((px() + py()).eval(pt) == Rat(5, 6));
  CHECK(Poly().eval(pt) == 0);
  std::array<Rat, kNumVars> ones{Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)};
  CHECK((px() * px() * py() * py()).eval(ones) == 1);
}

TEST_CASE("monomial basis counts and order") {
  auto b1 = monomial_basis(1, vs_xy);
  REQUIRE(b1.size() == 3);
  CHECK(b1[0] == c(1));
  CHECK(b1[1] == px());
  CHECK(b1[2] == py());

  CHECK(monomial_basis(0, vs_xy).size() == 1);

  auto b2 = monomial_basis(2, vs_x);
  REQUIRE(b2.size() == 3);
  CHECK(b2[2] == px() * px());

  // C(d+k, k) count for k variables
  auto b = monomial_basis(3, vs_all4);
  CHECK(b.size() == 35);  // C(7,4)
}

TEST_CASE("linearity of integration and Leibniz rule on random polynomials") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = random_poly(rng, 3, vs_xth | vs(VY));
    Poly q = random_poly(rng, 3, vs_xth | vs(VY));
    Bound zero = Bound::of(Rat(0)), one = Bound::of(Rat(1));
    CHECK((p + q).integrate(VTH, zero, one) ==
          p.integrate(VTH, zero, one) + q.integrate(VTH, zero, one));

    // d/dx int_a^x p(.,th) dth = p|th=x + int_a^x dp/dx dth
    Poly lhs = p.integrate(VTH, zero, Bound::of(VX)).diff(VX);
    Poly rhs = p.subst(VTH, Bound::of(VX)) + p.diff(VX).integrate(VTH, zero, Bound::of(VX));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("eval commutes with substitution on random points") {
  std::mt19937_64 rng(999);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    Poly p = random_poly(rng, 3, vs_all4);
    std::array<Rat, kNumVars> pt{};
    for (int i = 0; i < 4; ++i) pt[i] = frac(num(rng), 7);
    Rat direct = p.eval(pt);
    Poly sub = p.subst(VTH, Bound::of(pt[VTH]));
    CHECK(sub.eval(pt) == direct);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rat("3") == 3);
  CHECK(parse_rat("-1/2") == Rat(-1, 2));
  CHECK(parse_rat("0.25") == Rat(1, 4));
  CHECK(parse_rat("15.0") == 15);
  CHECK(parse_rat("1e-3") == Rat(1, 1000));
  CHECK_THROWS_AS(parse_rat("abc"), Error);
}

TEST_CASE("exact rational matrix inverse and rank") {
  RatMat m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = 1;
  RatMat inv = m.inverse();
  CHECK((m * inv) == RatMat::identity(2));
  CHECK(m.rank() == 2);

  RatMat s(2, 2);
  s.at(0, 0) = 1;
  s.at(0, 1) = 2;
  s.at(1, 0) = 2;
  s.at(1, 1) = 4;
  CHECK(s.rank() == 1);
  CHECK_THROWS_AS(s.inverse("test"), Error);
}
