#include "doctest.h"

#include "test_util.hpp"

using namespace pie2d;
using namespace pie2d::testutil;

namespace {
const Rect kUnit{Rat(0), Rat(1), Rat(0), Rat(1)};
Poly px() { return Poly::variable(VX); }
Poly pth() { return Poly::variable(VTH); }
}  // namespace

TEST_CASE("1D composition with the identity bundle") {
  std::mt19937_64 rng(1);
  N1d M = random_n1d(rng, Dir::X, 2, 3, 2);
  N1d I = N1d::identity(Dir::X, 2);
  CHECK(compose_1d(kUnit, I, M) == M);
  N1d I2 = N1d::identity(Dir::X, 3);
  CHECK(compose_1d(kUnit, M, I2) == M);
}

TEST_CASE("1D Volterra kernel composes to x - th") {
  N1d N(Dir::X, 1, 1), M(Dir::X, 1, 1);
  N.N1.at(0, 0) = Poly::constant(Rat(1));
  M.N1.at(0, 0) = Poly::constant(Rat(1));
  N1d Q = compose_1d(kUnit, N, M);
  CHECK(Q.N0.is_zero());
  CHECK(Q.N1.at(0, 0) == px() - pth());
  CHECK(Q.N2.is_zero());
}

TEST_CASE("1D composition matches quadrature oracle") {
  std::mt19937_64 rng(2);
  PiNumeric num(kUnit);
  for (int trial = 0; trial < 10; ++trial) {
    Dir dir = trial % 2 ? Dir::X : Dir::Y;
    N1d N = random_n1d(rng, dir, 2, 2, 2);
    N1d M = random_n1d(rng, dir, 2, 2, 2);
    N1d Q = compose_1d(kUnit, N, M);
    Fn1D u = random_fn1d(rng, 2, 3, dir_out(dir));
    auto& nodes = dir == Dir::X ? num.nodes_x() : num.nodes_y();
    Fn1D direct = num.bind_1d(Q, u);
    Fn1D chained = num.bind_1d(N, num.tabulate_1d(dir, num.bind_1d(M, u)));
    for (double t : nodes) {
      Vec dv = direct(t), cv = chained(t);
      CHECK((dv - cv).lpNorm<Eigen::Infinity>() <=
            1e-9 * std::max(1.0, cv.lpNorm<Eigen::Infinity>()));
    }
  }
}

TEST_CASE("011 composition: identity and constant-block cases") {
  std::mt19937_64 rng(3);
  N011 D = random_n011(rng, 2, 2, 1, 2, 2);
  N011 I = N011::identity(2, 2);
  CHECK(compose_011(kUnit, I, D) == D);

  // Block-diagonal constants compose like matrix products.
  RatMat b(6, 5), d(5, 4);
  auto setblock = [](RatMat& m, int r0, int c0, int nr, int nc, int seed) {
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m.at(r0 + i, c0 + j) = seed + i * nc + j;
  };
  setblock(b, 0, 0, 2, 1, 1);
  setblock(b, 2, 1, 2, 2, 3);
  setblock(b, 4, 3, 2, 2, 7);
  setblock(d, 0, 0, 1, 2, 2);
  setblock(d, 1, 2, 2, 1, 5);
  setblock(d, 3, 3, 2, 1, 9);
  N011 B = N011::embed_const(b, 2, 2, 1, 2);
  N011 Dm = N011::embed_const(d, 1, 2, 2, 1);
  N011 R = compose_011(kUnit, B, Dm);
  RatMat prod_top = RatMat::from_poly(B.B00) * RatMat::from_poly(Dm.B00);
  CHECK(RatMat::from_poly(R.B00) == prod_top);
  CHECK(RatMat::from_poly(R.B11.N0) ==
        RatMat::from_poly(B.B11.N0) * RatMat::from_poly(Dm.B11.N0));
  CHECK(R.B11.N1.is_zero());
  CHECK(R.B01.is_zero());
}

TEST_CASE("011 composition matches quadrature oracle") {
  std::mt19937_64 rng(4);
  PiNumeric num(kUnit);
  for (int trial = 0; trial < 6; ++trial) {
    N011 B = random_n011(rng, 2, 2, 2, 2, 2);
    N011 D = random_n011(rng, 2, 2, 1, 2, 2);
    N011 R = compose_011(kUnit, B, D);
    RLFn u = random_rlfn(rng, 1, 2, 3);
    RLFn direct = num.bind_011(R, u);
    RLFn chained = num.bind_011(B, num.tabulate_rl(num.bind_011(D, u)));
    double err = sup_rlfn_diff(num, 2, direct, chained);
    CHECK(rel_err(err, sup_rlfn_mag(num, 2, chained)) <= 1e-9);
  }
}

TEST_CASE("2D composition: multiplier identity and heat kernel") {
  std::mt19937_64 rng(5);
  N2d M = random_n2d(rng, 2, 3, 2);
  CHECK(compose_2d(kUnit, N2d::identity(2), M) == M);

  // T11 = (x-th)(y-nu): compose with itself and compare against the oracle.
  N2d T(1, 1);
  T.at(1, 1).at(0, 0) = (px() - pth()) * (Poly::variable(VY) - Poly::variable(VNU));
  N2d TT = compose_2d(kUnit, T, T);
  PiNumeric num(kUnit);
  std::mt19937_64 rng2(6);
  Fn2D u = random_fn2d(rng2, 1, 3);
  Fn2D direct = num.bind_2d(TT, u);
  Fn2D chained = num.bind_2d(T, num.tabulate_2d(num.bind_2d(T, u)));
  CHECK(num.grid_sup_2d(direct, chained) <= 1e-9);
}

TEST_CASE("2D composition matches quadrature oracle on random bundles") {
  std::mt19937_64 rng(7);
  Rect other{Rat(-1, 2), Rat(3, 2), Rat(0), Rat(2)};
  for (int trial = 0; trial < 4; ++trial) {
    const Rect& rect = trial % 2 ? kUnit : other;
    PiNumeric nm(rect);
    N2d N = random_n2d(rng, 2, 2, 2);
    N2d M = random_n2d(rng, 2, 2, 2);
    N2d Q = compose_2d(rect, N, M);
    Fn2D u = random_fn2d(rng, 2, 3);
    Fn2D direct = nm.bind_2d(Q, u);
    Fn2D chained = nm.bind_2d(N, nm.tabulate_2d(nm.bind_2d(M, u)));
    CHECK(rel_err(nm.grid_sup_2d(direct, chained), nm.grid_mag_2d(chained)) <= 1e-9);
  }
}

TEST_CASE("cross composition maps match quadrature oracle") {
  std::mt19937_64 rng(8);
  PiNumeric num(kUnit);

  SUBCASE("011 x 2Dto011") {
    N011 B = random_n011(rng, 2, 2, 2, 2, 2);
    N2dTo011 D = random_2dto011(rng, 2, 2, 2, 2);
    N2dTo011 S = compose_011_x_2dto011(kUnit, B, D);
    Fn2D u = random_fn2d(rng, 2, 3);
    RLFn direct = num.bind_2dto011(S, u);
    RLFn chained = num.bind_011(B, num.tabulate_rl(num.bind_2dto011(D, u)));
    CHECK(rel_err(sup_rlfn_diff(num, 2, direct, chained), sup_rlfn_mag(num, 2, chained)) <= 1e-9);
  }
  SUBCASE("2Dto011 x 2D") {
    N2dTo011 D = random_2dto011(rng, 2, 2, 2, 2);
    N2d N = random_n2d(rng, 2, 2, 2);
    N2dTo011 S = compose_2dto011_x_2d(kUnit, D, N);
    Fn2D u = random_fn2d(rng, 2, 3);
    RLFn direct = num.bind_2dto011(S, u);
    RLFn chained = num.bind_2dto011(D, num.tabulate_2d(num.bind_2d(N, u)));
    CHECK(rel_err(sup_rlfn_diff(num, 2, direct, chained), sup_rlfn_mag(num, 2, chained)) <= 1e-9);
  }
  SUBCASE("011to2D x 011") {
    N011To2d E = random_011to2d(rng, 2, 2, 2, 2);
    N011 B = random_n011(rng, 2, 2, 1, 2, 2);
    N011To2d T = compose_011to2d_x_011(kUnit, E, B);
    RLFn u = random_rlfn(rng, 1, 2, 3);
    RLFn bu = num.tabulate_rl(num.bind_011(B, u));
    Fn2D direct = num.bind_011to2d(T, u);
    Fn2D chained = num.bind_011to2d(E, bu);
    CHECK(num.grid_sup_2d(direct, chained) <= 1e-8);
  }
  SUBCASE("2D x 011to2D") {
    N2d N = random_n2d(rng, 2, 2, 2);
    N011To2d E = random_011to2d(rng, 2, 2, 2, 2);
    N011To2d T = compose_2d_x_011to2d(kUnit, N, E);
    RLFn u = random_rlfn(rng, 2, 2, 3);
    Fn2D direct = num.bind_011to2d(T, u);
    Fn2D chained = num.bind_2d(N, num.tabulate_2d(num.bind_011to2d(E, u)));
    CHECK(num.grid_sup_2d(direct, chained) <= 1e-8);
  }
  SUBCASE("2Dto011 x 011to2D") {
    N2dTo011 D = random_2dto011(rng, 2, 2, 2, 2);
    N011To2d E = random_011to2d(rng, 2, 2, 2, 2);
    N011 R = compose_2dto011_x_011to2d(kUnit, D, E);
    RLFn u = random_rlfn(rng, 2, 2, 3);
    RLFn direct = num.bind_011(R, u);
    RLFn chained = num.bind_2dto011(D, num.tabulate_2d(num.bind_011to2d(E, u)));
    CHECK(rel_err(sup_rlfn_diff(num, 2, direct, chained), sup_rlfn_mag(num, 2, chained)) <= 1e-9);
  }
  SUBCASE("011to2D x 2Dto011") {
    N011To2d E = random_011to2d(rng, 2, 2, 2, 2);
    N2dTo011 D = random_2dto011(rng, 2, 2, 2, 2);
    N2d Q = compose_011to2d_x_2dto011(kUnit, E, D);
    Fn2D u = random_fn2d(rng, 2, 3);
    RLFn du = num.tabulate_rl(num.bind_2dto011(D, u));
    Fn2D direct = num.bind_2d(Q, u);
    Fn2D chained = num.bind_011to2d(E, du);
    CHECK(num.grid_sup_2d(direct, chained) <= 1e-8);
  }
}

TEST_CASE("cross maps send zero to zero") {
  std::mt19937_64 rng(9);
  N011 B = random_n011(rng, 2, 2, 2, 2, 2);
  N2dTo011 zeroD(2, 2, 2);
  CHECK(compose_011_x_2dto011(kUnit, B, zeroD).is_zero());
  N011To2d zeroE(2, 2, 2);
  CHECK(compose_011to2d_x_011(kUnit, zeroE, B).is_zero());
  N2d zeroN(2, 2);
  CHECK(compose_2dto011_x_2d(kUnit, zeroD, random_n2d(rng, 2, 2, 2)).is_zero());
  CHECK(compose_2d_x_011to2d(kUnit, zeroN, random_011to2d(rng, 2, 2, 2, 2)).is_zero());
}

TEST_CASE("constant-kernel smoke case for a cross map") {
  // With all kernels constant on [0,1]^2 the lemma integrals reduce to
  // products; expanding by hand: the D1 slot collects B10*R0 and B11^0*Dx1.
  N011 B(1, 1, 1, 1);
  B.B10.at(0, 0) = Poly::constant(Rat(2));
  B.B11.N0.at(0, 0) = Poly::constant(Rat(3));
  N2dTo011 D(1, 1, 1);
  D.R0.at(0, 0) = Poly::constant(Rat(5));
  D.Dx.D1.at(0, 0) = Poly::constant(Rat(7));
  N2dTo011 S = compose_011_x_2dto011(kUnit, B, D);
  CHECK(S.R0.is_zero());
  CHECK(S.Dx.D0.is_zero());
  CHECK(S.Dx.D1.at(0, 0) == Poly::constant(Rat(31)));
  CHECK(S.Dx.D2.at(0, 0) == Poly::constant(Rat(10)));
}

TEST_CASE("0112 composition") {
  std::mt19937_64 rng(10);
  N0112 D = random_0112(rng, 1, 1, 2, 2, 1, 2, 2);
  N0112 I = N0112::identity(1, 1, 2);
  CHECK(compose_0112(kUnit, I, D) == D);

  // pure-2D embedding reduces to compose_2d
  N2d A = random_n2d(rng, 2, 2, 2);
  N2d B2 = random_n2d(rng, 2, 2, 2);
  N0112 R = compose_0112(kUnit, N0112::embed_2d(A), N0112::embed_2d(B2));
  CHECK(R.A22 == compose_2d(kUnit, A, B2));
  CHECK(R.A11.is_zero());

  // oracle equivalence
  PiNumeric num(kUnit);
  N0112 Bb = random_0112(rng, 2, 1, 2, 1, 1, 2, 2);
  N0112 Dd = random_0112(rng, 1, 1, 2, 2, 2, 1, 2);
  N0112 Rr = compose_0112(kUnit, Bb, Dd);
  RLLFn u = random_rllfn(rng, 2, 2, 1, 3);
  RLLFn direct = num.bind_0112(Rr, u);
  RLLFn inner = num.bind_0112(Dd, u);
  RLLFn inner_tab;
  inner_tab.v0 = inner.v0;
  inner_tab.fx = num.tabulate_1d(Dir::X, inner.fx);
  inner_tab.fy = num.tabulate_1d(Dir::Y, inner.fy);
  inner_tab.f2 = num.tabulate_2d(inner.f2);
  RLLFn chained = num.bind_0112(Bb, inner_tab);
  double err = (direct.v0 - chained.v0).lpNorm<Eigen::Infinity>();
  for (double x : num.nodes_x())
    err = std::max(err, (direct.fx(x) - chained.fx(x)).lpNorm<Eigen::Infinity>());
  for (double y : num.nodes_y())
    err = std::max(err, (direct.fy(y) - chained.fy(y)).lpNorm<Eigen::Infinity>());
  for (double x : num.nodes_x())
    for (double y : num.nodes_y())
      err = std::max(err, (direct.f2(x, y) - chained.f2(x, y)).lpNorm<Eigen::Infinity>());
  CHECK(err <= 1e-8);
}

TEST_CASE("bilinearity of composition is exact") {
  std::mt19937_64 rng(11);
  N2d A = random_n2d(rng, 2, 2, 2);
  N2d A2 = random_n2d(rng, 2, 2, 2);
  N2d B = random_n2d(rng, 2, 2, 2);
  CHECK(compose_2d(kUnit, A + A2, B) == compose_2d(kUnit, A, B) + compose_2d(kUnit, A2, B));
  N011 C = random_n011(rng, 1, 2, 2, 1, 2);
  N011 C2 = random_n011(rng, 1, 2, 2, 1, 2);
  N011 D = random_n011(rng, 2, 1, 2, 2, 2);
  CHECK(compose_011(kUnit, C + C2, D) == compose_011(kUnit, C, D) + compose_011(kUnit, C2, D));
}

TEST_CASE("2D composition is associative at the kernel level") {
  std::mt19937_64 rng(12);
  N2d A = random_n2d(rng, 1, 2, 1);
  N2d B = random_n2d(rng, 2, 2, 1);
  N2d C = random_n2d(rng, 2, 1, 1);
  N2d left = compose_2d(kUnit, compose_2d(kUnit, A, B), C);
  N2d right = compose_2d(kUnit, A, compose_2d(kUnit, B, C));
  CHECK(left == right);
}

TEST_CASE("composition output degree bound") {
  std::mt19937_64 rng(13);
  N2d A = random_n2d(rng, 1, 1, 2);
  N2d B = random_n2d(rng, 1, 1, 2);
  N2d Q = compose_2d(kUnit, A, B);
  // one eliminated dummy per axis
  CHECK(Q.degree() <= A.degree() + B.degree() + 2);
}

TEST_CASE("2D adjoint") {
  std::mt19937_64 rng(14);
  // symmetric multiplier maps to itself
  PolyMatrix sym = random_matrix(rng, 2, 2, 2, vs_xy);
  sym += sym.transpose();
  N2d M = N2d::multiplier(sym);
  CHECK(adjoint_2d(M) == M);

  N2d N = random_n2d(rng, 2, 3, 2);
  CHECK(adjoint_2d(adjoint_2d(N)) == N);

  PiNumeric num(kUnit);
  N2d Nh = adjoint_2d(N);
  for (int trial = 0; trial < 3; ++trial) {
    Fn2D u = random_fn2d(rng, 3, 3);
    Fn2D v = random_fn2d(rng, 2, 3);
    double lhs = num.inner_product(v, num.bind_2d(N, u));
    double rhs = num.inner_product(num.bind_2d(Nh, v), u);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("011 and 0112 adjoints") {
  std::mt19937_64 rng(15);
  N011 B = random_n011(rng, 2, 2, 1, 2, 2);
  CHECK(adjoint_011(adjoint_011(B)) == B);

  N0112 C = random_0112(rng, 1, 1, 2, 2, 1, 2, 2);
  CHECK(adjoint_0112(adjoint_0112(C)) == C);

  PiNumeric num(kUnit);
  N0112 Ch = adjoint_0112(C);
  for (int trial = 0; trial < 3; ++trial) {
    RLLFn u = random_rllfn(rng, 2, 1, 2, 3);
    RLLFn v = random_rllfn(rng, 1, 1, 2, 3);
    RLLFn cu = num.bind_0112(C, u);
    RLLFn chv = num.bind_0112(Ch, v);
    double lhs = num.rll_inner_product(v, cu);
    double rhs = num.rll_inner_product(chv, u);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
  }

  // block-diagonal symmetric constant bundle is self-adjoint
  RatMat m(4, 4);
  m.at(0, 0) = 2;
  m.at(1, 1) = 3;
  m.at(2, 2) = 3;
  m.at(3, 3) = 5;
  N011 S = N011::embed_const(m, 2, 1, 2, 1);
  CHECK(adjoint_011(S) == S);
}

TEST_CASE("embedding of the heat-example boundary matrix") {
  // 8 x 24 selector with n1=0, n2=1: splits as B00 (4x16), B11^0 (2x4), B22^0 (2x4)
  RatMat m(8, 24);
  int cols[8] = {1, 4, 10, 12, 16, 18, 20, 22};
  for (int r = 0; r < 8; ++r) m.at(r, cols[r]) = 1;
  N011 B = N011::embed_const(m, 4, 2, 16, 4);
  CHECK(B.B00.rows() == 4);
  CHECK(B.B00.cols() == 16);
  CHECK(B.B11.N0.rows() == 2);
  CHECK(B.B11.N0.cols() == 4);
  CHECK(B.B22.N0.rows() == 2);
  CHECK(B.B22.N0.cols() == 4);
  CHECK(B.B11.N1.is_zero());

  RatMat z(8, 24);
  CHECK(N011::embed_const(z, 4, 2, 16, 4).is_zero());
}

TEST_CASE("identity 2D bundle acts as identity under the oracle") {
  std::mt19937_64 rng(16);
  PiNumeric num(kUnit);
  N2d I = N2d::identity(1);
  Fn2D u = random_fn2d(rng, 1, 3);
  CHECK(num.grid_sup_2d(num.bind_2d(I, u), u) <= 1e-12);
}
