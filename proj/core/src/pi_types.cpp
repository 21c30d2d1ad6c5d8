#include "pie2d/pi_types.hpp"

#include <sstream>

namespace pie2d {

namespace {
VarSet vs1d_mult(Dir d) { return d == Dir::X ? vs_x : vs_y; }
VarSet vs1d_kern(Dir d) { return d == Dir::X ? vs_xth : vs_ynu; }
}  // namespace

N1d::N1d(Dir d, int n, int m)
    : dir(d),
      N0(n, m, vs1d_mult(d)),
      N1(n, m, vs1d_kern(d)),
      N2(n, m, vs1d_kern(d)) {}

N1d N1d::identity(Dir d, int n) {
  N1d r(d, n, n);
  r.N0 = PolyMatrix::identity(n);
  return r;
}

N1d N1d::multiplier(Dir d, const PolyMatrix& m) {
  N1d r(d, m.rows(), m.cols());
  r.N0 = m;
  return r;
}

int N1d::degree() const { return std::max({N0.degree(), N1.degree(), N2.degree()}); }

N1d& N1d::operator+=(const N1d& o) {
  PIE2D_CHECK(dir == o.dir, "1D bundle direction mismatch");
  N0 += o.N0;
  N1 += o.N1;
  N2 += o.N2;
  return *this;
}

N1d N1d::scaled(const Rat& c) const {
  N1d r = *this;
  r.N0 = N0.scaled(c);
  r.N1 = N1.scaled(c);
  r.N2 = N2.scaled(c);
  return r;
}

void N1d::validate() const {
  PIE2D_CHECK((N0.vars() & ~vs1d_mult(dir)) == 0, "N0 variable set");
  PIE2D_CHECK((N1.vars() & ~vs1d_kern(dir)) == 0, "N1 variable set");
  PIE2D_CHECK((N2.vars() & ~vs1d_kern(dir)) == 0, "N2 variable set");
}

namespace {
VarSet vs2d_slot(int i, int j) {
  VarSet s = vs_xy;
  if (i) s |= vs(VTH);
  if (j) s |= vs(VNU);
  return s;
}
}  // namespace

N2d::N2d(int n, int m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) at(i, j) = PolyMatrix(n, m, vs2d_slot(i, j));
}

N2d N2d::identity(int n) {
  N2d r(n, n);
  r.at(0, 0) = PolyMatrix::identity(n);
  return r;
}

N2d N2d::multiplier(const PolyMatrix& m) {
  N2d r(m.rows(), m.cols());
  r.at(0, 0) = m;
  return r;
}

bool N2d::is_zero() const {
  for (auto& m : k)
    if (!m.is_zero()) return false;
  return true;
}

int N2d::degree() const {
  int d = -1;
  for (auto& m : k) d = std::max(d, m.degree());
  return d;
}

N2d& N2d::operator+=(const N2d& o) {
  for (size_t i = 0; i < k.size(); ++i) k[i] += o.k[i];
  return *this;
}

N2d N2d::scaled(const Rat& c) const {
  N2d r = *this;
  for (auto& m : r.k) m = m.scaled(c);
  return r;
}

void N2d::validate() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      PIE2D_CHECK((at(i, j).vars() & ~vs2d_slot(i, j)) == 0, "2D slot variable set");
}

std::string N2d::to_string() const {
  std::ostringstream os;
  static const char* names[9] = {"N00", "N01", "N02", "N10", "N11", "N12", "N20", "N21", "N22"};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const PolyMatrix& m = at(i, j);
      if (m.is_zero()) continue;
      os << names[i * 3 + j] << " =\n" << m.to_string();
    }
  return os.str();
}

DxTriple::DxTriple(int n, int m)
    : D0(n, m, vs_x | vs(VNU)),
      D1(n, m, vs_x | vs(VTH) | vs(VNU)),
      D2(n, m, vs_x | vs(VTH) | vs(VNU)) {}

DxTriple& DxTriple::operator+=(const DxTriple& o) {
  D0 += o.D0;
  D1 += o.D1;
  D2 += o.D2;
  return *this;
}

DxTriple DxTriple::scaled(const Rat& c) const {
  DxTriple r = *this;
  r.D0 = D0.scaled(c);
  r.D1 = D1.scaled(c);
  r.D2 = D2.scaled(c);
  return r;
}

DyTriple::DyTriple(int n, int m)
    : D0(n, m, vs_y | vs(VTH)),
      D1(n, m, vs_y | vs(VTH) | vs(VNU)),
      D2(n, m, vs_y | vs(VTH) | vs(VNU)) {}

DyTriple& DyTriple::operator+=(const DyTriple& o) {
  D0 += o.D0;
  D1 += o.D1;
  D2 += o.D2;
  return *this;
}

DyTriple DyTriple::scaled(const Rat& c) const {
  DyTriple r = *this;
  r.D0 = D0.scaled(c);
  r.D1 = D1.scaled(c);
  r.D2 = D2.scaled(c);
  return r;
}

ExTriple::ExTriple(int n, int m)
    : E0(n, m, vs_xy), E1(n, m, vs_xy | vs(VTH)), E2(n, m, vs_xy | vs(VTH)) {}

ExTriple& ExTriple::operator+=(const ExTriple& o) {
  E0 += o.E0;
  E1 += o.E1;
  E2 += o.E2;
  return *this;
}

ExTriple ExTriple::scaled(const Rat& c) const {
  ExTriple r = *this;
  r.E0 = E0.scaled(c);
  r.E1 = E1.scaled(c);
  r.E2 = E2.scaled(c);
  return r;
}

EyTriple::EyTriple(int n, int m)
    : E0(n, m, vs_xy), E1(n, m, vs_xy | vs(VNU)), E2(n, m, vs_xy | vs(VNU)) {}

EyTriple& EyTriple::operator+=(const EyTriple& o) {
  E0 += o.E0;
  E1 += o.E1;
  E2 += o.E2;
  return *this;
}

EyTriple EyTriple::scaled(const Rat& c) const {
  EyTriple r = *this;
  r.E0 = E0.scaled(c);
  r.E1 = E1.scaled(c);
  r.E2 = E2.scaled(c);
  return r;
}

N011::N011(int n0_, int n1_, int m0_, int m1_)
    : n0(n0_),
      n1(n1_),
      m0(m0_),
      m1(m1_),
      B00(n0_, m0_, vs_none),
      B01(n0_, m1_, vs(VTH)),
      B02(n0_, m1_, vs(VNU)),
      B10(n1_, m0_, vs_x),
      B12(n1_, m1_, vs_x | vs(VNU)),
      B20(n1_, m0_, vs_y),
      B21(n1_, m1_, vs_y | vs(VTH)),
      B11(Dir::X, n1_, m1_),
      B22(Dir::Y, n1_, m1_) {}

N011 N011::identity(int n0, int n1) {
  N011 r(n0, n1, n0, n1);
  r.B00 = PolyMatrix::identity(n0);
  r.B11 = N1d::identity(Dir::X, n1);
  r.B22 = N1d::identity(Dir::Y, n1);
  return r;
}

N011 N011::embed_const(const RatMat& m, int n0, int n1, int m0, int m1) {
  PIE2D_CHECK(m.rows() == n0 + 2 * n1 && m.cols() == m0 + 2 * m1,
              "embedding shape mismatch");
  // Off-diagonal blocks of the (n0|n1|n1) x (m0|m1|m1) partition must vanish
  // for the diagonal 011 embedding to represent the matrix.
  auto block = [&](int r0, int c0, int nr, int nc) {
    RatMat b(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) b.at(i, j) = m.at(r0 + i, c0 + j);
    return b;
  };
  N011 r(n0, n1, m0, m1);
  r.B00 = block(0, 0, n0, m0).to_poly(vs_none);
  r.B11.N0 = block(n0, m0, n1, m1).to_poly(vs_none);
  r.B22.N0 = block(n0 + n1, m0 + m1, n1, m1).to_poly(vs_none);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      bool r0 = i < n0, r1 = !r0 && i < n0 + n1;
      bool c0 = j < m0, c1 = !c0 && j < m0 + m1;
      bool diag = (r0 && c0) || (r1 && c1) || (!r0 && !r1 && !c0 && !c1);
      if (!diag)
        PIE2D_CHECK(m.at(i, j) == 0, "matrix is not block-diagonal as a 011 operator");
    }
  return r;
}

bool N011::is_zero() const {
  return B00.is_zero() && B01.is_zero() && B02.is_zero() && B10.is_zero() &&
         B12.is_zero() && B20.is_zero() && B21.is_zero() && B11.is_zero() &&
         B22.is_zero();
}

int N011::degree() const {
  return std::max({B00.degree(), B01.degree(), B02.degree(), B10.degree(),
                   B12.degree(), B20.degree(), B21.degree(), B11.degree(),
                   B22.degree()});
}

N011& N011::operator+=(const N011& o) {
  PIE2D_CHECK(n0 == o.n0 && n1 == o.n1 && m0 == o.m0 && m1 == o.m1,
              "011 signature mismatch");
  B00 += o.B00;
  B01 += o.B01;
  B02 += o.B02;
  B10 += o.B10;
  B12 += o.B12;
  B20 += o.B20;
  B21 += o.B21;
  B11 += o.B11;
  B22 += o.B22;
  return *this;
}

N011 N011::scaled(const Rat& c) const {
  N011 r = *this;
  r.B00 = B00.scaled(c);
  r.B01 = B01.scaled(c);
  r.B02 = B02.scaled(c);
  r.B10 = B10.scaled(c);
  r.B12 = B12.scaled(c);
  r.B20 = B20.scaled(c);
  r.B21 = B21.scaled(c);
  r.B11 = B11.scaled(c);
  r.B22 = B22.scaled(c);
  return r;
}

void N011::validate() const {
  auto expect = [](const PolyMatrix& m, VarSet set, const char* what) {
    PIE2D_CHECK((m.vars() & ~set) == 0,
                std::string("011 slot variable set: ") + what);
  };
  expect(B00, vs_none, "B00");
  expect(B01, vs(VTH), "B01");
  expect(B02, vs(VNU), "B02");
  expect(B10, vs_x, "B10");
  expect(B12, vs_x | vs(VNU), "B12");
  expect(B20, vs_y, "B20");
  expect(B21, vs_y | vs(VTH), "B21");
  expect(B11.N0, vs_x, "B11.N0");
  expect(B11.N1, vs_xth, "B11.N1");
  expect(B11.N2, vs_xth, "B11.N2");
  expect(B22.N0, vs_y, "B22.N0");
  expect(B22.N1, vs_ynu, "B22.N1");
  expect(B22.N2, vs_ynu, "B22.N2");
}

N2dTo011::N2dTo011(int n0_, int n1_, int m2_)
    : n0(n0_), n1(n1_), m2(m2_), R0(n0_, m2_, vs(VTH) | vs(VNU)), Dx(n1_, m2_), Dy(n1_, m2_) {}

int N2dTo011::degree() const {
  return std::max({R0.degree(), Dx.D0.degree(), Dx.D1.degree(), Dx.D2.degree(),
                   Dy.D0.degree(), Dy.D1.degree(), Dy.D2.degree()});
}

N2dTo011& N2dTo011::operator+=(const N2dTo011& o) {
  PIE2D_CHECK(n0 == o.n0 && n1 == o.n1 && m2 == o.m2, "2D->011 signature mismatch");
  R0 += o.R0;
  Dx += o.Dx;
  Dy += o.Dy;
  return *this;
}

N2dTo011 N2dTo011::scaled(const Rat& c) const {
  N2dTo011 r = *this;
  r.R0 = R0.scaled(c);
  r.Dx = Dx.scaled(c);
  r.Dy = Dy.scaled(c);
  return r;
}

N011To2d::N011To2d(int n2_, int m0_, int m1_)
    : m0(m0_), m1(m1_), n2(n2_), C0(n2_, m0_, vs_xy), Ex(n2_, m1_), Ey(n2_, m1_) {}

int N011To2d::degree() const {
  return std::max({C0.degree(), Ex.E0.degree(), Ex.E1.degree(), Ex.E2.degree(),
                   Ey.E0.degree(), Ey.E1.degree(), Ey.E2.degree()});
}

N011To2d& N011To2d::operator+=(const N011To2d& o) {
  PIE2D_CHECK(n2 == o.n2 && m0 == o.m0 && m1 == o.m1, "011->2D signature mismatch");
  C0 += o.C0;
  Ex += o.Ex;
  Ey += o.Ey;
  return *this;
}

N011To2d N011To2d::scaled(const Rat& c) const {
  N011To2d r = *this;
  r.C0 = C0.scaled(c);
  r.Ex = Ex.scaled(c);
  r.Ey = Ey.scaled(c);
  return r;
}

N0112::N0112(int n0_, int n1_, int n2_, int m0_, int m1_, int m2_)
    : n0(n0_),
      n1(n1_),
      n2(n2_),
      m0(m0_),
      m1(m1_),
      m2(m2_),
      A11(n0_, n1_, m0_, m1_),
      A12(n0_, n1_, m2_),
      A21(n2_, m0_, m1_),
      A22(n2_, m2_) {}

N0112 N0112::identity(int n0, int n1, int n2) {
  N0112 r(n0, n1, n2, n0, n1, n2);
  r.A11 = N011::identity(n0, n1);
  r.A22 = N2d::identity(n2);
  return r;
}

N0112 N0112::embed_2d(const N2d& n) {
  N0112 r(0, 0, n.rows(), 0, 0, n.cols());
  r.A22 = n;
  return r;
}

bool N0112::is_zero() const {
  return A11.is_zero() && A12.is_zero() && A21.is_zero() && A22.is_zero();
}

int N0112::degree() const {
  return std::max({A11.degree(), A12.degree(), A21.degree(), A22.degree()});
}

N0112& N0112::operator+=(const N0112& o) {
  PIE2D_CHECK(n0 == o.n0 && n1 == o.n1 && n2 == o.n2 && m0 == o.m0 && m1 == o.m1 && m2 == o.m2,
              "0112 signature mismatch");
  A11 += o.A11;
  A12 += o.A12;
  A21 += o.A21;
  A22 += o.A22;
  return *this;
}

N0112 N0112::scaled(const Rat& c) const {
  N0112 r = *this;
  r.A11 = A11.scaled(c);
  r.A12 = A12.scaled(c);
  r.A21 = A21.scaled(c);
  r.A22 = A22.scaled(c);
  return r;
}

}  // namespace pie2d
