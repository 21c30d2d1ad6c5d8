#pragma once

#include "pie2d/polymatrix.hpp"

namespace pie2d {

// Axis a 1D bundle acts along: X pairs (x, th) on [a,b], Y pairs (y, nu) on [c,d].
enum class Dir { X, Y };

inline Var dir_out(Dir d) { return d == Dir::X ? VX : VY; }
inline Var dir_in(Dir d) { return d == Dir::X ? VTH : VNU; }
inline Var dir_dummy(Dir d) { return d == Dir::X ? VET : VMU; }

// 1D PI operator parameters {N0, N1, N2}:
//   (P[N]u)(x) = N0(x)u(x) + int_a^x N1(x,th)u(th)dth + int_x^b N2(x,th)u(th)dth
// (with (y, nu, [c,d]) for Dir::Y).
struct N1d {
  Dir dir = Dir::X;
  PolyMatrix N0, N1, N2;

  N1d() = default;
  N1d(Dir d, int n, int m);
  static N1d identity(Dir d, int n);
  static N1d multiplier(Dir d, const PolyMatrix& m);

  int rows() const { return N0.rows(); }
  int cols() const { return N0.cols(); }
  bool is_zero() const { return N0.is_zero() && N1.is_zero() && N2.is_zero(); }
  int degree() const;
  N1d& operator+=(const N1d& o);
  friend N1d operator+(N1d a, const N1d& b) { return a += b; }
  N1d scaled(const Rat& c) const;
  bool operator==(const N1d&) const = default;
  void validate() const;
};

// 2D PI operator parameters N_ij; i indexes the x-action and j the y-action
// (0 multiplier, 1 lower integral, 2 upper integral).
struct N2d {
  std::array<PolyMatrix, 9> k;  // k[i*3+j]
  N2d() = default;
  N2d(int n, int m);
  static N2d identity(int n);
  static N2d multiplier(const PolyMatrix& m);

  PolyMatrix& at(int i, int j) { return k[size_t(i) * 3 + j]; }
  const PolyMatrix& at(int i, int j) const { return k[size_t(i) * 3 + j]; }

  int rows() const { return k[0].rows(); }
  int cols() const { return k[0].cols(); }
  bool is_zero() const;
  int degree() const;
  N2d& operator+=(const N2d& o);
  friend N2d operator+(N2d a, const N2d& b) { return a += b; }
  N2d scaled(const Rat& c) const;
  bool operator==(const N2d&) const = default;
  void validate() const;

  std::string to_string() const;
};

// Row of a 0112 operator mapping L2[x,y] into L2[x]:
//   (P[D]u)(x) = int_c^d [ D0(x,nu)u(x,nu) + int_a^x D1(x,th,nu)u(th,nu)dth
//                          + int_x^b D2(x,th,nu)u(th,nu)dth ] dnu
struct DxTriple {
  PolyMatrix D0, D1, D2;
  DxTriple() = default;
  DxTriple(int n, int m);
  int rows() const { return D0.rows(); }
  int cols() const { return D0.cols(); }
  bool is_zero() const { return D0.is_zero() && D1.is_zero() && D2.is_zero(); }
  DxTriple& operator+=(const DxTriple& o);
  friend DxTriple operator+(DxTriple a, const DxTriple& b) { return a += b; }
  DxTriple scaled(const Rat& c) const;
  bool operator==(const DxTriple&) const = default;
};

// Mirror of DxTriple mapping L2[x,y] into L2[y]:
//   (P[D]u)(y) = int_a^b [ D0(y,th)u(th,y) + ... ] dth with the nu-split kernels D1, D2.
struct DyTriple {
  PolyMatrix D0, D1, D2;
  DyTriple() = default;
  DyTriple(int n, int m);
  int rows() const { return D0.rows(); }
  int cols() const { return D0.cols(); }
  bool is_zero() const { return D0.is_zero() && D1.is_zero() && D2.is_zero(); }
  DyTriple& operator+=(const DyTriple& o);
  friend DyTriple operator+(DyTriple a, const DyTriple& b) { return a += b; }
  DyTriple scaled(const Rat& c) const;
  bool operator==(const DyTriple&) const = default;
};

// Column of a 0112 operator mapping L2[x] into L2[x,y]:
//   (P[E]u)(x,y) = E0(x,y)u(x) + int_a^x E1(x,y,th)u(th)dth + int_x^b E2(x,y,th)u(th)dth
struct ExTriple {
  PolyMatrix E0, E1, E2;
  ExTriple() = default;
  ExTriple(int n, int m);
  int rows() const { return E0.rows(); }
  int cols() const { return E0.cols(); }
  bool is_zero() const { return E0.is_zero() && E1.is_zero() && E2.is_zero(); }
  ExTriple& operator+=(const ExTriple& o);
  friend ExTriple operator+(ExTriple a, const ExTriple& b) { return a += b; }
  ExTriple scaled(const Rat& c) const;
  bool operator==(const ExTriple&) const = default;
};

// Mirror of ExTriple mapping L2[y] into L2[x,y] with the nu-split kernels.
struct EyTriple {
  PolyMatrix E0, E1, E2;
  EyTriple() = default;
  EyTriple(int n, int m);
  int rows() const { return E0.rows(); }
  int cols() const { return E0.cols(); }
  bool is_zero() const { return E0.is_zero() && E1.is_zero() && E2.is_zero(); }
  EyTriple& operator+=(const EyTriple& o);
  friend EyTriple operator+(EyTriple a, const EyTriple& b) { return a += b; }
  EyTriple scaled(const Rat& c) const;
  bool operator==(const EyTriple&) const = default;
};

// 011 operator on R^m0 x L2^m1[x] x L2^m1[y].  Off-diagonal kernels follow
// the appendix conventions: B01(th), B02(nu), B10(x), B12(x,nu), B20(y),
// B21(y,th); B11 is an x-direction and B22 a y-direction 1D bundle.
struct N011 {
  int n0 = 0, n1 = 0, m0 = 0, m1 = 0;
  PolyMatrix B00, B01, B02, B10, B12, B20, B21;
  N1d B11, B22;

  N011() = default;
  N011(int n0_, int n1_, int m0_, int m1_);
  static N011 identity(int n0, int n1);
  // Diagonal embedding of a constant matrix, split (n0|n1|n1) x (m0|m1|m1).
  static N011 embed_const(const RatMat& m, int n0, int n1, int m0, int m1);

  bool is_zero() const;
  int degree() const;
  N011& operator+=(const N011& o);
  friend N011 operator+(N011 a, const N011& b) { return a += b; }
  N011 scaled(const Rat& c) const;
  bool operator==(const N011&) const = default;
  void validate() const;
};

// Operator from L2[x,y] to R^n0 x L2^n1[x] x L2^n1[y]; R0(th,nu) integrates
// over the whole rectangle.
struct N2dTo011 {
  int n0 = 0, n1 = 0, m2 = 0;
  PolyMatrix R0;
  DxTriple Dx;
  DyTriple Dy;

  N2dTo011() = default;
  N2dTo011(int n0_, int n1_, int m2_);
  bool is_zero() const { return R0.is_zero() && Dx.is_zero() && Dy.is_zero(); }
  int degree() const;
  N2dTo011& operator+=(const N2dTo011& o);
  friend N2dTo011 operator+(N2dTo011 a, const N2dTo011& b) { return a += b; }
  N2dTo011 scaled(const Rat& c) const;
  bool operator==(const N2dTo011&) const = default;
};

// Operator from R^m0 x L2^m1[x] x L2^m1[y] to L2[x,y].
struct N011To2d {
  int m0 = 0, m1 = 0, n2 = 0;
  PolyMatrix C0;
  ExTriple Ex;
  EyTriple Ey;

  N011To2d() = default;
  N011To2d(int n2_, int m0_, int m1_);
  bool is_zero() const { return C0.is_zero() && Ex.is_zero() && Ey.is_zero(); }
  int degree() const;
  N011To2d& operator+=(const N011To2d& o);
  friend N011To2d operator+(N011To2d a, const N011To2d& b) { return a += b; }
  N011To2d scaled(const Rat& c) const;
  bool operator==(const N011To2d&) const = default;
};

// Full 0112 operator on R^m0 x L2^m1[x] x L2^m1[y] x L2^m2[x,y].
struct N0112 {
  int n0 = 0, n1 = 0, n2 = 0, m0 = 0, m1 = 0, m2 = 0;
  N011 A11;
  N2dTo011 A12;
  N011To2d A21;
  N2d A22;

  N0112() = default;
  N0112(int n0_, int n1_, int n2_, int m0_, int m1_, int m2_);
  static N0112 identity(int n0, int n1, int n2);
  static N0112 embed_2d(const N2d& n);  // boundary blocks empty

  bool is_zero() const;
  int degree() const;
  N0112& operator+=(const N0112& o);
  friend N0112 operator+(N0112 a, const N0112& b) { return a += b; }
  N0112 scaled(const Rat& c) const;
  bool operator==(const N0112&) const = default;
};

}  // namespace pie2d
