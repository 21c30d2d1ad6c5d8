#pragma once

#include <functional>
#include <vector>

#include "pie2d/poly.hpp"

namespace pie2d {

// Spatial rectangle [a,b] x [c,d] with exact rational bounds.
struct Rect {
  Rat a, b, c, d;
  Rect() : a(0), b(1), c(0), d(1) {}
  Rect(Rat a_, Rat b_, Rat c_, Rat d_) : a(a_), b(b_), c(c_), d(d_) {
    PIE2D_CHECK(a < b && c < d, "rectangle bounds must satisfy a < b, c < d");
  }
  bool operator==(const Rect&) const = default;
  // Lower/upper bound of the axis a variable lives on.
  Rat lo(Var v) const { return (v == VX || v == VTH || v == VET) ? a : c; }
  Rat hi(Var v) const { return (v == VX || v == VTH || v == VET) ? b : d; }
};

// Dense matrix of exact polynomials.  `allowed` is the VarSet bound every
// entry must respect; bundle constructors pass the slot's declared set.
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0), allowed_(vs_all4) {}
  PolyMatrix(int rows, int cols, VarSet allowed = vs_all4)
      : rows_(rows), cols_(cols), allowed_(allowed), e_(size_t(rows) * cols) {
    PIE2D_CHECK(rows >= 0 && cols >= 0, "negative dimension");
  }

  static PolyMatrix identity(int n);
  static PolyMatrix constant(int rows, int cols, const Rat& value);
  // 1x1 matrix holding a scalar polynomial.
  static PolyMatrix scalar(const Poly& p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  VarSet allowed() const { return allowed_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Poly& at(int r, int c) {
    PIE2D_CHECK(r >= 0 && r < rows_ && c >= 0 && c < cols_, "index out of range");
    return e_[size_t(r) * cols_ + c];
  }
  const Poly& at(int r, int c) const {
    PIE2D_CHECK(r >= 0 && r < rows_ && c >= 0 && c < cols_, "index out of range");
    return e_[size_t(r) * cols_ + c];
  }

  bool is_zero() const;
  bool operator==(const PolyMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  int degree() const;
  int degree_in(Var v) const;
  VarSet vars() const;
  void check_vars(const char* what) const;  // throws if an entry leaves `allowed`

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix scaled(const Rat& c) const;
  PolyMatrix operator-() const { return scaled(Rat(-1)); }
  PolyMatrix transpose() const;

  PolyMatrix map(const std::function<Poly(const Poly&)>& f, VarSet allowed) const;
  PolyMatrix subst(Var v, const Bound& b) const;
  PolyMatrix swapped(Var v, Var w) const;
  PolyMatrix diff(Var v) const;
  PolyMatrix integrate(Var v, const Bound& lo, const Bound& hi) const;

  PolyMatrix block(int r0, int c0, int nr, int nc) const;
  static PolyMatrix vcat(const std::vector<PolyMatrix>& parts);
  static PolyMatrix hcat(const std::vector<PolyMatrix>& parts);

  std::string to_string() const;

 private:
  int rows_, cols_;
  VarSet allowed_;
  std::vector<Poly> e_;
};

// Dense exact rational matrix; constant blocks, exact inverses and rank.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, Rat(0)) {}
  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

  RatMat& operator+=(const RatMat& o);
  friend RatMat operator+(RatMat a, const RatMat& b) { return a += b; }
  friend RatMat operator-(const RatMat& a, const RatMat& b);
  friend RatMat operator*(const RatMat& a, const RatMat& b);
  RatMat scaled(const Rat& c) const;
  RatMat transpose() const;
  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool is_zero() const;

  int rank() const;
  // Exact inverse; throws Error("singular: <what>") when rank-deficient.
  RatMat inverse(const char* what = "matrix") const;

  PolyMatrix to_poly(VarSet allowed = vs_none) const;
  static RatMat from_poly(const PolyMatrix& m);  // entries must be constant

 private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

}  // namespace pie2d
