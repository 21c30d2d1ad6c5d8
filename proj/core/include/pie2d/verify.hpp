#pragma once

#include <Eigen/Dense>

#include <functional>

#include "pie2d/pi_types.hpp"

namespace pie2d {

using Vec = Eigen::VectorXd;
using Fn1D = std::function<Vec(double)>;
using Fn2D = std::function<Vec(double, double)>;

// Function on R^m0 x L2^m1[x] x L2^m1[y].
struct RLFn {
  Vec v0;
  Fn1D fx, fy;
};

// Function on R^m0 x L2^m1[x] x L2^m1[y] x L2^m2[x,y].
struct RLLFn {
  Vec v0;
  Fn1D fx, fy;
  Fn2D f2;
};

struct GaussLegendre {
  std::vector<double> node, weight;  // on [-1, 1]
  explicit GaussLegendre(int order);
};

// Double-precision evaluator compiled from a PolyMatrix.
class KernelEval {
 public:
  KernelEval() = default;
  explicit KernelEval(const PolyMatrix& m);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  // pt indexed by Var; only x,y,th,nu are read.
  Eigen::MatrixXd eval(const std::array<double, 4>& pt) const;
  bool is_zero() const { return terms_.empty(); }

 private:
  struct Term {
    int r, c;
    std::array<uint8_t, 4> e;
    double coeff;
  };
  int rows_ = 0, cols_ = 0;
  std::vector<Term> terms_;
};

// Gauss-Legendre application of PI operator parameters to sampled functions.
// Exact for polynomial kernels and arguments of combined degree <= 2*order-1.
// bind_* compiles the kernels once and returns a callable; tabulate_* samples
// a function on the tensor grid and returns the barycentric interpolant
// (exact for polynomials of per-variable degree < order), which keeps chained
// operator applications from nesting quadratures.
class PiNumeric {
 public:
  PiNumeric(const Rect& rect, int order = 12);

  const Rect& rect() const { return rect_; }
  int order() const { return order_; }
  const std::vector<double>& nodes_x() const { return nx_; }
  const std::vector<double>& nodes_y() const { return ny_; }

  Fn1D bind_1d(const N1d& N, Fn1D u) const;
  Fn2D bind_2d(const N2d& N, Fn2D u) const;
  RLFn bind_011(const N011& B, const RLFn& u) const;
  RLFn bind_2dto011(const N2dTo011& D, Fn2D u) const;
  Fn2D bind_011to2d(const N011To2d& E, const RLFn& u) const;
  RLLFn bind_0112(const N0112& C, const RLLFn& u) const;

  Vec apply_1d(const N1d& N, const Fn1D& u, double t) const { return bind_1d(N, u)(t); }
  Vec apply_2d(const N2d& N, const Fn2D& u, double x, double y) const {
    return bind_2d(N, u)(x, y);
  }

  Fn1D tabulate_1d(Dir dir, const Fn1D& f) const;
  Fn2D tabulate_2d(const Fn2D& f) const;
  RLFn tabulate_rl(const RLFn& f) const;

  double inner_product(const Fn2D& f, const Fn2D& g) const;
  double inner_product_1d(Dir dir, const Fn1D& f, const Fn1D& g) const;
  double rll_inner_product(const RLLFn& f, const RLLFn& g) const;

  // Central finite differences of P[N]u against P[dN]u; sup over the interior
  // tensor grid.
  double fd_derivative_check(const N2d& N, const N2d& dN, Dir dir, const Fn2D& u,
                             double h = 1e-4) const;

  double grid_sup_2d(const Fn2D& f, const Fn2D& g) const;
  double grid_mag_2d(const Fn2D& f) const;

  Vec integrate_1d(const std::function<Vec(double)>& f, double lo, double hi, int dim) const;

 private:
  Rect rect_;
  int order_;
  GaussLegendre gl_;
  double a_, b_, c_, d_;
  std::vector<double> nx_, ny_, wbary_;
};

// Turns a symbolic vector-valued polynomial (rows x 1 PolyMatrix) into a
// sampled function.
Fn2D as_fn2d(const PolyMatrix& m);
Fn1D as_fn1d(const PolyMatrix& m, Var v);

}  // namespace pie2d
