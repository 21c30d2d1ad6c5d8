#include "pie2d/verify.hpp"

#include <cmath>

namespace pie2d {

GaussLegendre::GaussLegendre(int order) {
  PIE2D_CHECK(order >= 1, "quadrature order must be positive");
  node.resize(order);
  weight.resize(order);
  // Newton iteration on Legendre polynomials.
  for (int i = 0; i < order; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = order * (x * p1 - p0) / (x * x - 1.0);
    node[order - 1 - i] = x;
    weight[order - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

KernelEval::KernelEval(const PolyMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      for (auto& [mono, coeff] : m.at(r, c).terms()) {
        PIE2D_CHECK(mono.e[VET] == 0 && mono.e[VMU] == 0, "kernel contains a dummy variable");
        Term t;
        t.r = r;
        t.c = c;
        for (int i = 0; i < 4; ++i) t.e[i] = mono.e[i];
        t.coeff = to_double(coeff);
        terms_.push_back(t);
      }
}

Eigen::MatrixXd KernelEval::eval(const std::array<double, 4>& pt) const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(rows_, cols_);
  for (const auto& t : terms_) {
    double v = t.coeff;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < t.e[i]; ++k) v *= pt[i];
    out(t.r, t.c) += v;
  }
  return out;
}

PiNumeric::PiNumeric(const Rect& rect, int order)
    : rect_(rect),
      order_(order),
      gl_(order),
      a_(to_double(rect.a)),
      b_(to_double(rect.b)),
      c_(to_double(rect.c)),
      d_(to_double(rect.d)) {
  for (int i = 0; i < order_; ++i) {
    nx_.push_back(0.5 * (a_ + b_) + 0.5 * (b_ - a_) * gl_.node[i]);
    ny_.push_back(0.5 * (c_ + d_) + 0.5 * (d_ - c_) * gl_.node[i]);
  }
  // Barycentric weights on the reference nodes.
  wbary_.assign(order_, 1.0);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j)
      if (i != j) wbary_[i] /= (gl_.node[i] - gl_.node[j]);
}

Vec PiNumeric::integrate_1d(const std::function<Vec(double)>& f, double lo, double hi,
                            int dim) const {
  Vec acc = Vec::Zero(dim);
  if (hi <= lo) return acc;
  double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int i = 0; i < order_; ++i)
    acc += (half * gl_.weight[i]) * f(mid + half * gl_.node[i]);
  return acc;
}

Fn1D PiNumeric::bind_1d(const N1d& N, Fn1D u) const {
  KernelEval k0(N.N0), k1(N.N1), k2(N.N2);
  bool isx = N.dir == Dir::X;
  double lo = isx ? a_ : c_, hi = isx ? b_ : d_;
  int n = N.rows();
  const PiNumeric* self = this;
  return [self, k0, k1, k2, isx, lo, hi, n, u](double t) -> Vec {
    auto pt = [&](double out, double in) {
      std::array<double, 4> p{0, 0, 0, 0};
      if (isx) {
        p[VX] = out;
        p[VTH] = in;
      } else {
        p[VY] = out;
        p[VNU] = in;
      }
      return p;
    };
    Vec acc = Vec::Zero(n);
    if (!k0.is_zero()) acc += k0.eval(pt(t, 0)) * u(t);
    if (!k1.is_zero())
      acc += self->integrate_1d([&](double s) -> Vec { return k1.eval(pt(t, s)) * u(s); }, lo, t, n);
    if (!k2.is_zero())
      acc += self->integrate_1d([&](double s) -> Vec { return k2.eval(pt(t, s)) * u(s); }, t, hi, n);
    return acc;
  };
}

Fn2D PiNumeric::bind_2d(const N2d& N, Fn2D u) const {
  std::array<KernelEval, 9> k;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) k[i * 3 + j] = KernelEval(N.at(i, j));
  int n = N.rows();
  const PiNumeric* self = this;
  double a = a_, b = b_, c = c_, d = d_;
  return [self, k, n, u, a, b, c, d](double x, double y) -> Vec {
    Vec acc = Vec::Zero(n);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const KernelEval& ke = k[i * 3 + j];
        if (ke.is_zero()) continue;
        double xlo = i == 1 ? a : x, xhi = i == 1 ? x : b;
        double ylo = j == 1 ? c : y, yhi = j == 1 ? y : d;
        if (i == 0 && j == 0) {
          acc += ke.eval({x, y, 0, 0}) * u(x, y);
        } else if (i == 0) {
          acc += self->integrate_1d(
              [&](double nu) -> Vec { return ke.eval({x, y, 0, nu}) * u(x, nu); }, ylo, yhi, n);
        } else if (j == 0) {
          acc += self->integrate_1d(
              [&](double th) -> Vec { return ke.eval({x, y, th, 0}) * u(th, y); }, xlo, xhi, n);
        } else {
          acc += self->integrate_1d(
              [&](double th) -> Vec {
                return self->integrate_1d(
                    [&](double nu) -> Vec { return ke.eval({x, y, th, nu}) * u(th, nu); }, ylo,
                    yhi, n);
              },
              xlo, xhi, n);
        }
      }
    return acc;
  };
}

RLFn PiNumeric::bind_011(const N011& B, const RLFn& u) const {
  KernelEval b00(B.B00), b01(B.B01), b02(B.B02), b10(B.B10), b12(B.B12), b20(B.B20), b21(B.B21);
  RLFn out;
  Vec head = Vec::Zero(B.n0);
  if (!b00.is_zero()) head += b00.eval({0, 0, 0, 0}) * u.v0;
  if (!b01.is_zero())
    head += integrate_1d([&](double th) -> Vec { return b01.eval({0, 0, th, 0}) * u.fx(th); }, a_,
                         b_, B.n0);
  if (!b02.is_zero())
    head += integrate_1d([&](double nu) -> Vec { return b02.eval({0, 0, 0, nu}) * u.fy(nu); }, c_,
                         d_, B.n0);
  out.v0 = head;

  Fn1D diag_x = bind_1d(B.B11, u.fx);
  Fn1D diag_y = bind_1d(B.B22, u.fy);
  const PiNumeric* self = this;
  int n1 = B.n1;
  double a = a_, b = b_, c = c_, d = d_;
  Vec v0 = u.v0;
  Fn1D ufx = u.fx, ufy = u.fy;
  out.fx = [self, b10, b12, diag_x, v0, ufy, n1, c, d](double x) -> Vec {
    Vec acc = diag_x(x);
    if (!b10.is_zero()) acc += b10.eval({x, 0, 0, 0}) * v0;
    if (!b12.is_zero())
      acc += self->integrate_1d(
          [&](double nu) -> Vec { return b12.eval({x, 0, 0, nu}) * ufy(nu); }, c, d, n1);
    return acc;
  };
  out.fy = [self, b20, b21, diag_y, v0, ufx, n1, a, b](double y) -> Vec {
    Vec acc = diag_y(y);
    if (!b20.is_zero()) acc += b20.eval({0, y, 0, 0}) * v0;
    if (!b21.is_zero())
      acc += self->integrate_1d(
          [&](double th) -> Vec { return b21.eval({0, y, th, 0}) * ufx(th); }, a, b, n1);
    return acc;
  };
  return out;
}

RLFn PiNumeric::bind_2dto011(const N2dTo011& D, Fn2D u) const {
  KernelEval r0(D.R0), dx0(D.Dx.D0), dx1(D.Dx.D1), dx2(D.Dx.D2), dy0(D.Dy.D0), dy1(D.Dy.D1),
      dy2(D.Dy.D2);
  RLFn out;
  out.v0 = integrate_1d(
      [&](double th) -> Vec {
        return integrate_1d(
            [&](double nu) -> Vec { return r0.eval({0, 0, th, nu}) * u(th, nu); }, c_, d_, D.n0);
      },
      a_, b_, D.n0);
  const PiNumeric* self = this;
  int n1 = D.n1;
  double a = a_, b = b_, c = c_, d = d_;
  out.fx = [self, dx0, dx1, dx2, u, n1, a, b, c, d](double x) -> Vec {
    return self->integrate_1d(
        [&](double nu) -> Vec {
          Vec acc = Vec::Zero(n1);
          if (!dx0.is_zero()) acc += dx0.eval({x, 0, 0, nu}) * u(x, nu);
          if (!dx1.is_zero())
            acc += self->integrate_1d(
                [&](double th) -> Vec { return dx1.eval({x, 0, th, nu}) * u(th, nu); }, a, x, n1);
          if (!dx2.is_zero())
            acc += self->integrate_1d(
                [&](double th) -> Vec { return dx2.eval({x, 0, th, nu}) * u(th, nu); }, x, b, n1);
          return acc;
        },
        c, d, n1);
  };
  out.fy = [self, dy0, dy1, dy2, u, n1, a, b, c, d](double y) -> Vec {
    return self->integrate_1d(
        [&](double th) -> Vec {
          Vec acc = Vec::Zero(n1);
          if (!dy0.is_zero()) acc += dy0.eval({0, y, th, 0}) * u(th, y);
          if (!dy1.is_zero())
            acc += self->integrate_1d(
                [&](double nu) -> Vec { return dy1.eval({0, y, th, nu}) * u(th, nu); }, c, y, n1);
          if (!dy2.is_zero())
            acc += self->integrate_1d(
                [&](double nu) -> Vec { return dy2.eval({0, y, th, nu}) * u(th, nu); }, y, d, n1);
          return acc;
        },
        a, b, n1);
  };
  return out;
}

Fn2D PiNumeric::bind_011to2d(const N011To2d& E, const RLFn& u) const {
  KernelEval c0(E.C0), ex0(E.Ex.E0), ex1(E.Ex.E1), ex2(E.Ex.E2), ey0(E.Ey.E0), ey1(E.Ey.E1),
      ey2(E.Ey.E2);
  const PiNumeric* self = this;
  int n = E.n2;
  double a = a_, b = b_, c = c_, d = d_;
  Vec v0 = u.v0;
  Fn1D ufx = u.fx, ufy = u.fy;
  return [=](double x, double y) -> Vec {
    Vec acc = Vec::Zero(n);
    if (!c0.is_zero()) acc += c0.eval({x, y, 0, 0}) * v0;
    if (!ex0.is_zero()) acc += ex0.eval({x, y, 0, 0}) * ufx(x);
    if (!ex1.is_zero())
      acc += self->integrate_1d(
          [&](double th) -> Vec { return ex1.eval({x, y, th, 0}) * ufx(th); }, a, x, n);
    if (!ex2.is_zero())
      acc += self->integrate_1d(
          [&](double th) -> Vec { return ex2.eval({x, y, th, 0}) * ufx(th); }, x, b, n);
    if (!ey0.is_zero()) acc += ey0.eval({x, y, 0, 0}) * ufy(y);
    if (!ey1.is_zero())
      acc += self->integrate_1d(
          [&](double nu) -> Vec { return ey1.eval({x, y, 0, nu}) * ufy(nu); }, c, y, n);
    if (!ey2.is_zero())
      acc += self->integrate_1d(
          [&](double nu) -> Vec { return ey2.eval({x, y, 0, nu}) * ufy(nu); }, y, d, n);
    return acc;
  };
}

RLLFn PiNumeric::bind_0112(const N0112& C, const RLLFn& u) const {
  RLFn rl{u.v0, u.fx, u.fy};
  RLFn top = bind_011(C.A11, rl);
  RLFn top2 = bind_2dto011(C.A12, u.f2);
  RLLFn out;
  out.v0 = top.v0 + top2.v0;
  Fn1D tfx = top.fx, t2fx = top2.fx;
  out.fx = [tfx, t2fx](double x) -> Vec { return tfx(x) + t2fx(x); };
  Fn1D tfy = top.fy, t2fy = top2.fy;
  out.fy = [tfy, t2fy](double y) -> Vec { return tfy(y) + t2fy(y); };
  Fn2D lower = bind_011to2d(C.A21, rl);
  Fn2D lower2 = bind_2d(C.A22, u.f2);
  out.f2 = [lower, lower2](double x, double y) -> Vec { return lower(x, y) + lower2(x, y); };
  return out;
}

Fn1D PiNumeric::tabulate_1d(Dir dir, const Fn1D& f) const {
  const std::vector<double>& nodes = dir == Dir::X ? nx_ : ny_;
  double lo = dir == Dir::X ? a_ : c_, hi = dir == Dir::X ? b_ : d_;
  std::vector<Vec> vals;
  vals.reserve(order_);
  for (double t : nodes) vals.push_back(f(t));
  int n = order_;
  std::vector<double> wb = wbary_;
  double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  std::vector<double> ref(gl_.node);
  return [vals, wb, ref, n, mid, half](double t) -> Vec {
    double s = (t - mid) / half;
    double denom = 0;
    Vec num = Vec::Zero(vals[0].size());
    for (int i = 0; i < n; ++i) {
      double diff = s - ref[i];
      if (std::abs(diff) < 1e-14) return vals[i];
      double w = wb[i] / diff;
      num += w * vals[i];
      denom += w;
    }
    return num / denom;
  };
}

Fn2D PiNumeric::tabulate_2d(const Fn2D& f) const {
  std::vector<Vec> vals;
  vals.reserve(size_t(order_) * order_);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) vals.push_back(f(nx_[i], ny_[j]));
  int n = order_;
  std::vector<double> wb = wbary_;
  std::vector<double> ref(gl_.node);
  double midx = 0.5 * (a_ + b_), halfx = 0.5 * (b_ - a_);
  double midy = 0.5 * (c_ + d_), halfy = 0.5 * (d_ - c_);
  return [vals, wb, ref, n, midx, halfx, midy, halfy](double x, double y) -> Vec {
    double sx = (x - midx) / halfx, sy = (y - midy) / halfy;
    std::vector<double> cx(n), cy(n);
    double dx = 0, dy = 0;
    int exact_i = -1, exact_j = -1;
    for (int i = 0; i < n; ++i) {
      double diff = sx - ref[i];
      if (std::abs(diff) < 1e-14) exact_i = i;
      cx[i] = wb[i] / diff;
      dx += cx[i];
    }
    for (int j = 0; j < n; ++j) {
      double diff = sy - ref[j];
      if (std::abs(diff) < 1e-14) exact_j = j;
      cy[j] = wb[j] / diff;
      dy += cy[j];
    }
    Vec acc = Vec::Zero(vals[0].size());
    if (exact_i >= 0 && exact_j >= 0) return vals[size_t(exact_i) * n + exact_j];
    if (exact_i >= 0) {
      for (int j = 0; j < n; ++j) acc += cy[j] * vals[size_t(exact_i) * n + j];
      return acc / dy;
    }
    if (exact_j >= 0) {
      for (int i = 0; i < n; ++i) acc += cx[i] * vals[size_t(i) * n + exact_j];
      return acc / dx;
    }
    for (int i = 0; i < n; ++i) {
      Vec row = Vec::Zero(vals[0].size());
      for (int j = 0; j < n; ++j) row += cy[j] * vals[size_t(i) * n + j];
      acc += cx[i] * row;
    }
    return acc / (dx * dy);
  };
}

RLFn PiNumeric::tabulate_rl(const RLFn& f) const {
  RLFn out;
  out.v0 = f.v0;
  out.fx = tabulate_1d(Dir::X, f.fx);
  out.fy = tabulate_1d(Dir::Y, f.fy);
  return out;
}

double PiNumeric::inner_product(const Fn2D& f, const Fn2D& g) const {
  Vec one = integrate_1d(
      [&](double x) -> Vec {
        return integrate_1d(
            [&](double y) -> Vec { return Vec::Constant(1, f(x, y).dot(g(x, y))); }, c_, d_, 1);
      },
      a_, b_, 1);
  return one(0);
}

double PiNumeric::inner_product_1d(Dir dir, const Fn1D& f, const Fn1D& g) const {
  double lo = dir == Dir::X ? a_ : c_, hi = dir == Dir::X ? b_ : d_;
  Vec one =
      integrate_1d([&](double t) -> Vec { return Vec::Constant(1, f(t).dot(g(t))); }, lo, hi, 1);
  return one(0);
}

double PiNumeric::rll_inner_product(const RLLFn& f, const RLLFn& g) const {
  double acc = f.v0.size() ? f.v0.dot(g.v0) : 0.0;
  if (f.fx) acc += inner_product_1d(Dir::X, f.fx, g.fx);
  if (f.fy) acc += inner_product_1d(Dir::Y, f.fy, g.fy);
  if (f.f2) acc += inner_product(f.f2, g.f2);
  return acc;
}

double PiNumeric::fd_derivative_check(const N2d& N, const N2d& dN, Dir dir, const Fn2D& u,
                                      double h) const {
  Fn2D base = bind_2d(N, u);
  Fn2D sym = bind_2d(dN, u);
  double worst = 0;
  for (int i = 1; i + 1 < order_; ++i)
    for (int j = 1; j + 1 < order_; ++j) {
      double x = nx_[i], y = ny_[j];
      Vec plus = dir == Dir::X ? base(x + h, y) : base(x, y + h);
      Vec minus = dir == Dir::X ? base(x - h, y) : base(x, y - h);
      Vec fd = (plus - minus) / (2 * h);
      worst = std::max(worst, (fd - sym(x, y)).lpNorm<Eigen::Infinity>());
    }
  return worst;
}

double PiNumeric::grid_sup_2d(const Fn2D& f, const Fn2D& g) const {
  double worst = 0;
  for (double x : nx_)
    for (double y : ny_) worst = std::max(worst, (f(x, y) - g(x, y)).lpNorm<Eigen::Infinity>());
  return worst;
}

double PiNumeric::grid_mag_2d(const Fn2D& f) const {
  double worst = 0;
  for (double x : nx_)
    for (double y : ny_) worst = std::max(worst, f(x, y).lpNorm<Eigen::Infinity>());
  return worst;
}

Fn2D as_fn2d(const PolyMatrix& m) {
  KernelEval k(m);
  return [k](double x, double y) -> Vec {
    Eigen::MatrixXd v = k.eval({x, y, 0, 0});
    return v.col(0);
  };
}

Fn1D as_fn1d(const PolyMatrix& m, Var v) {
  KernelEval k(m);
  return [k, v](double t) -> Vec {
    std::array<double, 4> pt{0, 0, 0, 0};
    pt[v] = t;
    Eigen::MatrixXd val = k.eval(pt);
    return val.col(0);
  };
}

}  // namespace pie2d
