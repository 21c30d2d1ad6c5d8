#include "pie2d/polymatrix.hpp"

#include <sstream>

namespace pie2d {

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n, vs_none);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(Rat(1));
  return m;
}

PolyMatrix PolyMatrix::constant(int rows, int cols, const Rat& value) {
  PolyMatrix m(rows, cols, vs_none);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Poly::constant(value);
  return m;
}

PolyMatrix PolyMatrix::scalar(const Poly& p) {
  PolyMatrix m(1, 1, p.vars());
  m.at(0, 0) = p;
  return m;
}

bool PolyMatrix::is_zero() const {
  for (auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

int PolyMatrix::degree() const {
  int d = -1;
  for (auto& p : e_) d = std::max(d, p.degree());
  return d;
}

int PolyMatrix::degree_in(Var v) const {
  int d = 0;
  for (auto& p : e_) d = std::max(d, p.degree_in(v));
  return d;
}

VarSet PolyMatrix::vars() const {
  VarSet s = 0;
  for (auto& p : e_) s |= p.vars();
  return s;
}

void PolyMatrix::check_vars(const char* what) const {
  for (auto& p : e_)
    PIE2D_CHECK((p.vars() & ~allowed_) == 0,
                std::string("entry uses a variable outside its slot's set: ") + what);
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  PIE2D_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "dimension mismatch in add");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  allowed_ |= o.allowed_;
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  PIE2D_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "dimension mismatch in sub");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  allowed_ |= o.allowed_;
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  PIE2D_CHECK(a.cols_ == b.rows_, "dimension mismatch in mul");
  PolyMatrix r(a.rows_, b.cols_, vs_union(a.allowed_, b.allowed_));
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Poly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Poly& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

PolyMatrix PolyMatrix::scaled(const Rat& c) const {
  PolyMatrix r(rows_, cols_, allowed_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].scaled(c);
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(cols_, rows_, allowed_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

PolyMatrix PolyMatrix::map(const std::function<Poly(const Poly&)>& f, VarSet allowed) const {
  PolyMatrix r(rows_, cols_, allowed);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f(e_[i]);
  return r;
}

PolyMatrix PolyMatrix::subst(Var v, const Bound& b) const {
  VarSet a = allowed_ & ~vs(v);
  if (b.kind == Bound::Variable && b.v < 4) a |= vs(b.v);
  return map([&](const Poly& p) { return p.subst(v, b); }, a);
}

PolyMatrix PolyMatrix::swapped(Var v, Var w) const {
  VarSet a = allowed_;
  bool hv = vs_contains(a, v), hw = vs_contains(a, w);
  a &= ~(vs(v) | vs(w));
  if (hv && w < 4) a |= vs(w);
  if (hw && v < 4) a |= vs(v);
  return map([&](const Poly& p) { return p.swapped(v, w); }, a);
}

PolyMatrix PolyMatrix::diff(Var v) const {
  return map([&](const Poly& p) { return p.diff(v); }, allowed_);
}

PolyMatrix PolyMatrix::integrate(Var v, const Bound& lo, const Bound& hi) const {
  VarSet a = allowed_ & ~vs(v);
  if (lo.kind == Bound::Variable && lo.v < 4) a |= vs(lo.v);
  if (hi.kind == Bound::Variable && hi.v < 4) a |= vs(hi.v);
  return map([&](const Poly& p) { return p.integrate(v, lo, hi); }, a);
}

PolyMatrix PolyMatrix::block(int r0, int c0, int nr, int nc) const {
  PIE2D_CHECK(r0 >= 0 && c0 >= 0 && r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  PolyMatrix r(nr, nc, allowed_);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

PolyMatrix PolyMatrix::vcat(const std::vector<PolyMatrix>& parts) {
  PIE2D_CHECK(!parts.empty(), "vcat of nothing");
  int cols = parts[0].cols(), rows = 0;
  VarSet a = 0;
  for (auto& p : parts) {
    PIE2D_CHECK(p.cols() == cols, "vcat column mismatch");
    rows += p.rows();
    a |= p.allowed_;
  }
  PolyMatrix r(rows, cols, a);
  int r0 = 0;
  for (auto& p : parts) {
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < cols; ++j) r.at(r0 + i, j) = p.at(i, j);
    r0 += p.rows();
  }
  return r;
}

PolyMatrix PolyMatrix::hcat(const std::vector<PolyMatrix>& parts) {
  PIE2D_CHECK(!parts.empty(), "hcat of nothing");
  int rows = parts[0].rows(), cols = 0;
  VarSet a = 0;
  for (auto& p : parts) {
    PIE2D_CHECK(p.rows() == rows, "hcat row mismatch");
    cols += p.cols();
    a |= p.allowed_;
  }
  PolyMatrix r(rows, cols, a);
  int c0 = 0;
  for (auto& p : parts) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < p.cols(); ++j) r.at(i, c0 + j) = p.at(i, j);
    c0 += p.cols();
  }
  return r;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[ ";
    for (int j = 0; j < cols_; ++j) {
      os << at(i, j).to_string();
      if (j + 1 < cols_) os << ", ";
    }
    os << " ]\n";
  }
  return os.str();
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat& RatMat::operator+=(const RatMat& o) {
  PIE2D_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "dimension mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  PIE2D_CHECK(a.rows_ == b.rows_ && a.cols_ == b.cols_, "dimension mismatch");
  RatMat r(a.rows_, a.cols_);
  for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  PIE2D_CHECK(a.cols_ == b.rows_, "dimension mismatch");
  RatMat r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

RatMat RatMat::scaled(const Rat& c) const {
  RatMat r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool RatMat::is_zero() const {
  for (auto& v : e_)
    if (v != 0) return false;
  return true;
}

int RatMat::rank() const {
  RatMat w = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r)
      if (w.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int c = 0; c < cols_; ++c) std::swap(w.at(piv, c), w.at(rank, c));
    for (int r = rank + 1; r < rows_; ++r) {
      if (w.at(r, col) == 0) continue;
      Rat f = w.at(r, col) / w.at(rank, col);
      for (int c = col; c < cols_; ++c) w.at(r, c) -= f * w.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

RatMat RatMat::inverse(const char* what) const {
  PIE2D_CHECK(rows_ == cols_, "inverse of non-square matrix");
  int n = rows_;
  RatMat w = *this;
  RatMat inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (w.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) throw Error(std::string("singular: ") + what);
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(w.at(piv, c), w.at(col, c));
        std::swap(inv.at(piv, c), inv.at(col, c));
      }
    Rat p = w.at(col, col);
    for (int c = 0; c < n; ++c) {
      w.at(col, c) /= p;
      inv.at(col, c) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || w.at(r, col) == 0) continue;
      Rat f = w.at(r, col);
      for (int c = 0; c < n; ++c) {
        w.at(r, c) -= f * w.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

PolyMatrix RatMat::to_poly(VarSet allowed) const {
  PolyMatrix m(rows_, cols_, allowed);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) m.at(i, j) = Poly::constant(at(i, j));
  return m;
}

RatMat RatMat::from_poly(const PolyMatrix& m) {
  RatMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).constant_value();
  return r;
}

}  // namespace pie2d
