#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pie2d/rational.hpp"

namespace pie2d {

// Polynomial variables. X, Y are the output coordinates of a kernel, TH and
// NU the input (integrated) coordinates, and ET/MU are transient dummies that
// only appear while a composition integral is being evaluated.
enum Var : int { VX = 0, VY = 1, VTH = 2, VNU = 3, VET = 4, VMU = 5 };
inline constexpr int kNumVars = 6;

const char* var_name(Var v);

// Bitmask over the four public variables; ET/MU never appear in stored kernels.
using VarSet = unsigned;
inline constexpr VarSet vs_none = 0u;
inline VarSet vs(Var v) { return 1u << v; }
inline VarSet vs_union(VarSet a, VarSet b) { return a | b; }
inline bool vs_contains(VarSet set, Var v) { return (set >> v) & 1u; }
inline constexpr VarSet vs_x = 1u << VX;
inline constexpr VarSet vs_y = 1u << VY;
inline constexpr VarSet vs_xy = (1u << VX) | (1u << VY);
inline constexpr VarSet vs_xth = (1u << VX) | (1u << VTH);
inline constexpr VarSet vs_ynu = (1u << VY) | (1u << VNU);
inline constexpr VarSet vs_all4 = (1u << VX) | (1u << VY) | (1u << VTH) | (1u << VNU);

struct Mono {
  std::array<uint8_t, kNumVars> e{};

  int total() const {
    int t = 0;
    for (auto d : e) t += d;
    return t;
  }
  bool operator==(const Mono&) const = default;
  // Canonical order: graded, then lexicographic with x > y > th > nu,
  // higher-degree-in-x first within a grade.
  bool operator<(const Mono& o) const {
    int ta = total(), tb = o.total();
    if (ta != tb) return ta < tb;
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != o.e[i]) return e[i] > o.e[i];
    return false;
  }
  VarSet vars() const {
    VarSet s = 0;
    for (int i = 0; i < kNumVars; ++i)
      if (e[i]) s |= 1u << i;
    return s;
  }
};

// Integration / substitution bound: an exact rational or one of the variables.
struct Bound {
  enum Kind { Const, Variable } kind;
  Rat c;
  Var v;
  static Bound of(const Rat& r) { return Bound{Const, r, VX}; }
  static Bound of(Var var) { return Bound{Variable, Rat(0), var}; }
};

// Sparse exact-arithmetic polynomial in up to six variables.  No zero
// coefficients are stored; term order is the canonical graded-lex order.
class Poly {
 public:
  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(const Rat& c);
  static Poly variable(Var v);
  static Poly monomial(const Mono& m, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()

  int degree() const;            // total degree over all variables, -1 for 0
  int degree_in(Var v) const;    // max exponent of v, 0 for the zero poly
  VarSet vars() const;

  const std::map<Mono, Rat>& terms() const { return terms_; }
  Rat coeff(const Mono& m) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rat& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly diff(Var v) const;

  // Exact substitution of a variable by a rational constant or another
  // variable (exponents merge when the target variable is already present).
  Poly subst(Var v, const Bound& b) const;

  // Simultaneous exchange of two variables.
  Poly swapped(Var v, Var w) const;

  // Exact definite integral over `v` from `lo` to `hi`; the result no longer
  // contains `v`.  A symbolic bound must not equal `v`.
  Poly integrate(Var v, const Bound& lo, const Bound& hi) const;

  Rat eval(const std::array<Rat, kNumVars>& pt) const;
  double eval_d(const std::array<double, kNumVars>& pt) const;

  std::string to_string() const;

  void add_term(const Mono& m, const Rat& c);  // merges, prunes zeros

 private:
  std::map<Mono, Rat> terms_;
};

// All monomials of total degree <= d in the variables of `set`, in the
// canonical graded-lex order (1 first).
std::vector<Poly> monomial_basis(int d, VarSet set);
std::vector<Mono> monomial_exponents(int d, VarSet set);

}  // namespace pie2d
