#include "pie2d/poly.hpp"

#include <algorithm>
#include <sstream>

namespace pie2d {

const char* var_name(Var v) {
  static const char* names[kNumVars] = {"x", "y", "th", "nu", "eta", "mu"};
  return names[v];
}

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  PIE2D_CHECK(!t.empty(), "empty number");
  auto epos = t.find_first_of("eE");
  long expo10 = 0;
  if (epos != std::string::npos && t.find('/') == std::string::npos) {
    expo10 = std::stol(t.substr(epos + 1));
    t = t.substr(0, epos);
  }
  Rat r;
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    size_t frac = t.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw Error("bad number: " + s);
    mpz_class num(digits, 10);
    mpz_class den(1);
    for (size_t i = 0; i < frac; ++i) den *= 10;
    r = Rat(num, den);
  } else {
    try {
      r = Rat(t);
    } catch (const std::invalid_argument&) {
      throw Error("bad number: " + s);
    }
  }
  r.canonicalize();
  while (expo10 > 0) { r *= 10; --expo10; }
  while (expo10 < 0) { r /= 10; ++expo10; }
  return r;
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Poly Poly::constant(const Rat& c) {
  Poly p;
  p.add_term(Mono{}, c);
  return p;
}

Poly Poly::variable(Var v) {
  Mono m;
  m.e[v] = 1;
  return monomial(m, Rat(1));
}

Poly Poly::monomial(const Mono& m, const Rat& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  PIE2D_CHECK(is_constant(), "polynomial is not constant");
  return terms_.begin()->second;
}

int Poly::degree() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

int Poly::degree_in(Var v) const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, int(m.e[v]));
  return d;
}

VarSet Poly::vars() const {
  VarSet s = 0;
  for (auto& [m, c] : terms_) s |= m.vars();
  return s;
}

Rat Poly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ma, ca] : a.terms_) {
    for (auto& [mb, cb] : b.terms_) {
      Mono m;
      for (int i = 0; i < kNumVars; ++i) {
        int e = int(ma.e[i]) + int(mb.e[i]);
        PIE2D_CHECK(e < 256, "monomial degree overflow");
        m.e[i] = uint8_t(e);
      }
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r;
  if (c == 0) return r;
  for (auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
  return r;
}

Poly Poly::diff(Var v) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    if (m.e[v] == 0) continue;
    Mono d = m;
    d.e[v] -= 1;
    r.add_term(d, c * int(m.e[v]));
  }
  return r;
}

Poly Poly::subst(Var v, const Bound& b) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    Mono d = m;
    int e = d.e[v];
    d.e[v] = 0;
    if (e == 0) {
      r.add_term(d, c);
    } else if (b.kind == Bound::Const) {
      r.add_term(d, c * rat_pow(b.c, unsigned(e)));
    } else {
      int tot = int(d.e[b.v]) + e;
      PIE2D_CHECK(tot < 256, "monomial degree overflow");
      d.e[b.v] = uint8_t(tot);
      r.add_term(d, c);
    }
  }
  return r;
}

Poly Poly::swapped(Var v, Var w) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    Mono d = m;
    std::swap(d.e[v], d.e[w]);
    r.add_term(d, c);
  }
  return r;
}

Poly Poly::integrate(Var v, const Bound& lo, const Bound& hi) const {
  PIE2D_CHECK(lo.kind == Bound::Const || lo.v != v, "bound equals integration variable");
  PIE2D_CHECK(hi.kind == Bound::Const || hi.v != v, "bound equals integration variable");
  Poly anti;
  for (auto& [m, c] : terms_) {
    Mono d = m;
    int e = int(d.e[v]) + 1;
    PIE2D_CHECK(e < 256, "monomial degree overflow");
    d.e[v] = uint8_t(e);
    anti.add_term(d, c / e);
  }
  return anti.subst(v, hi) - anti.subst(v, lo);
}

Rat Poly::eval(const std::array<Rat, kNumVars>& pt) const {
  Rat acc(0);
  for (auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < kNumVars; ++i)
      if (m.e[i]) t *= rat_pow(pt[i], m.e[i]);
    acc += t;
  }
  return acc;
}

double Poly::eval_d(const std::array<double, kNumVars>& pt) const {
  double acc = 0;
  for (auto& [m, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < kNumVars; ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= pt[i];
    acc += t;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rat a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    bool unit = (a == 1) && m.total() > 0;
    if (!unit) os << a;
    bool any = false;
    for (int i = 0; i < kNumVars; ++i) {
      if (!m.e[i]) continue;
      if (any || !unit) os << "*";
      os << var_name(Var(i));
      if (m.e[i] > 1) os << "^" << int(m.e[i]);
      any = true;
    }
  }
  return os.str();
}

std::vector<Mono> monomial_exponents(int d, VarSet set) {
  PIE2D_CHECK(d >= 0, "degree must be nonnegative");
  std::vector<Var> vars;
  for (int i = 0; i < kNumVars; ++i)
    if (set >> i & 1u) vars.push_back(Var(i));
  std::vector<Mono> out;
  Mono cur;
  // Enumerate then sort into the canonical order.
  std::vector<int> stackdeg(vars.size() + 1, 0);
  auto rec = [&](auto&& self, size_t idx, int used) -> void {
    if (idx == vars.size()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e + used <= d; ++e) {
      cur.e[vars[idx]] = uint8_t(e);
      self(self, idx + 1, used + e);
    }
    cur.e[vars[idx]] = 0;
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Poly> monomial_basis(int d, VarSet set) {
  std::vector<Poly> out;
  for (auto& m : monomial_exponents(d, set)) out.push_back(Poly::monomial(m, Rat(1)));
  return out;
}

}  // namespace pie2d
