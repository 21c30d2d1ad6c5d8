#include "pie2d/pi_compose.hpp"

namespace pie2d {

namespace {

// Per-axis contraction context: `out` is the free output variable, `in` the
// free input variable, `dummy` the transient integration variable.
struct Ctx {
  Var out, in, dummy;
  Bound lo, hi;
};

Ctx ctx_x(const Rect& r) { return {VX, VTH, VET, Bound::of(r.a), Bound::of(r.b)}; }
Ctx ctx_y(const Rect& r) { return {VY, VNU, VMU, Bound::of(r.c), Bound::of(r.d)}; }
Ctx ctx_of(const Rect& r, Dir d) { return d == Dir::X ? ctx_x(r) : ctx_y(r); }

// What a nonzero Psi_{kij} does to the dummy variable of the kernel product.
enum class Act {
  SubOut,   // delta(out - dummy)
  SubIn,    // delta(in - dummy)
  IntInOut, // integral over (in, out)
  IntLoIn,  // (lo, in)
  IntOutHi, // (out, hi)
  IntOutIn, // (out, in)
  IntLoOut, // (lo, out)
  IntInHi,  // (in, hi)
};

struct PsiEntry {
  int i, j;
  Act act;
};

// The eleven nonzero Psi_{kij} cases, grouped by output slot k.
const std::vector<PsiEntry>& psi_table(int k) {
  static const std::vector<PsiEntry> t0 = {{0, 0, Act::SubOut}};
  static const std::vector<PsiEntry> t1 = {{0, 1, Act::SubOut},
                                           {1, 0, Act::SubIn},
                                           {1, 1, Act::IntInOut},
                                           {1, 2, Act::IntLoIn},
                                           {2, 1, Act::IntOutHi}};
  static const std::vector<PsiEntry> t2 = {{0, 2, Act::SubOut},
                                           {2, 0, Act::SubIn},
                                           {2, 2, Act::IntOutIn},
                                           {1, 2, Act::IntLoOut},
                                           {2, 1, Act::IntInHi}};
  switch (k) {
    case 0: return t0;
    case 1: return t1;
    default: return t2;
  }
}

PolyMatrix apply_act(const Ctx& c, Act a, const PolyMatrix& P) {
  switch (a) {
    case Act::SubOut: return P.subst(c.dummy, Bound::of(c.out));
    case Act::SubIn: return P.subst(c.dummy, Bound::of(c.in));
    case Act::IntInOut: return P.integrate(c.dummy, Bound::of(c.in), Bound::of(c.out));
    case Act::IntLoIn: return P.integrate(c.dummy, c.lo, Bound::of(c.in));
    case Act::IntOutHi: return P.integrate(c.dummy, Bound::of(c.out), c.hi);
    case Act::IntOutIn: return P.integrate(c.dummy, Bound::of(c.out), Bound::of(c.in));
    case Act::IntLoOut: return P.integrate(c.dummy, c.lo, Bound::of(c.out));
    case Act::IntInHi: return P.integrate(c.dummy, Bound::of(c.in), c.hi);
  }
  throw Error("unreachable");
}

// One-sided Phi_i(out, dummy) factor appearing to the LEFT of the dummy.
PolyMatrix apply_phi_left(const Ctx& c, int i, const PolyMatrix& P) {
  switch (i) {
    case 0: return P.subst(c.dummy, Bound::of(c.out));
    case 1: return P.integrate(c.dummy, c.lo, Bound::of(c.out));
    default: return P.integrate(c.dummy, Bound::of(c.out), c.hi);
  }
}

// One-sided Phi_i(dummy, in) factor appearing to the RIGHT of the dummy.
PolyMatrix apply_phi_right(const Ctx& c, int i, const PolyMatrix& P) {
  switch (i) {
    case 0: return P.subst(c.dummy, Bound::of(c.in));
    case 1: return P.integrate(c.dummy, Bound::of(c.in), c.hi);
    default: return P.integrate(c.dummy, c.lo, Bound::of(c.in));
  }
}

PolyMatrix full_int(const Ctx& c, const PolyMatrix& P) {
  return P.integrate(c.dummy, c.lo, c.hi);
}

PolyMatrix to_dummy(const Ctx& c, const PolyMatrix& P, Var from) {
  return P.subst(from, Bound::of(c.dummy));
}

struct Triple {
  const PolyMatrix *p0, *p1, *p2;
  const PolyMatrix& operator[](int i) const { return i == 0 ? *p0 : (i == 1 ? *p1 : *p2); }
};

Triple triple(const N1d& n) { return {&n.N0, &n.N1, &n.N2}; }
Triple triple(const DxTriple& n) { return {&n.D0, &n.D1, &n.D2}; }
Triple triple(const DyTriple& n) { return {&n.D0, &n.D1, &n.D2}; }
Triple triple(const ExTriple& n) { return {&n.E0, &n.E1, &n.E2}; }
Triple triple(const EyTriple& n) { return {&n.E0, &n.E1, &n.E2}; }

// sum_i Phi_i(dummy, in) F(dummy) T_i(dummy, ...): F is already a function of
// the dummy; the triple's out variable is bent onto the dummy.
PolyMatrix phi_right_sum(const Ctx& c, const PolyMatrix& F, const Triple& T) {
  PolyMatrix r = F.subst(c.dummy, Bound::of(c.in)) * T[0].subst(c.out, Bound::of(c.in));
  r += (F * to_dummy(c, T[1], c.out)).integrate(c.dummy, Bound::of(c.in), c.hi);
  r += (F * to_dummy(c, T[2], c.out)).integrate(c.dummy, c.lo, Bound::of(c.in));
  return r;
}

// sum_i Phi_i(out, dummy) T_i(out, dummy, ...) G(dummy): the triple's in
// variable is bent onto the dummy; G is already a function of the dummy.
PolyMatrix phi_left_sum(const Ctx& c, const Triple& T, const PolyMatrix& G) {
  PolyMatrix r = T[0] * G.subst(c.dummy, Bound::of(c.out));
  r += (to_dummy(c, T[1], c.in) * G).integrate(c.dummy, c.lo, Bound::of(c.out));
  r += (to_dummy(c, T[2], c.in) * G).integrate(c.dummy, Bound::of(c.out), c.hi);
  return r;
}

// Psi contraction of two triples along one axis.  L's in variable and R's out
// variable are bent onto the dummy; spectator variables pass through.
PolyMatrix psi_contract(const Ctx& c, int k, const Triple& L, const Triple& R) {
  PolyMatrix r;
  bool first = true;
  for (const auto& e : psi_table(k)) {
    const PolyMatrix& li = L[e.i];
    const PolyMatrix& rj = R[e.j];
    if (li.is_zero() || rj.is_zero()) continue;
    PolyMatrix term = apply_act(c, e.act, to_dummy(c, li, c.in) * to_dummy(c, rj, c.out));
    if (first) {
      r = term;
      first = false;
    } else {
      r += term;
    }
  }
  if (first) return PolyMatrix(L[0].rows(), R[0].cols(), vs_all4);
  return r;
}

}  // namespace

N1d compose_1d(const Rect& rect, const N1d& N, const N1d& M) {
  PIE2D_CHECK(N.dir == M.dir, "1D composition direction mismatch");
  PIE2D_CHECK(N.cols() == M.rows(), "1D composition dimension mismatch");
  Ctx c = ctx_of(rect, N.dir);
  N1d q(N.dir, N.rows(), M.cols());
  q.N0 = psi_contract(c, 0, triple(N), triple(M));
  q.N1 = psi_contract(c, 1, triple(N), triple(M));
  q.N2 = psi_contract(c, 2, triple(N), triple(M));
  return q;
}

N2d compose_2d(const Rect& rect, const N2d& N, const N2d& M) {
  PIE2D_CHECK(N.cols() == M.rows(), "2D composition dimension mismatch");
  Ctx cx = ctx_x(rect), cy = ctx_y(rect);
  N2d q(N.rows(), M.cols());
  for (int k = 0; k < 3; ++k)
    for (int r = 0; r < 3; ++r) {
      PolyMatrix acc(N.rows(), M.cols(), vs_all4);
      for (const auto& ex : psi_table(k))
        for (const auto& ey : psi_table(r)) {
          const PolyMatrix& nip = N.at(ex.i, ey.i);
          const PolyMatrix& mjq = M.at(ex.j, ey.j);
          if (nip.is_zero() || mjq.is_zero()) continue;
          PolyMatrix prod = nip.subst(VTH, Bound::of(VET)).subst(VNU, Bound::of(VMU)) *
                            mjq.subst(VX, Bound::of(VET)).subst(VY, Bound::of(VMU));
          acc += apply_act(cy, ey.act, apply_act(cx, ex.act, prod));
        }
      q.at(k, r) = acc;
    }
  return q;
}

N011 compose_011(const Rect& rect, const N011& B, const N011& D) {
  PIE2D_CHECK(B.m0 == D.n0 && B.m1 == D.n1, "011 composition signature mismatch");
  Ctx cx = ctx_x(rect), cy = ctx_y(rect);
  N011 R(B.n0, B.n1, D.m0, D.m1);

  PolyMatrix B01e = to_dummy(cx, B.B01, VTH);  // B01(eta)
  PolyMatrix B02m = to_dummy(cy, B.B02, VNU);  // B02(mu)
  PolyMatrix B21e = to_dummy(cx, B.B21, VTH);  // B21(y,eta)
  PolyMatrix B12m = to_dummy(cy, B.B12, VNU);  // B12(x,mu)

  R.B00 = B.B00 * D.B00 + full_int(cx, B01e * to_dummy(cx, D.B10, VX)) +
          full_int(cy, B02m * to_dummy(cy, D.B20, VY));
  R.B01 = B.B00 * D.B01 + phi_right_sum(cx, B01e, triple(D.B11)) +
          full_int(cy, B02m * to_dummy(cy, D.B21, VY));
  R.B02 = B.B00 * D.B02 + full_int(cx, B01e * to_dummy(cx, D.B12, VX)) +
          phi_right_sum(cy, B02m, triple(D.B22));
  R.B10 = B.B10 * D.B00 + phi_left_sum(cx, triple(B.B11), to_dummy(cx, D.B10, VX)) +
          full_int(cy, B12m * to_dummy(cy, D.B20, VY));
  R.B20 = B.B20 * D.B00 + full_int(cx, B21e * to_dummy(cx, D.B10, VX)) +
          phi_left_sum(cy, triple(B.B22), to_dummy(cy, D.B20, VY));
  R.B12 = B.B10 * D.B02 + phi_left_sum(cx, triple(B.B11), to_dummy(cx, D.B12, VX)) +
          phi_right_sum(cy, B12m, triple(D.B22));
  R.B21 = B.B20 * D.B01 + phi_right_sum(cx, B21e, triple(D.B11)) +
          phi_left_sum(cy, triple(B.B22), to_dummy(cy, D.B21, VY));

  // R11 = L_101(B10, D01) + L_1D(B11, D11) + L_111(B12, D21)
  R.B11 = compose_1d(rect, B.B11, D.B11);
  {
    PolyMatrix outer = B.B10 * D.B01;                                  // (x, th)
    PolyMatrix bridge = full_int(cy, B12m * to_dummy(cy, D.B21, VY));  // (x, th)
    R.B11.N1 += outer + bridge;
    R.B11.N2 += outer + bridge;
  }
  // R22 = L_101(B20, D02) + L_111(B21, D12) + L_1D(B22, D22)
  R.B22 = compose_1d(rect, B.B22, D.B22);
  {
    PolyMatrix outer = B.B20 * D.B02;                                  // (y, nu)
    PolyMatrix bridge = full_int(cx, B21e * to_dummy(cx, D.B12, VX));  // (y, nu)
    R.B22.N1 += outer + bridge;
    R.B22.N2 += outer + bridge;
  }
  return R;
}

N2dTo011 compose_011_x_2dto011(const Rect& rect, const N011& B, const N2dTo011& D) {
  PIE2D_CHECK(B.m0 == D.n0 && B.m1 == D.n1, "011 x 2D->011 signature mismatch");
  Ctx cx = ctx_x(rect), cy = ctx_y(rect);
  N2dTo011 S(B.n0, B.n1, D.m2);

  PolyMatrix B01e = to_dummy(cx, B.B01, VTH);
  PolyMatrix B02m = to_dummy(cy, B.B02, VNU);
  PolyMatrix B21e = to_dummy(cx, B.B21, VTH);
  PolyMatrix B12m = to_dummy(cy, B.B12, VNU);

  S.R0 = B.B00 * D.R0 + phi_right_sum(cx, B01e, triple(D.Dx)) +
         phi_right_sum(cy, B02m, triple(D.Dy));

  // S_x = L0(B10, R0) + L1(B11, Dx) + L2(B12, Dy)
  {
    PolyMatrix l0 = B.B10 * D.R0;  // (x, th, nu)
    S.Dx.D0 = psi_contract(cx, 0, triple(B.B11), triple(D.Dx));
    S.Dx.D1 = psi_contract(cx, 1, triple(B.B11), triple(D.Dx));
    S.Dx.D2 = psi_contract(cx, 2, triple(B.B11), triple(D.Dx));
    PolyMatrix l2 = phi_right_sum(cy, B12m, triple(D.Dy));  // (x, th, nu)
    S.Dx.D1 += l0 + l2;
    S.Dx.D2 += l0 + l2;
  }
  // S_y = L0(B20, R0) + L2(B21, Dx) + L1(B22, Dy)
  {
    PolyMatrix l0 = B.B20 * D.R0;
    S.Dy.D0 = psi_contract(cy, 0, triple(B.B22), triple(D.Dy));
    S.Dy.D1 = psi_contract(cy, 1, triple(B.B22), triple(D.Dy));
    S.Dy.D2 = psi_contract(cy, 2, triple(B.B22), triple(D.Dy));
    PolyMatrix l2 = phi_right_sum(cx, B21e, triple(D.Dx));
    S.Dy.D1 += l0 + l2;
    S.Dy.D2 += l0 + l2;
  }
  return S;
}

N2dTo011 compose_2dto011_x_2d(const Rect& rect, const N2dTo011& D, const N2d& N) {
  PIE2D_CHECK(D.m2 == N.rows(), "2D->011 x 2D signature mismatch");
  Ctx cx = ctx_x(rect), cy = ctx_y(rect);
  N2dTo011 S(D.n0, D.n1, N.cols());

  auto bend_left_R0 = D.R0.subst(VTH, Bound::of(VET)).subst(VNU, Bound::of(VMU));
  auto bend_right = [&](const PolyMatrix& M) {
    return M.subst(VX, Bound::of(VET)).subst(VY, Bound::of(VMU));
  };

  {
    PolyMatrix acc(D.n0, N.cols(), vs_all4);
    for (int j = 0; j < 3; ++j)
      for (int q = 0; q < 3; ++q) {
        const PolyMatrix& njq = N.at(j, q);
        if (njq.is_zero() || D.R0.is_zero()) continue;
        acc += apply_phi_right(cy, q, apply_phi_right(cx, j, bend_left_R0 * bend_right(njq)));
      }
    S.R0 = acc;
  }
  Triple dx = triple(D.Dx);
  for (int k = 0; k < 3; ++k) {
    PolyMatrix acc(D.n1, N.cols(), vs_all4);
    for (const auto& e : psi_table(k))
      for (int q = 0; q < 3; ++q) {
        const PolyMatrix& njq = N.at(e.j, q);
        const PolyMatrix& di = dx[e.i];
        if (njq.is_zero() || di.is_zero()) continue;
        PolyMatrix prod = di.subst(VTH, Bound::of(VET)).subst(VNU, Bound::of(VMU)) * bend_right(njq);
        acc += apply_act(cx, e.act, apply_phi_right(cy, q, prod));
      }
    (k == 0 ? S.Dx.D0 : (k == 1 ? S.Dx.D1 : S.Dx.D2)) = acc;
  }
  Triple dy = triple(D.Dy);
  for (int r = 0; r < 3; ++r) {
    PolyMatrix acc(D.n1, N.cols(), vs_all4);
    for (const auto& e : psi_table(r))
      for (int j = 0; j < 3; ++j) {
        const PolyMatrix& njq = N.at(j, e.j);
        const PolyMatrix& dp = dy[e.i];
        if (njq.is_zero() || dp.is_zero()) continue;
        PolyMatrix prod = dp.subst(VTH, Bound::of(VET)).subst(VNU, Bound::of(VMU)) * bend_right(njq);
        acc += apply_act(cy, e.act, apply_phi_right(cx, j, prod));
      }
    (r == 0 ? S.Dy.D0 : (r == 1 ? S.Dy.D1 : S.Dy.D2)) = acc;
  }
  return S;
}

N011To2d compose_011to2d_x_011(const Rect& rect, const N011To2d& E, const N011& B) {
  PIE2D_CHECK(E.m0 == B.n0 && E.m1 == B.n1, "011->2D x 011 signature mismatch");
  Ctx cx = ctx_x(rect), cy = ctx_y(rect);
  N011To2d T(E.n2, B.m0, B.m1);

  T.C0 = E.C0 * B.B00 + phi_left_sum(cx, triple(E.Ex), to_dummy(cx, B.B10, VX)) +
         phi_left_sum(cy, triple(E.Ey), to_dummy(cy, B.B20, VY));

  // T_x = L0(C0, B01) + L1(Ex, B11) + L2(Ey, B21)
  {
    PolyMatrix l0 = E.C0 * B.B01;  // (x,y,th)
    T.Ex.E0 = psi_contract(cx, 0, triple(E.Ex), triple(B.B11));
    T.Ex.E1 = psi_contract(cx, 1, triple(E.Ex), triple(B.B11));
    T.Ex.E2 = psi_contract(cx, 2, triple(E.Ex), triple(B.B11));
    PolyMatrix l2 = phi_left_sum(cy, triple(E.Ey), to_dummy(cy, B.B21, VY));  // (x,y,th)
    T.Ex.E1 += l0 + l2;
    T.Ex.E2 += l0 + l2;
  }
  // T_y = L0(C0, B02) + L2(Ex, B12) + L1(Ey, B22)
  {
    PolyMatrix l0 = E.C0 * B.B02;
    T.Ey.E0 = psi_contract(cy, 0, triple(E.Ey), triple(B.B22));
    T.Ey.E1 = psi_contract(cy, 1, triple(E.Ey), triple(B.B22));
    T.Ey.E2 = psi_contract(cy, 2, triple(E.Ey), triple(B.B22));
    PolyMatrix l2 = phi_left_sum(cx, triple(E.Ex), to_dummy(cx, B.B12, VX));
    T.Ey.E1 += l0 + l2;
    T.Ey.E2 += l0 + l2;
  }
  return T;
}

N011To2d compose_2d_x_011to2d(const Rect& rect, const N2d& N, const N011To2d& E) {
  PIE2D_CHECK(N.cols() == E.n2, "2D x 011->2D signature mismatch");
  Ctx cx = ctx_x(rect), cy = ctx_y(rect);
  N011To2d T(N.rows(), E.m0, E.m1);

  auto bend_left = [&](const PolyMatrix& M) {
    return M.subst(VTH, Bound::of(VET)).subst(VNU, Bound::of(VMU));
  };
  auto bend_right = [&](const PolyMatrix& M) {
    return M.subst(VX, Bound::of(VET)).subst(VY, Bound::of(VMU));
  };

  {
    PolyMatrix acc(N.rows(), E.m0, vs_all4);
    for (int i = 0; i < 3; ++i)
      for (int p = 0; p < 3; ++p) {
        const PolyMatrix& nip = N.at(i, p);
        if (nip.is_zero() || E.C0.is_zero()) continue;
        acc += apply_phi_left(cy, p, apply_phi_left(cx, i, bend_left(nip) * bend_right(E.C0)));
      }
    T.C0 = acc;
  }
  Triple ex = triple(E.Ex);
  for (int k = 0; k < 3; ++k) {
    PolyMatrix acc(N.rows(), E.m1, vs_all4);
    for (const auto& e : psi_table(k))
      for (int p = 0; p < 3; ++p) {
        const PolyMatrix& nip = N.at(e.i, p);
        const PolyMatrix& ej = ex[e.j];
        if (nip.is_zero() || ej.is_zero()) continue;
        PolyMatrix prod = bend_left(nip) * bend_right(ej);
        acc += apply_act(cx, e.act, apply_phi_left(cy, p, prod));
      }
    (k == 0 ? T.Ex.E0 : (k == 1 ? T.Ex.E1 : T.Ex.E2)) = acc;
  }
  Triple ey = triple(E.Ey);
  for (int r = 0; r < 3; ++r) {
    PolyMatrix acc(N.rows(), E.m1, vs_all4);
    for (const auto& e : psi_table(r))
      for (int i = 0; i < 3; ++i) {
        const PolyMatrix& nip = N.at(i, e.i);
        const PolyMatrix& eq = ey[e.j];
        if (nip.is_zero() || eq.is_zero()) continue;
        PolyMatrix prod = bend_left(nip) * bend_right(eq);
        acc += apply_act(cy, e.act, apply_phi_left(cx, i, prod));
      }
    (r == 0 ? T.Ey.E0 : (r == 1 ? T.Ey.E1 : T.Ey.E2)) = acc;
  }
  return T;
}

N011 compose_2dto011_x_011to2d(const Rect& rect, const N2dTo011& D, const N011To2d& E) {
  PIE2D_CHECK(D.m2 == E.n2, "2D->011 x 011->2D signature mismatch");
  Ctx cx = ctx_x(rect), cy = ctx_y(rect);
  N011 R(D.n0, D.n1, E.m0, E.m1);

  auto bend_in = [&](const PolyMatrix& M) {  // input coords (th,nu) -> (eta,mu)
    return M.subst(VTH, Bound::of(VET)).subst(VNU, Bound::of(VMU));
  };
  auto bend_out = [&](const PolyMatrix& M) {  // output coords (x,y) -> (eta,mu)
    return M.subst(VX, Bound::of(VET)).subst(VY, Bound::of(VMU));
  };

  R.B00 = full_int(cy, full_int(cx, bend_in(D.R0) * bend_out(E.C0)));

  Triple dx = triple(D.Dx), dyt = triple(D.Dy);
  Triple ex = triple(E.Ex), ey = triple(E.Ey);

  {
    PolyMatrix acc(D.n1, E.m0, vs_all4);
    for (int i = 0; i < 3; ++i) {
      if (dx[i].is_zero() || E.C0.is_zero()) continue;
      acc += apply_phi_left(cx, i, full_int(cy, bend_in(dx[i]) * bend_out(E.C0)));
    }
    R.B10 = acc;
  }
  {
    PolyMatrix acc(D.n1, E.m0, vs_all4);
    for (int i = 0; i < 3; ++i) {
      if (dyt[i].is_zero() || E.C0.is_zero()) continue;
      acc += apply_phi_left(cy, i, full_int(cx, bend_in(dyt[i]) * bend_out(E.C0)));
    }
    R.B20 = acc;
  }
  {
    PolyMatrix acc(D.n0, E.m1, vs_all4);
    for (int i = 0; i < 3; ++i) {
      if (D.R0.is_zero() || ex[i].is_zero()) continue;
      acc += apply_phi_right(cx, i, full_int(cy, bend_in(D.R0) * bend_out(ex[i])));
    }
    R.B01 = acc;
  }
  {
    PolyMatrix acc(D.n0, E.m1, vs_all4);
    for (int i = 0; i < 3; ++i) {
      if (D.R0.is_zero() || ey[i].is_zero()) continue;
      acc += apply_phi_right(cy, i, full_int(cx, bend_in(D.R0) * bend_out(ey[i])));
    }
    R.B02 = acc;
  }
  {
    PolyMatrix acc(D.n1, E.m1, vs_all4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (dyt[i].is_zero() || ex[j].is_zero()) continue;
        acc += apply_phi_left(cy, i, apply_phi_right(cx, j, bend_in(dyt[i]) * bend_out(ex[j])));
      }
    R.B21 = acc;
  }
  {
    PolyMatrix acc(D.n1, E.m1, vs_all4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (dx[i].is_zero() || ey[j].is_zero()) continue;
        acc += apply_phi_left(cx, i, apply_phi_right(cy, j, bend_in(dx[i]) * bend_out(ey[j])));
      }
    R.B12 = acc;
  }
  for (int k = 0; k < 3; ++k) {
    PolyMatrix acc(D.n1, E.m1, vs_all4);
    for (const auto& e : psi_table(k)) {
      if (dx[e.i].is_zero() || ex[e.j].is_zero()) continue;
      acc += apply_act(cx, e.act, full_int(cy, bend_in(dx[e.i]) * bend_out(ex[e.j])));
    }
    (k == 0 ? R.B11.N0 : (k == 1 ? R.B11.N1 : R.B11.N2)) = acc;
  }
  for (int k = 0; k < 3; ++k) {
    PolyMatrix acc(D.n1, E.m1, vs_all4);
    for (const auto& e : psi_table(k)) {
      if (dyt[e.i].is_zero() || ey[e.j].is_zero()) continue;
      acc += apply_act(cy, e.act, full_int(cx, bend_in(dyt[e.i]) * bend_out(ey[e.j])));
    }
    (k == 0 ? R.B22.N0 : (k == 1 ? R.B22.N1 : R.B22.N2)) = acc;
  }
  return R;
}

N2d compose_011to2d_x_2dto011(const Rect& rect, const N011To2d& E, const N2dTo011& D) {
  PIE2D_CHECK(E.m0 == D.n0 && E.m1 == D.n1, "011->2D x 2D->011 signature mismatch");
  Ctx cx = ctx_x(rect), cy = ctx_y(rect);
  N2d Q(E.n2, D.m2);

  Triple ex = triple(E.Ex), ey = triple(E.Ey);
  Triple dx = triple(D.Dx), dyt = triple(D.Dy);

  // x-channel: Psi contraction of Ex against Dx (spectators y on the left,
  // th/nu on the right); y-channel mirrored.
  auto psi_x = [&](int k) {
    PolyMatrix acc(E.n2, D.m2, vs_all4);
    for (const auto& e : psi_table(k)) {
      if (ex[e.i].is_zero() || dx[e.j].is_zero()) continue;
      acc += apply_act(cx, e.act,
                       ex[e.i].subst(VTH, Bound::of(VET)) * dx[e.j].subst(VX, Bound::of(VET)));
    }
    return acc;
  };
  auto psi_y = [&](int r) {
    PolyMatrix acc(E.n2, D.m2, vs_all4);
    for (const auto& e : psi_table(r)) {
      if (ey[e.i].is_zero() || dyt[e.j].is_zero()) continue;
      acc += apply_act(cy, e.act,
                       ey[e.i].subst(VNU, Bound::of(VMU)) * dyt[e.j].subst(VY, Bound::of(VMU)));
    }
    return acc;
  };

  PolyMatrix px1 = psi_x(1), px2 = psi_x(2);
  PolyMatrix py1 = psi_y(1), py2 = psi_y(2);
  PolyMatrix outer = E.C0 * D.R0;

  Q.at(0, 1) = psi_x(0);
  Q.at(0, 2) = Q.at(0, 1);
  Q.at(1, 0) = psi_y(0);
  Q.at(2, 0) = Q.at(1, 0);
  Q.at(1, 1) = outer + px1 + py1;
  Q.at(2, 1) = outer + px2 + py1;
  Q.at(1, 2) = outer + px1 + py2;
  Q.at(2, 2) = outer + px2 + py2;
  return Q;
}

N0112 compose_0112(const Rect& rect, const N0112& B, const N0112& D) {
  PIE2D_CHECK(B.m0 == D.n0 && B.m1 == D.n1 && B.m2 == D.n2, "0112 signature mismatch");
  N0112 R(B.n0, B.n1, B.n2, D.m0, D.m1, D.m2);
  R.A11 = compose_011(rect, B.A11, D.A11) + compose_2dto011_x_011to2d(rect, B.A12, D.A21);
  R.A12 = compose_011_x_2dto011(rect, B.A11, D.A12) + compose_2dto011_x_2d(rect, B.A12, D.A22);
  R.A21 = compose_011to2d_x_011(rect, B.A21, D.A11) + compose_2d_x_011to2d(rect, B.A22, D.A21);
  R.A22 = compose_011to2d_x_2dto011(rect, B.A21, D.A12) + compose_2d(rect, B.A22, D.A22);
  return R;
}

N1d adjoint_1d(const N1d& N) {
  Var o = dir_out(N.dir), i = dir_in(N.dir);
  N1d r(N.dir, N.cols(), N.rows());
  r.N0 = N.N0.transpose();
  r.N1 = N.N2.transpose().swapped(o, i);
  r.N2 = N.N1.transpose().swapped(o, i);
  return r;
}

N2d adjoint_2d(const N2d& N) {
  N2d r(N.cols(), N.rows());
  auto sx = [](const PolyMatrix& m) { return m.transpose().swapped(VX, VTH); };
  auto sy = [](const PolyMatrix& m) { return m.transpose().swapped(VY, VNU); };
  auto sxy = [](const PolyMatrix& m) {
    return m.transpose().swapped(VX, VTH).swapped(VY, VNU);
  };
  r.at(0, 0) = N.at(0, 0).transpose();
  r.at(0, 1) = sy(N.at(0, 2));
  r.at(0, 2) = sy(N.at(0, 1));
  r.at(1, 0) = sx(N.at(2, 0));
  r.at(2, 0) = sx(N.at(1, 0));
  r.at(1, 1) = sxy(N.at(2, 2));
  r.at(1, 2) = sxy(N.at(2, 1));
  r.at(2, 1) = sxy(N.at(1, 2));
  r.at(2, 2) = sxy(N.at(1, 1));
  return r;
}

N011 adjoint_011(const N011& B) {
  N011 r(B.m0, B.m1, B.n0, B.n1);
  r.B00 = B.B00.transpose();
  r.B01 = B.B10.transpose().swapped(VX, VTH);
  r.B02 = B.B20.transpose().swapped(VY, VNU);
  r.B10 = B.B01.transpose().swapped(VTH, VX);
  r.B20 = B.B02.transpose().swapped(VNU, VY);
  r.B11 = adjoint_1d(B.B11);
  r.B22 = adjoint_1d(B.B22);
  r.B12 = B.B21.transpose().swapped(VY, VNU).swapped(VTH, VX);
  r.B21 = B.B12.transpose().swapped(VX, VTH).swapped(VNU, VY);
  return r;
}

N011To2d adjoint_2dto011(const N2dTo011& D) {
  N011To2d r(D.m2, D.n0, D.n1);
  r.C0 = D.R0.transpose().swapped(VTH, VX).swapped(VNU, VY);
  r.Ex.E0 = D.Dx.D0.transpose().swapped(VNU, VY);
  r.Ex.E1 = D.Dx.D2.transpose().swapped(VX, VTH).swapped(VNU, VY);
  r.Ex.E2 = D.Dx.D1.transpose().swapped(VX, VTH).swapped(VNU, VY);
  r.Ey.E0 = D.Dy.D0.transpose().swapped(VTH, VX);
  r.Ey.E1 = D.Dy.D2.transpose().swapped(VY, VNU).swapped(VTH, VX);
  r.Ey.E2 = D.Dy.D1.transpose().swapped(VY, VNU).swapped(VTH, VX);
  return r;
}

N2dTo011 adjoint_011to2d(const N011To2d& E) {
  N2dTo011 r(E.m0, E.m1, E.n2);
  r.R0 = E.C0.transpose().swapped(VX, VTH).swapped(VY, VNU);
  r.Dx.D0 = E.Ex.E0.transpose().swapped(VY, VNU);
  r.Dx.D1 = E.Ex.E2.transpose().swapped(VX, VTH).swapped(VY, VNU);
  r.Dx.D2 = E.Ex.E1.transpose().swapped(VX, VTH).swapped(VY, VNU);
  r.Dy.D0 = E.Ey.E0.transpose().swapped(VX, VTH);
  r.Dy.D1 = E.Ey.E2.transpose().swapped(VY, VNU).swapped(VX, VTH);
  r.Dy.D2 = E.Ey.E1.transpose().swapped(VY, VNU).swapped(VX, VTH);
  return r;
}

N0112 adjoint_0112(const N0112& N) {
  N0112 r(N.m0, N.m1, N.m2, N.n0, N.n1, N.n2);
  r.A11 = adjoint_011(N.A11);
  r.A12 = adjoint_011to2d(N.A21);
  r.A21 = adjoint_2dto011(N.A12);
  r.A22 = adjoint_2d(N.A22);
  return r;
}

}  // namespace pie2d
