#pragma once

#include "pie2d/pi_types.hpp"

namespace pie2d {

// Composition maps for PI operator parameters: P[compose(A,B)] = P[A] o P[B].
// Each transcribes one linear parameter map from the operator algebra, driven
// by the delta/indicator contraction table (see psi_table in the source).

N1d compose_1d(const Rect& rect, const N1d& N, const N1d& M);
N011 compose_011(const Rect& rect, const N011& B, const N011& D);
N2d compose_2d(const Rect& rect, const N2d& N, const N2d& M);

N2dTo011 compose_011_x_2dto011(const Rect& rect, const N011& B, const N2dTo011& D);
N2dTo011 compose_2dto011_x_2d(const Rect& rect, const N2dTo011& D, const N2d& N);
N011To2d compose_011to2d_x_011(const Rect& rect, const N011To2d& E, const N011& B);
N011To2d compose_2d_x_011to2d(const Rect& rect, const N2d& N, const N011To2d& E);
N011 compose_2dto011_x_011to2d(const Rect& rect, const N2dTo011& D, const N011To2d& E);
N2d compose_011to2d_x_2dto011(const Rect& rect, const N011To2d& E, const N2dTo011& D);

N0112 compose_0112(const Rect& rect, const N0112& B, const N0112& D);

// Adjoints with respect to the L2 / R x L2[x] x L2[y] (x L2[x,y]) inner products.
N1d adjoint_1d(const N1d& N);
N2d adjoint_2d(const N2d& N);
N011 adjoint_011(const N011& B);
N011To2d adjoint_2dto011(const N2dTo011& D);
N2dTo011 adjoint_011to2d(const N011To2d& E);
N0112 adjoint_0112(const N0112& N);

}  // namespace pie2d
