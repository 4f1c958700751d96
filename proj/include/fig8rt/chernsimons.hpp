// Copyright 2026 The fig8rt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "fig8rt/numeric.hpp"
#include "fig8rt/surgery.hpp"

namespace fig8rt::chernsimons {

// Continuous longitude-holonomy branch beta_eps : [1/6, 1/3] -> R, defined
// through the principal log of L_eps plus the integer correction f_eps.
// beta_+(1/6) = beta_-(1/6) = 1/2; beta_+(1/3) = 3/2, beta_-(1/3) = -1/2.
double beta_eps(double theta, int eps);

// Branch-correction integers.
int f_shift(double theta, int eps);  // f_{+-} on [1/6, 1/3]
int e_shift(double theta, int eps);  // e_{+-} on [-1/3,-1/6] u [1/6,1/3]

struct BranchCurves {
    double theta;
    int eps;
    double beta;
    int f;
    int e;
};
BranchCurves branch_curves(double theta, int eps);

struct QTriple {
    cplx q1, q2, q3;  // Q1 Q2 = e^{4 pi i theta}, Q1 Q3 / Q2 = L_eps(theta)
};
QTriple q_triple(double theta, int eps);

// Chern-Simons invariant (mod 1, in [0,1)) of the irreducible class
// rho_{theta, eps}; theta must satisfy the extension condition
// p theta + q beta_eps(theta) in Z within m_tol.
double cs_irreducible(const SurgeryCoefficient& surgery, double theta, int eps,
                      double quad_tol = 1e-10, double m_tol = 1e-6);

enum class SpecialTheta { Sixth, Third, Quarter };

// Closed-form values at theta in {1/6, 1/3, 1/4}; throws when the extension
// condition for that theta fails (p = 6m+3 with q odd / q even; 4 | p).
double cs_special(const SurgeryCoefficient& surgery, SpecialTheta which, int eps);

// Abelian classes: CS(rho_{j/|p|}) = -c j^2 / p mod 1 with c the inverse of
// -q mod p; identically 0 for p = 0.
double cs_abelian(const SurgeryCoefficient& surgery, long long j);
double cs_abelian_p0();

// int_{1/6}^{theta} beta_eps dt by adaptive quadrature split at 1/4.
double beta_integral(double theta, int eps, double quad_tol = 1e-10);

}  // namespace fig8rt::chernsimons
