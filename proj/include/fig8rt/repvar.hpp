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

#include <optional>
#include <vector>

#include "fig8rt/numeric.hpp"
#include "fig8rt/surgery.hpp"

namespace fig8rt::repvar {

// Riley coordinates (s, u): the point lies on the nonabelian representation
// curve when phi(s^2, u) = 0.
struct RileyPoint {
    cplx s;
    cplx u;
};

// phi(t, u) = u^2 + (3 - (t + 1/t))(u + 1).
cplx phi_riley(cplx t, cplx u);

// Real roots u_{+-}(theta) of phi(e^{4 pi i theta}, u) = 0 on the arcs where
// the discriminant is nonnegative (theta in [-1/3,-1/6] u [1/6,1/3]).
double u_pm(double theta, int eps);

// Longitude eigenvalue lambda_11(s,u) = -1 + s^-2 - 2 s^2 + s^4 + u(s^-2 - s^2).
cplx lambda11(cplx s, cplx u);

// L_{eps}(theta) = lambda_11(e^{2 pi i theta}, u_eps(theta)).
cplx L_eps(double theta, int eps);

// Closed real/imaginary forms of L_{+-}; independent route used as a check.
double L_eps_re(double theta);
double L_eps_im(double theta, int eps);

struct Mat2 {
    cplx a, b, c, d;  // row major [[a,b],[c,d]]

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 inverse() const {  // assumes det = 1
        return {d, -b, -c, a};
    }
    cplx det() const { return a * d - b * c; }
    double frobenius() const {
        return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    }
};

struct RepMatrices {
    Mat2 C, D, W;
};

// Unimodular generators C2(s), D2(s,u) and the word value W = [x^{-1}, y].
RepMatrices rep_matrices(cplx s, cplx u);

// || W C - D W ||_F for the figure-8 relation; vanishes exactly on the
// representation variety.
double rep_residual(cplx s, cplx u);

struct ExtendResult {
    bool extends = false;
    double defect = 0.0;
};

// Whether rho_(s,u) extends over the surgery, i.e. s^{-p} = lambda_11^q.
ExtendResult extends_to_surgery(cplx s, cplx u, const SurgeryCoefficient& surgery,
                                double tol = 1e-8);

struct FlatConnectionClass {
    enum class Kind { AbelianIndex, AbelianContinuum, Irreducible };
    Kind kind = Kind::Irreducible;
    long long j = 0;      // abelian index, 0 <= j <= |p|/2
    double theta = 0.0;   // irreducible: theta in [1/6,1/3]; abelian: j/|p|
    int eps = +1;
    bool endpoint = false;    // theta in {1/6, 1/3}: the two branches merge
    bool tangential = false;  // double root flagged by the scan
    std::optional<double> cs;
};

// All SU(2) classes of M_{p/q}: the irreducible ones solve
// p theta + q beta_eps(theta) in Z, the abelian ones are indexed by
// j = 0..|p|/2 (continuum marker at p = 0).
std::vector<FlatConnectionClass> enumerate_su2_moduli(const SurgeryCoefficient& surgery,
                                                      int grid_per_unit = 10000);

inline std::vector<FlatConnectionClass> irreducible_classes(
    const std::vector<FlatConnectionClass>& all) {
    std::vector<FlatConnectionClass> out;
    for (const auto& c : all)
        if (c.kind == FlatConnectionClass::Kind::Irreducible) out.push_back(c);
    return out;
}

}  // namespace fig8rt::repvar
