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

#include <complex>
#include <stdexcept>
#include <vector>

#include "fig8rt/numeric.hpp"
#include "fig8rt/surgery.hpp"

namespace fig8rt::qdilog {

// Evaluation context for Faddeev's quantum dilogarithm at gamma = pi/r.
// The defining integral runs over the contour C_R = (-inf,-R] + semicircle
// + [R,inf) with R in (0,1); the two rays are truncated where the integrand
// falls below the tail threshold.
struct QDilogContext {
    int r = 5;                  // level; gamma = pi/r
    double gamma = kPi / 5.0;
    double contour_radius = 0.5;  // R
    double tail_cutoff_cap = 1e3;
    double quad_tol = 1e-12;

    static QDilogContext for_level(int r) {
        if (r < 4) throw std::invalid_argument("qdilog: level r must be >= 4");
        QDilogContext c;
        c.r = r;
        c.gamma = kPi / r;
        return c;
    }
};

struct StripPoint {
    cplx zeta;
    bool in_strip = false;  // |Re zeta| < pi + gamma
};

StripPoint classify_strip_point(const QDilogContext& ctx, cplx zeta);

// S_gamma(zeta) on the strip |Re zeta| < pi + gamma, by direct quadrature of
// the contour integral.
cplx s_gamma_strip(const QDilogContext& ctx, cplx zeta);

// log S_gamma(zeta); exposed because the extension multiplies in
// functional-equation factors that are most stable in log form.
cplx log_s_gamma_strip(const QDilogContext& ctx, cplx zeta);

// Correction term I_gamma(zeta) for |Re zeta| <= pi, defined by the same
// contour with the 1/sinh(gamma z) - 1/(gamma z) kernel.
cplx i_gamma(const QDilogContext& ctx, cplx zeta);

// Meromorphic extension value, with the number of functional-equation shifts
// applied to reach the fundamental strip (positive = shifted down from the
// right, where the poles sit).
struct ExtendedValue {
    cplx value;
    int shifts = 0;
};

ExtendedValue s_gamma_ext(const QDilogContext& ctx, cplx zeta);

inline cplx s_gamma(const QDilogContext& ctx, cplx zeta) {
    return s_gamma_ext(ctx, zeta).value;
}

// g_r(x) = S_gamma(pi - 2 pi x) / S_gamma(-pi + 2 pi x), the integrand of the
// single-contour formula for the top-color Jones evaluation.
cplx g_r(const QDilogContext& ctx, cplx x);

// Summand f_{n,r}(x,y) of the double-contour formula for tau_r, and the
// conjugate-invariant variant fbar_{n,r} whose phase drives the asymptotics.
cplx f_nr(const QDilogContext& ctx, const SurgeryCoefficient& s, long long n, cplx x, cplx y);
cplx fbar_nr(const QDilogContext& ctx, const SurgeryCoefficient& s, long long n, cplx x, cplx y);

// Fixed-node evaluator: the quadrature grid is frozen once per (gamma,
// re_max) so that repeated evaluations (contour checks do ~1e5 of them)
// reduce to one complex exponential per node.
class SGammaGrid {
  public:
    SGammaGrid(const QDilogContext& ctx, double re_max);

    cplx log_eval(cplx zeta) const;  // |Re zeta| <= re_max required
    cplx eval(cplx zeta) const { return std::exp(log_eval(zeta)); }

    // Extension through the functional equation, same contract as s_gamma.
    cplx eval_ext(const QDilogContext& ctx, cplx zeta) const;

  private:
    double re_max_;
    double shift_ = 0.0;                           // pi + gamma growth factor
    std::vector<double> ray_nodes_, ray_weights_;  // kernel folded in
    std::vector<cplx> semi_nodes_, semi_weights_;
};

}  // namespace fig8rt::qdilog
