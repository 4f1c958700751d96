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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "fig8rt/numeric.hpp"

namespace fig8rt {

// Gauss-Kronrod 7-15 nodes on [-1,1] (positive half; node 0 included once).
namespace gk {
inline constexpr double xgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
inline constexpr double wgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
inline constexpr double wg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};
}  // namespace gk

// One Gauss-Kronrod 7-15 panel; returns the K15 value and an error estimate.
template <class F>
cplx gk15_panel(F&& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    cplx f0 = f(mid);
    cplx k15 = gk::wgk[7] * f0;
    cplx g7 = gk::wg[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = hl * gk::xgk[i];
        cplx fs = f(mid + dx) + f(mid - dx);
        k15 += gk::wgk[i] * fs;
        if (i % 2 == 1) g7 += gk::wg[i / 2] * fs;
    }
    k15 *= hl;
    g7 *= hl;
    err = std::abs(k15 - g7);
    return k15;
}

// Adaptive bisection driver. abs_tol is an absolute tolerance on the whole
// interval; panels split until their error share is met or max_depth hits.
template <class F>
cplx adaptive_gk(F&& f, double a, double b, double abs_tol, int max_depth = 48) {
    struct Item {
        double a, b, tol;
        int depth;
    };
    std::vector<Item> stack{{a, b, abs_tol, 0}};
    cplx total = 0.0;
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        double err = 0.0;
        cplx v = gk15_panel(f, it.a, it.b, err);
        if (err <= it.tol || it.depth >= max_depth) {
            total += v;
            continue;
        }
        double m = 0.5 * (it.a + it.b);
        stack.push_back({it.a, m, 0.5 * it.tol, it.depth + 1});
        stack.push_back({m, it.b, 0.5 * it.tol, it.depth + 1});
    }
    return total;
}

// Integral of f along the straight segment [z0, z1] in the complex plane.
template <class F>
cplx integrate_segment(F&& f, cplx z0, cplx z1, double abs_tol) {
    cplx dz = z1 - z0;
    return dz * adaptive_gk([&](double t) { return f(z0 + t * dz); }, 0.0, 1.0, abs_tol);
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
struct GaussLegendre {
    std::vector<double> x, w;

    explicit GaussLegendre(int n) : x(n), w(n) {
        for (int i = 0; i < n; ++i) {
            double xi = std::cos(kPi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = xi;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
                double dx = p1 / dp;
                xi -= dx;
                if (std::fabs(dx) < 1e-16) break;
            }
            double p0 = 1.0, p1 = xi;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            x[n - 1 - i] = xi;
            w[n - 1 - i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
        }
    }
};

}  // namespace fig8rt
