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

#include "fig8rt/specfun.hpp"

#include <cmath>

namespace fig8rt::specfun {
namespace {

constexpr double kPi2Over6 = kPi * kPi / 6.0;

// B_{2k} / (2k+1)!  for the log-series of Li2.
constexpr double kBernCoef[] = {
    1.000000000000000000e+00,  2.777777777777777624e-02,  -2.777777777777777775e-04,
    4.724111866969009782e-06,  -9.185773074661964082e-08, 1.897886998897100055e-09,
    -4.064761645144225604e-11, 8.921691020456452305e-13,  -1.993929586072107443e-14,
    4.518980029619918251e-16,  -1.035651761218124718e-17, 2.395218621026186983e-19,
    -5.581785874325008982e-21, 1.309150755418321250e-22,  -3.087419802426740286e-24,
    7.315975652702202926e-26,  -1.740845657234000876e-27, 4.157635644613899880e-29,
    -9.962148488284621684e-31, 2.394034424896165219e-32,  -5.768347355367389696e-34,
    1.393179479647008033e-35};

// Direct power series, |z| <= 1/2.
cplx li2_series(cplx z) {
    cplx term = z;
    cplx sum = z;
    for (int n = 2; n < 80; ++n) {
        term *= z;
        cplx add = term / static_cast<double>(n * n);
        sum += add;
        if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

// Series in u = -Log(1-z); converges for |u| < 2*pi, used on the annulus
// 1/2 < |z| <= 1 with Re z <= 1/2 where neither the direct series nor the
// standard identities reach the series disk.
cplx li2_log_series(cplx z) {
    cplx u = -std::log(1.0 - z);
    cplx u2 = u * u;
    cplx sum = u - 0.25 * u2;  // B_0 u + B_1 u^2/2
    cplx upow = u;             // u^{2k+1}
    for (int k = 1; k < 22; ++k) {
        upow *= u2;
        cplx add = kBernCoef[k] * upow;
        sum += add;
        if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

cplx li2_unit_disk(cplx z) {
    // |z| <= 1. Reflect into Re z <= 1/2 first.
    if (z.real() > 0.5) {
        cplx om = 1.0 - z;
        if (om == cplx(0.0, 0.0)) return cplx(kPi2Over6, 0.0);
        cplx inner = std::abs(om) <= 0.5 ? li2_series(om) : li2_log_series(om);
        return kPi2Over6 - std::log(z) * std::log(om) - inner;
    }
    return std::abs(z) <= 0.5 ? li2_series(z) : li2_log_series(z);
}

}  // namespace

BranchedValue log_branched(cplx z, int winding) {
    cplx v = std::log(z);
    return {v + cplx(0.0, kTwoPi * winding), winding};
}

DilogDomainPoint classify_dilog_point(cplx z) {
    bool cut = z.imag() == 0.0 && z.real() > 1.0;
    return {z, cut};
}

cplx li2(cplx z) {
    if (z == cplx(0.0, 0.0)) return 0.0;
    double r = std::abs(z);
    if (r <= 1.0) return li2_unit_disk(z);
    // Inversion. -z keeps the sign of the zero imaginary part of z flipped,
    // which resolves the cut: Im(z) = +0 gives Arg(-z) = -pi.
    cplx lognz = std::log(-z);
    return -kPi2Over6 - 0.5 * lognz * lognz - li2_unit_disk(1.0 / z);
}

double li2_real(double x) {
    if (x > 1.0) {
        throw CutAmbiguityError(
            "li2_real: argument on the cut (1, inf); pick a side via a signed "
            "zero imaginary part or li2_reflection");
    }
    return li2(cplx(x, 0.0)).real();
}

double cl2(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t == 0.0) return 0.0;
    return li2(std::polar(1.0, t)).imag();
}

double bloch_wigner(cplx z) {
    if (z == cplx(0.0, 0.0) || z == cplx(1.0, 0.0)) return 0.0;
    if (z.imag() == 0.0 && z.real() > 1.0) return 0.0;  // continuity on the cut
    return li2(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

cplx li2_reflection(double t, int side) {
    if (t <= 1.0) throw std::domain_error("li2_reflection: requires t > 1");
    cplx logneg(std::log(t), side >= 0 ? kPi : -kPi);
    return -kPi2Over6 - 0.5 * logneg * logneg - li2(cplx(1.0 / t, 0.0));
}

}  // namespace fig8rt::specfun
