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

#include "fig8rt/chernsimons.hpp"

#include <cmath>

#include "fig8rt/quadrature.hpp"
#include "fig8rt/repvar.hpp"

namespace fig8rt::chernsimons {
namespace {

constexpr double kSixth = 1.0 / 6.0;
constexpr double kQuarter = 0.25;
constexpr double kThird = 1.0 / 3.0;
constexpr double kEdge = 1e-12;

void require_arc(double theta) {
    if (theta < kSixth - 1e-9 || theta > kThird + 1e-9)
        throw std::domain_error("chernsimons: theta must lie in [1/6, 1/3]");
}

}  // namespace

int f_shift(double theta, int eps) {
    require_arc(theta);
    if (eps > 0) return theta <= kSixth + kEdge ? 0 : 1;
    return theta >= kThird - kEdge ? -1 : 0;
}

double beta_eps(double theta, int eps) {
    require_arc(theta);
    // L = -1 exactly at the arc endpoints; the principal argument is
    // direction-ambiguous there, so pin the known endpoint values.
    if (theta <= kSixth + kEdge) return 0.5;
    if (theta >= kThird - kEdge) return eps > 0 ? 1.5 : -0.5;
    cplx L = repvar::L_eps(theta, eps);
    return std::arg(L) / kTwoPi + f_shift(theta, eps);
}

int e_shift(double theta, int eps) {
    bool negative = theta < 0.0;
    double t = negative ? -theta : theta;
    require_arc(t);
    if (t <= kSixth + kEdge || t >= kThird - kEdge) return 0;
    int e_pos;
    if (std::fabs(t - kQuarter) <= kEdge)
        e_pos = eps > 0 ? 1 : 0;
    else if (t < kQuarter)
        e_pos = eps > 0 ? 1 : 0;
    else
        e_pos = eps > 0 ? 0 : 1;
    if (!negative) return e_pos;
    if (std::fabs(t - kQuarter) <= kEdge) return e_pos;  // e(-1/4) = e(1/4)
    return 1 - e_pos;
}

BranchCurves branch_curves(double theta, int eps) {
    return {theta, eps, beta_eps(theta, eps), f_shift(theta, eps), e_shift(theta, eps)};
}

QTriple q_triple(double theta, int eps) {
    double t = std::fabs(theta);
    require_arc(t);
    cplx z = std::polar(1.0, 2.0 * kTwoPi * theta);
    cplx w(1.0 + repvar::u_pm(theta, eps), 0.0);
    return {1.0 - z / w, 1.0 - w * z, w};
}

double beta_integral(double theta, int eps, double quad_tol) {
    require_arc(theta);
    if (theta <= kSixth + kEdge) return 0.0;
    auto f = [&](double t) { return cplx(beta_eps(t, eps), 0.0); };
    if (theta <= kQuarter)
        return adaptive_gk(f, kSixth, theta, quad_tol).real();
    return adaptive_gk(f, kSixth, kQuarter, quad_tol).real() +
           adaptive_gk(f, kQuarter, theta, quad_tol).real();
}

double cs_irreducible(const SurgeryCoefficient& surgery, double theta, int eps, double quad_tol,
                      double m_tol) {
    require_arc(theta);
    const double p = static_cast<double>(surgery.p);
    const double q = static_cast<double>(surgery.q);
    const double d = static_cast<double>(surgery.d);
    double hm = p * theta + q * beta_eps(theta, eps);
    double m = std::round(hm);
    if (std::fabs(hm - m) > m_tol)
        throw std::domain_error("cs_irreducible: (theta, eps) does not satisfy the extension "
                                "condition; defect = " +
                                std::to_string(std::fabs(hm - m)));
    double v = -1.0 / 6.0 - p / q * theta * theta + m / q * 2.0 * theta - d / q * m * m -
               2.0 * beta_integral(theta, eps, quad_tol);
    return mod1(v);
}

double cs_special(const SurgeryCoefficient& surgery, SpecialTheta which, int eps) {
    const auto p = surgery.p;
    const auto q = surgery.q;
    const auto c = surgery.c;
    const auto d = surgery.d;
    switch (which) {
        case SpecialTheta::Sixth: {
            bool ok = ((p % 6 + 6) % 6 == 3) && (q % 2 != 0);
            if (!ok) throw std::domain_error("cs_special: theta=1/6 needs p = 6m+3 and q odd");
            return mod1(-static_cast<double>(c * p) / 36.0 - static_cast<double>(d * q) / 4.0 -
                        static_cast<double>(d) / 2.0);
        }
        case SpecialTheta::Third: {
            bool ok = ((p % 6 + 6) % 6 == 3) && (q % 2 == 0);
            if (!ok) throw std::domain_error("cs_special: theta=1/3 needs p = 6m+3 and q even");
            return mod1(0.5 - static_cast<double>(c * p) / 9.0 - static_cast<double>(d * q) / 4.0);
        }
        case SpecialTheta::Quarter: {
            if (p % 4 != 0) throw std::domain_error("cs_special: theta=1/4 needs 4 | p");
            double base = -static_cast<double>(c * p) / 16.0;
            return mod1(base + (eps > 0 ? 0.2 : -0.2));
        }
    }
    throw std::logic_error("cs_special: unreachable");
}

double cs_abelian(const SurgeryCoefficient& surgery, long long j) {
    if (surgery.p == 0) return cs_abelian_p0();
    long long ap = surgery.p < 0 ? -surgery.p : surgery.p;
    if (j < 0 || j > ap / 2) throw std::domain_error("cs_abelian: j out of range [0, |p|/2]");
    if (ap == 1 || j == 0) return 0.0;
    // The Bezout c satisfies -q c = 1 mod p, so it is the required inverse;
    // shifting c by p moves the value by an integer.
    double v = -static_cast<double>(surgery.c) * static_cast<double>(j) * static_cast<double>(j) /
               static_cast<double>(surgery.p);
    return mod1(v);
}

double cs_abelian_p0() { return 0.0; }

}  // namespace fig8rt::chernsimons
