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

#include "fig8rt/repvar.hpp"

#include <algorithm>
#include <cmath>

#include "fig8rt/chernsimons.hpp"

namespace fig8rt::repvar {

cplx phi_riley(cplx t, cplx u) {
    if (t == cplx(0.0, 0.0)) throw std::domain_error("phi_riley: t must be nonzero");
    return u * u + (3.0 - (t + 1.0 / t)) * (u + 1.0);
}

double u_pm(double theta, int eps) {
    double c = std::cos(2.0 * kTwoPi * theta);
    // The discriminant has a double root at c = -1/2 (the arc endpoints);
    // the product form plus a snap keeps it exact there, where the raw
    // expression would amplify the cosine rounding to sqrt size.
    double cp = c + 0.5;
    if (std::fabs(cp) < 1e-13) cp = 0.0;
    double disc = cp * (c - 1.5);
    if (disc < 0.0) {
        if (disc < -1e-11) throw std::domain_error("u_pm: theta outside the real-root arcs");
        disc = 0.0;
    }
    return c - 1.5 + (eps >= 0 ? 1.0 : -1.0) * std::sqrt(disc);
}

cplx lambda11(cplx s, cplx u) {
    if (s == cplx(0.0, 0.0)) throw std::domain_error("lambda11: s must be nonzero");
    cplx s2 = s * s;
    cplx is2 = 1.0 / s2;
    return -1.0 + is2 - 2.0 * s2 + s2 * s2 + u * (is2 - s2);
}

cplx L_eps(double theta, int eps) {
    return lambda11(std::polar(1.0, kTwoPi * theta), cplx(u_pm(theta, eps), 0.0));
}

double L_eps_re(double theta) {
    double c = std::cos(2.0 * kTwoPi * theta);
    return 2.0 * c * c - c - 2.0;
}

double L_eps_im(double theta, int eps) {
    double c = std::cos(2.0 * kTwoPi * theta);
    double cp = c + 0.5;
    if (std::fabs(cp) < 1e-13) cp = 0.0;
    double disc = std::max(cp * (c - 1.5), 0.0);
    return -(eps >= 0 ? 1.0 : -1.0) * 2.0 * std::sin(2.0 * kTwoPi * theta) * std::sqrt(disc);
}

RepMatrices rep_matrices(cplx s, cplx u) {
    cplx is = 1.0 / s;
    Mat2 C{s, is, 0.0, is};
    Mat2 D{s, 0.0, -s * u, is};
    // w = [x^{-1}, y] = x^{-1} y x y^{-1}
    Mat2 W = C.inverse() * D * C * D.inverse();
    return {C, D, W};
}

double rep_residual(cplx s, cplx u) {
    auto m = rep_matrices(s, u);
    Mat2 lhs = m.W * m.C;
    Mat2 rhs = m.D * m.W;
    Mat2 diff{lhs.a - rhs.a, lhs.b - rhs.b, lhs.c - rhs.c, lhs.d - rhs.d};
    return diff.frobenius();
}

ExtendResult extends_to_surgery(cplx s, cplx u, const SurgeryCoefficient& surgery, double tol) {
    cplx s2 = s * s;
    if (std::abs(s2 - 1.0) < 1e-12)
        throw std::domain_error("extends_to_surgery: parabolic case s^2 = 1 never extends");
    cplx lam = lambda11(s, u);
    cplx lhs = std::pow(s, cplx(static_cast<double>(-surgery.p), 0.0));
    cplx rhs = std::pow(lam, cplx(static_cast<double>(surgery.q), 0.0));
    double defect = std::abs(lhs - rhs);
    return {defect < tol, defect};
}

namespace {

constexpr double kSixth = 1.0 / 6.0;
constexpr double kThird = 1.0 / 3.0;

struct Root {
    double theta;
    int eps;
    bool tangential;
};

// Locate solutions of p theta + q beta_eps(theta) = m in the open arc by
// sign-change bracketing on a fine grid, then bisection; tangential (double)
// roots show up as near-integer grid values without a sign change.
std::vector<Root> scan_branch(const SurgeryCoefficient& s, int eps, int grid_per_unit) {
    auto h = [&](double theta) {
        return s.p * theta + s.q * chernsimons::beta_eps(theta, eps);
    };
    double range = std::fabs(h(kThird) - h(kSixth)) + 1.0;
    int n = std::max(2000, static_cast<int>(grid_per_unit * range));
    std::vector<Root> out;
    double prev_theta = kSixth;
    double prev_h = h(prev_theta);
    double near_miss = 1e300;
    double near_theta = 0.0;
    for (int i = 1; i <= n; ++i) {
        double theta = kSixth + (kThird - kSixth) * i / n;
        double cur = h(theta);
        long long lo = static_cast<long long>(std::floor(std::min(prev_h, cur))) - 1;
        long long hi = static_cast<long long>(std::floor(std::max(prev_h, cur))) + 1;
        for (long long m = lo; m <= hi; ++m) {
            double fa = prev_h - m;
            double fb = cur - m;
            if (fa == 0.0) fa = -1e-300 * (fb >= 0 ? 1 : -1);
            if (fa * fb < 0.0) {
                double a = prev_theta, b = theta;
                for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
                    double mid = 0.5 * (a + b);
                    double fm = h(mid) - m;
                    if (fa * fm <= 0.0)
                        b = mid;
                    else {
                        a = mid;
                        fa = fm;
                    }
                }
                double root = 0.5 * (a + b);
                if (root > kSixth + 1e-9 && root < kThird - 1e-9)
                    out.push_back({root, eps, false});
            }
        }
        double miss = dist_to_int(cur);
        if (miss < near_miss) {
            near_miss = miss;
            near_theta = theta;
        }
        prev_theta = theta;
        prev_h = cur;
    }
    // A grid value within tolerance of an integer but not bracketed by any
    // found root is a tangential candidate; flag it rather than dropping it.
    if (near_miss < 1e-7) {
        bool covered = false;
        for (const auto& r : out)
            if (std::fabs(r.theta - near_theta) < 2.0 * (kThird - kSixth) / n) covered = true;
        if (!covered && near_theta > kSixth + 1e-9 && near_theta < kThird - 1e-9)
            out.push_back({near_theta, eps, true});
    }
    return out;
}

}  // namespace

std::vector<FlatConnectionClass> enumerate_su2_moduli(const SurgeryCoefficient& surgery,
                                                      int grid_per_unit) {
    std::vector<FlatConnectionClass> out;

    // Irreducible classes: interior roots on both branches.
    for (int eps : {+1, -1}) {
        for (const auto& r : scan_branch(surgery, eps, grid_per_unit)) {
            FlatConnectionClass c;
            c.kind = FlatConnectionClass::Kind::Irreducible;
            c.theta = r.theta;
            c.eps = r.eps;
            c.tangential = r.tangential;
            out.push_back(c);
        }
    }
    // Endpoint classes: theta = 1/6 (beta = 1/2) and theta = 1/3
    // (beta_+ = 3/2); the two eps branches represent the same class there.
    if (dist_to_int(surgery.p * kSixth + surgery.q * 0.5) < 1e-9) {
        FlatConnectionClass c;
        c.kind = FlatConnectionClass::Kind::Irreducible;
        c.theta = kSixth;
        c.eps = +1;
        c.endpoint = true;
        out.push_back(c);
    }
    if (dist_to_int(surgery.p * kThird + surgery.q * 1.5) < 1e-9) {
        FlatConnectionClass c;
        c.kind = FlatConnectionClass::Kind::Irreducible;
        c.theta = kThird;
        c.eps = +1;
        c.endpoint = true;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const FlatConnectionClass& a, const FlatConnectionClass& b) {
        return a.theta < b.theta || (a.theta == b.theta && a.eps > b.eps);
    });

    // Abelian classes.
    if (surgery.p == 0) {
        FlatConnectionClass c;
        c.kind = FlatConnectionClass::Kind::AbelianContinuum;
        out.push_back(c);
    } else {
        long long ap = surgery.p < 0 ? -surgery.p : surgery.p;
        for (long long j = 0; j <= ap / 2; ++j) {
            FlatConnectionClass c;
            c.kind = FlatConnectionClass::Kind::AbelianIndex;
            c.j = j;
            c.theta = static_cast<double>(j) / static_cast<double>(ap);
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace fig8rt::repvar
