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

#include "fig8rt/saddle.hpp"

#include <algorithm>
#include <cmath>

#include "fig8rt/chernsimons.hpp"
#include "fig8rt/invariants.hpp"
#include "fig8rt/specfun.hpp"

namespace fig8rt::saddle {
namespace {

constexpr double kCutTol = 1e-12;

void check_strip(cplx x, cplx y) {
    // Li2 arguments e^{2 pi i (x +- y)} must stay off the cut [1, inf):
    // on the cut means x +- y has integral real part and nonpositive
    // imaginary part.
    for (cplx s : {x + y, x - y}) {
        if (dist_to_int(s.real()) < kCutTol && s.imag() <= kCutTol)
            throw std::domain_error("psi: argument within tolerance of the dilogarithm cut");
    }
}

cplx expi2pi(cplx z) { return std::exp(kTwoPi * cplx(0.0, 1.0) * z); }

}  // namespace

cplx psi(const PhaseIndex& idx, cplx x, cplx y) {
    check_strip(x, y);
    const auto& s = idx.surgery;
    const double p = static_cast<double>(s.p);
    const double q = static_cast<double>(s.q);
    const double d = static_cast<double>(s.d);
    const double a = static_cast<double>(idx.a);
    const double b = static_cast<double>(idx.b);
    const double n = static_cast<double>(idx.n);
    cplx li = specfun::li2(expi2pi(x + y)) - specfun::li2(expi2pi(x - y));
    return a * x + b * y - d * n * n / q - p / (4.0 * q) * x * x + n / q * x - x * y +
           li / (4.0 * kPi * kPi);
}

std::pair<cplx, cplx> grad_psi(const PhaseIndex& idx, cplx x, cplx y) {
    check_strip(x, y);
    const auto& s = idx.surgery;
    const double p = static_cast<double>(s.p);
    const double q = static_cast<double>(s.q);
    const double a = static_cast<double>(idx.a);
    const double b = static_cast<double>(idx.b);
    const double n = static_cast<double>(idx.n);
    cplx zw = expi2pi(x + y);
    cplx zw1 = expi2pi(x - y);
    cplx la = std::log(1.0 - zw);
    cplx lb = std::log(1.0 - zw1);
    const cplx i2pi(0.0, kTwoPi);
    cplx dx = (i2pi * (a - y) - p / (2.0 * q) * i2pi * x + i2pi * n / q + la - lb) / i2pi;
    cplx dy = (i2pi * (b - x) + la + lb) / i2pi;
    return {dx, dy};
}

Hessian2 hessian(const PhaseIndex& idx, cplx x, cplx y) {
    const auto& s = idx.surgery;
    cplx z = expi2pi(x);
    cplx w = expi2pi(y);
    cplx h22 = 1.0 / w - w;
    cplx h11 = h22 - static_cast<double>(s.p) / (2.0 * static_cast<double>(s.q));
    cplx h12 = z - 1.0 / z;
    return {h11, h12, h22};
}

double w_pm(double x, int sign) {
    double c = std::cos(kTwoPi * x);
    if (c < -1.0 - 1e-12 || c > -0.5 + 1e-12)
        throw std::domain_error("w_pm: cos(2 pi x) must lie in [-1, -1/2]");
    double cp = c + 0.5;
    if (cp > 0.0) cp = 0.0;
    double disc = cp * (c - 1.5);
    return c - 0.5 + (sign >= 0 ? 1.0 : -1.0) * std::sqrt(std::max(disc, 0.0));
}

namespace {

// Psi at a point of S (x real, Re y = 1/2), evaluated branch-independently.
// Classes with theta = 1/4 land exactly on the dilogarithm cut (z w real
// > 1); the real part of Li2 is continuous across the cut and the imaginary
// part of Psi is the Bloch-Wigner combination, which vanishes identically on
// S because z/w = 1/conj(z w) there.
cplx psi_on_S(const PhaseIndex& idx, cplx x, cplx y) {
    const auto& s = idx.surgery;
    const double p = static_cast<double>(s.p);
    const double q = static_cast<double>(s.q);
    const double d = static_cast<double>(s.d);
    const double a = static_cast<double>(idx.a);
    const double b = static_cast<double>(idx.b);
    const double n = static_cast<double>(idx.n);
    cplx zw = expi2pi(x + y);
    cplx zw1 = expi2pi(x - y);
    double re = a * x.real() + b * y.real() - d * n * n / q - p / (4.0 * q) * x.real() * x.real() +
                n / q * x.real() - x.real() * y.real() +
                (specfun::li2(zw).real() - specfun::li2(zw1).real()) / (4.0 * kPi * kPi);
    double im = (specfun::bloch_wigner(zw) - specfun::bloch_wigner(zw1)) / (4.0 * kPi * kPi);
    return {re, im};
}

// Builds the critical point attached to a moduli class at x = sgn * 2 theta.
CriticalPoint build_point(const SurgeryCoefficient& surgery,
                          const repvar::FlatConnectionClass& cls, int sgn) {
    const double q = static_cast<double>(surgery.q);
    const double p = static_cast<double>(surgery.p);
    double theta = cls.theta;
    // Snap the quarter point: its critical point lands exactly on the
    // dilogarithm cut and the branch data below must be resolved through the
    // principal argument of exactly-real quantities, not root-finder noise.
    if (std::fabs(theta - 0.25) < 1e-9) theta = 0.25;
    double wv = 1.0 + repvar::u_pm(theta, cls.eps);  // negative real
    cplx x(sgn * 2.0 * theta, 0.0);
    cplx y(0.5, -std::log(-wv) / kTwoPi);

    cplx z = expi2pi(x);
    if (std::fabs(z.imag()) < 1e-10) z = cplx(z.real(), 0.0);
    cplx w(wv, 0.0);  // e^{2 pi i y} exactly, by construction of y
    cplx la = std::log(1.0 - z * w);
    cplx lb = std::log(1.0 - z / w);
    cplx b_val = x + cplx(0.0, 1.0) / kTwoPi * (la + lb);
    cplx n_val = q * (y + p / (2.0 * q) * x + cplx(0.0, 1.0) / kTwoPi * (la - lb));

    long long b_int = std::llround(b_val.real());
    long long n_int = std::llround(n_val.real());
    if (std::abs(b_val - cplx(static_cast<double>(b_int), 0.0)) > 1e-6 ||
        std::abs(n_val - cplx(static_cast<double>(n_int), 0.0)) > 1e-6)
        throw std::runtime_error("su2_critical_points: non-integral (b, n) at theta = " +
                                 std::to_string(theta));

    CriticalPoint pt;
    pt.index = PhaseIndex{0, b_int, n_int, surgery};
    pt.x = x;
    pt.y = y;
    pt.theta = theta;
    pt.eps = cls.eps;
    pt.mirror = sgn < 0;
    pt.in_S = true;
    pt.rep_class = cls;
    // Residual of the stationarity equations, from the same one-sided logs
    // that b and n were rounded from (the quarter classes sit on the cut,
    // where an independent re-evaluation could land on the other sheet).
    const cplx i2pi(0.0, kTwoPi);
    cplx gx = -y - p / (2.0 * q) * x + static_cast<double>(n_int) / q + (la - lb) / i2pi;
    cplx gy = (static_cast<double>(b_int) - x) + (la + lb) / i2pi;
    pt.grad_norm = std::hypot(std::abs(gx), std::abs(gy));
    pt.psi_value = psi_on_S(pt.index, x, y);
    pt.hess = hessian(pt.index, x, y);
    pt.det_h = pt.hess.det();
    return pt;
}

}  // namespace

std::vector<CriticalPoint> su2_critical_points(const SurgeryCoefficient& surgery) {
    std::vector<CriticalPoint> out;
    auto classes = repvar::irreducible_classes(repvar::enumerate_su2_moduli(surgery));
    for (const auto& cls : classes) {
        if (cls.tangential) continue;
        out.push_back(build_point(surgery, cls, +1));
        out.push_back(build_point(surgery, cls, -1));
    }
    for (auto& pt : out) classify_nondegenerate(surgery, pt);
    return out;
}

CsPsiReport verify_cs_equals_psi(const SurgeryCoefficient& surgery) {
    CsPsiReport rep;
    rep.surgery = surgery;
    for (const auto& pt : su2_critical_points(surgery)) {
        double cs = chernsimons::cs_irreducible(surgery, pt.theta, pt.eps);
        double defect = dist_to_int(pt.psi_value.real() - cs);
        rep.rows.push_back({pt.theta, pt.eps, pt.mirror, mod1(pt.psi_value.real()), cs, defect});
        rep.max_defect = std::max(rep.max_defect, defect);
    }
    return rep;
}

double exceptional_cos(const SurgeryCoefficient& surgery) {
    double t = surgery.ratio() * surgery.ratio();
    if (t <= 16.0) throw std::domain_error("exceptional_cos: needs (p/q)^2 > 16");
    double apq = std::fabs(surgery.ratio());
    return 0.5 + (4.0 - apq * std::sqrt(t - 15.0)) / (t - 16.0);
}

Classification classify_nondegenerate(const SurgeryCoefficient& surgery, CriticalPoint& pt) {
    pt.degenerate_candidate = false;
    pt.nondegenerate = true;
    double apq = std::fabs(surgery.ratio());
    if (apq < std::sqrt(20.0)) return Classification::Nondegenerate;
    double c = std::cos(kTwoPi * pt.x.real());
    double cstar = exceptional_cos(surgery);
    if (std::fabs(c - cstar) < 1e-6) {
        // Degenerate candidates carry the designated root of w: w_- for
        // p/q > 0 and w_+ for p/q < 0.
        double wv = expi2pi(pt.y).real();
        double designated = w_pm(pt.x.real(), surgery.ratio() > 0 ? -1 : +1);
        if (std::fabs(wv - designated) < 1e-6) {
            pt.degenerate_candidate = true;
            pt.nondegenerate = std::abs(pt.det_h) > 1e-6;
            return Classification::DegenerateCandidate;
        }
    }
    return Classification::Nondegenerate;
}

std::optional<std::pair<cplx, cplx>> positive_definite_witness(const CriticalPoint& pt) {
    const auto& H = pt.hess;
    auto im_pos_def = [&](cplx alpha, cplx beta) {
        // strict positivity up to roundoff; H22 collapses to ~1e-16 for the
        // p = 6m+3 classes and must not slip through via a grid degeneracy
        const double tol = 1e-9;
        double a = std::imag(alpha * alpha * H.h11);
        double b = std::imag(beta * beta * H.h22);
        double c = std::imag(alpha * beta * H.h12);
        return a > tol && b > tol && a * b - c * c > tol * tol;
    };
    const cplx e4 = std::polar(1.0, kPi / 4.0);
    const cplx e4m = std::polar(1.0, -kPi / 4.0);
    if (pt.in_S) {
        double h11 = H.h11.real();
        double h22 = H.h22.real();
        if (h11 != 0.0 && h22 != 0.0) {
            if (H.h12 == cplx(0.0, 0.0) || std::abs(H.h12) < 1e-14) {
                cplx alpha = h11 > 0 ? e4 : e4m;
                cplx beta = h22 > 0 ? e4 : e4m;
                if (im_pos_def(alpha, beta)) return std::make_pair(alpha, beta);
            }
            if (h11 > 0 && h22 > 0 && im_pos_def(e4, e4)) return std::make_pair(e4, e4);
            if (h11 < 0 && h22 < 0 && im_pos_def(e4m, e4m)) return std::make_pair(e4m, e4m);
            if (h11 * h22 < 0 && pt.det_h.real() < 0) {
                cplx alpha = h11 > 0 ? e4 : e4m;
                cplx beta = h11 > 0 ? e4m : e4;
                if (im_pos_def(alpha, beta)) return std::make_pair(alpha, beta);
            }
        }
    }
    for (int i = 0; i < 360; ++i) {
        cplx alpha = std::polar(1.0, kTwoPi * i / 360.0);
        for (int j = 0; j < 360; ++j) {
            cplx beta = std::polar(1.0, kTwoPi * j / 360.0);
            if (im_pos_def(alpha, beta)) return std::make_pair(alpha, beta);
        }
    }
    return std::nullopt;
}

AsymptoticPrediction make_prediction(const SurgeryCoefficient& surgery, int multiplicity) {
    AsymptoticPrediction pred;
    pred.surgery = surgery;
    const int spq = sign_of(surgery.p * surgery.q);
    pred.front = static_cast<double>(sign_of(surgery.q)) /
                 (4.0 * std::sqrt(std::fabs(static_cast<double>(surgery.q)))) *
                 std::polar(1.0, 3.0 * kPi / 4.0 * spq);
    auto points = su2_critical_points(surgery);
    for (const auto& pt : points) {
        if (pt.mirror) continue;  // one term per moduli class
        if (pt.degenerate_candidate && std::abs(pt.det_h) <= 1e-6)
            throw std::runtime_error(
                "leading_tau_asymptotics: degenerate critical point at theta = " +
                std::to_string(pt.theta) + "; stationary-phase model refused");
        double cs = chernsimons::cs_irreducible(surgery, pt.theta, pt.eps);
        const double q = static_cast<double>(surgery.q);
        const double d = static_cast<double>(surgery.d);
        double sinfac =
            std::sin(kPi / q * (pt.x.real() - 2.0 * static_cast<double>(pt.index.n) * d));
        double amp = multiplicity * sinfac / std::sqrt(std::abs(pt.det_h));
        pred.terms.push_back({cs, amp, multiplicity, 0, pt.theta, pt.eps});
    }
    return pred;
}

cplx eval_prediction(const AsymptoticPrediction& pred, int r) {
    cplx total = 0.0;
    for (const auto& t : pred.terms) {
        total += std::polar(1.0, kTwoPi * r * t.cs) * std::polar(1.0, kPi * t.sigma / 2.0) *
                 t.amplitude;
    }
    return pred.front * total;
}

std::vector<int> calibrate_sigma(AsymptoticPrediction& pred, const std::vector<int>& r_calib) {
    const size_t k = pred.terms.size();
    std::vector<cplx> targets;
    targets.reserve(r_calib.size());
    for (int r : r_calib) targets.push_back(invariants::tau_bar(r, pred.surgery));

    std::vector<int> best(k, 0), current(k, 0);
    double best_cost = 1e300;
    const size_t combos = static_cast<size_t>(std::pow(4.0, static_cast<double>(k)));
    for (size_t code = 0; code < combos; ++code) {
        size_t c = code;
        for (size_t i = 0; i < k; ++i) {
            current[i] = static_cast<int>(c % 4);
            c /= 4;
        }
        for (size_t i = 0; i < k; ++i) pred.terms[i].sigma = current[i];
        double cost = 0.0;
        for (size_t j = 0; j < r_calib.size(); ++j)
            cost += std::abs(targets[j] - eval_prediction(pred, r_calib[j]));
        if (cost < best_cost) {
            best_cost = cost;
            best = current;
        }
    }
    for (size_t i = 0; i < k; ++i) pred.terms[i].sigma = best[i];
    return best;
}

AsymptoticPrediction leading_tau_asymptotics(const SurgeryCoefficient& surgery, SigmaMode mode,
                                             int multiplicity) {
    auto pred = make_prediction(surgery, multiplicity);
    if (mode == SigmaMode::Calibrate) {
        std::vector<int> calib{40, 60};
        calibrate_sigma(pred, calib);
    }
    return pred;
}

cplx fig8_phase(cplx x) {
    if (dist_to_int(x.real()) < kCutTol)
        throw std::domain_error("fig8_phase: Re(x) within tolerance of the integer lattice");
    return (specfun::li2(expi2pi(-x)) - specfun::li2(expi2pi(x))) / (kTwoPi * cplx(0.0, 1.0));
}

cplx fig8_phase_d2(cplx x) {
    if (dist_to_int(x.real()) < kCutTol)
        throw std::domain_error("fig8_phase_d2: Re(x) within tolerance of the integer lattice");
    cplx z = expi2pi(x);
    return kTwoPi * cplx(0.0, 1.0) * (z + 1.0) / (z - 1.0);
}

double vol_fig8() { return 2.0 * specfun::cl2(kPi / 3.0); }

double jones_leading_log(int r) {
    return -0.25 * std::log(3.0) + 1.5 * std::log(static_cast<double>(r)) +
           r * vol_fig8() / kTwoPi;
}

}  // namespace fig8rt::saddle
