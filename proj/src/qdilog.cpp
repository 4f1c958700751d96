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

#include "fig8rt/qdilog.hpp"

#include <cmath>

#include "fig8rt/quadrature.hpp"

namespace fig8rt::qdilog {
namespace {

// 1/sinh(w) - 1/w, stable near w = 0 and free of sinh overflow for real w.
cplx sinh_recip_defect(cplx w) {
    double aw = std::abs(w);
    if (aw < 0.25) {
        cplx w2 = w * w;
        return w * (-1.0 / 6.0 +
                    w2 * (7.0 / 360.0 + w2 * (-31.0 / 15120.0 + w2 * (127.0 / 604800.0))));
    }
    if (w.imag() == 0.0 && std::fabs(w.real()) > 36.0) {
        double x = w.real();
        double s = x > 0 ? 1.0 : -1.0;
        return cplx(s * 2.0 * std::exp(-std::fabs(x)) - 1.0 / x, 0.0);
    }
    return 1.0 / std::sinh(w) - 1.0 / w;
}

double ray_cutoff(const QDilogContext& ctx, double decay_rate) {
    double T = 45.0 / std::max(decay_rate, 1e-6);
    return std::min(std::max(T, ctx.contour_radius + 1.0), ctx.tail_cutoff_cap);
}

// On the rays the substitution z -> -z folds both half-lines into [R, T]
// and the kernel 1/(4 sinh(pi t) sinh(gamma t) t) is written with the
// exponential growth factored out so nothing overflows:
//   4 sinh(pi t) sinh(g t) t = e^{(pi+g)t} (1-e^{-2 pi t})(1-e^{-2 g t}) t.
double ray_kernel_coef(double t, double g) {
    return 1.0 / ((1.0 - std::exp(-2.0 * kPi * t)) * (1.0 - std::exp(-2.0 * g * t)) * t);
}

}  // namespace

StripPoint classify_strip_point(const QDilogContext& ctx, cplx zeta) {
    return {zeta, std::fabs(zeta.real()) < kPi + ctx.gamma};
}

cplx log_s_gamma_strip(const QDilogContext& ctx, cplx zeta) {
    if (!classify_strip_point(ctx, zeta).in_strip)
        throw std::domain_error("s_gamma_strip: |Re zeta| must be < pi + gamma");
    const double g = ctx.gamma;
    const double R = ctx.contour_radius;
    const double shift = kPi + g;
    auto ray = [&](double t) -> cplx {
        return (std::exp((zeta - shift) * t) - std::exp((-zeta - shift) * t)) *
               ray_kernel_coef(t, g);
    };
    double decay = shift - std::fabs(zeta.real());
    cplx rays = adaptive_gk(ray, R, ray_cutoff(ctx, decay), ctx.quad_tol);
    auto semi = [&](double t) -> cplx {
        cplx z = std::polar(R, kPi - t);
        return std::exp(zeta * z) * 0.25 / (std::sinh(kPi * z) * std::sinh(g * z) * z) *
               cplx(0.0, -1.0) * z;
    };
    cplx semicircle = adaptive_gk(semi, 0.0, kPi, ctx.quad_tol);
    return rays + semicircle;
}

cplx s_gamma_strip(const QDilogContext& ctx, cplx zeta) {
    return std::exp(log_s_gamma_strip(ctx, zeta));
}

cplx i_gamma(const QDilogContext& ctx, cplx zeta) {
    if (std::fabs(zeta.real()) > kPi + 1e-12)
        throw std::domain_error("i_gamma: |Re zeta| must be <= pi");
    const double g = ctx.gamma;
    const double R = ctx.contour_radius;
    auto ray = [&](double t) -> cplx {
        // e^{zeta t}/(4 t sinh(pi t)) = e^{(zeta-pi)t} / (2 t (1-e^{-2 pi t}))
        cplx defect = sinh_recip_defect(cplx(g * t, 0.0));
        return (std::exp((zeta - kPi) * t) - std::exp((-zeta - kPi) * t)) * defect /
               (2.0 * t * (1.0 - std::exp(-2.0 * kPi * t)));
    };
    double decay = kPi - std::fabs(zeta.real());
    cplx rays = adaptive_gk(ray, R, ray_cutoff(ctx, decay), ctx.quad_tol);
    auto semi = [&](double t) -> cplx {
        cplx z = std::polar(R, kPi - t);
        return std::exp(zeta * z) * 0.25 * sinh_recip_defect(g * z) / (z * std::sinh(kPi * z)) *
               cplx(0.0, -1.0) * z;
    };
    cplx semicircle = adaptive_gk(semi, 0.0, kPi, ctx.quad_tol);
    return rays + semicircle;
}

ExtendedValue s_gamma_ext(const QDilogContext& ctx, cplx zeta) {
    // Shift into the fundamental strip with
    //   S(zeta) = S(zeta - 2 pi) / (1 + e^{i r (zeta - pi)})   (from the right)
    //   S(zeta) = (1 + e^{i r (zeta + pi)}) S(zeta + 2 pi)     (from the left)
    const auto r = static_cast<double>(ctx.r);
    int shifts = 0;
    cplx log_factor = 0.0;
    cplx z = zeta;
    const double margin = 0.5 * ctx.gamma;
    while (z.real() >= kPi + margin) {
        cplx f = 1.0 + std::exp(cplx(0.0, 1.0) * r * (z - kPi));
        if (std::abs(f) < 1e-8)
            throw std::domain_error("s_gamma: evaluation within 1e-8 of a pole");
        log_factor -= std::log(f);
        z -= kTwoPi;
        ++shifts;
    }
    while (z.real() <= -kPi - margin) {
        cplx f = 1.0 + std::exp(cplx(0.0, 1.0) * r * (z + kPi));
        // Zeros of S live on this side; a vanishing factor is a zero of S.
        if (f == cplx(0.0, 0.0)) return {0.0, shifts};
        log_factor += std::log(f);
        z += kTwoPi;
        --shifts;
    }
    return {std::exp(log_factor + log_s_gamma_strip(ctx, z)), shifts};
}

cplx g_r(const QDilogContext& ctx, cplx x) {
    return std::exp(log_s_gamma_strip(ctx, kPi - kTwoPi * x) -
                    log_s_gamma_strip(ctx, -kPi + kTwoPi * x));
}

namespace {

cplx f_nr_impl(const QDilogContext& ctx, const SurgeryCoefficient& s, long long n, cplx x, cplx y,
               bool conjugate_phase) {
    const auto p = static_cast<double>(s.p);
    const auto q = static_cast<double>(s.q);
    const auto d = static_cast<double>(s.d);
    const auto nn = static_cast<double>(n);
    cplx inner = d * nn * nn / q + p / (4.0 * q) * x * x - nn / q * x;
    if (conjugate_phase) inner = -inner;
    cplx phase = kTwoPi * cplx(0.0, 1.0) * static_cast<double>(ctx.r) * (inner - x * y);
    cplx num = s_gamma(ctx, -kPi + kTwoPi * (x - y));
    cplx den = s_gamma(ctx, -kPi + kTwoPi * (x + y));
    return std::sin(kPi / q * (x - 2.0 * nn * d)) * std::exp(phase) * num / den;
}

}  // namespace

cplx f_nr(const QDilogContext& ctx, const SurgeryCoefficient& s, long long n, cplx x, cplx y) {
    return f_nr_impl(ctx, s, n, x, y, false);
}

cplx fbar_nr(const QDilogContext& ctx, const SurgeryCoefficient& s, long long n, cplx x, cplx y) {
    return f_nr_impl(ctx, s, n, x, y, true);
}

SGammaGrid::SGammaGrid(const QDilogContext& ctx, double re_max) : re_max_(re_max) {
    if (re_max >= kPi + ctx.gamma)
        throw std::domain_error("SGammaGrid: re_max must stay inside the strip");
    const double R = ctx.contour_radius;
    const double T = ray_cutoff(ctx, kPi + ctx.gamma - re_max);
    const double g = ctx.gamma;
    GaussLegendre gl(24);
    double a = R;
    double width = 0.5;
    while (a < T) {
        double b = std::min(a + width, T);
        for (size_t i = 0; i < gl.x.size(); ++i) {
            double t = 0.5 * (a + b) + 0.5 * (b - a) * gl.x[i];
            double w = 0.5 * (b - a) * gl.w[i];
            ray_nodes_.push_back(t);
            ray_weights_.push_back(w * ray_kernel_coef(t, g));
        }
        a = b;
        width *= 1.6;
    }
    GaussLegendre semi(64);
    for (size_t i = 0; i < semi.x.size(); ++i) {
        double t = 0.5 * kPi * (1.0 + semi.x[i]);
        double w = 0.5 * kPi * semi.w[i];
        cplx z = std::polar(R, kPi - t);
        semi_nodes_.push_back(z);
        semi_weights_.push_back(w * 0.25 / (std::sinh(kPi * z) * std::sinh(g * z) * z) *
                                cplx(0.0, -1.0) * z);
    }
    shift_ = kPi + g;
}

cplx SGammaGrid::log_eval(cplx zeta) const {
    if (std::fabs(zeta.real()) > re_max_ + 1e-12)
        throw std::domain_error("SGammaGrid: zeta outside the calibrated band");
    cplx acc = 0.0;
    for (size_t i = 0; i < ray_nodes_.size(); ++i) {
        double t = ray_nodes_[i];
        acc += (std::exp((zeta - shift_) * t) - std::exp((-zeta - shift_) * t)) * ray_weights_[i];
    }
    for (size_t i = 0; i < semi_nodes_.size(); ++i)
        acc += std::exp(zeta * semi_nodes_[i]) * semi_weights_[i];
    return acc;
}

cplx SGammaGrid::eval_ext(const QDilogContext& ctx, cplx zeta) const {
    const auto r = static_cast<double>(ctx.r);
    cplx log_factor = 0.0;
    cplx z = zeta;
    const double margin = 0.5 * ctx.gamma;
    while (z.real() >= kPi + margin) {
        cplx f = 1.0 + std::exp(cplx(0.0, 1.0) * r * (z - kPi));
        log_factor -= std::log(f);
        z -= kTwoPi;
    }
    while (z.real() <= -kPi - margin) {
        cplx f = 1.0 + std::exp(cplx(0.0, 1.0) * r * (z + kPi));
        if (f == cplx(0.0, 0.0)) return 0.0;
        log_factor += std::log(f);
        z += kTwoPi;
    }
    return std::exp(log_factor + log_eval(z));
}

}  // namespace fig8rt::qdilog
