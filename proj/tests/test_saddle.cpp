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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fig8rt/chernsimons.hpp"
#include "fig8rt/invariants.hpp"
#include "fig8rt/saddle.hpp"
#include "fig8rt/specfun.hpp"

using namespace fig8rt;
using namespace fig8rt::saddle;

namespace {

std::vector<PhaseIndex> sample_indices() {
    std::vector<PhaseIndex> out;
    int i = 0;
    for (auto [p, q] : {std::pair{1LL, 1LL}, {0LL, 1LL}, {5LL, 2LL}, {-3LL, 2LL}}) {
        auto s = SurgeryCoefficient::make(p, q);
        out.push_back({i % 2, (i + 1) % 2, i % 3, s});
        out.push_back({1 - i % 2, i % 2, -(i % 2), s});
        ++i;
    }
    return out;
}

cplx rand_strip_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(0.05, 0.95), im(-0.4, 0.4);
    return {re(rng), im(rng)};
}

}  // namespace

TEST_CASE("gradient matches central finite differences") {
    std::mt19937_64 rng(11);
    const double h = 1e-6;
    int checked = 0;
    for (const auto& idx : sample_indices()) {
        for (int i = 0; i < 25; ++i) {
            cplx x = rand_strip_point(rng);
            cplx y = rand_strip_point(rng) + cplx(0.0, 0.15);
            auto [gx, gy] = grad_psi(idx, x, y);
            cplx fdx = (psi(idx, x + h, y) - psi(idx, x - h, y)) / (2.0 * h);
            cplx fdy = (psi(idx, x, y + h) - psi(idx, x, y - h)) / (2.0 * h);
            CHECK(std::abs(gx - fdx) < 1e-6);
            CHECK(std::abs(gy - fdy) < 1e-6);
            ++checked;
        }
    }
    CHECK(checked == 200);
}

TEST_CASE("branch-cut proximity rejected") {
    auto s = SurgeryCoefficient::make(1, 1);
    PhaseIndex idx{0, 0, 0, s};
    CHECK_THROWS_AS((void)psi(idx, cplx(0.3, 0.0), cplx(0.7, -0.1)), std::domain_error);
}

TEST_CASE("M_0 critical points: gradient vanishes, det H = 5, Psi = +-1/5") {
    auto s = SurgeryCoefficient::make(0, 1);
    auto pts = su2_critical_points(s);
    REQUIRE(pts.size() == 4);  // two classes and their mirrors
    int primaries = 0;
    for (const auto& pt : pts) {
        CHECK(pt.grad_norm < 1e-9);
        CHECK(std::abs(pt.det_h - cplx(5.0, 0.0)) < 1e-9);
        CHECK(std::fabs(pt.psi_value.imag()) < 1e-9);
        double frac = mod1(pt.psi_value.real());
        bool ok = std::fabs(frac - 0.2) < 1e-9 || std::fabs(frac - 0.8) < 1e-9;
        CHECK(ok);
        if (!pt.mirror) {
            ++primaries;
            CHECK(pt.x.real() == doctest::Approx(0.5));
            // w = e^{2 pi i y} = (-3 +- sqrt5)/2
            double w = std::exp(kTwoPi * -pt.y.imag()) * -1.0;
            bool wok = std::fabs(w - (-3.0 + std::sqrt(5.0)) / 2.0) < 1e-9 ||
                       std::fabs(w - (-3.0 - std::sqrt(5.0)) / 2.0) < 1e-9;
            CHECK(wok);
        }
    }
    CHECK(primaries == 2);
}

TEST_CASE("exponentiated stationarity equations hold at critical points") {
    for (auto [p, q] : {std::pair{1LL, 1LL}, {3LL, 1LL}, {5LL, 2LL}, {0LL, 1LL}}) {
        auto s = SurgeryCoefficient::make(p, q);
        for (const auto& pt : su2_critical_points(s)) {
            cplx v = std::exp(cplx(0.0, kPi) * pt.x);
            cplx w = std::exp(cplx(0.0, kTwoPi) * pt.y);
            cplx lhs1 = std::pow(v, cplx(static_cast<double>(-p), 0.0));
            cplx rhs1 = std::pow((w - v * v) / (1.0 - v * v * w), cplx(static_cast<double>(q), 0.0));
            CHECK(std::abs(lhs1 - rhs1) < 1e-9);
            cplx lhs2 = (1.0 - v * v * w) * (w - v * v);
            CHECK(std::abs(lhs2 - v * v * w) < 1e-9);
            // (v, w) -> (v^{-1}, w) maps solutions to solutions
            cplx vi = 1.0 / v;
            cplx lhs2i = (1.0 - vi * vi * w) * (w - vi * vi);
            CHECK(std::abs(lhs2i - vi * vi * w) < 1e-9);
        }
    }
}

TEST_CASE("Hessian determinant routes agree") {
    for (auto [p, q] : {std::pair{1LL, 1LL}, {3LL, 1LL}, {5LL, 2LL}, {7LL, 2LL}}) {
        auto s = SurgeryCoefficient::make(p, q);
        for (const auto& pt : su2_critical_points(s)) {
            cplx z = std::exp(cplx(0.0, kTwoPi) * pt.x);
            cplx w = std::exp(cplx(0.0, kTwoPi) * pt.y);
            // det H = 1 - 2(z + 1/z) + p/(2q) (w - 1/w)
            cplx det3 = 1.0 - 2.0 * (z + 1.0 / z) +
                        s.ratio() / 2.0 * (w - 1.0 / w);
            CHECK(std::abs(pt.det_h - det3) < 1e-10);
            // on S: det H = 1 - 4 cos(2 pi x) + (p/q) sinh(2 pi Im y)
            double det5 = 1.0 - 4.0 * std::cos(kTwoPi * pt.x.real()) +
                          s.ratio() * std::sinh(kTwoPi * pt.y.imag());
            CHECK(std::abs(pt.det_h - cplx(det5, 0.0)) < 1e-9);
            // H12 = 2 i sin(2 pi x) on S
            CHECK(std::abs(pt.hess.h12 - cplx(0.0, 2.0 * std::sin(kTwoPi * pt.x.real()))) < 1e-12);
            // det via w_pm form: 1 - 4 cos +- (p/q) sqrt(cos^2 - cos - 3/4)
            double c = std::cos(kTwoPi * pt.x.real());
            double disc = std::max((c + 0.5) * (c - 1.5), 0.0);
            double wv = std::exp(kTwoPi * -pt.y.imag()) * -1.0;
            int sgn = std::fabs(wv - w_pm(pt.x.real(), +1)) < 1e-8 ? +1 : -1;
            double det4 = 1.0 - 4.0 * c + sgn * s.ratio() * std::sqrt(disc);
            CHECK(std::abs(pt.det_h - cplx(det4, 0.0)) < 1e-9);
        }
    }
}

TEST_CASE("w_pm") {
    // x = 1/2: w_pm = (-3 +- sqrt5)/2
    CHECK(w_pm(0.5, +1) == doctest::Approx((-3.0 + std::sqrt(5.0)) / 2.0));
    CHECK(w_pm(0.5, -1) == doctest::Approx((-3.0 - std::sqrt(5.0)) / 2.0));
    CHECK(w_pm(0.4, +1) * w_pm(0.4, -1) == doctest::Approx(1.0).epsilon(1e-12));
    double w = w_pm(0.4, +1);
    double c = std::cos(kTwoPi * 0.4);
    CHECK(std::fabs(w * w + (1.0 - 2.0 * c) * w + 1.0) < 1e-12);
    CHECK_THROWS_AS((void)w_pm(0.05, +1), std::domain_error);
}

TEST_CASE("b table from the stationarity data") {
    // b = 0 on theta in [1/6, 1/4] and the mirror arc, b = 1 on ]1/4, 1/3]
    for (auto [p, q] : {std::pair{1LL, 1LL}, {2LL, 1LL}, {5LL, 2LL}, {-4LL, 3LL}}) {
        auto s = SurgeryCoefficient::make(p, q);
        for (const auto& pt : su2_critical_points(s)) {
            double th = pt.theta;
            if (!pt.mirror) {
                long long expect = th <= 0.25 + 1e-12 ? 0 : 1;
                CHECK(pt.index.b == expect);
            } else {
                // mirror arc theta in [-1/3, -1/6]: b = -1 below -1/4, else 0
                long long expect = -th <= -0.25 + 1e-12 ? -1 : 0;
                CHECK(pt.index.b == expect);
            }
        }
    }
}

TEST_CASE("primary count equals moduli count") {
    for (auto [p, q] : {std::pair{1LL, 1LL}, {3LL, 1LL}, {4LL, 1LL}, {5LL, 2LL}, {0LL, 1LL}}) {
        auto s = SurgeryCoefficient::make(p, q);
        auto classes = repvar::irreducible_classes(repvar::enumerate_su2_moduli(s));
        size_t nontang = 0;
        for (const auto& c : classes)
            if (!c.tangential) ++nontang;
        size_t primaries = 0;
        for (const auto& pt : su2_critical_points(s))
            if (!pt.mirror) ++primaries;
        CHECK(primaries == nontang);
    }
}

TEST_CASE("Psi shift covariance mod Z") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> kd(-3, 3);
    for (auto [p, q] : {std::pair{1LL, 1LL}, {5LL, 2LL}}) {
        auto s = SurgeryCoefficient::make(p, q);
        for (const auto& pt : su2_critical_points(s)) {
            for (int trial = 0; trial < 10; ++trial) {
                long long k = kd(rng), l = kd(rng);
                PhaseIndex shifted{pt.index.a + l, pt.index.b + 2 * k, pt.index.n + p * k, s};
                cplx v = psi(shifted, pt.x + 2.0 * k, pt.y + static_cast<double>(l));
                // shifted point is critical again
                auto [gx, gy] = grad_psi(shifted, pt.x + 2.0 * k, pt.y + static_cast<double>(l));
                CHECK(std::abs(gx) < 1e-9);
                CHECK(std::abs(gy) < 1e-9);
                CHECK(dist_to_int((v - pt.psi_value).real()) < 1e-9);
                CHECK(std::fabs((v - pt.psi_value).imag()) < 1e-9);
            }
        }
    }
}

TEST_CASE("Im Psi vanishes on S and matches Bloch-Wigner off S") {
    for (auto [p, q] : {std::pair{1LL, 1LL}, {5LL, 2LL}, {7LL, 3LL}}) {
        auto s = SurgeryCoefficient::make(p, q);
        for (const auto& pt : su2_critical_points(s)) {
            CHECK(std::fabs(pt.psi_value.imag()) < 1e-9);
            // lem: Im Psi = (D(e^{2 pi i(x+y)}) - D(e^{2 pi i(x-y)}))/(4 pi^2)
            cplx zw = std::exp(kTwoPi * cplx(0.0, 1.0) * (pt.x + pt.y));
            cplx zw1 = std::exp(kTwoPi * cplx(0.0, 1.0) * (pt.x - pt.y));
            double bw = (specfun::bloch_wigner(zw) - specfun::bloch_wigner(zw1)) /
                        (4.0 * kPi * kPi);
            CHECK(std::fabs(pt.psi_value.imag() - bw) < 1e-10);
        }
    }
}

TEST_CASE("CS equals Psi mod Z") {
    for (auto [p, q] : {std::pair{1LL, 1LL}, {0LL, 1LL}, {5LL, 2LL}, {-2LL, 3LL}, {7LL, 2LL},
                        {5LL, 3LL}}) {
        auto rep = verify_cs_equals_psi(SurgeryCoefficient::make(p, q));
        CHECK(rep.max_defect < 1e-6);
        CHECK(!rep.rows.empty());
    }
    // M_0 values are +-1/5
    auto rep0 = verify_cs_equals_psi(SurgeryCoefficient::make(0, 1));
    for (const auto& row : rep0.rows) {
        bool ok = std::fabs(row.psi_mod1 - 0.2) < 1e-8 || std::fabs(row.psi_mod1 - 0.8) < 1e-8;
        CHECK(ok);
    }
}

TEST_CASE("nondegeneracy classification") {
    // |p/q| in {1, 2, 3}: everything nondegenerate
    for (long long p : {1LL, 2LL, 3LL}) {
        auto s = SurgeryCoefficient::make(p, 1);
        for (auto& pt : su2_critical_points(s)) {
            CHECK(pt.nondegenerate);
            CHECK_FALSE(pt.degenerate_candidate);
            CHECK(std::abs(pt.det_h) > 1e-6);
        }
    }
    // |p/q| = 5 > sqrt 20: direct check confirms nondegenerate
    auto s5 = SurgeryCoefficient::make(5, 1);
    for (auto& pt : su2_critical_points(s5)) CHECK(std::abs(pt.det_h) > 1e-6);
    // exceptional cosine solves the degeneracy quadratic (plus branch)
    double t = 25.0;
    double c = exceptional_cos(s5);
    double quad = (16.0 - t) * c * c + (t - 8.0) * c + 1.0 + 0.75 * t;
    CHECK(std::fabs(quad) < 1e-10);
}

TEST_CASE("positive definite witnesses") {
    // M_0: H22 = -+ sqrt5 != 0, closed-form witness exists
    auto s0 = SurgeryCoefficient::make(0, 1);
    for (const auto& pt : su2_critical_points(s0)) {
        auto w = positive_definite_witness(pt);
        REQUIRE(w.has_value());
        CHECK(std::fabs(std::fabs(pt.hess.h22.real()) - std::sqrt(5.0)) < 1e-9);
    }
    // p = 6m+3: the 1/6 class has H22 = 0 and the search must fail
    auto s3 = SurgeryCoefficient::make(3, 1);
    bool found_failure = false;
    for (const auto& pt : su2_critical_points(s3)) {
        if (std::fabs(pt.theta - 1.0 / 6.0) < 1e-9) {
            CHECK(std::fabs(pt.hess.h22.real()) < 1e-9);
            CHECK_FALSE(positive_definite_witness(pt).has_value());
            found_failure = true;
        }
    }
    CHECK(found_failure);
}

TEST_CASE("M_0 irreducible part of the asymptotics") {
    auto s = SurgeryCoefficient::make(0, 1);
    auto pred = make_prediction(s);
    std::vector<int> sig = calibrate_sigma(pred, {10, 15, 25});
    for (int r : {20, 40, 60}) {
        cplx expected = -(1.0 / std::sqrt(5.0)) *
                        (std::polar(1.0, -kTwoPi * r / 5.0) + std::polar(1.0, kTwoPi * r / 5.0));
        CHECK(std::abs(eval_prediction(pred, r) - expected) < 1e-8);
    }
    // the phase set of the prediction equals the CS set of the classes
    for (const auto& t : pred.terms) {
        double cs = chernsimons::cs_irreducible(s, t.theta, t.eps);
        CHECK(std::fabs(t.cs - cs) < 1e-10);
    }
}

TEST_CASE("prediction converges to tau_bar for p/q = 1") {
    auto s = SurgeryCoefficient::make(1, 1);
    auto pred = make_prediction(s);
    calibrate_sigma(pred, {40, 60});
    double prev = 1e300;
    for (int r : {50, 100}) {
        cplx tb = invariants::tau_bar(r, s);
        double resid = std::abs(tb - eval_prediction(pred, r)) / std::abs(tb);
        CHECK(resid < prev + 0.05);
        prev = resid;
    }
    CHECK(prev < 0.05);
}

TEST_CASE("fig8 phase function") {
    // stationary points at +-1/6 + Z
    for (double x0 : {1.0 / 6.0, -1.0 / 6.0, 1.0 + 1.0 / 6.0}) {
        cplx z = std::exp(kTwoPi * cplx(0.0, 1.0) * x0);
        CHECK(std::abs(z * z - z + 1.0) < 1e-12);  // hyperbolicity equation
    }
    CHECK(std::abs(fig8_phase_d2(cplx(1.0 / 6.0, 0.0)) - cplx(kTwoPi * std::sqrt(3.0), 0.0)) <
          1e-10);
    CHECK(std::abs(fig8_phase_d2(cplx(-1.0 / 6.0, 0.0)) + cplx(kTwoPi * std::sqrt(3.0), 0.0)) <
          1e-10);
    // Phi(5/6) = Vol(K)/(2 pi)
    CHECK(std::abs(fig8_phase(cplx(5.0 / 6.0, 0.0)) - cplx(vol_fig8() / kTwoPi, 0.0)) < 1e-12);
    CHECK_THROWS_AS((void)fig8_phase(cplx(1.0, 0.0)), std::domain_error);
    // jones_leading matches its definition
    CHECK(jones_leading_log(100) ==
          doctest::Approx(std::log(std::pow(3.0, -0.25) * std::pow(100.0, 1.5)) +
                          100.0 * vol_fig8() / kTwoPi));
}

TEST_CASE("vol") {
    CHECK(vol_fig8() == doctest::Approx(2.029883212819307).epsilon(1e-12));
}
