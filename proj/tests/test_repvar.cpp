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
#include "fig8rt/repvar.hpp"

using namespace fig8rt;
using namespace fig8rt::repvar;

TEST_CASE("phi_riley") {
    // phi(1, u) = u^2 + u + 1
    cplx u(0.3, -0.7);
    CHECK(std::abs(phi_riley(cplx(1.0, 0.0), u) - (u * u + u + 1.0)) < 1e-15);
    // phi(s^2, 0) = 0 iff s^4 - 3 s^2 + 1 = 0
    double s2 = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(phi_riley(cplx(s2, 0.0), cplx(0.0, 0.0))) < 1e-13);
    CHECK(std::abs(phi_riley(cplx(2.0, 0.0), cplx(0.0, 0.0))) > 0.1);
    // quadratic roots
    cplx t = std::polar(1.0, 2.0 * kTwoPi * 0.2);
    for (int eps : {+1, -1})
        CHECK(std::abs(phi_riley(t, cplx(u_pm(0.2, eps), 0.0))) < 1e-12);
}

TEST_CASE("u_pm values") {
    CHECK(u_pm(1.0 / 6.0, +1) == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(u_pm(1.0 / 6.0, -1) == doctest::Approx(-2.0).epsilon(1e-9));
    // (1 + u+)(1 + u-) = 1
    double th = 0.21;
    CHECK((1.0 + u_pm(th, +1)) * (1.0 + u_pm(th, -1)) == doctest::Approx(1.0).epsilon(1e-13));
    // 1 + u_+(1/4) = (-3 + sqrt5)/2
    CHECK(1.0 + u_pm(0.25, +1) == doctest::Approx((-3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)u_pm(0.05, +1), std::domain_error);
}

TEST_CASE("lambda11 symmetries") {
    cplx s = std::polar(1.0, kTwoPi * 0.22);
    cplx lp = lambda11(s, cplx(u_pm(0.22, +1), 0.0));
    cplx lm = lambda11(s, cplx(u_pm(0.22, -1), 0.0));
    CHECK(std::abs(lp * lm - 1.0) < 1e-12);
    // lambda11(1/s, u) = 1/lambda11(s, u) on the curve
    cplx u(u_pm(0.22, +1), 0.0);
    CHECK(std::abs(lambda11(1.0 / s, u) - 1.0 / lambda11(s, u)) < 1e-12);
    // special values L(1/4) = 1, L(1/6) = L(1/3) = -1
    for (int eps : {+1, -1}) {
        CHECK(std::abs(L_eps(0.25, eps) - cplx(1.0, 0.0)) < 1e-12);
        CHECK(std::abs(L_eps(1.0 / 6.0, eps) + cplx(1.0, 0.0)) < 1e-12);
        CHECK(std::abs(L_eps(1.0 / 3.0, eps) + cplx(1.0, 0.0)) < 1e-12);
    }
}

TEST_CASE("L real/imaginary closed forms on a fine grid") {
    const int n = 1000;
    for (int i = 0; i <= n; ++i) {
        double th = 1.0 / 6.0 + (1.0 / 3.0 - 1.0 / 6.0) * i / n;
        for (int eps : {+1, -1}) {
            cplx L = L_eps(th, eps);
            CHECK(std::fabs(L.real() - L_eps_re(th)) < 1e-12);
            CHECK(std::fabs(L.imag() - L_eps_im(th, eps)) < 1e-12);
            // |L| = 1 on the arc
            CHECK(std::fabs(std::abs(L) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("L symmetries on the grid") {
    const int n = 400;
    for (int i = 1; i < n; ++i) {
        double th = 1.0 / 6.0 + (1.0 / 3.0 - 1.0 / 6.0) * i / n;
        for (int eps : {+1, -1}) {
            // L_{-eps} = 1/L_{eps}
            CHECK(std::abs(L_eps(th, -eps) - 1.0 / L_eps(th, eps)) < 1e-11);
            // L_{eps}(1/2 - theta) = L_{-eps}(theta)
            CHECK(std::abs(L_eps(0.5 - th, eps) - L_eps(th, -eps)) < 1e-11);
        }
    }
}

TEST_CASE("rep_residual on and off the variety") {
    cplx s = std::polar(1.0, kTwoPi * 0.23);
    CHECK(rep_residual(s, cplx(u_pm(0.23, +1), 0.0)) < 1e-10);
    CHECK(rep_residual(cplx(1.0, 0.0), cplx(0.0, 0.0)) > 0.1);
    // invariance under s -> 1/s for u != 0 points
    cplx u(u_pm(0.23, +1), 0.0);
    CHECK(std::fabs(rep_residual(s, u) - rep_residual(1.0 / s, u)) < 1e-9);
    // determinants are 1
    auto m = rep_matrices(s, u);
    CHECK(std::abs(m.C.det() - 1.0) < 1e-14);
    CHECK(std::abs(m.D.det() - 1.0) < 1e-14);
}

TEST_CASE("extension criterion") {
    auto s01 = SurgeryCoefficient::make(0, 1);
    auto s11 = SurgeryCoefficient::make(1, 1);
    // Ntilde_0 points (u = 0, s^4 - 3 s^2 + 1 = 0) extend iff p = 0
    double sv = std::sqrt((3.0 + std::sqrt(5.0)) / 2.0);
    CHECK(extends_to_surgery(cplx(sv, 0.0), cplx(0.0, 0.0), s01).extends);
    CHECK_FALSE(extends_to_surgery(cplx(sv, 0.0), cplx(0.0, 0.0), s11).extends);
    // theta = 1/4 classes extend iff 4 | p
    cplx s14 = std::polar(1.0, kTwoPi * 0.25);
    for (int eps : {+1, -1}) {
        cplx u(u_pm(0.25, eps), 0.0);
        CHECK(extends_to_surgery(s14, u, s01).extends);
        CHECK(extends_to_surgery(s14, u, SurgeryCoefficient::make(4, 1)).extends);
        CHECK_FALSE(extends_to_surgery(s14, u, SurgeryCoefficient::make(2, 1)).extends);
    }
    // parabolic rejected
    CHECK_THROWS_AS((void)extends_to_surgery(cplx(1.0, 0.0), cplx(0.5, 0.5), s01),
                    std::domain_error);
}

TEST_CASE("moduli of M_0") {
    auto cls = enumerate_su2_moduli(SurgeryCoefficient::make(0, 1));
    auto irr = irreducible_classes(cls);
    REQUIRE(irr.size() == 2);
    for (const auto& c : irr) CHECK(std::fabs(c.theta - 0.25) < 1e-11);
    CHECK(irr[0].eps != irr[1].eps);
    // continuum marker for the abelian part
    bool has_continuum = false;
    for (const auto& c : cls)
        if (c.kind == repvar::FlatConnectionClass::Kind::AbelianContinuum) has_continuum = true;
    CHECK(has_continuum);
}

TEST_CASE("moduli of M_3 includes the 1/6 endpoint class") {
    auto cls = enumerate_su2_moduli(SurgeryCoefficient::make(3, 1));
    auto irr = irreducible_classes(cls);
    bool has_sixth = false;
    for (const auto& c : irr)
        if (c.endpoint && std::fabs(c.theta - 1.0 / 6.0) < 1e-12) has_sixth = true;
    CHECK(has_sixth);
}

TEST_CASE("abelian count") {
    auto cls = enumerate_su2_moduli(SurgeryCoefficient::make(7, 1));
    int count = 0;
    for (const auto& c : cls)
        if (c.kind == repvar::FlatConnectionClass::Kind::AbelianIndex) ++count;
    CHECK(count == 3 + 1);  // j = 0..3
}

TEST_CASE("every enumerated irreducible class is a genuine representation") {
    for (auto [p, q] : {std::pair{1LL, 1LL}, {2LL, 1LL}, {3LL, 1LL}, {-5LL, 1LL}, {5LL, 2LL},
                        {7LL, 3LL}, {0LL, 1LL}}) {
        auto surgery = SurgeryCoefficient::make(p, q);
        for (const auto& c : irreducible_classes(enumerate_su2_moduli(surgery))) {
            if (c.tangential) continue;
            cplx s = std::polar(1.0, kTwoPi * c.theta);
            cplx u(u_pm(c.theta, c.eps), 0.0);
            CHECK(std::fabs(std::abs(s) - 1.0) < 1e-14);  // SU(2): |s| = 1, u real
            CHECK(rep_residual(s, u) < 1e-9);
            auto ext = extends_to_surgery(s, u, surgery);
            CHECK(ext.defect < 1e-8);
        }
    }
}

TEST_CASE("moduli count stable under doubled resolution") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> pd(-12, 12), qd(1, 5);
    int done = 0;
    while (done < 20) {
        long long p = pd(rng), q = qd(rng);
        if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
        auto surgery = SurgeryCoefficient::make(p, q);
        auto a = irreducible_classes(enumerate_su2_moduli(surgery, 10000));
        auto b = irreducible_classes(enumerate_su2_moduli(surgery, 20000));
        CHECK(a.size() == b.size());
        ++done;
    }
}
