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

#include "fig8rt/verify.hpp"

#include <json.hpp>

#include <cmath>
#include <random>

#include "fig8rt/chernsimons.hpp"
#include "fig8rt/invariants.hpp"
#include "fig8rt/qdilog.hpp"
#include "fig8rt/quadrature.hpp"
#include "fig8rt/repvar.hpp"
#include "fig8rt/specfun.hpp"

namespace fig8rt::verify {

using qdilog::QDilogContext;
using qdilog::SGammaGrid;

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["params"] = params;
    j["tolerance"] = tolerance;
    j["max_defect"] = max_defect;
    j["passed"] = passed;
    j["assertive"] = assertive;
    auto arr = nlohmann::json::array();
    for (const auto& [label, defect] : samples) arr.push_back({{"input", label}, {"defect", defect}});
    j["samples"] = arr;
    return j.dump(2);
}

namespace {

struct Rect {
    double re_lo, re_hi, im;
    // counterclockwise edges
    std::vector<std::pair<cplx, cplx>> edges() const {
        cplx a(re_lo, -im), b(re_hi, -im), c(re_hi, im), d(re_lo, im);
        return {{a, b}, {b, c}, {c, d}, {d, a}};
    }
};

// Composite 15-point Kronrod nodes along a segment; fixed panel count so the
// tensor-product double contour stays affordable.
struct SegmentNodes {
    std::vector<cplx> z;
    std::vector<cplx> w;
};

SegmentNodes segment_nodes(cplx a, cplx b, int panels) {
    SegmentNodes out;
    cplx dz = (b - a) / static_cast<double>(panels);
    for (int p = 0; p < panels; ++p) {
        cplx lo = a + dz * static_cast<double>(p);
        cplx mid = lo + 0.5 * dz;
        out.z.push_back(mid);
        out.w.push_back(gk::wgk[7] * 0.5 * dz);
        for (int i = 0; i < 7; ++i) {
            cplx off = 0.5 * dz * gk::xgk[i];
            out.z.push_back(mid + off);
            out.w.push_back(gk::wgk[i] * 0.5 * dz);
            out.z.push_back(mid - off);
            out.w.push_back(gk::wgk[i] * 0.5 * dz);
        }
    }
    return out;
}

cplx beta_front(int r, const SurgeryCoefficient& s) {
    const int spq = sign_of(s.p * s.q);
    double symbol = invariants::dedekind_symbol(s.p, s.q).value();
    return cplx(0.0, 1.0) * static_cast<double>(sign_of(s.q)) /
           (r * std::sqrt(std::fabs(static_cast<double>(s.q)))) *
           std::polar(1.0, -3.0 * kPi / 4.0 * spq) *
           std::polar(1.0, kPi / (2.0 * r) * (3.0 * spq - s.ratio() + symbol));
}

}  // namespace

VerificationReport check_contour_jones(int r, double eps_denominator) {
    if (r < 4 || r > 9) throw std::invalid_argument("check_contour_jones: 4 <= r <= 9");
    VerificationReport rep;
    rep.name = "contour_jones";
    rep.params = {{"r", static_cast<double>(r)}, {"eps_denominator", eps_denominator}};
    rep.tolerance = 1e-6;

    const double eps = 1.0 / (eps_denominator * r);
    auto ctx = QDilogContext::for_level(r);
    SGammaGrid grid(ctx, kPi - kTwoPi * eps);
    auto gr = [&](cplx x) {
        return std::exp(grid.log_eval(kPi - kTwoPi * x) - grid.log_eval(-kPi + kTwoPi * x));
    };
    auto ctxlevel = invariants::LevelContext::make(r);
    cplx direct = invariants::jones_fig8(ctxlevel, r);

    Rect rect{eps, 1.0 - eps, 1.0};
    cplx total = 0.0;
    for (auto [a, b] : rect.edges()) {
        total += integrate_segment(
            [&](cplx x) { return std::tan(kPi * r * x) * gr(x); }, a, b,
            1e-10 * std::abs(direct));
    }
    cplx viaContour = cplx(0.0, 1.0) * static_cast<double>(r) * static_cast<double>(r) / 2.0 * total;
    double defect = std::abs(viaContour - direct) / std::abs(direct);
    rep.max_defect = defect;
    rep.samples.push_back({"r=" + std::to_string(r), defect});
    rep.finish();
    return rep;
}

VerificationReport check_contour_tau(int r, const SurgeryCoefficient& surgery) {
    if (r < 4 || r > 6) throw std::invalid_argument("check_contour_tau: 4 <= r <= 6");
    if (std::llabs(surgery.q) > 2) throw std::invalid_argument("check_contour_tau: |q| <= 2");
    VerificationReport rep;
    rep.name = "contour_tau";
    rep.params = {{"r", static_cast<double>(r)},
                  {"p", static_cast<double>(surgery.p)},
                  {"q", static_cast<double>(surgery.q)}};
    rep.tolerance = 1e-4;

    auto ctx = QDilogContext::for_level(r);
    SGammaGrid grid(ctx, kPi + 0.6 * ctx.gamma);
    const double h = 0.2;
    Rect cx{0.5 / r, 1.0 - 0.5 / r, h};   // encloses k/r, k = 1..r-1
    Rect cy{0.25 / r, 1.0 - 0.25 / r, h};  // encloses (m+1/2)/r, m = 0..r-1

    const int panels_x = 4 * r;
    const int panels_y = 4 * r;
    std::vector<SegmentNodes> ynodes;
    for (auto [a, b] : cy.edges()) ynodes.push_back(segment_nodes(a, b, panels_y));

    cplx total = 0.0;
    const long long aq = std::llabs(surgery.q);
    for (long long n = 0; n < aq; ++n) {
        for (auto [a, b] : cx.edges()) {
            auto xn = segment_nodes(a, b, panels_x);
            for (size_t i = 0; i < xn.z.size(); ++i) {
                cplx x = xn.z[i];
                // x-only factors of f_{n,r}
                const double q = static_cast<double>(surgery.q);
                const double p = static_cast<double>(surgery.p);
                const double d = static_cast<double>(surgery.d);
                cplx xfac = std::sin(kPi / q * (x - 2.0 * static_cast<double>(n) * d)) *
                            std::exp(kTwoPi * cplx(0.0, 1.0) * static_cast<double>(r) *
                                     (d * n * n / q + p / (4.0 * q) * x * x -
                                      static_cast<double>(n) / q * x));
                cplx inner = 0.0;
                for (const auto& yn : ynodes) {
                    for (size_t jj = 0; jj < yn.z.size(); ++jj) {
                        cplx y = yn.z[jj];
                        cplx val = std::tan(kPi * r * y) *
                                   std::exp(-kTwoPi * cplx(0.0, 1.0) * static_cast<double>(r) * x * y) *
                                   grid.eval_ext(ctx, -kPi + kTwoPi * (x - y)) /
                                   grid.eval_ext(ctx, -kPi + kTwoPi * (x + y));
                        inner += yn.w[jj] * val;
                    }
                }
                total += xn.w[i] * (1.0 / std::tan(kPi * r * x)) * xfac * inner;
            }
        }
    }
    cplx viaContour = beta_front(r, surgery) * static_cast<double>(r) * static_cast<double>(r) /
                      4.0 * total;
    cplx direct = invariants::tau_rational(r, surgery);
    double defect = std::abs(viaContour - direct) / std::max(std::abs(direct), 1e-9);
    rep.max_defect = defect;
    rep.samples.push_back({surgery.str() + " r=" + std::to_string(r), defect});
    rep.finish();
    return rep;
}

VerificationReport check_tan_bounds(int r, int samples, std::uint64_t seed) {
    VerificationReport rep;
    rep.name = "tan_bounds";
    rep.params = {{"r", static_cast<double>(r)}, {"samples", static_cast<double>(samples)}};
    rep.tolerance = 0.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ud(0.0, 1.0), vd(1.0 / (kPi * r), 3.0);
    double worst = -1e300;
    const cplx I(0.0, 1.0);
    for (int i = 0; i < samples; ++i) {
        double u = ud(rng), v = vd(rng);
        cplx t_up = std::tan(kPi * r * cplx(u, v));
        double margin_up = std::abs(t_up - I) - 4.0 * std::exp(-kTwoPi * r * v);
        worst = std::max(worst, margin_up);
        cplx t_dn = std::tan(kPi * r * cplx(u, -v));
        double margin_dn = std::abs(t_dn + I) - 4.0 * std::exp(-kTwoPi * r * v);
        worst = std::max(worst, margin_dn);
    }
    // lattice lines r Re x in Z, sharpened constant 2
    std::uniform_int_distribution<int> jd(0, r - 1);
    std::uniform_real_distribution<double> v0(0.0, 3.0);
    for (int i = 0; i < samples / 4; ++i) {
        double u = static_cast<double>(jd(rng)) / r;
        double v = v0(rng);
        cplx t_up = std::tan(kPi * r * cplx(u, v));
        worst = std::max(worst, std::abs(t_up - I) - 2.0 * std::exp(-kTwoPi * r * v));
        cplx t_dn = std::tan(kPi * r * cplx(u, -v));
        worst = std::max(worst, std::abs(t_dn + I) - 2.0 * std::exp(-kTwoPi * r * v));
    }
    rep.max_defect = std::max(worst, 0.0);
    rep.samples.push_back({"worst_margin", worst});
    rep.finish();
    return rep;
}

VerificationReport volume_scan(const std::vector<int>& r_list) {
    VerificationReport rep;
    rep.name = "volume_scan";
    rep.tolerance = 0.0;
    double prev = 1e300;
    double worst = -1e300;
    for (int r : r_list) {
        if (r > 2000) throw std::invalid_argument("volume_scan: r capped at 2000");
        double lj = invariants::log_jones_fig8_top(r);
        double rho = std::exp(lj - saddle::jones_leading_log(r));
        double err = std::fabs(rho - 1.0);
        rep.samples.push_back({"rho(r=" + std::to_string(r) + ")", rho});
        rep.samples.push_back({"trend(2pi log J'/r, r=" + std::to_string(r) + ")",
                               kTwoPi * lj / r});
        if (prev < 1e300) worst = std::max(worst, err - prev);
        prev = err;
    }
    rep.params["n"] = static_cast<double>(r_list.size());
    rep.max_defect = std::max(worst, 0.0);
    rep.finish();
    return rep;
}

VerificationReport aec_scan(const SurgeryCoefficient& surgery, const std::vector<int>& r_list,
                            saddle::SigmaMode mode) {
    VerificationReport rep;
    rep.name = "aec_scan";
    rep.params = {{"p", static_cast<double>(surgery.p)}, {"q", static_cast<double>(surgery.q)}};
    rep.tolerance = 0.0;
    if (surgery.p == 0) throw std::invalid_argument("aec_scan: p/q must be nonzero");
    bool seifert = std::llabs(surgery.q) == 1 && std::llabs(surgery.p) <= 3;
    rep.assertive = seifert;
    if (!seifert) rep.params["conjectural"] = 1.0;

    auto pred = saddle::leading_tau_asymptotics(surgery, mode);
    double prev = 1e300;
    double worst = -1e300;
    for (int r : r_list) {
        cplx tb = invariants::tau_bar(r, surgery);
        cplx pr = saddle::eval_prediction(pred, r);
        double resid = std::abs(tb - pr) / std::max(std::abs(tb), 1e-9);
        rep.samples.push_back({"rel_residual(r=" + std::to_string(r) + ")", resid});
        rep.samples.push_back({"log_abs_tau(r=" + std::to_string(r) + ")",
                               std::log(std::max(std::abs(tb), 1e-300))});
        if (prev < 1e300) worst = std::max(worst, resid - prev);
        prev = resid;
    }
    rep.max_defect = std::max(worst, 0.0);
    rep.finish();
    return rep;
}

namespace {

VerificationReport scan_report(const std::string& name, double tol) {
    VerificationReport rep;
    rep.name = name;
    rep.tolerance = tol;
    return rep;
}

std::vector<VerificationReport> suite_specfun() {
    using namespace specfun;
    auto rep = scan_report("specfun_identities", 1e-10);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        cplx zeta(re(rng), im(rng));
        cplx iz = cplx(0.0, 1.0) * zeta;
        double d = std::abs(zeta * zeta / 2.0 - kPi * kPi / 6.0 - li2(-std::exp(-iz)) -
                            li2(-std::exp(iz)));
        rep.max_defect = std::max(rep.max_defect, d);
    }
    rep.samples.push_back({"dilog_square_identity", rep.max_defect});
    double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    double li2v = li2(cplx((3.0 - std::sqrt(5.0)) / 2.0, 0.0)).real();
    double dv = std::fabs(li2v - (kPi * kPi / 15.0 - std::pow(std::log(golden), 2)));
    rep.samples.push_back({"li2_golden_value", dv});
    rep.max_defect = std::max(rep.max_defect, dv);
    rep.finish();
    return {rep};
}

std::vector<VerificationReport> suite_qdilog() {
    auto rep = scan_report("qdilog_functional_equation", 1e-9);
    std::mt19937_64 rng(9);
    for (int r : {5, 11, 51}) {
        auto ctx = QDilogContext::for_level(r);
        std::uniform_real_distribution<double> re(-0.9 * kPi + ctx.gamma, 0.9 * kPi - ctx.gamma);
        std::uniform_real_distribution<double> im(-1.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            cplx zeta(re(rng), im(rng));
            cplx lhs = (1.0 + std::exp(cplx(0.0, 1.0) * zeta)) *
                       qdilog::s_gamma_strip(ctx, zeta + ctx.gamma);
            cplx rhs = qdilog::s_gamma_strip(ctx, zeta - ctx.gamma);
            worst = std::max(worst, std::abs(lhs / rhs - 1.0));
        }
        rep.samples.push_back({"residual(r=" + std::to_string(r) + ")", worst});
        rep.max_defect = std::max(rep.max_defect, worst);
    }
    auto rep2 = scan_report("qdilog_top_ratio", 1e-8);
    for (int r : {5, 7, 9}) {
        auto ctx = QDilogContext::for_level(r);
        cplx ratio = qdilog::s_gamma_strip(ctx, -kPi + ctx.gamma) /
                     qdilog::s_gamma_strip(ctx, kPi - ctx.gamma);
        double d = std::abs(ratio - cplx(r, 0.0)) / r;
        rep2.samples.push_back({"ratio(r=" + std::to_string(r) + ")", d});
        rep2.max_defect = std::max(rep2.max_defect, d);
    }
    rep.finish();
    rep2.finish();
    return {rep, rep2};
}

std::vector<VerificationReport> suite_invariants() {
    auto rep = scan_report("invariants_jeffrey", 1e-8);
    for (int r = 5; r <= 60; ++r) {
        double d = std::abs(invariants::tau_rational(r, SurgeryCoefficient::make(0, 1)) -
                            invariants::tau_jeffrey(r)) /
                   r;
        rep.max_defect = std::max(rep.max_defect, d);
    }
    rep.samples.push_back({"jeffrey_r<=60", rep.max_defect});
    rep.finish();
    auto rep2 = scan_report("invariants_q1_reduction", 1e-10);
    for (long long f : {1LL, -2LL, 3LL}) {
        for (int r : {6, 17, 30}) {
            cplx a = invariants::tau_rational(r, SurgeryCoefficient::make(f, 1));
            cplx b = invariants::tau_integer(r, f);
            double d = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-9});
            rep2.max_defect = std::max(rep2.max_defect, d);
        }
    }
    rep2.samples.push_back({"reduction", rep2.max_defect});
    rep2.finish();
    return {rep, rep2};
}

std::vector<VerificationReport> suite_repvar() {
    auto rep = scan_report("repvar_membership", 1e-8);
    for (auto [p, q] : {std::pair{1LL, 1LL}, {3LL, 1LL}, {5LL, 2LL}, {0LL, 1LL}}) {
        auto surgery = SurgeryCoefficient::make(p, q);
        for (const auto& c :
             repvar::irreducible_classes(repvar::enumerate_su2_moduli(surgery))) {
            if (c.tangential) continue;
            cplx s = std::polar(1.0, kTwoPi * c.theta);
            cplx u(repvar::u_pm(c.theta, c.eps), 0.0);
            double res = repvar::rep_residual(s, u);
            double defect = repvar::extends_to_surgery(s, u, surgery).defect;
            rep.max_defect = std::max({rep.max_defect, res, defect});
        }
    }
    rep.samples.push_back({"residuals", rep.max_defect});
    rep.finish();
    return {rep};
}

std::vector<VerificationReport> suite_chernsimons() {
    auto rep = scan_report("chernsimons_special_integral", 1e-8);
    auto f = [](double t) { return cplx(std::arg(repvar::L_eps(t, -1)), 0.0); };
    double v = adaptive_gk(f, 1.0 / 6.0, 0.25, 1e-12).real() / kPi;
    rep.max_defect = std::fabs(v - 1.0 / 30.0);
    rep.samples.push_back({"arg_L_integral", rep.max_defect});
    rep.finish();
    auto rep2 = scan_report("chernsimons_M0", 1e-8);
    auto s0 = SurgeryCoefficient::make(0, 1);
    double d1 = std::fabs(chernsimons::cs_irreducible(s0, 0.25, +1) - 0.2);
    double d2 = std::fabs(chernsimons::cs_irreducible(s0, 0.25, -1) - 0.8);
    rep2.max_defect = std::max(d1, d2);
    rep2.samples.push_back({"cs_quarter_plus", d1});
    rep2.samples.push_back({"cs_quarter_minus", d2});
    rep2.finish();
    return {rep, rep2};
}

std::vector<VerificationReport> suite_saddle() {
    auto rep = scan_report("saddle_cs_equals_psi", 1e-6);
    for (auto [p, q] :
         {std::pair{1LL, 1LL}, {-1LL, 1LL}, {2LL, 1LL}, {3LL, 1LL}, {5LL, 2LL}, {0LL, 1LL}}) {
        auto r = saddle::verify_cs_equals_psi(SurgeryCoefficient::make(p, q));
        rep.samples.push_back({"defect(" + SurgeryCoefficient::make(p, q).str() + ")",
                               r.max_defect});
        rep.max_defect = std::max(rep.max_defect, r.max_defect);
    }
    rep.finish();
    return {rep};
}

std::vector<VerificationReport> suite_contour() {
    std::vector<VerificationReport> out;
    out.push_back(check_contour_jones(5));
    out.push_back(check_contour_jones(7));
    out.push_back(check_contour_tau(5, SurgeryCoefficient::make(1, 1)));
    out.push_back(check_contour_tau(5, SurgeryCoefficient::make(0, 1)));
    return out;
}

std::vector<VerificationReport> suite_volume() { return {volume_scan({50, 100, 200, 400})}; }

std::vector<VerificationReport> suite_aec() {
    std::vector<VerificationReport> out;
    for (long long p : {1LL, 2LL, 3LL, -1LL, -2LL, -3LL})
        out.push_back(aec_scan(SurgeryCoefficient::make(p, 1), {50, 100, 200, 400}));
    out.push_back(aec_scan(SurgeryCoefficient::make(5, 1), {50, 100, 200}));
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"specfun", "qdilog", "invariants", "repvar", "chernsimons",
            "saddle",  "contour", "volume",     "aec"};
}

std::vector<VerificationReport> run_suite(const std::string& name) {
    if (name == "specfun") return suite_specfun();
    if (name == "qdilog") return suite_qdilog();
    if (name == "invariants") return suite_invariants();
    if (name == "repvar") return suite_repvar();
    if (name == "chernsimons") return suite_chernsimons();
    if (name == "saddle") return suite_saddle();
    if (name == "contour") return suite_contour();
    if (name == "volume") return suite_volume();
    if (name == "aec") return suite_aec();
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace fig8rt::verify
