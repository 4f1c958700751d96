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

#include <optional>
#include <utility>
#include <vector>

#include "fig8rt/numeric.hpp"
#include "fig8rt/repvar.hpp"
#include "fig8rt/surgery.hpp"

namespace fig8rt::saddle {

// Index data of the phase function Psi_n^{a,b}(x,y) = a x + b y + Phi_n(x,y)
// with Phi_n(x,y) = -d n^2/q - p/(4q) x^2 + (n/q) x - x y
//                   + (Li2(e^{2 pi i (x+y)}) - Li2(e^{2 pi i (x-y)}))/(4 pi^2).
// The two-index family Phi_n^{a,b} is Psi_n^{a+b, a-b}.
struct PhaseIndex {
    long long a = 0, b = 0, n = 0;
    SurgeryCoefficient surgery;
};

cplx psi(const PhaseIndex& idx, cplx x, cplx y);
std::pair<cplx, cplx> grad_psi(const PhaseIndex& idx, cplx x, cplx y);

struct Hessian2 {
    cplx h11, h12, h22;
    cplx det() const { return h11 * h22 - h12 * h12; }
};

Hessian2 hessian(const PhaseIndex& idx, cplx x, cplx y);

// Negative real roots of w^2 + (1 - 2 cos(2 pi x)) w + 1 = 0 for
// cos(2 pi x) in [-1, -1/2].
double w_pm(double x, int sign);

struct CriticalPoint {
    cplx x, y;
    PhaseIndex index;
    cplx psi_value;
    double grad_norm = 0.0;
    Hessian2 hess;
    cplx det_h;
    bool in_S = false;
    bool mirror = false;  // the -2 theta companion of a primary point
    bool nondegenerate = true;
    bool degenerate_candidate = false;
    std::optional<std::pair<cplx, cplx>> pd_witness;
    std::optional<repvar::FlatConnectionClass> rep_class;
    double theta = 0.0;
    int eps = +1;
};

// Critical points on the set S (x real, Re y = 1/2) attached to the SU(2)
// moduli classes: the primary window x = 2 theta in [1/3, 2/3] plus the
// -2 theta mirrors. a = 0 throughout; b and n are forced by the stationarity
// equations and must come out integral.
std::vector<CriticalPoint> su2_critical_points(const SurgeryCoefficient& surgery);

struct CsPsiRow {
    double theta;
    int eps;
    bool mirror;
    double psi_mod1;
    double cs_mod1;
    double defect;  // distance of psi - cs to the integers
};

struct CsPsiReport {
    SurgeryCoefficient surgery;
    double max_defect = 0.0;
    std::vector<CsPsiRow> rows;
};

CsPsiReport verify_cs_equals_psi(const SurgeryCoefficient& surgery);

enum class Classification { Nondegenerate, DegenerateCandidate };

// Nondegeneracy of an S critical point: automatic for |p/q| < sqrt(20);
// beyond that, degenerate candidates must match the exceptional cosine and
// the designated root of w. The direct |det H| is recorded either way.
Classification classify_nondegenerate(const SurgeryCoefficient& surgery, CriticalPoint& pt);

// cos(2 pi x) value of the only possible degenerate points for
// |p/q| > sqrt(20).
double exceptional_cos(const SurgeryCoefficient& surgery);

// (alpha, beta) on the unit circle making Im(diag(a,b) H diag(a,b)) positive
// definite; closed-form picks where the sign pattern allows, otherwise a
// 360x360 grid search. nullopt when the search fails (e.g. H22 = 0).
std::optional<std::pair<cplx, cplx>> positive_definite_witness(const CriticalPoint& pt);

enum class SigmaMode { Zero, Calibrate };

struct AsymptoticTerm {
    double cs;         // mod 1
    double amplitude;  // m * sin(pi/q (x - 2 n d)) |det H|^{-1/2}
    int multiplicity;
    int sigma;
    double theta;
    int eps;
};

struct AsymptoticPrediction {
    SurgeryCoefficient surgery;
    cplx front;  // sign(q)/(4 sqrt|q|) e^{3 pi i sign(pq)/4}
    std::vector<AsymptoticTerm> terms;
};

// Leading-order model of tau_bar per the stationary-phase analysis. sigma
// defaults to 0 everywhere; calibrate_sigma fits it per class against exact
// invariants.
AsymptoticPrediction make_prediction(const SurgeryCoefficient& surgery, int multiplicity = 4);

cplx eval_prediction(const AsymptoticPrediction& pred, int r);

// Exhaustive per-class fit of sigma in {0,1,2,3} against tau_bar at the
// calibration levels; returns the fitted sigmas (also written into pred).
std::vector<int> calibrate_sigma(AsymptoticPrediction& pred, const std::vector<int>& r_calib);

// Convenience: prediction with the requested sigma handling.
AsymptoticPrediction leading_tau_asymptotics(const SurgeryCoefficient& surgery,
                                             SigmaMode mode = SigmaMode::Zero,
                                             int multiplicity = 4);

// Single-variable phase driving the top-color Jones asymptotics.
cplx fig8_phase(cplx x);
cplx fig8_phase_d2(cplx x);
double jones_leading_log(int r);  // log(3^{-1/4} r^{3/2} e^{r Vol/2 pi})
double vol_fig8();

}  // namespace fig8rt::saddle
