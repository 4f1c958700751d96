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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fig8rt/numeric.hpp"
#include "fig8rt/saddle.hpp"
#include "fig8rt/surgery.hpp"

namespace fig8rt::verify {

struct VerificationReport {
    std::string name;
    std::map<std::string, double> params;
    double max_defect = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    bool assertive = true;  // report-only scans set this false
    std::vector<std::pair<std::string, double>> samples;

    void finish() { passed = !assertive || max_defect <= tolerance; }
    std::string to_json() const;
};

// J'_K(r) as the single contour integral (i r^2/2) oint tan(pi r x) g_r dx
// over the rectangle C(eps), eps = 1/(8 r eps_div_factor ... ) compared with
// the direct sum.
VerificationReport check_contour_jones(int r, double eps_denominator = 8.0);

// tau_r(M_{p/q}) as the double contour integral of Lemma-style
// cot x tan y f_{n,r} over C_r^1 x C_r^2 compared with the triple sum.
VerificationReport check_contour_tau(int r, const SurgeryCoefficient& surgery);

// Samples the tangent approximation bounds |tan(pi r x) -+ i| <= 4 e^{-+2 pi r Im x}
// on the half-planes and the sharpened lattice-line variant.
VerificationReport check_tan_bounds(int r, int samples = 10000, std::uint64_t seed = 1234);

// Ratios of J'_K(r) to its leading asymptotics along r_list; asserts strict
// improvement towards 1.
VerificationReport volume_scan(const std::vector<int>& r_list);

// Residuals between tau_bar and the stationary-phase prediction along
// r_list. Asserts a decreasing trend for the Seifert cases |p/q| in {1,2,3};
// hyperbolic surgeries are reported without a pass/fail verdict.
VerificationReport aec_scan(const SurgeryCoefficient& surgery, const std::vector<int>& r_list,
                            saddle::SigmaMode mode = saddle::SigmaMode::Calibrate);

// Named suites wired to the CLI: specfun, qdilog, invariants, repvar,
// chernsimons, saddle, contour, volume, aec.
std::vector<VerificationReport> run_suite(const std::string& name);

std::vector<std::string> suite_names();

}  // namespace fig8rt::verify
