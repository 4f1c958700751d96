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

#include <complex>
#include <stdexcept>

#include "fig8rt/numeric.hpp"

namespace fig8rt::specfun {

// A principal-branch value together with the number of 2*pi*i sheets applied
// on top of it. winding 0 is the principal evaluation.
struct BranchedValue {
    cplx value;
    int winding = 0;
};

struct DilogDomainPoint {
    cplx z;
    bool on_cut = false;  // z in [1, inf) with exactly zero imaginary part
};

// Thrown when a real argument sits on the dilogarithm cut (1, inf) and the
// caller has not selected a continuation side.
class CutAmbiguityError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Principal log shifted by an explicit number of sheets.
BranchedValue log_branched(cplx z, int winding = 0);

DilogDomainPoint classify_dilog_point(cplx z);

// Euler dilogarithm, principal branch. The cut along (1, inf) is resolved by
// the sign of the zero imaginary part (+0 continues from above).
cplx li2(cplx z);

// Real-argument entry point; throws CutAmbiguityError for x > 1.
double li2_real(double x);

// Clausen function Cl2(theta) = Im Li2(e^{i theta}).
double cl2(double theta);

// Bloch-Wigner function D(z) = Im Li2(z) + Arg(1-z) Log|z|, D(0) = D(1) = 0.
double bloch_wigner(cplx z);

// Value of Li2 continued across the cut at real t > 1:
//   Li2(t -+ i0) = -pi^2/6 - Log^2(-t)/2 - Li2(1/t),
// with Log(-t) = log t + side * i*pi. side = +1 picks Arg(-t) = +pi (the
// continuation from below, Im Li2 = -pi log t), side = -1 the one from above.
cplx li2_reflection(double t, int side);

}  // namespace fig8rt::specfun
