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

#include <chrono>
#include <complex>
#include <string>
#include <vector>

#include "fig8rt/numeric.hpp"
#include "fig8rt/qdilog.hpp"
#include "fig8rt/surgery.hpp"

namespace fig8rt::invariants {

// Roots-of-unity context at level r: xi = e^{2 pi i / r}, t = xi^{1/4}.
// Powers of t are tabulated up to 4r so phase exponents reduce exactly in
// integer arithmetic.
struct LevelContext {
    int r;
    cplx xi;
    cplx t;
    std::vector<cplx> t_pow;  // t^j, 0 <= j < 4r

    static LevelContext make(int r);

    // t^e for any integer exponent e (reduced mod 4r).
    cplx t_power(long long e) const {
        long long m = e % (4LL * r);
        if (m < 0) m += 4LL * r;
        return t_pow[static_cast<size_t>(m)];
    }
    // xi^e
    cplx xi_power(long long e) const { return t_power(4 * e); }
};

enum class FormulaTag { IntegerSum, RationalSum, JeffreyClosedForm };

struct InvariantRecord {
    long long p, q;
    int r;
    cplx tau;
    FormulaTag formula;
    std::chrono::duration<double> elapsed{0};
};

// Quantum integer [k] = sin(pi k / r) / sin(pi / r).
double quantum_int(const LevelContext& ctx, long long k);

// Colored Jones polynomial of the figure-8 knot at color lambda.
cplx jones_fig8(const LevelContext& ctx, int lambda);

// Double-precision engines for the same sum, with and without compensated
// summation; these exist for the summation-stability checks.
cplx jones_fig8_kahan(const LevelContext& ctx, int lambda);
cplx jones_fig8_naive(const LevelContext& ctx, int lambda);

// log J'_K(r) at the top color, evaluated through the all-positive
// sine-product form; safe for r up to several thousand.
double log_jones_fig8_top(int r);

// Top-color evaluation through the quantum dilogarithm quotient,
// J'_K(r) = r sum_m g_r((m+1/2)/r).
cplx jones_top(const qdilog::QDilogContext& ctx);

// Dedekind symbol S(p/q) = 12 sign(q) s(p, |q|) with s the classical
// Dedekind sum, computed by the Euclidean reciprocity recursion.
Rational dedekind_symbol(long long p, long long q);

// Exact Dedekind sum s(h,k), k > 0, by direct O(k) summation. Test oracle.
Rational dedekind_sum_direct(long long h, long long k);

// RT invariant of integer surgery f on the figure-8 knot (level r-2).
cplx tau_integer(int r, long long f);

// RT invariant of rational surgery p/q via the triple sum. Runs at
// r-adaptive extended precision internally; the sums cancel terms of size
// exp(r Vol/2pi) down to O(1).
cplx tau_rational(int r, const SurgeryCoefficient& s);

// Conjugate invariant used on the asymptotics side.
cplx tau_bar(int r, const SurgeryCoefficient& s);

// Jeffrey's closed form for tau_r(M_0).
cplx tau_jeffrey(int r);

// Bits of working precision used by the extended-precision engine at level r.
int required_bits(int r);

// Test hook: tau_integer with an injectable Jones evaluation (double engine).
// Used to confirm the top color never enters the sum.
cplx tau_integer_with(const LevelContext& ctx, long long f,
                      const std::vector<cplx>& jones_by_color);

}  // namespace fig8rt::invariants
