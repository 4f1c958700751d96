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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fig8rt {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Compensated (Kahan) accumulator for long sums of doubles.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

struct KahanCSum {
    KahanSum re, im;

    void add(cplx z) {
        re.add(z.real());
        im.add(z.imag());
    }
    cplx value() const { return {re.value(), im.value()}; }
};

// Exact rational with int64 storage. Enough for Dedekind sums of the
// surgery coefficients this library handles.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    Rational operator+(const Rational& o) const {
        return Rational(num * o.den + o.num * den, den * o.den);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num * o.den - o.num * den, den * o.den);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num * o.num, den * o.den);
    }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num * o.den, den * o.num);
    }
    Rational operator-() const { return Rational(-num, den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// Canonical representative of a real number mod 1 in [0, 1), with a snap
// tolerance so values a hair below an integer map to 0 rather than 1-eps.
inline double mod1(double x, double snap = 1e-9) {
    double v = x - std::floor(x);
    if (v >= 1.0 - snap) v = 0.0;
    if (v < snap) v = 0.0;
    return v;
}

// Distance from x to the nearest integer.
inline double dist_to_int(double x) {
    return std::fabs(x - std::round(x));
}

// e^{2*pi*i * num/den} with the angle reduced exactly in integer arithmetic.
inline cplx unit_root(long long num, long long den) {
    if (den < 0) { num = -num; den = -den; }
    long long m = num % den;
    if (m < 0) m += den;
    return std::polar(1.0, kTwoPi * static_cast<double>(m) / static_cast<double>(den));
}

inline int sign_of(long long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace fig8rt
