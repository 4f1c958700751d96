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

#include "fig8rt/invariants.hpp"

#include <cmath>

#include "fig8rt/mpcomplex.hpp"

namespace fig8rt::invariants {

using detail::MpComplex;
using detail::MpReal;

LevelContext LevelContext::make(int r) {
    if (r < 2) throw std::invalid_argument("level r must be >= 2");
    LevelContext ctx;
    ctx.r = r;
    ctx.t = unit_root(1, 4LL * r);
    ctx.xi = unit_root(1, r);
    ctx.t_pow.resize(4 * static_cast<size_t>(r));
    for (long long j = 0; j < 4LL * r; ++j) ctx.t_pow[static_cast<size_t>(j)] = unit_root(j, 4LL * r);
    return ctx;
}

double quantum_int(const LevelContext& ctx, long long k) {
    return std::sin(kPi * static_cast<double>(k) / ctx.r) / std::sin(kPi / ctx.r);
}

namespace {

template <class Accum>
cplx jones_fig8_impl(const LevelContext& ctx, int lambda) {
    if (lambda < 1 || lambda > ctx.r)
        throw std::invalid_argument("jones_fig8: color must lie in 1..r");
    Accum sum;
    cplx prod = 1.0;
    sum.add(cplx(1.0, 0.0));  // m = 0, empty product
    for (int m = 1; m < lambda; ++m) {
        prod *= (1.0 - ctx.xi_power(lambda - m)) * (1.0 - ctx.xi_power(lambda + m));
        sum.add(ctx.xi_power(-static_cast<long long>(m) * lambda) * prod);
    }
    return sum.value();
}

struct PlainCSum {
    cplx v = 0.0;
    void add(cplx z) { v += z; }
    cplx value() const { return v; }
};

}  // namespace

cplx jones_fig8_kahan(const LevelContext& ctx, int lambda) {
    return jones_fig8_impl<KahanCSum>(ctx, lambda);
}

cplx jones_fig8_naive(const LevelContext& ctx, int lambda) {
    return jones_fig8_impl<PlainCSum>(ctx, lambda);
}

double log_jones_fig8_top(int r) {
    // J'_K(r) = sum_m prod_{l<=m} 4 sin^2(pi l / r): all terms positive.
    std::vector<double> logterm(static_cast<size_t>(r));
    double acc = 0.0;
    double maxv = 0.0;
    for (int m = 0; m < r; ++m) {
        if (m > 0) acc += std::log(4.0 * std::pow(std::sin(kPi * m / r), 2));
        logterm[static_cast<size_t>(m)] = acc;
        if (acc > maxv) maxv = acc;
    }
    KahanSum s;
    for (double lt : logterm) s.add(std::exp(lt - maxv));
    return maxv + std::log(s.value());
}

cplx jones_top(const qdilog::QDilogContext& ctx) {
    KahanCSum sum;
    for (int m = 0; m < ctx.r; ++m)
        sum.add(qdilog::g_r(ctx, cplx((m + 0.5) / ctx.r, 0.0)));
    return static_cast<double>(ctx.r) * sum.value();
}

namespace {

// Classical Dedekind sum by the reciprocity recursion
//   s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk)) / 12.
Rational dedekind_sum_recursive(long long h, long long k) {
    h %= k;
    if (h < 0) h += k;
    if (h == 0) return Rational(0);
    Rational rec = Rational(-1, 4) + (Rational(h, k) + Rational(k, h) + Rational(1, h * k)) * Rational(1, 12);
    return rec - dedekind_sum_recursive(k % h, h);
}

}  // namespace

Rational dedekind_sum_direct(long long h, long long k) {
    if (k <= 0) throw std::invalid_argument("dedekind_sum_direct: k must be positive");
    Rational total(0);
    for (long long i = 1; i < k; ++i) {
        Rational a(2 * i - k, 2 * k);  // ((i/k))
        long long hi = ((h * i) % k + k) % k;
        if (hi == 0) continue;
        Rational b(2 * hi - k, 2 * k);
        total = total + a * b;
    }
    return total;
}

Rational dedekind_symbol(long long p, long long q) {
    if (q == 0) throw std::invalid_argument("dedekind_symbol: q must be nonzero");
    long long aq = q < 0 ? -q : q;
    if (aq == 1) return Rational(0);
    Rational s = dedekind_sum_recursive(p, aq);
    return Rational(12 * sign_of(q)) * s;
}

int required_bits(int r) {
    // Largest intermediate terms grow like exp(r Vol(K)/(2 pi)) ~ e^{0.323 r};
    // 0.48 bits per unit of r covers that with margin, plus a fixed guard.
    return 64 + static_cast<int>(std::ceil(0.48 * r));
}

namespace {

// Extended-precision engine for the invariant sums at level r.
class MpEngine {
  public:
    explicit MpEngine(int r)
        : r_(r),
          prec_(required_bits(r)),
          pi_(prec_),
          s1_(prec_),
          s2_(prec_) {
        mpfr_const_pi(pi_.get(), MPFR_RNDN);
        tpow_.reserve(4 * static_cast<size_t>(r));
        MpReal angle(prec_);
        for (long long j = 0; j < 4LL * r; ++j) {
            // angle = 2 pi j / (4 r) = pi j / (2 r)
            mpfr_mul_si(angle.get(), pi_.get(), j, MPFR_RNDN);
            mpfr_div_si(angle.get(), angle.get(), 2LL * r, MPFR_RNDN);
            tpow_.push_back(MpComplex::from_angle(angle));
        }
        one_minus_xi_.reserve(static_cast<size_t>(r));
        for (long long j = 0; j < r; ++j) {
            MpComplex v(1.0, 0.0, prec_);
            v.sub(tpow_[static_cast<size_t>((4 * j) % (4 * r))]);
            one_minus_xi_.push_back(v);
        }
    }

    // e^{i pi num/den}, with the angle reduced exactly mod 2 in integers.
    MpComplex phase(long long num, long long den) {
        if (den < 0) { num = -num; den = -den; }
        long long m = num % (2 * den);
        if (m < 0) m += 2 * den;
        MpReal angle(prec_);
        mpfr_mul_si(angle.get(), pi_.get(), m, MPFR_RNDN);
        mpfr_div_si(angle.get(), angle.get(), den, MPFR_RNDN);
        return MpComplex::from_angle(angle);
    }

    // sin(pi num/den)
    MpReal sin_pi(long long num, long long den) {
        MpReal angle(prec_);
        mpfr_mul_si(angle.get(), pi_.get(), num, MPFR_RNDN);
        mpfr_div_si(angle.get(), angle.get(), den, MPFR_RNDN);
        MpReal out(prec_);
        mpfr_sin(out.get(), angle.get(), MPFR_RNDN);
        return out;
    }

    const MpComplex& t_power(long long e) {
        long long m = e % (4LL * r_);
        if (m < 0) m += 4LL * r_;
        return tpow_[static_cast<size_t>(m)];
    }

    // J'_K(lambda), running product over m.
    MpComplex jones(int lambda) {
        MpComplex sum(1.0, 0.0, prec_);
        MpComplex prod(1.0, 0.0, prec_);
        MpComplex term(prec_);
        for (int m = 1; m < lambda; ++m) {
            prod.mul(one_minus(lambda - m), s1_, s2_);
            prod.mul(one_minus(lambda + m), s1_, s2_);
            term = prod;
            term.mul(t_power(-4LL * m * lambda), s1_, s2_);
            sum.add(term);
        }
        return sum;
    }

    // Inner m-sum of the rational formula at color k:
    //   sum_m xi^{-(m+1/2)k}/(1-xi^k) prod_{l=0}^m (1-xi^{k-l})(1-xi^{k+l}).
    MpComplex rational_inner(int k) {
        MpComplex sum(prec_);
        MpComplex prod(1.0, 0.0, prec_);
        MpComplex term(prec_);
        for (int m = 0; m < r_; ++m) {
            prod.mul(one_minus(k - m), s1_, s2_);
            prod.mul(one_minus(k + m), s1_, s2_);
            if (prod.is_zero()) break;  // happens exactly at m = k
            term = prod;
            term.mul(t_power(-(4LL * m + 2) * k), s1_, s2_);
            sum.add(term);
        }
        // Divide once by (1 - xi^k).
        const MpComplex& d = one_minus(k);
        MpReal norm(prec_);
        mpfr_mul(norm.get(), d.re().get(), d.re().get(), MPFR_RNDN);
        mpfr_fma(norm.get(), d.im().get(), d.im().get(), norm.get(), MPFR_RNDN);
        MpComplex dinv = d;
        dinv.conj_inplace();
        mpfr_div(dinv.re().get(), dinv.re().get(), norm.get(), MPFR_RNDN);
        mpfr_div(dinv.im().get(), dinv.im().get(), norm.get(), MPFR_RNDN);
        sum.mul(dinv, s1_, s2_);
        return sum;
    }

    mpfr_prec_t prec() const { return prec_; }
    MpReal& scratch1() { return s1_; }
    MpReal& scratch2() { return s2_; }

  private:
    const MpComplex& one_minus(long long e) {
        long long m = e % r_;
        if (m < 0) m += r_;
        return one_minus_xi_[static_cast<size_t>(m)];
    }

    int r_;
    mpfr_prec_t prec_;
    MpReal pi_;
    MpReal s1_, s2_;
    std::vector<MpComplex> tpow_;
    std::vector<MpComplex> one_minus_xi_;
};

cplx front_factor_rational(int r, const SurgeryCoefficient& s) {
    // i a(r) / (2 sin(pi/r)) with
    // a(r) = -(2 sign q / (r sqrt|q|)) sin(pi/r) e^{-3 pi i sign(pq)/4}
    //        exp(i pi/(2r) [3 sign(pq) - p/q + S(p/q)]).
    const int spq = sign_of(s.p * s.q);
    const double aq = std::fabs(static_cast<double>(s.q));
    double symbol = dedekind_symbol(s.p, s.q).value();
    cplx phase = std::polar(1.0, -3.0 * kPi / 4.0 * spq) *
                 std::polar(1.0, kPi / (2.0 * r) * (3.0 * spq - s.ratio() + symbol));
    cplx a = -(2.0 * sign_of(s.q)) / (r * std::sqrt(aq)) * std::sin(kPi / r) * phase;
    return cplx(0.0, 1.0) * a / (2.0 * std::sin(kPi / r));
}

}  // namespace

cplx jones_fig8(const LevelContext& ctx, int lambda) {
    if (lambda < 1 || lambda > ctx.r)
        throw std::invalid_argument("jones_fig8: color must lie in 1..r");
    // Extended precision: intermediate products dwarf the final value at
    // some colors, so the double path cannot certify realness beyond ~1e-9.
    MpEngine eng(ctx.r);
    return eng.jones(lambda).to_std();
}

cplx tau_rational(int r, const SurgeryCoefficient& s) {
    if (r < 2) throw std::invalid_argument("tau_rational: r must be >= 2");
    MpEngine eng(r);
    const long long p = s.p, q = s.q, d = s.d;
    const long long aq = q < 0 ? -q : q;

    std::vector<MpComplex> inner;
    inner.reserve(static_cast<size_t>(r));
    for (int k = 1; k < r; ++k) inner.push_back(eng.rational_inner(k));

    MpComplex total(eng.prec());
    MpComplex term(eng.prec());
    for (long long n = 0; n < aq; ++n) {
        // e^{2 pi i r d n^2 / q} = e^{i pi (2 r d n^2)/q}
        MpComplex en = eng.phase(2 * r * d * n * n, q);
        for (long long k = 1; k < r; ++k) {
            // exp(i pi r/(2q) [p (k/r)^2 - 4 n k/r]) = e^{i pi (p k^2 - 4 n k r)/(2 q r)}
            MpComplex ph = eng.phase(p * k * k - 4 * n * k * r, 2 * q * r);
            // sin(pi/q (2 n d - k/r)) = sin(pi (2 n d r - k)/(q r))
            MpReal sn = eng.sin_pi(2 * n * d * r - k, q * r);
            term = inner[static_cast<size_t>(k - 1)];
            term.mul(ph, eng.scratch1(), eng.scratch2());
            term.mul(en, eng.scratch1(), eng.scratch2());
            term.scale(sn);
            total.add(term);
        }
    }
    return front_factor_rational(r, s) * total.to_std();
}

cplx tau_integer(int r, long long f) {
    if (f == 0) throw std::invalid_argument("tau_integer: f must be nonzero (use tau_rational)");
    if (r < 2) throw std::invalid_argument("tau_integer: r must be >= 2");
    MpEngine eng(r);
    MpComplex total(eng.prec());
    MpComplex term(eng.prec());
    for (int k = 1; k < r; ++k) {
        term = eng.jones(k);
        term.mul(eng.phase((static_cast<long long>(k) * k - 1) * f, 2LL * r), eng.scratch1(),
                 eng.scratch2());
        MpReal qk = eng.sin_pi(k, r);
        term.scale(qk);
        term.scale(qk);
        total.add(term);
    }
    // alpha = C^{sign f} D^{-2} with D^{-2} = (2/r) sin^2(pi/r). The loop
    // accumulated sin^2(pi k/r) J' instead of [k]^2 J', so the sin^2(pi/r)
    // of D^{-2} cancels against [k]^2's denominator.
    cplx alpha = std::polar(1.0, sign_of(f) * kPi * 3.0 * (2.0 - r) / (4.0 * r)) * (2.0 / r);
    return alpha * total.to_std();
}

cplx tau_bar(int r, const SurgeryCoefficient& s) { return std::conj(tau_rational(r, s)); }

cplx tau_jeffrey(int r) {
    const double s5 = std::sqrt(5.0);
    return cplx(0.5 - 0.5 / s5 - (2.0 / s5) * std::cos(kTwoPi * r / 5.0), 0.0);
}

cplx tau_integer_with(const LevelContext& ctx, long long f,
                      const std::vector<cplx>& jones_by_color) {
    const int r = ctx.r;
    if (jones_by_color.size() < static_cast<size_t>(r) + 1)
        throw std::invalid_argument("tau_integer_with: need colors up to r");
    KahanCSum total;
    for (long long k = 1; k < r; ++k) {
        double qk = quantum_int(ctx, k);
        total.add(ctx.t_power((k * k - 1) * f) * (qk * qk) * jones_by_color[static_cast<size_t>(k)]);
    }
    double s = std::sin(kPi / r);
    cplx alpha = std::polar(1.0, sign_of(f) * kPi * 3.0 * (2.0 - r) / (4.0 * r)) *
                 (2.0 / r * s * s);
    return alpha * total.value();
}

}  // namespace fig8rt::invariants
