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

#include <mpfr.h>

#include <complex>
#include <utility>

namespace fig8rt::detail {

// Thin RAII wrapper around mpfr_t. The invariant sums cancel terms of size
// exp(r Vol/2pi) down to O(1), so double precision dies around r ~ 40 at the
// 1e-10 level; these sums run at r-adaptive precision instead.
class MpReal {
  public:
    explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    MpReal(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    MpReal(const MpReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    MpReal(MpReal&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    MpReal& operator=(const MpReal& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MpReal& operator=(MpReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpReal() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_); }

  private:
    mpfr_t v_;
};

class MpComplex {
  public:
    explicit MpComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    MpComplex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

    static MpComplex from_angle(const MpReal& angle) {
        MpComplex z(angle.prec());
        mpfr_sin_cos(z.im_.get(), z.re_.get(), angle.get(), MPFR_RNDN);
        return z;
    }

    MpReal& re() { return re_; }
    MpReal& im() { return im_; }
    const MpReal& re() const { return re_; }
    const MpReal& im() const { return im_; }
    mpfr_prec_t prec() const { return re_.prec(); }

    std::complex<double> to_std() const { return {re_.to_double(), im_.to_double()}; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    void add(const MpComplex& o) {
        mpfr_add(re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
        mpfr_add(im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
    }
    void sub(const MpComplex& o) {
        mpfr_sub(re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
        mpfr_sub(im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
    }
    // this *= o, with two scratch registers supplied by the caller so hot
    // loops do not allocate.
    void mul(const MpComplex& o, MpReal& t1, MpReal& t2) {
        mpfr_mul(t1.get(), re_.get(), o.re_.get(), MPFR_RNDN);
        mpfr_mul(t2.get(), im_.get(), o.im_.get(), MPFR_RNDN);
        mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
        mpfr_mul(t2.get(), re_.get(), o.im_.get(), MPFR_RNDN);
        mpfr_fma(im_.get(), im_.get(), o.re_.get(), t2.get(), MPFR_RNDN);
        mpfr_set(re_.get(), t1.get(), MPFR_RNDN);
    }
    void scale(const MpReal& s) {
        mpfr_mul(re_.get(), re_.get(), s.get(), MPFR_RNDN);
        mpfr_mul(im_.get(), im_.get(), s.get(), MPFR_RNDN);
    }
    void conj_inplace() { mpfr_neg(im_.get(), im_.get(), MPFR_RNDN); }

  private:
    MpReal re_, im_;
};

}  // namespace fig8rt::detail
