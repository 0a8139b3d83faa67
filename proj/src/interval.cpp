/*
   Copyright 2026 The sigpairs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <mpfr.h>

#include "sigpairs/cyclotomic.hpp"

namespace sigpairs {

namespace {

struct Scratch {
    explicit Scratch(mpfr_prec_t prec) {
        for (auto* v : {&pi_lo, &pi_hi, &t_lo, &t_hi, &width, &c_lo, &c_hi, &a, &b})
            mpfr_init2(*v, prec);
    }
    ~Scratch() {
        for (auto* v : {&pi_lo, &pi_hi, &t_lo, &t_hi, &width, &c_lo, &c_hi, &a, &b}) mpfr_clear(*v);
    }
    mpfr_t pi_lo, pi_hi, t_lo, t_hi, width, c_lo, c_hi, a, b;
};

std::pair<Integer, long> dyadic(const mpfr_t x) {
    Integer m;
    if (mpfr_zero_p(x)) return {0, 0};
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    return {m, static_cast<long>(e)};
}

}  // namespace

struct Interval::Impl {
    mpfr_t lo, hi;
};

Interval::Interval(const Cyclotomic& value, unsigned precision_bits)
    : impl_(new Impl), precision_(precision_bits) {
    const auto prec = static_cast<mpfr_prec_t>(precision_bits);
    mpfr_init2(impl_->lo, prec);
    mpfr_init2(impl_->hi, prec);
    mpfr_set_zero(impl_->lo, 1);
    mpfr_set_zero(impl_->hi, 1);

    Scratch s(prec + 16);
    mpfr_const_pi(s.pi_lo, MPFR_RNDD);
    mpfr_const_pi(s.pi_hi, MPFR_RNDU);
    const long n = value.order();
    const auto& num = value.numerators();
    for (std::size_t k = 0; k < num.size(); ++k) {
        const int sg = sgn(num[k]);
        if (sg == 0) continue;
        if (k == 0) {
            mpfr_set_ui(s.c_lo, 1, MPFR_RNDN);
            mpfr_set_ui(s.c_hi, 1, MPFR_RNDN);
        } else {
            // Angle enclosure [t_lo, t_hi] of 2*pi*k/n; cos is 1-Lipschitz.
            mpfr_mul_ui(s.t_lo, s.pi_lo, 2 * k, MPFR_RNDD);
            mpfr_div_ui(s.t_lo, s.t_lo, static_cast<unsigned long>(n), MPFR_RNDD);
            mpfr_mul_ui(s.t_hi, s.pi_hi, 2 * k, MPFR_RNDU);
            mpfr_div_ui(s.t_hi, s.t_hi, static_cast<unsigned long>(n), MPFR_RNDU);
            mpfr_sub(s.width, s.t_hi, s.t_lo, MPFR_RNDU);
            mpfr_cos(s.c_lo, s.t_lo, MPFR_RNDD);
            mpfr_cos(s.c_hi, s.t_lo, MPFR_RNDU);
            mpfr_sub(s.c_lo, s.c_lo, s.width, MPFR_RNDD);
            mpfr_add(s.c_hi, s.c_hi, s.width, MPFR_RNDU);
        }
        if (sg > 0) {
            mpfr_mul_z(s.a, s.c_lo, num[k].get_mpz_t(), MPFR_RNDD);
            mpfr_mul_z(s.b, s.c_hi, num[k].get_mpz_t(), MPFR_RNDU);
        } else {
            mpfr_mul_z(s.a, s.c_hi, num[k].get_mpz_t(), MPFR_RNDD);
            mpfr_mul_z(s.b, s.c_lo, num[k].get_mpz_t(), MPFR_RNDU);
        }
        mpfr_add(impl_->lo, impl_->lo, s.a, MPFR_RNDD);
        mpfr_add(impl_->hi, impl_->hi, s.b, MPFR_RNDU);
    }
    mpfr_div_z(impl_->lo, impl_->lo, value.denominator().get_mpz_t(), MPFR_RNDD);
    mpfr_div_z(impl_->hi, impl_->hi, value.denominator().get_mpz_t(), MPFR_RNDU);
}

Interval::~Interval() {
    mpfr_clear(impl_->lo);
    mpfr_clear(impl_->hi);
    delete impl_;
}

bool Interval::contains_zero() const { return sign() == 0; }

int Interval::sign() const {
    if (mpfr_sgn(impl_->lo) > 0) return 1;
    if (mpfr_sgn(impl_->hi) < 0) return -1;
    return 0;
}

double Interval::lo_double() const { return mpfr_get_d(impl_->lo, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(impl_->hi, MPFR_RNDU); }
std::pair<Integer, long> Interval::lo_dyadic() const { return dyadic(impl_->lo); }
std::pair<Integer, long> Interval::hi_dyadic() const { return dyadic(impl_->hi); }

}  // namespace sigpairs
