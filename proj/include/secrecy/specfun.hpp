// SPDX-License-Identifier: Apache-2.0
//
// secrecy-lab: average secrecy capacity of V2V links under interference
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SECRECY_SPECFUN_HPP
#define SECRECY_SPECFUN_HPP

// Special functions needed by the closed-form MGFs. Everything is evaluated in
// double precision; argument checks throw std::domain_error, exhausted series
// throw secrecy::ConvergenceError.

namespace secrecy::specfun
{

// Termination control for the hypergeometric series.
struct SeriesControl
{
    int max_terms = 10000;
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;

    // Throws secrecy::ParameterError when a field is non-positive.
    void validate() const;
};

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// ln Gamma(x) for x > 0 (Lanczos).
double ln_gamma(double x);

// Upper incomplete gamma Gamma(a, x) = int_x^inf t^(a-1) e^-t dt, for
// 0 < a < 50 and x >= 0.
double upper_incomplete_gamma(double a, double x);

// Modified Bessel function of the second kind, order zero. Returns 0 for
// x > 705 where the result underflows.
double bessel_k0(double x);

// Gauss hypergeometric 2F1(a, b; c; x) for |x| < 1. Arguments in (-1, -0.5]
// are mapped through the Pfaff transformation to x / (x - 1).
double hyp2f1(double a, double b, double c, double x, const SeriesControl& ctl = {});

// Generalized hypergeometric 3F2(a1, a2, a3; b1, b2; x) by direct summation.
// Accurate to ~1e-9 for |x| <= 0.95; beyond that it is only as good as the
// term budget in ctl allows.
double hyp3f2(double a1, double a2, double a3, double b1, double b2, double x,
              const SeriesControl& ctl = {});

namespace detail
{
// Legendre continued fraction for Gamma(a, x). Valid for any real a when
// x > 0; converges quickly once x >~ |a| + 1.
double upper_gamma_continued_fraction(double a, double x);
} // namespace detail

} // namespace secrecy::specfun

#endif
