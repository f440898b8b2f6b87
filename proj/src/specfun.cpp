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

#include "secrecy/specfun.hpp"

#include "secrecy/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

namespace secrecy::specfun
{

void SeriesControl::validate() const
{
    if (max_terms < 1)
        throw ParameterError("SeriesControl: max_terms must be >= 1");
    if (!(rel_tol > 0.0))
        throw ParameterError("SeriesControl: rel_tol must be > 0");
    if (!(abs_tol > 0.0))
        throw ParameterError("SeriesControl: abs_tol must be > 0");
}

namespace
{

constexpr double tiny = 1e-300;
constexpr double eps = std::numeric_limits<double>::epsilon();

bool is_nonpositive_integer(double v)
{
    return v <= 0.0 && std::floor(v) == v;
}

// Sum of the pFq series by term ratios. The tail after term n is bounded by
// |t_n| q / (1 - q) where q = max(|t_n / t_{n-1}|, |x|) is an upper bound on
// all later ratios for the monotone ratio sequences met here.
template <std::size_t P, std::size_t Q>
double pfq_series(const std::array<double, P>& a, const std::array<double, Q>& b, double x,
                  const SeriesControl& ctl, const char* name)
{
    ctl.validate();
    double term = 1.0;
    double sum = 1.0;
    const double ax = std::abs(x);
    for (int n = 0; n < ctl.max_terms; ++n)
    {
        const double dn = static_cast<double>(n);
        double ratio = x / (dn + 1.0);
        for (double ai : a)
            ratio *= ai + dn;
        for (double bj : b)
            ratio /= bj + dn;
        const double next = term * ratio;
        if (next == 0.0)
            return sum;
        sum += next;
        const double q = std::max(std::abs(ratio), ax);
        if (q < 1.0 && std::abs(next) * q / (1.0 - q) <= ctl.rel_tol * std::abs(sum) + ctl.abs_tol)
            return sum;
        term = next;
    }
    throw ConvergenceError(std::string(name) + ": series did not converge within " +
                           std::to_string(ctl.max_terms) + " terms (x = " + std::to_string(x) + ")");
}

// Lanczos coefficients, g = 671/128.
constexpr std::array<double, 14> lanczos_coef = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

double lanczos_ln_gamma(double x)
{
    double y = x;
    double tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (double c : lanczos_coef)
        ser += c / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

// K0 for 0 < x <= 2: -(ln(x/2) + gamma) I0(x) + sum_k H_k (x^2/4)^k / (k!)^2.
double bessel_k0_series(double x)
{
    const double y = 0.25 * x * x;
    double term = 1.0;
    double i0 = 1.0;
    double harmonic = 0.0;
    double tail = 0.0;
    for (int k = 1; k < 100; ++k)
    {
        term *= y / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        i0 += term;
        tail += harmonic * term;
        if (term * harmonic < eps * 1e-3 * std::abs(tail))
            break;
    }
    return -(std::log(0.5 * x) + euler_gamma) * i0 + tail;
}

// K0 for x > 2 via Steed's continued fraction (Temme's CF2 at nu = 0).
double bessel_k0_cf(double x)
{
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < 10000; ++i)
    {
        a -= 2.0 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < eps)
            break;
    }
    return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
}

} // namespace

double ln_gamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("ln_gamma: x must be > 0, got " + std::to_string(x));
    if (x == 1.0 || x == 2.0)
        return 0.0;
    // The Lanczos sum loses relative accuracy close to the pole.
    if (x < 0.5)
        return lanczos_ln_gamma(x + 1.0) - std::log(x);
    return lanczos_ln_gamma(x);
}

namespace detail
{

double upper_gamma_continued_fraction(double a, double x)
{
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i)
    {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps)
            return std::exp(a * std::log(x) - x) * h;
    }
    throw ConvergenceError("upper_incomplete_gamma: continued fraction did not converge");
}

} // namespace detail

double upper_incomplete_gamma(double a, double x)
{
    if (!(a > 0.0))
        throw std::domain_error("upper_incomplete_gamma: a must be > 0, got " + std::to_string(a));
    if (!(x >= 0.0))
        throw std::domain_error("upper_incomplete_gamma: x must be >= 0, got " + std::to_string(x));
    const double lg = ln_gamma(a);
    if (x == 0.0)
        return std::exp(lg);
    if (x >= a + 1.0)
        return detail::upper_gamma_continued_fraction(a, x);

    // Lower gamma by its power series, regularized.
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int n = 0; n < 100000; ++n)
    {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * eps)
        {
            const double p = sum * std::exp(a * std::log(x) - x - lg);
            return std::exp(lg) * (1.0 - p);
        }
    }
    throw ConvergenceError("upper_incomplete_gamma: series did not converge");
}

double bessel_k0(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("bessel_k0: x must be > 0, got " + std::to_string(x));
    if (x > 705.0)
        return 0.0;
    if (x <= 2.0)
        return bessel_k0_series(x);
    return bessel_k0_cf(x);
}

double hyp2f1(double a, double b, double c, double x, const SeriesControl& ctl)
{
    if (is_nonpositive_integer(c))
        throw std::domain_error("hyp2f1: c must not be a non-positive integer");
    if (!(std::abs(x) < 1.0))
        throw std::domain_error("hyp2f1: |x| must be < 1, got " + std::to_string(x));
    if (x <= -0.5)
    {
        // Pfaff: 2F1(a,b;c;x) = (1-x)^-a 2F1(a, c-b; c; x/(x-1)).
        const double w = x / (x - 1.0);
        return std::pow(1.0 - x, -a) *
               pfq_series<2, 1>({a, c - b}, {c}, w, ctl, "hyp2f1");
    }
    return pfq_series<2, 1>({a, b}, {c}, x, ctl, "hyp2f1");
}

double hyp3f2(double a1, double a2, double a3, double b1, double b2, double x,
              const SeriesControl& ctl)
{
    if (is_nonpositive_integer(b1) || is_nonpositive_integer(b2))
        throw std::domain_error("hyp3f2: b1, b2 must not be non-positive integers");
    if (!(std::abs(x) < 1.0))
        throw std::domain_error("hyp3f2: |x| must be < 1, got " + std::to_string(x));
    return pfq_series<3, 2>({a1, a2, a3}, {b1, b2}, x, ctl, "hyp3f2");
}

} // namespace secrecy::specfun
