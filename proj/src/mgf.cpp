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

#include "secrecy/mgf.hpp"

#include "secrecy/quadrature.hpp"
#include "secrecy/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace secrecy
{

namespace
{

constexpr double gain_upper_limit = 40.0;
constexpr double fallback_rel_tol = 1e-10;
constexpr double fallback_abs_tol = 1e-300;
constexpr int fallback_max_subdivisions = 2000;
// The MGFs sit close to 1 for small z and the capacity integrand divides
// 1 - M by z, so the series are summed to full precision.
const specfun::SeriesControl tight{10000, 2e-16, 1e-300};

void check_psi_args(double z, double radius, double beta)
{
    if (!(z >= 0.0))
        throw std::domain_error("MGF argument z must be >= 0, got " + std::to_string(z));
    if (!(radius > 0.0))
        throw std::domain_error("MGF radius must be > 0");
    if (!(beta > 2.0))
        throw std::domain_error("MGF closed forms require beta > 2, got " + std::to_string(beta));
}

double clamp_unit(double v)
{
    return std::min(v, 1.0);
}

// e^{-x} - x^{2/beta} Gamma(1 - 2/beta, x). For large x the two terms cancel;
// there Gamma(a, x) = (a - 1) Gamma(a - 1, x) + x^{a-1} e^{-x} turns the
// difference into (2/beta) x^{2/beta} Gamma(-2/beta, x).
double radial_mgf(double x, double beta)
{
    if (x == 0.0)
        return 1.0;
    const double p = 2.0 / beta;
    if (x > 2.0)
        return p * std::pow(x, p) * specfun::detail::upper_gamma_continued_fraction(-p, x);
    return std::exp(-x) - std::pow(x, p) * specfun::upper_incomplete_gamma(1.0 - p, x);
}

double psi_closed_form(double s, double beta)
{
    using std::numbers::pi;
    const double one_minus = 1.0 - s * s;
    const double root = std::sqrt(one_minus);
    const double link = (2.0 * root + 2.0 * s * std::asin(s) - pi * s) / (2.0 * one_minus * root);

    const double gamma_term = std::pow(2.0 * s, 2.0 / beta) *
                              std::exp(2.0 * specfun::ln_gamma(1.0 + 1.0 / beta) +
                                       specfun::ln_gamma(1.0 - 2.0 / beta));

    const double s2 = s * s;
    const double even = specfun::hyp3f2(1.5, 1.5, 0.5 - 1.0 / beta, 0.5, 1.5 - 1.0 / beta, s2, tight);
    const double odd = specfun::hyp3f2(2.0, 2.0, 1.0 - 1.0 / beta, 1.5, 2.0 - 1.0 / beta, s2, tight);
    const double series = 2.0 * pi * beta * s *
                          (even / (4.0 * (beta - 2.0)) - s * odd / (pi * (beta - 1.0)));
    return link - gamma_term + series;
}

double psi_semi_closed(double s, double beta)
{
    auto integrand = [&](double g) { return g * specfun::bessel_k0(g) * radial_mgf(s * g, beta); };
    const double knee = std::min(1.0 / s, gain_upper_limit);
    const auto head = quadrature::integrate(integrand, 0.0, knee, fallback_rel_tol,
                                            fallback_abs_tol, fallback_max_subdivisions);
    const auto tail = quadrature::integrate(integrand, knee, gain_upper_limit, fallback_rel_tol,
                                            fallback_abs_tol, fallback_max_subdivisions);
    return head.value + tail.value;
}

// int_0^inf e^{-s g} g K0(g) dg with u = s g.
double main_link_quadrature(double s)
{
    auto integrand = [&](double u) { return std::exp(-u) * u * specfun::bessel_k0(u / s); };
    double total = 0.0;
    for (auto [lo, hi] : {std::pair{0.0, 1.0}, std::pair{1.0, 60.0}})
        total += quadrature::integrate(integrand, lo, hi, fallback_rel_tol, fallback_abs_tol,
                                       fallback_max_subdivisions)
                     .value;
    return total / (s * s);
}

} // namespace

std::string_view to_string(MgfMethod method)
{
    switch (method)
    {
    case MgfMethod::closed_form:
        return "closed_form";
    case MgfMethod::semi_closed_quadrature:
        return "semi_closed_quadrature";
    case MgfMethod::full_quadrature:
        return "full_quadrature";
    }
    return "unknown";
}

double inner_distance_integral(double z, double g, double radius, double beta)
{
    check_psi_args(z, radius, beta);
    if (!(g >= 0.0))
        throw std::domain_error("inner_distance_integral: g must be >= 0");
    return radial_mgf(z * g * std::pow(radius, -beta), beta);
}

MgfValue mgf_psi(double z, double radius, double beta)
{
    check_psi_args(z, radius, beta);
    if (z == 0.0)
        return {1.0, MgfMethod::closed_form};
    const double s = z * std::pow(radius, -beta);
    if (s <= psi_closed_form_limit)
        return {clamp_unit(psi_closed_form(s, beta)), MgfMethod::closed_form};
    return {clamp_unit(psi_semi_closed(s, beta)), MgfMethod::semi_closed_quadrature};
}

MgfValue mgf_psi_semi_closed(double z, double radius, double beta)
{
    check_psi_args(z, radius, beta);
    if (z == 0.0)
        return {1.0, MgfMethod::semi_closed_quadrature};
    const double s = z * std::pow(radius, -beta);
    return {clamp_unit(psi_semi_closed(s, beta)), MgfMethod::semi_closed_quadrature};
}

MgfValue mgf_interference(double z, const SystemParams& params, double radius)
{
    if (params.k < 0)
        throw std::domain_error("mgf_interference: k must be >= 0");
    if (params.k == 0)
        return {1.0, MgfMethod::closed_form};
    const auto single = mgf_psi(z * params.p_k, radius, params.beta);
    return {std::pow(single.value, params.k), single.method};
}

MgfValue mgf_main_link(double z, double p_s, double r_d, double beta)
{
    check_psi_args(z, r_d, beta);
    const double s = z * p_s * std::pow(r_d, -beta);
    if (s == 0.0)
        return {1.0, MgfMethod::closed_form};
    const double x = (s - 1.0) / (s + 1.0);
    if (x <= main_link_series_limit)
    {
        const double v = 4.0 / (3.0 * (1.0 + s) * (1.0 + s)) * specfun::hyp2f1(2.0, 0.5, 2.5, x, tight);
        return {clamp_unit(v), MgfMethod::closed_form};
    }
    return {clamp_unit(main_link_quadrature(s)), MgfMethod::full_quadrature};
}

MgfValue mgf_eav_link(double z, double p_s, double r_max, double beta)
{
    return mgf_psi(z * p_s, r_max, beta);
}

MgfValue mgf_joint(MgfValue link_mgf, MgfValue interference_mgf)
{
    return {link_mgf.value * interference_mgf.value,
            std::max(link_mgf.method, interference_mgf.method)};
}

} // namespace secrecy
