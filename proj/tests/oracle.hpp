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

#ifndef SECRECY_TESTS_ORACLE_HPP
#define SECRECY_TESTS_ORACLE_HPP

// Reference values computed without any code from the library: Boost.Math
// special functions and quadrature evaluate the defining integrals directly.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>

namespace oracle
{

inline double gk(auto f, double a, double b, double tol = 1e-13)
{
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 20, tol);
}

// g K0(g) through Boost.
inline double gain_pdf(double g)
{
    return g <= 0.0 ? 0.0 : g * boost::math::cyl_bessel_k(0, g);
}

// K0(x) = int_0^inf exp(-x cosh t) dt.
inline double k0_integral(double x)
{
    const double t_max = std::acosh(800.0 / x + 1.0);
    return gk([x](double t) { return std::exp(-x * std::cosh(t)); }, 0.0, t_max);
}

// int_x^inf t^(a-1) e^-t dt, with t = x + u^2 on the tail to soften t^(a-1)
// near zero when x = 0.
inline double upper_gamma_integral(double a, double x)
{
    if (x == 0.0)
        return boost::math::tgamma(a);
    return gk([a](double t) { return std::pow(t, a - 1.0) * std::exp(-t); }, x, x + 60.0, 1e-14);
}

// E_r[exp(-z g r^-beta)] for r uniform in a disk of the given radius.
inline double radial_average(double z, double g, double radius, double beta)
{
    auto f = [&](double r) {
        return r <= 0.0 ? 0.0 : std::exp(-z * g * std::pow(r, -beta)) * 2.0 * r / (radius * radius);
    };
    return gk(f, 0.0, radius, 1e-13);
}

// Double integral E[exp(-z g r^-beta)] over gain density and disk.
inline double psi_2d(double z, double radius, double beta)
{
    auto outer = [&](double g) { return gain_pdf(g) * radial_average(z, g, radius, beta); };
    return gk(outer, 0.0, 1.0, 1e-12) + gk(outer, 1.0, 8.0, 1e-12) + gk(outer, 8.0, 60.0, 1e-12);
}

// int_0^inf exp(-s g) g K0(g) dg.
inline double main_link_1d(double s)
{
    auto f = [s](double g) { return std::exp(-s * g) * gain_pdf(g); };
    return gk(f, 0.0, 1.0) + gk(f, 1.0, 8.0) + gk(f, 8.0, 80.0);
}

} // namespace oracle

#endif
