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

#include <doctest.h>

#include "oracle.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/mgf.hpp"
#include "secrecy/montecarlo.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

using namespace secrecy;

namespace
{

double rel_err(double got, double want)
{
    return std::abs(got - want) / std::abs(want);
}

constexpr double beta = 2.7;

// Values of the double integrals E[exp(-z g r^-beta)] from nested mpmath
// quadrature at 18 digits.
constexpr double psi_z1_r20 = 0.989851400304935432;
constexpr double interference_z01_k5_r40 = 0.986723241895600035;
constexpr double eav_z005 = 0.976884744190334912;

void check_mgf_shape(const std::function<MgfValue(double)>& mgf, double z_max)
{
    CHECK(std::abs(mgf(0.0).value - 1.0) < 1e-12);
    double prev = mgf(0.0).value;
    for (double z = z_max * 1e-4; z <= z_max; z *= 1.5)
    {
        const auto m = mgf(z);
        INFO("z=" << z);
        CHECK(m.value > 0.0);
        CHECK(m.value <= 1.0);
        CHECK(m.value < prev);
        prev = m.value;
    }
}

} // namespace

TEST_CASE("inner_distance_integral: examples")
{
    CHECK(inner_distance_integral(0.0, 1.3, 20.0, beta) == 1.0);
    CHECK(inner_distance_integral(2.0, 0.0, 20.0, beta) == 1.0);
    const double frozen = 0.99215491042699667200; // mpmath, radial integral
    CHECK(rel_err(inner_distance_integral(1.0, 1.0, 20.0, beta), frozen) < 1e-12);
    CHECK(rel_err(oracle::radial_average(1.0, 1.0, 20.0, beta), frozen) < 1e-12);
}

TEST_CASE("inner_distance_integral: matches the radial integral on both branches")
{
    for (double b : {2.2, 2.7, 4.0})
        for (double x : {1e-6, 0.01, 0.3, 1.0, 1.99, 2.01, 5.0, 20.0, 100.0})
        {
            const double radius = 10.0;
            const double z = x * std::pow(radius, b);
            INFO("beta=" << b << " x=" << x);
            CHECK(rel_err(inner_distance_integral(z, 1.0, radius, b),
                          oracle::radial_average(z, 1.0, radius, b)) < 1e-9);
        }
}

TEST_CASE("inner_distance_integral: domain")
{
    CHECK_THROWS_AS(inner_distance_integral(1.0, 1.0, 20.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(inner_distance_integral(-1.0, 1.0, 20.0, beta), std::domain_error);
    CHECK_THROWS_AS(inner_distance_integral(1.0, -1.0, 20.0, beta), std::domain_error);
}

TEST_CASE("mgf_psi: examples")
{
    const auto at_zero = mgf_psi(0.0, 20.0, beta);
    CHECK(at_zero.value == 1.0);
    CHECK(at_zero.method == MgfMethod::closed_form);

    const auto m = mgf_psi(1.0, 20.0, beta);
    CHECK(m.method == MgfMethod::closed_form);
    CHECK(rel_err(m.value, psi_z1_r20) < 1e-9);
    CHECK(rel_err(oracle::psi_2d(1.0, 20.0, beta), psi_z1_r20) < 1e-9);

    check_mgf_shape([](double z) { return mgf_psi(z, 20.0, beta); }, 5.0 * std::pow(20.0, beta));
}

TEST_CASE("mgf_psi: path selection at z R^-beta = 0.95")
{
    const double scale = std::pow(20.0, beta);
    CHECK(mgf_psi(0.95 * scale, 20.0, beta).method == MgfMethod::closed_form);
    CHECK(mgf_psi(0.99 * scale, 20.0, beta).method == MgfMethod::semi_closed_quadrature);
}

TEST_CASE("mgf_psi: closed form and semi-closed quadrature agree")
{
    for (double b : {2.3, 2.7, 3.5})
        for (double s : {0.05, 0.2, 0.5, 0.8, 0.949})
        {
            const double radius = 20.0;
            const double z = s * std::pow(radius, b);
            const auto closed = mgf_psi(z, radius, b);
            const auto numeric = mgf_psi_semi_closed(z, radius, b);
            INFO("beta=" << b << " s=" << s);
            CHECK(closed.method == MgfMethod::closed_form);
            CHECK(numeric.method == MgfMethod::semi_closed_quadrature);
            CHECK(rel_err(closed.value, numeric.value) < 1e-6);
        }
}

TEST_CASE("mgf_psi: fallback region against the double integral")
{
    for (double s : {1.5, 10.0, 200.0})
    {
        const double z = s * std::pow(10.0, beta);
        INFO("s=" << s);
        CHECK(rel_err(mgf_psi(z, 10.0, beta).value, oracle::psi_2d(z, 10.0, beta)) < 1e-7);
    }
}

TEST_CASE("mgf_psi: domain")
{
    CHECK_THROWS_AS(mgf_psi(1.0, 20.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(mgf_psi(-1.0, 20.0, beta), std::domain_error);
    CHECK_THROWS_AS(mgf_psi(1.0, 0.0, beta), std::domain_error);
}

TEST_CASE("mgf_interference")
{
    SystemParams p;
    p.k = 0;
    CHECK(mgf_interference(3.0, p, 20.0).value == 1.0);

    p.k = 1;
    const double single = mgf_interference(0.7, p, 20.0).value;
    CHECK(single == mgf_psi(0.7 * p.p_k, 20.0, beta).value);
    for (int k : {2, 3, 5})
    {
        p.k = k;
        CHECK(rel_err(mgf_interference(0.7, p, 20.0).value, std::pow(single, k)) < 1e-12);
    }

    p.k = 5;
    p.r_int = 40.0;
    CHECK(rel_err(mgf_interference(0.1, p, 40.0).value, interference_z01_k5_r40) < 1e-9);

    const auto mc = estimate_mgf(interference_weight(p), 0.1, p, 1000000, 31337, 1);
    CHECK(std::abs(mc.mean - mgf_interference(0.1, p, 40.0).value) < 3.0 * mc.std_error);

    check_mgf_shape([&](double z) { return mgf_interference(z, p, 40.0); }, 500.0);
}

TEST_CASE("mgf_main_link: examples")
{
    CHECK(std::abs(mgf_main_link(0.0, 10.0, 4.0, beta).value - 1.0) < 1e-12);

    // s = z P_s r_d^-beta = 1 puts the 2F1 argument at 0.
    const double z_unit = 1.0 / (10.0 * std::pow(4.0, -beta));
    CHECK(mgf_main_link(z_unit, 10.0, 4.0, beta).value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    const double frozen = 0.71551096252222370996; // mpmath, int e^{-sg} g K0(g) dg
    CHECK(rel_err(mgf_main_link(1.0, 10.0, 4.0, beta).value, frozen) < 1e-10);
    CHECK(rel_err(oracle::main_link_1d(10.0 * std::pow(4.0, -beta)), frozen) < 1e-10);
}

TEST_CASE("mgf_main_link: equals the gain integral")
{
    // With p_s = 1, r_d = 1 the scale s equals z.
    for (double s : {0.01, 0.1, 1.0, 10.0, 100.0, 199.0, 201.0, 1e3, 1e5})
    {
        const auto m = mgf_main_link(s, 1.0, 1.0, beta);
        INFO("s=" << s);
        CHECK(std::abs(m.value - oracle::main_link_1d(s)) < 1e-8);
        CHECK(rel_err(m.value, oracle::main_link_1d(s)) < 1e-8);
        CHECK(m.method == (s <= 199.0 ? MgfMethod::closed_form : MgfMethod::full_quadrature));
    }
    check_mgf_shape([](double z) { return mgf_main_link(z, 10.0, 4.0, beta); }, 1e4);
}

TEST_CASE("mgf_eav_link")
{
    CHECK(mgf_eav_link(0.0, 10.0, 10.0, beta).value == 1.0);
    for (double z : {0.01, 0.3, 2.0, 60.0})
        CHECK(mgf_eav_link(z, 10.0, 10.0, beta).value == mgf_psi(10.0 * z, 10.0, beta).value);
    CHECK(rel_err(mgf_eav_link(0.05, 10.0, 10.0, beta).value, eav_z005) < 1e-9);

    SystemParams p;
    p.k = 0;
    const auto mc = estimate_mgf(eav_link_weight(p), 0.05, p, 1000000, 4242, 1);
    CHECK(std::abs(mc.mean - eav_z005) < 3.0 * mc.std_error);
}

TEST_CASE("mgf_joint")
{
    const MgfValue m{0.37, MgfMethod::semi_closed_quadrature};
    CHECK(mgf_joint({1.0, MgfMethod::closed_form}, m).value == 0.37);
    CHECK(mgf_joint(m, {1.0, MgfMethod::closed_form}).value == 0.37);
    CHECK(mgf_joint({0.8, MgfMethod::closed_form}, {0.5, MgfMethod::closed_form}).value ==
          doctest::Approx(0.4));
    CHECK(mgf_joint(m, {0.5, MgfMethod::closed_form}).method == MgfMethod::semi_closed_quadrature);
}

TEST_CASE("closed forms against 10^6-sample empirical MGFs at five z")
{
    SystemParams p;
    p.k = 2;
    const std::vector<double> zs = {0.02, 0.2, 1.0, 5.0, 40.0};
    const auto int_mc = estimate_mgf_grid(interference_weight(p), zs, p, 1000000, 8, 1);
    const auto main_mc = estimate_mgf_grid(main_link_weight(p), zs, p, 1000000, 9, 1);
    const auto eav_mc = estimate_mgf_grid(eav_link_weight(p), zs, p, 1000000, 10, 1);
    for (std::size_t i = 0; i < zs.size(); ++i)
    {
        INFO("z=" << zs[i]);
        CHECK(std::abs(mgf_interference(zs[i], p, p.r_int).value - int_mc[i].mean) <
              3.0 * int_mc[i].std_error);
        CHECK(std::abs(mgf_main_link(zs[i], p.p_s, p.r_d, p.beta).value - main_mc[i].mean) <
              3.0 * main_mc[i].std_error);
        CHECK(std::abs(mgf_eav_link(zs[i], p.p_s, p.r_max, p.beta).value - eav_mc[i].mean) <
              3.0 * eav_mc[i].std_error);
    }
}
