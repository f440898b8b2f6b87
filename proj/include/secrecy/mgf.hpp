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

#ifndef SECRECY_MGF_HPP
#define SECRECY_MGF_HPP

#include "secrecy/channel.hpp"

#include <string_view>

namespace secrecy
{

// Ordered from cheapest to most expensive; max() of two methods names the
// costliest path involved in a product.
enum class MgfMethod
{
    closed_form = 0,
    semi_closed_quadrature = 1,
    full_quadrature = 2,
};

std::string_view to_string(MgfMethod method);

// E[exp(-z X)] for a nonnegative variate X, so value lies in (0, 1].
struct MgfValue
{
    double value = 1.0;
    MgfMethod method = MgfMethod::closed_form;
};

// Largest z R^-beta for which the hypergeometric closed form of mgf_psi is
// used; beyond it the radial integral is integrated numerically over the gain.
inline constexpr double psi_closed_form_limit = 0.95;

// Largest 2F1 argument (s - 1)/(s + 1) used by mgf_main_link before switching
// to quadrature; the series needs O(1/(1 - x)) terms near x = 1.
inline constexpr double main_link_series_limit = 0.99;

// E_r[exp(-z g r^-beta)] for r uniform in a disk of the given radius:
// [R^2 e^{-zgR^-beta} - (zg)^{2/beta} Gamma(1 - 2/beta, zgR^-beta)] / R^2.
double inner_distance_integral(double z, double g, double radius, double beta);

// E[exp(-z g r^-beta)] with g double-Rayleigh and r uniform in a disk.
MgfValue mgf_psi(double z, double radius, double beta);

// The numeric path of mgf_psi regardless of z: inner_distance_integral
// integrated against g K0(g) over (0, 40].
MgfValue mgf_psi_semi_closed(double z, double radius, double beta);

// MGF of the cumulative interference from params.k interferers of power p_k
// placed uniformly within radius: mgf_psi(z p_k)^k.
MgfValue mgf_interference(double z, const SystemParams& params, double radius);

// MGF of the main-link power P_s g r_D^-beta at the fixed distance r_d.
MgfValue mgf_main_link(double z, double p_s, double r_d, double beta);

// MGF of the eavesdropper-link power, E uniform within r_max.
MgfValue mgf_eav_link(double z, double p_s, double r_max, double beta);

// Joint MGF of independent link and interference powers.
MgfValue mgf_joint(MgfValue link_mgf, MgfValue interference_mgf);

} // namespace secrecy

#endif
