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

#ifndef SECRECY_CAPACITY_HPP
#define SECRECY_CAPACITY_HPP

#include "secrecy/channel.hpp"
#include "secrecy/mgf.hpp"

#include <functional>

namespace secrecy
{

struct QuadratureConfig
{
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    // Boundary between the endpoint panel (0, z_split] and the tail panel.
    double z_split = 1.0;

    void validate() const;
};

using MgfFunction = std::function<MgfValue(double)>;

struct AverageCapacity
{
    double value = 0.0;     // bits/s/Hz
    double abs_error = 0.0; // quadrature estimate plus truncation bound
    int evaluations = 0;
    MgfMethod max_method = MgfMethod::closed_form;
};

struct CapacityResult
{
    double c_d = 0.0;
    double c_e = 0.0;
    // Raw difference c_d - c_e of the averages. Unlike E[max(C_D - C_E, 0)]
    // this can be negative when the eavesdropper is better placed on average.
    double c_s = 0.0;
    double error_d = 0.0;
    double error_e = 0.0;
    int evaluations = 0;
    MgfMethod max_method_used = MgfMethod::closed_form;
};

// (1/ln 2) (1/z) e^{-z n_0} (M_int(z) - M_joint(z)), the integrand of
// E[log2(1 + signal / (interference + n_0))] in MGF form.
double capacity_integrand(double z, const MgfFunction& mgf_int, const MgfFunction& mgf_joint,
                          double n_0);

// Integral of capacity_integrand over (0, inf). Two panels:
//  * (0, z_split] in t with z = t^{beta/2}, which removes the z^{2/beta - 1}
//    endpoint behaviour coming from the heavy-tailed distance term;
//  * [z_split, z_max] in u = ln z, where e^{-z_max n_0} / (ln 2 z_split n_0)
//    < abs_tol bounds the discarded tail.
// Throws ConvergenceError when a panel misses its tolerance.
AverageCapacity average_capacity(const MgfFunction& mgf_int, const MgfFunction& mgf_joint,
                                 double n_0, double beta, const QuadratureConfig& cfg = {});

// Average capacities of both links and their difference.
CapacityResult average_secrecy_capacity(const SystemParams& params,
                                        const QuadratureConfig& cfg = {});

} // namespace secrecy

#endif
