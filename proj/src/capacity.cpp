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

#include "secrecy/capacity.hpp"

#include "secrecy/errors.hpp"
#include "secrecy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace secrecy
{

void QuadratureConfig::validate() const
{
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1 || !(z_split > 0.0))
        throw ParameterError("QuadratureConfig: all fields must be positive");
}

double capacity_integrand(double z, const MgfFunction& mgf_int, const MgfFunction& mgf_joint,
                          double n_0)
{
    if (!(z > 0.0))
        throw std::domain_error("capacity_integrand: z must be > 0");
    const double gap = mgf_int(z).value - mgf_joint(z).value;
    return std::exp(-z * n_0) * gap / (z * std::numbers::ln2);
}

AverageCapacity average_capacity(const MgfFunction& mgf_int, const MgfFunction& mgf_joint,
                                 double n_0, double beta, const QuadratureConfig& cfg)
{
    cfg.validate();
    if (!(n_0 > 0.0))
        throw std::domain_error("average_capacity: n_0 must be > 0");
    if (!(beta > 2.0))
        throw std::domain_error("average_capacity: beta must be > 2");

    AverageCapacity out;
    auto track = [&out](const MgfFunction& f) {
        return [&out, &f](double z) {
            const auto m = f(z);
            out.max_method = std::max(out.max_method, m.method);
            return m;
        };
    };
    const MgfFunction int_tracked = track(mgf_int);
    const MgfFunction joint_tracked = track(mgf_joint);
    auto f = [&](double z) { return capacity_integrand(z, int_tracked, joint_tracked, n_0); };

    const double half = 0.5 * beta;
    auto endpoint = [&](double t) {
        const double z = std::pow(t, half);
        return f(z) * half * z / t;
    };
    const auto head = quadrature::integrate(endpoint, 0.0, std::pow(cfg.z_split, 1.0 / half),
                                            cfg.rel_tol, 0.5 * cfg.abs_tol, cfg.max_subdivisions);
    out.value = head.value;
    out.abs_error = head.abs_error;
    out.evaluations = head.evaluations;

    const double z_max =
        -std::log(cfg.abs_tol * std::numbers::ln2 * cfg.z_split * n_0) / n_0;
    if (z_max > cfg.z_split)
    {
        auto tail = [&](double u) {
            const double z = std::exp(u);
            return f(z) * z;
        };
        const auto body = quadrature::integrate(tail, std::log(cfg.z_split), std::log(z_max),
                                                cfg.rel_tol, 0.5 * cfg.abs_tol,
                                                cfg.max_subdivisions);
        out.value += body.value;
        out.abs_error += body.abs_error;
        out.evaluations += body.evaluations;
    }
    const double truncation =
        std::exp(-std::max(z_max, cfg.z_split) * n_0) / (std::numbers::ln2 * cfg.z_split * n_0);
    out.abs_error += truncation;
    return out;
}

CapacityResult average_secrecy_capacity(const SystemParams& params, const QuadratureConfig& cfg)
{
    params.validate();
    const MgfFunction interference = [&params](double z) {
        return mgf_interference(z, params, params.r_int);
    };
    const MgfFunction joint_d = [&](double z) {
        return mgf_joint(mgf_main_link(z, params.p_s, params.r_d, params.beta), interference(z));
    };
    const MgfFunction joint_e = [&](double z) {
        return mgf_joint(mgf_eav_link(z, params.p_s, params.r_max, params.beta), interference(z));
    };

    const auto d = average_capacity(interference, joint_d, params.n_0, params.beta, cfg);
    const auto e = average_capacity(interference, joint_e, params.n_0, params.beta, cfg);

    CapacityResult r;
    r.c_d = d.value;
    r.c_e = e.value;
    r.c_s = d.value - e.value;
    r.error_d = d.abs_error;
    r.error_e = e.abs_error;
    r.evaluations = d.evaluations + e.evaluations;
    r.max_method_used = std::max(d.max_method, e.max_method);
    return r;
}

} // namespace secrecy
