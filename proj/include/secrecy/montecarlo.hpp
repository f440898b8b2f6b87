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

#ifndef SECRECY_MONTECARLO_HPP
#define SECRECY_MONTECARLO_HPP

#include "secrecy/channel.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace secrecy
{

struct McEstimate
{
    double mean = 0.0;
    double std_error = 0.0; // sample standard deviation / sqrt(n_samples)
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
};

struct CapacityEstimates
{
    McEstimate c_d;
    McEstimate c_e;
    McEstimate c_s_diff; // mean is exactly c_d.mean - c_e.mean
    McEstimate c_s_max;  // E[max(C_D - C_E, 0)]
};

// Samples are generated in fixed blocks of mc_block_size, block b drawing from
// RandomStream(seed, b). Blocks are merged in index order, so results depend
// on (seed, n) only and never on the number of worker threads.
inline constexpr std::int64_t mc_block_size = 16384;

// jobs = 0 uses std::thread::hardware_concurrency().
CapacityEstimates estimate_capacities(const SystemParams& params, std::int64_t n,
                                      std::uint64_t seed, unsigned jobs = 0);

using DrawWeight = std::function<double(const ChannelDraw&)>;

// Empirical E[exp(-z weight(draw))].
McEstimate estimate_mgf(const DrawWeight& weight, double z, const SystemParams& params,
                        std::int64_t n, std::uint64_t seed, unsigned jobs = 0);

// Same draws for every z, one estimate per entry of zs.
std::vector<McEstimate> estimate_mgf_grid(const DrawWeight& weight, std::span<const double> zs,
                                          const SystemParams& params, std::int64_t n,
                                          std::uint64_t seed, unsigned jobs = 0);

// Sum_k P_k g_k r_k^-beta at D.
DrawWeight interference_weight(const SystemParams& params);
// P_s g_D r_D^-beta.
DrawWeight main_link_weight(const SystemParams& params);
// P_s g_E r_E^-beta.
DrawWeight eav_link_weight(const SystemParams& params);

} // namespace secrecy

#endif
