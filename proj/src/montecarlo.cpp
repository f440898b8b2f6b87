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

#include "secrecy/montecarlo.hpp"

#include "secrecy/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace secrecy
{

namespace
{

// Welford accumulator; blocks are combined with Chan's pairwise update.
struct RunningStats
{
    std::int64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }

    void merge(const RunningStats& other)
    {
        if (other.n == 0)
            return;
        if (n == 0)
        {
            *this = other;
            return;
        }
        const auto total = static_cast<double>(n + other.n);
        const double delta = other.mean - mean;
        mean += delta * static_cast<double>(other.n) / total;
        m2 += other.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(other.n) / total;
        n += other.n;
    }

    McEstimate estimate(std::uint64_t seed) const
    {
        McEstimate e;
        e.mean = mean;
        e.n_samples = n;
        e.seed = seed;
        if (n > 1)
            e.std_error = std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
        return e;
    }
};

void check_samples(std::int64_t n)
{
    if (n < 1)
        throw ParameterError("Monte-Carlo sample count must be >= 1");
}

// Runs body(block_index, first_sample, count, stats_for_block) over all blocks
// on up to `jobs` threads. stats_for_block points at `width` accumulators.
template <class Body>
std::vector<RunningStats> run_blocks(std::int64_t n, std::size_t width, unsigned jobs, Body body)
{
    const std::int64_t blocks = (n + mc_block_size - 1) / mc_block_size;
    std::vector<RunningStats> per_block(static_cast<std::size_t>(blocks) * width);
    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::int64_t>(jobs, blocks));

    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (std::int64_t b = next++; b < blocks; b = next++)
        {
            const std::int64_t count = std::min(mc_block_size, n - b * mc_block_size);
            body(static_cast<std::uint64_t>(b), count,
                 per_block.data() + static_cast<std::size_t>(b) * width);
        }
    };
    if (jobs <= 1)
    {
        worker();
    }
    else
    {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }

    std::vector<RunningStats> merged(width);
    for (std::int64_t b = 0; b < blocks; ++b)
        for (std::size_t w = 0; w < width; ++w)
            merged[w].merge(per_block[static_cast<std::size_t>(b) * width + w]);
    return merged;
}

} // namespace

CapacityEstimates estimate_capacities(const SystemParams& params, std::int64_t n,
                                      std::uint64_t seed, unsigned jobs)
{
    params.validate();
    check_samples(n);
    enum
    {
        kD,
        kE,
        kDiff,
        kMax,
        kWidth
    };
    const auto stats = run_blocks(n, kWidth, jobs,
                                  [&](std::uint64_t block, std::int64_t count, RunningStats* acc) {
                                      RandomStream rng(seed, block);
                                      ChannelDraw draw;
                                      for (std::int64_t i = 0; i < count; ++i)
                                      {
                                          sample_channel(params, rng, draw);
                                          const auto g = link_sinrs(params, draw);
                                          const double cd = std::log2(1.0 + g.gamma_d);
                                          const double ce = std::log2(1.0 + g.gamma_e);
                                          acc[kD].add(cd);
                                          acc[kE].add(ce);
                                          acc[kDiff].add(cd - ce);
                                          acc[kMax].add(std::max(cd - ce, 0.0));
                                      }
                                  });
    CapacityEstimates out;
    out.c_d = stats[kD].estimate(seed);
    out.c_e = stats[kE].estimate(seed);
    out.c_s_diff = stats[kDiff].estimate(seed);
    out.c_s_diff.mean = out.c_d.mean - out.c_e.mean;
    out.c_s_max = stats[kMax].estimate(seed);
    return out;
}

std::vector<McEstimate> estimate_mgf_grid(const DrawWeight& weight, std::span<const double> zs,
                                          const SystemParams& params, std::int64_t n,
                                          std::uint64_t seed, unsigned jobs)
{
    params.validate();
    check_samples(n);
    for (double z : zs)
        if (!(z >= 0.0))
            throw ParameterError("Monte-Carlo MGF argument z must be >= 0");
    const auto stats = run_blocks(n, zs.size(), jobs,
                                  [&](std::uint64_t block, std::int64_t count, RunningStats* acc) {
                                      RandomStream rng(seed, block);
                                      ChannelDraw draw;
                                      for (std::int64_t i = 0; i < count; ++i)
                                      {
                                          sample_channel(params, rng, draw);
                                          const double w = weight(draw);
                                          for (std::size_t j = 0; j < zs.size(); ++j)
                                              acc[j].add(std::exp(-zs[j] * w));
                                      }
                                  });
    std::vector<McEstimate> out;
    out.reserve(stats.size());
    for (const auto& s : stats)
        out.push_back(s.estimate(seed));
    return out;
}

McEstimate estimate_mgf(const DrawWeight& weight, double z, const SystemParams& params,
                        std::int64_t n, std::uint64_t seed, unsigned jobs)
{
    const double zs[] = {z};
    return estimate_mgf_grid(weight, zs, params, n, seed, jobs).front();
}

DrawWeight interference_weight(const SystemParams& params)
{
    return [params](const ChannelDraw& d) {
        double total = 0.0;
        for (std::size_t i = 0; i < d.g_int_d.size(); ++i)
            total += received_power(params.p_k, d.g_int_d[i], d.r_int_d[i], params.beta);
        return total;
    };
}

DrawWeight main_link_weight(const SystemParams& params)
{
    return [params](const ChannelDraw& d) {
        return received_power(params.p_s, d.g_d, params.r_d, params.beta);
    };
}

DrawWeight eav_link_weight(const SystemParams& params)
{
    return [params](const ChannelDraw& d) {
        return received_power(params.p_s, d.g_e, d.r_e, params.beta);
    };
}

} // namespace secrecy
