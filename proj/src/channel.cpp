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

#include "secrecy/channel.hpp"

#include "secrecy/errors.hpp"
#include "secrecy/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace secrecy
{

namespace
{

void require(bool ok, const char* invariant)
{
    if (!ok)
        throw ParameterError(std::string("invalid SystemParams: ") + invariant);
}

double rayleigh(RandomStream& rng)
{
    return std::sqrt(-2.0 * std::log(rng.uniform()));
}

double interference_power(const SystemParams& params, std::span<const double> gains,
                          std::span<const double> distances)
{
    double total = 0.0;
    for (std::size_t i = 0; i < gains.size(); ++i)
        total += received_power(params.p_k, gains[i], distances[i], params.beta);
    return total;
}

} // namespace

void SystemParams::validate() const
{
    require(std::isfinite(p_s) && p_s > 0.0, "p_s > 0");
    require(std::isfinite(p_k) && p_k > 0.0, "p_k > 0");
    require(k >= 0, "k >= 0");
    require(std::isfinite(r_d) && r_d > 0.0, "r_d > 0");
    require(std::isfinite(r_max) && r_max > 0.0, "r_max > 0");
    require(std::isfinite(r_int) && r_int > 0.0, "r_int > 0");
    require(std::isfinite(beta) && beta > 2.0, "beta > 2");
    require(std::isfinite(n_0) && n_0 > 0.0, "n_0 > 0");
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

double double_rayleigh_pdf(double g)
{
    if (!(g >= 0.0))
        throw std::domain_error("double_rayleigh_pdf: g must be >= 0");
    if (g == 0.0)
        return 0.0;
    return g * specfun::bessel_k0(g);
}

double sample_double_rayleigh_gain(RandomStream& rng)
{
    const double a = rayleigh(rng);
    return a * rayleigh(rng);
}

double sample_disk_distance(double radius, RandomStream& rng)
{
    return radius * std::sqrt(rng.uniform());
}

void sample_channel(const SystemParams& params, RandomStream& rng, ChannelDraw& draw)
{
    const auto k = static_cast<std::size_t>(params.k);
    draw.g_d = sample_double_rayleigh_gain(rng);
    draw.g_e = sample_double_rayleigh_gain(rng);
    draw.r_e = sample_disk_distance(params.r_max, rng);
    draw.g_int_d.resize(k);
    draw.r_int_d.resize(k);
    draw.g_int_e.resize(k);
    draw.r_int_e.resize(k);
    for (std::size_t i = 0; i < k; ++i)
    {
        draw.g_int_d[i] = sample_double_rayleigh_gain(rng);
        draw.r_int_d[i] = sample_disk_distance(params.r_int, rng);
        draw.g_int_e[i] = sample_double_rayleigh_gain(rng);
        draw.r_int_e[i] = sample_disk_distance(params.r_int, rng);
    }
}

ChannelDraw sample_channel(const SystemParams& params, RandomStream& rng)
{
    ChannelDraw draw;
    sample_channel(params, rng, draw);
    return draw;
}

double sinr(double signal_power, std::span<const double> interference_powers, double n_0)
{
    if (!(n_0 > 0.0))
        throw std::domain_error("sinr: n_0 must be > 0");
    double denom = n_0;
    for (double p : interference_powers)
        denom += p;
    return signal_power / denom;
}

double received_power(double p_tx, double g, double r, double beta)
{
    if (!(r > 0.0))
        throw std::domain_error("received_power: r must be > 0");
    return p_tx * g * std::pow(r, -beta);
}

double instantaneous_secrecy_capacity(double gamma_d, double gamma_e)
{
    if (gamma_d <= gamma_e)
        return 0.0;
    return std::log2(1.0 + gamma_d) - std::log2(1.0 + gamma_e);
}

LinkSinr link_sinrs(const SystemParams& params, const ChannelDraw& draw)
{
    const double signal_d = received_power(params.p_s, draw.g_d, params.r_d, params.beta);
    const double signal_e = received_power(params.p_s, draw.g_e, draw.r_e, params.beta);
    const double int_d = interference_power(params, draw.g_int_d, draw.r_int_d);
    const double int_e = interference_power(params, draw.g_int_e, draw.r_int_e);
    return {signal_d / (int_d + params.n_0), signal_e / (int_e + params.n_0)};
}

} // namespace secrecy
