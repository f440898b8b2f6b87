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

#ifndef SECRECY_CHANNEL_HPP
#define SECRECY_CHANNEL_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace secrecy
{

// System model of the V2V link S -> D with a passive eavesdropper E and K
// co-channel interferers. Powers in watts, distances in meters.
//
// Defaults are the reference scenario: P_s = P_K = 10 W, r_D = 4 m,
// r_max = 10 m, R = 20 m, beta = 2.7, one interferer and unit noise power.
struct SystemParams
{
    double p_s = 10.0;   // source transmit power
    double p_k = 10.0;   // per-interferer transmit power
    int k = 1;           // number of interferers
    double r_d = 4.0;    // S-to-D distance (known, fixed)
    double r_max = 10.0; // radius containing the eavesdropper
    double r_int = 20.0; // radius containing the interferers (R)
    double beta = 2.7;   // path-loss exponent
    double n_0 = 1.0;    // noise power

    // Throws ParameterError naming the first violated invariant.
    void validate() const;
};

// One realization of every random quantity entering gamma_D and gamma_E.
struct ChannelDraw
{
    double g_d = 0.0;
    double g_e = 0.0;
    double r_e = 0.0;
    std::vector<double> g_int_d;
    std::vector<double> r_int_d;
    std::vector<double> g_int_e;
    std::vector<double> r_int_e;
};

// Per-worker random stream. Streams with the same (seed, stream) produce the
// same sequence on every platform; distinct stream ids are independent
// substreams of one seed.
class RandomStream
{
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

    // Uniform variate on (0, 1] with 53 random bits.
    double uniform()
    {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

// Density of the double-Rayleigh power gain, g K0(g).
double double_rayleigh_pdf(double g);

// Product of two independent unit-scale Rayleigh variates; its density is
// g K0(g) with mean pi/2.
double sample_double_rayleigh_gain(RandomStream& rng);

// Distance of a point uniform in a disk: radius * sqrt(U), density 2r/radius^2.
double sample_disk_distance(double radius, RandomStream& rng);

// Fills draw for params, reusing its storage. Interferer distances for D and E
// are drawn independently, each in a disk of radius r_int around the receiver.
void sample_channel(const SystemParams& params, RandomStream& rng, ChannelDraw& draw);
ChannelDraw sample_channel(const SystemParams& params, RandomStream& rng);

double sinr(double signal_power, std::span<const double> interference_powers, double n_0);

// p_tx * g * r^-beta
double received_power(double p_tx, double g, double r, double beta);

// max(log2(1 + gamma_d) - log2(1 + gamma_e), 0) in bits/s/Hz.
double instantaneous_secrecy_capacity(double gamma_d, double gamma_e);

struct LinkSinr
{
    double gamma_d;
    double gamma_e;
};

// Instantaneous SINRs at D and E for one draw. No minimum distance is
// enforced, so r^-beta (and the interference power) is heavy tailed; its mean
// is infinite for beta >= 2 and only bounded functionals are meaningful.
LinkSinr link_sinrs(const SystemParams& params, const ChannelDraw& draw);

} // namespace secrecy

#endif
