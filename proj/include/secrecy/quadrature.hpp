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

#ifndef SECRECY_QUADRATURE_HPP
#define SECRECY_QUADRATURE_HPP

#include "secrecy/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace secrecy::quadrature
{

struct QuadResult
{
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
};

namespace detail
{

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment
{
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gauss_kronrod_15(F& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kronrod_weights[7];
    double gauss = fc * gauss_weights[3];
    for (std::size_t j = 0; j < 7; ++j)
    {
        const double dx = half * kronrod_nodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kronrod_weights[j] * pair;
        if (j % 2 == 1)
            gauss += gauss_weights[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b]: the
// segment with the largest error estimate is bisected until the summed error
// is below max(abs_tol, rel_tol * |I|). Throws ConvergenceError when
// max_subdivisions is reached first. f must be finite on the open interval.
template <class F>
QuadResult integrate(F&& f, double a, double b, double rel_tol, double abs_tol,
                     int max_subdivisions = 2000)
{
    QuadResult result;
    if (a == b)
        return result;
    std::priority_queue<detail::Segment> heap;
    auto first = detail::gauss_kronrod_15(f, a, b);
    result.evaluations = 15;
    double total = first.value;
    double error = first.error;
    heap.push(first);
    for (int split = 1; split < max_subdivisions; ++split)
    {
        if (error <= std::max(abs_tol, rel_tol * std::abs(total)))
            break;
        const auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const auto left = detail::gauss_kronrod_15(f, worst.a, mid);
        const auto right = detail::gauss_kronrod_15(f, mid, worst.b);
        result.evaluations += 30;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to drop the drift of the running updates.
    total = 0.0;
    error = 0.0;
    while (!heap.empty())
    {
        total += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    result.value = total;
    result.abs_error = error;
    if (!std::isfinite(total) || error > std::max(abs_tol, rel_tol * std::abs(total)))
        throw ConvergenceError("adaptive quadrature on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "] stopped at error " +
                               std::to_string(error) + " (value " + std::to_string(total) + ")");
    return result;
}

} // namespace secrecy::quadrature

#endif
