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

#ifndef SECRECY_CLI_HPP
#define SECRECY_CLI_HPP

#include "secrecy/capacity.hpp"
#include "secrecy/channel.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace secrecy::cli
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_validation_failure = 1,
    exit_bad_config = 2,
    exit_nonconvergence = 3,
};

enum class SweepVariable
{
    k,
    r_d,
    p_s,
    r_max,
    r_int,
    n_0,
    beta,
};

enum class MgfKind
{
    psi,
    interference,
    main,
    eavesdropper,
};

// Parsers throw ParameterError on unknown names.
SweepVariable parse_sweep_variable(std::string_view name);
std::string_view to_string(SweepVariable v);
MgfKind parse_mgf_kind(std::string_view name);

struct SweepSpec
{
    SweepVariable variable = SweepVariable::k;
    std::vector<double> values;
    SystemParams fixed;
    bool mc_check = false;
    std::int64_t mc_samples = 1000000;
    std::uint64_t seed = 1;

    // values non-empty and strictly increasing, k values nonnegative integers,
    // and every resulting parameter point valid.
    void validate() const;
    SystemParams point(double value) const;
};

// Everything a JSON config file may carry. Keys mirror SystemParams field
// names at top level plus optional "sweep" and "mgf_table" blocks.
struct RunConfig
{
    SystemParams params;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> samples;
    std::optional<unsigned> jobs;

    std::optional<SweepVariable> sweep_variable;
    std::vector<double> sweep_values;
    std::optional<bool> sweep_mc_check;
    std::optional<std::int64_t> sweep_mc_samples;
    std::optional<std::uint64_t> sweep_seed;

    std::optional<MgfKind> mgf_which;
    std::vector<double> mgf_z;
};

// Throws ParameterError for malformed JSON, unknown keys and wrong types.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::string& path);

// "%.17g"
std::string format_number(double v);

// Comment line opening every CSV stream.
inline constexpr std::string_view units_comment =
    "# units: powers in W, distances in m, capacities in bits/s/Hz";

// Each command writes CSV to out and diagnostics to err, and returns an
// ExitCode. jobs = 0 means one worker per hardware thread.
int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err, unsigned jobs = 0,
              const QuadratureConfig& quad = {});

int cmd_mgf_table(MgfKind which, std::span<const double> z_values, const SystemParams& params,
                  std::ostream& out, std::ostream& err);

// Analytic pipeline against the Monte-Carlo oracle; exit_validation_failure
// when any |sigma_distance| exceeds 4.
int cmd_validate(const SystemParams& params, std::int64_t n, std::uint64_t seed,
                 std::ostream& out, std::ostream& err, unsigned jobs = 0);

inline constexpr double validate_sigma_limit = 4.0;

} // namespace secrecy::cli

#endif
