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

// secrecy-lab: parameter sweeps, MGF tables and Monte-Carlo validation of the
// average secrecy capacity of a V2V link under interference. Output is CSV.

#include "secrecy/cli.hpp"
#include "secrecy/errors.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace
{

using namespace secrecy;
using namespace secrecy::cli;

struct Options
{
    std::string config;
    std::string out = "-";
    unsigned jobs = 0;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> samples;
    std::optional<double> ps, pk, rd, rmax, rint, beta, n0;
    std::optional<int> k;

    std::string variable;
    std::vector<double> values;
    bool mc = false;

    std::string which;
    std::vector<double> z;
};

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--config", o.config, "JSON config file (flags override its values)");
    cmd->add_option("--out", o.out, "Output CSV path, '-' for stdout");
    cmd->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
    cmd->add_option("--seed", o.seed, "Monte-Carlo seed (falls back to $SECRECY_LAB_SEED)");
    cmd->add_option("--samples", o.samples, "Monte-Carlo sample count");
    cmd->add_option("--ps", o.ps, "Source transmit power P_s [W]");
    cmd->add_option("--pk", o.pk, "Per-interferer transmit power P_K [W]");
    cmd->add_option("--k", o.k, "Number of interferers K");
    cmd->add_option("--rd", o.rd, "S-to-D distance r_D [m]");
    cmd->add_option("--rmax", o.rmax, "Eavesdropper radius r_max [m]");
    cmd->add_option("--rint", o.rint, "Interferer radius R [m]");
    cmd->add_option("--beta", o.beta, "Path-loss exponent (> 2)");
    cmd->add_option("--n0", o.n0, "Noise power N_0 [W]");
}

SystemParams resolve_params(const Options& o, const RunConfig& cfg)
{
    SystemParams p = cfg.params;
    if (o.ps)
        p.p_s = *o.ps;
    if (o.pk)
        p.p_k = *o.pk;
    if (o.k)
        p.k = *o.k;
    if (o.rd)
        p.r_d = *o.rd;
    if (o.rmax)
        p.r_max = *o.rmax;
    if (o.rint)
        p.r_int = *o.rint;
    if (o.beta)
        p.beta = *o.beta;
    if (o.n0)
        p.n_0 = *o.n0;
    return p;
}

std::uint64_t resolve_seed(const Options& o, std::optional<std::uint64_t> from_config)
{
    if (o.seed)
        return *o.seed;
    if (from_config)
        return *from_config;
    if (const char* env = std::getenv("SECRECY_LAB_SEED"))
    {
        try
        {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size())
                return v;
        }
        catch (const std::exception&)
        {
        }
        throw ParameterError("SECRECY_LAB_SEED is not an unsigned integer");
    }
    return 1;
}

int emit(const Options& o, const std::string& text)
{
    if (o.out == "-")
    {
        std::cout << text;
        return exit_ok;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file)
    {
        std::cerr << "error: cannot write " << o.out << '\n';
        return exit_bad_config;
    }
    file << text;
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Average secrecy capacity of a V2V link under co-channel interference and "
                 "double-Rayleigh fading.\nUnits: powers in W, distances in m, capacities in "
                 "bits/s/Hz.\nExit codes: 0 ok, 1 validation failure, 2 bad config, 3 numeric "
                 "non-convergence."};
    app.require_subcommand(1);

    Options o;
    auto* sweep = app.add_subcommand("sweep", "Average capacities over one swept parameter");
    add_common(sweep, o);
    sweep->add_option("--var", o.variable, "Swept variable: k, r_d, p_s, r_max, r_int, n_0, beta");
    sweep->add_option("--values", o.values, "Comma-separated, strictly increasing values")
        ->delimiter(',');
    sweep->add_flag("--mc", o.mc, "Add Monte-Carlo secrecy-capacity columns");

    auto* table = app.add_subcommand("mgf-table", "Tabulate one MGF over z");
    add_common(table, o);
    table->add_option("--which", o.which, "psi, interference, main or eavesdropper");
    table->add_option("--z", o.z, "Comma-separated nonnegative z values")->delimiter(',');

    auto* validate = app.add_subcommand("validate", "Analytic pipeline versus Monte Carlo");
    add_common(validate, o);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return exit_bad_config;
    }

    std::ostringstream out;
    int code = exit_ok;
    try
    {
        const RunConfig cfg = o.config.empty() ? RunConfig{} : load_config(o.config);
        const SystemParams params = resolve_params(o, cfg);
        const unsigned jobs = o.jobs ? o.jobs : cfg.jobs.value_or(0);

        if (*sweep)
        {
            SweepSpec spec;
            if (!o.variable.empty())
                spec.variable = parse_sweep_variable(o.variable);
            else if (cfg.sweep_variable)
                spec.variable = *cfg.sweep_variable;
            else
                throw ParameterError("sweep: no variable given (--var or sweep.variable)");
            spec.values = !o.values.empty() ? o.values : cfg.sweep_values;
            spec.fixed = params;
            spec.mc_check = o.mc || cfg.sweep_mc_check.value_or(false);
            spec.mc_samples = o.samples.value_or(
                cfg.sweep_mc_samples.value_or(cfg.samples.value_or(1000000)));
            spec.seed = resolve_seed(o, cfg.sweep_seed ? cfg.sweep_seed : cfg.seed);
            code = cmd_sweep(spec, out, std::cerr, jobs);
        }
        else if (*table)
        {
            MgfKind which = MgfKind::psi;
            if (!o.which.empty())
                which = parse_mgf_kind(o.which);
            else if (cfg.mgf_which)
                which = *cfg.mgf_which;
            const auto& zs = !o.z.empty() ? o.z : cfg.mgf_z;
            if (zs.empty())
                throw ParameterError("mgf-table: no z values (--z or mgf_table.z)");
            code = cmd_mgf_table(which, zs, params, out, std::cerr);
        }
        else
        {
            const auto n = o.samples.value_or(cfg.samples.value_or(1000000));
            code = cmd_validate(params, n, resolve_seed(o, cfg.seed), out, std::cerr, jobs);
        }
    }
    catch (const ParameterError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_config;
    }

    if (code == exit_ok || code == exit_validation_failure)
    {
        const int written = emit(o, out.str());
        if (written != exit_ok)
            return written;
    }
    return code;
}
