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

#include "secrecy/cli.hpp"

#include "secrecy/errors.hpp"
#include "secrecy/mgf.hpp"
#include "secrecy/montecarlo.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>
#include <type_traits>

namespace secrecy::cli
{

namespace
{

using nlohmann::json;

constexpr std::pair<std::string_view, SweepVariable> sweep_names[] = {
    {"k", SweepVariable::k},         {"r_d", SweepVariable::r_d},
    {"p_s", SweepVariable::p_s},     {"r_max", SweepVariable::r_max},
    {"r_int", SweepVariable::r_int}, {"n_0", SweepVariable::n_0},
    {"beta", SweepVariable::beta},
};

constexpr std::pair<std::string_view, MgfKind> mgf_names[] = {
    {"psi", MgfKind::psi},
    {"interference", MgfKind::interference},
    {"main", MgfKind::main},
    {"eavesdropper", MgfKind::eavesdropper},
};

template <class T>
T get_as(const json& j, std::string_view key)
{
    try
    {
        return j.get<T>();
    }
    catch (const json::exception&)
    {
        throw ParameterError("config: wrong type for \"" + std::string(key) + "\"");
    }
}

double get_number(const json& j, std::string_view key)
{
    if (!j.is_number())
        throw ParameterError("config: \"" + std::string(key) + "\" must be a number");
    return j.get<double>();
}

std::vector<double> get_numbers(const json& j, std::string_view key)
{
    if (!j.is_array())
        throw ParameterError("config: \"" + std::string(key) + "\" must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : j)
        out.push_back(get_number(v, key));
    return out;
}

// Integer-valued keys reject floats and, for unsigned targets, negatives;
// nlohmann's get<> would silently convert both.
template <class T>
T get_integer(const json& j, std::string_view key)
{
    const bool ok = std::is_unsigned_v<T> ? j.is_number_unsigned() : j.is_number_integer();
    if (!ok)
        throw ParameterError("config: \"" + std::string(key) + "\" must be " +
                             (std::is_unsigned_v<T> ? "a nonnegative integer" : "an integer"));
    return j.get<T>();
}

int get_count(const json& j, std::string_view key)
{
    if (!j.is_number_integer())
        throw ParameterError("config: \"" + std::string(key) + "\" must be an integer");
    return j.get<int>();
}

void apply_sweep_value(SystemParams& p, SweepVariable v, double value)
{
    switch (v)
    {
    case SweepVariable::k:
        p.k = static_cast<int>(value);
        break;
    case SweepVariable::r_d:
        p.r_d = value;
        break;
    case SweepVariable::p_s:
        p.p_s = value;
        break;
    case SweepVariable::r_max:
        p.r_max = value;
        break;
    case SweepVariable::r_int:
        p.r_int = value;
        break;
    case SweepVariable::n_0:
        p.n_0 = value;
        break;
    case SweepVariable::beta:
        p.beta = value;
        break;
    }
}

std::string describe(const SystemParams& p)
{
    std::ostringstream s;
    s << "p_s=" << p.p_s << " p_k=" << p.p_k << " k=" << p.k << " r_d=" << p.r_d
      << " r_max=" << p.r_max << " r_int=" << p.r_int << " beta=" << p.beta << " n_0=" << p.n_0;
    return s.str();
}

unsigned resolve_jobs(unsigned jobs)
{
    return jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
}

// Runs task(i) for i in [0, count) on up to `jobs` threads.
template <class Task>
void parallel_for(std::size_t count, unsigned jobs, Task task)
{
    jobs = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), count));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++)
            task(i);
    };
    if (jobs <= 1)
    {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back(worker);
}

} // namespace

SweepVariable parse_sweep_variable(std::string_view name)
{
    for (auto [n, v] : sweep_names)
        if (n == name)
            return v;
    throw ParameterError("unknown sweep variable \"" + std::string(name) +
                         "\" (expected k, r_d, p_s, r_max, r_int, n_0 or beta)");
}

std::string_view to_string(SweepVariable v)
{
    for (auto [n, var] : sweep_names)
        if (var == v)
            return n;
    return "?";
}

MgfKind parse_mgf_kind(std::string_view name)
{
    for (auto [n, v] : mgf_names)
        if (n == name)
            return v;
    throw ParameterError("unknown MGF \"" + std::string(name) +
                         "\" (expected psi, interference, main or eavesdropper)");
}

void SweepSpec::validate() const
{
    if (values.empty())
        throw ParameterError("sweep: values must be non-empty");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i] > values[i - 1]))
            throw ParameterError("sweep: values must be strictly increasing");
    if (variable == SweepVariable::k)
        for (double v : values)
            if (v < 0.0 || std::floor(v) != v || v > std::numeric_limits<int>::max())
                throw ParameterError("sweep: k values must be nonnegative integers");
    if (mc_check && mc_samples < 1)
        throw ParameterError("sweep: mc_samples must be >= 1");
    for (double v : values)
        point(v).validate();
}

SystemParams SweepSpec::point(double value) const
{
    SystemParams p = fixed;
    apply_sweep_value(p, variable, value);
    return p;
}

RunConfig parse_config(std::string_view json_text)
{
    json root;
    try
    {
        root = json::parse(json_text);
    }
    catch (const json::parse_error& e)
    {
        throw ParameterError(std::string("config: malformed JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ParameterError("config: top level must be a JSON object");

    RunConfig cfg;
    for (const auto& [key, value] : root.items())
    {
        if (key == "p_s")
            cfg.params.p_s = get_number(value, key);
        else if (key == "p_k")
            cfg.params.p_k = get_number(value, key);
        else if (key == "k")
            cfg.params.k = get_count(value, key);
        else if (key == "r_d")
            cfg.params.r_d = get_number(value, key);
        else if (key == "r_max")
            cfg.params.r_max = get_number(value, key);
        else if (key == "r_int")
            cfg.params.r_int = get_number(value, key);
        else if (key == "beta")
            cfg.params.beta = get_number(value, key);
        else if (key == "n_0")
            cfg.params.n_0 = get_number(value, key);
        else if (key == "seed")
            cfg.seed = get_integer<std::uint64_t>(value, key);
        else if (key == "samples")
            cfg.samples = get_integer<std::int64_t>(value, key);
        else if (key == "jobs")
            cfg.jobs = get_integer<unsigned>(value, key);
        else if (key == "sweep")
        {
            if (!value.is_object())
                throw ParameterError("config: \"sweep\" must be an object");
            for (const auto& [sk, sv] : value.items())
            {
                if (sk == "variable")
                    cfg.sweep_variable = parse_sweep_variable(get_as<std::string>(sv, sk));
                else if (sk == "values")
                    cfg.sweep_values = get_numbers(sv, sk);
                else if (sk == "mc_check")
                    cfg.sweep_mc_check = get_as<bool>(sv, sk);
                else if (sk == "mc_samples")
                    cfg.sweep_mc_samples = get_integer<std::int64_t>(sv, sk);
                else if (sk == "seed")
                    cfg.sweep_seed = get_integer<std::uint64_t>(sv, sk);
                else
                    throw ParameterError("config: unknown key \"sweep." + sk + "\"");
            }
        }
        else if (key == "mgf_table")
        {
            if (!value.is_object())
                throw ParameterError("config: \"mgf_table\" must be an object");
            for (const auto& [mk, mv] : value.items())
            {
                if (mk == "which")
                    cfg.mgf_which = parse_mgf_kind(get_as<std::string>(mv, mk));
                else if (mk == "z")
                    cfg.mgf_z = get_numbers(mv, mk);
                else
                    throw ParameterError("config: unknown key \"mgf_table." + mk + "\"");
            }
        }
        else
            throw ParameterError("config: unknown key \"" + key + "\"");
    }
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParameterError("config: cannot open " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err, unsigned jobs,
              const QuadratureConfig& quad)
{
    try
    {
        spec.validate();
        quad.validate();
    }
    catch (const ParameterError& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_bad_config;
    }

    struct Row
    {
        CapacityResult analytic;
        std::optional<CapacityEstimates> mc;
        std::string failure;
    };
    std::vector<Row> rows(spec.values.size());
    parallel_for(rows.size(), jobs, [&](std::size_t i) {
        const SystemParams p = spec.point(spec.values[i]);
        try
        {
            rows[i].analytic = average_secrecy_capacity(p, quad);
        }
        catch (const ConvergenceError& e)
        {
            rows[i].failure = "no convergence at " + describe(p) + ": " + e.what();
            return;
        }
        if (spec.mc_check)
            rows[i].mc = estimate_capacities(p, spec.mc_samples, spec.seed, 1);
    });

    for (const auto& r : rows)
        if (!r.failure.empty())
        {
            err << "error: " << r.failure << '\n';
            return exit_nonconvergence;
        }

    out << units_comment << '\n';
    out << "variable,value,c_d,c_e,c_s,mc_c_s_diff,mc_c_s_max,mc_stderr\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        const auto& a = rows[i].analytic;
        out << to_string(spec.variable) << ',' << format_number(spec.values[i]) << ','
            << format_number(a.c_d) << ',' << format_number(a.c_e) << ',' << format_number(a.c_s)
            << ',';
        if (rows[i].mc)
            out << format_number(rows[i].mc->c_s_diff.mean) << ','
                << format_number(rows[i].mc->c_s_max.mean) << ','
                << format_number(rows[i].mc->c_s_diff.std_error);
        else
            out << ",,";
        out << '\n';
    }
    return exit_ok;
}

int cmd_mgf_table(MgfKind which, std::span<const double> z_values, const SystemParams& params,
                  std::ostream& out, std::ostream& err)
{
    try
    {
        params.validate();
        for (double z : z_values)
            if (!(z >= 0.0))
                throw ParameterError("mgf-table: z values must be >= 0");
    }
    catch (const ParameterError& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_bad_config;
    }

    std::vector<MgfValue> values;
    for (double z : z_values)
    {
        try
        {
            switch (which)
            {
            case MgfKind::psi:
                values.push_back(mgf_psi(z, params.r_int, params.beta));
                break;
            case MgfKind::interference:
                values.push_back(mgf_interference(z, params, params.r_int));
                break;
            case MgfKind::main:
                values.push_back(mgf_main_link(z, params.p_s, params.r_d, params.beta));
                break;
            case MgfKind::eavesdropper:
                values.push_back(mgf_eav_link(z, params.p_s, params.r_max, params.beta));
                break;
            }
        }
        catch (const ConvergenceError& e)
        {
            err << "error: no convergence at z=" << format_number(z) << ", " << describe(params)
                << ": " << e.what() << '\n';
            return exit_nonconvergence;
        }
    }

    out << units_comment << '\n';
    out << "z,value,method\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        out << format_number(z_values[i]) << ',' << format_number(values[i].value) << ','
            << to_string(values[i].method) << '\n';
    return exit_ok;
}

int cmd_validate(const SystemParams& params, std::int64_t n, std::uint64_t seed,
                 std::ostream& out, std::ostream& err, unsigned jobs)
{
    try
    {
        params.validate();
        if (n < 1000)
            throw ParameterError("validate: at least 1000 samples required");
    }
    catch (const ParameterError& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_bad_config;
    }

    struct Check
    {
        std::string quantity;
        double analytic;
        McEstimate mc;
    };
    std::vector<Check> checks;
    const std::vector<double> zs = {0.01, 0.1, 1.0, 10.0, 100.0};

    CapacityResult analytic;
    try
    {
        struct Family
        {
            const char* name;
            DrawWeight weight;
            std::function<MgfValue(double)> exact;
        };
        const Family families[] = {
            {"mgf_interference", interference_weight(params),
             [&](double z) { return mgf_interference(z, params, params.r_int); }},
            {"mgf_main", main_link_weight(params),
             [&](double z) { return mgf_main_link(z, params.p_s, params.r_d, params.beta); }},
            {"mgf_eavesdropper", eav_link_weight(params),
             [&](double z) { return mgf_eav_link(z, params.p_s, params.r_max, params.beta); }},
        };
        for (const auto& f : families)
        {
            const auto mc = estimate_mgf_grid(f.weight, zs, params, n, seed, jobs);
            for (std::size_t i = 0; i < zs.size(); ++i)
                checks.push_back({std::string(f.name) + "@z=" + format_number(zs[i]),
                                  f.exact(zs[i]).value, mc[i]});
        }
        analytic = average_secrecy_capacity(params);
    }
    catch (const ConvergenceError& e)
    {
        err << "error: no convergence at " << describe(params) << ": " << e.what() << '\n';
        return exit_nonconvergence;
    }

    const auto mc = estimate_capacities(params, n, seed, jobs);
    checks.push_back({"c_d", analytic.c_d, mc.c_d});
    checks.push_back({"c_e", analytic.c_e, mc.c_e});
    checks.push_back({"c_s_diff", analytic.c_s, mc.c_s_diff});

    out << units_comment << '\n';
    out << "quantity,analytic,mc_mean,mc_stderr,sigma_distance\n";
    bool ok = true;
    for (const auto& c : checks)
    {
        const double diff = c.analytic - c.mc.mean;
        double sigma = 0.0;
        if (c.mc.std_error > 0.0)
            sigma = diff / c.mc.std_error;
        else if (diff != 0.0)
            sigma = std::copysign(std::numeric_limits<double>::infinity(), diff);
        ok = ok && std::abs(sigma) <= validate_sigma_limit;
        out << c.quantity << ',' << format_number(c.analytic) << ',' << format_number(c.mc.mean)
            << ',' << format_number(c.mc.std_error) << ',' << format_number(sigma) << '\n';
    }
    // Reported for comparison only; the analytic pipeline has no counterpart.
    out << "c_s_max,," << format_number(mc.c_s_max.mean) << ','
        << format_number(mc.c_s_max.std_error) << ",\n";

    if (!ok)
    {
        err << "validation failed: at least one quantity is more than "
            << format_number(validate_sigma_limit) << " standard errors from the oracle\n";
        return exit_validation_failure;
    }
    return exit_ok;
}

} // namespace secrecy::cli
