//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/Commands.cc
//---------------------------------------------------------------------------//
#include "Commands.hh"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <fmt/format.h>

#include "qcloak/Error.hh"
#include "qcloak/fields/Streamlines.hh"
#include "qcloak/model/Config.hh"
#include "qcloak/solver/CrossSection.hh"
#include "qcloak/util/Hash.hh"
#include "ToolConfig.hh"

namespace qcloak::app
{
namespace
{
namespace fs = std::filesystem;

//! Collects written files for the manifest
struct Context
{
    RunOptions const& options;
    ParsedConfig config;
    std::string hash;
    std::vector<std::string> outputs;

    fs::path path(std::string const& name) const
    {
        return fs::path(options.out_dir) / name;
    }

    std::ofstream open(std::string const& name)
    {
        std::ofstream os(this->path(name), std::ios::binary);
        if (!os)
            throw std::runtime_error("cannot write " + this->path(name).string());
        outputs.push_back(name);
        return os;
    }

    void write_json(std::string const& name, nlohmann::json doc)
    {
        doc["config_hash"] = hash;
        this->open(name) << doc.dump(2) << '\n';
    }
};

//---------------------------------------------------------------------------//
int cmd_solve(Context& ctx)
{
    auto const cs = cross_section(ctx.config.stack);

    nlohmann::json doc;
    doc["sigma_nm2"] = cs.sigma;
    doc["sigma_normalized"] = cs.sigma_normalized;
    doc["l_max_used"] = cs.l_max_used;
    doc["unitarity_residual"] = cs.unitarity_residual();
    doc["optical_theorem_residual"] = cs.optical_theorem_residual();
    auto& terms = doc["partial_waves"] = nlohmann::json::array();

    auto csv = ctx.open("cross_section.csv");
    csv << "# config_hash=" << ctx.hash << '\n'
        << "l,re_a,im_a,abs_a,sigma_l_nm2\n";
    fmt::print("sigma            = {:.6e} nm^2\n", cs.sigma);
    fmt::print("sigma / (pi a^2) = {:.6e}\n", cs.sigma_normalized);
    fmt::print("{:>3} {:>14} {:>14}\n", "l", "|a_l|", "sigma_l nm^2");
    for (std::size_t l = 0; l < cs.waves.size(); ++l)
    {
        auto const a = cs.waves[l].a_scat;
        double const sl = cs.per_l_terms[l].sigma_nm2;
        terms.push_back({{"l", l},
                         {"re_a", a.real()},
                         {"im_a", a.imag()},
                         {"abs_a", std::abs(a)},
                         {"sigma_l_nm2", sl}});
        csv << l << ',' << format_double(a.real()) << ','
            << format_double(a.imag()) << ',' << format_double(std::abs(a))
            << ',' << format_double(sl) << '\n';
        fmt::print("{:>3} {:>14.6e} {:>14.6e}\n", l, std::abs(a), sl);
    }
    fmt::print("unitarity residual       = {:.3e}\n", cs.unitarity_residual());
    fmt::print("optical theorem residual = {:.3e}\n",
               cs.optical_theorem_residual());
    ctx.write_json("cross_section.json", std::move(doc));
    return exit_ok;
}

int cmd_field(Context& ctx)
{
    auto const& stack = ctx.config.stack;
    auto section = field_section(ctx.config.document);
    if (ctx.options.plane)
    {
        double const extent = section.plane.extent_nm;
        section.plane = PlaneSpec::parse(*ctx.options.plane);
        section.plane.extent_nm = extent;
    }
    if (ctx.options.resolution)
        section.resolution = *ctx.options.resolution;
    if (section.resolution < 2)
        throw UsageError("resolution must be at least 2");

    double const extent = section.plane.extent_nm > 0
                              ? section.plane.extent_nm
                              : 3 * stack.particle_radius();
    auto const cs = cross_section(stack);
    int const lmax = field_order(stack, extent * std::sqrt(0.5) + std::fabs(section.plane.offset_nm),
                                 cs.l_max_used);
    FieldEvaluator const field(solve_partial_waves(stack, lmax));
    auto const grid = export_field_grid(
        field, section.plane, section.resolution, ctx.options.threads);

    {
        auto os = ctx.open("field.csv");
        write_field_csv(grid, os, ctx.hash);
    }
    ctx.write_json("field.json", field_grid_to_json(grid));

    StreamlineOptions opts;
    opts.threads = ctx.options.threads;
    auto const lines = trace_streamlines(
        grid, upstream_seeds(grid, section.streamlines), opts);
    ctx.write_json("streamlines.json", streamlines_to_json(lines, grid));

    double const inner = stack.layers.back().outer_radius_nm;
    double const grid_max = max_probability_inside(grid, inner);
    double const half = std::norm(field.psi(inner / 2, 0));
    double const centre = std::norm(field.psi(0, 0));
    fmt::print("plane {} extent {} nm, {}x{} samples\n",
               grid.plane.to_string(), grid.extent_nm, grid.resolution,
               grid.resolution);
    fmt::print("max |psi|^2 for r < {} nm (grid) = {:.6e}\n", inner, grid_max);
    fmt::print("|psi|^2 at r = {} nm (z axis) = {:.6e}\n", inner / 2, half);
    fmt::print("|psi|^2 at r = 0 = {:.6e}\n", centre);
    fmt::print("{} streamlines traced\n", lines.size());
    return exit_ok;
}

int cmd_design(Context& ctx)
{
    auto request = design_request(ctx.config.stack, ctx.config.document);
    request.threads = ctx.options.threads;
    request.provenance = ctx.hash;
    auto const outcome = design_cloak(request);

    ctx.write_json("design.json", design_outcome_to_json(outcome));
    {
        auto os = ctx.open("shell_grid.csv");
        write_sweep_csv(outcome.shell_grid, os);
    }
    ctx.write_json("shell_grid.json", sweep_to_json(outcome.shell_grid));

    fmt::print("{} of {} shell cells feasible, {} core searches\n",
               outcome.shell_grid.count_feasible(),
               outcome.shell_grid.cells.size(), outcome.attempts.size());
    if (!outcome.design)
    {
        fmt::print("no design found; most frequent failure: {}\n",
                   outcome.dominant_reason().empty() ? "none"
                                                     : outcome.dominant_reason());
        for (auto const& [reason, count] : outcome.reason_histogram)
            fmt::print("  {:<32} {}\n", reason, count);
        return exit_design_infeasible;
    }
    auto const& d = *outcome.design;
    fmt::print("shell m = {:.6g} m_e, V = {:.6g} eV\n", d.shell.mass_me,
               d.shell.potential_eV);
    fmt::print("core  m = {:.6g} m_e, V = {:.6g} eV\n", d.core.mass_me,
               d.core.potential_eV);
    fmt::print("max(|a_0|,|a_1|) = {:.3e}, F = {:.4f}, r_n = {:.4f} nm, "
               "sigma/(pi a^2) = {:.3e}\n",
               d.objective, d.flux_fraction, d.nodal_radius.value_or(0),
               d.sigma_normalized);
    return exit_ok;
}

int cmd_sweep(Context& ctx)
{
    auto input = sweep_input(ctx.config.stack, ctx.config.document);
    input.threads = ctx.options.threads;
    input.provenance = ctx.hash;
    auto const grid = robustness_sweep(input);
    {
        auto os = ctx.open("sweep.csv");
        write_sweep_csv(grid, os);
    }
    ctx.write_json("sweep.json", sweep_to_json(grid));

    std::size_t failed = 0;
    for (auto const& c : grid.cells)
        failed += c.error.empty() ? 0 : 1;
    fmt::print("{} cells, {} failed, relative spread of sigma/(pi a^2) = {:.3e}\n",
               grid.cells.size(), failed, relative_spread(grid));
    return exit_ok;
}

void write_manifest(Context& ctx, double wall_seconds)
{
    nlohmann::json doc{
        {"command", ctx.options.command},
        {"config_path", ctx.options.config_path},
        {"output_directory", ctx.options.out_dir},
        {"config_hash", ctx.hash},
        {"tool_version", QCLOAK_VERSION},
        {"wall_time_s", wall_seconds},
        {"outputs", ctx.outputs},
    };
    std::ofstream(ctx.path("manifest.json"), std::ios::binary)
        << doc.dump(2) << '\n';
}

int dispatch(Context& ctx)
{
    auto const& cmd = ctx.options.command;
    if (cmd == "solve")
        return cmd_solve(ctx);
    if (cmd == "field")
        return cmd_field(ctx);
    if (cmd == "design")
        return cmd_design(ctx);
    if (cmd == "sweep")
        return cmd_sweep(ctx);
    throw UsageError("unknown command '" + cmd + "'");
}
}  // namespace

//---------------------------------------------------------------------------//
int run_command(RunOptions const& options)
{
    auto const start = std::chrono::steady_clock::now();
    try
    {
        auto config = load_config(options.config_path);
        if (auto const violations = validate(config.stack); !violations.empty())
        {
            std::cerr << "invalid configuration:\n";
            for (auto const& v : violations)
                std::cerr << "  " << v.field << ": " << v.rule << '\n';
            return exit_config_invalid;
        }
        fs::create_directories(options.out_dir);
        Context ctx{options, std::move(config), {}, {}};
        ctx.hash = hash_hex(ctx.config.echo());

        int const code = dispatch(ctx);
        write_manifest(
            ctx,
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count());
        return code;
    }
    catch (ConfigError const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return e.byte_offset() >= 0 ? exit_parse_error : exit_config_invalid;
    }
    catch (UsageError const& e)
    {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (DomainError const& e)
    {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (Error const& e)
    {
        std::cerr << "solver error: " << e.what() << '\n';
        return exit_solver_degenerate;
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_internal;
    }
}

//---------------------------------------------------------------------------//
}  // namespace qcloak::app
