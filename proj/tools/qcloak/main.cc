//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/main.cc
//---------------------------------------------------------------------------//
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "Commands.hh"

namespace
{
unsigned env_threads()
{
    char const* env = std::getenv("QCLOAK_THREADS");
    if (!env || !*env)
        return 0;
    try
    {
        return static_cast<unsigned>(std::stoul(env));
    }
    catch (std::exception const&)
    {
        return 0;
    }
}
}  // namespace

int main(int argc, char** argv)
{
    using namespace qcloak::app;

    CLI::App app{"Layered-sphere matter-wave cloak solver and designer"};
    app.set_version_flag("--version", QCLOAK_VERSION);
    app.require_subcommand(1);

    RunOptions options;
    int resolution = 0;
    std::string plane;
    int threads = -1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", options.config_path, "JSON configuration")
            ->required();
        sub->add_option("--out", options.out_dir, "Output directory")
            ->capture_default_str();
        sub->add_option("--threads", threads,
                        "Worker threads, 0 = auto (env QCLOAK_THREADS)");
    };

    auto* solve = app.add_subcommand("solve", "Scattering cross section report");
    auto* field = app.add_subcommand("field", "Field grid and streamlines");
    auto* design = app.add_subcommand("design", "Two-stage cloak design");
    auto* sweep = app.add_subcommand("sweep", "Hidden-layer robustness sweep");
    for (auto* sub : {solve, field, design, sweep})
        add_common(sub);
    field->add_option("--resolution", resolution, "Samples per side (>= 2)");
    field->add_option("--plane", plane, "Slice plane, e.g. x=0");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    options.command = app.get_subcommands().front()->get_name();
    options.threads = threads >= 0 ? static_cast<unsigned>(threads) : env_threads();
    if (field->count("--resolution"))
        options.resolution = resolution;
    if (field->count("--plane"))
        options.plane = plane;
    return run_command(options);
}
