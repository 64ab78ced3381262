//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/Commands.hh
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <string>

namespace qcloak::app
{
//---------------------------------------------------------------------------//
enum ExitCode : int
{
    exit_ok = 0,
    exit_internal = 1,
    exit_usage = 2,
    exit_parse_error = 3,
    exit_config_invalid = 4,
    exit_solver_degenerate = 5,
    exit_design_infeasible = 6,
};

struct RunOptions
{
    std::string command;
    std::string config_path;
    std::string out_dir{"."};
    std::optional<int> resolution;
    std::optional<std::string> plane;
    unsigned threads{0};
};

// Run one subcommand, mapping library errors to exit codes
int run_command(RunOptions const& options);

//---------------------------------------------------------------------------//
}  // namespace qcloak::app
