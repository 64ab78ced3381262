//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file designer/Robustness.cc
//---------------------------------------------------------------------------//
#include "qcloak/designer/Robustness.hh"

#include <limits>

#include "qcloak/Error.hh"
#include "qcloak/solver/CrossSection.hh"
#include "qcloak/util/Parallel.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
SweepGrid robustness_sweep(RobustnessInput const& input)
{
    if (input.stack.layers.size() < 2)
        throw DomainError("robustness sweep needs a hidden inner layer");
    if (input.hidden_mass.values.empty() || input.hidden_potential.values.empty())
        throw DomainError("robustness sweep grid is empty");

    SweepGrid grid;
    grid.axes = {input.hidden_mass, input.hidden_potential};
    grid.objective_name = "sigma_normalized";
    grid.extra_names = {"sigma_nm2", "l_max_used"};
    grid.provenance = input.provenance;
    std::size_t const n1 = grid.axes[1].size();
    grid.cells.resize(grid.axes[0].size() * n1);

    parallel_for(grid.cells.size(), input.threads, [&](std::size_t i) {
        auto& cell = grid.cells[i];
        LayerStack stack = input.stack;
        stack.layers.back().medium
            = Medium{grid.axes[0].values[i / n1], grid.axes[1].values[i % n1]};
        cell.params = {stack.layers.back().medium.mass_me,
                       stack.layers.back().medium.potential_eV};
        try
        {
            require_valid(stack);
            auto const cs = cross_section(stack);
            cell.objective = cs.sigma_normalized;
            cell.extras = {cs.sigma, static_cast<double>(cs.l_max_used)};
            cell.feasible = true;
        }
        catch (std::exception const& e)
        {
            constexpr double nan = std::numeric_limits<double>::quiet_NaN();
            cell.objective = nan;
            cell.extras = {nan, nan};
            cell.error = e.what();
        }
    });
    return grid;
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
