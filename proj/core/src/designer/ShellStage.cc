//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file designer/ShellStage.cc
//---------------------------------------------------------------------------//
#include "qcloak/designer/ShellStage.hh"

#include <cmath>
#include <limits>

#include "qcloak/Error.hh"
#include "qcloak/fields/FluxIntegrals.hh"
#include "qcloak/solver/CrossSection.hh"
#include "qcloak/util/Parallel.hh"

namespace qcloak
{
namespace
{
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

//! Field of the approximate shell solution with no scattered wave
ScatteringSolution approximate_solution(LayerStack const& stack)
{
    ScatteringSolution result;
    result.stack = stack;
    result.k = region_wavenumbers(stack);
    int const lmax = field_order(stack, stack.particle_radius(), 4);
    for (int l = 0; l <= lmax; ++l)
    {
        auto const shell = shell_coefficients_approx(l, stack);
        PartialWaveSolution wave;
        wave.l = l;
        wave.layer_coeffs = {{{shell.b, 0}, {shell.c, 0}}, {{}, {}}};
        result.waves.push_back(std::move(wave));
    }
    return result;
}
}  // namespace

//---------------------------------------------------------------------------//
void DesignTargets::validate() const
{
    if (!(epsilon > 0 && epsilon <= 0.2))
        throw DomainError("flux loss epsilon must lie in (0, 0.2]");
    if (!(flux_tolerance > 0) || !(shell_flux_tolerance > 0)
        || !(scattering_tolerance > 0)
        || !(common_node_fraction > 0))
        throw DomainError("design tolerances must be positive");
    if (shell_channels < 2)
        throw DomainError("at least two shell channels are needed");
}

LayerStack
with_media(LayerStack const& geometry, Medium const& shell, Medium const& core)
{
    if (geometry.layers.size() != 2)
        throw DomainError("designer works on two-layer particles");
    LayerStack stack = geometry;
    stack.layers[0].medium = shell;
    stack.layers[1].medium = core;
    return stack;
}

ShellCellReport
evaluate_shell_cell(LayerStack const& stack, DesignTargets const& targets)
{
    if (stack.layers.size() != 2)
        throw DomainError("designer works on two-layer particles");
    require_valid(stack);

    ShellCellReport report;
    if (!(stack.layers[0].medium.potential_eV < 0))
        report.reasons.emplace_back(reason::potential_sign);

    std::vector<ShellCoefficients> shells;
    for (int l = 0; l < targets.shell_channels; ++l)
        shells.push_back(shell_coefficients_approx(l, stack));
    report.nodal
        = find_nodal_point(stack, shells, targets.common_node_fraction);
    double const core_radius = stack.layers[1].outer_radius_nm;
    if (!report.nodal.common_nodal_radius)
        report.reasons.emplace_back(reason::no_common_node);
    else if (!(*report.nodal.common_nodal_radius < core_radius))
        report.reasons.emplace_back(reason::node_outside_core);

    FieldEvaluator const field(approximate_solution(stack));
    report.flux_fraction = flux_through_shell_annulus(field, 1e-7);
    if (!(std::fabs(report.flux_fraction - (1 - targets.epsilon))
          <= targets.shell_flux_tolerance))
        report.reasons.emplace_back(reason::flux_out_of_band);

    report.feasible = report.reasons.empty();
    return report;
}

//---------------------------------------------------------------------------//
SweepGrid feasible_shell_set(ShellStageInput const& input)
{
    input.targets.validate();
    if (input.shell_mass.values.empty() || input.shell_potential.values.empty())
        throw DomainError("shell sweep grid is empty");
    if (input.geometry.layers.size() != 2)
        throw DomainError("designer works on two-layer particles");

    SweepGrid grid;
    grid.axes = {input.shell_mass, input.shell_potential};
    grid.objective_name = "flux_mismatch";
    grid.extra_names = {"nodal_radius_nm", "flux_fraction"};
    grid.provenance = input.provenance;
    std::size_t const n1 = grid.axes[1].size();
    grid.cells.resize(grid.axes[0].size() * n1);

    Medium const core = input.geometry.layers[1].medium;
    parallel_for(grid.cells.size(), input.threads, [&](std::size_t i) {
        auto& cell = grid.cells[i];
        Medium const shell{grid.axes[0].values[i / n1],
                           grid.axes[1].values[i % n1]};
        cell.params = {shell.mass_me, shell.potential_eV};
        cell.extras = {nan, nan};
        try
        {
            auto const report = evaluate_shell_cell(
                with_media(input.geometry, shell, core), input.targets);
            cell.extras = {report.nodal.common_nodal_radius.value_or(nan),
                           report.flux_fraction};
            cell.objective = std::fabs(report.flux_fraction
                                       - (1 - input.targets.epsilon));
            cell.feasible = report.feasible;
            cell.reasons = report.reasons;
        }
        catch (std::exception const& e)
        {
            cell.objective = nan;
            cell.error = e.what();
            cell.reasons = {reason::solver_error};
        }
    });
    return grid;
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
