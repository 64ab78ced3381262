//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/designer/ShellStage.hh
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <vector>

#include "qcloak/fields/Nodal.hh"
#include "qcloak/model/LayerStack.hh"
#include "SweepGrid.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
//! Conditions a cloak design must meet.
struct DesignTargets
{
    double epsilon{0.05};               //!< tolerated flux loss, F = 1 - eps
    double flux_tolerance{0.01};        //!< allowed |F - (1 - eps)|
    double shell_flux_tolerance{0.01};  //!< same, for the shell-only estimate
    double scattering_tolerance{1e-4};  //!< bound on |a_0|, |a_1|
    double common_node_fraction{default_common_node_tolerance};
    int shell_channels{3};  //!< channels checked for a common node

    void validate() const;
};

// Reason codes attached to infeasible cells and design attempts
namespace reason
{
inline constexpr char const potential_sign[] = "shell_potential_not_negative";
inline constexpr char const no_common_node[] = "no_common_nodal_point";
inline constexpr char const node_outside_core[] = "nodal_point_outside_core";
inline constexpr char const flux_out_of_band[] = "flux_fraction_out_of_band";
inline constexpr char const scattering[] = "scattering_not_cancelled";
inline constexpr char const solver_error[] = "solver_error";
}  // namespace reason

//! Shell-only diagnostics for one (m_s, V_s).
struct ShellCellReport
{
    NodalReport nodal;
    double flux_fraction{0};
    bool feasible{false};
    std::vector<std::string> reasons;
};

/*!
 * Evaluate one shell candidate from the approximate shell coefficients.
 *
 * The stack must have two layers; the core medium is ignored. The flux
 * fraction is computed from the shell field alone, as if the scattered wave
 * were fully cancelled.
 */
ShellCellReport
evaluate_shell_cell(LayerStack const& stack, DesignTargets const& targets);

//! Stage-one sweep over shell mass and potential.
struct ShellStageInput
{
    LayerStack geometry;  //!< radii, background and energy
    SweepAxis shell_mass{"m_s", {}};
    SweepAxis shell_potential{"V_s", {}};
    DesignTargets targets;
    unsigned threads{0};
    std::string provenance;
};

/*!
 * Mark every (m_s, V_s) cell feasible or not.
 *
 * Extras per cell: nodal radius (NaN if none) and flux fraction. The
 * objective is |F - (1 - eps)|.
 */
SweepGrid feasible_shell_set(ShellStageInput const& input);

//! Stack with the given shell and core media and the geometry's radii
LayerStack with_media(LayerStack const& geometry,
                      Medium const& shell,
                      Medium const& core);

//---------------------------------------------------------------------------//
}  // namespace qcloak
