//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/designer/CoreStage.hh
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ShellStage.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
//! Coarse grid and refinement settings for the core search.
struct CoreSearch
{
    SweepAxis core_mass{"m_c", {}};
    SweepAxis core_potential{"V_c", {}};
    int refine_starts{3};          //!< best coarse cells refined
    double parameter_tolerance{1e-6};
    int max_iterations{4000};
};

/*!
 * A fully checked two-layer design.
 *
 * All diagnostics come from the exact solution of the final stack.
 */
struct DesignPoint
{
    Medium shell;
    Medium core;
    double objective{0};  //!< max(|a_0|, |a_1|)
    std::optional<double> nodal_radius;
    double flux_fraction{0};
    double sigma_normalized{0};
    std::vector<double> abs_a;  //!< |a_l| for the orders summed
    double max_tail_term{0};    //!< largest (2l+1)|a_l|^2, l >= 2
    bool feasible{false};
    std::vector<std::string> reasons;
};

/*!
 * Find core parameters that cancel the s and p scattering for a fixed shell.
 *
 * The coarse grid is scanned for the smallest max(|a_0|, |a_1|); the best
 * cells seed a Nelder-Mead search clamped to the grid's bounding box. The
 * best result is then checked with the exact solver.
 */
DesignPoint match_core_parameters(LayerStack const& geometry,
                                  Medium const& shell,
                                  CoreSearch const& search,
                                  DesignTargets const& targets,
                                  unsigned threads = 0);

//! Run the exact checks on a fixed design
DesignPoint check_design(LayerStack const& stack, DesignTargets const& targets);

nlohmann::json design_point_to_json(DesignPoint const& point);

//---------------------------------------------------------------------------//
}  // namespace qcloak
