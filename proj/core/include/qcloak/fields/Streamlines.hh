//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/fields/Streamlines.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "FieldGrid.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
using PlanePoint = std::array<double, 2>;
using Polyline = std::vector<PlanePoint>;

struct StreamlineOptions
{
    double step_nm{0};  //!< zero: a quarter of the grid spacing
    int max_steps{100000};
    double min_flux{1e-12};
    unsigned threads{1};
};

/*!
 * Integrate dx/ds = J/|J| from each seed with fixed-step RK4.
 *
 * J is bilinearly interpolated from the grid. A line ends when it leaves
 * the grid, when |J| drops below \c min_flux, or after \c max_steps steps.
 * Seeds outside the grid or in a zero-flux cell give an empty polyline.
 */
std::vector<Polyline> trace_streamlines(FieldGrid const& grid,
                                        std::span<PlanePoint const> seeds,
                                        StreamlineOptions const& options = {});

// Evenly spaced seeds on the upstream edge of the grid
std::vector<PlanePoint> upstream_seeds(FieldGrid const& grid, int count);

// Same grid with the flux reversed
FieldGrid reversed_flux(FieldGrid grid);

nlohmann::json streamlines_to_json(std::vector<Polyline> const& lines,
                                   FieldGrid const& grid);

//---------------------------------------------------------------------------//
}  // namespace qcloak
