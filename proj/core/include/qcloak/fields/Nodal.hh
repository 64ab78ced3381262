//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/fields/Nodal.hh
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "qcloak/model/LayerStack.hh"
#include "qcloak/solver/PartialWave.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
/*!
 * Shell channel function
 * f_l(r, theta) = i^l (2l+1) [b_l j_l(k_s r) + c_l h_l(k_s r)] P_l(cos theta).
 *
 * The shell medium is the outermost layer; r may lie anywhere, so the shell
 * solution can be continued into the core.
 */
std::complex<double> channel_function(int l,
                                      LayerStack const& stack,
                                      ShellCoefficients const& shell,
                                      double r,
                                      double theta);

// Radial factor b_l j_l(k_s r) + c_l h_l(k_s r) of the channel function
std::complex<double> shell_radial_function(int l,
                                           LayerStack const& stack,
                                           ShellCoefficients const& shell,
                                           double r);

//---------------------------------------------------------------------------//
//! Fraction of a_c within which the l = 0 and l = 1 zeros count as common.
inline constexpr double default_common_node_tolerance = 0.02;

struct NodalReport
{
    //! First zero of each channel scanning inward from a_c; index = l
    std::vector<std::optional<double>> r_n;
    std::optional<double> common_nodal_radius;
    double residual_spread{0};
    double tolerance{0};  //!< absolute tolerance used for "common", nm
};

/*!
 * Locate the nodes of the shell channels continued into the core.
 *
 * For real parameters each shell channel is a standing wave, i.e. a constant
 * phase times a real function; the phase is removed and sign changes are
 * bracketed on (0.2 a_c, a_c] scanning inward from a_c, then bisected.
 * \c shell holds coefficients for l = 0, 1, ... (at least two).
 */
NodalReport
find_nodal_point(LayerStack const& stack,
                 std::span<ShellCoefficients const> shell,
                 double common_fraction = default_common_node_tolerance);

//---------------------------------------------------------------------------//
}  // namespace qcloak
