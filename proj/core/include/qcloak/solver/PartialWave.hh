//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/solver/PartialWave.hh
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <vector>

#include "qcloak/model/LayerStack.hh"
#include "qcloak/util/ScaledComplex.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
/*!
 * Radial coefficients of one partial wave inside one layer.
 *
 * The radial function is regular * j_l(k r) + outgoing * h_l^(1)(k r). In
 * the shell of a two-layer particle these are (b_l, c_l); in the innermost
 * region \c outgoing is identically zero and \c regular is d_l.
 */
struct RegionCoefficients
{
    ScaledComplex regular;
    ScaledComplex outgoing;
};

//---------------------------------------------------------------------------//
/*!
 * Solution of the matching problem for one angular momentum.
 *
 * Outside the particle the radial function is j_l(k0 r) + a_scat h_l(k0 r),
 * i.e. coefficients are normalized to the incident plane wave.
 */
struct PartialWaveSolution
{
    int l{0};
    std::complex<double> a_scat{};
    std::vector<RegionCoefficients> layer_coeffs;  // outermost first
};

//---------------------------------------------------------------------------//
//! Approximate shell coefficients (b_l, c_l) assuming no scattered wave.
struct ShellCoefficients
{
    std::complex<double> b{};
    std::complex<double> c{};

    //! Amplitude of the outgoing wave h^(1) in the shell
    std::complex<double> outgoing_amplitude() const { return b / 2.0 + c; }
    //! Amplitude of the incoming wave h^(2) in the shell
    std::complex<double> incoming_amplitude() const { return b / 2.0; }
};

//! How the closed-form shell denominator is evaluated.
enum class DenominatorForm
{
    direct,     //!< from j, h and their derivatives
    wronskian,  //!< simplified with j h' - j' h = i / x^2
};

// Closed-form shell coefficients for the incident wave alone
ShellCoefficients
shell_coefficients_approx(int l,
                          LayerStack const& stack,
                          DenominatorForm form = DenominatorForm::wronskian);

// Exact shell coefficients taken from a full solution
ShellCoefficients shell_coefficients(PartialWaveSolution const& solution);

//---------------------------------------------------------------------------//
// Full 4x4 boundary-matching system for exactly two layers
PartialWaveSolution solve_two_layer(LayerStack const& stack, int l);

// Log-scaled transfer propagation for any number of layers
PartialWaveSolution solve_n_layer(LayerStack const& stack, int l);

// Closed-form two-layer scattering coefficient (independent check path)
std::complex<double>
scattering_coefficient_closed_form(LayerStack const& stack, int l);

// Two-layer system for two layers, transfer propagation otherwise
PartialWaveSolution solve_partial_wave(LayerStack const& stack, int l);

//---------------------------------------------------------------------------//
//! Condition number above which the matching system is rejected.
inline constexpr double max_condition_number = 1e12;

//---------------------------------------------------------------------------//
}  // namespace qcloak
