//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file solver/ShellApprox.cc
//---------------------------------------------------------------------------//
#include "RadialBasis.hh"
#include "qcloak/solver/PartialWave.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
/*!
 * Shell coefficients when the outside field is the incident wave only.
 *
 * With x1 = k0 a, y1 = m0 a, x2 = ks a, y2 = ms a:
 *   b = [x2 y1 j(x1) h'(x2) - x1 y2 h(x2) j'(x1)] / den
 *   c = [x1 y2 j(x2) j'(x1) - x2 y1 j(x1) j'(x2)] / den
 *   den = x2 y1 [j(x2) h'(x2) - h(x2) j'(x2)] = i y1 / x2
 */
ShellCoefficients
shell_coefficients_approx(int l, LayerStack const& stack, DenominatorForm form)
{
    if (stack.layers.empty())
        throw DomainError("shell coefficients need at least one layer");

    double const a = stack.particle_radius();
    Medium const& outside = stack.background;
    Medium const& shell = stack.layers.front().medium;
    complex_type const k0 = wavenumber(stack.energy_eV, outside);
    complex_type const ks = wavenumber(stack.energy_eV, shell);
    detail::require_nonzero(ks, "shell");
    detail::require_nonzero(k0, "background");

    complex_type const x1 = k0 * a;
    complex_type const x2 = ks * a;
    double const y1 = outside.mass_me * a;
    double const y2 = shell.mass_me * a;

    auto const out = sph_bessel_j(l, x1);
    auto const jin = sph_bessel_j(l, x2);
    auto const hin = sph_hankel1(l, x2);

    complex_type const j1 = out.unscaled_value();
    complex_type const dj1 = out.unscaled_derivative();

    // Shell functions enter as products j(x2)*h(x2), which are scale free.
    double const cross = jin.log_scale + hin.log_scale;
    complex_type b_num = x2 * y1 * j1 * hin.derivative
                             * std::exp(hin.log_scale)
                         - x1 * y2 * hin.value * std::exp(hin.log_scale) * dj1;
    complex_type c_num = x1 * y2 * jin.value * std::exp(jin.log_scale) * dj1
                         - x2 * y1 * j1 * jin.derivative
                               * std::exp(jin.log_scale);

    complex_type den;
    if (form == DenominatorForm::direct)
    {
        den = x2 * y1
              * (jin.value * hin.derivative - hin.value * jin.derivative)
              * std::exp(cross);
    }
    else
    {
        den = complex_type{0, 1} * y1 / x2;
    }
    return {b_num / den, c_num / den};
}

//---------------------------------------------------------------------------//
ShellCoefficients shell_coefficients(PartialWaveSolution const& solution)
{
    if (solution.layer_coeffs.empty())
        throw DomainError("solution has no layers");
    auto const& shell = solution.layer_coeffs.front();
    return {shell.regular.value(), shell.outgoing.value()};
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
