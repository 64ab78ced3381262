//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fields/FieldEvaluator.cc
//---------------------------------------------------------------------------//
#include "qcloak/fields/FieldEvaluator.hh"

#include <algorithm>
#include <cmath>

#include "qcloak/Error.hh"
#include "qcloak/specfun/Legendre.hh"
#include "qcloak/specfun/SphericalBessel.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
FieldEvaluator::FieldEvaluator(ScatteringSolution solution)
    : solution_(std::move(solution))
{
    if (solution_.waves.empty())
        throw DomainError("field evaluation needs at least one partial wave");
    k0_ = solution_.k.front().real();
}

//---------------------------------------------------------------------------//
FieldPoint FieldEvaluator::evaluate(double r, double theta) const
{
    if (!(r >= 0))
        throw DomainError("field evaluated at negative radius");

    auto const& stack = solution_.stack;
    int const lmax = solution_.lmax();
    FieldPoint out;
    out.region = stack.region_of(r);
    complex_type const k = solution_.k[out.region];

    if (r == 0)
    {
        // innermost region; Psi = d_0, grad Psi = i k d_1 z-hat
        auto const& w0 = solution_.waves[0].layer_coeffs.back();
        out.psi = w0.regular.value();
        if (lmax >= 1)
        {
            auto const& w1 = solution_.waves[1].layer_coeffs.back();
            out.dpsi_dr = complex_type{0, 1} * k * w1.regular.value();
        }
        return out;
    }

    double const x = std::cos(theta);
    auto const p = legendre_p_all(lmax, std::clamp(x, -1.0, 1.0));
    auto const dp = legendre_dtheta_all(lmax, theta);
    complex_type const kr = k * r;
    auto const jf = sph_bessel_j_all(lmax, kr);
    bool const innermost = out.region == stack.num_regions() - 1;
    std::vector<SphericalBasisEval> hf;
    if (!innermost)
        hf = sph_hankel1_all(lmax, kr);

    complex_type il{1, 0};
    for (int l = 0; l <= lmax; ++l, il *= complex_type{0, 1})
    {
        auto const& wave = solution_.waves[l];
        complex_type radial;
        complex_type dradial;  // d/dx
        if (out.region == 0)
        {
            radial = jf[l].unscaled_value()
                     + wave.a_scat * hf[l].unscaled_value();
            dradial = jf[l].unscaled_derivative()
                      + wave.a_scat * hf[l].unscaled_derivative();
        }
        else
        {
            auto const& c = wave.layer_coeffs[out.region - 1];
            radial = c.regular.times(jf[l].value, jf[l].log_scale);
            dradial = c.regular.times(jf[l].derivative, jf[l].log_scale);
            if (!innermost)
            {
                radial += c.outgoing.times(hf[l].value, hf[l].log_scale);
                dradial += c.outgoing.times(hf[l].derivative, hf[l].log_scale);
            }
        }
        complex_type const g = il * static_cast<double>(2 * l + 1);
        out.psi += g * radial * p[l];
        out.dpsi_dr += g * k * dradial * p[l];
        out.dpsi_dtheta += g * radial * dp[l];
    }
    return out;
}

//---------------------------------------------------------------------------//
FluxVector FieldEvaluator::flux(double r, double theta) const
{
    auto const pt = this->evaluate(r, theta);
    double const mass = solution_.stack.region_medium(pt.region).mass_me;
    double const m0 = solution_.stack.background.mass_me;
    double const c = m0 / (mass * k0_);
    FluxVector f;
    f.radial = c * std::imag(std::conj(pt.psi) * pt.dpsi_dr);
    if (r > 0)
        f.polar = c * std::imag(std::conj(pt.psi) * pt.dpsi_dtheta) / r;
    return f;
}

double FieldEvaluator::flux_z(double r, double theta) const
{
    auto const f = this->flux(r, theta);
    if (r == 0)
        return f.radial;
    return f.radial * std::cos(theta) - f.polar * std::sin(theta);
}

//---------------------------------------------------------------------------//
complex_type
wavefunction(ScatteringSolution const& solution, double r, double theta)
{
    return FieldEvaluator(solution).psi(r, theta);
}

FluxVector flux(ScatteringSolution const& solution, double r, double theta)
{
    return FieldEvaluator(solution).flux(r, theta);
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
